"""Minkowski-length invariants of lattice polytopes.

Polytopes are passed as lists of integer vertices. Reports come back as
dicts whose rationals are exact "p/q" strings; `fraction` converts one.
"""

import json
from fractions import Fraction

from . import _minklen
from ._minklen import ResourceCapExceeded, lattice_diameter, minkowski_length

__all__ = [
    "ResourceCapExceeded",
    "fraction",
    "invariants",
    "lattice_diameter",
    "minkowski_length",
    "rational_length",
    "search",
    "table",
    "verify_paper",
]


def fraction(text):
    return Fraction(text)


def rational_length(vertices, n=0):
    """Returns (lambda_n as a Fraction, certified flag)."""
    value, certified = _minklen.rational_length(vertices, n)
    return Fraction(value), certified


def invariants(vertices, n=0, with_period=True, cap_lattice_points=20000):
    return json.loads(_minklen.invariants(vertices, n, with_period, cap_lattice_points))


def table(vertices, t_max=12, n=0, cap_lattice_points=20000):
    return json.loads(_minklen.table(vertices, t_max, n, cap_lattice_points))


def verify_paper(threads=1):
    return json.loads(_minklen.verify_paper(threads))


def search(problem, seed=1, budget=20, box=6, dim=3, threads=1):
    return json.loads(_minklen.search(problem, seed, budget, box, dim, threads))
