#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minklen/polytope.hpp"
#include "minklen/zonotope.hpp"

namespace minklen {

/// How a table value was obtained. `Bound` means a witness already met the
/// upper bound floor(t lambda), so no search ran.
enum class DilateSource { Fastpath, Search, Bound };
std::string to_string(DilateSource s);

struct DilateEntry {
  Integer t = 0;
  Integer value = 0;
  Zonotope witness;
  std::string digest;  // FNV-1a of the witness text, 16 hex digits
  DilateSource source = DilateSource::Search;
};

struct DilateTable {
  std::size_t n = 0;
  std::vector<DilateEntry> entries;  // t = 1, 2, ...
  bool truncated = false;
  std::string truncation_note;
};

struct DilateOptions {
  std::size_t n = 0;  // 0 means the ambient dimension
  /// lambda_n(P), used for the bound floor(t lambda).
  std::optional<Rational> lambda;
  /// A period k with a lattice zonotope in kP attaining k lambda.
  std::optional<Integer> period;
  std::optional<Zonotope> period_witness;
  std::size_t cap_lattice_points = 20000;
};

std::string witness_digest(const Zonotope& z);

/// L_n(tP) for t = 1..t_max. Values are seeded from sums of earlier
/// witnesses and capped by floor(t lambda) when lambda is known. A resource
/// cap hit at some t ends the table there with `truncated` set.
DilateTable dilate_table(const LatticePolytope& p, Integer t_max, const DilateOptions& options = {});

enum class Stability { ProvenStable, EmpiricallyStable, Unsettled };
std::string to_string(Stability s);

/// f(t) = k lambda floor(t/k) + c_{t mod k}.
struct QuasiLinearFunction {
  Integer period = 1;
  Rational slope;
  std::vector<Integer> constants;
  Integer stabilization = 1;  // t_0
  std::vector<Stability> residue_status;
  Stability status = Stability::ProvenStable;
  /// True when f(t) equals the table at every tabled t >= 1.
  bool matches_from_start = false;
  Integer horizon = 0;
};

Integer evaluate(const QuasiLinearFunction& f, Integer t);

/// Fits the eventual form to a table whose slope and period are known.
/// Throws std::invalid_argument when the table is shorter than 2k.
QuasiLinearFunction fit_quasilinear(const DilateTable& table, const Rational& lambda,
                                    Integer period);

struct QuasiLinearFit {
  DilateTable table;
  std::optional<QuasiLinearFunction> function;  // empty without a period
  std::string note;
};

/// Certified lambda_n and period, then a table up to the horizon (default
/// max(4k, 12)) and the fit. Throws std::invalid_argument when
/// 0 < horizon < 2k.
QuasiLinearFit fit_quasilinear(const LatticePolytope& p, Integer horizon = 0, std::size_t n = 0,
                              std::size_t cap_lattice_points = 20000);

}  // namespace minklen
