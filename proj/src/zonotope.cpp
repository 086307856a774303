#include "minklen/zonotope.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace minklen {

Zonotope::Zonotope(RationalPoint anchor) : anchor_(std::move(anchor)) {}

Zonotope::Zonotope(RationalPoint anchor, std::vector<ZonotopeTerm> terms)
    : anchor_(std::move(anchor)) {
  std::map<PrimitiveVector, Rational> merged;
  for (auto& t : terms) {
    if (t.direction.dim() != anchor_.size()) {
      throw std::invalid_argument("zonotope term dimension mismatch");
    }
    if (t.weight < 0) throw std::invalid_argument("zonotope weights must be nonnegative");
    merged[t.direction] += t.weight;
  }
  for (auto& [dir, w] : merged) {
    if (w != 0) terms_.push_back({dir, w});
  }
}

Rational Zonotope::length() const {
  Rational total = 0;
  for (const auto& t : terms_) total += t.weight;
  return total;
}

bool Zonotope::is_lattice() const {
  if (!is_integral(anchor_)) return false;
  return std::all_of(terms_.begin(), terms_.end(), [](const ZonotopeTerm& t) {
    return denominator(t.weight) == 1;
  });
}

std::size_t Zonotope::span_dim() const {
  std::vector<LatticePoint> dirs;
  for (const auto& t : terms_) dirs.push_back(t.direction.coords());
  return rank(dirs);
}

std::vector<PrimitiveVector> Zonotope::directions() const {
  std::vector<PrimitiveVector> out;
  for (const auto& t : terms_) out.push_back(t.direction);
  return out;
}

std::vector<RationalPoint> Zonotope::vertices() const {
  std::vector<RationalPoint> pts{anchor_};
  for (const auto& t : terms_) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      RationalPoint q = pts[i];
      for (std::size_t j = 0; j < q.size(); ++j) q[j] += t.weight * t.direction[j];
      pts.push_back(std::move(q));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Zonotope Zonotope::translated(const RationalPoint& shift) const {
  if (shift.size() != dim()) throw std::invalid_argument("translation dimension mismatch");
  Zonotope out = *this;
  for (std::size_t i = 0; i < shift.size(); ++i) out.anchor_[i] += shift[i];
  return out;
}

Zonotope Zonotope::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  Zonotope out = *this;
  for (auto& x : out.anchor_) x *= factor;
  for (auto& t : out.terms_) t.weight *= factor;
  return out;
}

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("zonotope dimension mismatch");
  RationalPoint anchor = a.anchor();
  for (std::size_t i = 0; i < anchor.size(); ++i) anchor[i] += b.anchor()[i];
  std::vector<ZonotopeTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Zonotope(std::move(anchor), std::move(terms));
}

bool contains(const LatticePolytope& p, const Zonotope& z) {
  if (z.dim() != p.ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  if (!p.has_halfspaces()) {
    for (const auto& v : z.vertices()) {
      if (!contains(p, v)) return false;
    }
    return true;
  }
  for (const auto& h : p.halfspaces()) {
    Rational support = 0;
    for (std::size_t i = 0; i < z.dim(); ++i) support += h.normal[i] * z.anchor()[i];
    for (const auto& t : z.terms()) {
      Integer s = dot(h.normal, t.direction.coords());
      if (s > 0) support += t.weight * s;
    }
    if (support > h.offset) return false;
  }
  return true;
}

Zonotope lift(const SpanReduction& reduction, const Zonotope& reduced) {
  RationalPoint anchor = reduction.from_reduced(reduced.anchor());
  std::vector<ZonotopeTerm> terms;
  const std::size_t d = reduction.origin.size();
  for (const auto& t : reduced.terms()) {
    LatticePoint full(d, 0);
    std::copy(t.direction.coords().begin(), t.direction.coords().end(), full.begin());
    LatticePoint w = transform(reduction.basis.inverse, full);
    if (canonical_sign(w) != w) {
      // weight [0, w] = weight * w + weight [0, -w]
      for (std::size_t i = 0; i < d; ++i) anchor[i] += t.weight * w[i];
      w = canonical_sign(w);
    }
    terms.push_back({PrimitiveVector(w), t.weight});
  }
  return Zonotope(std::move(anchor), std::move(terms));
}

Zonotope lattice_zonotope(const LatticePoint& anchor,
                          const std::vector<std::pair<PrimitiveVector, Integer>>& terms) {
  std::vector<ZonotopeTerm> ts;
  for (const auto& [dir, w] : terms) ts.push_back({dir, Rational(w)});
  return Zonotope(to_rational(anchor), std::move(ts));
}

std::string to_string(const Zonotope& z) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < z.dim(); ++i) os << (i ? "," : "") << to_string(z.anchor()[i]);
  os << ')';
  for (const auto& t : z.terms()) {
    os << " + " << to_string(t.weight) << '[' << to_string(t.direction.coords()) << ']';
  }
  return os.str();
}

}  // namespace minklen
