#include "minklen/length.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "minklen/ilp.hpp"
#include "minklen/lp.hpp"

namespace minklen {

std::string to_string(LengthMethod m) {
  switch (m) {
    case LengthMethod::Fastpath:
      return "fastpath";
    case LengthMethod::Search:
      return "search";
    case LengthMethod::Oracle:
      return "oracle";
  }
  return "unknown";
}

namespace {

using PointIndex = std::unordered_map<LatticePoint, std::size_t, LatticePointHash>;

PointIndex index_points(const std::vector<LatticePoint>& pts) {
  PointIndex idx;
  idx.reserve(pts.size() * 2);
  for (std::size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i], i);
  return idx;
}

SegmentCatalog catalog_from_points(const std::vector<LatticePoint>& pts) {
  std::set<PrimitiveVector> dirs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      dirs.insert(primitivize(sub(pts[j], pts[i])).direction);
    }
  }
  const PointIndex idx = index_points(pts);
  SegmentCatalog out;
  for (const auto& v : dirs) {
    Integer best = 0;
    for (const auto& a : pts) {
      if (idx.count(sub(a, v.coords()))) continue;  // not the start of a run
      Integer run = 0;
      LatticePoint x = add(a, v.coords());
      while (idx.count(x)) {
        ++run;
        x = add(x, v.coords());
      }
      best = std::max(best, run);
    }
    out.push_back({v, best});
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.max_len > b.max_len;
  });
  return out;
}

// anchor + weight [0, raw] with raw primitive, in normal form.
void push_segment(RationalPoint& anchor, std::vector<ZonotopeTerm>& terms,
                  const LatticePoint& raw, const Rational& weight) {
  if (canonical_sign(raw) != raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) anchor[i] += weight * raw[i];
  }
  terms.push_back({PrimitiveVector(canonical_sign(raw)), weight});
}

struct Fit {
  Integer value = 0;
  Zonotope zonotope;
};

// max sum(alpha) over lattice zonotopes a + sum alpha_i [0, v_i] inside q
// (full-dimensional, facet description available), alpha_i in [1, caps_i].
std::optional<Fit> best_fit(const LatticePolytope& q, const std::vector<PrimitiveVector>& dirs,
                            const std::vector<Integer>& caps,
                            std::optional<Integer> must_exceed) {
  const std::size_t k = q.ambient_dim();
  const std::size_t m = dirs.size();
  lp::LinearProgram prog(k + m);
  for (std::size_t j = 0; j < k; ++j) prog.set_free(j);
  for (const auto& h : q.halfspaces()) {
    std::vector<Rational> row(k + m);
    for (std::size_t j = 0; j < k; ++j) row[j] = h.normal[j];
    for (std::size_t i = 0; i < m; ++i) {
      Integer s = dot(h.normal, dirs[i].coords());
      if (s > 0) row[k + i] = s;
    }
    prog.add_constraint(std::move(row), lp::Relation::LessEqual, h.offset);
  }
  std::vector<Rational> obj(k + m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(k + m);
    row[k + i] = 1;
    prog.add_constraint(row, lp::Relation::GreaterEqual, 1);
    prog.add_constraint(row, lp::Relation::LessEqual, caps[i]);
    obj[k + i] = 1;
  }
  prog.set_objective(obj, lp::Sense::Maximize);
  std::vector<std::size_t> ints(k + m);
  for (std::size_t j = 0; j < k + m; ++j) ints[j] = j;
  auto sol = ilp::maximize(prog, ints, must_exceed);
  if (!sol) return std::nullopt;
  RationalPoint anchor(sol->point.begin(), sol->point.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<ZonotopeTerm> terms;
  for (std::size_t i = 0; i < m; ++i) terms.push_back({dirs[i], sol->point[k + i]});
  return Fit{numerator_int(sol->value), Zonotope(std::move(anchor), std::move(terms))};
}

// Polytope in coordinates of its own span, with the map back.
struct Spanned {
  std::optional<SpanReduction> reduction;
  const LatticePolytope* full = nullptr;

  const LatticePolytope& poly() const { return reduction ? reduction->reduced : *full; }
  Zonotope lift_back(const Zonotope& z) const { return reduction ? lift(*reduction, z) : z; }
};

Spanned spanned(const LatticePolytope& p) {
  Spanned s;
  if (p.span_dim() < p.ambient_dim() && p.span_dim() > 0) s.reduction = reduce_to_span(p);
  s.full = &p;
  return s;
}

Integer simplex_bound(const LatticePolytope& q) {
  const std::size_t k = q.ambient_dim();
  Integer best = -1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LatticePoint sigma(k);
    for (std::size_t i = 0; i < k; ++i) sigma[i] = (mask >> i & 1) ? -1 : 1;
    Integer top = dot(sigma, q.vertices().front());
    LatticePoint low(k);
    for (std::size_t i = 0; i < k; ++i) low[i] = sigma[i] * q.vertices().front()[i];
    for (const auto& v : q.vertices()) {
      top = std::max(top, dot(sigma, v));
      for (std::size_t i = 0; i < k; ++i) low[i] = std::min(low[i], sigma[i] * v[i]);
    }
    Integer alpha = top;
    for (Integer x : low) alpha -= x;
    if (best < 0 || alpha < best) best = alpha;
  }
  return best;
}

Integer det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Normalized area of the parallelogram on two vectors of Z^3.
Integer pair_area3(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  return std::gcd(std::gcd(std::abs(c[0]), std::abs(c[1])), std::abs(c[2]));
}

class Search {
 public:
  Search(const LatticePolytope& q, std::size_t n, Integer lower, Zonotope lower_witness,
         Integer upper, std::size_t cap)
      : q_(q), n_(n), k_(q.ambient_dim()), best_(lower), best_z_(std::move(lower_witness)),
        ub_(upper) {
    pts_ = lattice_points(q);
    if (pts_.size() > cap) {
      throw ResourceCapExceeded("lattice point cap exceeded (" + std::to_string(pts_.size()) +
                                " points)");
    }
    idx_ = index_points(pts_);
    cat_ = catalog_from_points(pts_);
    max_terms_ = (std::size_t{1} << k_) - 1;
  }

  void run() {
    if (!cat_.empty() && cat_.front().max_len > best_) {
      best_ = cat_.front().max_len;
      best_z_ = single_segment(cat_.front());
    }
    std::vector<std::size_t> all(pts_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    dfs(0, all, 0);
  }

  Integer best() const { return best_; }
  const Zonotope& witness() const { return best_z_; }

 private:
  Zonotope single_segment(const CatalogEntry& e) const {
    const PointIndex& idx = idx_;
    for (const auto& a : pts_) {
      LatticePoint end = add(a, scale(e.direction.coords(), e.max_len));
      if (idx.count(end)) {
        return Zonotope(to_rational(a), {{e.direction, Rational(e.max_len)}});
      }
    }
    throw std::logic_error("catalog entry without a realizing segment");
  }

  bool volume_ok(const LatticePoint& v) const {
    if (k_ == 2) {
      for (std::size_t i : chosen_) {
        const auto& s = cat_[i].direction.coords();
        if (std::abs(v[0] * s[1] - v[1] * s[0]) > 4) return false;
      }
    } else if (k_ == 3) {
      for (std::size_t a = 0; a < chosen_.size(); ++a) {
        for (std::size_t b = a + 1; b < chosen_.size(); ++b) {
          if (std::abs(det3(v, cat_[chosen_[a]].direction.coords(),
                            cat_[chosen_[b]].direction.coords())) > 27) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // A rank-two set in space can only be a final answer if its pairs obey the
  // planar bound.
  bool final_ok(std::size_t rank_now) const {
    if (k_ != 3 || rank_now != 2) return true;
    for (std::size_t a = 0; a < chosen_.size(); ++a) {
      for (std::size_t b = a + 1; b < chosen_.size(); ++b) {
        if (pair_area3(cat_[chosen_[a]].direction.coords(),
                       cat_[chosen_[b]].direction.coords()) > 8) {
          return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t start, const std::vector<std::size_t>& anchors, Integer sum_len) {
    for (std::size_t i = start; i < cat_.size(); ++i) {
      if (best_ >= ub_) return;
      const Integer len = cat_[i].max_len;
      const Integer slots = static_cast<Integer>(max_terms_ - chosen_.size());
      if (sum_len + slots * len <= best_) return;
      const LatticePoint& v = cat_[i].direction.coords();

      std::vector<LatticePoint> dirs;
      for (std::size_t j : chosen_) dirs.push_back(cat_[j].direction.coords());
      dirs.push_back(v);
      const std::size_t r = rank(dirs);
      if (r > n_) continue;
      if (!volume_ok(v)) continue;

      std::vector<char> member(pts_.size(), 0);
      for (std::size_t a : anchors) member[a] = 1;
      std::vector<std::size_t> next;
      for (std::size_t a : anchors) {
        auto it = idx_.find(add(pts_[a], v));
        if (it != idx_.end() && member[it->second]) next.push_back(a);
      }
      if (next.empty()) continue;

      chosen_.push_back(i);
      if (chosen_.size() > 1 && final_ok(r)) evaluate();
      if (chosen_.size() < max_terms_) dfs(i + 1, next, sum_len + len);
      chosen_.pop_back();
    }
  }

  void evaluate() {
    Integer total = 0;
    for (std::size_t j : chosen_) total += cat_[j].max_len;
    if (total <= best_) return;
    std::vector<PrimitiveVector> dirs;
    std::vector<Integer> caps;
    for (std::size_t j : chosen_) {
      dirs.push_back(cat_[j].direction);
      caps.push_back(cat_[j].max_len);
    }
    auto fit = best_fit(q_, dirs, caps, best_);
    if (fit && fit->value > best_) {
      best_ = fit->value;
      best_z_ = fit->zonotope;
    }
  }

  const LatticePolytope& q_;
  std::size_t n_, k_;
  Integer best_;
  Zonotope best_z_;
  Integer ub_;
  std::vector<LatticePoint> pts_;
  PointIndex idx_;
  SegmentCatalog cat_;
  std::size_t max_terms_ = 1;
  std::vector<std::size_t> chosen_;
};

std::optional<FastpathResult> normal_form_fastpath(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  if (d < 2 || p.span_dim() != d) return std::nullopt;
  auto unit = [&](std::size_t i, Integer c = 1) {
    LatticePoint e(d, 0);
    e[i] = c;
    return e;
  };
  // Iterated pyramid over 2 Delta_2.
  if (d >= 3) {
    std::vector<LatticePoint> pts{LatticePoint(d, 0), unit(0, 2), unit(1, 2)};
    for (std::size_t i = 2; i < d; ++i) pts.push_back(unit(i));
    if (LatticePolytope(pts) == p) {
      return FastpathResult{2, "pyramid over 2*Delta_2",
                            lattice_zonotope(LatticePoint(d, 0), {{PrimitiveVector(unit(0)), 2}})};
    }
  }
  // Iterated pyramid over a Lawrence prism with heights h_1 <= ... <= h_n.
  std::set<LatticePoint> verts(p.vertices().begin(), p.vertices().end());
  for (std::size_t n = 2; n <= d; ++n) {
    std::vector<Integer> h(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) {
      ok = false;
      for (const auto& v : p.vertices()) {
        LatticePoint rest = v;
        if (rest[i] != 1 || rest[n - 1] <= 0) continue;
        Integer height = rest[n - 1];
        rest[i] = 0;
        rest[n - 1] = 0;
        if (rest == LatticePoint(d, 0)) {
          h[i] = height;
          ok = true;
        }
      }
    }
    if (!ok) continue;
    for (const auto& v : p.vertices()) {
      if (v[n - 1] > 0 && v == unit(n - 1, v[n - 1])) h[n - 1] = v[n - 1];
    }
    if (h[n - 1] == 0 || !std::is_sorted(h.begin(), h.end())) continue;
    std::vector<LatticePoint> pts{LatticePoint(d, 0), unit(n - 1, h[n - 1])};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      pts.push_back(unit(i));
      LatticePoint top = unit(i);
      top[n - 1] = h[i];
      pts.push_back(top);
    }
    for (std::size_t i = n; i < d; ++i) pts.push_back(unit(i));
    if (!(LatticePolytope(pts) == p)) continue;
    const Integer hn = h[n - 1];
    if (h[n - 2] < hn) {
      return FastpathResult{hn, "Lawrence prism (h_{n-1} < h_n)",
                            lattice_zonotope(LatticePoint(d, 0), {{PrimitiveVector(unit(n - 1)), hn}})};
    }
    return FastpathResult{hn + 1, "Lawrence prism (h_{n-1} = h_n)",
                          lattice_zonotope(LatticePoint(d, 0), {{PrimitiveVector(unit(n - 2)), 1},
                                                                {PrimitiveVector(unit(n - 1)), hn}})};
  }
  return std::nullopt;
}

std::optional<FastpathResult> reduced_fastpath(const LatticePolytope& q) {
  const std::size_t k = q.ambient_dim();
  const auto& verts = q.vertices();
  const LatticePoint& v0 = verts.front();

  if (verts.size() == k + 1) {
    std::vector<LatticePoint> edges;
    Integer g = 0;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      edges.push_back(sub(verts[i], v0));
      for (Integer x : edges.back()) g = std::gcd(g, std::abs(x));
    }
    IntMatrix scaled = edges;
    for (auto& row : scaled) {
      for (auto& x : row) x /= g;
    }
    if (std::abs(determinant(scaled)) == 1) {
      RationalPoint anchor = to_rational(v0);
      std::vector<ZonotopeTerm> terms;
      push_segment(anchor, terms, scaled.front(), g);
      return FastpathResult{g, k == 1 ? "segment" : "dilated unimodular simplex",
                            Zonotope(anchor, terms)};
    }
  }

  if (k >= 2 && verts.size() == (std::size_t{1} << k)) {
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < verts.size(); ++i) diffs.push_back(sub(verts[i], v0));
    std::vector<std::size_t> pick(k);
    std::function<std::optional<FastpathResult>(std::size_t, std::size_t)> choose =
        [&](std::size_t depth, std::size_t from) -> std::optional<FastpathResult> {
      if (depth == k) {
        std::vector<LatticePoint> gens;
        for (std::size_t i : pick) gens.push_back(diffs[i]);
        if (determinant(gens) == 0) return std::nullopt;
        std::set<LatticePoint> corners;
        for (std::size_t mask = 0; mask < verts.size(); ++mask) {
          LatticePoint x = v0;
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) x = add(x, gens[i]);
          }
          corners.insert(x);
        }
        if (!std::equal(corners.begin(), corners.end(), verts.begin(), verts.end())) {
          return std::nullopt;
        }
        IntMatrix units;
        Integer total = 0;
        RationalPoint anchor = to_rational(v0);
        std::vector<ZonotopeTerm> terms;
        for (const auto& w : gens) {
          Integer g = 0;
          for (Integer x : w) g = std::gcd(g, std::abs(x));
          units.push_back(scale(w, 1));
          for (auto& x : units.back()) x /= g;
          push_segment(anchor, terms, units.back(), g);
          total += g;
        }
        if (std::abs(determinant(units)) != 1) return std::nullopt;
        return FastpathResult{total, "unimodular parallelepiped", Zonotope(anchor, terms)};
      }
      for (std::size_t i = from; i < diffs.size(); ++i) {
        pick[depth] = i;
        if (auto r = choose(depth + 1, i + 1)) return r;
      }
      return std::nullopt;
    };
    if (auto r = choose(0, 0)) return r;
  }

  if (k == 2 && verts.size() == 3) {
    LatticeWidth w = lattice_width(q);
    const Integer len = floor_to_integer(2 * normalized_volume(q) / w.width);
    PrimitiveVector v({-w.direction[1], w.direction[0]});
    auto fit = best_fit(q, {v}, {len}, len - 1);
    if (!fit) throw std::logic_error("triangle chord shorter than floor(2 Vol / w)");
    return FastpathResult{len, "lattice triangle", fit->zonotope};
  }
  return std::nullopt;
}

}  // namespace

SegmentCatalog fitting_segments(const LatticePolytope& p) {
  return catalog_from_points(lattice_points(p));
}

Integer lattice_diameter(const LatticePolytope& p) {
  auto cat = fitting_segments(p);
  return cat.empty() ? 0 : cat.front().max_len;
}

Integer length_upper_bound(const LatticePolytope& p) {
  if (p.span_dim() == 0) return 0;
  Spanned s = spanned(p);
  const LatticePolytope& q = s.poly();
  if (q.ambient_dim() > 3) return simplex_bound(q);
  Integer bound = simplex_bound(q);
  if (q.ambient_dim() == 2) {
    bound = std::min(bound,
                     floor_to_integer(2 * normalized_volume(q) / lattice_width(q).width));
  }
  return bound;
}

std::optional<FastpathResult> length_fastpath(const LatticePolytope& p) {
  if (p.span_dim() == 0) {
    return FastpathResult{0, "point", Zonotope(to_rational(p.vertices().front()))};
  }
  if (auto r = normal_form_fastpath(p)) return r;
  Spanned s = spanned(p);
  if (s.poly().ambient_dim() > 3) return std::nullopt;
  if (auto r = reduced_fastpath(s.poly())) {
    r->witness = s.lift_back(r->witness);
    return r;
  }
  return std::nullopt;
}

LengthResult minkowski_length(const LatticePolytope& p, std::size_t n,
                              const LengthOptions& options) {
  const std::size_t d = p.ambient_dim();
  if (n < 1 || n > d) throw std::invalid_argument("length index n must lie in 1..d");
  const std::size_t k = p.span_dim();
  if (k == 0) {
    return {0, Zonotope(to_rational(p.vertices().front())), LengthMethod::Fastpath, "point"};
  }
  const std::size_t n_eff = std::min(n, k);

  if (options.use_fastpath) {
    if (auto fp = length_fastpath(p)) {
      // Simplices, segments, triangles and 2 Delta_2 pyramids hold a longest
      // segment of full length, so the value is the same for every n.
      const bool uniform = fp->reason == "segment" || fp->reason == "dilated unimodular simplex" ||
                           fp->reason == "lattice triangle" || fp->reason == "pyramid over 2*Delta_2";
      if (n_eff == k || uniform) {
        return {fp->length, fp->witness, LengthMethod::Fastpath, fp->reason};
      }
      if (fp->reason.rfind("Lawrence", 0) == 0 && n_eff >= 2) {
        return {fp->length, fp->witness, LengthMethod::Fastpath, fp->reason};
      }
    }
  }

  Spanned s = spanned(p);
  const LatticePolytope& q = s.poly();
  if (q.ambient_dim() > 3) {
    return {brute_force_length(p, n, options.cap_lattice_points), Zonotope(),
            LengthMethod::Oracle, "exhaustive enumeration"};
  }

  Integer upper = length_upper_bound(p);
  if (options.upper_bound) upper = std::min(upper, *options.upper_bound);
  Integer lower = 0;
  Zonotope lower_z(to_rational(q.vertices().front()));
  std::optional<Zonotope> seed_full;
  if (options.seed && options.seed->is_lattice() && options.seed->span_dim() <= n_eff &&
      contains(p, *options.seed)) {
    lower = numerator_int(options.seed->length());
    seed_full = options.seed;
  }
  Search search(q, n_eff, lower, lower_z, upper, options.cap_lattice_points);
  search.run();
  if (seed_full && search.best() == lower) {
    return {lower, *seed_full, LengthMethod::Search, "branch and bound"};
  }
  return {search.best(), s.lift_back(search.witness()), LengthMethod::Search, "branch and bound"};
}

Integer brute_force_length(const LatticePolytope& p, std::size_t n, std::size_t cap) {
  const std::size_t d = p.ambient_dim();
  if (n < 1 || n > d) throw std::invalid_argument("length index n must lie in 1..d");
  // Lattice points from a bounding-box scan with convex-combination membership.
  LatticePoint lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<LatticePoint> pts;
  LatticePoint x = lo;
  while (true) {
    if (contains(p, to_rational(x))) {
      pts.push_back(x);
      if (pts.size() > cap) throw ResourceCapExceeded("oracle lattice point cap exceeded");
    }
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        done = false;
        break;
      }
      x[i] = lo[i];
    }
    if (done) break;
  }
  std::set<LatticePoint> dirs_set;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      dirs_set.insert(primitivize(sub(pts[j], pts[i])).direction.coords());
    }
  }
  const std::vector<LatticePoint> dirs(dirs_set.begin(), dirs_set.end());
  const std::set<LatticePoint> all(pts.begin(), pts.end());

  // anchors: lattice a with a + (current zonotope) inside P.
  Integer best = 0;
  std::vector<LatticePoint> used;
  std::function<void(std::size_t, const std::set<LatticePoint>&, Integer)> dfs =
      [&](std::size_t start, const std::set<LatticePoint>& anchors, Integer depth) {
        best = std::max(best, depth);
        for (std::size_t i = start; i < dirs.size(); ++i) {
          std::vector<LatticePoint> span = used;
          span.push_back(dirs[i]);
          if (rank(span) > n) continue;
          std::set<LatticePoint> next;
          for (const auto& a : anchors) {
            if (anchors.count(add(a, dirs[i]))) next.insert(a);
          }
          if (next.empty()) continue;
          used.push_back(dirs[i]);
          dfs(i, next, depth + 1);
          used.pop_back();
        }
      };
  dfs(0, all, 0);
  return best;
}

Zonotope minimize_decomposition(const Zonotope& z) {
  if (!z.is_lattice()) throw std::invalid_argument("decomposition must be a lattice zonotope");
  Zonotope cur = z;
  const std::size_t d = z.dim();
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& terms = cur.terms();
    const std::size_t n = cur.span_dim();
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t)> try_subsets = [&](std::size_t r,
                                                                    std::size_t from) -> bool {
      if (pick.size() == r) {
        std::vector<LatticePoint> gens;
        for (std::size_t i : pick) gens.push_back(terms[i].direction.coords());
        if (rank(gens) != r) return false;
        std::vector<LatticePoint> corners{LatticePoint(d, 0)};
        for (const auto& g : gens) {
          const std::size_t m = corners.size();
          for (std::size_t i = 0; i < m; ++i) corners.push_back(add(corners[i], g));
        }
        auto pts = lattice_points(LatticePolytope(corners));
        std::map<LatticePoint, LatticePoint> residues;
        for (const auto& pt : pts) {
          LatticePoint res(d);
          for (std::size_t i = 0; i < d; ++i) {
            res[i] = ((pt[i] % static_cast<Integer>(r)) + static_cast<Integer>(r)) %
                     static_cast<Integer>(r);
          }
          auto [it, fresh] = residues.emplace(res, pt);
          if (fresh) continue;
          const LatticePoint& p0 = it->second;
          LatticePoint u = primitivize(sub(pt, p0)).direction.coords();
          if (sub(pt, p0) != scale(u, primitivize(sub(pt, p0)).multiplier)) u = scale(u, -1);
          RationalPoint anchor = cur.anchor();
          for (std::size_t i = 0; i < d; ++i) anchor[i] += p0[i];
          std::vector<ZonotopeTerm> next;
          for (std::size_t i = 0; i < terms.size(); ++i) {
            Rational w = terms[i].weight;
            if (std::find(pick.begin(), pick.end(), i) != pick.end()) w -= 1;
            if (w > 0) next.push_back({terms[i].direction, w});
          }
          push_segment(anchor, next, u, Rational(static_cast<Integer>(r)));
          cur = Zonotope(std::move(anchor), std::move(next));
          return true;
        }
        return false;
      }
      for (std::size_t i = from; i < terms.size(); ++i) {
        pick.push_back(i);
        if (try_subsets(r, i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    for (std::size_t r = 2; r <= n && !changed; ++r) {
      pick.clear();
      changed = try_subsets(r, 0);
    }
  }
  return cur;
}

Zonotope smallest_maximal_decomposition(const LatticePolytope& p) {
  LengthResult res = minkowski_length(p, p.ambient_dim());
  if (res.length == 0) throw std::invalid_argument("polytope has Minkowski length 0");
  return minimize_decomposition(res.witness);
}

LengthProfile length_profile(const LatticePolytope& p, const LengthOptions& options) {
  LengthProfile prof;
  const std::size_t d = p.ambient_dim();
  const std::size_t k = p.span_dim();
  for (std::size_t n = 1; n <= d; ++n) {
    if (n > std::max<std::size_t>(k, 1)) {
      prof.values.push_back(prof.values.back());
      prof.witnesses.push_back(prof.witnesses.back());
      prof.methods.push_back(prof.methods.back());
      continue;
    }
    LengthOptions opt = options;
    if (!prof.values.empty() && !opt.seed) opt.seed = prof.witnesses.back();
    LengthResult r = minkowski_length(p, n, opt);
    prof.values.push_back(r.length);
    prof.witnesses.push_back(r.witness);
    prof.methods.push_back(r.method);
  }
  return prof;
}

}  // namespace minklen
