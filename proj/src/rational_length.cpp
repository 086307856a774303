#include "minklen/rational_length.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "minklen/ilp.hpp"
#include "minklen/length.hpp"
#include "minklen/lp.hpp"

namespace minklen {

std::string to_string(Certification c) {
  return c == Certification::Certified ? "certified" : "lower-bound-only";
}

namespace {

Rational ratio(Integer a, Integer b) { return Rational(a) / Rational(b); }

// Chord of P along v by LP over convex combinations; works in any dimension.
Rational lp_chord(const LatticePolytope& p, const LatticePoint& v) {
  const auto& verts = p.vertices();
  const std::size_t m = verts.size(), d = p.ambient_dim();
  lp::LinearProgram prog(2 * m + 1);
  std::vector<Rational> mu(2 * m + 1), nu(2 * m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    mu[i] = 1;
    nu[m + i] = 1;
  }
  prog.add_constraint(mu, lp::Relation::Equal, 1);
  prog.add_constraint(nu, lp::Relation::Equal, 1);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> row(2 * m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = -verts[i][j];
      row[m + i] = verts[i][j];
    }
    row[2 * m] = -v[j];
    prog.add_constraint(row, lp::Relation::Equal, 0);
  }
  std::vector<Rational> obj(2 * m + 1);
  obj[2 * m] = 1;
  prog.set_objective(obj, lp::Sense::Maximize);
  return lp::solve(prog).optimum;
}

// s_v(P) is the gauge of v with respect to the difference body P - P, read
// off its facets when those are available.
class Chords {
 public:
  explicit Chords(const LatticePolytope& p) : p_(p) {
    if (!p.has_halfspaces()) return;
    std::vector<LatticePoint> diffs;
    for (const auto& a : p.vertices()) {
      for (const auto& b : p.vertices()) diffs.push_back(sub(a, b));
    }
    body_.emplace(std::move(diffs));
  }

  Rational operator()(const LatticePoint& v) const {
    if (!body_) return lp_chord(p_, v);
    std::optional<Rational> best;
    for (const auto& h : body_->halfspaces()) {
      const Integer gv = dot(h.normal, v);
      if (gv <= 0) continue;
      Rational r = ratio(h.offset, gv);
      if (!best || r < *best) best = r;
    }
    return best.value_or(Rational(0));
  }

  // Membership of eps * v in P - P, without division.
  bool reaches(const LatticePoint& v, const Rational& eps) const {
    if (!body_) return (*this)(v) >= eps;
    for (const auto& h : body_->halfspaces()) {
      if (eps * dot(h.normal, v) > h.offset) return false;
    }
    return true;
  }

 private:
  LatticePolytope p_;
  std::optional<LatticePolytope> body_;
};

struct Scored {
  PrimitiveVector v;
  Rational chord;
};

// Primitive v with s_v(P) >= eps, in lexicographic order.
std::vector<Scored> enumerate_directions(const LatticePolytope& p, const Chords& chords,
                                         const Rational& eps, double box_cap) {
  const std::size_t d = p.ambient_dim();
  LatticePoint lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices()) {
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  LatticePoint bound(d);
  double cells = 1;
  for (std::size_t j = 0; j < d; ++j) {
    bound[j] = floor_to_integer(Rational(hi[j] - lo[j]) / eps);
    cells *= 2.0 * static_cast<double>(bound[j]) + 1;
  }
  if (cells > box_cap) throw ResourceCapExceeded("direction enumeration box too large");
  const Rational diam2 = squared_diameter(p);
  const Rational eps2 = eps * eps;

  std::vector<Scored> out;
  LatticePoint x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = -bound[j];
  while (true) {
    if (canonical_sign(x) == x && std::any_of(x.begin(), x.end(), [](Integer c) { return c; }) &&
        is_primitive(x) && eps2 * dot(x, x) <= diam2 && chords.reaches(x, eps)) {
      out.push_back({PrimitiveVector(x), chords(x)});
    }
    std::size_t j = d;
    while (j > 0 && x[j - 1] == bound[j - 1]) {
      x[j - 1] = -bound[j - 1];
      --j;
    }
    if (j == 0) break;
    ++x[j - 1];
  }
  return out;
}

constexpr double kPublicBoxCap = 2e7;

// Up to `cap` directions with the longest chords among those reaching eps,
// doubling eps while the enumeration box is too large.
std::vector<PrimitiveVector> seed_directions(const LatticePolytope& p, const Chords& chords,
                                             Rational eps, std::size_t cap) {
  std::vector<Scored> found;
  while (true) {
    try {
      found = enumerate_directions(p, chords, eps, 4e6);
      break;
    } catch (const ResourceCapExceeded&) {
      eps *= 2;
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Scored& a, const Scored& b) { return a.chord > b.chord; });
  if (found.size() > cap) found.resize(cap);
  std::vector<PrimitiveVector> out;
  for (const auto& s : found) out.push_back(s.v);
  return out;
}

ZonotopeFit vertex_form_lp(const LatticePolytope& p, const std::vector<PrimitiveVector>& dirs) {
  const std::size_t d = p.ambient_dim(), m = dirs.size();
  if (m > 8) throw ResourceCapExceeded("too many directions for the vertex formulation");
  const auto& verts = p.vertices();
  const std::size_t corners = std::size_t{1} << m;
  const std::size_t nv = d + m + corners * verts.size();
  lp::LinearProgram prog(nv);
  for (std::size_t j = 0; j < d; ++j) prog.set_free(j);
  for (std::size_t c = 0; c < corners; ++c) {
    const std::size_t base = d + m + c * verts.size();
    std::vector<Rational> sum(nv);
    for (std::size_t i = 0; i < verts.size(); ++i) sum[base + i] = 1;
    prog.add_constraint(sum, lp::Relation::Equal, 1);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> row(nv);
      row[j] = 1;
      for (std::size_t i = 0; i < m; ++i) {
        if (c >> i & 1) row[d + i] = dirs[i][j];
      }
      for (std::size_t i = 0; i < verts.size(); ++i) row[base + i] = -verts[i][j];
      prog.add_constraint(row, lp::Relation::Equal, 0);
    }
  }
  std::vector<Rational> obj(nv);
  for (std::size_t i = 0; i < m; ++i) obj[d + i] = 1;
  prog.set_objective(obj, lp::Sense::Maximize);
  auto out = lp::solve(prog);
  RationalPoint anchor(out.witness.begin(), out.witness.begin() + d);
  std::vector<ZonotopeTerm> terms;
  for (std::size_t i = 0; i < m; ++i) {
    if (out.witness[d + i] > 0) terms.push_back({dirs[i], out.witness[d + i]});
  }
  return {out.optimum, Zonotope(anchor, terms), {}};
}

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Primitive directions orthogonal to every normal, for a family of rank < k.
std::vector<PrimitiveVector> orthogonal_directions(const std::vector<LatticePoint>& normals,
                                                   std::size_t k) {
  std::vector<LatticePoint> raw;
  if (normals.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      LatticePoint e(k);
      e[i] = 1;
      raw.push_back(e);
    }
  } else if (k == 2) {
    raw.push_back({-normals[0][1], normals[0][0]});
  } else if (k == 3) {
    for (const auto& g : normals) {
      for (const auto& h : normals) raw.push_back(cross(g, h));
      for (std::size_t i = 0; i < 3; ++i) {
        LatticePoint e(3);
        e[i] = 1;
        if (rank(normals) == 1) raw.push_back(cross(g, e));
      }
    }
  }
  std::set<PrimitiveVector> out;
  for (const auto& r : raw) {
    if (std::any_of(r.begin(), r.end(), [](Integer c) { return c; })) {
      out.insert(primitivize(r).direction);
    }
  }
  return {out.begin(), out.end()};
}

struct TopResult {
  ZonotopeFit fit;
  bool certified = false;
};

// lambda of a full-dimensional Q (dimension <= 3) by column generation.
// The LP dual y of the restricted problem bounds every direction set at
// once when sum_g y_g |g.v| >= 2 for all primitive v; the v violating this
// form a finite set, which is enumerated and fed back as new columns.
TopResult certify_top(const LatticePolytope& q, std::set<PrimitiveVector> dirs,
                      std::size_t max_rounds) {
  const std::size_t k = q.ambient_dim();
  const auto& facets = q.halfspaces();
  TopResult res;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    res.fit = zonotope_lp(q, {dirs.begin(), dirs.end()});
    const auto& y = res.fit.dual;

    std::vector<std::size_t> support;
    std::vector<LatticePoint> normals;
    RationalPoint balance(k);
    Rational objective = 0;
    for (std::size_t g = 0; g < facets.size(); ++g) {
      if (y[g] < 0) throw std::logic_error("negative facet multiplier");
      if (y[g] == 0) continue;
      support.push_back(g);
      normals.push_back(facets[g].normal);
      objective += y[g] * facets[g].offset;
      for (std::size_t j = 0; j < k; ++j) balance[j] += y[g] * facets[g].normal[j];
    }
    if (objective != res.fit.value ||
        std::any_of(balance.begin(), balance.end(), [](const Rational& b) { return b != 0; })) {
      throw std::logic_error("facet multipliers do not certify the zonotope LP");
    }

    std::vector<PrimitiveVector> fresh;
    if (rank(normals) < k) {
      for (const auto& v : orthogonal_directions(normals, k)) {
        if (!dirs.count(v)) fresh.push_back(v);
      }
      if (fresh.empty()) return res;
    } else {
      // Bounding box of {x : sum y_g |g.x| <= 2}.
      const std::size_t s = support.size();
      LatticePoint bound(k);
      double cells = 1;
      for (std::size_t j = 0; j < k; ++j) {
        lp::LinearProgram box(k + s);
        for (std::size_t i = 0; i < k; ++i) box.set_free(i);
        std::vector<Rational> budget(k + s);
        for (std::size_t a = 0; a < s; ++a) {
          std::vector<Rational> up(k + s), down(k + s);
          for (std::size_t i = 0; i < k; ++i) {
            up[i] = normals[a][i];
            down[i] = -normals[a][i];
          }
          up[k + a] = down[k + a] = -1;
          box.add_constraint(up, lp::Relation::LessEqual, 0);
          box.add_constraint(down, lp::Relation::LessEqual, 0);
          budget[k + a] = y[support[a]];
        }
        box.add_constraint(budget, lp::Relation::LessEqual, 2);
        std::vector<Rational> obj(k + s);
        obj[j] = 1;
        box.set_objective(obj, lp::Sense::Maximize);
        auto out = lp::solve(box);
        if (out.status != lp::Status::Optimal) return res;
        bound[j] = floor_to_integer(out.optimum);
        cells *= 2.0 * static_cast<double>(bound[j]) + 1;
      }
      if (cells > 4e6) return res;

      std::vector<std::pair<Rational, PrimitiveVector>> violators;
      LatticePoint x(k);
      for (std::size_t j = 0; j < k; ++j) x[j] = -bound[j];
      while (true) {
        if (canonical_sign(x) == x && std::any_of(x.begin(), x.end(), [](Integer c) { return c; }) &&
            is_primitive(x)) {
          Rational phi = 0;
          for (std::size_t a = 0; a < s; ++a) {
            const Integer gx = dot(normals[a], x);
            phi += y[support[a]] * (gx < 0 ? -gx : gx);
          }
          if (phi < 2) {
            PrimitiveVector v(x);
            if (dirs.count(v)) throw std::logic_error("dual infeasible on a present column");
            violators.emplace_back(phi, v);
          }
        }
        std::size_t j = k;
        while (j > 0 && x[j - 1] == bound[j - 1]) {
          x[j - 1] = -bound[j - 1];
          --j;
        }
        if (j == 0) break;
        ++x[j - 1];
      }
      if (violators.empty()) {
        res.certified = true;
        return res;
      }
      std::stable_sort(violators.begin(), violators.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < violators.size() && i < 32; ++i) {
        fresh.push_back(violators[i].second);
      }
    }
    dirs.insert(fresh.begin(), fresh.end());
  }
  return res;
}

// Best zonotope spanning at most a plane, over planes spanned by pairs of
// the given directions (Q of dimension 3).
ZonotopeFit best_planar(const LatticePolytope& q, const std::vector<PrimitiveVector>& dirs) {
  std::set<PrimitiveVector> planes;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      planes.insert(primitivize(cross(dirs[i].coords(), dirs[j].coords())).direction);
    }
  }
  std::optional<ZonotopeFit> best;
  for (const auto& h : planes) {
    std::vector<PrimitiveVector> inside;
    for (const auto& v : dirs) {
      if (dot(h.coords(), v.coords()) == 0) inside.push_back(v);
    }
    auto fit = zonotope_lp(q, inside);
    if (!best || fit.value > best->value) best = fit;
  }
  return *best;
}

struct Profile {
  std::vector<Rational> lam;  // index 1..k
  std::vector<Zonotope> wit;
  std::vector<bool> cert;
  std::vector<std::optional<Rational>> upper;
};

Rational max_weight_epsilon(const Rational& lb, const Rational& below, std::size_t e,
                            std::size_t m) {
  const Rational delta = (lb - below) / 2;
  Rational eps = (lb + below) / (2 * Rational(m));
  const Rational other = delta / Rational(std::max<std::size_t>(1, m - e));
  if (delta > 0 && other < eps) eps = other;
  return eps;
}

Profile bounded_profile(const LatticePolytope& q, const RationalOptions& opts) {
  const std::size_t k = q.ambient_dim();
  Profile pr;
  pr.lam.resize(k + 1);
  pr.wit.resize(k + 1);
  pr.cert.assign(k + 1, true);
  pr.upper.resize(k + 1);

  const Chords chords(q);
  const RationalDiameter diam = rational_diameter(q);
  {
    auto fit = zonotope_lp(q, {diam.direction});
    if (fit.value != diam.value) throw std::logic_error("rational diameter LP mismatch");
    pr.lam[1] = diam.value;
    pr.wit[1] = fit.zonotope;
  }

  std::optional<LengthProfile> lengths;
  try {
    lengths = length_profile(q);
  } catch (const ResourceCapExceeded&) {
  }

  if (k >= 2) {
    std::set<PrimitiveVector> seeds{diam.direction};
    Rational lb = pr.lam[1];
    if (lengths) {
      for (const auto& z : lengths->witnesses) {
        for (const auto& v : z.directions()) seeds.insert(v);
      }
      lb = std::max(lb, Rational(lengths->values.back()));
    }
    const std::size_t m = (std::size_t{1} << k) - 1;
    const std::size_t e = lb > pr.lam[1] ? 2 : 1;
    const Rational eps = max_weight_epsilon(lb, e == 1 ? Rational(0) : pr.lam[1], e, m);
    for (const auto& v : seed_directions(q, chords, eps, opts.budget_cap)) seeds.insert(v);

    TopResult top = certify_top(q, seeds, opts.max_rounds);
    pr.lam[k] = top.fit.value;
    pr.wit[k] = top.fit.zonotope;
    pr.cert[k] = top.certified;
    if (pr.lam[k] < lb) throw std::logic_error("zonotope LP below a known lower bound");

    if (k == 3) {
      std::vector<PrimitiveVector> pool =
          seed_directions(q, chords, pr.lam[1] / 3, std::min<std::size_t>(opts.budget_cap, 24));
      for (const auto& v : top.fit.zonotope.directions()) {
        if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
      }
      ZonotopeFit planar = best_planar(q, pool);
      pr.lam[2] = pr.lam[1];
      pr.wit[2] = pr.wit[1];
      if (planar.value > pr.lam[2]) {
        pr.lam[2] = planar.value;
        pr.wit[2] = planar.zonotope;
      }
      if (lengths && Rational(lengths->values[1]) > pr.lam[2]) {
        pr.lam[2] = lengths->values[1];
        pr.wit[2] = lengths->witnesses[1];
      }
      pr.cert[2] = pr.cert[3] && pr.lam[2] == pr.lam[3];
    }
  }

  // Dilates give independent lower bounds; a certified value below one of
  // them means a bug.
  for (Integer t = 2; t <= opts.dilate_checks; ++t) {
    const LatticePolytope qt = dilate(q, t);
    if (lattice_points(qt).size() > opts.point_guard) break;
    const LengthProfile lt = length_profile(qt);
    for (std::size_t n = 1; n <= k; ++n) {
      const Rational r = Rational(lt.values[n - 1]) / t;
      if (r <= pr.lam[n]) continue;
      if (pr.cert[n]) throw std::logic_error("certified rational length below L(tP)/t");
      pr.lam[n] = r;
      pr.wit[n] = lt.witnesses[n - 1].scaled(Rational(1) / t);
    }
  }
  for (std::size_t n = 2; n <= k; ++n) {
    if (pr.lam[n] < pr.lam[n - 1]) {
      if (pr.cert[n]) throw std::logic_error("rational length chain violated");
      pr.lam[n] = pr.lam[n - 1];
      pr.wit[n] = pr.wit[n - 1];
    }
  }
  for (std::size_t n = 1; n <= k; ++n) {
    if (pr.cert[n]) {
      pr.upper[n] = pr.lam[n];
    } else if (pr.cert[k]) {
      pr.upper[n] = pr.lam[k];
    }
  }
  return pr;
}

// Dimension above 3: lower bounds only, from zonotopes grown greedily over
// the longest vertex-difference directions.
Profile lower_profile(const LatticePolytope& q) {
  const std::size_t k = q.ambient_dim();
  Profile pr;
  pr.lam.resize(k + 1);
  pr.wit.resize(k + 1);
  pr.cert.assign(k + 1, false);
  pr.upper.resize(k + 1);
  const Chords chords(q);
  std::set<PrimitiveVector> seen;
  std::vector<Scored> pool;
  const auto& verts = q.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      auto v = primitivize(sub(verts[j], verts[i])).direction;
      if (seen.insert(v).second) pool.push_back({v, chords(v.coords())});
    }
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Scored& a, const Scored& b) { return a.chord > b.chord; });
  if (pool.size() > 12) pool.resize(12);

  std::vector<PrimitiveVector> chosen;
  ZonotopeFit current{0, Zonotope(to_rational(verts.front())), {}};
  for (std::size_t n = 1; n <= k; ++n) {
    bool grew = true;
    while (grew && chosen.size() < 8) {
      grew = false;
      std::optional<ZonotopeFit> best;
      PrimitiveVector pick;
      for (const auto& s : pool) {
        if (std::find(chosen.begin(), chosen.end(), s.v) != chosen.end()) continue;
        std::vector<LatticePoint> raw{s.v.coords()};
        for (const auto& c : chosen) raw.push_back(c.coords());
        if (rank(raw) > n) continue;
        auto trial = chosen;
        trial.push_back(s.v);
        auto fit = vertex_form_lp(q, trial);
        if (fit.value > current.value && (!best || fit.value > best->value)) {
          best = fit;
          pick = s.v;
        }
      }
      if (best) {
        chosen.push_back(pick);
        current = *best;
        grew = true;
      }
    }
    pr.lam[n] = current.value;
    pr.wit[n] = current.zonotope;
  }
  return pr;
}

}  // namespace

Rational directional_length(const LatticePolytope& p, const PrimitiveVector& v) {
  if (v.dim() != p.ambient_dim()) throw std::invalid_argument("direction dimension mismatch");
  return Chords(p)(v.coords());
}

Rational directional_length(const LatticePolytope& p, const LatticePoint& v) {
  if (!is_primitive(v)) throw std::invalid_argument("direction is not primitive");
  return directional_length(p, PrimitiveVector(v));
}

std::vector<PrimitiveVector> bounded_direction_set(const LatticePolytope& p, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
  std::vector<PrimitiveVector> out;
  for (const auto& s : enumerate_directions(p, Chords(p), eps, kPublicBoxCap)) out.push_back(s.v);
  return out;
}

RationalDiameter rational_diameter(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  if (p.span_dim() == 0) {
    LatticePoint e(d);
    e[0] = 1;
    return {0, PrimitiveVector(e)};
  }
  const Chords chords(p);
  // Seed from vertex-to-vertex directions; only shorter vectors can beat it.
  Rational seed = 0;
  const auto& verts = p.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      seed = std::max(seed, chords(primitivize(sub(verts[j], verts[i])).direction.coords()));
    }
  }
  auto found = enumerate_directions(p, chords, seed, kPublicBoxCap);
  const Scored* best = nullptr;
  for (const auto& s : found) {
    if (!best || s.chord > best->chord) best = &s;
  }
  return {best->chord, best->v};
}

std::vector<PrimitiveVector> direction_completions(const std::vector<PrimitiveVector>& basis,
                                                   const Rational& bound) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  if (bound <= 0) throw std::invalid_argument("volume bound must be positive");
  const std::size_t d = basis.front().dim();
  std::vector<LatticePoint> cols;
  for (const auto& b : basis) {
    if (b.dim() != d) throw std::invalid_argument("basis dimension mismatch");
    cols.push_back(b.coords());
  }
  const std::size_t k = cols.size();
  if (rank(cols) < k) throw std::invalid_argument("basis vectors are dependent");

  const SpanBasis span = adapted_basis(cols, d);
  // Basis in span coordinates, as columns of a k x k matrix.
  IntMatrix bm(k, LatticePoint(k));
  for (std::size_t i = 0; i < k; ++i) {
    LatticePoint r = transform(span.forward, cols[i]);
    for (std::size_t j = 0; j < k; ++j) bm[j][i] = r[j];
  }
  const Integer vol = std::abs(determinant(bm));
  // Cramer: the i-th coordinate of v in B is det(B with column i -> v)/vol.
  LatticePoint box(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i) s += Rational(std::abs(bm[j][i])) * bound / vol;
    box[j] = floor_to_integer(s);
  }

  std::set<PrimitiveVector> out;
  LatticePoint y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = -box[j];
  while (true) {
    if (std::any_of(y.begin(), y.end(), [](Integer c) { return c; }) && is_primitive(y)) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        IntMatrix sub_m = bm;
        for (std::size_t j = 0; j < k; ++j) sub_m[j][i] = y[j];
        ok = Rational(std::abs(determinant(sub_m))) <= bound;
      }
      if (ok) {
        LatticePoint padded(d);
        std::copy(y.begin(), y.end(), padded.begin());
        out.insert(PrimitiveVector(canonical_sign(transform(span.inverse, padded))));
      }
    }
    std::size_t j = k;
    while (j > 0 && y[j - 1] == box[j - 1]) {
      y[j - 1] = -box[j - 1];
      --j;
    }
    if (j == 0) break;
    ++y[j - 1];
  }
  return {out.begin(), out.end()};
}

DirectionBudget direction_budget(const LatticePolytope& p, const Rational& eps, std::size_t n,
                                 std::size_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  DirectionBudget budget;
  budget.epsilon = eps;
  budget.directions = bounded_direction_set(p, eps);
  if (budget.directions.size() > cap) throw ResourceCapExceeded("direction budget over cap");
  const std::size_t k = p.span_dim();
  if (n > k) n = k;
  Rational bound = 1;
  for (std::size_t i = 0; i < k; ++i) bound *= n;

  std::set<PrimitiveVector> all(budget.directions.begin(), budget.directions.end());
  std::vector<PrimitiveVector> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == n) {
      std::vector<LatticePoint> raw;
      for (const auto& v : pick) raw.push_back(v.coords());
      if (rank(raw) < n) return;
      auto completions = direction_completions(pick, bound);
      all.insert(completions.begin(), completions.end());
      if (all.size() > cap) throw ResourceCapExceeded("direction budget over cap");
      budget.completions.emplace(pick, std::move(completions));
      return;
    }
    for (std::size_t i = start; i < budget.directions.size(); ++i) {
      pick.push_back(budget.directions[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  if (n > 0) rec(0);
  return budget;
}

Rational polygon_upper_bound(const LatticePolytope& p) {
  if (p.ambient_dim() != 2 || p.span_dim() != 2) {
    throw std::invalid_argument("polygon bound needs a full-dimensional polygon");
  }
  return 2 * normalized_volume(p) / lattice_width(p).width;
}

ZonotopeFit zonotope_lp(const LatticePolytope& p, const std::vector<PrimitiveVector>& dirs) {
  const std::size_t d = p.ambient_dim(), m = dirs.size();
  for (const auto& v : dirs) {
    if (v.dim() != d) throw std::invalid_argument("direction dimension mismatch");
  }
  if (!p.has_halfspaces()) return vertex_form_lp(p, dirs);
  lp::LinearProgram prog(d + m);
  for (std::size_t j = 0; j < d; ++j) prog.set_free(j);
  for (const auto& h : p.halfspaces()) {
    std::vector<Rational> row(d + m);
    for (std::size_t j = 0; j < d; ++j) row[j] = h.normal[j];
    for (std::size_t i = 0; i < m; ++i) row[d + i] = std::max<Integer>(0, dot(h.normal, dirs[i].coords()));
    prog.add_constraint(row, lp::Relation::LessEqual, h.offset);
  }
  std::vector<Rational> obj(d + m);
  for (std::size_t i = 0; i < m; ++i) obj[d + i] = 1;
  prog.set_objective(obj, lp::Sense::Maximize);
  auto out = lp::solve(prog);
  if (out.status != lp::Status::Optimal) throw std::logic_error("zonotope LP not optimal");
  RationalPoint anchor(out.witness.begin(), out.witness.begin() + d);
  std::vector<ZonotopeTerm> terms;
  for (std::size_t i = 0; i < m; ++i) {
    if (out.witness[d + i] > 0) terms.push_back({dirs[i], out.witness[d + i]});
  }
  return {out.optimum, Zonotope(anchor, terms), out.dual};
}

RationalLengthResult rational_minkowski_length(const LatticePolytope& p, std::size_t n,
                                               const RationalOptions& options) {
  const std::size_t d = p.ambient_dim(), k = p.span_dim();
  if (n < 1 || n > d) throw std::invalid_argument("n must lie in 1..d");
  RationalLengthResult res;
  if (k == 0) {
    res.lambdas.assign(n, 0);
    res.upper_bounds.assign(n, Rational(0));
    res.witness = Zonotope(to_rational(p.vertices().front()));
    res.witnesses.assign(n, res.witness);
    res.status.assign(n, Certification::Certified);
    return res;
  }
  std::optional<SpanReduction> red;
  if (k < d) red = reduce_to_span(p);
  const LatticePolytope& q = red ? red->reduced : p;
  const Profile pr = k <= 3 ? bounded_profile(q, options) : lower_profile(q);

  auto at = [&](std::size_t m) { return std::min(m, k); };
  for (std::size_t m = 1; m <= n; ++m) {
    res.lambdas.push_back(pr.lam[at(m)]);
    res.upper_bounds.push_back(pr.upper[at(m)]);
    res.witnesses.push_back(red ? lift(*red, pr.wit[at(m)]) : pr.wit[at(m)]);
    res.status.push_back(pr.cert[at(m)] ? Certification::Certified
                                        : Certification::LowerBoundOnly);
    if (!pr.cert[at(m)]) res.certification = Certification::LowerBoundOnly;
  }
  res.witness = res.witnesses.back();
  res.threshold_index = 1;
  while (pr.lam[at(res.threshold_index)] != pr.lam[k]) ++res.threshold_index;
  return res;
}

RationalLengthResult rational_length_profile(const LatticePolytope& p,
                                             const RationalOptions& options) {
  return rational_minkowski_length(p, p.ambient_dim(), options);
}

namespace {

// Integer anchor a with a + sum c_i [0, v_i] inside P, for integral c_i.
std::optional<LatticePoint> integral_anchor(const LatticePolytope& p,
                                            const std::vector<ZonotopeTerm>& terms) {
  const std::size_t d = p.ambient_dim();
  lp::LinearProgram prog(d);
  for (std::size_t j = 0; j < d; ++j) prog.set_free(j);
  for (const auto& h : p.halfspaces()) {
    Rational rhs = h.offset;
    for (const auto& t : terms) {
      rhs -= t.weight * std::max<Integer>(0, dot(h.normal, t.direction.coords()));
    }
    std::vector<Rational> row(h.normal.begin(), h.normal.end());
    prog.add_constraint(row, lp::Relation::LessEqual, rhs);
  }
  prog.set_objective(std::vector<Rational>(d), lp::Sense::Maximize);
  std::vector<std::size_t> vars(d);
  for (std::size_t j = 0; j < d; ++j) vars[j] = j;
  try {
    auto sol = ilp::maximize(prog, vars);
    if (!sol) return std::nullopt;
    return to_lattice(sol->point);
  } catch (const ResourceCapExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

PeriodResult period(const LatticePolytope& p, const Rational& lambda, const Zonotope& witness,
                    Integer cap_multiples, std::size_t n) {
  if (n == 0) n = p.ambient_dim();
  PeriodResult res;
  if (lambda == 0) {
    res.period = 1;
    res.witness = Zonotope(to_rational(p.vertices().front()));
    return res;
  }
  if (witness.length() != lambda || !contains(p, witness)) {
    throw std::invalid_argument("witness does not attain lambda inside P");
  }
  const Integer q = denominator_int(lambda);
  const Integer limit = cap_multiples * q;

  // Scale the witness until both weights and some anchor are integral.
  Integer kprime = 1;
  for (const auto& t : witness.terms()) kprime = lcm(kprime, denominator_int(t.weight));
  std::optional<Integer> found;
  for (Integer big = kprime; big <= limit && p.has_halfspaces(); big += kprime) {
    const LatticePolytope dp = dilate(p, big);
    std::vector<ZonotopeTerm> terms;
    for (const auto& t : witness.terms()) terms.push_back({t.direction, t.weight * big});
    if (auto a = integral_anchor(dp, terms)) {
      Zonotope z(to_rational(*a), terms);
      if (!z.is_lattice() || !contains(dp, z) || z.length() != lambda * big) {
        throw std::logic_error("scaled witness failed verification");
      }
      found = big;
      res.witness = z;
      break;
    }
  }

  // Smaller multiples of q can only be settled by the search.
  const Integer stop = found ? *found : limit + 1;
  for (Integer m = q; m < stop; m += q) {
    const LatticePolytope dp = dilate(p, m);
    const Integer target = numerator_int(lambda * m);
    LengthOptions lo;
    lo.upper_bound = target;
    auto r = minkowski_length(dp, n, lo);
    if (r.length > target) throw std::logic_error("L(kP) exceeds k lambda");
    if (r.length == target) {
      res.period = m;
      res.witness = r.witness;
      return res;
    }
  }
  if (found) {
    res.period = *found;
  } else {
    res.note = "period not found below cap";
  }
  return res;
}

PeriodResult period(const LatticePolytope& p, Integer cap_multiples, std::size_t n) {
  if (n == 0) n = p.ambient_dim();
  auto prof = rational_minkowski_length(p, n);
  if (prof.status.back() != Certification::Certified) {
    PeriodResult res;
    res.note = "rational length not certified";
    return res;
  }
  return period(p, prof.lambdas.back(), prof.witness, cap_multiples, n);
}

}  // namespace minklen
