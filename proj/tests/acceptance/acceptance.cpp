// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure. Random inputs are seeded, so reruns see the same instances.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "minklen/lattice.hpp"
#include "minklen/length.hpp"
#include "minklen/quasilinear.hpp"
#include "minklen/rational_length.hpp"
#include "minklen/report.hpp"

using namespace minklen;
using namespace fixtures;

namespace {

// Collects violations; a criterion passes when none were recorded.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::string show_all(const LatticePolytope& p) {
  std::string out;
  for (const auto& v : p.vertices()) out += to_string(v);
  return out;
}

Integer L(const LatticePolytope& p, std::size_t n = 0) {
  return minkowski_length(p, n == 0 ? p.ambient_dim() : n).length;
}

// lambda_d(P) together with its certification.
std::pair<Rational, bool> lambda(const LatticePolytope& p) {
  auto r = rational_minkowski_length(p, p.ambient_dim());
  return {r.lambdas.back(), r.certification == Certification::Certified};
}

void simplex_dilates(Tally& t) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (Integer k = 1; k <= 6; ++k) {
      t.expect(L(standard_simplex(d, k)) == k, "d=" + std::to_string(d) + " t=" + std::to_string(k));
    }
  }
}

void coordinate_boxes(Tally& t) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Integer> side(1, 3);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int i = 0; i < 30; ++i) {
    std::vector<Integer> sides(dim(rng));
    Integer sum = 0;
    for (auto& s : sides) sum += s = side(rng);
    const auto b = box(sides);
    const Integer l = L(b);
    t.expect(l == sum, "box " + show_all(b));
    for (Integer k = 2; k <= 3; ++k) t.expect(L(dilate(b, k)) == k * l, "dilated box " + show_all(b));
  }
}

void degree_one(Tally& t) {
  t.expect(L(poly({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 1}})) == 2, "pyramid over 2 Delta_2");
  t.expect(L(poly({{0, 0}, {1, 0}, {1, 1}, {0, 2}})) == 2, "Lawrence h=(1,2)");
  t.expect(L(poly({{0, 0}, {1, 0}, {1, 2}, {0, 2}})) == 3, "Lawrence h=(2,2)");
}

void triangle_family(Tally& t) {
  for (Integer k = 2; k <= 5; ++k) {
    const auto tk = triangle_k(k);
    const Rational s(k * k - 1, k);
    const std::string name = "T_" + std::to_string(k);
    t.expect(lattice_diameter(tk) == k - 1, name + " lattice diameter");
    t.expect(rational_diameter(tk).value == s, name + " rational diameter");
    for (Integer m = 1; m <= 8; ++m) {
      t.expect(L(dilate(tk, m)) == floor_to_integer(s * m), name + " t=" + std::to_string(m));
    }
  }
}

void ten_thirds_square(Tally& t) {
  const auto p = tilted_square();
  t.expect(normalized_volume(p) == 5, "volume");
  t.expect(lattice_width(p).width == 3, "width");
  t.expect(L(p) == 3, "L");
  auto [lam, certified] = lambda(p);
  t.expect(lam == Rational(10, 3) && certified, "lambda = " + to_string(lam));
  auto per = period(p);
  t.expect(per.period && *per.period == 3, "period");
  for (Integer m = 1; m <= 9; ++m) {
    t.expect(L(dilate(p, m)) == 10 * (m / 3) + 3 * (m % 3), "t=" + std::to_string(m));
  }
  auto fit = fit_quasilinear(p, 9);
  t.expect(fit.function && fit.function->constants == std::vector<Integer>{0, 3, 6}, "fitted constants");
}

void sixty_eight_fifths(Tally& t) {
  const auto p = doubled_square();
  auto [lam, certified] = lambda(p);
  const Integer l = L(p);
  t.expect(lam == Rational(68, 5) && certified, "lambda = " + to_string(lam));
  t.expect(l == 12, "L = " + std::to_string(l));
  t.expect(lam - l == Rational(8, 5), "gap");
}

void random_triangles(Tally& t) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto tr = random_triangle(rng, 8);
    const Integer l = L(tr);
    t.expect(l == lattice_diameter(tr), "L = ell for " + show_all(tr));
    t.expect(l == floor_to_integer(rational_diameter(tr).value), "L = floor s for " + show_all(tr));
    auto [lam, certified] = lambda(tr);
    t.expect(certified && lam == polygon_upper_bound(tr), "lambda = 2Vol/w for " + show_all(tr));
  }
}

void oracle_equivalence(Tally& t) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> count(3, 8);
  int done = 0;
  while (done < 200) {
    const auto p = random_polygon(rng, 4, count(rng));
    if (lattice_points(p).size() > 12) continue;
    ++done;
    for (std::size_t n = 1; n <= 2; ++n) {
      t.expect(L(p, n) == brute_force_length(p, n, 12), "n=" + std::to_string(n) + " " + show_all(p));
    }
  }
}

// Direction count and parallelepiped volumes of a smallest maximal decomposition.
void check_decomposition(Tally& t, const LatticePolytope& p) {
  if (L(p) == 0) return;
  const Zonotope z = smallest_maximal_decomposition(p);
  const std::size_t d = p.ambient_dim();
  const auto dirs = z.directions();
  t.expect(dirs.size() <= (std::size_t{1} << d) - 1, "direction bound for " + show_all(p));
  const std::size_t n = z.span_dim();
  Integer bound = 1;
  for (std::size_t i = 0; i < d; ++i) bound *= static_cast<Integer>(n);
  // Every n-subset of the directions, via a bitmask.
  for (std::uint32_t mask = 0; mask < (1u << dirs.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::vector<LatticePoint> vs;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      if (mask >> i & 1) vs.push_back(dirs[i].coords());
    }
    t.expect(normalized_parallelepiped_volume(vs) <= bound, "volume bound for " + show_all(p));
  }
}

void structural(Tally& t) {
  std::mt19937_64 rng(9);
  std::vector<LatticePolytope> suite;
  for (int i = 0; i < 40; ++i) suite.push_back(random_polygon(rng, 4, 5));
  std::uniform_int_distribution<Integer> coord(0, 2);
  while (suite.size() < 52) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({coord(rng), coord(rng), coord(rng)});
    LatticePolytope p(pts);
    if (p.span_dim() == 3) suite.push_back(p);
  }
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& p = suite[i];
    const std::size_t d = p.ambient_dim();
    const std::string name = show_all(p);
    const auto prof = length_profile(p);
    for (std::size_t n = 1; n < d; ++n) t.expect(prof.values[n - 1] <= prof.values[n], "profile chain " + name);
    const auto lam = rational_minkowski_length(p, d);
    for (std::size_t n = 1; n < d; ++n) t.expect(lam.lambdas[n - 1] <= lam.lambdas[n], "lambda chain " + name);
    t.expect(prof.values[0] == floor_to_integer(lam.lambdas[0]), "L_1 = floor lambda_1 " + name);
    for (std::size_t n = 0; n < d; ++n) t.expect(Rational(prof.values[n]) <= lam.lambdas[n], "L_n <= lambda_n " + name);

    // Monotonicity under dropping a vertex.
    auto verts = p.vertices();
    verts.pop_back();
    LatticePolytope sub(verts);
    t.expect(L(sub) <= prof.values.back(), "monotonicity " + name);

    // Superadditivity against the next member of the suite of the same dimension.
    const auto& q = suite[(i + 1) % suite.size()];
    if (q.ambient_dim() == d && d == 2) {
      t.expect(L(minkowski_sum(p, q)) >= prof.values.back() + L(q), "superadditivity " + name);
    }

    const auto u = random_unimodular(rng, d);
    const auto image = unimodular_image(p, u, LatticePoint(d, 1));
    t.expect(L(image) == prof.values.back(), "unimodular invariance " + name);
    check_decomposition(t, p);
  }
}

void scaling_law(Tally& t) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_polygon(rng, 3, 5);
    auto [lam, certified] = lambda(p);
    t.expect(certified, "certified " + show_all(p));
    for (Integer k = 2; k <= 3; ++k) {
      auto [scaled, ok] = lambda(dilate(p, k));
      t.expect(ok && scaled == k * lam, "t=" + std::to_string(k) + " " + show_all(p));
    }
  }
}

void determinism(Tally& t) {
  using namespace minklen::report;
  const auto v1 = verify_json(verify_corpus(1)).dump();
  const auto v8 = verify_json(verify_corpus(8)).dump();
  t.expect(v1 == v8, "verify-paper differs between 1 and 8 workers");
  t.expect(v1 == verify_json(verify_corpus(1)).dump(), "verify-paper differs between runs");
  SearchSettings s;
  s.seed = 11;
  s.budget = 16;
  s.threads = 1;
  const auto a = search(s).dump();
  s.threads = 8;
  const auto b = search(s).dump();
  t.expect(a == b, "seeded search differs between 1 and 8 workers");
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 means no runtime bound
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "simplex dilates L(t Delta_d) = t", 10, simplex_dilates},
      {2, "coordinate boxes L = sum of sides, linear in t", 0, coordinate_boxes},
      {3, "degree-one polytopes", 0, degree_one},
      {4, "T_k family diameters and dilates", 30, triangle_family},
      {5, "square with lambda 10/3", 60, ten_thirds_square},
      {6, "square with lambda 68/5", 120, sixty_eight_fifths},
      {7, "random triangles L = ell = floor s, lambda = 2Vol/w", 0, random_triangles},
      {8, "branch and bound agrees with brute force", 0, oracle_equivalence},
      {9, "structural invariants", 0, structural},
      {10, "scaling law lambda(tP) = t lambda(P)", 0, scaling_law},
      {11, "determinism across worker counts", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      t.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s));
    }
    const bool pass = t.failures.empty();
    failed += !pass;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << t.checks
         << " checks, " << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : t.failures) std::cout << "       " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
