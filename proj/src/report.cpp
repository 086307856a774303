#include "minklen/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "minklen/length.hpp"
#include "minklen/parallel.hpp"
#include "minklen/quasilinear.hpp"
#include "minklen/rational_length.hpp"

namespace minklen::report {

namespace {

std::string fnv_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json point_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(rational_json(x));
  return out;
}

std::string list_text(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

Json input_json(const LatticePolytope& p) {
  return Json{{"vertices", polytope_json(p)["vertices"]}, {"digest", polytope_digest(p)}};
}

std::size_t resolve_n(const LatticePolytope& p, std::size_t n) {
  if (n == 0) return p.ambient_dim();
  if (n > p.ambient_dim()) throw std::invalid_argument("--n must lie in 1..d");
  return n;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json zonotope_json(const Zonotope& z) {
  Json terms = Json::array();
  for (const auto& t : z.terms()) {
    terms.push_back({{"dir", t.direction.coords()}, {"weight", rational_json(t.weight)}});
  }
  return Json{{"anchor", point_json(z.anchor())}, {"terms", terms}};
}

Zonotope zonotope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("anchor") || !j.contains("terms")) {
    throw std::invalid_argument("zonotope needs anchor and terms");
  }
  RationalPoint anchor;
  for (const auto& x : j["anchor"]) anchor.push_back(rational_from_json(x));
  std::vector<ZonotopeTerm> terms;
  for (const auto& t : j["terms"]) {
    terms.push_back({PrimitiveVector(t.at("dir").get<LatticePoint>()), rational_from_json(t.at("weight"))});
  }
  return Zonotope(anchor, terms);
}

Json polytope_json(const LatticePolytope& p) { return Json{{"vertices", p.vertices()}}; }

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw std::invalid_argument("expected an object with a \"vertices\" array");
  }
  std::vector<LatticePoint> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.empty()) throw std::invalid_argument("each vertex must be a nonempty array");
    LatticePoint p;
    for (const auto& c : v) {
      if (!c.is_number_integer()) throw std::invalid_argument("vertex coordinates must be integers");
      p.push_back(c.get<Integer>());
    }
    pts.push_back(std::move(p));
  }
  return LatticePolytope(std::move(pts));
}

LatticePolytope parse_polytope(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

std::string polytope_digest(const LatticePolytope& p) {
  std::string text;
  for (const auto& v : p.vertices()) text += to_string(v) + ";";
  return fnv_hex(text);
}

Json invariants(const LatticePolytope& p, const Settings& s) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t d = p.ambient_dim(), k = p.span_dim();
  const std::size_t n = resolve_n(p, s.n);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "invariants";
  j["input"] = input_json(p);
  j["dimension"] = d;
  j["span_dimension"] = k;
  j["n"] = n;
  j["lattice_points"] = lattice_points(p).size();
  if (d <= 3) {
    auto w = lattice_width(p);
    j["lattice_width"] = {{"width", w.width}, {"direction", w.direction.coords()}};
  } else {
    j["lattice_width"] = nullptr;
  }
  j["normalized_volume"] = k <= 3 ? rational_json(normalized_volume(p)) : Json(nullptr);
  j["lattice_diameter"] = lattice_diameter(p);
  auto sd = rational_diameter(p);
  j["rational_diameter"] = {{"value", rational_json(sd.value)}, {"direction", sd.direction.coords()}};

  LengthOptions lo;
  lo.cap_lattice_points = s.cap_lattice_points;
  const LengthProfile prof = length_profile(p, lo);
  Json lengths = Json::array();
  for (std::size_t m = 1; m <= n; ++m) {
    lengths.push_back({{"n", m},
                       {"value", prof.values[m - 1]},
                       {"method", to_string(prof.methods[m - 1])},
                       {"witness", zonotope_json(prof.witnesses[m - 1])}});
  }
  j["length_profile"] = lengths;
  j["L"] = prof.values[n - 1];

  const auto lam = rational_minkowski_length(p, n);
  Json rl;
  rl["lambdas"] = Json::array();
  rl["status"] = Json::array();
  rl["upper_bounds"] = Json::array();
  for (std::size_t m = 0; m < n; ++m) {
    rl["lambdas"].push_back(rational_json(lam.lambdas[m]));
    rl["status"].push_back(to_string(lam.status[m]));
    rl["upper_bounds"].push_back(lam.upper_bounds[m] ? rational_json(*lam.upper_bounds[m])
                                                     : Json(nullptr));
  }
  rl["threshold_index"] = lam.threshold_index;
  rl["certification"] = to_string(lam.certification);
  rl["witness"] = zonotope_json(lam.witness);
  j["rational_length"] = rl;
  j["lambda"] = rational_json(lam.lambdas.back());
  j["gap"] = rational_json(lam.lambdas.back() - prof.values[n - 1]);

  if (s.with_period) {
    Json per;
    if (lam.status.back() == Certification::Certified) {
      auto r = period(p, lam.lambdas.back(), lam.witness, 64, n);
      per["value"] = r.period ? Json(*r.period) : Json(nullptr);
      if (!r.note.empty()) per["note"] = r.note;
    } else {
      per["value"] = nullptr;
      per["note"] = "rational length not certified";
    }
    j["period"] = per;
  }
  if (s.timing) {
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  }
  return j;
}

Json table_and_fit(const LatticePolytope& p, const Settings& s) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = resolve_n(p, s.n);
  const Integer horizon = s.horizon > 0 ? s.horizon : s.t_max;
  if (horizon < 1) throw std::invalid_argument("--t-max must be positive");
  QuasiLinearFit fit = fit_quasilinear(p, horizon, n, s.cap_lattice_points);

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "table";
  j["input"] = input_json(p);
  j["n"] = n;
  Json rows = Json::array();
  for (const auto& e : fit.table.entries) {
    rows.push_back({{"t", e.t}, {"value", e.value}, {"source", to_string(e.source)}, {"digest", e.digest}});
  }
  j["table"] = rows;
  j["truncated"] = fit.table.truncated;
  if (fit.table.truncated) j["truncation_note"] = fit.table.truncation_note;
  if (fit.function) {
    const auto& f = *fit.function;
    Json residues = Json::array();
    for (const auto& st : f.residue_status) residues.push_back(to_string(st));
    j["fit"] = {{"period", f.period},
                {"slope", rational_json(f.slope)},
                {"constants", f.constants},
                {"stabilization", f.stabilization},
                {"status", to_string(f.status)},
                {"residue_status", residues},
                {"matches_from_start", f.matches_from_start},
                {"horizon", f.horizon}};
  } else {
    j["fit"] = nullptr;
  }
  if (!fit.note.empty()) j["note"] = fit.note;
  if (s.timing) {
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  }
  return j;
}

namespace {

using Check = std::function<VerifyItem()>;

VerifyItem item(std::string name, std::string expected, std::string got) {
  const bool pass = expected == got;
  return {std::move(name), std::move(expected), std::move(got), pass};
}

LatticePolytope make(std::vector<LatticePoint> pts) { return LatticePolytope(std::move(pts)); }

LatticePolytope simplex(std::size_t d) {
  std::vector<LatticePoint> pts{LatticePoint(d)};
  for (std::size_t i = 0; i < d; ++i) {
    LatticePoint e(d);
    e[i] = 1;
    pts.push_back(e);
  }
  return make(pts);
}

LatticePolytope triangle(Integer k) { return make({{0, 0}, {k, 1}, {1, k}}); }
LatticePolytope square() { return make({{2, 0}, {3, 2}, {1, 3}, {0, 1}}); }
LatticePolytope doubled() { return make({{2, 0}, {10, 2}, {8, 10}, {0, 8}}); }

std::vector<Integer> table_values(const LatticePolytope& p, Integer t_max) {
  std::vector<Integer> out;
  for (const auto& e : dilate_table(p, t_max).entries) out.push_back(e.value);
  return out;
}

std::vector<Check> corpus() {
  std::vector<Check> c;
  for (std::size_t d = 1; d <= 3; ++d) {
    c.push_back([d] {
      std::vector<Integer> got, want;
      for (Integer t = 1; t <= 6; ++t) {
        got.push_back(minkowski_length(dilate(simplex(d), t), d).length);
        want.push_back(t);
      }
      return item("simplex d=" + std::to_string(d) + ": L(t Delta) for t=1..6", list_text(want),
                  list_text(got));
    });
  }
  c.push_back([] {
    const auto b = make({{0, 0}, {2, 0}, {0, 3}, {2, 3}});
    std::vector<Integer> got;
    for (Integer t = 1; t <= 3; ++t) got.push_back(minkowski_length(dilate(b, t), 2).length);
    return item("box 2x3: L(t box) for t=1..3", "[5,10,15]", list_text(got));
  });
  c.push_back([] {
    const auto b = make({{0, 0, 0}, {1, 2, 2}});
    std::vector<LatticePoint> pts;
    for (Integer x : {0, 1}) {
      for (Integer y : {0, 2}) {
        for (Integer z : {0, 2}) pts.push_back({x, y, z});
      }
    }
    return item("box 1x2x2: L", "5", std::to_string(minkowski_length(make(pts), 3).length));
  });
  c.push_back([] {
    return item("pyramid over 2 Delta_2: L", "2",
                std::to_string(minkowski_length(make({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 1}}), 3).length));
  });
  c.push_back([] {
    return item("Lawrence prism h=(1,2): L", "2",
                std::to_string(minkowski_length(make({{0, 0}, {1, 0}, {1, 1}, {0, 2}}), 2).length));
  });
  c.push_back([] {
    return item("Lawrence prism h=(2,2): L", "3",
                std::to_string(minkowski_length(make({{0, 0}, {1, 0}, {1, 2}, {0, 2}}), 2).length));
  });
  for (Integer k = 2; k <= 5; ++k) {
    c.push_back([k] {
      return item("T_" + std::to_string(k) + ": lattice diameter", std::to_string(k - 1),
                  std::to_string(lattice_diameter(triangle(k))));
    });
    c.push_back([k] {
      return item("T_" + std::to_string(k) + ": rational diameter",
                  to_string(Rational(k * k - 1) / k), to_string(rational_diameter(triangle(k)).value));
    });
    c.push_back([k] {
      std::vector<Integer> want;
      for (Integer t = 1; t <= 8; ++t) want.push_back(floor_to_integer(Rational(k * k - 1) * t / k));
      return item("T_" + std::to_string(k) + ": L(t T) for t=1..8", list_text(want),
                  list_text(table_values(triangle(k), 8)));
    });
    c.push_back([k] {
      auto r = rational_minkowski_length(triangle(k), 2);
      return item("T_" + std::to_string(k) + ": lambda", to_string(Rational(k * k - 1) / k),
                  to_string(r.lambdas.back()) + (r.certification == Certification::Certified ? "" : "?"));
    });
    c.push_back([k] {
      auto r = period(triangle(k));
      return item("T_" + std::to_string(k) + ": period", std::to_string(k),
                  r.period ? std::to_string(*r.period) : r.note);
    });
  }
  c.push_back([] {
    return item("square: normalized volume", "5", to_string(normalized_volume(square())));
  });
  c.push_back([] {
    return item("square: lattice width", "3", std::to_string(lattice_width(square()).width));
  });
  c.push_back([] {
    return item("square: L", "3", std::to_string(minkowski_length(square(), 2).length));
  });
  c.push_back([] {
    auto r = rational_minkowski_length(square(), 2);
    return item("square: lambda", "10/3",
                to_string(r.lambdas.back()) + (r.certification == Certification::Certified ? "" : "?"));
  });
  c.push_back([] {
    return item("square: 2 Vol / w", "10/3", to_string(polygon_upper_bound(square())));
  });
  c.push_back([] {
    auto r = period(square());
    return item("square: period", "3", r.period ? std::to_string(*r.period) : r.note);
  });
  c.push_back([] {
    std::vector<Integer> want;
    for (Integer t = 1; t <= 9; ++t) want.push_back(10 * (t / 3) + 3 * (t % 3));
    return item("square: L(tP) for t=1..9", list_text(want), list_text(table_values(square(), 9)));
  });
  c.push_back([] {
    auto fit = fit_quasilinear(square(), 9);
    return item("square: fitted constants", "k=3 slope=10/3 c=[0,3,6]",
                fit.function ? "k=" + std::to_string(fit.function->period) +
                                   " slope=" + to_string(fit.function->slope) +
                                   " c=" + list_text(fit.function->constants)
                             : fit.note);
  });
  c.push_back([] {
    auto r = rational_minkowski_length(square(), 1);
    return item("square: L_1 = floor(lambda_1)", "2 = floor(5/2)",
                std::to_string(minkowski_length(square(), 1).length) + " = floor(" +
                    to_string(r.lambdas.front()) + ")");
  });
  c.push_back([] {
    auto r = rational_minkowski_length(doubled(), 2);
    const Integer l = minkowski_length(doubled(), 2).length;
    return item("2Q: lambda, L, gap", "68/5, 12, 8/5",
                to_string(r.lambdas.back()) + (r.certification == Certification::Certified ? "" : "?") +
                    ", " + std::to_string(l) + ", " + to_string(r.lambdas.back() - l));
  });
  c.push_back([] {
    const auto u = make({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto prof = length_profile(u);
    auto r = rational_minkowski_length(u, 2);
    return item("unit square: L_1, L_2, lambda", "1, 2, 2",
                std::to_string(prof.values[0]) + ", " + std::to_string(prof.values[1]) + ", " +
                    to_string(r.lambdas.back()));
  });
  c.push_back([] {
    const auto u = make({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    return item("unit square: s_v for v=(2,1)", "1/2",
                to_string(directional_length(u, LatticePoint{2, 1})));
  });
  c.push_back([] {
    const auto pt = make({{3, 1}});
    return item("point: L, lambda", "0, 0",
                std::to_string(minkowski_length(pt, 2).length) + ", " +
                    to_string(rational_minkowski_length(pt, 2).lambdas.back()));
  });
  c.push_back([] {
    return item("T_3: s_v for v=(0,1)", "8/3", to_string(directional_length(triangle(3), LatticePoint{0, 1})));
  });
  c.push_back([] {
    return item("T_3: 2 Vol / w is tight", "8/3 = 8/3",
                to_string(polygon_upper_bound(triangle(3))) + " = " +
                    to_string(rational_minkowski_length(triangle(3), 2).lambdas.back()));
  });
  c.push_back([] {
    return item("T_2: dilate table to 4", "[1,3,4,6]", list_text(table_values(triangle(2), 4)));
  });
  c.push_back([] {
    return item("2-simplex: dilate table to 5", "[1,2,3,4,5]", list_text(table_values(simplex(2), 5)));
  });
  c.push_back([] {
    QuasiLinearFunction f;
    f.period = 3;
    f.slope = 1;
    f.constants = {0, 4, 4};
    return item("3 floor(t/3) + 4 at t=5", "7", std::to_string(evaluate(f, 5)));
  });
  return c;
}

}  // namespace

std::vector<VerifyItem> verify_corpus(unsigned threads) {
  const auto checks = corpus();
  return parallel_map(checks.size(), threads, [&](std::size_t i) {
    try {
      return checks[i]();
    } catch (const std::exception& e) {
      return VerifyItem{"item " + std::to_string(i), "no error", e.what(), false};
    }
  });
}

Json verify_json(const std::vector<VerifyItem>& items) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify-paper";
  Json rows = Json::array();
  std::size_t passed = 0;
  for (const auto& it : items) {
    rows.push_back({{"name", it.name}, {"expected", it.expected}, {"got", it.got}, {"pass", it.pass}});
    passed += it.pass;
  }
  j["items"] = rows;
  j["passed"] = passed;
  j["failed"] = items.size() - passed;
  j["all_pass"] = passed == items.size();
  return j;
}

Problem parse_problem(const std::string& name) {
  if (name == "gap") return Problem::Gap;
  if (name == "simplex-diameter") return Problem::SimplexDiameter;
  if (name == "quasilinearity") return Problem::Quasilinearity;
  throw std::invalid_argument("unknown search problem: " + name);
}

namespace {

// Hull of 3..8 uniform points in [0, box]^2, redrawn while degenerate.
LatticePolytope random_polygon(std::mt19937_64& rng, Integer box, std::size_t& redraws) {
  std::uniform_int_distribution<Integer> coord(0, box);
  std::uniform_int_distribution<int> count(3, 8);
  while (true) {
    std::vector<LatticePoint> pts;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) pts.push_back({coord(rng), coord(rng)});
    LatticePolytope p(pts);
    if (p.span_dim() == 2) return p;
    ++redraws;
  }
}

LatticePolytope random_simplex(std::mt19937_64& rng, Integer box, std::size_t d, std::size_t& redraws) {
  std::uniform_int_distribution<Integer> coord(0, box);
  while (true) {
    std::vector<LatticePoint> pts(d + 1, LatticePoint(d));
    for (auto& p : pts) {
      for (auto& x : p) x = coord(rng);
    }
    LatticePolytope p(pts);
    if (p.span_dim() == d && p.vertices().size() == d + 1) return p;
    ++redraws;
  }
}

struct Outcome {
  Json record;
  bool skipped = false;
  bool finding = false;
  std::optional<Rational> gap;
};

Outcome evaluate_instance(Problem problem, const LatticePolytope& p) {
  Outcome out;
  out.record["vertices"] = p.vertices();
  const std::size_t d = p.ambient_dim();
  try {
    switch (problem) {
      case Problem::Gap: {
        auto lam = rational_minkowski_length(p, d);
        if (lam.certification != Certification::Certified) {
          out.skipped = true;
          out.record["skipped"] = "rational length not certified";
          break;
        }
        const Integer l = minkowski_length(p, d).length;
        const Rational gap = lam.lambdas.back() - l;
        out.record["lambda"] = rational_json(lam.lambdas.back());
        out.record["L"] = l;
        out.record["gap"] = rational_json(gap);
        out.gap = gap;
        out.finding = d == 2 && gap >= 4;
        break;
      }
      case Problem::SimplexDiameter: {
        const Integer l = minkowski_length(p, d).length;
        const Integer ell = lattice_diameter(p);
        out.record["L"] = l;
        out.record["lattice_diameter"] = ell;
        out.finding = l != ell;
        break;
      }
      case Problem::Quasilinearity: {
        auto fit = fit_quasilinear(p);
        if (!fit.function) {
          out.skipped = true;
          out.record["skipped"] = fit.note;
          break;
        }
        const auto& f = *fit.function;
        out.record["period"] = f.period;
        out.record["slope"] = rational_json(f.slope);
        out.record["constants"] = f.constants;
        out.record["status"] = to_string(f.status);
        out.record["matches_from_start"] = f.matches_from_start;
        out.finding = !f.matches_from_start;
        break;
      }
    }
  } catch (const ResourceCapExceeded& e) {
    out.skipped = true;
    out.record["skipped"] = std::string("resource cap: ") + e.what();
  }
  if (out.finding) out.record["finding"] = true;
  return out;
}

}  // namespace

Json search(const SearchSettings& s) {
  if (s.box < 1) throw std::invalid_argument("--box must be positive");
  if (s.problem == Problem::SimplexDiameter && (s.dim < 2 || s.dim > 3)) {
    throw std::invalid_argument("--dim must be 2 or 3");
  }
  std::mt19937_64 rng(s.seed);
  std::size_t redraws = 0;
  std::vector<LatticePolytope> instances;
  // The gap run starts from the known large-gap square.
  if (s.problem == Problem::Gap && s.budget > 0) {
    instances.push_back(LatticePolytope({{2, 0}, {10, 2}, {8, 10}, {0, 8}}));
  }
  while (instances.size() < s.budget) {
    instances.push_back(s.problem == Problem::SimplexDiameter
                            ? random_simplex(rng, s.box, s.dim, redraws)
                            : random_polygon(rng, s.box, redraws));
  }
  auto outcomes = parallel_map(instances.size(), s.threads, [&](std::size_t i) {
    return evaluate_instance(s.problem, instances[i]);
  });

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "search";
  j["problem"] = s.problem == Problem::Gap               ? "gap"
                 : s.problem == Problem::SimplexDiameter ? "simplex-diameter"
                                                         : "quasilinearity";
  j["seed"] = s.seed;
  j["budget"] = s.budget;
  j["box"] = s.box;
  if (s.problem == Problem::SimplexDiameter) j["dim"] = s.dim;
  Json records = Json::array();
  std::optional<Rational> sup;
  std::size_t skipped = 0, findings = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    Json r;
    r["index"] = i;
    r.update(outcomes[i].record);
    if (outcomes[i].gap && (!sup || *outcomes[i].gap > *sup)) sup = outcomes[i].gap;
    if (s.problem == Problem::Gap) r["supremum"] = sup ? rational_json(*sup) : Json(nullptr);
    skipped += outcomes[i].skipped;
    findings += outcomes[i].finding;
    records.push_back(r);
  }
  j["records"] = records;
  j["degenerate_redraws"] = redraws;
  j["skipped"] = skipped;
  j["findings"] = findings;
  if (s.problem == Problem::Gap) j["supremum"] = sup ? rational_json(*sup) : Json(nullptr);
  return j;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && !all_scalars(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    std::string text = "[";
    for (std::size_t i = 0; i < j.size(); ++i) text += (i ? ", " : "") + scalar_text(j[i]);
    out << path << ": " << text << "]\n";
  } else {
    out << path << ": " << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace minklen::report
