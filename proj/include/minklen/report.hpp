#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "minklen/polytope.hpp"
#include "minklen/zonotope.hpp"

namespace minklen::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exact "p/q" text ("p" when integral).
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json zonotope_json(const Zonotope& z);
Zonotope zonotope_from_json(const Json& j);
Json polytope_json(const LatticePolytope& p);
/// Accepts {"vertices": [[...], ...]}. Throws std::invalid_argument otherwise.
LatticePolytope polytope_from_json(const Json& j);
LatticePolytope parse_polytope(const std::string& text);
/// FNV-1a over the pruned vertex list.
std::string polytope_digest(const LatticePolytope& p);

struct Settings {
  std::size_t n = 0;  // 0 means the ambient dimension
  std::int64_t t_max = 12;
  std::int64_t horizon = 0;
  std::size_t cap_lattice_points = 20000;
  unsigned threads = 1;
  bool with_period = true;
  bool timing = false;
};

Json invariants(const LatticePolytope& p, const Settings& s);
Json table_and_fit(const LatticePolytope& p, const Settings& s);

struct VerifyItem {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// The built-in corpus of worked examples.
std::vector<VerifyItem> verify_corpus(unsigned threads);
Json verify_json(const std::vector<VerifyItem>& items);

enum class Problem { Gap, SimplexDiameter, Quasilinearity };
Problem parse_problem(const std::string& name);

struct SearchSettings {
  Problem problem = Problem::Gap;
  std::uint64_t seed = 1;
  std::size_t budget = 20;
  std::int64_t box = 6;
  std::size_t dim = 3;  // for simplex-diameter
  unsigned threads = 1;
};

/// Random instances drawn sequentially from the seed, evaluated in
/// parallel, reported in order. `findings` counts candidate counterexamples.
Json search(const SearchSettings& s);

/// Flat "path: value" rendering of a report.
std::string render_table(const Json& j);

}  // namespace minklen::report
