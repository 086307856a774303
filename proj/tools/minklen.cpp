// minklen: Minkowski-length invariants of lattice polytopes.
//
// Exit codes: 0 success, 1 verification mismatch or internal failure,
// 2 malformed input, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "minklen/report.hpp"
#include "minklen/types.hpp"

namespace report = minklen::report;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned default_threads() {
  if (const char* env = std::getenv("MINKLEN_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    std::cerr << "minklen: ignoring MINKLEN_THREADS=" << env << "\n";
  }
  return 1;
}

void emit(const report::Json& j, const std::string& format) {
  if (format == "table") {
    std::cout << report::render_table(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski-length invariants of lattice polytopes"};
  app.require_subcommand(1);

  report::Settings settings;
  settings.threads = default_threads();
  report::SearchSettings search;
  search.threads = settings.threads;
  std::string input, format = "json", problem = "gap";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", settings.threads, "Worker count (default $MINKLEN_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };
  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("file", input, "Polytope JSON {\"vertices\": [[...]]}; stdin when omitted");
    sub->add_option("--n", settings.n, "Profile index n (default: ambient dimension)");
    sub->add_option("--cap-lattice-points", settings.cap_lattice_points,
                    "Lattice-point cap for the branch and bound");
    sub->add_flag("--timing", settings.timing, "Include elapsed milliseconds");
    add_common(sub);
  };

  auto* inv = app.add_subcommand("invariants", "Width, volume, diameters, length profiles, period");
  add_polytope(inv);
  inv->add_flag("!--no-period", settings.with_period, "Skip the period computation");

  auto* table = app.add_subcommand("table", "Dilate table of L(tP) with a quasi-linear fit");
  add_polytope(table);
  table->add_option("--t-max", settings.t_max, "Largest dilation factor");
  table->add_option("--horizon", settings.horizon, "Fit horizon (overrides --t-max)");

  auto* verify = app.add_subcommand("verify-paper", "Run the built-in corpus of worked examples");
  add_common(verify);

  auto* srch = app.add_subcommand("search", "Seeded random search for counterexamples");
  srch->add_option("problem", problem, "gap | simplex-diameter | quasilinearity")
      ->check(CLI::IsMember({"gap", "simplex-diameter", "quasilinearity"}));
  srch->add_option("--seed", search.seed, "Generator seed");
  srch->add_option("--budget", search.budget, "Number of instances");
  srch->add_option("--box", search.box, "Coordinates are drawn from [0, box]")->check(CLI::PositiveNumber);
  srch->add_option("--dim", search.dim, "Simplex dimension for simplex-diameter")
      ->check(CLI::Range(2, 3));
  add_common(srch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*inv || *table) {
      const auto p = report::parse_polytope(read_input(input));
      emit(*inv ? report::invariants(p, settings) : report::table_and_fit(p, settings), format);
      return 0;
    }
    if (*verify) {
      const auto items = report::verify_corpus(settings.threads);
      const auto j = report::verify_json(items);
      emit(j, format);
      return j["all_pass"].get<bool>() ? 0 : 1;
    }
    search.problem = report::parse_problem(problem);
    search.threads = settings.threads;
    const auto j = report::search(search);
    emit(j, format);
    // A planar gap of 4 or more contradicts a proven bound, so it signals a bug.
    if (search.problem == report::Problem::Gap && j["findings"].get<std::size_t>() > 0) return 1;
    return 0;
  } catch (const minklen::ResourceCapExceeded& e) {
    std::cerr << "minklen: resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "minklen: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "minklen: internal error: " << e.what() << "\n";
    return 1;
  }
}
