#include "minklen/quasilinear.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "minklen/length.hpp"
#include "minklen/rational_length.hpp"

namespace minklen {

std::string to_string(DilateSource s) {
  switch (s) {
    case DilateSource::Fastpath:
      return "fastpath";
    case DilateSource::Search:
      return "search";
    case DilateSource::Bound:
      return "bound";
  }
  return "unknown";
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::ProvenStable:
      return "proven-stable";
    case Stability::EmpiricallyStable:
      return "empirically-stable";
    case Stability::Unsettled:
      return "unsettled";
  }
  return "unknown";
}

std::string witness_digest(const Zonotope& z) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_string(z)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DilateTable dilate_table(const LatticePolytope& p, Integer t_max, const DilateOptions& options) {
  if (t_max < 1) throw std::invalid_argument("t_max must be positive");
  const std::size_t d = p.ambient_dim();
  const std::size_t n = options.n == 0 ? d : options.n;
  if (n > d) throw std::invalid_argument("n must lie in 1..d");
  DilateTable table;
  table.n = n;

  for (Integer t = 1; t <= t_max; ++t) {
    const LatticePolytope tp = dilate(p, t);
    // Superadditivity: witnesses for s and t - s add up to one for t.
    std::optional<Zonotope> seed;
    for (Integer s = 1; 2 * s <= t; ++s) {
      const auto& a = table.entries[s - 1];
      const auto& b = table.entries[t - s - 1];
      if (a.witness.dim() != d || b.witness.dim() != d) continue;
      if (!seed || a.value + b.value > seed->length()) seed = minkowski_sum(a.witness, b.witness);
    }
    if (options.period && options.period_witness && t % *options.period == 0) {
      Zonotope scaled = options.period_witness->scaled(Rational(t / *options.period));
      if (!seed || scaled.length() > seed->length()) seed = scaled;
    }
    std::optional<Integer> ub;
    if (options.lambda) ub = floor_to_integer(*options.lambda * t);

    DilateEntry e;
    e.t = t;
    if (seed && ub && seed->length() == *ub) {
      e.value = *ub;
      e.witness = *seed;
      e.source = DilateSource::Bound;
    } else {
      LengthOptions lo;
      lo.upper_bound = ub;
      lo.seed = seed;
      lo.cap_lattice_points = options.cap_lattice_points;
      try {
        auto r = minkowski_length(tp, n, lo);
        e.value = r.length;
        e.witness = r.witness;
        e.source = r.method == LengthMethod::Fastpath ? DilateSource::Fastpath : DilateSource::Search;
      } catch (const ResourceCapExceeded& ex) {
        table.truncated = true;
        table.truncation_note = "stopped at t=" + std::to_string(t) + ": " + ex.what();
        break;
      }
    }
    e.digest = witness_digest(e.witness);
    table.entries.push_back(std::move(e));
  }
  return table;
}

Integer evaluate(const QuasiLinearFunction& f, Integer t) {
  const Integer k = f.period;
  const Integer step = numerator_int(f.slope * k);
  const Integer r = ((t % k) + k) % k;
  return step * ((t - r) / k) + f.constants[r];
}

QuasiLinearFunction fit_quasilinear(const DilateTable& table, const Rational& lambda,
                                    Integer period) {
  const Integer k = period;
  if (k < 1) throw std::invalid_argument("period must be positive");
  if (denominator_int(lambda * k) != 1) throw std::invalid_argument("k lambda must be an integer");
  const Integer horizon = static_cast<Integer>(table.entries.size());
  if (horizon < 2 * k) throw std::invalid_argument("horizon must be at least twice the period");

  QuasiLinearFunction f;
  f.period = k;
  f.slope = lambda;
  f.horizon = horizon;
  f.constants.assign(k, 0);
  f.residue_status.assign(k, Stability::ProvenStable);
  f.stabilization = 1;
  const Integer step = numerator_int(lambda * k);

  for (Integer r = 0; r < k; ++r) {
    std::vector<std::pair<Integer, Integer>> obs;  // (t, c_r(t))
    for (Integer t = r == 0 ? k : r; t <= horizon; t += k) {
      obs.emplace_back(t, table.entries[t - 1].value - step * (t / k));
    }
    for (std::size_t i = 1; i < obs.size(); ++i) {
      if (obs[i].second < obs[i - 1].second) {
        throw std::logic_error("residue constants decrease, superadditivity violated");
      }
    }
    const Integer c = obs.back().second;
    const Integer ceiling = floor_to_integer(lambda * r);
    if (c > ceiling) throw std::logic_error("residue constant above r lambda");
    std::size_t first = obs.size() - 1;
    while (first > 0 && obs[first - 1].second == c) --first;
    f.constants[r] = c;
    if (c == ceiling) {
      f.residue_status[r] = Stability::ProvenStable;
    } else if (obs.size() - first >= 2) {
      f.residue_status[r] = Stability::EmpiricallyStable;
    } else {
      f.residue_status[r] = Stability::Unsettled;
    }
    f.stabilization = std::max(f.stabilization, obs[first].first);
    f.status = std::max(f.status, f.residue_status[r]);
  }
  f.matches_from_start = true;
  for (const auto& e : table.entries) {
    if (evaluate(f, e.t) != e.value) f.matches_from_start = false;
  }
  return f;
}

QuasiLinearFit fit_quasilinear(const LatticePolytope& p, Integer horizon, std::size_t n,
                              std::size_t cap_lattice_points) {
  if (n == 0) n = p.ambient_dim();
  QuasiLinearFit fit;
  const auto lam = rational_minkowski_length(p, n);
  if (lam.status.back() != Certification::Certified) {
    fit.note = "rational length not certified";
    fit.table = dilate_table(p, horizon > 0 ? horizon : 12, {n, std::nullopt, std::nullopt,
                                                             std::nullopt, cap_lattice_points});
    return fit;
  }
  const Rational lambda = lam.lambdas.back();
  const PeriodResult per = period(p, lambda, lam.witness, 64, n);
  DilateOptions opts;
  opts.n = n;
  opts.lambda = lambda;
  opts.cap_lattice_points = cap_lattice_points;
  if (!per.period) {
    fit.note = per.note;
    fit.table = dilate_table(p, horizon > 0 ? horizon : 12, opts);
    return fit;
  }
  const Integer k = *per.period;
  if (horizon == 0) horizon = std::max<Integer>(4 * k, 12);
  if (horizon < 2 * k) throw std::invalid_argument("horizon must be at least twice the period");
  opts.period = k;
  opts.period_witness = per.witness;
  fit.table = dilate_table(p, horizon, opts);
  if (static_cast<Integer>(fit.table.entries.size()) < 2 * k) {
    fit.note = "table truncated below twice the period";
    return fit;
  }
  fit.function = fit_quasilinear(fit.table, lambda, k);
  return fit;
}

}  // namespace minklen
