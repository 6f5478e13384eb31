// Acceptance gate: one PASS/FAIL line per criterion. Soft criteria print
// SOFT-PASS / SOFT-FAIL and never change the exit status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "../oracles/oracles.hpp"
#include "magicpath/analysis.hpp"
#include "magicpath/dudeney.hpp"
#include "magicpath/enumerator.hpp"
#include "magicpath/io.hpp"
#include "magicpath/report.hpp"
#include "magicpath/symmetry.hpp"
#include "magicpath/trajectory.hpp"

using namespace magicpath;

namespace {

int hard_failures = 0;

void verdict(int id, bool ok, const std::string& detail, bool soft = false) {
  const char* tag = soft ? (ok ? "SOFT-PASS" : "SOFT-FAIL") : (ok ? "PASS" : "FAIL");
  fmt::print("[{}] criterion {:>2}: {}\n", tag, id, detail);
  if (!ok && !soft) ++hard_failures;
}

bool near(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

oracle::Grid grid(const Square& s) { return {s.cells().begin(), s.cells().end()}; }

double oracle_total(const Square& s) {
  double t = 0.0;
  for (int l : oracle::legs(grid(s), s.order())) t += std::sqrt(static_cast<double>(l));
  return t;
}

struct Pipeline {
  std::string squares, analysis, census, report, histogram, sweep;
  bool operator==(const Pipeline&) const = default;
};

Pipeline run_pipeline(unsigned threads) {
  const auto catalog = enumerate_canonical(4, threads);
  const auto set = analyze(catalog.squares(), {}, threads);
  const auto files = build_report(set, {});
  return {format_squares(4, catalog.squares()), format_analysis(set), files.group_census_csv, files.markdown,
          files.histogram_csv, format_sweep_csv(sweep_local_threshold(set))};
}

}  // namespace

int main() {
  // 1. Enumeration counts and single-threaded runtime.
  const auto t0 = std::chrono::steady_clock::now();
  const CanonicalCatalog catalog = enumerate_canonical(4, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const CanonicalCatalog catalog3 = enumerate_canonical(3, 1);
  verdict(1, catalog3.size() == 1 && catalog.size() == 880 && seconds < 30.0,
          fmt::format("order 3: {} canonical, order 4: {} canonical, single-threaded {:.2f} s (limit 30 s)",
                      catalog3.size(), catalog.size(), seconds));

  // 2. Lo Shu total against its closed form.
  {
    const double closed = 4 * std::sqrt(5.0) + 2 * std::sqrt(2.0) + 2;
    const double total = trajectory_stats(leg_squares(catalog3.at(1))).total_distance;
    const bool ok = std::abs(total - closed) <= 1e-9 && fmt::format("{:.2f}", total) == "13.77";
    verdict(2, ok, fmt::format("total {:.10f}, closed form 4*sqrt5+2*sqrt2+2 = {:.10f}, rounds to {:.2f}", total,
                               closed, total));
  }

  const CatalogExtremes ex = catalog_extremes(catalog);

  // 3. Order-4 totals, cross-checked against oracle leg sums.
  {
    double mn = 1e300, mx = 0.0, sum = 0.0;
    for (const Square& s : catalog) {
      const double t = oracle_total(s);
      mn = std::min(mn, t);
      mx = std::max(mx, t);
      sum += t;
    }
    const double mean = sum / static_cast<double>(catalog.size());
    const bool agree = near(mn, ex.min_total, 1e-9) && near(mx, ex.max_total, 1e-9) && near(mean, ex.mean_total, 1e-9);
    const bool ok = agree && near(ex.min_total, 20.31, 0.01) && near(ex.max_total, 42.76, 0.01) &&
                    near(ex.mean_total, 33.94, 0.01);
    verdict(3, ok, fmt::format("min {:.6f} (20.31), max {:.6f} (42.76), mean {:.6f} (33.94), tol 0.01, oracle {}",
                               ex.min_total, ex.max_total, ex.mean_total, agree ? "agrees" : "DISAGREES"));
  }

  // 4. Per-city averages of the extreme squares.
  {
    const double lo = trajectory_stats(leg_squares(catalog.at(ex.argmin.front()))).per_city_average;
    const double hi = trajectory_stats(leg_squares(catalog.at(ex.argmax.front()))).per_city_average;
    const bool ok = near(lo, 1.35, 0.01) && near(hi, 2.85, 0.01) && near(lo, ex.min_total / 15, 1e-12);
    verdict(4, ok, fmt::format("shortest-path square #{} {:.6f} (1.35), longest-path square #{} {:.6f} (2.85)",
                               ex.argmin.front(), lo, ex.argmax.front(), hi));
  }

  // 5. Reflexive census, oracle legs vs library.
  std::vector<LegSequence> legs;
  {
    std::size_t oracle_pal = 0, lib_pal = 0;
    for (const Square& s : catalog) {
      auto l = oracle::legs(grid(s), 4);
      oracle_pal += std::equal(l.begin(), l.end(), l.rbegin());
      legs.push_back(leg_squares(s));
      lib_pal += is_palindrome(legs.back());
    }
    const bool ok = oracle_pal == 414 && lib_pal == 414 && catalog.size() - lib_pal == 466;
    verdict(5, ok, fmt::format("palindromic {} (oracle {}), non-palindromic {}", lib_pal, oracle_pal,
                               catalog.size() - lib_pal));
  }

  // 6. Duplicate census.
  {
    const DuplicateCensus c = duplicate_census(legs);
    std::map<std::vector<int>, std::size_t> counts;
    for (const Square& s : catalog) ++counts[oracle::legs(grid(s), 4)];
    std::size_t oracle_repeated = 0, sum = 0;
    for (const auto& [seq, k] : counts) {
      oracle_repeated += k >= 2;
      sum += k;
    }
    std::size_t hist_sum = 0;
    for (const auto& [m, k] : c.multiplicity_histogram) hist_sum += m * k;
    const bool ok = c.distinct_count == 768 && counts.size() == 768 && c.repeated_pattern_count == 112 &&
                    oracle_repeated == c.repeated_pattern_count && sum == 880 && hist_sum == 880;
    std::vector<std::string> hist;
    for (const auto& [m, k] : c.multiplicity_histogram) hist.push_back(fmt::format("{}x{}", k, m));
    verdict(6, ok,
            fmt::format("distinct {} (768), with multiplicity >= 2: {} (112 required), sum of multiplicities {}; "
                        "surplus duplicates {}; multiplicity histogram [{}]",
                        c.distinct_count, c.repeated_pattern_count, hist_sum, c.surplus_count,
                        fmt::join(hist, ", ")));
  }

  // 7. Dudeney anchors.
  {
    const GroupTable table = build_group_table(catalog);
    std::size_t size304 = 0;
    for (const auto& g : table.groups()) size304 += g.member_count == 304;
    std::size_t assoc = 0, g6 = 0, non_pal = 0;
    for (const Square& s : catalog) {
      const int g = classify_group(s, table);
      if (g != 3 && g != 6) continue;
      (g == 3 ? assoc : g6) += 1;
      if (g == 3 && !is_associative(s)) ++non_pal;  // wrong anchor counts as a failure too
      const auto l = oracle::legs(grid(s), 4);
      if (!std::equal(l.begin(), l.end(), l.rbegin())) ++non_pal;
    }
    const bool ok = table.group(3).anchor == GroupAnchor::Associative && assoc == 48 && size304 == 1 &&
                    table.group(6).anchor == GroupAnchor::Size304 && g6 == 304 && non_pal == 0;
    verdict(7, ok, fmt::format("{} classes; associative class {} members, size-304 classes {}, group 6 {} members, "
                               "non-palindromic members {}",
                               table.groups().size(), assoc, size304, g6, non_pal));
  }

  // 8. Exhaustive property suite.
  {
    std::size_t violations = 0;
    std::set<std::vector<int>> canon;
    for (const Square& s : catalog) canon.insert(grid(s));
    for (const Square& s : catalog) {
      const auto l = leg_squares(s);
      const Square fc = frenicle_canonical(s);
      if (fc != s || frenicle_canonical(fc) != fc) ++violations;
      for (Transform t : kAllTransforms) {
        const Square v = apply_transform(s, t);
        if (leg_squares(v) != l) ++violations;
        if (frenicle_canonical(v) != s) ++violations;
        if (oracle::least_variant(grid(v), 4) != grid(s)) ++violations;
      }
      const Square c = complement(s);
      if (leg_squares(c) != l.reversed()) ++violations;
      if (!canon.contains(oracle::least_variant(grid(c), 4))) ++violations;
    }
    verdict(8, violations == 0,
            fmt::format("880 squares x 8 transforms: D4 leg invariance, complement reversal, canonical idempotence, "
                        "orbit collapse, complement closure; {} violations",
                        violations));
  }

  // 9. Order-3 oracle equivalence.
  {
    const auto brute = oracle::brute_force_order3();
    std::set<oracle::Grid> brute_canon;
    for (const auto& g : brute) brute_canon.insert(oracle::least_variant(g, 3));
    std::vector<oracle::Grid> all;
    for (const Square& s : enumerate_all(3)) all.push_back(grid(s));
    std::vector<oracle::Grid> sorted_brute(brute);
    std::sort(sorted_brute.begin(), sorted_brute.end());
    const bool ok = brute_canon.size() == 1 && *brute_canon.begin() == grid(catalog3.at(1)) && all.size() == 8 &&
                    all == sorted_brute;
    verdict(9, ok, fmt::format("brute force over 9! grids: {} magic, {} canonical; search orbit {} squares, {}",
                               brute.size(), brute_canon.size(), all.size(), all == sorted_brute ? "equal" : "DIFFERENT"));
  }

  // 10. Soft: local-symmetry threshold sweep and mismatch majority.
  {
    const AnalysisSet set = analyze(catalog.squares(), {}, 1);
    const auto rows = sweep_local_threshold(set);
    std::vector<std::string> locals, closest;
    bool exact = false;
    for (const auto& r : rows) {
      locals.push_back(fmt::format("{}:{}", r.local_min_length, r.local));
      exact = exact || r.matches_target;
      if (r.closest) closest.push_back(fmt::format("localMinLength={} gives {}", r.local_min_length, r.local));
    }
    std::size_t non_reflexive = 0, few = 0;
    for (const auto& r : set.records) {
      if (r.reflexive) continue;
      ++non_reflexive;
      few += r.mismatch_pairs <= 3;
    }
    verdict(10, exact,
            fmt::format("sweep local counts [{}]; target 252 {}; closest: {}", fmt::join(locals, " "),
                        exact ? "reproduced" : "not reproduced", fmt::join(closest, "; ")),
            true);
    verdict(10, 2 * few > non_reflexive,
            fmt::format("mismatch pairs <= 3 for {} / {} non-reflexive squares ({:.1f}%)", few, non_reflexive,
                        100.0 * static_cast<double>(few) / static_cast<double>(non_reflexive)),
            true);
  }

  // 11. Determinism across thread counts.
  {
    const Pipeline a = run_pipeline(1);
    const Pipeline b = run_pipeline(3);
    const Pipeline c = run_pipeline(1);
    verdict(11, a == b && a == c,
            fmt::format("squares, analysis, census, report, histogram and sweep byte-identical across runs with 1, 3 "
                        "and 1 threads: {}",
                        a == b && a == c ? "yes" : "no"));
  }

  fmt::print("{} hard failure(s)\n", hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
