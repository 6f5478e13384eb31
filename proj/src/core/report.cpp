#include "magicpath/report.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <map>
#include <set>

#include "magicpath/error.hpp"

namespace magicpath {

namespace {

struct MarkdownWriter {
  std::string& out;

  template <class... Args>
  void operator()(fmt::format_string<Args...> f, Args&&... args) {
    out += fmt::format(f, std::forward<Args>(args)...);
    out += '\n';
  }
};

}  // namespace

void HistogramSpec::validate() const {
  if (!(bin_width > 0.0)) throw ValidationError("histogram bin width must be positive");
  if (!(range_start < range_end)) throw ValidationError("histogram range start must be below range end");
}

std::vector<HistogramBin> histogram(std::span<const double> values, const HistogramSpec& spec) {
  spec.validate();
  const auto nbins = static_cast<std::size_t>(std::ceil((spec.range_end - spec.range_start) / spec.bin_width - 1e-9));
  std::vector<HistogramBin> bins(nbins);
  for (std::size_t i = 0; i < nbins; ++i) {
    bins[i].start = spec.range_start + static_cast<double>(i) * spec.bin_width;
    bins[i].end = std::min(spec.range_start + static_cast<double>(i + 1) * spec.bin_width, spec.range_end);
  }
  for (double v : values) {
    if (v < spec.range_start || v >= spec.range_end)
      throw ValidationError(fmt::format("value {:.4f} outside histogram range [{}, {})", v, spec.range_start,
                                        spec.range_end));
    auto i = static_cast<std::size_t>((v - spec.range_start) / spec.bin_width);
    i = std::min(i, nbins - 1);
    // Guard against rounding at bin edges.
    while (i > 0 && v < bins[i].start) --i;
    while (i + 1 < nbins && v >= bins[i].end) ++i;
    ++bins[i].count;
  }
  return bins;
}

std::string format_histogram_csv(const std::vector<HistogramBin>& bins) {
  std::string out = "bin_start,bin_end,count\n";
  for (const auto& b : bins) out += fmt::format("{},{},{}\n", b.start, b.end, b.count);
  return out;
}

std::vector<GroupCensusRow> group_census(const AnalysisSet& set) {
  std::map<int, GroupCensusRow> rows;
  std::set<int> pandiagonal, associative;
  for (const auto& r : set.records) {
    if (!r.dudeney_group) continue;
    auto& row = rows[*r.dudeney_group];
    row.group_id = *r.dudeney_group;
    ++row.member_count;
    if (r.reflexive) ++row.palindromic;
    if (r.is_pandiagonal) pandiagonal.insert(row.group_id);
    if (r.is_associative) associative.insert(row.group_id);
  }
  std::vector<GroupCensusRow> out;
  for (auto& [id, row] : rows) {
    if (pandiagonal.size() == 1 && pandiagonal.contains(id))
      row.anchor = "pandiagonal";
    else if (associative.size() == 1 && associative.contains(id))
      row.anchor = "associative";
    else if (row.member_count == 304)
      row.anchor = "size304";
    else
      row.anchor = "derived";
    out.push_back(row);
  }
  return out;
}

std::string format_group_census_csv(const std::vector<GroupCensusRow>& rows) {
  std::string out = "group_id,member_count,anchor\n";
  for (const auto& r : rows) out += fmt::format("{},{},{}\n", r.group_id, r.member_count, r.anchor);
  return out;
}

std::vector<SweepRow> sweep_local_threshold(const AnalysisSet& set) {
  std::vector<SweepRow> rows;
  for (int len = 2; len <= 15; ++len) {
    ClassifierParams p = set.params;
    p.local_min_length = len;
    SweepRow row;
    row.local_min_length = len;
    for (const auto& r : set.records) {
      const SymmetryRecord rec = classify(r.legs_squared, p);
      if (rec.reflexive) continue;
      ++row.non_reflexive;
      switch (rec.assigned_class) {
        case SymmetryClass::Local: ++row.local; break;
        case SymmetryClass::Periodic: ++row.periodic; break;
        case SymmetryClass::Partial: ++row.partial; break;
        default: ++row.other; break;
      }
    }
    row.matches_target = row.local == kLocalSymmetryTarget;
    rows.push_back(row);
  }
  auto gap = [](const SweepRow& r) {
    return r.local > kLocalSymmetryTarget ? r.local - kLocalSymmetryTarget : kLocalSymmetryTarget - r.local;
  };
  const auto best = std::min_element(rows.begin(), rows.end(), [&](auto& a, auto& b) { return gap(a) < gap(b); });
  for (auto& r : rows) r.closest = gap(r) == gap(*best);
  return rows;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "local_min_length,non_reflexive,local,periodic,partial,other,matches_target,closest\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.local_min_length, r.non_reflexive, r.local, r.periodic,
                       r.partial, r.other, r.matches_target ? 1 : 0, r.closest ? 1 : 0);
  return out;
}

ReportFiles build_report(const AnalysisSet& set, const HistogramSpec& spec) {
  if (set.records.empty()) throw ValidationError("analysis holds no records");
  const auto legs = set.leg_sequences();
  const std::size_t n = set.records.size();
  const CatalogExtremes ex = catalog_extremes(legs);
  const DuplicateCensus dup = duplicate_census(legs);

  std::vector<double> totals;
  for (const auto& r : set.records) totals.push_back(r.total);

  ReportFiles files;
  files.histogram_csv = format_histogram_csv(histogram(totals, spec));

  std::size_t reflexive = 0, few_mismatch = 0;
  std::map<SymmetryClass, std::size_t> classes;
  for (const auto& r : set.records) {
    if (r.reflexive) ++reflexive;
    else if (r.mismatch_pairs <= set.params.partial_max_mismatch) ++few_mismatch;
    ++classes[r.assigned_class];
  }

  std::string md;
  MarkdownWriter line{md};
  line("# magicpath report");
  line("");
  line("Records are in catalog order: ascending row-major lexicographic order of the");
  line("Frenicle-canonical squares. This indexing is a convention of this tool.");
  line("");
  line("- order: {}", set.order);
  line("- squares: {}", n);
  line("");
  line("## Total distance");
  line("");
  line("- min total: {:.2f} (indices {})", ex.min_total, fmt::join(ex.argmin, ", "));
  line("- max total: {:.2f} (indices {})", ex.max_total, fmt::join(ex.argmax, ", "));
  line("- mean total: {:.2f}", ex.mean_total);
  line("- per-city average, shortest path: {:.2f}", ex.min_per_city);
  line("- per-city average, longest path: {:.2f}", ex.max_per_city);
  line("- histogram: width {}, range [{}, {})", spec.bin_width, spec.range_start, spec.range_end);
  line("");
  line("## Reflexive symmetry");
  line("");
  line("- reflexive: {} / {}", reflexive, n);
  line("- non-reflexive: {}", n - reflexive);
  line("- non-reflexive with mismatch pairs <= {}: {} / {}", set.params.partial_max_mismatch, few_mismatch,
       n - reflexive);
  line("");
  line("## Distance pattern uniqueness");
  line("");
  line("- distinct patterns: {}, repeated: {}", dup.distinct_count, dup.repeated_pattern_count);
  line("- surplus duplicates: {}", dup.surplus_count);
  std::vector<std::string> mult;
  for (auto [m, c] : dup.multiplicity_histogram) mult.push_back(fmt::format("{}x{}", m, c));
  line("- multiplicity histogram (multiplicity x patterns): {}", fmt::join(mult, ", "));

  if (set.order == 4) {
    const auto census = group_census(set);
    files.group_census_csv = format_group_census_csv(census);
    line("");
    line("## Dudeney groups");
    line("");
    line("| group | members | anchor | palindromic |");
    line("|---|---|---|---|");
    std::size_t in_3_6 = 0, reflexive_in_3_6 = 0;
    for (const auto& g : census) {
      line("| {} | {} | {} | {} |", g.group_id, g.member_count, g.anchor, g.palindromic);
      if (g.group_id == 3 || g.group_id == 6) {
        in_3_6 += g.member_count;
        reflexive_in_3_6 += g.palindromic;
      }
    }
    line("");
    for (const auto& g : census)
      if (g.group_id == 3 || g.group_id == 6)
        line("- group {} palindromic: {} / {} ({})", g.group_id, g.palindromic, g.member_count,
             g.palindromic == g.member_count ? "all" : "NOT all");
    line("- reflexive squares outside groups 3 and 6: {}", reflexive - reflexive_in_3_6);
    line("- squares in groups 3 and 6: {}", in_3_6);
  }

  line("");
  line("## Symmetry classes");
  line("");
  line("Parameters: local_min_length={}, partial_max_mismatch={}", set.params.local_min_length,
       set.params.partial_max_mismatch);
  line("");
  for (auto c : {SymmetryClass::Reflexive, SymmetryClass::Local, SymmetryClass::Periodic, SymmetryClass::Partial,
                 SymmetryClass::Other})
    line("- {}: {}", to_string(c), classes[c]);

  const auto sweep = sweep_local_threshold(set);
  line("");
  line("## Local symmetry calibration");
  line("");
  line("Target: {} local-symmetry patterns among the non-reflexive ones.", kLocalSymmetryTarget);
  line("");
  line("| local_min_length | local | periodic | partial | other |");
  line("|---|---|---|---|---|");
  for (const auto& r : sweep)
    line("| {}{} | {} | {} | {} | {} |", r.local_min_length, r.matches_target ? " (match)" : (r.closest ? " (closest)" : ""),
         r.local, r.periodic, r.partial, r.other);
  const bool any_match = std::ranges::any_of(sweep, [](const SweepRow& r) { return r.matches_target; });
  std::vector<std::string> closest;
  for (const auto& r : sweep)
    if (r.closest) closest.push_back(fmt::format("local_min_length={} gives {}", r.local_min_length, r.local));
  line("");
  line("- exact match: {}", any_match ? "yes" : "no");
  line("- closest: {}", fmt::join(closest, "; "));

  files.markdown = std::move(md);
  return files;
}

}  // namespace magicpath
