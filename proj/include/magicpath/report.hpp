#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magicpath/analysis.hpp"

namespace magicpath {

struct HistogramSpec {
  double bin_width = 1.0;
  double range_start = 20.0;
  double range_end = 43.0;

  void validate() const;
};

struct HistogramBin {
  double start = 0.0;
  double end = 0.0;  // right-open
  std::size_t count = 0;
};

// Throws ValidationError when a value falls outside [range_start, range_end).
std::vector<HistogramBin> histogram(std::span<const double> values, const HistogramSpec& spec);

std::string format_histogram_csv(const std::vector<HistogramBin>& bins);

struct GroupCensusRow {
  int group_id = 0;
  std::size_t member_count = 0;
  std::string anchor;
  std::size_t palindromic = 0;
};

// Group sizes and anchor labels, recomputed from the analysis records alone.
std::vector<GroupCensusRow> group_census(const AnalysisSet& set);

std::string format_group_census_csv(const std::vector<GroupCensusRow>& rows);

struct SweepRow {
  int local_min_length = 0;
  std::size_t non_reflexive = 0;
  std::size_t local = 0;
  std::size_t periodic = 0;
  std::size_t partial = 0;
  std::size_t other = 0;
  bool matches_target = false;
  bool closest = false;
};

inline constexpr std::size_t kLocalSymmetryTarget = 252;

// Reclassifies the non-reflexive records for every local_min_length in 2..15,
// keeping partial_max_mismatch from the analysis.
std::vector<SweepRow> sweep_local_threshold(const AnalysisSet& set);

std::string format_sweep_csv(const std::vector<SweepRow>& rows);

struct ReportFiles {
  std::string markdown;
  std::string histogram_csv;
  std::string group_census_csv;  // empty for order 3
};

ReportFiles build_report(const AnalysisSet& set, const HistogramSpec& spec);

}  // namespace magicpath
