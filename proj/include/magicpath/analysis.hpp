#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "magicpath/square.hpp"
#include "magicpath/symmetry.hpp"
#include "magicpath/trajectory.hpp"

namespace magicpath {

/// One row of the per-square analysis file.
struct AnalysisRecord {
  std::size_t index = 0;  // 1-based position in the input list
  std::vector<int> cells;
  std::vector<int> legs_squared;
  double total = 0.0;
  double per_city_average = 0.0;
  bool reflexive = false;
  int mismatch_pairs = 0;
  int longest_local_palindrome_length = 0;
  std::optional<int> period;
  SymmetryClass assigned_class = SymmetryClass::Other;
  std::optional<int> dudeney_group;  // order 4 only
  std::size_t duplicate_group_id = 0;
  bool is_associative = false;
  bool is_pandiagonal = false;
};

struct AnalysisSet {
  int order = 4;
  ClassifierParams params;
  std::vector<AnalysisRecord> records;

  std::vector<LegSequence> leg_sequences() const;
};

// Runs trajectory, symmetry and (order 4) Dudeney analysis over `squares`.
// Dudeney ids come from the full enumerated catalog, so `squares` may be any
// subset in any orientation. Output is identical for every thread count.
AnalysisSet analyze(std::span<const Square> squares, const ClassifierParams& params = {},
                    unsigned threads = 1);

// Throws ValidationError if a record contradicts itself or its cells (legs,
// totals, reflexive flag and symmetry metrics are recomputed and compared).
void check_consistency(const AnalysisRecord& rec, int order, const ClassifierParams& params);

}  // namespace magicpath
