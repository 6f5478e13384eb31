#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magicpath/trajectory.hpp"

namespace magicpath {

enum class SymmetryClass { Reflexive, Local, Periodic, Partial, Other };

std::string to_string(SymmetryClass c);
std::optional<SymmetryClass> symmetry_class_from_string(const std::string& s);

/// Thresholds for the non-reflexive categories. These are calibration knobs,
/// not published constants; `sweep` in the CLI explores local_min_length.
struct ClassifierParams {
  int local_min_length = 9;
  int partial_max_mismatch = 3;

  // Throws ValidationError outside 2..15 and 1..7 respectively.
  void validate() const;
};

struct SymmetryRecord {
  bool reflexive = false;
  int mismatch_pairs = 0;
  int longest_local_palindrome_length = 0;
  std::optional<int> period;
  SymmetryClass assigned_class = SymmetryClass::Other;
};

struct LocalPalindrome {
  std::size_t start = 1;  // 1-based
  std::size_t length = 1;

  friend bool operator==(const LocalPalindrome&, const LocalPalindrome&) = default;
};

bool is_palindrome(std::span<const int> legs);

// Number of mirror pairs (i, L+1-i), i <= L/2, holding different values.
int mismatch_pairs(std::span<const int> legs);

// Leftmost longest palindromic window.
LocalPalindrome longest_local_palindrome(std::span<const int> legs);

// Least p >= 2 with legs[i] == legs[i+p] everywhere, when the motif fits at
// least twice (p <= L/2).
std::optional<int> detect_period(std::span<const int> legs);

// First match in order Reflexive, Local, Periodic, Partial, Other. All metric
// fields are filled regardless of the chosen class.
SymmetryRecord classify(std::span<const int> legs, const ClassifierParams& params = {});

inline bool is_palindrome(const LegSequence& l) { return is_palindrome(l.squared()); }
inline int mismatch_pairs(const LegSequence& l) { return mismatch_pairs(l.squared()); }
inline LocalPalindrome longest_local_palindrome(const LegSequence& l) {
  return longest_local_palindrome(l.squared());
}
inline std::optional<int> detect_period(const LegSequence& l) { return detect_period(l.squared()); }
inline SymmetryRecord classify(const LegSequence& l, const ClassifierParams& p = {}) {
  return classify(l.squared(), p);
}

struct DuplicateCensus {
  std::size_t distinct_count = 0;
  // Distinct sequences occurring at least twice.
  std::size_t repeated_pattern_count = 0;
  // Catalog size minus distinct_count: entries whose sequence already
  // appeared at a smaller index.
  std::size_t surplus_count = 0;
  std::map<std::size_t, std::size_t> multiplicity_histogram;
  // duplicate_group_ids[i] is the smallest 1-based index sharing entry i+1's
  // sequence.
  std::vector<std::size_t> duplicate_group_ids;
};

DuplicateCensus duplicate_census(std::span<const LegSequence> legs);

}  // namespace magicpath
