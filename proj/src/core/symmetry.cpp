#include "magicpath/symmetry.hpp"

#include <fmt/format.h>

#include "magicpath/error.hpp"

namespace magicpath {

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Reflexive: return "Reflexive";
    case SymmetryClass::Local: return "Local";
    case SymmetryClass::Periodic: return "Periodic";
    case SymmetryClass::Partial: return "Partial";
    case SymmetryClass::Other: return "Other";
  }
  return "Other";
}

std::optional<SymmetryClass> symmetry_class_from_string(const std::string& s) {
  for (auto c : {SymmetryClass::Reflexive, SymmetryClass::Local, SymmetryClass::Periodic,
                 SymmetryClass::Partial, SymmetryClass::Other})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

void ClassifierParams::validate() const {
  if (local_min_length < 2 || local_min_length > 15)
    throw ValidationError(fmt::format("local_min_length must be in 2..15, got {}", local_min_length));
  if (partial_max_mismatch < 1 || partial_max_mismatch > 7)
    throw ValidationError(fmt::format("partial_max_mismatch must be in 1..7, got {}", partial_max_mismatch));
}

bool is_palindrome(std::span<const int> legs) { return mismatch_pairs(legs) == 0; }

int mismatch_pairs(std::span<const int> legs) {
  const std::size_t n = legs.size();
  int count = 0;
  for (std::size_t i = 0; i < n / 2; ++i)
    if (legs[i] != legs[n - 1 - i]) ++count;
  return count;
}

LocalPalindrome longest_local_palindrome(std::span<const int> legs) {
  LocalPalindrome best;
  const auto n = static_cast<long>(legs.size());
  // Expand around every odd and even center.
  auto consider = [&](long lo, long hi) {
    while (lo >= 0 && hi < n && legs[lo] == legs[hi]) {
      --lo;
      ++hi;
    }
    const auto start = static_cast<std::size_t>(lo + 2);
    const auto len = static_cast<std::size_t>(hi - lo - 1);
    if (len > best.length || (len == best.length && start < best.start)) best = {start, len};
  };
  for (long c = 0; c < n; ++c) {
    consider(c, c);
    consider(c, c + 1);
  }
  return best;
}

std::optional<int> detect_period(std::span<const int> legs) {
  const std::size_t n = legs.size();
  for (std::size_t p = 2; p <= n / 2; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < n && ok; ++i) ok = legs[i] == legs[i + p];
    if (ok) return static_cast<int>(p);
  }
  return std::nullopt;
}

SymmetryRecord classify(std::span<const int> legs, const ClassifierParams& params) {
  params.validate();
  SymmetryRecord rec;
  rec.mismatch_pairs = mismatch_pairs(legs);
  rec.reflexive = rec.mismatch_pairs == 0;
  rec.longest_local_palindrome_length = static_cast<int>(longest_local_palindrome(legs).length);
  rec.period = detect_period(legs);

  if (rec.reflexive)
    rec.assigned_class = SymmetryClass::Reflexive;
  else if (rec.longest_local_palindrome_length >= params.local_min_length)
    rec.assigned_class = SymmetryClass::Local;
  else if (rec.period)
    rec.assigned_class = SymmetryClass::Periodic;
  else if (rec.mismatch_pairs <= params.partial_max_mismatch)
    rec.assigned_class = SymmetryClass::Partial;
  else
    rec.assigned_class = SymmetryClass::Other;
  return rec;
}

DuplicateCensus duplicate_census(std::span<const LegSequence> legs) {
  DuplicateCensus census;
  std::map<LegSequence, std::pair<std::size_t, std::size_t>> groups;  // -> (first index, multiplicity)
  census.duplicate_group_ids.reserve(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    auto [it, inserted] = groups.try_emplace(legs[i], i + 1, 0);
    ++it->second.second;
    census.duplicate_group_ids.push_back(it->second.first);
  }
  census.distinct_count = groups.size();
  census.surplus_count = legs.size() - groups.size();
  for (const auto& [seq, info] : groups) {
    ++census.multiplicity_histogram[info.second];
    if (info.second >= 2) ++census.repeated_pattern_count;
  }
  return census;
}

}  // namespace magicpath
