#include "magicpath/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <thread>

#include "magicpath/dudeney.hpp"
#include "magicpath/enumerator.hpp"
#include "magicpath/error.hpp"

namespace magicpath {

std::vector<LegSequence> AnalysisSet::leg_sequences() const {
  std::vector<LegSequence> out;
  out.reserve(records.size());
  for (const auto& r : records) out.emplace_back(order, r.legs_squared);
  return out;
}

namespace {

AnalysisRecord analyze_one(const Square& s, std::size_t index, const ClassifierParams& params,
                           const GroupTable* groups) {
  AnalysisRecord rec;
  rec.index = index;
  rec.cells.assign(s.cells().begin(), s.cells().end());
  const LegSequence legs = leg_squares(s);
  rec.legs_squared.assign(legs.squared().begin(), legs.squared().end());
  const TrajectoryStats st = trajectory_stats(legs);
  rec.total = st.total_distance;
  rec.per_city_average = st.per_city_average;
  const SymmetryRecord sym = classify(legs, params);
  rec.reflexive = sym.reflexive;
  rec.mismatch_pairs = sym.mismatch_pairs;
  rec.longest_local_palindrome_length = sym.longest_local_palindrome_length;
  rec.period = sym.period;
  rec.assigned_class = sym.assigned_class;
  if (groups) rec.dudeney_group = classify_group(s, *groups);
  rec.is_associative = is_associative(s);
  rec.is_pandiagonal = is_pandiagonal(s);
  return rec;
}

}  // namespace

AnalysisSet analyze(std::span<const Square> squares, const ClassifierParams& params, unsigned threads) {
  params.validate();
  if (squares.empty()) throw ValidationError("nothing to analyze");
  AnalysisSet set;
  set.order = squares.front().order();
  set.params = params;
  for (const Square& s : squares)
    if (s.order() != set.order) throw ValidationError("mixed orders in input");

  std::optional<GroupTable> groups;
  if (set.order == 4) groups = build_group_table(enumerate_canonical(4, threads));
  const GroupTable* table = groups ? &*groups : nullptr;

  set.records.resize(squares.size());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, squares.size());
  const std::size_t chunk = (squares.size() + workers - 1) / workers;
  auto work = [&](std::size_t begin) {
    const std::size_t end = std::min(begin + chunk, squares.size());
    for (std::size_t i = begin; i < end; ++i) set.records[i] = analyze_one(squares[i], i + 1, params, table);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w * chunk);
  }

  const DuplicateCensus census = duplicate_census(set.leg_sequences());
  for (std::size_t i = 0; i < set.records.size(); ++i)
    set.records[i].duplicate_group_id = census.duplicate_group_ids[i];
  return set;
}

void check_consistency(const AnalysisRecord& rec, int order, const ClassifierParams& params) {
  auto fail = [&](const std::string& what) {
    throw ValidationError(fmt::format("record {}: {}", rec.index, what));
  };
  const Square s = [&] {
    try {
      return Square::make(order, rec.cells);
    } catch (const ValidationError& e) {
      fail(e.what());
      throw;
    }
  }();
  const LegSequence legs = leg_squares(s);
  if (!std::ranges::equal(legs.squared(), rec.legs_squared)) fail("legs_squared does not match cells");
  const TrajectoryStats st = trajectory_stats(legs);
  if (std::abs(st.total_distance - rec.total) > 1e-9) fail("total does not match legs");
  if (std::abs(st.per_city_average - rec.per_city_average) > 1e-9) fail("per_city_average does not match legs");
  const SymmetryRecord sym = classify(legs, params);
  if (rec.reflexive != (rec.mismatch_pairs == 0)) fail("reflexive flag contradicts mismatch_pairs");
  if (sym.mismatch_pairs != rec.mismatch_pairs || sym.reflexive != rec.reflexive ||
      sym.longest_local_palindrome_length != rec.longest_local_palindrome_length ||
      sym.period != rec.period || sym.assigned_class != rec.assigned_class)
    fail("symmetry fields do not match legs");
  if (rec.is_associative != is_associative(s) || rec.is_pandiagonal != is_pandiagonal(s))
    fail("structural flags do not match cells");
  if (order == 4 && (!rec.dudeney_group || *rec.dudeney_group < 1 || *rec.dudeney_group > 12))
    fail("dudeney_group must be in 1..12");
  if (rec.duplicate_group_id < 1 || rec.duplicate_group_id > rec.index) fail("duplicate_group_id out of range");
}

}  // namespace magicpath
