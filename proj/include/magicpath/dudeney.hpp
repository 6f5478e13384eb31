#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "magicpath/enumerator.hpp"
#include "magicpath/square.hpp"

namespace magicpath {

using Chord = std::pair<Cell, Cell>;

/// The eight segments joining complementary values k and 17-k.
struct ChordPattern {
  std::array<Chord, 8> chords;  // each pair ordered, pairs sorted
  // 16 bytes of cell indices (row*4+col); minimum over the eight transforms.
  std::string canonical_encoding;

  std::string encoding_hex() const;
};

// Order 4 only.
ChordPattern chord_pattern(const Square& s);

// Same serialization without minimizing over transforms.
std::string oriented_chord_encoding(const Square& s);

enum class GroupAnchor { Pandiagonal, Associative, Size304, Derived };

std::string to_string(GroupAnchor a);

struct DudeneyGroup {
  int id = 0;
  std::size_t member_count = 0;
  GroupAnchor anchor = GroupAnchor::Derived;
  std::string canonical_encoding;
};

/// Chord classes of the order-4 catalog with stable ids.
///
/// Id rules: the class holding the pandiagonal squares is 1, the associative
/// class is 3, the class of size 304 is 6. Remaining classes, by descending
/// size then encoding, take the free ids in ascending order. These ids follow
/// the classical numbering only for the three anchored groups.
class GroupTable {
public:
  const std::vector<DudeneyGroup>& groups() const { return groups_; }  // ascending id
  const DudeneyGroup& group(int id) const;

  // Throws ValidationError for an encoding absent from the table.
  int id_for(const std::string& canonical_encoding) const;

  // True when the partition has the expected 12 classes.
  bool complete() const { return groups_.size() == 12; }

  // Class sizes of the orientation-sensitive partition, filled only when the
  // D4-invariant partition does not yield 12 classes.
  const std::vector<std::size_t>& fallback_partition_sizes() const { return fallback_sizes_; }

private:
  friend GroupTable build_group_table(const CanonicalCatalog& catalog);

  std::vector<DudeneyGroup> groups_;
  std::map<std::string, int> by_encoding_;
  std::vector<std::size_t> fallback_sizes_;
};

GroupTable build_group_table(const CanonicalCatalog& catalog);

int classify_group(const Square& s, const GroupTable& table);

}  // namespace magicpath
