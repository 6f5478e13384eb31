#include "magicpath/dudeney.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <set>

#include "magicpath/error.hpp"

namespace magicpath {

namespace {

void require_order4(const Square& s) {
  if (s.order() != 4)
    throw ValidationError(fmt::format("chord patterns need order 4, got {}", s.order()));
}

int cell_index(Cell c) { return c.row * 4 + c.col; }

std::array<Chord, 8> chords_under(const Square& s, Transform t) {
  std::array<Chord, 8> out;
  for (int k = 1; k <= 8; ++k) {
    Cell a = map_cell(t, s.position_of(k), 4);
    Cell b = map_cell(t, s.position_of(17 - k), 4);
    if (b < a) std::swap(a, b);
    out[k - 1] = {a, b};
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode(const std::array<Chord, 8>& chords) {
  std::string bytes;
  bytes.reserve(16);
  for (const auto& [a, b] : chords) {
    bytes.push_back(static_cast<char>(cell_index(a)));
    bytes.push_back(static_cast<char>(cell_index(b)));
  }
  return bytes;
}

}  // namespace

std::string ChordPattern::encoding_hex() const {
  std::string out;
  for (char b : canonical_encoding) out += fmt::format("{:x}", static_cast<unsigned>(b));
  return out;
}

ChordPattern chord_pattern(const Square& s) {
  require_order4(s);
  ChordPattern p;
  p.chords = chords_under(s, Transform::Identity);
  p.canonical_encoding = encode(p.chords);
  for (Transform t : kAllTransforms)
    p.canonical_encoding = std::min(p.canonical_encoding, encode(chords_under(s, t)));
  return p;
}

std::string oriented_chord_encoding(const Square& s) {
  require_order4(s);
  return encode(chords_under(s, Transform::Identity));
}

std::string to_string(GroupAnchor a) {
  switch (a) {
    case GroupAnchor::Pandiagonal: return "pandiagonal";
    case GroupAnchor::Associative: return "associative";
    case GroupAnchor::Size304: return "size304";
    case GroupAnchor::Derived: return "derived";
  }
  return "derived";
}

const DudeneyGroup& GroupTable::group(int id) const {
  for (const auto& g : groups_)
    if (g.id == id) return g;
  throw ValidationError(fmt::format("no Dudeney group with id {}", id));
}

int GroupTable::id_for(const std::string& canonical_encoding) const {
  auto it = by_encoding_.find(canonical_encoding);
  if (it == by_encoding_.end()) throw ValidationError("unknown chord pattern");
  return it->second;
}

GroupTable build_group_table(const CanonicalCatalog& catalog) {
  if (catalog.order() != 4) throw ValidationError("Dudeney groups are defined for order 4 only");

  std::map<std::string, std::size_t> classes;  // encoding -> size
  std::set<std::string> pandiagonal_classes, associative_classes;
  for (const Square& s : catalog) {
    const std::string enc = chord_pattern(s).canonical_encoding;
    ++classes[enc];
    if (is_pandiagonal(s)) pandiagonal_classes.insert(enc);
    if (is_associative(s)) associative_classes.insert(enc);
  }

  GroupTable table;
  std::map<std::string, std::pair<int, GroupAnchor>> assigned;
  std::set<int> taken;
  auto anchor = [&](const std::string& enc, int id, GroupAnchor a) {
    if (assigned.contains(enc) || taken.contains(id)) return;
    assigned[enc] = {id, a};
    taken.insert(id);
  };
  // Anchors only apply when the predicate picks out exactly one class.
  if (pandiagonal_classes.size() == 1) anchor(*pandiagonal_classes.begin(), 1, GroupAnchor::Pandiagonal);
  if (associative_classes.size() == 1) anchor(*associative_classes.begin(), 3, GroupAnchor::Associative);
  std::vector<std::string> size304;
  for (const auto& [enc, size] : classes)
    if (size == 304) size304.push_back(enc);
  if (size304.size() == 1) anchor(size304.front(), 6, GroupAnchor::Size304);

  std::vector<std::string> rest;
  for (const auto& [enc, size] : classes)
    if (!assigned.contains(enc)) rest.push_back(enc);
  std::stable_sort(rest.begin(), rest.end(), [&](const std::string& a, const std::string& b) {
    return classes[a] > classes[b];
  });
  int next_id = 1;
  for (const auto& enc : rest) {
    while (taken.contains(next_id)) ++next_id;
    anchor(enc, next_id, GroupAnchor::Derived);
  }

  for (const auto& [enc, idA] : assigned) {
    table.groups_.push_back({idA.first, classes[enc], idA.second, enc});
    table.by_encoding_[enc] = idA.first;
  }
  std::sort(table.groups_.begin(), table.groups_.end(),
            [](const DudeneyGroup& a, const DudeneyGroup& b) { return a.id < b.id; });

  if (!table.complete()) {
    std::map<std::string, std::size_t> oriented;
    for (const Square& s : catalog) ++oriented[oriented_chord_encoding(s)];
    for (const auto& [enc, n] : oriented) table.fallback_sizes_.push_back(n);
    std::sort(table.fallback_sizes_.rbegin(), table.fallback_sizes_.rend());
  }
  return table;
}

int classify_group(const Square& s, const GroupTable& table) {
  return table.id_for(chord_pattern(s).canonical_encoding);
}

}  // namespace magicpath
