#pragma once

#include <vector>

#include "magicpath/enumerator.hpp"
#include "magicpath/square.hpp"

namespace fixtures {

inline const std::vector<int> kDurer = {16, 3, 2, 13, 5, 10, 11, 8, 9, 6, 7, 12, 4, 15, 14, 1};
inline const std::vector<int> kDurerCanonical = {1, 12, 8, 13, 14, 7, 11, 2, 15, 6, 10, 3, 4, 9, 5, 16};
inline const std::vector<int> kLoShu = {8, 1, 6, 3, 5, 7, 4, 9, 2};
inline const std::vector<int> kLoShuCanonical = {2, 7, 6, 9, 5, 1, 4, 3, 8};

inline magicpath::Square durer() { return magicpath::Square::make(4, kDurer); }
inline magicpath::Square lo_shu() { return magicpath::Square::make(3, kLoShu); }

inline const magicpath::CanonicalCatalog& catalog4() {
  static const magicpath::CanonicalCatalog c = magicpath::enumerate_canonical(4, 4);
  return c;
}

inline const magicpath::CanonicalCatalog& catalog3() {
  static const magicpath::CanonicalCatalog c = magicpath::enumerate_canonical(3);
  return c;
}

}  // namespace fixtures
