#include "magicpath/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fmt/format.h>
#include <thread>

#include "magicpath/error.hpp"

namespace magicpath {

CanonicalCatalog::CanonicalCatalog(int order, std::vector<Square> squares)
    : order_(order), squares_(std::move(squares)) {
  for (std::size_t i = 0; i < squares_.size(); ++i) {
    const Square& s = squares_[i];
    if (s.order() != order_)
      throw ValidationError(fmt::format("catalog entry {} has order {}, expected {}", i + 1, s.order(), order_));
    if (frenicle_canonical(s) != s)
      throw ValidationError(fmt::format("catalog entry {} is not in canonical form", i + 1));
    if (i > 0 && !(squares_[i - 1] < s))
      throw ValidationError(fmt::format("catalog entry {} is out of order or duplicated", i + 1));
  }
}

const Square& CanonicalCatalog::at(std::size_t index) const {
  if (index < 1 || index > squares_.size())
    throw ValidationError(fmt::format("index {} out of range 1..{}", index, squares_.size()));
  return squares_[index - 1];
}

std::optional<std::size_t> CanonicalCatalog::index_of(const Square& canonical) const {
  auto it = std::lower_bound(squares_.begin(), squares_.end(), canonical);
  if (it == squares_.end() || *it != canonical) return std::nullopt;
  return static_cast<std::size_t>(it - squares_.begin()) + 1;
}

namespace {

void require_supported(int order) {
  if (order != 3 && order != 4) throw ValidationError(fmt::format("unsupported order {}", order));
}

// Lines are rows, columns and the two main diagonals, as cell-index lists.
std::vector<std::vector<int>> magic_lines(int n) {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row, col;
    for (int j = 0; j < n; ++j) {
      row.push_back(i * n + j);
      col.push_back(j * n + i);
    }
    lines.push_back(row);
    lines.push_back(col);
  }
  std::vector<int> diag, anti;
  for (int i = 0; i < n; ++i) {
    diag.push_back(i * n + i);
    anti.push_back(i * n + (n - 1 - i));
  }
  lines.push_back(diag);
  lines.push_back(anti);
  return lines;
}

/// Backtracking over a fixed fill order: the first row, the first column,
/// both diagonals, then everything else row-major. With that order most cells
/// are the last open cell of some line and their value is forced.
class Search {
public:
  explicit Search(int order) : n_(order), cells_count_(order * order), target_(magic_constant(order)) {
    const auto lines = magic_lines(n_);
    std::vector<int> fill;
    auto add = [&](int cell) {
      if (std::find(fill.begin(), fill.end(), cell) == fill.end()) fill.push_back(cell);
    };
    for (int c = 0; c < n_; ++c) add(c);
    for (int r = 0; r < n_; ++r) add(r * n_);
    for (int i = 0; i < n_; ++i) add(i * n_ + i);
    for (int i = 0; i < n_; ++i) add(i * n_ + (n_ - 1 - i));
    for (int i = 0; i < cells_count_; ++i) add(i);

    std::vector<int> step_of(cells_count_);
    for (int k = 0; k < cells_count_; ++k) step_of[fill[k]] = k;
    steps_.resize(cells_count_);
    for (int k = 0; k < cells_count_; ++k) {
      Step& st = steps_[k];
      st.cell = fill[k];
      for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& line = lines[li];
        if (std::find(line.begin(), line.end(), st.cell) == line.end()) continue;
        int filled_after = 0;
        for (int c : line) filled_after += step_of[c] <= k;
        const int open = n_ - filled_after;
        if (open == 0 && st.forcing_line < 0) st.forcing_line = static_cast<int>(li);
        st.lines.push_back({static_cast<int>(li), open});
      }
    }
    line_sums_.assign(lines.size(), 0);
  }

  // Every magic square whose first fill cell (top-left) holds `first`.
  std::vector<Square> run(int first) {
    found_.clear();
    if (place(0, first)) {
      descend(1);
      unplace(0, first);
    }
    return std::move(found_);
  }

private:
  struct Step {
    int cell = 0;
    int forcing_line = -1;
    std::vector<std::pair<int, int>> lines;  // (line, cells still open after this step)
  };

  void descend(int k) {
    if (k == cells_count_) {
      found_.push_back(SquareBuilder::trusted(n_, std::vector<int>(cells_.begin(), cells_.begin() + cells_count_)));
      return;
    }
    const Step& st = steps_[k];
    if (st.forcing_line >= 0) {
      const int v = target_ - line_sums_[st.forcing_line];
      if (place(k, v)) {
        descend(k + 1);
        unplace(k, v);
      }
      return;
    }
    for (int v = 1; v <= cells_count_; ++v) {
      if (place(k, v)) {
        descend(k + 1);
        unplace(k, v);
      }
    }
  }

  // Completed lines must hit the target; open lines need at least 1 per
  // remaining cell.
  bool place(int k, int v) {
    if (v < 1 || v > cells_count_ || used_[v]) return false;
    for (auto [line, open] : steps_[k].lines) {
      const int sum = line_sums_[line] + v;
      if (open == 0 ? sum != target_ : sum + open > target_) return false;
    }
    used_[v] = true;
    cells_[steps_[k].cell] = v;
    for (auto [line, open] : steps_[k].lines) line_sums_[line] += v;
    return true;
  }

  void unplace(int k, int v) {
    used_[v] = false;
    for (auto [line, open] : steps_[k].lines) line_sums_[line] -= v;
  }

  int n_;
  int cells_count_;
  int target_;
  std::vector<Step> steps_;
  std::vector<int> line_sums_;
  std::array<int, 16> cells_{};
  std::array<bool, 17> used_{};
  std::vector<Square> found_;
};

}  // namespace

CanonicalCatalog enumerate_canonical(int order, unsigned threads) {
  require_supported(order);
  const int tasks = order * order;
  std::vector<std::vector<Square>> per_task(tasks);

  std::atomic<int> next{1};
  auto worker = [&] {
    Search search(order);
    for (int first = next++; first <= tasks; first = next++) {
      std::vector<Square> canon;
      for (const Square& s : search.run(first)) canon.push_back(frenicle_canonical(s));
      per_task[first - 1] = std::move(canon);
    }
  };

  const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(tasks));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<Square> merged;
  for (auto& chunk : per_task) std::move(chunk.begin(), chunk.end(), std::back_inserter(merged));
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return CanonicalCatalog(order, std::move(merged));
}

std::vector<Square> enumerate_all(int order) {
  const CanonicalCatalog catalog = enumerate_canonical(order);
  std::vector<Square> all;
  all.reserve(catalog.size() * 8);
  for (const Square& s : catalog) {
    auto variants = orbit(s);
    std::move(variants.begin(), variants.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace magicpath
