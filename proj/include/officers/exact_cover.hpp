#pragma once

// Exact cover by dancing links.
//
// Column choice is minimum remaining values with ties broken by the lowest
// column index; rows are tried in insertion order, so the solution order
// is deterministic.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace officers {

class ExactCover {
 public:
  explicit ExactCover(int columns);

  // Returns the row index. Columns must be distinct and in range.
  int add_row(const std::vector<int>& columns);

  int column_count() const noexcept { return columns_; }
  int row_count() const noexcept { return static_cast<int>(row_heads_.size()); }

  // Calls `visit` with the row indices of each exact cover, in search
  // order; stops when `visit` returns false. Returns the number of covers
  // visited.
  std::uint64_t solve(const std::function<bool(const std::vector<int>&)>& visit);

  // Search nodes (rows tried) across all calls to solve().
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Node {
    int left, right, up, down, column, row;
  };

  void cover(int c);
  void uncover(int c);
  bool search(const std::function<bool(const std::vector<int>&)>& visit, std::uint64_t& found);

  int columns_;
  std::vector<Node> nodes_list_;
  std::vector<int> sizes_;
  std::vector<int> row_heads_;
  std::vector<int> partial_;
  std::uint64_t nodes_ = 0;
};

}  // namespace officers
