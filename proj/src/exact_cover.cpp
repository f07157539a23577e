#include "officers/exact_cover.hpp"

#include <set>

#include "officers/errors.hpp"

namespace officers {

// Node 0 is the root; nodes 1..columns are column headers.
ExactCover::ExactCover(int columns) : columns_(columns), sizes_(static_cast<std::size_t>(columns), 0) {
  if (columns < 0) throw InputError("exact cover: negative column count");
  nodes_list_.reserve(static_cast<std::size_t>(columns) + 1);
  for (int i = 0; i <= columns; ++i) {
    nodes_list_.push_back({i - 1, i + 1, i, i, i - 1, -1});
  }
  nodes_list_[0].left = columns;
  nodes_list_[static_cast<std::size_t>(columns)].right = 0;
}

int ExactCover::add_row(const std::vector<int>& columns) {
  if (columns.empty()) throw InputError("exact cover: empty row");
  std::set<int> seen;
  for (int c : columns) {
    if (c < 0 || c >= columns_ || !seen.insert(c).second) throw InputError("exact cover: bad column in row");
  }
  const int row = row_count();
  const int first = static_cast<int>(nodes_list_.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const int header = columns[i] + 1;
    const int id = static_cast<int>(nodes_list_.size());
    Node n{};
    n.left = i == 0 ? id : id - 1;
    n.right = first;
    n.column = header;
    n.row = row;
    n.down = header;
    n.up = nodes_list_[static_cast<std::size_t>(header)].up;
    nodes_list_.push_back(n);
    nodes_list_[static_cast<std::size_t>(n.up)].down = id;
    nodes_list_[static_cast<std::size_t>(header)].up = id;
    if (i > 0) nodes_list_[static_cast<std::size_t>(id - 1)].right = id;
    nodes_list_[static_cast<std::size_t>(first)].left = id;
    ++sizes_[static_cast<std::size_t>(columns[i])];
  }
  row_heads_.push_back(first);
  return row;
}

void ExactCover::cover(int c) {
  auto& N = nodes_list_;
  N[N[c].right].left = N[c].left;
  N[N[c].left].right = N[c].right;
  for (int i = N[c].down; i != c; i = N[i].down) {
    for (int j = N[i].right; j != i; j = N[j].right) {
      N[N[j].down].up = N[j].up;
      N[N[j].up].down = N[j].down;
      --sizes_[static_cast<std::size_t>(N[j].column - 1)];
    }
  }
}

void ExactCover::uncover(int c) {
  auto& N = nodes_list_;
  for (int i = N[c].up; i != c; i = N[i].up) {
    for (int j = N[i].left; j != i; j = N[j].left) {
      ++sizes_[static_cast<std::size_t>(N[j].column - 1)];
      N[N[j].down].up = j;
      N[N[j].up].down = j;
    }
  }
  N[N[c].right].left = c;
  N[N[c].left].right = c;
}

bool ExactCover::search(const std::function<bool(const std::vector<int>&)>& visit, std::uint64_t& found) {
  auto& N = nodes_list_;
  if (N[0].right == 0) {
    ++found;
    return visit(partial_);
  }
  // Headers stay in index order, so the first minimum is the lowest index.
  int best = N[0].right;
  for (int c = N[best].right; c != 0; c = N[c].right) {
    if (sizes_[static_cast<std::size_t>(c - 1)] < sizes_[static_cast<std::size_t>(best - 1)]) best = c;
  }
  if (sizes_[static_cast<std::size_t>(best - 1)] == 0) return true;

  cover(best);
  bool keep_going = true;
  for (int r = N[best].down; r != best && keep_going; r = N[r].down) {
    ++nodes_;
    partial_.push_back(N[r].row);
    for (int j = N[r].right; j != r; j = N[j].right) cover(N[j].column);
    keep_going = search(visit, found);
    for (int j = N[r].left; j != r; j = N[j].left) uncover(N[j].column);
    partial_.pop_back();
  }
  uncover(best);
  return keep_going;
}

std::uint64_t ExactCover::solve(const std::function<bool(const std::vector<int>&)>& visit) {
  std::uint64_t found = 0;
  partial_.clear();
  search(visit, found);
  return found;
}

}  // namespace officers
