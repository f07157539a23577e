#include "officers/mols_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "officers/errors.hpp"
#include "officers/exact_cover.hpp"

namespace officers {

namespace {

constexpr std::size_t kBatchSize = 256;

void check_order(int n) {
  if (n < kMinSearchOrder || n > kMaxSearchOrder) {
    throw UnsupportedError("order " + std::to_string(n) + " is outside " + std::to_string(kMinSearchOrder) + ".." +
                           std::to_string(kMaxSearchOrder));
  }
}

}  // namespace

bool is_reduced(const LatinSquare& s) {
  for (int i = 0; i < s.order(); ++i) {
    if (s.at(0, i) != i || s.at(i, 0) != i) return false;
  }
  return true;
}

ReducedSquareGenerator::ReducedSquareGenerator(int n)
    : n_(n), cells_(static_cast<std::size_t>(n * n), -1), row_used_(n, 0), col_used_(n, 0), pos_(0) {
  check_order(n);
  for (int i = 0; i < n; ++i) {
    cells_[static_cast<std::size_t>(i)] = i;
    cells_[static_cast<std::size_t>(i * n)] = i;
    row_used_[0] |= 1U << i;
    col_used_[0] |= 1U << i;
    row_used_[i] |= 1U << i;
    col_used_[i] |= 1U << i;
  }
  for (int r = 1; r < n; ++r) {
    for (int c = 1; c < n; ++c) free_cells_.push_back(r * n + c);
  }
}

bool ReducedSquareGenerator::advance() {
  const int last = static_cast<int>(free_cells_.size()) - 1;
  while (pos_ >= 0) {
    const int cell = free_cells_[static_cast<std::size_t>(pos_)];
    const int r = cell / n_;
    const int c = cell % n_;
    int& value = cells_[static_cast<std::size_t>(cell)];
    if (value >= 0) {
      row_used_[r] &= ~(1U << value);
      col_used_[c] &= ~(1U << value);
    }
    const std::uint32_t blocked = row_used_[r] | col_used_[c];
    int s = value + 1;
    while (s < n_ && ((blocked >> s) & 1U)) ++s;
    if (s >= n_) {
      value = -1;
      --pos_;
      continue;
    }
    value = s;
    row_used_[r] |= 1U << s;
    col_used_[c] |= 1U << s;
    if (pos_ == last) return true;
    ++pos_;
  }
  return false;
}

std::optional<LatinSquare> ReducedSquareGenerator::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  ++emitted_;
  return trusted_latin(n_, cells_);
}

std::vector<LatinSquare> generate_reduced(int n) {
  std::vector<LatinSquare> out;
  ReducedSquareGenerator gen(n);
  while (auto s = gen.next()) out.push_back(std::move(*s));
  return out;
}

std::uint64_t count_reduced(int n) {
  ReducedSquareGenerator gen(n);
  while (gen.next()) {
  }
  return gen.emitted();
}

std::vector<Transversal> transversals(const LatinSquare& s) {
  const int n = s.order();
  std::vector<Transversal> out;
  Transversal current(static_cast<std::size_t>(n), -1);
  auto search = [&](auto&& self, int row, std::uint32_t cols, std::uint32_t symbols) -> void {
    if (row == n) {
      out.push_back(current);
      return;
    }
    for (int c = 0; c < n; ++c) {
      const int sym = s.at(row, c);
      if ((cols >> c) & 1U || (symbols >> sym) & 1U) continue;
      current[static_cast<std::size_t>(row)] = c;
      self(self, row + 1, cols | 1U << c, symbols | 1U << sym);
    }
  };
  search(search, 0, 0, 0);
  return out;
}

std::optional<LatinSquare> find_mate(const LatinSquare& s) {
  const int n = s.order();
  const auto ts = transversals(s);
  if (static_cast<int>(ts.size()) < n) return std::nullopt;

  ExactCover problem(n * n);
  for (const auto& t : ts) {
    std::vector<int> cells;
    for (int r = 0; r < n; ++r) cells.push_back(r * n + t[static_cast<std::size_t>(r)]);
    problem.add_row(cells);
  }
  std::optional<std::vector<int>> chosen;
  problem.solve([&](const std::vector<int>& rows) {
    chosen = rows;
    return false;
  });
  if (!chosen) return std::nullopt;

  std::vector<int> mate(static_cast<std::size_t>(n * n), -1);
  for (int row : *chosen) {
    const auto& t = ts[static_cast<std::size_t>(row)];
    const int symbol = t[0];  // the transversal's cell in row 0
    for (int r = 0; r < n; ++r) mate[static_cast<std::size_t>(r * n + t[static_cast<std::size_t>(r)])] = symbol;
  }
  return trusted_latin(n, std::move(mate));
}

OracleResult officers_oracle(int n, const OracleOptions& options) {
  check_order(n);
  const auto start = std::chrono::steady_clock::now();
  const int jobs = std::max(1, options.jobs);

  OracleResult result;
  result.order = n;
  ReducedSquareGenerator gen(n);
  std::vector<LatinSquare> batch;
  std::vector<std::optional<LatinSquare>> found;
  bool stop = false;

  while (!stop) {
    batch.clear();
    while (batch.size() < kBatchSize) {
      auto s = gen.next();
      if (!s) break;
      batch.push_back(std::move(*s));
    }
    if (batch.empty()) break;

    found.assign(batch.size(), std::nullopt);
    const int workers = std::min<int>(jobs, static_cast<int>(batch.size()));
    if (workers == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) found[i] = find_mate(batch[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) found[i] = find_mate(batch[i]);
        });
      }
    }

    const std::uint64_t base = result.squares_checked;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!found[i]) continue;
      ++result.mates_found;
      if (result.mates.size() < options.keep_mates) {
        result.mates.push_back({base + i, batch[i], *found[i]});
      }
      if (options.stop_at_first) {
        result.squares_checked = base + i + 1;
        result.exhaustive = false;
        stop = true;
        break;
      }
    }
    if (!stop) result.squares_checked += batch.size();
    if (options.progress) options.progress(result.squares_checked);
  }

  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace officers
