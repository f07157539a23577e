#include "officers/designs.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "officers/errors.hpp"

namespace officers {

std::vector<std::vector<int>> LatinSquare::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int r = 0; r < order_; ++r) {
    out[r].assign(cells_.begin() + r * order_, cells_.begin() + (r + 1) * order_);
  }
  return out;
}

LatinSquare validate_latin(const std::vector<std::vector<int>>& cells) {
  const int n = static_cast<int>(cells.size());
  if (n == 0) throw InputError("latin square: empty array");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(cells[r].size()) != n) {
      throw InputError("latin square: row " + std::to_string(r) + " has " +
                       std::to_string(cells[r].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (int c = 0; c < n; ++c) {
      const int s = cells[r][c];
      if (s < 0 || s >= n) {
        throw InputError("latin square: symbol " + std::to_string(s) + " at (" +
                         std::to_string(r) + "," + std::to_string(c) + ") outside 0.." +
                         std::to_string(n - 1));
      }
    }
  }

  // seen_row[r][s] / seen_col[c][s] hold the first column / row where s occurred.
  std::vector<std::vector<int>> seen_row(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> seen_col(n, std::vector<int>(n, -1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int s = cells[r][c];
      if (seen_row[r][s] >= 0) {
        std::ostringstream msg;
        msg << "row " << r << " repeats symbol " << s << " at columns " << seen_row[r][s]
            << " and " << c;
        throw ValidationError("latin.row",
                              {{"row", r}, {"symbol", s}, {"columns", {seen_row[r][s], c}}},
                              msg.str());
      }
      if (seen_col[c][s] >= 0) {
        std::ostringstream msg;
        msg << "column " << c << " repeats symbol " << s << " at rows " << seen_col[c][s]
            << " and " << r;
        throw ValidationError("latin.column",
                              {{"column", c}, {"symbol", s}, {"rows", {seen_col[c][s], r}}},
                              msg.str());
      }
      seen_row[r][s] = c;
      seen_col[c][s] = r;
    }
  }

  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : cells) flat.insert(flat.end(), row.begin(), row.end());
  return LatinSquare(n, std::move(flat));
}

LatinSquare trusted_latin(int order, std::vector<int> cells) {
  assert(static_cast<int>(cells.size()) == order * order);
  return LatinSquare(order, std::move(cells));
}

LatinSquare permute(const LatinSquare& s, std::span<const int> rows, std::span<const int> cols,
                    std::span<const int> symbols) {
  const int n = s.order();
  if (static_cast<int>(rows.size()) != n || static_cast<int>(cols.size()) != n ||
      static_cast<int>(symbols.size()) != n) {
    throw InputError("permute: permutation sizes must equal the order");
  }
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out[rows[r]][cols[c]] = symbols[s.at(r, c)];
  }
  return validate_latin(out);
}

GraecoPair make_graeco_pair(LatinSquare latin, LatinSquare greek) {
  if (latin.order() != greek.order()) {
    throw InputError("graeco pair: orders differ (" + std::to_string(latin.order()) + " vs " +
                     std::to_string(greek.order()) + ")");
  }
  return GraecoPair{std::move(latin), std::move(greek)};
}

int OrthogonalityDefect::excess() const noexcept {
  int total = 0;
  for (const auto& d : duplicated) total += d.count - 1;
  return total;
}

OrthogonalityDefect orthogonality_defect(const GraecoPair& p) {
  const int n = p.latin.order();
  if (p.greek.order() != n) throw InputError("orthogonality_defect: orders differ");
  std::vector<int> counts(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) ++counts[static_cast<std::size_t>(p.latin.at(r, c) * n + p.greek.at(r, c))];
  }
  OrthogonalityDefect defect;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int k = counts[static_cast<std::size_t>(a * n + b)];
      if (k == 0) defect.missing.push_back({a, b});
      if (k >= 2) defect.duplicated.push_back({{a, b}, k});
    }
  }
  return defect;
}

Net::Net(int order, std::vector<ParallelClass> classes)
    : order_(order), classes_(std::move(classes)) {
  through_.assign(classes_.size(), std::vector<int>(static_cast<std::size_t>(order_ * order_), -1));
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    for (std::size_t i = 0; i < classes_[k].size(); ++i) {
      for (int p : classes_[k][i]) through_[k][static_cast<std::size_t>(p)] = static_cast<int>(i);
    }
  }
}

const Line& Net::line(LineId id) const {
  return classes_.at(static_cast<std::size_t>(id.cls)).at(static_cast<std::size_t>(id.index));
}

int Net::line_through(int cls, int point) const {
  return through_.at(static_cast<std::size_t>(cls)).at(static_cast<std::size_t>(point));
}

std::vector<ParallelClass> Net::canonical_classes() const {
  auto out = classes_;
  for (auto& cls : out) std::sort(cls.begin(), cls.end());
  return out;
}

Net validate_net(int order, std::vector<ParallelClass> classes) {
  if (order < 1) throw InputError("net: order must be positive");
  if (classes.empty()) throw InputError("net: no parallel classes");
  const int points = order * order;

  for (auto& cls : classes) {
    for (auto& line : cls) {
      for (int p : line) {
        if (p < 0 || p >= points) {
          throw InputError("net: point index " + std::to_string(p) + " outside 0.." +
                           std::to_string(points - 1));
        }
      }
      std::sort(line.begin(), line.end());
    }
  }

  // Axiom 1: each class is a partition of the points into `order` lines.
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    if (static_cast<int>(cls.size()) != order) {
      throw ValidationError("net.axiom1", {{"class", k}, {"lines", cls.size()}},
                            "class " + std::to_string(k) + " has " + std::to_string(cls.size()) +
                                " lines, expected " + std::to_string(order));
    }
    std::vector<int> owner(static_cast<std::size_t>(points), -1);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (static_cast<int>(cls[i].size()) != order) {
        throw ValidationError("net.axiom1", {{"class", k}, {"line", i}, {"size", cls[i].size()}},
                              "line " + std::to_string(i) + " of class " + std::to_string(k) +
                                  " has " + std::to_string(cls[i].size()) + " points, expected " +
                                  std::to_string(order));
      }
      for (int p : cls[i]) {
        if (owner[p] >= 0) {
          throw ValidationError("net.axiom1",
                                {{"class", k}, {"point", p}, {"lines", {owner[p], i}}},
                                "point " + std::to_string(p) + " lies on lines " +
                                    std::to_string(owner[p]) + " and " + std::to_string(i) +
                                    " of class " + std::to_string(k));
        }
        owner[p] = static_cast<int>(i);
      }
    }
  }

  // Axiom 2: lines of different classes meet exactly once.
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      for (std::size_t i = 0; i < classes[a].size(); ++i) {
        for (std::size_t j = 0; j < classes[b].size(); ++j) {
          const auto& x = classes[a][i];
          const auto& y = classes[b][j];
          std::vector<int> common;
          std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
          if (common.size() != 1) {
            std::ostringstream msg;
            msg << "line " << i << " of class " << a << " and line " << j << " of class " << b
                << " meet in " << common.size() << " points";
            throw ValidationError(
                "net.axiom2",
                {{"first", {{"class", a}, {"line", i}}},
                 {"second", {{"class", b}, {"line", j}}},
                 {"common", common}},
                msg.str());
          }
        }
      }
    }
  }
  return Net(order, std::move(classes));
}

Net net_from_mols(std::span<const LatinSquare> squares) {
  if (squares.empty()) throw InputError("net_from_mols: no squares");
  const int n = squares.front().order();
  for (const auto& s : squares) {
    if (s.order() != n) throw InputError("net_from_mols: squares of different orders");
  }
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      const auto defect = orthogonality_defect(GraecoPair{squares[i], squares[j]});
      if (!defect.empty()) {
        nlohmann::json dup = nlohmann::json::array();
        for (const auto& d : defect.duplicated) dup.push_back({d.pair.latin, d.pair.greek, d.count});
        nlohmann::json miss = nlohmann::json::array();
        for (const auto& m : defect.missing) miss.push_back({m.latin, m.greek});
        throw ValidationError("mols.not_orthogonal",
                              {{"pair", {i, j}}, {"duplicated", dup}, {"missing", miss}},
                              "squares " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are not orthogonal (" + std::to_string(defect.missing.size()) +
                                  " missing pairs)");
      }
    }
  }

  std::vector<ParallelClass> classes;
  ParallelClass rows(n), cols(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      rows[r].push_back(r * n + c);
      cols[c].push_back(r * n + c);
    }
  }
  classes.push_back(std::move(rows));
  classes.push_back(std::move(cols));
  for (const auto& s : squares) {
    ParallelClass cls(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) cls[s.at(r, c)].push_back(r * n + c);
    }
    classes.push_back(std::move(cls));
  }
  return validate_net(n, std::move(classes));
}

std::vector<LatinSquare> squares_from_net(const Net& net) {
  const int n = net.order();
  if (net.class_count() < 2) throw InputError("squares_from_net: need at least two classes");
  std::vector<LatinSquare> out;
  for (int k = 2; k < net.class_count(); ++k) {
    std::vector<std::vector<int>> cells(n, std::vector<int>(n));
    for (int p = 0; p < n * n; ++p) {
      cells[net.line_through(0, p)][net.line_through(1, p)] = net.line_through(k, p);
    }
    out.push_back(validate_latin(cells));
  }
  return out;
}

Net grid_net(int order) {
  std::vector<ParallelClass> classes;
  ParallelClass rows(order), cols(order);
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      rows[r].push_back(r * order + c);
      cols[c].push_back(r * order + c);
    }
  }
  classes.push_back(std::move(rows));
  classes.push_back(std::move(cols));
  return validate_net(order, std::move(classes));
}

LatinSquare cyclic_square(int order) {
  if (order < 1) throw InputError("cyclic_square: order must be positive");
  std::vector<int> cells;
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) cells.push_back((r + c) % order);
  }
  return trusted_latin(order, std::move(cells));
}

}  // namespace officers
