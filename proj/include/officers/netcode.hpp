#pragma once

// The binary code of a net: the span of the lines' characteristic vectors.

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "officers/designs.hpp"
#include "officers/gf2.hpp"

namespace officers {

struct NetCode {
  int order = 0;
  int classes = 0;
  GF2Matrix generators;  // row cls * n + index is the line (cls, index)
  std::size_t code_dim = 0;
  std::size_t hull_dim = 0;

  // Independent linear relations among the generators: n*k - code_dim.
  std::size_t dependency_count() const {
    return static_cast<std::size_t>(order * classes) - code_dim;
  }
};

GF2Vector characteristic_vector(const Net& net, LineId line);
GF2Vector all_ones(const Net& net);

NetCode build_code(const Net& net);

// k x k matrix of dot products between one chosen line per class. Throws
// InputError unless `representatives` picks exactly one line of each class.
GF2Matrix class_gram(const Net& net, std::span<const LineId> representatives);

// (n^2 + 4) / 2, from dim C <= n^2 - (dim C - 4). Only defined for even n
// and k = 4, where the class Gram matrix is nonsingular; anything else
// throws UnsupportedError.
int lemma_bound(int n, int k = 4);

// The k-1 relations "all lines of class i" + "all lines of class k-1" = 0
// as coefficient vectors of length n*k (row order of build_code). Each is
// checked against the generator matrix before being returned.
std::vector<GF2Vector> class_dependencies(const Net& net);

// {n, k, code_dim, hull_dim, bound, dependency_count}; bound is null
// outside the even-n, k=4 regime.
nlohmann::json code_report(const Net& net);

}  // namespace officers
