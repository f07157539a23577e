#include "officers/netcode.hpp"

#include <set>
#include <stdexcept>

#include "officers/errors.hpp"

namespace officers {

GF2Vector characteristic_vector(const Net& net, LineId line) {
  return GF2Vector::from_support(static_cast<std::size_t>(net.point_count()), net.line(line));
}

GF2Vector all_ones(const Net& net) {
  GF2Vector v(static_cast<std::size_t>(net.point_count()));
  for (int p = 0; p < net.point_count(); ++p) v.set(static_cast<std::size_t>(p));
  return v;
}

NetCode build_code(const Net& net) {
  NetCode code;
  code.order = net.order();
  code.classes = net.class_count();
  code.generators = GF2Matrix(static_cast<std::size_t>(net.point_count()));
  for (int k = 0; k < net.class_count(); ++k) {
    for (int i = 0; i < net.order(); ++i) code.generators.append(characteristic_vector(net, {k, i}));
  }
  code.code_dim = rank(code.generators);
  const GF2Matrix hull = hull_basis(code.generators);
  code.hull_dim = hull.row_count();
  return code;
}

GF2Matrix class_gram(const Net& net, std::span<const LineId> representatives) {
  if (static_cast<int>(representatives.size()) != net.class_count()) {
    throw InputError("class_gram: need one representative per class (" +
                     std::to_string(net.class_count()) + "), got " +
                     std::to_string(representatives.size()));
  }
  std::set<int> seen;
  GF2Matrix lines(static_cast<std::size_t>(net.point_count()));
  for (const auto& id : representatives) {
    if (id.cls < 0 || id.cls >= net.class_count() || id.index < 0 || id.index >= net.order()) {
      throw InputError("class_gram: line id out of range");
    }
    if (!seen.insert(id.cls).second) {
      throw InputError("class_gram: two representatives from class " + std::to_string(id.cls));
    }
    lines.append(characteristic_vector(net, id));
  }
  return gram(lines);
}

int lemma_bound(int n, int k) {
  if (k != 4) throw UnsupportedError("lemma_bound: only k = 4 is supported");
  if (n < 2 || n % 2 != 0) {
    throw UnsupportedError("lemma_bound: n must be even (for odd n the class Gram matrix has rank 1)");
  }
  return (n * n + 4) / 2;
}

std::vector<GF2Vector> class_dependencies(const Net& net) {
  const int n = net.order();
  const int k = net.class_count();
  std::vector<GF2Vector> deps;
  if (k < 2) return deps;
  GF2Matrix generators(static_cast<std::size_t>(net.point_count()));
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < n; ++i) generators.append(characteristic_vector(net, {c, i}));
  }
  for (int c = 0; c + 1 < k; ++c) {
    GF2Vector coeffs(static_cast<std::size_t>(n * k));
    for (int i = 0; i < n; ++i) {
      coeffs.set(static_cast<std::size_t>(c * n + i));
      coeffs.set(static_cast<std::size_t>((k - 1) * n + i));
    }
    if (!combine(generators, coeffs).is_zero()) {
      throw std::logic_error("class_dependencies: relation fails on a validated net");
    }
    deps.push_back(std::move(coeffs));
  }
  return deps;
}

nlohmann::json code_report(const Net& net) {
  const NetCode code = build_code(net);
  nlohmann::json bound = nullptr;
  try {
    bound = lemma_bound(net.order(), net.class_count());
  } catch (const UnsupportedError&) {
  }
  return {{"n", code.order},
          {"k", code.classes},
          {"code_dim", code.code_dim},
          {"hull_dim", code.hull_dim},
          {"bound", bound},
          {"dependency_count", code.dependency_count()}};
}

}  // namespace officers
