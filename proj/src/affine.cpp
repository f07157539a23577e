#include "officers/affine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "officers/errors.hpp"

namespace officers {

namespace {

struct FieldSpec {
  int q, p, degree;
  std::vector<int> reduction;  // x^degree = -(c0 + c1 x + ...)
};

const std::vector<FieldSpec>& field_specs() {
  static const std::vector<FieldSpec> specs{
      {2, 2, 1, {}},        {3, 3, 1, {}},        {5, 5, 1, {}},     {7, 7, 1, {}},
      {4, 2, 2, {1, 1}},     // x^2 + x + 1
      {8, 2, 3, {1, 1, 0}},  // x^3 + x + 1
      {9, 3, 2, {1, 0}},     // x^2 + 1
  };
  return specs;
}

std::vector<int> digits(int value, int p, int degree) {
  std::vector<int> d(static_cast<std::size_t>(degree));
  for (auto& v : d) {
    v = value % p;
    value /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int value = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) value = value * p + *it;
  return value;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  const auto& specs = field_specs();
  const auto spec = std::find_if(specs.begin(), specs.end(), [q](const FieldSpec& s) { return s.q == q; });
  if (spec == specs.end()) throw UnsupportedError("no field of order " + std::to_string(q) + " is supported");
  const int p = spec->p;
  const int k = spec->degree;
  add_.resize(static_cast<std::size_t>(q * q));
  mul_.resize(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      std::vector<int> sum(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      add_[static_cast<std::size_t>(a * q + b)] = from_digits(sum, p);

      std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      for (int top = 2 * k - 2; top >= k; --top) {
        const int c = prod[top];
        prod[top] = 0;
        for (int i = 0; i < k; ++i) prod[top - k + i] = ((prod[top - k + i] - c * spec->reduction[i]) % p + p) % p;
      }
      prod.resize(static_cast<std::size_t>(k));
      mul_[static_cast<std::size_t>(a * q + b)] = from_digits(prod, p);
    }
  }
}

int FiniteField::neg(int a) const {
  for (int b = 0; b < q_; ++b) {
    if (add(a, b) == 0) return b;
  }
  throw std::logic_error("field has no additive inverse");
}

int FiniteField::inv(int a) const {
  for (int b = 1; b < q_; ++b) {
    if (mul(a, b) == 1) return b;
  }
  throw InputError("zero has no inverse");
}

IncidencePlane::IncidencePlane(Net net) : net_(std::move(net)) {
  const int n = net_.point_count();
  join_.assign(static_cast<std::size_t>(n * n), LineId{-1, -1});
  for (int cls = 0; cls < net_.class_count(); ++cls) {
    for (int i = 0; i < net_.order(); ++i) {
      const auto& line = net_.line({cls, i});
      for (int p : line) {
        for (int q : line) {
          if (p != q) join_[static_cast<std::size_t>(p * n + q)] = {cls, i};
        }
      }
    }
  }
}

LineId IncidencePlane::join(int p, int q) const {
  const int n = point_count();
  if (p == q || p < 0 || q < 0 || p >= n || q >= n) throw InputError("join needs two distinct points");
  return join_[static_cast<std::size_t>(p * n + q)];
}

bool IncidencePlane::collinear(int p, int q, int r) const {
  return net_.line_through(join(p, q).cls, r) == join(p, q).index;
}

int IncidencePlane::meet(LineId a, LineId b) const {
  if (a.cls == b.cls) throw InputError("parallel lines do not meet");
  for (int p : net_.line(a)) {
    if (net_.line_through(b.cls, p) == b.index) return p;
  }
  throw std::logic_error("lines of different classes share no point");
}

IncidencePlane validate_plane(Net net) {
  if (net.class_count() != net.order() + 1) {
    throw InputError("a plane of order " + std::to_string(net.order()) + " needs " + std::to_string(net.order() + 1) +
                     " classes, got " + std::to_string(net.class_count()));
  }
  IncidencePlane plane(std::move(net));
  const int n = plane.point_count();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (plane.join_[static_cast<std::size_t>(p * n + q)].cls < 0) {
        throw ValidationError("plane.two_points", {{"points", {p, q}}},
                              "points " + std::to_string(p) + " and " + std::to_string(q) + " share no line");
      }
    }
  }
  return plane;
}

IncidencePlane ag2(int q) {
  if (q == 6) throw UnsupportedError("there is no field of order 6");
  const FiniteField f(q);
  std::vector<ParallelClass> classes;
  for (int m = 0; m < q; ++m) {
    ParallelClass cls(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x) {
      for (int b = 0; b < q; ++b) {
        const int y = f.add(f.mul(m, x), b);
        cls[static_cast<std::size_t>(b)].push_back(y * q + x);
      }
    }
    classes.push_back(std::move(cls));
  }
  ParallelClass verticals(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c) {
    for (int y = 0; y < q; ++y) verticals[static_cast<std::size_t>(c)].push_back(y * q + c);
  }
  classes.push_back(std::move(verticals));
  return validate_plane(validate_net(q, std::move(classes)));
}

bool diagonals_parallel(const IncidencePlane& plane, const std::array<int, 4>& v) {
  for (int p : v) {
    if (p < 0 || p >= plane.point_count()) throw InputError("parallelogram vertex out of range");
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) throw InputError("parallelogram has a repeated vertex");
    }
  }
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> t;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) t.push_back(v[i]);
    }
    if (plane.collinear(t[0], t[1], t[2])) throw InputError("parallelogram has three collinear vertices");
  }
  if (!plane.parallel(plane.join(v[0], v[1]), plane.join(v[2], v[3])) ||
      !plane.parallel(plane.join(v[1], v[2]), plane.join(v[3], v[0]))) {
    throw InputError("opposite sides are not parallel");
  }
  return plane.parallel(plane.join(v[0], v[2]), plane.join(v[1], v[3]));
}

ParallelogramSurvey survey_parallelograms(const IncidencePlane& plane) {
  ParallelogramSurvey survey;
  std::set<std::array<int, 4>> sets;
  const Net& net = plane.net();
  const int n = plane.point_count();
  // a is the smallest vertex, b < d its neighbours, c opposite a.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const LineId ab = plane.join(a, b);
      for (int d = b + 1; d < n; ++d) {
        if (plane.collinear(a, b, d)) continue;
        const LineId ad = plane.join(a, d);
        const LineId through_b{ad.cls, net.line_through(ad.cls, b)};
        const LineId through_d{ab.cls, net.line_through(ab.cls, d)};
        const int c = plane.meet(through_b, through_d);
        if (c < a) continue;
        ++survey.parallelograms;
        const std::array<int, 4> quad{a, b, c, d};
        auto sorted = quad;
        std::sort(sorted.begin(), sorted.end());
        sets.insert(sorted);
        if (diagonals_parallel(plane, quad)) {
          ++survey.diagonals_parallel;
        } else if (!survey.witness) {
          survey.witness = quad;
        }
      }
    }
  }
  survey.vertex_sets = sets.size();
  return survey;
}

std::string GridPoint::name() const { return std::to_string(x) + std::to_string(y); }

GridPoint GridPoint::parse(std::string_view text) {
  if (text.size() != 2 || text[0] < '1' || text[0] > '6' || text[1] < '1' || text[1] > '6') {
    throw InputError("grid point must be two digits 1..6, got '" + std::string(text) + "'");
  }
  return {text[0] - '0', text[1] - '0'};
}

Quadrant quadrant(GridPoint p) {
  const bool right = p.x >= 4;
  const bool upper = p.y >= 4;
  if (!right && !upper) return Quadrant::LL;
  if (right && !upper) return Quadrant::LR;
  if (!right) return Quadrant::UL;
  return Quadrant::UR;
}

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::LL:
      return "LL";
    case Quadrant::LR:
      return "LR";
    case Quadrant::UL:
      return "UL";
    case Quadrant::UR:
      return "UR";
  }
  return "?";
}

void GridConfig::place(const std::string& line, GridPoint p) {
  if (p.x < 1 || p.x > 6 || p.y < 1 || p.y > 6) throw InputError("grid point outside 1..6");
  auto& pts = lines[line];
  if (pts.contains(p)) return;
  for (const auto& q : pts) {
    if (q.x == p.x || q.y == p.y) {
      throw InputError("line " + line + " would contain " + q.name() + " and " + p.name() + " on one grid line");
    }
  }
  pts.insert(p);
}

std::optional<std::string> GridConfig::owner(GridPoint p) const {
  for (const auto& [name, pts] : lines) {
    if (pts.contains(p)) return name;
  }
  return std::nullopt;
}

namespace {

GridConfig config_from(const std::vector<std::pair<std::string, std::string>>& spec) {
  GridConfig config;
  for (const auto& [line, points] : spec) {
    config.lines[line];
    for (std::size_t i = 0; i + 1 < points.size(); i += 3) config.place(line, GridPoint::parse(points.substr(i, 2)));
  }
  return config;
}

using Permutation = std::array<int, 6>;  // sigma[x - 1] = y

std::vector<Permutation> all_permutations() {
  std::vector<Permutation> out;
  Permutation sigma{1, 2, 3, 4, 5, 6};
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::set<GridPoint> points_of(const Permutation& sigma) {
  std::set<GridPoint> out;
  for (int x = 1; x <= 6; ++x) out.insert({x, sigma[static_cast<std::size_t>(x - 1)]});
  return out;
}

bool on(const Permutation& sigma, GridPoint p) { return sigma[static_cast<std::size_t>(p.x - 1)] == p.y; }

int common(const std::set<GridPoint>& a, const std::set<GridPoint>& b) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [&](const GridPoint& p) { return b.contains(p); }));
}

nlohmann::json names(const std::set<GridPoint>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back(p.name());
  return out;
}

std::set<GridPoint> in_quadrant(const std::set<GridPoint>& pts, Quadrant q) {
  std::set<GridPoint> out;
  for (const auto& p : pts) {
    if (quadrant(p) == q) out.insert(p);
  }
  return out;
}

std::set<GridPoint> quadrant_points(Quadrant q) {
  std::set<GridPoint> out;
  for (int x = 1; x <= 6; ++x) {
    for (int y = 1; y <= 6; ++y) {
      if (quadrant({x, y}) == q) out.insert({x, y});
    }
  }
  return out;
}

// Compositions of `total` into `parts` positive parts, as sorted multisets.
std::set<std::vector<int>> positive_partitions(int total, int parts) {
  std::set<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 0) {
      if (left == 0) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.insert(sorted);
      }
      return;
    }
    for (int v = 1; v <= left; ++v) {
      current.push_back(v);
      self(self, left - v, slots - 1);
      current.pop_back();
    }
  };
  rec(rec, total, parts);
  return out;
}

const std::array<GridPoint, 3> kTriangle{GridPoint{4, 5}, GridPoint{5, 6}, GridPoint{6, 4}};

std::vector<std::string> render_grid(const GridConfig& config) {
  std::vector<std::string> lines;
  for (int y = 6; y >= 1; --y) {
    std::string row = "y=" + std::to_string(y) + " |";
    for (int x = 1; x <= 6; ++x) {
      const auto who = config.owner({x, y});
      row += " " + (who ? *who : std::string(".")) + " |";
    }
    lines.push_back(row);
  }
  lines.emplace_back("      1   2   3   4   5   6  (x)");
  return lines;
}

}  // namespace

GridConfig quadrant_config() {
  return config_from({{"R", "11 22 33 44 55 66"}, {"D", "13 22 31 46 54 65"}});
}

GridConfig propagation_seed() {
  return config_from({{"R", "11 22 33 44 55 66"}, {"D", "12 21 34 43 56 65"}, {"A", "13"}, {"B", "14"}});
}

std::pair<int, int> ll_ur_counts(const std::array<int, 6>& sigma) {
  int ll = 0;
  int ur = 0;
  for (int i = 0; i < 3; ++i) ll += sigma[static_cast<std::size_t>(i)] <= 3;
  for (int i = 3; i < 6; ++i) ur += sigma[static_cast<std::size_t>(i)] >= 4;
  return {ll, ur};
}

Certificate ll_ur_balance_check() {
  Certificate c;
  c.id = "affine.ll_ur_balance";
  c.claim = "a line that is not a grid line has as many points in LL as in UR";
  int total = 0;
  int balanced = 0;
  for (const auto& sigma : all_permutations()) {
    ++total;
    const auto [ll, ur] = ll_ur_counts(sigma);
    balanced += ll == ur;
  }
  const auto identity = ll_ur_counts({1, 2, 3, 4, 5, 6});
  const auto shift = ll_ur_counts({4, 5, 6, 1, 2, 3});
  c.inputs = {{"lines", "permutations of 1..6"}, {"LL", "x,y <= 3"}, {"UR", "x,y >= 4"}};
  c.payload = {{"permutations", total},
               {"balanced", balanced},
               {"identity", {{"LL", identity.first}, {"UR", identity.second}}},
               {"shift_by_3", {{"LL", shift.first}, {"UR", shift.second}}}};
  c.require(total == 720 && balanced == total);
  return c;
}

Certificate parallel_distribution_check() {
  Certificate c;
  c.id = "affine.parallel_distribution";
  c.claim = "the five other parallels of R (and of D) split the six LL points off the line as 2,1,1,1,1";
  const GridConfig config = quadrant_config();
  c.inputs = {{"R", names(config.lines.at("R"))}, {"D", names(config.lines.at("D"))}};

  const auto ll = quadrant_points(Quadrant::LL);
  bool ok = true;
  // R and D share a point, so no line is parallel to both.
  const int rd_common = common(config.lines.at("R"), config.lines.at("D"));
  bool rd_in_ll_ur = true;
  for (const auto& [name, pts] : config.lines) {
    for (const auto& p : pts) rd_in_ll_ur = rd_in_ll_ur && (quadrant(p) == Quadrant::LL || quadrant(p) == Quadrant::UR);
  }
  c.payload["R_D_common_points"] = rd_common;
  c.payload["R_D_inside_LL_and_UR"] = rd_in_ll_ur;
  ok = ok && rd_common == 1 && rd_in_ll_ur;

  for (const std::string line : {"R", "D"}) {
    std::set<GridPoint> off;
    for (const auto& p : ll) {
      if (!config.lines.at(line).contains(p)) off.insert(p);
    }
    // Each of the 5 other parallels meets the other line (inside LL or UR),
    // so by the balance it has a point in LL.
    const auto splits = positive_partitions(static_cast<int>(off.size()), 5);
    nlohmann::json split_json = nlohmann::json::array();
    int largest = 0;
    for (const auto& s : splits) {
      split_json.push_back(s);
      largest = std::max(largest, s.back());
    }
    c.payload[line] = {{"LL_points_off_line", names(off)},
                       {"count", off.size()},
                       {"other_parallels", 5},
                       {"distributions", split_json},
                       {"max_LL_points_on_a_parallel", largest}};
    ok = ok && off.size() == 6 && splits == std::set<std::vector<int>>{{1, 1, 1, 1, 2}} && largest == 2;
  }
  c.require(ok);
  return c;
}

Certificate collinear_triple_check() {
  Certificate c;
  c.id = "affine.collinear_triple";
  c.claim = "if 45, 56, 64 lie on one line L, every placement of L in LL fails";
  const GridConfig config = quadrant_config();
  const auto& R = config.lines.at("R");
  const auto& D = config.lines.at("D");
  c.inputs = {{"R", names(R)}, {"D", names(D)}, {"triangle", {"45", "56", "64"}}};

  bool vertices_off = true;
  for (const auto& v : kTriangle) vertices_off = vertices_off && !R.contains(v) && !D.contains(v);
  c.payload["vertices_off_R_and_D"] = vertices_off;

  nlohmann::json rejected = nlohmann::json::array();
  std::vector<std::pair<std::set<GridPoint>, std::string>> survivors;
  for (const auto& sigma : all_permutations()) {
    if (!std::all_of(kTriangle.begin(), kTriangle.end(), [&](GridPoint v) { return on(sigma, v); })) continue;
    const auto pts = points_of(sigma);
    const auto in_ll = in_quadrant(pts, Quadrant::LL);
    const int r = common(pts, R);
    const int d = common(pts, D);
    if (r > 1 || d > 1 || r + d == 0) {
      rejected.push_back({{"LL", names(in_ll)}, {"meets_R", r}, {"meets_D", d}});
      continue;
    }
    survivors.emplace_back(in_ll, r == 1 && d == 0 ? "R" : d == 1 && r == 0 ? "D" : "R,D");
  }

  nlohmann::json table = nlohmann::json::array();
  std::vector<std::string> table_lines;
  for (const auto& [pts, meets] : survivors) {
    table.push_back({{"LL", names(pts)}, {"meets", meets}});
    std::string row;
    for (const auto& p : pts) row += p.name() + " ";
    table_lines.push_back(row + meets);
  }
  c.payload["rejected"] = rejected;
  c.payload["table"] = table;
  c.display = table_lines;

  const std::vector<std::string> expected{"11 23 32 R", "12 21 33 R", "12 23 31 D", "13 21 32 D"};
  c.payload["matches_expected_table"] = table_lines == expected;
  bool ok = vertices_off && table_lines == expected;

  // Missing one of R, D makes L parallel to it, with three LL points.
  for (const auto& [pts, meets] : survivors) {
    Certificate branch;
    std::string label;
    for (const auto& p : pts) label += (label.empty() ? "" : "-") + p.name();
    branch.id = "affine.collinear_triple." + label;
    const std::string other = meets == "R" ? "D" : "R";
    branch.claim = "L misses " + other + ", so it is a parallel of " + other + " with too many LL points";
    branch.inputs = {{"LL", names(pts)}, {"meets", meets}};
    branch.payload = {{"parallel_to", other}, {"LL_points", pts.size()}, {"max_allowed", 2}};
    branch.require((meets == "R" || meets == "D") && pts.size() > 2);
    c.add(std::move(branch));
  }
  c.require(ok);
  return c;
}

Certificate triangle_side_check() {
  Certificate c;
  c.id = "affine.triangle_side";
  c.claim = "no side of the triangle 45, 56, 64 can avoid being parallel to R or D";
  const GridConfig config = quadrant_config();
  const auto& R = config.lines.at("R");
  const auto& D = config.lines.at("D");
  c.inputs = {{"R", names(R)}, {"D", names(D)}, {"triangle", {"45", "56", "64"}}};

  std::set<GridPoint> rd_ll;
  for (const auto& p : in_quadrant(R, Quadrant::LL)) {
    if (D.contains(p)) rd_ll.insert(p);
  }
  c.payload["R_and_D_in_LL"] = names(rd_ll);

  // A second LL point for a side through 22 must avoid column and row 2
  // and the two lines through 22.
  std::set<GridPoint> available;
  for (const auto& centre : rd_ll) {
    for (const auto& p : quadrant_points(Quadrant::LL)) {
      if (p.x == centre.x || p.y == centre.y || R.contains(p) || D.contains(p)) continue;
      available.insert(p);
    }
  }
  c.payload["second_points_available"] = names(available);

  c.payload["pigeonhole"] =
      "the three sides of a non-degenerate triangle are pairwise non-parallel, so at most one is parallel to R "
      "and at most one to D";
  bool ok = rd_ll == std::set<GridPoint>{{2, 2}} && available.empty();

  for (int i = 0; i < 3; ++i) {
    const GridPoint u = kTriangle[static_cast<std::size_t>(i)];
    const GridPoint v = kTriangle[static_cast<std::size_t>((i + 1) % 3)];
    const GridPoint w = kTriangle[static_cast<std::size_t>((i + 2) % 3)];
    int candidates = 0;
    int meets_in_ur = 0;
    int survivors = 0;
    for (const auto& sigma : all_permutations()) {
      if (!on(sigma, u) || !on(sigma, v) || on(sigma, w)) continue;
      ++candidates;
      const auto pts = points_of(sigma);
      const auto ur = in_quadrant(pts, Quadrant::UR);
      if (common(ur, R) + common(ur, D) > 0) ++meets_in_ur;
      // Not parallel to R or D means meeting each exactly once.
      if (common(pts, R) == 1 && common(pts, D) == 1) ++survivors;
    }
    Certificate side;
    side.id = "affine.triangle_side." + u.name() + "-" + v.name();
    side.claim = "side " + u.name() + " " + v.name() + " meets R or D twice or not at all";
    side.inputs = {{"side", {u.name(), v.name()}}, {"third_vertex", w.name()}};
    side.payload = {{"completions_not_through_third_vertex", candidates},
                    {"meeting_R_or_D_in_UR", meets_in_ur},
                    {"meeting_R_and_D_once_each", survivors},
                    {"scope", "checked for these R, D and vertices only"}};
    side.require(candidates > 0 && meets_in_ur == 0 && survivors == 0);
    c.add(std::move(side));
  }
  c.payload["case_split"] = "collinear vertices are handled by affine.collinear_triple";
  c.require(ok);
  return c;
}

std::vector<Derivation> try_rule(GridConfig& config, GridPoint corner, GridPoint opposite) {
  std::vector<Derivation> made;
  if (corner.x == opposite.x || corner.y == opposite.y) return made;
  const std::array<GridPoint, 4> quad{corner, GridPoint{corner.x, opposite.y}, GridPoint{opposite.x, corner.y}, opposite};
  const std::array<std::pair<int, int>, 2> diagonals{std::pair{0, 3}, std::pair{1, 2}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto [p, q] = diagonals[k];
    const auto [u, v] = diagonals[1 - k];
    for (const auto& [kname, kpts] : config.lines) {
      if (!kpts.contains(quad[p]) || !kpts.contains(quad[q])) continue;
      for (auto& [mname, mpts] : config.lines) {
        if (mname == kname) continue;
        for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
          if (!mpts.contains(quad[from]) || mpts.contains(quad[to])) continue;
          if (const auto holder = config.owner(quad[to])) {
            throw std::logic_error("parallel lines " + mname + " and " + *holder + " both need " + quad[to].name());
          }
          config.place(mname, quad[to]);
          made.push_back({quad, kname, mname, quad[from], quad[to]});
        }
      }
    }
  }
  return made;
}

Propagation propagate(GridConfig config, SweepOrder order, int bound) {
  std::vector<std::array<int, 4>> rects;  // x, x', y, y'
  for (int x = 1; x <= bound; ++x) {
    for (int x2 = x + 1; x2 <= bound; ++x2) {
      for (int y = 1; y <= bound; ++y) {
        for (int y2 = y + 1; y2 <= bound; ++y2) rects.push_back({x, x2, y, y2});
      }
    }
  }
  if (order == SweepOrder::ReverseLexicographic) std::reverse(rects.begin(), rects.end());
  if (order == SweepOrder::RowFirst) {
    std::stable_sort(rects.begin(), rects.end(), [](const auto& a, const auto& b) {
      return std::tie(a[2], a[3], a[0], a[1]) < std::tie(b[2], b[3], b[0], b[1]);
    });
  }
  Propagation result;
  for (bool changed = true; changed;) {
    changed = false;
    ++result.sweeps;
    for (const auto& r : rects) {
      auto made = try_rule(config, {r[0], r[2]}, {r[1], r[3]});
      changed = changed || !made.empty();
      result.derivations.insert(result.derivations.end(), made.begin(), made.end());
    }
  }
  result.fixpoint = std::move(config);
  return result;
}

Certificate propagate_parallelogram_rule() {
  Certificate c;
  c.id = "affine.parallelogram_rule";
  c.claim = "propagating A and B by the parallelogram rule fills x, y <= 4 and leaves no room in columns 5, 6";
  const GridConfig seed = propagation_seed();
  nlohmann::json seed_json = nlohmann::json::object();
  for (const auto& [name, pts] : seed.lines) seed_json[name] = names(pts);
  c.inputs = {{"lines", seed_json}, {"all_lines_parallel", true}};

  const Propagation lex = propagate(seed, SweepOrder::Lexicographic);
  const auto& fix = lex.fixpoint;
  nlohmann::json fix_json = nlohmann::json::object();
  for (const auto& [name, pts] : fix.lines) fix_json[name] = names(pts);
  c.payload["fixpoint"] = fix_json;
  c.payload["sweeps"] = lex.sweeps;

  nlohmann::json steps = nlohmann::json::array();
  for (const auto& d : lex.derivations) {
    steps.push_back({{"parallelogram",
                      {d.parallelogram[0].name(), d.parallelogram[1].name(), d.parallelogram[2].name(),
                       d.parallelogram[3].name()}},
                     {"diagonal_on", d.diagonal_line},
                     {"line", d.line},
                     {"from", d.from.name()},
                     {"adds", d.added.name()}});
  }
  c.payload["derivations"] = steps;

  bool confluent = true;
  for (auto order : {SweepOrder::ReverseLexicographic, SweepOrder::RowFirst}) {
    confluent = confluent && propagate(seed, order).fixpoint.lines == fix.lines;
  }
  c.payload["same_fixpoint_for_three_orders"] = confluent;

  const auto expect = config_from({{"A", "13 24 31 42"}, {"B", "14 23 32 41"}});
  const bool reproduced = fix.lines.at("A") == expect.lines.at("A") && fix.lines.at("B") == expect.lines.at("B");
  c.payload["matches_expected_A_B"] = reproduced;

  bool block_full = true;
  for (int x = 1; x <= 4; ++x) {
    for (int y = 1; y <= 4; ++y) block_full = block_full && fix.owner({x, y}).has_value();
  }
  c.payload["all_of_x_y_le_4_filled"] = block_full;

  // A and B each still need one point in column 5 and one in column 6.
  bool stuck = true;
  for (const std::string line : {"A", "B"}) {
    const auto& pts = fix.lines.at(line);
    std::vector<int> free_x, free_y;
    for (int k = 1; k <= 6; ++k) {
      if (std::none_of(pts.begin(), pts.end(), [k](const GridPoint& p) { return p.x == k; })) free_x.push_back(k);
      if (std::none_of(pts.begin(), pts.end(), [k](const GridPoint& p) { return p.y == k; })) free_y.push_back(k);
    }
    nlohmann::json options = nlohmann::json::array();
    bool any_legal = false;
    std::sort(free_y.begin(), free_y.end());
    do {
      nlohmann::json option = nlohmann::json::array();
      bool legal = true;
      for (std::size_t i = 0; i < free_x.size(); ++i) {
        const GridPoint p{free_x[i], free_y[i]};
        const auto holder = fix.owner(p);
        option.push_back(p.name() + (holder ? " on " + *holder : ""));
        legal = legal && !holder;
      }
      options.push_back(option);
      any_legal = any_legal || legal;
    } while (std::next_permutation(free_y.begin(), free_y.end()));
    c.payload["completions_of_" + line] = options;
    stuck = stuck && pts.size() == 4 && !any_legal;
  }
  c.payload["stuck"] = stuck;
  c.display = render_grid(fix);
  c.require(confluent && reproduced && block_full && stuck && !lex.derivations.empty());
  return c;
}

BruckRyser bruck_ryser(int n) {
  if (n < 2) throw InputError("order must be at least 2");
  BruckRyser r;
  r.n = n;
  r.residue = n % 4;
  for (int a = 0; a * a * 2 <= n && !r.squares; ++a) {
    const int rest = n - a * a;
    const int b = static_cast<int>(std::lround(std::sqrt(rest)));
    for (int bb = std::max(a, b - 1); bb <= b + 1; ++bb) {
      if (bb * bb == rest) {
        r.squares = std::pair{a, bb};
        break;
      }
    }
  }
  r.excluded = (r.residue == 1 || r.residue == 2) && !r.squares;
  return r;
}

bool bruck_ryser_excluded(int n) { return bruck_ryser(n).excluded; }

Certificate bruck_ryser_certificate(int n) {
  const BruckRyser r = bruck_ryser(n);
  Certificate c;
  c.id = "affine.bruck_ryser";
  c.claim = "order " + std::to_string(n) + (r.excluded ? " is" : " is not") + " ruled out by the Bruck-Ryser test";
  c.inputs = {{"n", n}};
  c.payload = {{"n", n}, {"residue_mod_4", r.residue}, {"excluded", r.excluded}};
  if (r.squares) {
    c.payload["sum_of_two_squares"] = {r.squares->first, r.squares->second};
  } else {
    c.payload["sum_of_two_squares"] = nullptr;
  }
  if (!r.excluded) {
    c.payload["reason"] = r.residue == 0 || r.residue == 3 ? "n mod 4 is " + std::to_string(r.residue)
                                                           : "n is a sum of two squares";
  }
  return c;
}

Certificate net_implication_certificate() {
  Certificate c;
  c.id = "affine.net_implication";
  c.claim = "four parallel classes of an affine plane of order n form an (n, 4) net";
  c.inputs = {{"orders", {3, 4, 5}}};
  bool ok = true;
  for (int q : {3, 4, 5}) {
    const IncidencePlane plane = ag2(q);
    auto classes = plane.net().classes();
    classes.resize(4);
    bool valid = true;
    try {
      validate_net(q, classes);
    } catch (const ValidationError&) {
      valid = false;
    }
    c.payload["AG(2," + std::to_string(q) + ")"] = {{"classes", plane.net().class_count()}, {"four_class_net", valid}};
    ok = ok && valid;
  }
  c.payload["order_6"] = "a plane of order 6 would give a (6, 4) net, which the officers proof excludes";
  c.require(ok);
  return c;
}

}  // namespace officers
