#include "officers/parallax.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "officers/errors.hpp"
#include "officers/netcode.hpp"

namespace officers {

int Parallax::l() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

int Parallax::m() const noexcept {
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) total += counts[i] * counts[j];
  }
  return total;
}

std::string Parallax::to_string() const {
  std::string s;
  for (int c : counts) s += std::to_string(c);
  return s;
}

Parallax Parallax::parse(std::string_view digits) {
  if (digits.size() != 4) throw InputError("parallax: expected four digits, got '" + std::string(digits) + "'");
  Parallax pi;
  for (std::size_t i = 0; i < 4; ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw InputError("parallax: expected four digits, got '" + std::string(digits) + "'");
    }
    pi.counts[i] = digits[i] - '0';
  }
  return pi;
}

LineSet::LineSet(const Net& net, std::vector<LineId> members) : net_(&net), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (const auto& id : members_) {
    if (id.cls < 0 || id.cls >= net.class_count() || id.index < 0 || id.index >= net.order()) {
      throw InputError("line set: line (" + std::to_string(id.cls) + "," + std::to_string(id.index) +
                       ") is not in the net");
    }
  }
}

Parallax LineSet::parallax() const {
  if (net_->class_count() != 4) throw UnsupportedError("parallax: net must have exactly four classes");
  Parallax pi;
  for (const auto& id : members_) ++pi.counts[static_cast<std::size_t>(id.cls)];
  return pi;
}

GF2Vector LineSet::sum() const {
  GF2Vector c(static_cast<std::size_t>(net_->point_count()));
  for (const auto& id : members_) c ^= characteristic_vector(*net_, id);
  return c;
}

PointProfile profile(const LineSet& lines) {
  const Net& net = lines.net();
  if (net.class_count() != 4) throw UnsupportedError("profile: net must have exactly four classes");
  std::vector<int> multiplicity(static_cast<std::size_t>(net.point_count()), 0);
  for (const auto& id : lines.members()) {
    for (int p : net.line(id)) ++multiplicity[static_cast<std::size_t>(p)];
  }
  PointProfile prof;
  for (int k : multiplicity) {
    switch (k) {
      case 1: ++prof.p1; break;
      case 2: ++prof.p2; break;
      case 3: ++prof.p3; break;
      case 4: ++prof.p4; break;
      default: break;
    }
  }
  return prof;
}

WeightFormula weight_decomposition(const Parallax& pi, int n) {
  return WeightFormula{n * pi.l() - 2 * pi.m()};
}

Parallax switch_classes(const Parallax& pi, std::span<const int> classes, SwitchParity parity, int n) {
  std::set<int> chosen;
  for (int c : classes) {
    if (c < 0 || c > 3) throw InputError("switch: class index " + std::to_string(c) + " outside 0..3");
    if (!chosen.insert(c).second) throw InputError("switch: class " + std::to_string(c) + " listed twice");
  }
  if (chosen.size() % 2 != 0 && parity == SwitchParity::Even) {
    throw InputError("switch: odd number of classes changes c(L); request SwitchParity::AllowOdd");
  }
  Parallax out = pi;
  for (int c : chosen) out.counts[static_cast<std::size_t>(c)] = n - pi.counts[static_cast<std::size_t>(c)];
  return out;
}

LineSet switch_lines(const LineSet& lines, std::span<const int> classes) {
  const Net& net = lines.net();
  std::set<int> chosen(classes.begin(), classes.end());
  std::vector<LineId> out;
  for (const auto& id : lines.members()) {
    if (!chosen.contains(id.cls)) out.push_back(id);
  }
  for (int c : chosen) {
    if (c < 0 || c >= net.class_count()) throw InputError("switch_lines: class index out of range");
    for (int i = 0; i < net.order(); ++i) {
      const LineId id{c, i};
      if (!std::binary_search(lines.members().begin(), lines.members().end(), id)) out.push_back(id);
    }
  }
  return LineSet(net, std::move(out));
}

bool is_normalized(const Parallax& pi) {
  const auto& l = pi.counts;
  if (!(3 >= l[0] && l[0] >= l[1] && l[1] >= l[2])) return false;
  if (l[0] == 3 && !(l[2] >= l[3])) return false;
  return true;
}

std::optional<ZeroWeightSolution> zero_weight_solution(const Parallax& pi) {
  const int l = pi.l();
  const int m = pi.m();
  const int twice_p2 = 9 * l - m;
  const int four_p4 = m - 3 * l;
  if (twice_p2 < 0 || twice_p2 % 2 != 0) return std::nullopt;
  if (four_p4 < 0 || four_p4 % 4 != 0) return std::nullopt;
  return ZeroWeightSolution{twice_p2 / 2, four_p4 / 4};
}

namespace {

std::vector<Parallax> box() {
  std::vector<Parallax> out;
  for (int a = 0; a <= kOfficersOrder; ++a) {
    for (int b = 0; b <= kOfficersOrder; ++b) {
      for (int c = 0; c <= kOfficersOrder; ++c) {
        for (int d = 0; d <= kOfficersOrder; ++d) out.push_back(Parallax{{a, b, c, d}});
      }
    }
  }
  return out;
}

bool is_empty(const Parallax& pi) { return pi.l() == 0; }

}  // namespace

std::vector<Parallax> enumerate_zero_parallaxes(EnumerationOrder order) {
  std::vector<Parallax> out;
  const auto all = box();
  if (order == EnumerationOrder::FilterThenSolve) {
    for (const auto& pi : all) {
      if (is_normalized(pi) && zero_weight_solution(pi) && !is_empty(pi)) out.push_back(pi);
    }
  } else {
    std::vector<Parallax> solvable;
    std::copy_if(all.begin(), all.end(), std::back_inserter(solvable),
                 [](const Parallax& pi) { return zero_weight_solution(pi).has_value(); });
    std::copy_if(solvable.begin(), solvable.end(), std::back_inserter(out),
                 [](const Parallax& pi) { return is_normalized(pi) && !is_empty(pi); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Parallax> switching_orbit(const Parallax& pi) {
  std::set<Parallax> out;
  for (int mask = 0; mask < 16; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    Parallax switched = pi;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1 << i)) switched.counts[static_cast<std::size_t>(i)] = kOfficersOrder - pi.counts[static_cast<std::size_t>(i)];
    }
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      Parallax p;
      for (int i = 0; i < 4; ++i) p.counts[static_cast<std::size_t>(i)] = switched.counts[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      out.insert(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

NormalizationAudit audit_normalization() {
  NormalizationAudit audit;
  const auto all = box();
  audit.box_size = static_cast<int>(all.size());
  const auto candidates = enumerate_zero_parallaxes();
  const auto trivial = switching_orbit(Parallax{});

  audit.every_orbit_normalizable = true;
  audit.candidates_cover_orbit_closed = true;
  for (const auto& pi : all) {
    const auto orbit = switching_orbit(pi);
    const bool normalizable = std::any_of(orbit.begin(), orbit.end(), is_normalized);
    audit.every_orbit_normalizable = audit.every_orbit_normalizable && normalizable;

    const bool closed = std::all_of(orbit.begin(), orbit.end(),
                                    [](const Parallax& p) { return zero_weight_solution(p).has_value(); });
    if (!closed) continue;
    ++audit.orbit_closed;
    for (const auto& p : orbit) {
      if (is_normalized(p)) audit.orbit_closed_normal_forms.insert(p);
    }
    const bool covered =
        trivial.contains(pi) || std::any_of(candidates.begin(), candidates.end(),
                                            [&](const Parallax& c) { return orbit.contains(c); });
    audit.candidates_cover_orbit_closed = audit.candidates_cover_orbit_closed && covered;
  }
  return audit;
}

namespace {

// Replays the double counting: with p2 and p1 eliminated via
//   n l = p1 + 2 p2 + 3 p3 + 4 p4   and   m = p2 + 3 p3 + 6 p4,
// p1 + p3 must equal the formula for every (p3, p4) in a range.
bool formula_matches_double_counting(const Parallax& pi, const WeightFormula& f, int n) {
  for (int p3 = 0; p3 <= n * n; ++p3) {
    for (int p4 = 0; p4 <= n * n; ++p4) {
      const int p2 = pi.m() - 3 * p3 - 6 * p4;
      const int p1 = n * pi.l() - 2 * p2 - 3 * p3 - 4 * p4;
      if (p1 + p3 != f.evaluate(p3, p4)) return false;
    }
  }
  return true;
}

nlohmann::json formula_json(const WeightFormula& f) {
  return {{"base", f.base}, {"p3_coefficient", f.p3_coefficient}, {"p4_coefficient", f.p4_coefficient}};
}

}  // namespace

Certificate exclusion_certificate(const Parallax& pi, const ArithmeticFault& fault) {
  const int n = kOfficersOrder;
  const std::string name = pi.to_string();
  if (name == "2222") {
    throw UnsupportedError("exclusion_certificate: 2222 is handled by the Graeco-Latin completion check");
  }

  Certificate cert;
  cert.id = "exclude." + name;
  cert.inputs = {{"parallax", name}, {"n", n}};

  auto formula_for = [&](const Parallax& p) {
    WeightFormula f = weight_decomposition(p, n);
    f.base += fault.weight_base_offset;
    return f;
  };

  if (name == "2226") {
    cert.claim = "no zero sum has parallax 2226";
    const std::array<int, 2> classes{2, 3};
    const Parallax switched = switch_classes(pi, classes);

    Certificate sw;
    sw.id = "exclude.2226.switch";
    sw.claim = "switching an even number of classes keeps c(L); 2226 becomes 2240";
    sw.inputs = {{"parallax", name}, {"classes", classes}};
    sw.payload = {{"switched", switched.to_string()}, {"class_count", classes.size()}};
    sw.require(switched.to_string() == "2240" && classes.size() % 2 == 0);

    const WeightFormula f = formula_for(switched);
    Certificate wt;
    wt.id = "exclude.2226.weight";
    wt.claim = "wt(c(M)) = 8 + 4 p3 + 8 p4 > 0 for parallax 2240";
    wt.inputs = {{"parallax", switched.to_string()}, {"n", n}};
    const bool identity = formula_matches_double_counting(switched, f, n);
    // Coefficients are positive, so the minimum over p3, p4 >= 0 is the base.
    const int min_weight = f.evaluate(0, 0);
    wt.payload = {{"l", switched.l()}, {"m", switched.m()}, {"formula", formula_json(f)},
                  {"double_counting_replayed", identity}, {"min_weight", min_weight}};
    wt.require(identity && f.p3_coefficient >= 0 && f.p4_coefficient >= 0 && min_weight > 0);

    cert.add(std::move(sw));
    cert.add(std::move(wt));
    return cert;
  }

  if (name == "3330" || name == "3332") {
    const bool adjoin = name == "3330";
    cert.claim = "no zero sum has parallax " + name;
    Parallax modified = pi;
    modified.counts[3] += adjoin ? 1 : -1;
    // c(M) = c(L) + (one line of the fourth class) = that line's vector.
    const int weight_of_modified = n;

    Certificate mod;
    mod.id = "exclude." + name + ".modify";
    mod.claim = std::string(adjoin ? "adjoining" : "removing") +
                " one line of the fourth class gives parallax 3331 with wt(c(M)) = 6";
    mod.inputs = {{"parallax", name}, {"operation", adjoin ? "adjoin" : "remove"}};
    mod.payload = {{"modified", modified.to_string()}, {"weight", weight_of_modified}};
    mod.require(modified.to_string() == "3331");

    const WeightFormula f = formula_for(modified);
    Certificate wt;
    wt.id = "exclude." + name + ".weight";
    wt.claim = "wt(c(M)) = -12 + 4 p3 + 8 p4 is a multiple of 4, but equals 6";
    wt.inputs = {{"parallax", modified.to_string()}, {"n", n}, {"weight", weight_of_modified}};
    const bool identity = formula_matches_double_counting(modified, f, n);
    const int gap = weight_of_modified - f.base;  // must be 4 p3 + 8 p4
    const int residue = ((gap % 4) + 4) % 4;
    wt.payload = {{"l", modified.l()}, {"m", modified.m()}, {"formula", formula_json(f)},
                  {"double_counting_replayed", identity}, {"weight_minus_base", gap},
                  {"residue_mod_4", residue}};
    wt.require(identity && f.p3_coefficient % 4 == 0 && f.p4_coefficient % 4 == 0 && residue != 0);

    cert.add(std::move(mod));
    cert.add(std::move(wt));
    return cert;
  }

  throw UnsupportedError("exclusion_certificate: no exclusion argument for parallax " + name);
}

}  // namespace officers
