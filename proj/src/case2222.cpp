#include "officers/case2222.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "officers/designs_io.hpp"
#include "officers/errors.hpp"

namespace officers {

namespace {

const std::array<std::string, 6> kLatinNames{"a", "b", "c", "d", "e", "f"};
const std::array<std::string, 6> kGreekNames{"α", "β", "γ", "δ", "ε", "ζ"};

// Row 1 on top; "." marks an untagged cell.
constexpr std::string_view kTagDiagram = R"(
0011    .      .      .      100-1  -10-10
.       00-11  .      .      1010   -100-1
.       .      001-1  .      10-10  -1001
.       .      .      00-1-1 1001   -1010
01-10   010-1  0101   0110   1100   -1100
0-10-1  0-110  0-1-10 0-101  1-100  -1-100
)";

constexpr std::string_view kReferenceSquare = R"(
eε  .   .   .   bζ  fα
.   fε  .   .   eβ  cζ
.   .   eζ  .   fδ  aε
.   .   .   fζ  dε  eγ
fγ  dζ  cε  eδ  aα  bβ
aζ  eα  fβ  bε  cγ  dδ
)";

struct NamedTriple {
  const char* name;
  std::array<const char*, 3> tags;
};

constexpr std::array<NamedTriple, 8> kLineAssignment{{
    {"a", {"1100", "0-10-1", "-1001"}},
    {"b", {"-1100", "0-101", "100-1"}},
    {"c", {"1-100", "0101", "-100-1"}},
    {"d", {"-1-100", "010-1", "1001"}},
    {"α", {"1100", "0-110", "-10-10"}},
    {"β", {"-1100", "0-1-10", "1010"}},
    {"γ", {"1-100", "01-10", "-1010"}},
    {"δ", {"-1-100", "0110", "10-10"}},
}};

std::vector<std::vector<std::string>> split_grid(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (words >> tok) tokens.push_back(tok);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  return rows;
}

int symbol_index(const std::array<std::string, 6>& names, const std::string& s) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) throw InputError("unknown symbol '" + s + "'");
  return static_cast<int>(it - names.begin());
}

std::string pair_name(const SymbolPair& p) { return latin_name(p.latin) + greek_name(p.greek); }

nlohmann::json pair_names(const std::vector<SymbolPair>& pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pairs) out.push_back(pair_name(p));
  return out;
}

nlohmann::json list_json(const LineList& list) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : list) {
    out.push_back({t[0].to_string(), t[1].to_string(), t[2].to_string()});
  }
  return out;
}

bool list_contains(const LineList& list, const TagTriple& t) {
  return std::find(list.begin(), list.end(), t) != list.end();
}

}  // namespace

std::string PointTag::to_string() const {
  std::string s;
  for (int v : x) s += std::to_string(v);
  return s;
}

PointTag PointTag::parse(std::string_view text) {
  PointTag t;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    int sign = 1;
    if (pos < text.size() && text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    if (pos >= text.size() || (text[pos] != '0' && text[pos] != '1') || (sign < 0 && text[pos] == '0')) {
      throw InputError("point tag: cannot parse '" + std::string(text) + "'");
    }
    t.x[i] = sign * (text[pos] - '0');
    ++pos;
  }
  if (pos != text.size()) throw InputError("point tag: trailing characters in '" + std::string(text) + "'");
  return t;
}

PointTag PointTag::negated() const {
  PointTag t;
  for (std::size_t i = 0; i < 4; ++i) t.x[i] = -x[i];
  return t;
}

int PointTag::zero_count() const {
  return static_cast<int>(std::count(x.begin(), x.end(), 0));
}

std::vector<PointTag> all_tags() {
  std::vector<PointTag> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          PointTag t;
          t.x[static_cast<std::size_t>(i)] = si;
          t.x[static_cast<std::size_t>(j)] = sj;
          out.push_back(t);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<GridPos, PointTag> standard_tagging() {
  std::map<GridPos, PointTag> tags;
  const auto rows = split_grid(kTagDiagram);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == ".") continue;
      tags.emplace(GridPos{static_cast<int>(r) + 1, static_cast<int>(c) + 1}, PointTag::parse(rows[r][c]));
    }
  }
  return tags;
}

TagTriple make_triple(std::array<PointTag, 3> tags) {
  std::sort(tags.begin(), tags.end());
  return tags;
}

LineList negated(const LineList& list) { return with_signs(list, {-1, -1, -1, -1}); }

LineList with_signs(const LineList& list, const std::array<int, 4>& signs) {
  LineList out;
  for (const auto& triple : list) {
    std::array<PointTag, 3> t = triple;
    for (auto& tag : t) {
      for (std::size_t i = 0; i < 4; ++i) tag.x[i] *= signs[i];
    }
    out.push_back(make_triple(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LineList> enumerate_line_lists(int cls) {
  if (cls < 0 || cls > 3) throw InputError("enumerate_line_lists: class must be 0..3");
  const auto c = static_cast<std::size_t>(cls);
  std::vector<PointTag> points;
  for (const auto& t : all_tags()) {
    if (t.x[c] == 0) points.push_back(t);
  }

  // Triples hitting each of the six Lambda lines outside class `cls` once.
  std::vector<TagTriple> candidates;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      for (std::size_t d = b + 1; d < points.size(); ++d) {
        bool ok = true;
        for (std::size_t j = 0; j < 4 && ok; ++j) {
          if (j == c) continue;
          for (int s : {1, -1}) {
            const int hits = (points[a].x[j] == s) + (points[b].x[j] == s) + (points[d].x[j] == s);
            ok = ok && hits == 1;
          }
        }
        if (ok) candidates.push_back(make_triple({points[a], points[b], points[d]}));
      }
    }
  }

  // Partitions of the 12 points into four candidate triples.
  std::vector<LineList> lists;
  LineList current;
  std::set<PointTag> covered;
  auto search = [&](auto&& self, std::size_t start) -> void {
    if (covered.size() == points.size()) {
      LineList sorted = current;
      std::sort(sorted.begin(), sorted.end());
      lists.push_back(std::move(sorted));
      return;
    }
    // Branch on the smallest uncovered point so each partition appears once.
    const PointTag* first = nullptr;
    for (const auto& p : points) {
      if (!covered.contains(p)) {
        first = &p;
        break;
      }
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const auto& t = candidates[i];
      if (std::find(t.begin(), t.end(), *first) == t.end()) continue;
      if (std::any_of(t.begin(), t.end(), [&](const PointTag& p) { return covered.contains(p); })) continue;
      for (const auto& p : t) covered.insert(p);
      current.push_back(t);
      self(self, 0);
      current.pop_back();
      for (const auto& p : t) covered.erase(p);
    }
  };
  search(search, 0);
  std::sort(lists.begin(), lists.end());
  return lists;
}

bool sign_changes_act_transitively() {
  std::array<std::vector<LineList>, 4> per_class;
  for (int k = 0; k < 4; ++k) per_class[static_cast<std::size_t>(k)] = enumerate_line_lists(k);
  using Collection = std::array<LineList, 4>;
  std::set<Collection> all;
  for (int mask = 0; mask < 16; ++mask) {
    Collection col;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& options = per_class[k];
      if (options.size() != 2) return false;
      col[k] = options[static_cast<std::size_t>((mask >> k) & 1)];
    }
    all.insert(col);
  }
  const Collection base{per_class[0][0], per_class[1][0], per_class[2][0], per_class[3][0]};
  std::set<Collection> reached;
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> signs{};
    for (std::size_t i = 0; i < 4; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    Collection image;
    for (std::size_t k = 0; k < 4; ++k) image[k] = with_signs(base[k], signs);
    reached.insert(image);
  }
  return reached == all;
}

std::map<std::string, TagTriple> standard_line_assignment() {
  std::map<std::string, TagTriple> out;
  for (const auto& named : kLineAssignment) {
    out.emplace(named.name, make_triple({PointTag::parse(named.tags[0]), PointTag::parse(named.tags[1]),
                                         PointTag::parse(named.tags[2])}));
  }
  return out;
}

std::string latin_name(int symbol) { return kLatinNames.at(static_cast<std::size_t>(symbol)); }
std::string greek_name(int symbol) { return kGreekNames.at(static_cast<std::size_t>(symbol)); }

PartialGraecoSquare::PartialGraecoSquare(int order)
    : order_(order), cells_(static_cast<std::size_t>(order * order)) {
  if (order < 1) throw InputError("partial square: order must be positive");
}

const std::optional<SymbolPair>& PartialGraecoSquare::at(int row, int col) const {
  return cells_.at(static_cast<std::size_t>(row * order_ + col));
}

void PartialGraecoSquare::set(int row, int col, std::optional<SymbolPair> value) {
  if (value && (value->latin < 0 || value->latin >= order_ || value->greek < 0 || value->greek >= order_)) {
    throw InputError("partial square: symbol out of range");
  }
  cells_.at(static_cast<std::size_t>(row * order_ + col)) = value;
}

std::vector<GridPos> PartialGraecoSquare::blanks() const {
  std::vector<GridPos> out;
  for (int r = 0; r < order_; ++r) {
    for (int c = 0; c < order_; ++c) {
      if (!at(r, c)) out.push_back({r + 1, c + 1});
    }
  }
  return out;
}

int PartialGraecoSquare::filled_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
}

std::optional<std::string> PartialGraecoSquare::conflict() const {
  std::set<std::pair<int, int>> pairs;
  for (int r = 0; r < order_; ++r) {
    for (int c = 0; c < order_; ++c) {
      const auto& v = at(r, c);
      if (!v) continue;
      if (!pairs.insert({v->latin, v->greek}).second) {
        return "pair repeated at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      }
      for (int k = 0; k < order_; ++k) {
        for (const auto& [rr, cc] : {std::pair{r, k}, std::pair{k, c}}) {
          if (rr * order_ + cc >= r * order_ + c) continue;
          const auto& w = at(rr, cc);
          if (!w) continue;
          if (w->latin == v->latin || w->greek == v->greek) {
            return "symbol repeated between (" + std::to_string(rr + 1) + "," + std::to_string(cc + 1) +
                   ") and (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> PartialGraecoSquare::render() const {
  std::vector<std::string> lines;
  for (int r = 0; r < order_; ++r) {
    std::string line;
    for (int c = 0; c < order_; ++c) {
      const auto& v = at(r, c);
      const bool named = order_ <= 6;
      std::string cell = !v ? "." : named ? pair_name(*v) : std::to_string(v->latin) + std::to_string(v->greek);
      line += cell;
      if (c + 1 < order_) line += std::string(cell == "." ? 2 : 1, ' ');
    }
    lines.push_back(line);
  }
  return lines;
}

PartialGraecoSquare parse_partial_square(std::string_view text) {
  const auto rows = split_grid(text);
  const int n = static_cast<int>(rows.size());
  PartialGraecoSquare p(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) throw InputError("partial square: ragged row");
    for (int c = 0; c < n; ++c) {
      const auto& tok = rows[r][c];
      if (tok == ".") continue;
      auto [latin, greek] = split_first_codepoint(tok);
      p.set(r, c, SymbolPair{symbol_index(kLatinNames, latin), symbol_index(kGreekNames, greek)});
    }
  }
  return p;
}

PartialGraecoSquare reference_partial_square() { return parse_partial_square(kReferenceSquare); }

PartialGraecoSquare build_partial_square() {
  const auto tags = standard_tagging();
  const auto assignment = standard_line_assignment();
  auto line_for = [&](const PointTag& tag, std::size_t coord, int plus, int minus,
                      const std::array<std::string, 6>& names) {
    if (tag.x[coord] == 1) return plus;
    if (tag.x[coord] == -1) return minus;
    for (int s = 0; s < 4; ++s) {
      const auto& triple = assignment.at(names[static_cast<std::size_t>(s)]);
      if (std::find(triple.begin(), triple.end(), tag) != triple.end()) return s;
    }
    throw std::logic_error("tag " + tag.to_string() + " is on no assigned line");
  };
  PartialGraecoSquare p(6);
  for (const auto& [pos, tag] : tags) {
    const int latin = line_for(tag, 2, 4, 5, kLatinNames);  // e: x3 = 1, f: x3 = -1
    const int greek = line_for(tag, 3, 4, 5, kGreekNames);  // epsilon / zeta
    p.set(pos.row - 1, pos.col - 1, SymbolPair{latin, greek});
  }
  return p;
}

CompletionSearch count_completions(const PartialGraecoSquare& p, const CompletionOptions& options) {
  const int n = p.order();
  if (n > 31) throw UnsupportedError("count_completions: order above 31");
  if (auto clash = p.conflict()) throw InputError("count_completions: " + *clash);

  std::vector<GridPos> cells = options.cells.empty() ? p.blanks() : options.cells;
  for (const auto& pos : cells) {
    if (pos.row < 1 || pos.row > n || pos.col < 1 || pos.col > n || p.at(pos.row - 1, pos.col - 1)) {
      throw InputError("count_completions: cell to fill is outside the grid or already filled");
    }
  }
  switch (options.order) {
    case BlankOrder::RowMajor:
      std::sort(cells.begin(), cells.end());
      break;
    case BlankOrder::ColumnMajor:
      std::sort(cells.begin(), cells.end(),
                [](const GridPos& a, const GridPos& b) { return std::pair{a.col, a.row} < std::pair{b.col, b.row}; });
      break;
    case BlankOrder::ReverseRowMajor:
      std::sort(cells.begin(), cells.end(), [](const GridPos& a, const GridPos& b) { return b < a; });
      break;
  }

  std::vector<SymbolPair> domain = options.domain;
  if (domain.empty()) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) domain.push_back({a, b});
    }
  }
  std::sort(domain.begin(), domain.end());

  std::vector<std::uint32_t> row_latin(n, 0), col_latin(n, 0), row_greek(n, 0), col_greek(n, 0);
  std::vector<char> used(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (const auto& v = p.at(r, c)) {
        row_latin[r] |= 1U << v->latin;
        col_latin[c] |= 1U << v->latin;
        row_greek[r] |= 1U << v->greek;
        col_greek[c] |= 1U << v->greek;
        used[static_cast<std::size_t>(v->latin * n + v->greek)] = 1;
      }
    }
  }

  CompletionSearch result;
  result.placements_per_depth.assign(cells.size(), 0);
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == cells.size()) {
      ++result.completions;
      return;
    }
    const int r = cells[depth].row - 1;
    const int c = cells[depth].col - 1;
    for (const auto& [a, b] : domain) {
      const std::uint32_t la = 1U << a;
      const std::uint32_t gb = 1U << b;
      const auto key = static_cast<std::size_t>(a * n + b);
      if ((row_latin[r] | col_latin[c]) & la) continue;
      if ((row_greek[r] | col_greek[c]) & gb) continue;
      if (used[key]) continue;
      ++result.nodes;
      ++result.placements_per_depth[depth];
      row_latin[r] |= la;
      col_latin[c] |= la;
      row_greek[r] |= gb;
      col_greek[c] |= gb;
      used[key] = 1;
      self(self, depth + 1);
      row_latin[r] &= ~la;
      col_latin[c] &= ~la;
      row_greek[r] &= ~gb;
      col_greek[c] &= ~gb;
      used[key] = 0;
    }
  };
  search(search, 0);
  return result;
}

ExclusionTable exclusion_table(const PartialGraecoSquare& p, int block, int alphabet) {
  ExclusionTable table;
  auto collect = [&](bool by_row, int index) {
    std::set<int> latin, greek;
    for (int k = 0; k < p.order(); ++k) {
      const auto& v = by_row ? p.at(index, k) : p.at(k, index);
      if (!v) continue;
      if (v->latin < alphabet) latin.insert(v->latin);
      if (v->greek < alphabet) greek.insert(v->greek);
    }
    return std::pair{std::vector<int>(latin.begin(), latin.end()), std::vector<int>(greek.begin(), greek.end())};
  };
  for (int i = 0; i < block; ++i) {
    table.rows.push_back(collect(true, i));
    table.cols.push_back(collect(false, i));
  }
  for (int r = 0; r < p.order(); ++r) {
    for (int c = 0; c < p.order(); ++c) {
      const auto& v = p.at(r, c);
      if (v && v->latin < alphabet && v->greek < alphabet) table.used_pairs.push_back(*v);
    }
  }
  std::sort(table.used_pairs.begin(), table.used_pairs.end());
  return table;
}

namespace {

// Pairs a blank cell can take given the filled cells alone.
std::vector<SymbolPair> allowed_pairs(const PartialGraecoSquare& p, int r, int c) {
  const int n = p.order();
  std::set<int> latin, greek;
  std::set<SymbolPair> used;
  for (int k = 0; k < n; ++k) {
    for (const auto& v : {p.at(r, k), p.at(k, c)}) {
      if (!v) continue;
      latin.insert(v->latin);
      greek.insert(v->greek);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (const auto& v = p.at(i, j)) used.insert(*v);
    }
  }
  std::vector<SymbolPair> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!latin.contains(a) && !greek.contains(b) && !used.contains({a, b})) out.push_back({a, b});
    }
  }
  return out;
}

std::string cell_name(const GridPos& g) { return std::to_string(g.row) + "," + std::to_string(g.col); }

nlohmann::json names(const std::vector<int>& symbols, bool greek) {
  nlohmann::json out = nlohmann::json::array();
  for (int s : symbols) out.push_back(greek ? greek_name(s) : latin_name(s));
  return out;
}

}  // namespace

Certificate cross_certificate(const PartialGraecoSquare& p) {
  Certificate cert;
  cert.id = "case2222.cross";
  cert.claim = "the cross of the row and column with equal exclusions cannot be filled";
  cert.inputs = {{"square", p.render()}};

  const ExclusionTable table = exclusion_table(p);
  nlohmann::json rows_json = nlohmann::json::array();
  nlohmann::json cols_json = nlohmann::json::array();
  for (const auto& [l, g] : table.rows) rows_json.push_back({{"latin", names(l, false)}, {"greek", names(g, true)}});
  for (const auto& [l, g] : table.cols) cols_json.push_back({{"latin", names(l, false)}, {"greek", names(g, true)}});
  cert.payload["row_exclusions"] = rows_json;
  cert.payload["column_exclusions"] = cols_json;
  cert.payload["excluded_pairs"] = pair_names(table.used_pairs);

  std::optional<GridPos> center;
  for (int r = 0; r < static_cast<int>(table.rows.size()) && !center; ++r) {
    for (int c = 0; c < static_cast<int>(table.cols.size()) && !center; ++c) {
      if (!p.at(r, c) && table.rows[r] == table.cols[c]) center = GridPos{r + 1, c + 1};
    }
  }
  if (!center) {
    cert.payload["error"] = "no row and column share their exclusions";
    cert.require(false);
    return cert;
  }

  std::vector<GridPos> cross;
  for (int k = 1; k <= p.order(); ++k) {
    if (!p.at(center->row - 1, k - 1)) cross.push_back({center->row, k});
  }
  for (int k = 1; k <= p.order(); ++k) {
    if (k != center->row && !p.at(k - 1, center->col - 1)) cross.push_back({k, center->col});
  }
  std::sort(cross.begin(), cross.end());
  nlohmann::json cross_json = nlohmann::json::array();
  for (const auto& g : cross) cross_json.push_back(cell_name(g));
  cert.payload["center"] = cell_name(*center);
  cert.payload["cross"] = cross_json;

  std::map<GridPos, std::vector<SymbolPair>> allowed;
  std::set<SymbolPair> pool;
  bool within_alphabet = true;
  for (const auto& g : cross) {
    allowed[g] = allowed_pairs(p, g.row - 1, g.col - 1);
    for (const auto& s : allowed[g]) {
      pool.insert(s);
      within_alphabet = within_alphabet && s.latin < 4 && s.greek < 4;
    }
  }
  const std::vector<SymbolPair> pool_list(pool.begin(), pool.end());
  cert.payload["pool"] = pair_names(pool_list);
  cert.payload["pool_within_abcd_x_alpha_delta"] = within_alphabet;

  nlohmann::json positions = nlohmann::json::object();
  for (const auto& s : pool_list) {
    nlohmann::json where = nlohmann::json::array();
    for (const auto& g : cross) {
      if (std::find(allowed[g].begin(), allowed[g].end(), s) != allowed[g].end()) where.push_back(cell_name(g));
    }
    positions[pair_name(s)] = where;
  }
  cert.payload["positions"] = positions;

  const int others = static_cast<int>(cross.size()) - 1;
  bool all_contradict = true;
  for (const auto& choice : allowed[*center]) {
    std::vector<SymbolPair> remaining;
    for (const auto& s : pool_list) {
      if (s == choice || s.latin == choice.latin || s.greek == choice.greek) continue;
      const bool placeable = std::any_of(cross.begin(), cross.end(), [&](const GridPos& g) {
        return g != *center && std::find(allowed[g].begin(), allowed[g].end(), s) != allowed[g].end();
      });
      if (placeable) remaining.push_back(s);
    }
    const bool contradiction = static_cast<int>(remaining.size()) < others;
    all_contradict = all_contradict && contradiction;

    Certificate branch;
    branch.id = "case2222.cross.center=" + pair_name(choice);
    branch.claim = "center " + pair_name(choice) + " leaves fewer than " + std::to_string(others) +
                   " distinct pairs for the other cross cells";
    branch.inputs = {{"center", pair_name(choice)}, {"pool", pair_names(pool_list)}};
    branch.payload = {{"remaining", pair_names(remaining)},
                      {"remaining_count", remaining.size()},
                      {"cells_to_fill", others}};
    branch.require(contradiction);
    cert.add(std::move(branch));
  }
  cert.require(within_alphabet && !allowed[*center].empty() && all_contradict);
  return cert;
}

Certificate case2222_certificate() {
  Certificate root;
  root.id = "case2222";
  root.claim = "no zero sum has parallax 2222";

  // Tagging.
  {
    const auto tags = standard_tagging();
    std::set<PointTag> values;
    bool two_zeros = true;
    bool rows_cols_match = true;
    for (const auto& [pos, tag] : tags) {
      values.insert(tag);
      two_zeros = two_zeros && tag.zero_count() == 2;
      const int expect_x1 = pos.col == 5 ? 1 : pos.col == 6 ? -1 : 0;
      const int expect_x2 = pos.row == 5 ? 1 : pos.row == 6 ? -1 : 0;
      rows_cols_match = rows_cols_match && tag.x[0] == expect_x1 && tag.x[1] == expect_x2;
    }
    const auto every = all_tags();
    bool closed = true;
    for (const auto& t : values) closed = closed && values.contains(t.negated());
    Certificate c;
    c.id = "case2222.tagging";
    c.claim = "the 24 points carry distinct tags with two zero and two +-1 entries";
    c.payload = {{"tagged_cells", tags.size()},
                 {"distinct_tags", values.size()},
                 {"two_zeros_each", two_zeros},
                 {"equals_all_24_quadruples", std::vector<PointTag>(values.begin(), values.end()) == every},
                 {"closed_under_negation", closed},
                 {"columns_rows_match_layout", rows_cols_match}};
    for (const auto& row : split_grid(kTagDiagram)) {
      std::string line;
      for (const auto& tok : row) {
        line += tok;
        line += std::string(tok.size() < 7 ? 7 - tok.size() : 1, ' ');
      }
      c.display.push_back(line);
    }
    c.require(tags.size() == 24 && values.size() == 24 && two_zeros && closed && rows_cols_match &&
              std::vector<PointTag>(values.begin(), values.end()) == every);
    root.add(std::move(c));
  }

  // Line lists.
  {
    Certificate c;
    c.id = "case2222.line_lists";
    c.claim = "each class admits exactly two line lists, negatives of each other, all equivalent under sign changes";
    bool ok = true;
    std::array<std::vector<LineList>, 4> lists;
    for (int k = 0; k < 4; ++k) {
      lists[static_cast<std::size_t>(k)] = enumerate_line_lists(k);
      const auto& ls = lists[static_cast<std::size_t>(k)];
      const bool two = ls.size() == 2;
      const bool neg = two && negated(ls[0]) == ls[1];
      nlohmann::json entry = {{"count", ls.size()}, {"second_is_negation", neg}};
      nlohmann::json all = nlohmann::json::array();
      for (const auto& l : ls) all.push_back(list_json(l));
      entry["lists"] = all;
      c.payload["class_" + std::to_string(k)] = entry;
      ok = ok && two && neg;
    }

    const auto& greek_lists = lists[3];
    const TagTriple first = make_triple({PointTag::parse("1100"), PointTag::parse("-1010"), PointTag::parse("0-1-10")});
    const TagTriple second = make_triple({PointTag::parse("1100"), PointTag::parse("-10-10"), PointTag::parse("0-110")});
    const bool displayed = greek_lists.size() == 2 &&
                           ((list_contains(greek_lists[0], first) && list_contains(greek_lists[1], second)) ||
                            (list_contains(greek_lists[1], first) && list_contains(greek_lists[0], second)));
    c.payload["class_3_contains_displayed_lines"] = displayed;

    // Relabeling the fourth-class Lambda lines fixes class 3's lists and
    // negates the others.
    bool flip_ok = true;
    const std::array<int, 4> flip4{1, 1, 1, -1};
    for (std::size_t k = 0; k < 4; ++k) {
      for (const auto& l : lists[k]) {
        const LineList image = with_signs(l, flip4);
        flip_ok = flip_ok && (k == 3 ? image == l : image == negated(l));
      }
    }
    c.payload["fourth_class_relabel_effect"] = flip_ok;

    const bool transitive = sign_changes_act_transitively();
    c.payload["sign_changes_transitive"] = transitive;
    c.payload["scope"] = "checked on the standard layout; no abstract uniqueness claim is made";

    // The layout uses one listed option per class.
    const auto tags = standard_tagging();
    const auto assignment = standard_line_assignment();
    auto layout_list = [&](int k) {
      LineList l;
      for (int i = 1; i <= 4; ++i) {
        std::vector<PointTag> on;
        for (const auto& [pos, tag] : tags) {
          if ((k == 0 && pos.col == i) || (k == 1 && pos.row == i)) on.push_back(tag);
        }
        if (on.size() != 3) return LineList{};
        l.push_back(make_triple({on[0], on[1], on[2]}));
      }
      std::sort(l.begin(), l.end());
      return l;
    };
    auto assigned_list = [&](const std::array<std::string, 6>& names) {
      LineList l;
      for (int s = 0; s < 4; ++s) l.push_back(assignment.at(names[static_cast<std::size_t>(s)]));
      std::sort(l.begin(), l.end());
      return l;
    };
    const std::array<LineList, 4> layout{layout_list(0), layout_list(1), assigned_list(kLatinNames),
                                         assigned_list(kGreekNames)};
    bool layout_ok = true;
    for (std::size_t k = 0; k < 4; ++k) {
      layout_ok = layout_ok && std::find(lists[k].begin(), lists[k].end(), layout[k]) != lists[k].end();
    }
    c.payload["layout_lists_are_enumerated"] = layout_ok;
    c.require(ok && displayed && flip_ok && transitive && layout_ok);
    root.add(std::move(c));
  }

  const PartialGraecoSquare square = build_partial_square();

  // Reproduced square.
  {
    Certificate c;
    c.id = "case2222.square";
    c.claim = "filling in line names yields two-thirds of a Graeco-Latin square";
    const auto reference = reference_partial_square();
    const auto blanks = square.blanks();
    bool off_diagonal = blanks.size() == 12;
    for (const auto& b : blanks) off_diagonal = off_diagonal && b.row <= 4 && b.col <= 4 && b.row != b.col;
    const auto clash = square.conflict();
    c.payload = {{"filled", square.filled_count()},
                 {"blanks", blanks.size()},
                 {"blanks_off_diagonal_of_upper_left_block", off_diagonal},
                 {"matches_reference", square == reference},
                 {"consistent", !clash.has_value()}};
    c.display = square.render();
    c.require(square.filled_count() == 24 && off_diagonal && square == reference && !clash);
    root.add(std::move(c));
  }

  // Exhaustive completion count.
  const CompletionSearch search = count_completions(square);
  {
    Certificate c;
    c.id = "case2222.completions";
    c.claim = "the twelve blanks admit no completion";
    c.inputs = {{"square", square.render()}, {"order", "row-major"}};
    c.payload = {{"completions", search.completions},
                 {"nodes", search.nodes},
                 {"placements_per_depth", search.placements_per_depth}};
    c.require(search.completions == 0);
    root.add(std::move(c));
  }

  Certificate cross = cross_certificate(square);
  const bool cross_ok = cross.passed();
  root.add(std::move(cross));

  {
    Certificate c;
    c.id = "case2222.agreement";
    c.claim = "the cross contradiction and the exhaustive count agree";
    c.payload = {{"cross_contradicts", cross_ok}, {"completions", search.completions}};
    c.require(!cross_ok || search.completions == 0);
    c.require(cross_ok == (search.completions == 0));
    root.add(std::move(c));
  }
  return root;
}

}  // namespace officers
