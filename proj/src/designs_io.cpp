#include "officers/designs_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "officers/errors.hpp"

namespace officers {

namespace {

using TokenGrid = std::vector<std::vector<std::string>>;

TokenGrid tokenize(std::string_view text) {
  TokenGrid grid;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (words >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    grid.push_back(std::move(tokens));
  }
  if (grid.empty()) throw InputError("no rows found");
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (grid[r].size() != grid.size()) {
      throw InputError("row " + std::to_string(r) + " has " + std::to_string(grid[r].size()) +
                       " tokens, expected " + std::to_string(grid.size()));
    }
  }
  return grid;
}

class SymbolTable {
 public:
  int intern(const std::string& token) {
    auto [it, inserted] = index_.emplace(token, static_cast<int>(labels_.size()));
    if (inserted) labels_.push_back(token);
    return it->second;
  }
  std::vector<std::string> labels() && { return std::move(labels_); }

 private:
  std::map<std::string, int> index_;
  std::vector<std::string> labels_;
};

std::string label_of(const std::vector<std::string>& labels, int symbol) {
  if (symbol >= 0 && symbol < static_cast<int>(labels.size())) return labels[symbol];
  return std::to_string(symbol);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<std::string, std::string> split_first_codepoint(std::string_view token) {
  if (token.empty()) throw InputError("empty token");
  const auto lead = static_cast<unsigned char>(token.front());
  std::size_t len = 1;
  if (lead >= 0xF0) {
    len = 4;
  } else if (lead >= 0xE0) {
    len = 3;
  } else if (lead >= 0xC0) {
    len = 2;
  }
  if (len >= token.size()) {
    throw InputError("token '" + std::string(token) + "' does not hold two symbols");
  }
  return {std::string(token.substr(0, len)), std::string(token.substr(len))};
}

LabeledSquare parse_latin(std::string_view text) {
  const auto grid = tokenize(text);
  SymbolTable table;
  std::vector<std::vector<int>> cells(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (const auto& tok : grid[r]) cells[r].push_back(table.intern(tok));
  }
  auto square = validate_latin(cells);
  return {std::move(square), std::move(table).labels()};
}

LabeledSquare load_latin_file(const std::filesystem::path& path) {
  return parse_latin(read_text_file(path));
}

LabeledPair parse_pair(std::string_view text) {
  const auto grid = tokenize(text);
  SymbolTable latin, greek;
  std::vector<std::vector<int>> a(grid.size()), b(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (const auto& tok : grid[r]) {
      auto [x, y] = split_first_codepoint(tok);
      a[r].push_back(latin.intern(x));
      b[r].push_back(greek.intern(y));
    }
  }
  auto pair = make_graeco_pair(validate_latin(a), validate_latin(b));
  return {std::move(pair), std::move(latin).labels(), std::move(greek).labels()};
}

LabeledPair load_pair_file(const std::filesystem::path& path) {
  return parse_pair(read_text_file(path));
}

LabeledPair load_pair_files(const std::filesystem::path& latin, const std::filesystem::path& greek) {
  auto a = load_latin_file(latin);
  auto b = load_latin_file(greek);
  return {make_graeco_pair(std::move(a.square), std::move(b.square)), std::move(a.labels),
          std::move(b.labels)};
}

std::string format_pair(const GraecoPair& pair, const std::vector<std::string>& latin_labels,
                        const std::vector<std::string>& greek_labels) {
  std::ostringstream out;
  const int n = pair.latin.order();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c > 0) out << ' ';
      out << label_of(latin_labels, pair.latin.at(r, c)) << label_of(greek_labels, pair.greek.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

Net parse_net_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("net file: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const int k = doc.at("k").get<int>();
    auto classes = doc.at("classes").get<std::vector<ParallelClass>>();
    if (static_cast<int>(classes.size()) != k) {
      throw InputError("net file: k = " + std::to_string(k) + " but " +
                       std::to_string(classes.size()) + " classes given");
    }
    return validate_net(n, std::move(classes));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("net file: ") + e.what());
  }
}

Net load_net_file(const std::filesystem::path& path) { return parse_net_json(read_text_file(path)); }

nlohmann::json net_to_json(const Net& net) {
  return {{"n", net.order()}, {"k", net.class_count()}, {"classes", net.classes()}};
}

}  // namespace officers
