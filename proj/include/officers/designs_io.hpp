#pragma once

// Text and JSON formats for squares, pairs and nets.
//
// Square file: n non-comment lines of n whitespace-separated tokens; a line
// whose first non-blank character is '#' is a comment. Tokens are mapped to
// symbols 0, 1, ... in order of first appearance.
//
// Pair file: same layout with each token the juxtaposition of a Latin and
// a Greek symbol; the first UTF-8 code point is the Latin symbol and the
// rest is the Greek one ("aα", "bζ", "03").
//
// Net file: {"n": int, "k": int, "classes": [[[point, ...], ...], ...]}.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "officers/designs.hpp"

namespace officers {

struct LabeledSquare {
  LatinSquare square;
  std::vector<std::string> labels;  // labels[symbol]
};

struct LabeledPair {
  GraecoPair pair;
  std::vector<std::string> latin_labels;
  std::vector<std::string> greek_labels;
};

std::string read_text_file(const std::filesystem::path& path);

LabeledSquare parse_latin(std::string_view text);
LabeledSquare load_latin_file(const std::filesystem::path& path);

LabeledPair parse_pair(std::string_view text);
LabeledPair load_pair_file(const std::filesystem::path& path);
// A pair given as two separate square files.
LabeledPair load_pair_files(const std::filesystem::path& latin, const std::filesystem::path& greek);

// Writes a pair with symbols rendered by the label tables (digits if empty).
std::string format_pair(const GraecoPair& pair, const std::vector<std::string>& latin_labels = {},
                        const std::vector<std::string>& greek_labels = {});

Net parse_net_json(std::string_view text);
Net load_net_file(const std::filesystem::path& path);
nlohmann::json net_to_json(const Net& net);

// Splits a token after its first UTF-8 code point.
std::pair<std::string, std::string> split_first_codepoint(std::string_view token);

}  // namespace officers
