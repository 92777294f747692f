// Copyright 2026 The negaffect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "negaffect/affect.hpp"

namespace negaffect::affect {
namespace {

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

std::optional<EmoticonCategory> ParseCategory(std::string_view s) {
  for (std::size_t i = 0; i < kEmoticonCategoryNames.size(); ++i) {
    if (kEmoticonCategoryNames[i] == s) return static_cast<EmoticonCategory>(i);
  }
  return std::nullopt;
}

}  // namespace

EmoticonConfig EmoticonConfig::FromJsonText(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("emoticon config: malformed JSON: ") +
                          e.what());
  }
  if (!root.is_object() || !root.contains("shorthands") ||
      !root["shorthands"].is_object()) {
    throw ValidationError("emoticon config: expected {\"shorthands\": {...}}");
  }
  EmoticonConfig cfg;
  for (const auto& [shorthand, cat] : root["shorthands"].items()) {
    const auto parsed =
        cat.is_string() ? ParseCategory(cat.get<std::string>()) : std::nullopt;
    if (!parsed) {
      throw ValidationError("emoticon config: shorthand \"" + shorthand +
                            "\" maps to unknown category " + cat.dump());
    }
    cfg.Add(shorthand, *parsed);
  }
  return cfg;
}

EmoticonConfig EmoticonConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open emoticon config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJsonText(buf.str());
}

void EmoticonConfig::Add(std::string shorthand, EmoticonCategory category) {
  if (shorthand.empty()) throw ValidationError("emoticon config: empty shorthand");
  if (shorthand.find_first_of(" \t\r\n") != std::string::npos) {
    throw ValidationError("emoticon config: shorthand \"" + shorthand +
                          "\" contains whitespace");
  }
  if (!by_token_.emplace(shorthand, category).second) {
    throw ValidationError("emoticon config: duplicate shorthand \"" +
                          shorthand + "\"");
  }
  entries_.emplace_back(std::move(shorthand), category);
  // Longest first so MatchAt prefers ">:(" over ":(".
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() > b.first.size();
                   });
}

std::optional<EmoticonCategory> EmoticonConfig::CategoryOf(
    std::string_view token) const {
  auto it = by_token_.find(std::string(token));
  if (it == by_token_.end()) return std::nullopt;
  return it->second;
}

std::size_t EmoticonConfig::MatchAt(std::string_view text,
                                    std::size_t pos) const {
  for (const auto& [s, _] : entries_) {
    if (text.compare(pos, s.size(), s) != 0) continue;
    const unsigned char first = s.front();
    const unsigned char last = s.back();
    if (IsAsciiAlnum(first) && pos > 0 &&
        IsAsciiAlnum(static_cast<unsigned char>(text[pos - 1]))) {
      continue;
    }
    const std::size_t end = pos + s.size();
    if (IsAsciiAlnum(last) && end < text.size() &&
        IsAsciiAlnum(static_cast<unsigned char>(text[end]))) {
      continue;
    }
    return s.size();
  }
  return 0;
}

EmoticonCounts CountEmoticonsInText(std::string_view text,
                                    const EmoticonConfig& cfg) {
  EmoticonCounts counts{};
  for (const auto& tok : Tokenize(text, &cfg)) {
    if (auto cat = cfg.CategoryOf(tok)) ++counts[static_cast<int>(*cat)];
  }
  return counts;
}

EmoticonCounts CountEmoticons(const corpus::Dialogue& d, int agent,
                              const EmoticonConfig& cfg) {
  EmoticonCounts counts{};
  for (const auto* u : corpus::UtterancesOf(d, agent)) {
    const auto c = CountEmoticonsInText(u->text, cfg);
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += c[i];
  }
  return counts;
}

std::string StripEmoticons(std::string_view text, const EmoticonConfig& cfg) {
  std::string spaced;
  spaced.reserve(text.size());
  bool removed = false;
  for (std::size_t pos = 0; pos < text.size();) {
    if (const std::size_t len = cfg.MatchAt(text, pos)) {
      spaced.push_back(' ');
      pos += len;
      removed = true;
    } else {
      spaced.push_back(text[pos++]);
    }
  }
  if (!removed) return std::string(text);

  std::string out;
  out.reserve(spaced.size());
  bool pending_space = false;
  for (char c : spaced) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace negaffect::affect
