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

#include <fstream>
#include <sstream>

#include "negaffect/affect.hpp"

namespace negaffect::affect {
namespace {

std::string_view TrimView(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<LexiconCategory> ParseCategory(std::string_view s) {
  for (std::size_t i = 0; i < kLexiconCategoryNames.size(); ++i) {
    if (kLexiconCategoryNames[i] == s) return static_cast<LexiconCategory>(i);
  }
  return std::nullopt;
}

}  // namespace

void Lexicon::AddPattern(LexiconCategory category, std::string_view pattern) {
  const std::string p(pattern);
  if (p.empty()) throw ValidationError("lexicon: empty pattern");
  for (std::size_t i = 0; i < p.size(); ++i) {
    const char c = p[i];
    if (c >= 'A' && c <= 'Z') {
      throw ValidationError("lexicon: pattern \"" + p + "\" is not lowercase");
    }
    if (c == '*' && i + 1 != p.size()) {
      throw ValidationError("lexicon: pattern \"" + p +
                            "\" has a non-terminal wildcard");
    }
    if (c == ' ' || c == '\t') {
      throw ValidationError("lexicon: pattern \"" + p + "\" contains whitespace");
    }
  }
  auto& cat = categories_[static_cast<int>(category)];
  if (p.back() == '*') {
    if (p.size() == 1) throw ValidationError("lexicon: bare wildcard pattern");
    std::string stem = p.substr(0, p.size() - 1);
    cat.max_stem = std::max(cat.max_stem, stem.size());
    cat.stems.insert(std::move(stem));
  } else {
    cat.exact.insert(p);
  }
}

Lexicon Lexicon::FromText(std::string_view text) {
  Lexicon lex;
  std::optional<LexiconCategory> current;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = TrimView(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty()) continue;
    constexpr std::string_view kHeader = "#category:";
    if (line.substr(0, kHeader.size()) == kHeader) {
      const auto name = TrimView(line.substr(kHeader.size()));
      current = ParseCategory(name);
      if (!current) {
        throw ValidationError("lexicon line " + std::to_string(line_no) +
                              ": unknown category \"" + std::string(name) +
                              "\"");
      }
      continue;
    }
    if (line.front() == '#') continue;
    if (!current) {
      throw ValidationError("lexicon line " + std::to_string(line_no) +
                            ": pattern before any #category: header");
    }
    try {
      lex.AddPattern(*current, line);
    } catch (const ValidationError& e) {
      throw ValidationError("lexicon line " + std::to_string(line_no) + ": " +
                            e.what());
    }
  }
  return lex;
}

Lexicon Lexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromText(buf.str());
}

std::array<bool, kNumLexiconCategories> Lexicon::Match(
    std::string_view token) const {
  std::array<bool, kNumLexiconCategories> hit{};
  const std::string tok(token);
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    const auto& cat = categories_[c];
    if (cat.exact.count(tok) != 0) {
      hit[c] = true;
      continue;
    }
    const std::size_t longest = std::min(cat.max_stem, tok.size());
    for (std::size_t len = 1; len <= longest; ++len) {
      if (cat.stems.count(tok.substr(0, len)) != 0) {
        hit[c] = true;
        break;
      }
    }
  }
  return hit;
}

LexiconCounts Lexicon::Count(const std::vector<std::string>& tokens,
                             const EmoticonConfig* emoticons) const {
  LexiconCounts counts{};
  for (const auto& tok : tokens) {
    if (emoticons != nullptr && emoticons->CategoryOf(tok)) continue;
    const auto hit = Match(tok);
    for (std::size_t c = 0; c < hit.size(); ++c) counts[c] += hit[c] ? 1 : 0;
  }
  return counts;
}

std::size_t Lexicon::pattern_count() const {
  std::size_t n = 0;
  for (const auto& c : categories_) n += c.exact.size() + c.stems.size();
  return n;
}

LexiconCounts CountLexicon(const corpus::Dialogue& d, int agent,
                           const Lexicon& lex,
                           const EmoticonConfig* emoticons) {
  LexiconCounts counts{};
  for (const auto* u : corpus::UtterancesOf(d, agent)) {
    const auto c = lex.Count(Tokenize(u->text, emoticons), emoticons);
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += c[i];
  }
  return counts;
}

}  // namespace negaffect::affect
