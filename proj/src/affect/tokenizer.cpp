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

#include <array>
#include <string>

#include "negaffect/affect.hpp"

namespace negaffect::affect {
namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

// Letters, digits and any non-ASCII byte (accented letters, unconfigured
// emoji) are word material.
bool IsWordByte(unsigned char c) {
  return IsDigit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         c >= 0x80;
}

std::string NormalizeApostrophes(std::string_view text) {
  // U+2019 RIGHT SINGLE QUOTATION MARK and U+2018 in UTF-8.
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(text[i + 2]) == 0x99 ||
         static_cast<unsigned char>(text[i + 2]) == 0x98)) {
      out.push_back('\'');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

void LowerAscii(std::string& s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void PushWord(std::string word, std::vector<std::string>& out) {
  LowerAscii(word);
  if (word.size() > 3 && EndsWith(word, "n't")) {
    out.push_back(word.substr(0, word.size() - 3));
    out.emplace_back("n't");
    return;
  }
  static constexpr std::array<std::string_view, 6> kClitics{
      "'ll", "'re", "'ve", "'s", "'m", "'d"};
  for (auto clitic : kClitics) {
    if (word.size() > clitic.size() && EndsWith(word, clitic)) {
      out.push_back(word.substr(0, word.size() - clitic.size()));
      out.emplace_back(clitic);
      return;
    }
  }
  out.push_back(std::move(word));
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view raw,
                                  const EmoticonConfig* emoticons) {
  const std::string text = NormalizeApostrophes(raw);
  const std::string_view t(text);
  auto emoticon_at = [&](std::size_t pos) -> std::size_t {
    return emoticons != nullptr ? emoticons->MatchAt(t, pos) : 0;
  };

  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < t.size()) {
    const auto c = static_cast<unsigned char>(t[pos]);
    if (IsSpace(c)) {
      ++pos;
      continue;
    }
    if (const std::size_t len = emoticon_at(pos)) {
      tokens.emplace_back(t.substr(pos, len));
      pos += len;
      continue;
    }
    if (!IsWordByte(c)) {
      tokens.emplace_back(1, static_cast<char>(c));
      ++pos;
      continue;
    }
    std::size_t end = pos + 1;
    while (end < t.size()) {
      if (emoticon_at(end)) break;
      const auto cur = static_cast<unsigned char>(t[end]);
      if (IsWordByte(cur)) {
        ++end;
        continue;
      }
      // Joiners kept inside a word when flanked by word material:
      // hyphens ("covid-19"), apostrophes ("don't"), decimal points.
      const bool has_next =
          end + 1 < t.size() &&
          IsWordByte(static_cast<unsigned char>(t[end + 1]));
      const auto prev = static_cast<unsigned char>(t[end - 1]);
      if (has_next && (cur == '-' || cur == '\'')) {
        ++end;
        continue;
      }
      if (has_next && cur == '.' && IsDigit(prev) &&
          IsDigit(static_cast<unsigned char>(t[end + 1]))) {
        ++end;
        continue;
      }
      break;
    }
    PushWord(std::string(t.substr(pos, end - pos)), tokens);
    pos = end;
  }
  return tokens;
}

}  // namespace negaffect::affect
