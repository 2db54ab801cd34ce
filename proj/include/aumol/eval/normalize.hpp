#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aumol/eval/spelling_table.hpp"

namespace aumol::eval {

using Tokens = std::vector<std::string>;

inline constexpr std::array<std::string_view, 9> kFillers = {"um", "umm", "ummm", "uh", "uhh", "ah", "ahh", "er", "hmm"};

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
/// ASCII letters/digits and any byte of a multi-byte UTF-8 sequence that is
/// not punctuation (the caller has already replaced punctuation sequences).
inline bool is_word_byte(char c) { return is_alpha(c) || is_digit(c) || static_cast<unsigned char>(c) >= 0x80; }

inline std::string collapse_runs(std::string_view s, std::size_t keep) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    out.append(j - i >= 3 ? keep : j - i, s[i]);
    i = j;
  }
  return out;
}

inline bool in_lexicon(std::string_view w) {
  return std::find(kFillers.begin(), kFillers.end(), w) != kFillers.end();
}

inline bool all_digits(std::string_view s) { return !s.empty() && std::all_of(s.begin(), s.end(), is_digit); }

/// "1,234" and "12,345,678": digit groups of three after a 1-3 digit head.
inline bool is_grouped_integer(std::string_view s) {
  const auto first = s.find(',');
  if (first == std::string_view::npos || first == 0 || first > 3) return false;
  if (!all_digits(s.substr(0, first))) return false;
  for (std::size_t i = first; i < s.size(); i += 4) {
    if (s[i] != ',' || i + 4 > s.size() || !all_digits(s.substr(i + 1, 3))) return false;
  }
  return true;
}

// Multi-byte UTF-8 punctuation mapped to a single ASCII stand-in. Other
// non-ASCII bytes are treated as letters.
struct Utf8Punct {
  std::string_view bytes;
  char ascii;
};
inline constexpr std::array<Utf8Punct, 17> kUtf8Punct = {{
    {"\xE2\x80\x98", '\''},  // left single quote
    {"\xE2\x80\x99", '\''},  // right single quote
    {"\xE2\x80\x9C", '"'},   // left double quote
    {"\xE2\x80\x9D", '"'},   // right double quote
    {"\xC2\xAB", '"'},       // left guillemet
    {"\xC2\xBB", '"'},       // right guillemet
    {"\xE2\x80\x90", '-'},   // hyphen
    {"\xE2\x80\x91", '-'},   // non-breaking hyphen
    {"\xE2\x80\x93", '-'},   // en dash
    {"\xE2\x80\x94", ' '},   // em dash
    {"\xE2\x80\xA6", '.'},   // ellipsis
    {"\xC2\xA0", ' '},       // no-break space
    {"\xC2\xBF", ' '},       // inverted question mark
    {"\xC2\xA1", ' '},       // inverted exclamation mark
    {"\xE2\x80\xA2", ' '},   // bullet
    {"\xC2\xB7", ' '},       // middle dot
    {"\xC2\xB0", ' '},       // degree sign
}};

inline std::string fold_utf8_punct(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    bool replaced = false;
    if (static_cast<unsigned char>(text[i]) >= 0x80) {
      for (const auto& p : kUtf8Punct) {
        if (text.substr(i, p.bytes.size()) == p.bytes) {
          out.push_back(p.ascii);
          i += p.bytes.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out.push_back(text[i++]);
  }
  return out;
}

/// Splits one whitespace token into word pieces: apostrophes are deleted,
/// other punctuation separates pieces, and '-' between word bytes or '.'
/// between digits stays inside a piece.
inline Tokens split_punctuation(std::string_view tok) {
  Tokens pieces;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) pieces.push_back(std::move(cur));
    cur.clear();
  };
  for (std::size_t i = 0; i < tok.size(); ++i) {
    const char c = tok[i];
    if (is_word_byte(c)) {
      cur.push_back(c);
    } else if (c == '\'') {
      continue;
    } else if (c == '-' && !cur.empty() && i + 1 < tok.size() && is_word_byte(tok[i + 1]) &&
               is_word_byte(cur.back())) {
      cur.push_back(c);
    } else if (c == '.' && !cur.empty() && is_digit(cur.back()) && i + 1 < tok.size() && is_digit(tok[i + 1])) {
      cur.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return pieces;
}

inline void lowercase_ascii(std::string& s) {
  for (auto& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
}

inline constexpr std::array<std::string_view, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",     "five",    "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};
inline constexpr std::array<std::string_view, 10> kTens = {"",      "",      "twenty",  "thirty", "forty",
                                                           "fifty", "sixty", "seventy", "eighty", "ninety"};

inline void below_thousand(unsigned n, Tokens& out) {
  if (n >= 100) {
    out.emplace_back(kOnes[n / 100]);
    out.emplace_back("hundred");
    n %= 100;
    if (n == 0) return;
  }
  if (n < 20) {
    out.emplace_back(kOnes[n]);
  } else {
    out.emplace_back(kTens[n / 10]);
    if (n % 10) out.emplace_back(kOnes[n % 10]);
  }
}

}  // namespace detail

/// Cardinal words for 0..999999, e.g. 1016 -> "one thousand sixteen".
inline Tokens number_to_words(unsigned n) {
  Tokens out;
  if (n == 0) return {"zero"};
  if (n >= 1000) {
    detail::below_thousand(n / 1000, out);
    out.emplace_back("thousand");
    n %= 1000;
    if (n == 0) return out;
  }
  detail::below_thousand(n, out);
  return out;
}

inline bool is_filler(std::string_view word) {
  if (detail::in_lexicon(word)) return true;
  return detail::in_lexicon(detail::collapse_runs(word, 2)) || detail::in_lexicon(detail::collapse_runs(word, 1));
}

inline std::string_view american_spelling(std::string_view word) {
  const auto it = std::lower_bound(kBritishToAmerican.begin(), kBritishToAmerican.end(), word,
                                   [](const auto& entry, std::string_view w) { return entry.first < w; });
  return it != kBritishToAmerican.end() && it->first == word ? it->second : word;
}

/// Normalized token stream:
///  1. filler words removed (elongated forms collapse onto the lexicon);
///  2. standalone integers 0..999999 become cardinal words;
///  3. lowercase, punctuation stripped, whitespace collapsed;
///  4. British spellings mapped to American;
///  5. hyphenated words split into their parts.
/// Steps run per hyphen component, which keeps the function idempotent.
inline Tokens normalize(std::string_view text) {
  Tokens out;
  const std::string folded = detail::fold_utf8_punct(text);
  std::size_t i = 0;
  while (i < folded.size()) {
    while (i < folded.size() && std::isspace(static_cast<unsigned char>(folded[i]))) ++i;
    std::size_t j = i;
    while (j < folded.size() && !std::isspace(static_cast<unsigned char>(folded[j]))) ++j;
    if (j == i) break;
    std::string raw(folded.substr(i, j - i));
    i = j;
    // Thousands separators are part of the number, not punctuation.
    std::size_t lo = 0, hi = raw.size();
    while (lo < hi && !detail::is_word_byte(raw[lo])) ++lo;
    while (hi > lo && !detail::is_word_byte(raw[hi - 1])) --hi;
    if (detail::is_grouped_integer(std::string_view(raw).substr(lo, hi - lo))) {
      raw.erase(std::remove(raw.begin() + static_cast<std::ptrdiff_t>(lo), raw.begin() + static_cast<std::ptrdiff_t>(hi), ','),
                raw.end());
    }
    for (auto& piece : detail::split_punctuation(raw)) {
      detail::lowercase_ascii(piece);
      std::size_t start = 0;
      while (start <= piece.size()) {
        auto end = piece.find('-', start);
        if (end == std::string::npos) end = piece.size();
        const std::string part = piece.substr(start, end - start);
        start = end + 1;
        if (part.empty() || is_filler(part)) continue;
        if (detail::all_digits(part) && part.size() <= 6) {
          for (auto& w : number_to_words(static_cast<unsigned>(std::stoul(part)))) out.push_back(std::move(w));
          continue;
        }
        out.emplace_back(american_spelling(part));
      }
    }
  }
  return out;
}

inline std::string join(const Tokens& tokens) {
  std::string s;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (k) s.push_back(' ');
    s += tokens[k];
  }
  return s;
}

}  // namespace aumol::eval
