#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aumol::model {

/// Character vocabulary: four specials, then a closed lowercase alphabet.
/// Uppercase input folds to lowercase; anything else maps to UNK.
class Vocabulary {
 public:
  static constexpr std::int32_t kPad = 0;
  static constexpr std::int32_t kBos = 1;
  static constexpr std::int32_t kEos = 2;
  static constexpr std::int32_t kUnk = 3;
  static constexpr std::string_view kAlphabet = " abcdefghijklmnopqrstuvwxyz0123456789:'-.";

  Vocabulary() {
    lookup_.fill(kUnk);
    for (std::size_t i = 0; i < kAlphabet.size(); ++i) {
      lookup_[static_cast<unsigned char>(kAlphabet[i])] = static_cast<std::int32_t>(i) + 4;
    }
  }

  int size() const { return static_cast<int>(kAlphabet.size()) + 4; }

  std::int32_t id(char c) const {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return lookup_[static_cast<unsigned char>(c)];
  }

  std::vector<std::int32_t> encode(std::string_view text) const {
    std::vector<std::int32_t> ids;
    ids.reserve(text.size());
    for (char c : text) ids.push_back(id(c));
    return ids;
  }

  /// Specials are dropped; UNK renders as '?'.
  std::string decode(const std::vector<std::int32_t>& ids) const {
    std::string out;
    for (auto t : ids) {
      if (t == kUnk) {
        out.push_back('?');
      } else if (t >= 4 && t < size()) {
        out.push_back(kAlphabet[static_cast<std::size_t>(t - 4)]);
      }
    }
    return out;
  }

  bool is_special(std::int32_t t) const { return t >= 0 && t < 4; }

 private:
  std::array<std::int32_t, 256> lookup_{};
};

inline constexpr std::string_view kDefaultPrompt = "transcribe:";

}  // namespace aumol::model
