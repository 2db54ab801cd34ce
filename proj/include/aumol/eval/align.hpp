#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace aumol::eval {

enum class EditOp : unsigned char { match, substitution, deletion, insertion };

/// One alignment column. ref_index is -1 for insertions, hyp_index is -1 for
/// deletions.
struct AlignedPair {
  EditOp op;
  long ref_index;
  long hyp_index;
};

struct EditCounts {
  long matches = 0;
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;

  long errors() const { return substitutions + deletions + insertions; }
  EditCounts& operator+=(const EditCounts& o) {
    matches += o.matches;
    substitutions += o.substitutions;
    deletions += o.deletions;
    insertions += o.insertions;
    return *this;
  }
  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

struct Alignment {
  std::vector<AlignedPair> script;  // ref/hyp order
  EditCounts counts;
  long cost() const { return counts.errors(); }
};

/// Unit-cost Levenshtein with a reusable cost table. Backtrace from the end
/// prefers match > substitution > deletion > insertion among optimal moves.
class Aligner {
 public:
  template <class T>
  Alignment align(std::span<const T> ref, std::span<const T> hyp) {
    fill(ref, hyp);
    const std::size_t w = hyp.size() + 1;
    Alignment out;
    std::size_t i = ref.size(), j = hyp.size();
    while (i > 0 || j > 0) {
      const long here = dp_[i * w + j];
      if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && dp_[(i - 1) * w + j - 1] == here) {
        out.script.push_back({EditOp::match, static_cast<long>(i - 1), static_cast<long>(j - 1)});
        ++out.counts.matches;
        --i, --j;
      } else if (i > 0 && j > 0 && dp_[(i - 1) * w + j - 1] + 1 == here) {
        out.script.push_back({EditOp::substitution, static_cast<long>(i - 1), static_cast<long>(j - 1)});
        ++out.counts.substitutions;
        --i, --j;
      } else if (i > 0 && dp_[(i - 1) * w + j] + 1 == here) {
        out.script.push_back({EditOp::deletion, static_cast<long>(i - 1), -1});
        ++out.counts.deletions;
        --i;
      } else {
        out.script.push_back({EditOp::insertion, -1, static_cast<long>(j - 1)});
        ++out.counts.insertions;
        --j;
      }
    }
    std::reverse(out.script.begin(), out.script.end());
    return out;
  }

  /// Minimum edit cost only; no backtrace.
  template <class T>
  long distance(std::span<const T> ref, std::span<const T> hyp) {
    fill(ref, hyp);
    return dp_.back();
  }

 private:
  template <class T>
  void fill(std::span<const T> ref, std::span<const T> hyp) {
    const std::size_t w = hyp.size() + 1;
    dp_.assign((ref.size() + 1) * w, 0);
    for (std::size_t j = 0; j < w; ++j) dp_[j] = static_cast<long>(j);
    for (std::size_t i = 1; i <= ref.size(); ++i) {
      long* row = dp_.data() + i * w;
      const long* up = row - w;
      row[0] = static_cast<long>(i);
      for (std::size_t j = 1; j < w; ++j) {
        const long diag = up[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
        row[j] = std::min({diag, up[j] + 1, row[j - 1] + 1});
      }
    }
  }

  std::vector<long> dp_;
};

template <class T>
Alignment levenshtein_align(std::span<const T> ref, std::span<const T> hyp) {
  Aligner a;
  return a.align(ref, hyp);
}

template <class T>
Alignment levenshtein_align(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return levenshtein_align(std::span<const T>(ref), std::span<const T>(hyp));
}

}  // namespace aumol::eval
