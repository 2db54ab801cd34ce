#include <gtest/gtest.h>

#include <cctype>
#include <fstream>
#include <random>
#include <set>

#include "../support/edit_oracles.hpp"
#include "aumol/eval/metrics.hpp"

namespace eval = aumol::eval;
namespace oracle = aumol::testing;
using eval::Tokens;

namespace {

struct GoldenCase {
  int line;
  std::string input;
  std::string expected;
};

std::vector<GoldenCase> load_golden() {
  std::ifstream in(std::string(AUMOL_TEST_DATA_DIR) + "/normalize_golden.txt");
  std::vector<GoldenCase> out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (!line.empty() && line[0] == '#') continue;
    const auto sep = line.find(" =>");
    if (sep == std::string::npos) continue;
    std::string expected = line.substr(sep + 3);
    if (!expected.empty() && expected[0] == ' ') expected.erase(0, 1);
    out.push_back({n, line.substr(0, sep), expected});
  }
  return out;
}

std::vector<std::string> as_tokens(const oracle::Seq& s) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(std::string(1, static_cast<char>('a' + x)));
  return out;
}

std::string ops_string(const eval::Alignment& a) {
  std::string s;
  for (const auto& c : a.script) s.push_back("MSDI"[static_cast<int>(c.op)]);
  return s;
}

eval::TranscriptRecord record(std::string id, std::string ref, std::string hyp,
                              std::vector<std::pair<std::string, long>> entities = {}) {
  eval::TranscriptRecord r{std::move(id), std::move(ref), std::move(hyp), {}};
  for (auto& [text, pos] : entities) r.entities.push_back(eval::make_entity(text, pos));
  return r;
}

}  // namespace

TEST(SpellingTable, SortedUniqueAndClosed) {
  const auto& t = eval::kBritishToAmerican;
  EXPECT_GE(t.size(), 500u);
  std::set<std::string_view> keys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) EXPECT_LT(t[i - 1].first, t[i].first);
    keys.insert(t[i].first);
    EXPECT_NE(t[i].first, t[i].second);
    for (auto s : {t[i].first, t[i].second})
      for (char c : s) EXPECT_TRUE(c >= 'a' && c <= 'z') << s;
  }
  // No American form is itself rewritten, so mapping is idempotent.
  for (const auto& [gb, us] : t) EXPECT_EQ(keys.count(us), 0u) << us;
}

TEST(NumberWords, Cardinals) {
  EXPECT_EQ(eval::number_to_words(0), Tokens{"zero"});
  EXPECT_EQ(eval::number_to_words(16), Tokens{"sixteen"});
  EXPECT_EQ(eval::number_to_words(70), Tokens{"seventy"});
  EXPECT_EQ(eval::number_to_words(305), (Tokens{"three", "hundred", "five"}));
  EXPECT_EQ(eval::number_to_words(20000), (Tokens{"twenty", "thousand"}));
  EXPECT_EQ(eval::number_to_words(700012), (Tokens{"seven", "hundred", "thousand", "twelve"}));
}

TEST(NumberWords, DistinctValuesGiveDistinctWords) {
  std::set<std::string> seen;
  for (unsigned n = 0; n < 1000000; n += 7) EXPECT_TRUE(seen.insert(eval::join(eval::number_to_words(n))).second) << n;
}

TEST(Normalize, StatedExamples) {
  EXPECT_EQ(eval::normalize("Ummm, take 16 mg"), (Tokens{"take", "sixteen", "mg"}));
  EXPECT_EQ(eval::normalize("Twice-daily COLOUR check."), (Tokens{"twice", "daily", "color", "check"}));
  EXPECT_EQ(eval::normalize("0"), Tokens{"zero"});
}

TEST(Normalize, EmDashSeparatesWords) {
  EXPECT_EQ(eval::normalize("stop\xE2\x80\x94now"), (Tokens{"stop", "now"}));
  EXPECT_EQ(eval::normalize("\xE2\x80\x94"), Tokens{});
}

TEST(Normalize, FillerElongationCollapses) {
  for (const char* f : {"um", "ummmmmm", "uhhhh", "hmmmmm", "errrr", "aaaahhhh", "UMM"})
    EXPECT_TRUE(eval::normalize(f).empty()) << f;
  for (const char* w : {"hum", "umami", "mm", "err", "her", "hm"}) EXPECT_EQ(eval::normalize(w).size(), 1u) << w;
}

TEST(Normalize, GoldenCorpusByteExactAndIdempotent) {
  const auto cases = load_golden();
  ASSERT_EQ(cases.size(), 200u);
  for (const auto& c : cases) {
    const auto once = eval::normalize(c.input);
    EXPECT_EQ(eval::join(once), c.expected) << "line " << c.line << ": '" << c.input << "'";
    EXPECT_EQ(eval::normalize(eval::join(once)), once) << "line " << c.line;
  }
}

TEST(Normalize, IdempotentOnRandomText) {
  const std::string alphabet = "abcXYZ019 ,.-'/:%umhr";
  const std::vector<std::string> chunks = {"colour", "1,000", "ummm", "-", "3.5", "16mg", "\xE2\x80\x99", "uh-huh"};
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int len = static_cast<int>(gen() % 24);
    for (int k = 0; k < len; ++k) {
      if (gen() % 5 == 0) s += chunks[gen() % chunks.size()];
      else s.push_back(alphabet[gen() % alphabet.size()]);
    }
    const auto once = eval::normalize(s);
    ASSERT_EQ(eval::normalize(eval::join(once)), once) << "'" << s << "'";
    for (const auto& t : once) {
      ASSERT_FALSE(t.empty());
      for (char ch : t) ASSERT_FALSE(std::isspace(static_cast<unsigned char>(ch)) || std::isupper(ch)) << t;
    }
  }
}

TEST(Align, IdenticalIsAllMatches) {
  const Tokens x = {"the", "cat", "sat"};
  const auto a = eval::levenshtein_align(x, x);
  EXPECT_EQ(ops_string(a), "MMM");
  EXPECT_EQ(a.cost(), 0);
}

TEST(Align, MissingWordIsOneDeletion) {
  const auto a = eval::levenshtein_align(Tokens{"the", "cat", "sat"}, Tokens{"the", "cat"});
  EXPECT_EQ(a.counts, (eval::EditCounts{2, 0, 1, 0}));
  EXPECT_EQ(ops_string(a), "MMD");
}

TEST(Align, TieBreakPrefersSubstitutionOverDeleteInsert) {
  EXPECT_EQ(ops_string(eval::levenshtein_align(Tokens{"a"}, Tokens{"b"})), "S");
  EXPECT_EQ(ops_string(eval::levenshtein_align(Tokens{"a", "b"}, Tokens{"b", "a"})), "SS");
  EXPECT_EQ(ops_string(eval::levenshtein_align(Tokens{"a", "b"}, Tokens{"b"})), "DM");
}

TEST(Align, EmptySides) {
  EXPECT_EQ(ops_string(eval::levenshtein_align(Tokens{}, Tokens{"a", "b"})), "II");
  EXPECT_EQ(ops_string(eval::levenshtein_align(Tokens{"a", "b"}, Tokens{})), "DD");
  EXPECT_EQ(eval::levenshtein_align(Tokens{}, Tokens{}).cost(), 0);
}

// The path-enumeration oracle checks the column oracle on every pair up to
// length 4 and on random pairs up to length 8.
TEST(EditOracles, EnumerationAgreesWithColumnOracle) {
  const auto seqs = oracle::all_sequences(4, 3);
  for (const auto& r : seqs) {
    const auto d = oracle::distances_from(r, 4, 3);
    for (std::size_t k = 0; k < seqs.size(); ++k) ASSERT_EQ(oracle::enumerate_min_cost(r, seqs[k]), d[k]);
  }
  const auto long_seqs = oracle::all_sequences(8, 3);
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& r = long_seqs[gen() % long_seqs.size()];
    const auto d = oracle::distances_from(r, 8, 3);
    const std::size_t k = gen() % long_seqs.size();
    ASSERT_EQ(oracle::enumerate_min_cost(r, long_seqs[k]), d[k]);
  }
}

TEST(Align, BacktraceIsPreferredOptimalPathUpToLength4) {
  const auto seqs = oracle::all_sequences(4, 3);
  for (const auto& r : seqs) {
    for (const auto& h : seqs) {
      const auto a = eval::levenshtein_align(as_tokens(r), as_tokens(h));
      ASSERT_EQ(ops_string(a), oracle::preferred_optimal_path(r, h));
    }
  }
}

TEST(Align, CostMatchesOracleOnAllPairsUpToLength6) {
  const auto seqs = oracle::all_sequences(6, 3);
  eval::Aligner aligner;
  for (const auto& r : seqs) {
    const auto d = oracle::distances_from(r, 6, 3);
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      ASSERT_EQ(aligner.distance(std::span<const int>(r), std::span<const int>(seqs[k])), d[k]);
    }
  }
}

TEST(Align, ScriptReplaysReferenceIntoHypothesis) {
  const auto seqs = oracle::all_sequences(5, 3);
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& r = seqs[gen() % seqs.size()];
    const auto& h = seqs[gen() % seqs.size()];
    const auto a = eval::levenshtein_align(r, h);
    oracle::Seq rebuilt;
    long next_ref = 0, next_hyp = 0;
    eval::EditCounts counted;
    for (const auto& c : a.script) {
      switch (c.op) {
        case eval::EditOp::match:
          ASSERT_EQ(r[static_cast<std::size_t>(c.ref_index)], h[static_cast<std::size_t>(c.hyp_index)]);
          ++counted.matches;
          break;
        case eval::EditOp::substitution:
          ASSERT_NE(r[static_cast<std::size_t>(c.ref_index)], h[static_cast<std::size_t>(c.hyp_index)]);
          ++counted.substitutions;
          break;
        case eval::EditOp::deletion: ++counted.deletions; break;
        case eval::EditOp::insertion: ++counted.insertions; break;
      }
      if (c.ref_index >= 0) ASSERT_EQ(c.ref_index, next_ref++);
      if (c.hyp_index >= 0) {
        ASSERT_EQ(c.hyp_index, next_hyp++);
        rebuilt.push_back(h[static_cast<std::size_t>(c.hyp_index)]);
      }
    }
    EXPECT_EQ(next_ref, static_cast<long>(r.size()));
    EXPECT_EQ(rebuilt, h);
    EXPECT_EQ(counted, a.counts);
  }
}

TEST(Wer, Basics) {
  const Tokens ref = {"take", "two", "tablets", "daily"};
  EXPECT_EQ(eval::wer(ref, ref).rate, 0.0);
  EXPECT_EQ(eval::wer(ref, {"take", "too", "tablets", "daily"}).rate, 0.25);
  EXPECT_THROW(eval::wer({}, ref), aumol::ContractError);
  const auto heavy = eval::wer({"a"}, {"x", "y", "z"});
  EXPECT_EQ(heavy.rate, 3.0);
  EXPECT_EQ(heavy.counts, (eval::EditCounts{0, 1, 0, 2}));
}

TEST(Wer, BoundedBySumOfLengths) {
  const auto seqs = oracle::all_sequences(5, 3);
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& r = seqs[1 + gen() % (seqs.size() - 1)];
    const auto& h = seqs[gen() % seqs.size()];
    const auto w = eval::wer(as_tokens(r), as_tokens(h));
    EXPECT_LE(w.counts.errors(), static_cast<long>(r.size() + h.size()));
    EXPECT_EQ(eval::wer(as_tokens(r), as_tokens(r)).rate, 0.0);
  }
}

TEST(Wer, CorpusIsMicroAverage) {
  std::vector<eval::TranscriptRecord> recs = {record("a", "one two three four", "one two three five"),
                                              record("b", "take it", "take it now please")};
  const auto rep = eval::evaluate(recs);
  EXPECT_EQ(rep.ref_words, 6);
  EXPECT_EQ(rep.counts.errors(), 3);
  EXPECT_EQ(rep.wer, 3.0 / 6.0);
  EXPECT_EQ(rep.utterances[0].wer, 0.25);
  EXPECT_EQ(rep.utterances[1].wer, 1.0);
}

TEST(Ewer, TwoWordEntityOneWordKept) {
  const auto rep = eval::evaluate({record("u1", "avacincaptad pegol", "pegol", {{"avacincaptad pegol", 0}})});
  EXPECT_EQ(rep.utterances[0].ewer, 0.5);
  EXPECT_EQ(rep.ewer, 0.5);
  const auto split = eval::evaluate({record("u2", "inject avacincaptad pegol monthly",
                                            "inject ava sin captad pegol monthly", {{"avacincaptad pegol", 1}})});
  EXPECT_EQ(split.ewer, 0.5);
}

TEST(Ewer, ExactTranscriptGivesZero) {
  const auto rep = eval::evaluate({record("u", "start 5 mg of Avastin", "start five mg of avastin",
                                          {{"Avastin", 4}, {"5 mg", 1}})});
  EXPECT_EQ(rep.wer, 0.0);
  EXPECT_EQ(rep.ewer, 0.0);
}

TEST(Ewer, MicroAverageOverThreeEntityWords) {
  const auto rep = eval::evaluate({record("a", "give faricimab tablets", "give tablets", {{"faricimab", 1}}),
                                   record("b", "aflibercept pegol then ranibizumab", "then ranibizumab",
                                          {{"aflibercept pegol", 0}, {"ranibizumab", 3}})});
  EXPECT_EQ(rep.entity_words_total, 4);
  EXPECT_EQ(rep.entity_words_errored, 3);
  const auto two_thirds = eval::evaluate({record("b", "aflibercept pegol then ranibizumab", "then ranibizumab",
                                                 {{"aflibercept pegol", 0}, {"ranibizumab", 3}})});
  EXPECT_EQ(two_thirds.ewer, 2.0 / 3.0);
}

TEST(Ewer, MacroAveragesPerEntityRates) {
  std::vector<eval::TranscriptRecord> recs = {
      record("b", "aflibercept pegol then ranibizumab", "aflibercept then ranibizumab",
             {{"aflibercept pegol", 0}, {"ranibizumab", 3}})};
  EXPECT_EQ(eval::evaluate(recs, "m", eval::EwerAggregation::micro).ewer, 1.0 / 3.0);
  EXPECT_EQ(eval::evaluate(recs, "m", eval::EwerAggregation::macro).ewer, 0.25);
}

TEST(Ewer, InvalidSpanNamesUtterance) {
  for (auto bad : {record("utt-7", "take two", "take two", {{"three", 1}}),
                   record("utt-7", "take two", "take two", {{"two", 2}}),
                   record("utt-7", "take two", "take two", {{"...", 0}})}) {
    try {
      eval::evaluate({bad});
      FAIL();
    } catch (const aumol::ContractError& e) {
      EXPECT_NE(std::string(e.what()).find("utt-7"), std::string::npos) << e.what();
    }
  }
}

TEST(Ewer, ZeroWerImpliesZeroEwer) {
  const auto seqs = oracle::all_sequences(4, 3);
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& r = seqs[1 + gen() % (seqs.size() - 1)];
    const std::string text = eval::join(as_tokens(r));
    const long pos = static_cast<long>(gen() % r.size());
    const auto rep = eval::evaluate({record("x", text, text, {{as_tokens(r)[static_cast<std::size_t>(pos)], pos}})});
    EXPECT_EQ(rep.wer, 0.0);
    EXPECT_EQ(rep.ewer, 0.0);
  }
}

TEST(Ewer, IndependentOfRecordOrder) {
  std::vector<eval::TranscriptRecord> recs;
  std::mt19937_64 gen(8);
  const Tokens vocab = {"alpha", "beta", "gamma", "delta"};
  for (int i = 0; i < 40; ++i) {
    Tokens ref, hyp;
    for (int k = 0; k < 1 + static_cast<int>(gen() % 6); ++k) ref.push_back(vocab[gen() % 4]);
    for (const auto& w : ref) {
      if (gen() % 3) hyp.push_back(gen() % 4 ? w : vocab[gen() % 4]);
    }
    const long pos = static_cast<long>(gen() % ref.size());
    const std::size_t len = std::min<std::size_t>(1 + gen() % 2, ref.size() - static_cast<std::size_t>(pos));
    const Tokens ent(ref.begin() + pos, ref.begin() + pos + static_cast<long>(len));
    recs.push_back(record("r" + std::to_string(i), eval::join(ref), eval::join(hyp), {{eval::join(ent), pos}}));
  }
  for (auto agg : {eval::EwerAggregation::micro, eval::EwerAggregation::macro}) {
    const auto base = eval::evaluate(recs, "m", agg);
    auto shuffled = recs;
    for (int t = 0; t < 10; ++t) {
      std::shuffle(shuffled.begin(), shuffled.end(), gen);
      const auto rep = eval::evaluate(shuffled, "m", agg);
      EXPECT_EQ(rep.ewer, base.ewer);
      EXPECT_EQ(rep.wer, base.wer);
    }
  }
}

TEST(Report, JsonAndTextTable) {
  const auto rep = eval::evaluate({record("u1", "avacincaptad pegol", "pegol", {{"avacincaptad pegol", 0}}),
                                   record("u2", "no entities here", "no entities here")},
                                  "toy");
  const auto j = eval::to_json(rep);
  EXPECT_EQ(j["model"], "toy");
  EXPECT_EQ(j["utterances"][0]["ewer"], 0.5);
  EXPECT_TRUE(j["utterances"][1]["ewer"].is_null());
  EXPECT_EQ(j["corpus"]["deletions"], 1);
  EXPECT_EQ(j["corpus"]["ewer_aggregation"], "micro");
  const auto table = eval::to_text_table({rep});
  EXPECT_NE(table.find("WER"), std::string::npos);
  EXPECT_NE(table.find("EWER"), std::string::npos);
  EXPECT_NE(table.find("toy"), std::string::npos);
  EXPECT_NE(table.find("0.5000"), std::string::npos);
}
