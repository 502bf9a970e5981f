#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tassel/tassel.hpp"

using namespace tassel;

namespace {

const PatternSet kNine = {"00011",  "0001000",   "1010",      "010010",        "111",
                          "110011", "11011",     "110010011", "00010011001000"};

// Strand graphs of 0^a 1 beta over every beta of length b.
std::vector<Graph> h_family(int a, int b) {
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < (1ULL << b); ++code)
    out.push_back(strand_from_pattern(std::string(a, '0') + "1" + oracle::binary(code, b)).graph);
  return out;
}

PatternSet random_patterns(SplitMix64& rng) {
  PatternSet p;
  int count = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < count; ++i) p.push_back(oracle::binary(rng.next(), static_cast<int>(rng.uniform(1, 4))));
  return p;
}

}  // namespace

TEST(Necks, Examples) {
  EXPECT_EQ(necks_of(complete(3)), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(necks_of(complete_bipartite(1, 3)), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(necks_of(complete(4)).empty());
  EXPECT_EQ(strings_of_neck(complete_bipartite(1, 3), 0), (std::vector<BitString>{"1", "1", "1"}));
  EXPECT_EQ(strings_of_neck(path_graph(4), 0), (std::vector<BitString>{"001"}));
  EXPECT_THROW(strings_of_neck(complete(4), 0), std::invalid_argument);
}

TEST(Necks, StrandStrings) {
  Strand s = strand_from_pattern("00110");
  EXPECT_EQ(strings_of_neck(s.graph, s.neck), (std::vector<BitString>{"00110"}));
  EXPECT_EQ(string_of_strand(strand_from_pattern("01100")), "00110");
  EXPECT_EQ(string_of_strand(strand_from_pattern("0101100")), "0011010");
  Tassel t = build_tassel("0011010", 3);
  EXPECT_EQ(strings_of_neck(t.graph, t.neck), (std::vector<BitString>(3, "0011010")));
}

TEST(Unavoidable, Examples) {
  EXPECT_TRUE(unavoidable({"01"}, 1).unavoidable);
  EXPECT_TRUE(unavoidable(kNine, 3).unavoidable);
  for (int c = 1; c <= 5; ++c) {
    auto v = unavoidable({"11"}, c);
    EXPECT_FALSE(v.unavoidable);
    EXPECT_EQ(v.witness, std::string(c, '0') + "1" + std::string(c, '0'));
  }
  EXPECT_THROW(unavoidable({}, 1), std::invalid_argument);
  EXPECT_THROW(unavoidable({""}, 1), std::invalid_argument);
  EXPECT_THROW(unavoidable({"01"}, 0), std::invalid_argument);
}

TEST(Unavoidable, NineStringsNotTwoUnavoidable) {
  auto v = unavoidable(kNine, 2);
  ASSERT_FALSE(v.unavoidable);
  EXPECT_TRUE(oracle::padded(v.witness, 2));
  for (const auto& p : kNine) EXPECT_FALSE(oracle::occurs(v.witness, p));
  EXPECT_EQ(brute_force_unavoidable(kNine, 2, 14).witness, v.witness);
}

TEST(BruteForce, Examples) {
  EXPECT_TRUE(brute_force_unavoidable({"001"}, 2).unavoidable);
  auto v = brute_force_unavoidable({"001"}, 1);
  EXPECT_FALSE(v.unavoidable);
  EXPECT_EQ(v.witness, "010");
  EXPECT_TRUE(brute_force_unavoidable({"0"}, 1).unavoidable);
  EXPECT_THROW(brute_force_unavoidable({"00000000001"}, 1), std::invalid_argument);
}

TEST(Unavoidable, AgreesWithBruteForce) {
  SplitMix64 rng(61);
  int unav = 0;
  for (int i = 0; i < 300; ++i) {
    PatternSet p = random_patterns(rng);
    int c = static_cast<int>(rng.uniform(1, 3));
    auto a = unavoidable(p, c);
    auto b = brute_force_unavoidable(p, c);
    ASSERT_EQ(a.unavoidable, b.unavoidable) << i;
    ASSERT_EQ(a.witness, b.witness) << i;
    if (!a.unavoidable) {
      EXPECT_TRUE(oracle::padded(a.witness, c));
      for (const auto& s : p) EXPECT_FALSE(oracle::occurs(a.witness, s));
    }
    unav += a.unavoidable;
  }
  EXPECT_GT(unav, 30);
  EXPECT_LT(unav, 270);
}

TEST(Unavoidable, MonotoneAndReversalClosed) {
  SplitMix64 rng(62);
  for (int i = 0; i < 200; ++i) {
    PatternSet p = random_patterns(rng);
    bool prev = false;
    for (int c = 1; c <= 5; ++c) {
      bool now = unavoidable(p, c).unavoidable;
      if (prev) EXPECT_TRUE(now);
      prev = now;
      EXPECT_EQ(unavoidable(reverse_closure(p), c).unavoidable, now);
      PatternSet flipped;
      for (const auto& s : p) flipped.push_back(oracle::reverse(s));
      EXPECT_EQ(unavoidable(flipped, c).unavoidable, now);
    }
  }
}

TEST(Unavoidable, PaddedWitnessesExtendPastS) {
  SplitMix64 rng(63);
  for (int i = 0; i < 150; ++i) {
    PatternSet p = random_patterns(rng);
    const int s = max_pattern_length(p);
    auto at_s = unavoidable(p, s);
    for (int c = s + 1; c <= s + 2; ++c) EXPECT_EQ(brute_force_unavoidable(p, c).unavoidable, at_s.unavoidable) << i;
    if (!at_s.unavoidable) {
      std::string longer = "00" + at_s.witness + "00";
      EXPECT_TRUE(avoids(longer, p));
    }
  }
}

TEST(MinimalC, Examples) {
  EXPECT_EQ(minimal_c({"0001"}), 3);
  EXPECT_EQ(minimal_c({"11"}), std::nullopt);
  EXPECT_EQ(minimal_c({"01110", "11"}), std::nullopt);
  EXPECT_EQ(minimal_c({"01"}), 1);
  EXPECT_EQ(minimal_c(kNine), 3);
}

TEST(MinimalC, SingletonZerosThenOne) {
  for (int a = 1; a <= 6; ++a) EXPECT_EQ(minimal_c({std::string(a, '0') + "1"}), a);
}

TEST(Tasselled, Families) {
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 2}}) {
    auto fam = h_family(a, b);
    auto r = tasselled_search(fam);
    EXPECT_EQ(r.status, TasselledStatus::tasselled) << a << "," << b;
    EXPECT_TRUE(tassel_oracle(fam, r.c, 8).all_covered);
  }
  Strand s = strand_from_pattern("011");
  auto v = tasselled_decide({s.graph}, 2);
  EXPECT_EQ(v.status, TasselledStatus::witness);
  EXPECT_EQ(v.witness, "00100");
  EXPECT_EQ(v.uncovered.size(), 1u);
  EXPECT_EQ(tasselled_search({s.graph}).status, TasselledStatus::witness);
}

TEST(Tasselled, ComponentWithoutNeck) {
  auto v = tasselled_decide({disjoint_union(complete(4), complete(1))}, 1);
  ASSERT_EQ(v.status, TasselledStatus::witness);
  EXPECT_EQ(v.uncovered, (std::vector<std::string>{"member 0: component 0 has no neck"}));
}

TEST(Tasselled, TooManyPatterns) {
  std::vector<Graph> fam;
  for (std::uint64_t code = 1; fam.size() < 13; ++code) {
    std::string bits = oracle::binary(code, 6);
    if (bits == std::min(bits, oracle::reverse(bits))) fam.push_back(strand_from_pattern(bits).graph);
  }
  auto v = tasselled_decide(fam, 1);
  EXPECT_EQ(v.status, TasselledStatus::unsupported);
  EXPECT_FALSE(v.reason.empty());
}

TEST(Tasselled, AddingMembersNeverHurts) {
  SplitMix64 rng(64);
  for (int i = 0; i < 40; ++i) {
    std::vector<Graph> fam;
    int c = static_cast<int>(rng.uniform(1, 2));
    bool prev = false;
    for (int k = 0; k < 4; ++k) {
      fam.push_back(strand_from_pattern("0" + oracle::binary(rng.next() | 1, static_cast<int>(rng.uniform(1, 3)))).graph);
      bool now = tasselled_decide(fam, c).status == TasselledStatus::tasselled;
      if (prev) EXPECT_TRUE(now);
      prev = now;
    }
  }
}

TEST(TasselOracle, Examples) {
  EXPECT_TRUE(tassel_oracle(h_family(1, 1), 1, 6).all_covered);
  Strand s = strand_from_pattern("011");
  auto r = tassel_oracle({s.graph}, 2, 6);
  EXPECT_FALSE(r.all_covered);
  EXPECT_EQ(r.pattern, "00100");
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_TRUE(is_c_tassel(*r.counterexample, 2));
  auto vacuous = tassel_oracle({s.graph}, 3, 6);
  EXPECT_TRUE(vacuous.all_covered);
  EXPECT_EQ(vacuous.tassels_checked, 0);
  EXPECT_THROW(tassel_oracle({s.graph}, 1, 13), std::invalid_argument);
}

TEST(TasselOracle, BridgesToStrings) {
  SplitMix64 rng(65);
  for (int i = 0; i < 40; ++i) {
    std::vector<Graph> fam;
    int members = static_cast<int>(rng.uniform(1, 3));
    for (int k = 0; k < members; ++k)
      fam.push_back(strand_from_pattern("0" + oracle::binary(rng.next() | 1, static_cast<int>(rng.uniform(1, 3)))).graph);
    int c = static_cast<int>(rng.uniform(1, 2));
    auto decided = tasselled_decide(fam, c);
    auto graphs = tassel_oracle(fam, c, 9);
    if (!graphs.all_covered) {
      // the counterexample string is bad for the decision too
      ASSERT_EQ(decided.status, TasselledStatus::witness) << i;
      EXPECT_LE(decided.witness.size(), graphs.pattern.size());
    }
    if (decided.status == TasselledStatus::witness && decided.witness.size() <= 9) {
      Tassel t = build_tassel(decided.witness, std::max(c, 5));
      bool covered = false;
      for (const auto& h : fam) covered |= contains_induced(t.graph, h);
      EXPECT_FALSE(covered) << i << " " << decided.witness;
      EXPECT_FALSE(graphs.all_covered) << i;
    }
  }
}
