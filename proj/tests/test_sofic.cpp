#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "svdyn/sofic.hpp"

using namespace svdyn;

namespace {

LabeledAutomaton golden_mean() {
  return vertex_shift(Graph({"0", "1"}, {{0, 0}, {0, 1}, {1, 0}}));
}

LabeledAutomaton full_shift() {
  return vertex_shift(Graph({"0", "1"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

// three-vertex presentation of the even shift: runs of 0s between 1s have
// even length
LabeledAutomaton even_shift() {
  Graph g({"p1", "p0", "q0"},
          {{0, 0}, {0, 2}, {1, 0}, {1, 2}, {2, 1}});
  return LabeledAutomaton(g, Alphabet({"0", "1"}), {1, 0, 0});
}

Alphabet binary() { return Alphabet({"0", "1"}); }

int count_words(const LabeledAutomaton& a, int n) {
  return static_cast<int>(words(a, n).size());
}

}  // namespace

TEST_SUITE_BEGIN("sofic");

TEST_CASE("alphabet invariants") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), input_error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), input_error);
  CHECK(binary().index_of("1") == 1);
  CHECK_THROWS_AS(binary().index_of("x"), input_error);
}

TEST_CASE("vertex shift of simple graphs") {
  auto loop = vertex_shift(Graph({"a"}, {{0, 0}}));
  CHECK(words_str(loop, 3) == std::set<std::string>{"aaa"});
  auto cyc = vertex_shift(Graph({"a", "b"}, {{0, 1}, {1, 0}}));
  CHECK(words_str(cyc, 2) == std::set<std::string>{"ab", "ba"});
  CHECK(words_str(cyc, 3) == std::set<std::string>{"aba", "bab"});
  CHECK_THROWS_AS(vertex_shift(Graph({"a", "a"}, {{0, 1}, {1, 0}})),
                  input_error);
}

TEST_CASE("golden-mean word counts follow the Fibonacci recurrence") {
  auto gm = golden_mean();
  CHECK(count_words(gm, 1) == 2);
  CHECK(count_words(gm, 2) == 3);
  CHECK(count_words(gm, 3) == 5);
  CHECK(count_words(gm, 4) == 8);
  for (int n = 3; n <= 10; ++n)
    CHECK(count_words(gm, n) == count_words(gm, n - 1) + count_words(gm, n - 2));
  CHECK(words_str(gm, 2) == std::set<std::string>{"00", "01", "10"});
}

TEST_CASE("words handles n = 0 and the full shift") {
  CHECK(words(golden_mean(), 0) == std::set<std::vector<int>>{{}});
  CHECK(count_words(full_shift(), 3) == 8);
}

TEST_CASE("words equals independent walk enumeration") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<int> size(1, 5), len(0, 6);
    auto a = oracles::random_automaton(rng, size(rng), binary());
    int n = len(rng);
    CHECK(words(a, n) == oracles::enum_words(a, n));
  }
}

TEST_CASE("every factor of an allowed word is allowed") {
  auto es = even_shift();
  auto w5 = words_str(es, 5);
  auto w3 = words_str(es, 3);
  for (const auto& w : w5)
    for (size_t i = 0; i + 3 <= w.size(); ++i)
      CHECK(w3.count(w.substr(i, 3)) == 1);
}

TEST_CASE("relabel projects word sets letterwise") {
  auto gm = golden_mean();
  SUBCASE("identity relabel preserves the language") {
    auto same = relabel(gm, {{"0", "0"}, {"1", "1"}});
    CHECK(language_equal(gm, same));
  }
  SUBCASE("collapsing all symbols gives the one-point language") {
    auto collapsed = relabel(gm, {{"0", "a"}, {"1", "a"}});
    CHECK(words_str(collapsed, 4) == std::set<std::string>{"aaaa"});
  }
  SUBCASE("words(relabel(a,f), n) = f(words(a, n))") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 30; ++iter) {
      auto a = oracles::random_automaton(rng, 4, binary());
      auto b = relabel(a, {{"0", "x"}, {"1", "x"}});
      std::set<std::vector<int>> expect;
      for (auto w : words(a, 3)) {
        for (auto& c : w) c = 0;
        expect.insert(w);
      }
      CHECK(words(b, 3) == expect);
    }
  }
  SUBCASE("missing symbol in the map is an input error") {
    CHECK_THROWS_AS(relabel(gm, {{"0", "x"}}), input_error);
  }
}

TEST_CASE("2-block presentation relabeled by first letter is the golden mean") {
  Graph blocks({"00", "01", "10"}, {{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 1}});
  auto two_block = LabeledAutomaton(blocks, binary(), {0, 0, 1});
  CHECK(language_equal(two_block, golden_mean()));
  for (int n = 0; n <= 10; ++n)
    CHECK(words(two_block, n) == words(golden_mean(), n));
}

TEST_CASE("allowed_words_dfa") {
  SUBCASE("single loop accepts a*") {
    WordDFA d = allowed_words_dfa(vertex_shift(Graph({"a"}, {{0, 0}})));
    CHECK(d.num_states() >= 1);
    int q = d.initial;
    for (int i = 0; i < 5; ++i) {
      q = d.trans[q][0];
      CHECK(q >= 0);
    }
  }
  SUBCASE("even shift: accepts 1001, rejects 101") {
    WordDFA d = allowed_words_dfa(even_shift());
    auto accepts = [&](const std::string& w) {
      int q = d.initial;
      for (char c : w) {
        q = d.trans[q][c - '0'];
        if (q < 0) return false;
      }
      return true;
    };
    CHECK(accepts("1001"));
    CHECK(accepts("11"));
    CHECK(accepts("1000"));
    CHECK(!accepts("101"));
    CHECK(!accepts("10001"));
    CHECK(!accepts("1011"));
    CHECK(!accepts("0101"));
  }
  SUBCASE("minimality: refining the minimized DFA splits nothing") {
    for (auto a : {golden_mean(), even_shift(), full_shift()}) {
      WordDFA d = allowed_words_dfa(a);
      // one more Moore round over the result must not split any state
      std::map<std::vector<int>, int> sigs;
      for (int q = 0; q < d.num_states(); ++q) sigs[d.trans[q]] = q;
      CHECK(static_cast<int>(sigs.size()) == d.num_states());
    }
  }
  SUBCASE("trim: every state has a forward continuation") {
    std::mt19937 rng(71);
    for (int iter = 0; iter < 30; ++iter) {
      std::uniform_int_distribution<int> size(1, 5);
      WordDFA d = allowed_words_dfa(
          oracles::random_automaton(rng, size(rng), binary()));
      for (int q = 0; q < d.num_states(); ++q) {
        bool has_succ = false;
        for (int s = 0; s < d.alphabet.size(); ++s)
          if (d.trans[q][s] >= 0) has_succ = true;
        CHECK(has_succ);
      }
    }
  }
}

TEST_CASE("language equality") {
  CHECK(language_equal(golden_mean(), golden_mean()));
  CHECK(!language_equal(golden_mean(), full_shift()));
  SUBCASE("alphabet mismatch is an input error") {
    auto other = relabel(golden_mean(), {{"0", "a"}, {"1", "b"}});
    CHECK_THROWS_AS(language_equal(golden_mean(), other), input_error);
  }
}

TEST_CASE("language subset") {
  CHECK(language_subset(golden_mean(), golden_mean()));
  CHECK(language_subset(golden_mean(), full_shift()));
  CHECK(!language_subset(full_shift(), golden_mean()));
  CHECK(language_subset(even_shift(), full_shift()));
}

TEST_CASE("mutual subset iff equal, on random automata") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> size(1, 5);
    auto a = oracles::random_automaton(rng, size(rng), binary());
    auto b = oracles::random_automaton(rng, size(rng), binary());
    bool eq = language_equal(a, b);
    CHECK(eq == (language_subset(a, b) && language_subset(b, a)));
  }
}

TEST_CASE("language_subset agrees with the prefix-tree oracle") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> size(1, 5);
  for (int iter = 0; iter < 60; ++iter) {
    auto a = oracles::random_automaton(rng, size(rng), binary());
    auto b = oracles::random_automaton(rng, size(rng), binary());
    int bound = a.graph.size() * b.graph.size() + 1;
    CHECK(language_subset(a, b) ==
          oracles::language_contained_to_depth(a, b, bound));
  }
}

TEST_CASE("language_equal agrees with the prefix-tree oracle") {
  std::mt19937 rng(57);
  std::uniform_int_distribution<int> size(1, 5), split(0, 1);
  for (int iter = 0; iter < 60; ++iter) {
    auto a = oracles::random_automaton(rng, size(rng), binary());
    LabeledAutomaton b = split(rng) ? oracles::split_vertex(a, 0, rng)
                                    : oracles::random_automaton(rng, size(rng), binary());
    int bound = a.graph.size() * b.graph.size() + 1;
    CHECK(language_equal(a, b) == oracles::languages_agree_to_depth(a, b, bound));
  }
}

TEST_CASE("recode_to_1step") {
  SUBCASE("golden mean: forbidden 11 at M=2") {
    ForbiddenWordSFT sft(binary(), 2, {{1, 1}});
    RecodedSFT r = recode_to_1step(sft);
    CHECK(r.graph.size() == 3);  // 00, 01, 10
    CHECK(r.graph.edge_count() == 5);
    auto decoded = r.as_automaton();
    CHECK(language_equal(decoded, golden_mean()));
    int prev2 = 2, prev1 = 3;
    CHECK(count_words(decoded, 1) == 2);
    CHECK(count_words(decoded, 2) == 3);
    for (int n = 3; n <= 10; ++n) {
      int c = count_words(decoded, n);
      CHECK(c == prev1 + prev2);
      prev2 = prev1;
      prev1 = c;
    }
  }
  SUBCASE("nothing forbidden gives the full de Bruijn graph") {
    ForbiddenWordSFT sft(binary(), 2, {});
    RecodedSFT r = recode_to_1step(sft);
    CHECK(r.graph.size() == 4);
    CHECK(r.graph.edge_count() == 8);
  }
  SUBCASE("forbidding every word empties the shift") {
    ForbiddenWordSFT sft(binary(), 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_THROWS_WITH_AS(recode_to_1step(sft), "empty shift", input_error);
  }
  SUBCASE("words that die out are trimmed") {
    // over {0,1} with M=2: forbid 00 and 10, so 0 can never be extended
    // after it occurs twice... 0 must be followed by 1; 1 may repeat
    ForbiddenWordSFT sft(binary(), 2, {{0, 0}, {1, 0}});
    RecodedSFT r = recode_to_1step(sft);
    // allowed 2-words: 01, 11; both extend forever
    CHECK(r.graph.size() == 2);
  }
  SUBCASE("M must be at least 2") {
    CHECK_THROWS_AS(recode_to_1step(ForbiddenWordSFT(binary(), 1, {})),
                    input_error);
  }
}

TEST_CASE("is_k_step_sft") {
  CHECK(is_k_step_sft(golden_mean(), 1));
  CHECK(is_k_step_sft(full_shift(), 1));
  auto es = even_shift();
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(!is_k_step_sft(es, k));
  }
  // a 1-step language stays k-step for larger k
  CHECK(is_k_step_sft(golden_mean(), 2));
  CHECK(is_k_step_sft(golden_mean(), 3));
  CHECK_THROWS_AS(is_k_step_sft(golden_mean(), 0), input_error);
}

TEST_SUITE_END();
