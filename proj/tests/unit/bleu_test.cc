#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles/bleu_oracle.h"
#include "oracles/generators.h"
#include "profsum/bleu.h"
#include "profsum/error.h"
#include "profsum/summarize.h"

using namespace profsum;

TEST_CASE("identity scores 100") {
  TokenList t = bleu_tokens("sort an array and search");
  BleuScore s = sentence_bleu(t, t);
  CHECK(s.score == doctest::Approx(100.0).epsilon(1e-12));
  for (double p : s.precisions) CHECK(p == 1.0);
  CHECK(s.brevity_penalty == 1.0);
}

TEST_CASE("no unigram overlap scores 0") {
  CHECK(sentence_bleu(bleu_tokens("x y z"), bleu_tokens("a b c")).score == 0.0);
  CHECK(sentence_bleu({}, bleu_tokens("a b c")).score == 0.0);
}

TEST_CASE("the cat sat against the oracle") {
  TokenList c = bleu_tokens("the cat sat"), r = bleu_tokens("the cat sat down");
  BleuScore s = sentence_bleu(c, r);
  CHECK(std::abs(s.score - testing::oracle_bleu(c, r)) < 1e-9);
  CHECK(s.brevity_penalty == doctest::Approx(std::exp(1.0 - 4.0 / 3.0)));
  CHECK(s.candidate_len == 3);
  CHECK(s.reference_len == 4);
  // p4: no 4-grams in the candidate, smoothed to 1.
  CHECK(s.precisions[3] == 1.0);
}

TEST_CASE("tokens are lowercased") {
  CHECK(bleu_tokens("Sort THE  array\n") == TokenList{"sort", "the", "array"});
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(sentence_bleu({"a"}, {}), Error);
  CHECK_THROWS_AS(corpus_bleu({}), Error);
  CHECK_THROWS_AS(sentence_bleu({"a"}, {"a"}, 0), std::invalid_argument);
  try {
    corpus_bleu({{{"a"}, {}}});
    FAIL("expected EmptyReference");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyReference);
  }
}

TEST_CASE("corpus examples") {
  TokenList a = bleu_tokens("returns the sum of two values");
  TokenList z = bleu_tokens("completely unrelated words here now");
  CHECK(corpus_bleu({{a, a}, {a, a}, {a, a}}) == doctest::Approx(100.0));
  CHECK(corpus_bleu({{a, a}, {z, a}}) == doctest::Approx(50.0));
}

TEST_CASE("random pairs match the oracle") {
  std::mt19937 rng(1234);
  std::vector<BleuPair> pairs;
  double sum = 0;
  for (int i = 0; i < 500; ++i) {
    auto c = testing::random_tokens(rng, 1, 30, 8);
    auto r = testing::random_tokens(rng, 1, 30, 8);
    BleuScore s = sentence_bleu(c, r);
    double o = testing::oracle_bleu(c, r);
    CAPTURE(i);
    CHECK(std::abs(s.score - o) < 1e-9);
    CHECK(s.score >= 0.0);
    CHECK(s.score <= 100.0);
    if (i < 20) {
      pairs.emplace_back(c, r);
      sum += o;
    }
  }
  CHECK(std::abs(corpus_bleu(pairs) - sum / 20) < 1e-9);
  CHECK(corpus_bleu(pairs) == corpus_bleu_serial(pairs));
  auto shuffled = pairs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(corpus_bleu(shuffled) == corpus_bleu(pairs));
}

TEST_CASE("single substitution from identity strictly lowers the score") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto r = testing::random_tokens(rng, 1, 30, 12);
    auto c = r;
    c[rng() % c.size()] = "zzz_not_in_vocab";
    CHECK(sentence_bleu(c, r).score < sentence_bleu(r, r).score);
  }
}

TEST_CASE("published reference score is metadata only") {
  CHECK(model_reference::kReportedJavaBleu == 17.65);
  CHECK(model_reference::kMaxInputTokens == 256);
  CHECK(model_reference::kMaxOutputTokens == 128);
}
