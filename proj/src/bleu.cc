#include "profsum/bleu.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "profsum/error.h"
#include "profsum/text.h"

namespace profsum {

namespace {

using NgramCounts = std::map<std::vector<std::string_view>, size_t>;

NgramCounts count_ngrams(const TokenList& tokens, size_t n) {
  NgramCounts counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i,
                                       tokens.begin() + i + n);
    ++counts[std::move(gram)];
  }
  return counts;
}

double mean_sorted(std::vector<double> scores) {
  // Summing in sorted order makes the mean independent of input order.
  std::sort(scores.begin(), scores.end());
  double sum = 0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

}  // namespace

TokenList bleu_tokens(std::string_view text) {
  TokenList out;
  for (std::string_view t : tokenize(text)) out.push_back(to_lower_ascii(t));
  return out;
}

BleuScore sentence_bleu(const TokenList& candidate, const TokenList& reference,
                        size_t max_n) {
  if (reference.empty())
    throw Error(ErrorKind::kEmptyReference, "reference has no tokens");
  if (max_n == 0 || max_n > kBleuMaxOrder)
    throw std::invalid_argument("max_n must be in [1, 4]");
  BleuScore s;
  s.candidate_len = candidate.size();
  s.reference_len = reference.size();
  double log_sum = 0;
  for (size_t n = 1; n <= max_n; ++n) {
    NgramCounts cand = count_ngrams(candidate, n);
    NgramCounts ref = count_ngrams(reference, n);
    size_t matches = 0;
    size_t total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
    for (const auto& [gram, c] : cand) {
      auto it = ref.find(gram);
      if (it != ref.end()) matches += std::min(c, it->second);
    }
    double p = n == 1 ? (total ? static_cast<double>(matches) / total : 0.0)
                      : static_cast<double>(matches + 1) / (total + 1);
    s.precisions[n - 1] = p;
    if (p > 0) log_sum += std::log(p);
  }
  if (candidate.empty()) {
    s.brevity_penalty = 0;
  } else if (candidate.size() > reference.size()) {
    s.brevity_penalty = 1;
  } else {
    s.brevity_penalty = std::exp(1.0 - static_cast<double>(reference.size()) /
                                           candidate.size());
  }
  if (s.precisions[0] == 0) {
    s.score = 0;
  } else {
    s.score = 100.0 * s.brevity_penalty *
              std::exp(log_sum / static_cast<double>(max_n));
  }
  return s;
}

double corpus_bleu(const std::vector<BleuPair>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no pairs");
  for (const auto& [c, r] : pairs)
    if (r.empty()) throw Error(ErrorKind::kEmptyReference, "reference has no tokens");
  std::vector<double> scores(pairs.size());
  const long n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i)
    scores[i] = sentence_bleu(pairs[i].first, pairs[i].second).score;
  return mean_sorted(std::move(scores));
}

double corpus_bleu_serial(const std::vector<BleuPair>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no pairs");
  std::vector<double> scores;
  scores.reserve(pairs.size());
  for (const auto& [c, r] : pairs) scores.push_back(sentence_bleu(c, r).score);
  return mean_sorted(std::move(scores));
}

}  // namespace profsum
