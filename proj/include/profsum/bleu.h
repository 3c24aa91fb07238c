#ifndef PROFSUM_BLEU_H_
#define PROFSUM_BLEU_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace profsum {

inline constexpr size_t kBleuMaxOrder = 4;

struct BleuScore {
  double score = 0;  // [0, 100]
  std::array<double, kBleuMaxOrder> precisions{};
  double brevity_penalty = 0;
  size_t candidate_len = 0;
  size_t reference_len = 0;
};

using TokenList = std::vector<std::string>;

// Lowercased whitespace tokens.
TokenList bleu_tokens(std::string_view text);

// Smoothed sentence BLEU: p1 is the clipped unigram precision, higher orders
// use (matches + 1) / (count + 1). Throws Error{kEmptyReference}.
BleuScore sentence_bleu(const TokenList& candidate, const TokenList& reference,
                        size_t max_n = kBleuMaxOrder);

using BleuPair = std::pair<TokenList, TokenList>;  // candidate, reference

// Mean of sentence scores, parallel over pairs. Throws Error{kEmptyCorpus}.
double corpus_bleu(const std::vector<BleuPair>& pairs);
double corpus_bleu_serial(const std::vector<BleuPair>& pairs);

}  // namespace profsum

#endif  // PROFSUM_BLEU_H_
