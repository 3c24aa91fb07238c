#ifndef PROFSUM_CLEAN_H_
#define PROFSUM_CLEAN_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace profsum {

struct CodeDocPair {
  std::string code;
  std::string comment;
  std::vector<std::string> params_declared;    // from the parameter list
  std::vector<std::string> params_documented;  // names after @param

  // Parses both parameter lists.
  static CodeDocPair make(std::string code, std::string comment);
};

enum class CleanRule {
  kShortComment,          // fewer than four comment tokens
  kNonAscii,              // any byte outside tab/LF/CR/0x20..0x7E
  kParamMismatch,         // documented @param set differs from declared set
  kCommentLongerThanCode  // more comment tokens than code tokens
};

inline constexpr size_t kCleanRuleCount = 4;
std::string_view CleanRuleName(CleanRule rule);

struct CleanOutcome {
  bool keep = false;
  std::optional<CleanRule> rule;  // set iff dropped
  std::string transformed_comment;
};

// Parameter names of the first method declaration in |code|.
std::vector<std::string> declared_params(std::string_view code);
// Names following each `@param` tag.
std::vector<std::string> documented_params(std::string_view comment);

// Drops every whitespace-delimited token starting with http:// or https://
// and rejoins the remaining tokens with single spaces.
std::string strip_links(std::string_view comment);

// Link stripping first, then the drop rules in the order short comment,
// non-ASCII, parameter mismatch, comment longer than code. Pairs without any
// @param tag are exempt from the parameter rule.
CleanOutcome clean_pair(const CodeDocPair& pair);

struct CleanStats {
  size_t input = 0;
  size_t kept = 0;
  std::array<size_t, kCleanRuleCount> dropped{};
  size_t malformed = 0;
  // Breakdown of parameter mismatches (a pair can count in both).
  size_t params_missing_from_doc = 0;
  size_t params_extra_in_doc = 0;

  size_t dropped_total() const;
  bool operator==(const CleanStats&) const = default;
};

struct CleanResult {
  std::vector<CodeDocPair> kept;  // comment replaced by the transformed one
  CleanStats stats;
};

// Order-preserving filter over parsed pairs; parallel over pairs.
CleanResult clean_corpus(const std::vector<CodeDocPair>& pairs);
CleanResult clean_corpus_serial(const std::vector<CodeDocPair>& pairs);

// JSONL with `code` and `comment` string fields. Lines that fail to parse,
// lack a field, or have empty code count as malformed.
CleanResult clean_jsonl(std::string_view jsonl);
std::string to_jsonl(const std::vector<CodeDocPair>& pairs);

}  // namespace profsum

#endif  // PROFSUM_CLEAN_H_
