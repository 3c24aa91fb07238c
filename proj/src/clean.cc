#include "profsum/clean.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"

#include "profsum/java_lexer.h"
#include "profsum/text.h"

namespace profsum {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_link(std::string_view token) {
  return token.starts_with("http://") || token.starts_with("https://");
}

// Last identifier in one parameter declaration, e.g. "final int[] xs" -> xs.
std::string param_name(std::string_view decl) {
  std::string cleaned(decl);
  // Blank annotations, including any argument list.
  for (size_t i = 0; i < cleaned.size(); ++i) {
    if (cleaned[i] != '@') continue;
    size_t j = i + 1;
    while (j < cleaned.size() && (is_ident_char(cleaned[j]) || cleaned[j] == '.'))
      ++j;
    if (j < cleaned.size() && cleaned[j] == '(')
      if (auto close = java::match_paren(cleaned, j)) j = *close + 1;
    std::fill(cleaned.begin() + i, cleaned.begin() + j, ' ');
  }
  size_t end = cleaned.size();
  while (end > 0 && !is_ident_char(cleaned[end - 1])) --end;
  size_t start = end;
  while (start > 0 && is_ident_char(cleaned[start - 1])) --start;
  return cleaned.substr(start, end - start);
}

}  // namespace

std::string_view CleanRuleName(CleanRule rule) {
  switch (rule) {
    case CleanRule::kShortComment: return "short_comment";
    case CleanRule::kNonAscii: return "non_ascii";
    case CleanRule::kParamMismatch: return "param_mismatch";
    case CleanRule::kCommentLongerThanCode: return "comment_longer_than_code";
  }
  return "unknown";
}

std::vector<std::string> declared_params(std::string_view code) {
  std::string masked = java::mask_non_code(code);
  auto named = java::first_named_paren(masked);
  if (!named) return {};
  auto close = java::match_paren(masked, named->open_paren);
  if (!close) return {};
  std::vector<std::string> out;
  std::string_view list = std::string_view(masked).substr(
      named->open_paren + 1, *close - named->open_paren - 1);
  int depth = 0;
  size_t start = 0;
  for (size_t p = 0; p <= list.size(); ++p) {
    char c = p < list.size() ? list[p] : ',';
    if (c == '<' || c == '(' || c == '[') {
      ++depth;
    } else if (c == '>' || c == ')' || c == ']') {
      --depth;
    } else if (c == ',' && depth == 0) {
      std::string name = param_name(list.substr(start, p - start));
      if (!name.empty() && name != "this") out.push_back(std::move(name));
      start = p + 1;
    }
  }
  return out;
}

std::vector<std::string> documented_params(std::string_view comment) {
  std::vector<std::string_view> tokens = tokenize(comment);
  std::vector<std::string> out;
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i] != "@param") continue;
    std::string_view name = tokens[i + 1];
    if (name.starts_with('<')) continue;  // type parameter
    out.emplace_back(name);
  }
  return out;
}

CodeDocPair CodeDocPair::make(std::string code, std::string comment) {
  CodeDocPair p;
  p.params_declared = declared_params(code);
  p.params_documented = documented_params(comment);
  p.code = std::move(code);
  p.comment = std::move(comment);
  return p;
}

std::string strip_links(std::string_view comment) {
  std::vector<std::string_view> kept;
  for (std::string_view t : tokenize(comment))
    if (!is_link(t)) kept.push_back(t);
  return join(kept, " ");
}

CleanOutcome clean_pair(const CodeDocPair& pair) {
  CleanOutcome out;
  out.transformed_comment = strip_links(pair.comment);
  auto drop = [&](CleanRule r) {
    out.keep = false;
    out.rule = r;
    return out;
  };
  const size_t comment_tokens = tokenize(out.transformed_comment).size();
  if (comment_tokens < 4) return drop(CleanRule::kShortComment);
  if (!is_plain_ascii(out.transformed_comment) || !is_plain_ascii(pair.code))
    return drop(CleanRule::kNonAscii);
  if (!pair.params_documented.empty()) {
    std::set<std::string> declared(pair.params_declared.begin(),
                                   pair.params_declared.end());
    std::set<std::string> documented(pair.params_documented.begin(),
                                     pair.params_documented.end());
    if (declared != documented) return drop(CleanRule::kParamMismatch);
  }
  if (comment_tokens > tokenize(pair.code).size())
    return drop(CleanRule::kCommentLongerThanCode);
  out.keep = true;
  return out;
}

size_t CleanStats::dropped_total() const {
  size_t total = 0;
  for (size_t d : dropped) total += d;
  return total;
}

namespace {

void tally_mismatch(const CodeDocPair& p, CleanStats& stats) {
  std::set<std::string> declared(p.params_declared.begin(),
                                 p.params_declared.end());
  std::set<std::string> documented(p.params_documented.begin(),
                                   p.params_documented.end());
  bool missing = std::any_of(declared.begin(), declared.end(),
                             [&](const auto& d) { return !documented.count(d); });
  bool extra = std::any_of(documented.begin(), documented.end(),
                           [&](const auto& d) { return !declared.count(d); });
  stats.params_missing_from_doc += missing;
  stats.params_extra_in_doc += extra;
}

CleanResult collect(const std::vector<CodeDocPair>& pairs,
                    std::vector<CleanOutcome> outcomes) {
  CleanResult result;
  result.stats.input = pairs.size();
  for (size_t i = 0; i < pairs.size(); ++i) {
    CleanOutcome& o = outcomes[i];
    if (o.keep) {
      CodeDocPair kept = pairs[i];
      kept.comment = std::move(o.transformed_comment);
      result.kept.push_back(std::move(kept));
      ++result.stats.kept;
    } else {
      ++result.stats.dropped[static_cast<size_t>(*o.rule)];
      if (*o.rule == CleanRule::kParamMismatch)
        tally_mismatch(pairs[i], result.stats);
    }
  }
  return result;
}

}  // namespace

CleanResult clean_corpus(const std::vector<CodeDocPair>& pairs) {
  std::vector<CleanOutcome> outcomes(pairs.size());
  const long n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) outcomes[i] = clean_pair(pairs[i]);
  return collect(pairs, std::move(outcomes));
}

CleanResult clean_corpus_serial(const std::vector<CodeDocPair>& pairs) {
  std::vector<CleanOutcome> outcomes;
  outcomes.reserve(pairs.size());
  for (const auto& p : pairs) outcomes.push_back(clean_pair(p));
  return collect(pairs, std::move(outcomes));
}

CleanResult clean_jsonl(std::string_view jsonl) {
  std::vector<CodeDocPair> pairs;
  size_t malformed = 0;
  size_t pos = 0;
  while (pos < jsonl.size()) {
    size_t nl = jsonl.find('\n', pos);
    if (nl == std::string_view::npos) nl = jsonl.size();
    std::string_view line = jsonl.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("code") ||
        !obj.contains("comment") || !obj["code"].is_string() ||
        !obj["comment"].is_string() || obj["code"].get<std::string>().empty()) {
      ++malformed;
      continue;
    }
    pairs.push_back(CodeDocPair::make(obj["code"].get<std::string>(),
                                      obj["comment"].get<std::string>()));
  }
  CleanResult r = clean_corpus(pairs);
  r.stats.malformed = malformed;
  r.stats.input += malformed;
  return r;
}

std::string to_jsonl(const std::vector<CodeDocPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    nlohmann::json j = {{"code", p.code}, {"comment", p.comment}};
    out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

}  // namespace profsum
