#include "xte/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "xte/util.hpp"

namespace xte {

std::set<std::string> ContextFlags::to_set() const {
  std::set<std::string> out;
  if (negation) out.insert("negation");
  if (opposition) out.insert("opposition");
  if (inverse_specialization) out.insert("inverse_specialization");
  if (unsatisfiable_clauses) out.insert("unsatisfiable_clauses");
  return out;
}

namespace {

const std::unordered_set<std::string>& auxiliaries() {
  static const std::unordered_set<std::string> kAux = {
      "is",  "are",  "was",   "were",  "am",   "be",  "been",   "being", "do",
      "does", "did",  "has",   "have",  "had",  "can", "could",  "will",  "would",
      "shall", "should", "may", "might", "must"};
  return kAux;
}

bool verbal_token(const std::string& tok) {
  if (auxiliaries().count(tok)) return true;
  if (tok.size() > 4 && tok.ends_with("ing")) return true;
  if (tok.size() > 3 && tok.ends_with("ed")) return true;
  return false;
}

bool has_scoped_negation(const std::vector<std::string>& tokens,
                         const std::vector<std::string>& markers) {
  std::unordered_set<std::string> marker_set(markers.begin(), markers.end());
  const bool nt_marker = marker_set.count("n't") > 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (nt_marker && tok.size() > 3 && tok.ends_with("n't")) return true;
    if (!marker_set.count(tok)) continue;
    if (tok == "no") return true;  // determiner negation scopes the clause
    if (tok == "n't") return true;
    // "not"/"never" must sit in a verb group: preceded by an auxiliary.
    if (i > 0 && auxiliaries().count(tokens[i - 1])) return true;
  }
  return false;
}

std::set<std::string> content_bag(const std::vector<std::string>& tokens,
                                  const ContextResources& res,
                                  const std::vector<std::string>& extra_drop) {
  std::set<std::string> bag;
  for (const auto& tok : tokens) {
    if (res.stopwords && res.stopwords->count(tok)) continue;
    if (std::find(extra_drop.begin(), extra_drop.end(), tok) != extra_drop.end()) continue;
    if (tok.size() > 3 && tok.ends_with("n't")) continue;
    std::string lemma = tok;
    if (res.lemmas) {
      auto it = res.lemmas->find(tok);
      if (it != res.lemmas->end()) lemma = it->second;
    }
    bag.insert(lemma);
  }
  return bag;
}

// True if `phrase` ("take off") occurs as a contiguous run in `seq`.
bool phrase_in(const std::vector<std::string>& seq, const std::string& phrase) {
  std::vector<std::string> words = split_ws(phrase);
  if (words.empty() || words.size() > seq.size()) return false;
  for (size_t i = 0; i + words.size() <= seq.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < words.size(); ++j) {
      if (seq[i + j] != words[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

size_t clause_count(const std::string& sentence) {
  std::vector<std::string> toks = tokenize(sentence);
  auto verbal_within = [&](size_t begin, size_t window) {
    for (size_t i = begin; i < toks.size() && i < begin + window; ++i)
      if (verbal_token(toks[i])) return true;
    return false;
  };
  size_t clauses = 1;
  bool verbal_before = false;
  for (size_t i = 0; i < toks.size(); ++i) {
    const std::string& tok = toks[i];
    if ((tok == "and" || tok == "or") && verbal_before && verbal_within(i + 1, 3)) {
      ++clauses;
    } else if ((tok == "that" || tok == "which" || tok == "while" || tok == "when") &&
               verbal_within(i + 1, 3)) {
      ++clauses;
    }
    if (verbal_token(tok)) verbal_before = true;
  }
  return clauses;
}

}  // namespace

bool detect_negation(const std::vector<std::string>& t_tokens,
                     const std::vector<std::string>& h_tokens, const ContextResources& res) {
  bool t_neg = has_scoped_negation(t_tokens, res.negation_markers);
  bool h_neg = has_scoped_negation(h_tokens, res.negation_markers);
  if (t_neg == h_neg) return false;
  return content_bag(t_tokens, res, res.negation_markers) ==
         content_bag(h_tokens, res, res.negation_markers);
}

bool detect_opposition(const std::vector<std::string>& t_tokens,
                       const std::vector<std::string>& h_tokens, const LexTables& lex,
                       const LemmaTable& lemmas) {
  std::vector<std::string> t_seq = lemmatize(t_tokens, lemmas);
  std::vector<std::string> h_seq = lemmatize(h_tokens, lemmas);
  for (const auto& [x, y] : lex.antonym_pairs()) {
    if (phrase_in(t_seq, x) && phrase_in(h_seq, y)) return true;
    if (phrase_in(t_seq, y) && phrase_in(h_seq, x)) return true;
  }
  return false;
}

bool detect_inverse_specialization(const std::vector<std::string>& t_tokens,
                                   const std::vector<std::string>& h_tokens,
                                   const LexTables& lex, const StopwordSet& stopwords,
                                   const LemmaTable& lemmas) {
  auto content = [&](const std::vector<std::string>& toks) {
    std::set<std::string> out;
    for (const auto& t : lemmatize(toks, lemmas))
      if (!stopwords.count(t)) out.insert(t);
    return out;
  };
  std::set<std::string> t_terms = content(t_tokens);
  std::set<std::string> h_terms = content(h_tokens);
  for (const auto& h : h_terms) {
    for (const auto& t : t_terms) {
      if (h == t) continue;
      if (lex.is_hyponym_of(h, t, 3)) return true;
    }
  }
  return false;
}

bool detect_unsatisfiable_clauses(const std::string& t_sentence,
                                  const std::string& h_sentence) {
  return clause_count(h_sentence) > clause_count(t_sentence);
}

ContextFlags analyze(const EntailmentPair& pair, const ContextResources& res) {
  ContextFlags flags;
  std::vector<std::string> t_tokens = tokenize(pair.text);
  std::vector<std::string> h_tokens = tokenize(pair.hypothesis);
  static const LemmaTable kEmptyLemmas;
  static const StopwordSet kEmptyStopwords;
  const LemmaTable& lemmas = res.lemmas ? *res.lemmas : kEmptyLemmas;
  const StopwordSet& stopwords = res.stopwords ? *res.stopwords : kEmptyStopwords;

  flags.negation = detect_negation(t_tokens, h_tokens, res);
  if (res.lex) {
    flags.opposition = detect_opposition(t_tokens, h_tokens, *res.lex, lemmas);
    flags.inverse_specialization =
        detect_inverse_specialization(t_tokens, h_tokens, *res.lex, stopwords, lemmas);
  }
  flags.unsatisfiable_clauses = detect_unsatisfiable_clauses(pair.text, pair.hypothesis);
  return flags;
}

}  // namespace xte
