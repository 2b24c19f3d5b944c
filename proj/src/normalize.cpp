#include "xte/normalize.hpp"

#include <cctype>
#include <sstream>

#include "xte/util.hpp"

namespace xte {

std::string overlap_category_name(OverlapCategory c) {
  switch (c) {
    case OverlapCategory::TOTAL: return "TOTAL";
    case OverlapCategory::PARTIAL: return "PARTIAL";
    case OverlapCategory::NULL_OVERLAP: return "NULL";
  }
  return "?";
}

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

// Strips leading/trailing punctuation, keeps internal hyphens/apostrophes.
std::string strip_punct(std::string_view tok) {
  size_t b = 0, e = tok.size();
  while (b < e && !is_word_char(static_cast<unsigned char>(tok[b]))) ++b;
  while (e > b && !is_word_char(static_cast<unsigned char>(tok[e - 1]))) --e;
  return std::string(tok.substr(b, e - b));
}

}  // namespace

std::vector<std::string> tokenize(const std::string& sentence) {
  std::vector<std::string> out;
  for (const auto& raw : split_ws(sentence)) {
    std::string tok = strip_punct(to_lower(raw));
    if (!tok.empty()) out.push_back(std::move(tok));
  }
  return out;
}

std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const LemmaTable& lemmas) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto it = lemmas.find(t);
    out.push_back(it != lemmas.end() ? it->second : t);
  }
  return out;
}

TokenBag normalize(const std::string& sentence, const StopwordSet& stopwords,
                   const LemmaTable& lemmas) {
  TokenBag bag;
  std::vector<std::string> toks = tokenize(sentence);
  bag.source_len = toks.size();
  for (const auto& t : toks) {
    if (stopwords.count(t)) continue;
    auto it = lemmas.find(t);
    bag.tokens.insert(it != lemmas.end() ? it->second : t);
  }
  return bag;
}

OverlapResult compute_overlap(const TokenBag& t_bag, const TokenBag& h_bag) {
  OverlapResult r;
  r.n = t_bag.tokens.size();
  r.m = h_bag.tokens.size();
  for (const auto& w : t_bag.tokens) {
    if (h_bag.tokens.count(w)) r.overlap.insert(w);
  }
  r.k = r.overlap.size();
  if (r.k == 0) {
    r.category = OverlapCategory::NULL_OVERLAP;
  } else if (r.k == r.m || r.k == r.n) {
    r.category = OverlapCategory::TOTAL;
  } else {
    r.category = OverlapCategory::PARTIAL;
  }
  return r;
}

Route route(const OverlapResult& overlap) {
  return overlap.category == OverlapCategory::PARTIAL ? Route::DGN : Route::TED;
}

StopwordSet load_stopwords(const std::string& path) {
  StopwordSet out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string w = trim(line);
    if (w.empty() || w[0] == '#') continue;
    out.insert(to_lower(w));
  }
  return out;
}

LemmaTable load_lemmas(const std::string& path) {
  LemmaTable out;
  std::istringstream in(read_file(path));
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": expected \"surface\\tlemma\"");
    out[to_lower(trim(cols[0]))] = to_lower(trim(cols[1]));
  }
  return out;
}

const StopwordSet& default_stopwords() {
  static const StopwordSet kStopwords = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "your",
      "yours", "yourself", "yourselves", "he", "him", "his", "himself", "she",
      "her", "hers", "herself", "it", "its", "itself", "they", "them", "their",
      "theirs", "themselves", "what", "which", "who", "whom", "this", "that",
      "these", "those", "am", "is", "are", "was", "were", "be", "been", "being",
      "have", "has", "had", "having", "do", "does", "did", "doing", "a", "an",
      "the", "and", "but", "if", "or", "because", "as", "until", "while", "of",
      "at", "by", "for", "with", "about", "against", "between", "into",
      "through", "during", "before", "after", "above", "below", "to", "from",
      "up", "down", "in", "out", "on", "off", "over", "under", "again",
      "further", "then", "once", "here", "there", "when", "where", "why", "how",
      "all", "any", "both", "each", "few", "more", "most", "other", "some",
      "such", "no", "nor", "not", "never", "n't", "cannot", "only", "own",
      "same", "so", "than", "too", "very", "s", "t", "can", "will", "just",
      "don", "should", "now"};
  return kStopwords;
}

}  // namespace xte
