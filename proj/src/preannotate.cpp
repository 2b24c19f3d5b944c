#include "xte/preannotate.hpp"

#include <stdexcept>
#include <unordered_set>

#include "xte/util.hpp"

namespace xte {

namespace {

const std::unordered_set<std::string> kQuantifiers = {"any", "one", "each", "some",
                                                      "either", "member"};
const std::unordered_set<std::string> kNominalTags = {"DT", "PDT", "CD",  "JJ",  "JJR",
                                                      "JJS", "NN",  "NNS", "NNP", "NNPS"};

bool is_noun(const std::string& tag) { return tag.rfind("NN", 0) == 0; }
bool is_adj(const std::string& tag) { return tag.rfind("JJ", 0) == 0; }
bool is_verb(const std::string& tag) { return tag.rfind("VB", 0) == 0; }
bool is_adv(const std::string& tag) { return tag.rfind("RB", 0) == 0; }
bool is_rel_pronoun(const std::string& tag) { return tag == "WDT" || tag == "WP"; }

// Relational adjectives ("celestial", "solar") are non-gradable and belong to
// the noun compound rather than to a differentia quality.
bool relational_adjective(const std::string& word) {
  std::string w = to_lower(word);
  return w.size() > 4 && (w.ends_with("al") || w.ends_with("ic") || w.ends_with("ar") ||
                          w.ends_with("ary"));
}

class Annotator {
 public:
  Annotator(const std::vector<TaggedToken>& tokens, WordPos pos)
      : toks_(tokens), pos_(pos) {
    for (const auto& t : toks_)
      if (t.tag.empty())
        throw std::runtime_error("untagged token '" + t.word + "' in definition");
  }

  std::vector<RoleSegment> run() {
    if (pos_ == WordPos::NOUN) {
      leading_determiner();
      adjective_block();
      supertype_noun_group();
    } else {
      supertype_verb_group();
    }
    while (i_ < toks_.size()) remainder_segment();
    return segments_;
  }

 private:
  const std::vector<TaggedToken>& toks_;
  WordPos pos_;
  size_t i_ = 0;
  std::vector<RoleSegment> segments_;

  const std::string& word(size_t i) const { return toks_[i].word; }
  const std::string& tag(size_t i) const { return toks_[i].tag; }
  std::string lower(size_t i) const { return to_lower(toks_[i].word); }

  void emit(RoleLabel role, size_t begin, size_t end) {
    if (end <= begin) return;
    std::string text = word(begin);
    for (size_t i = begin + 1; i < end; ++i) {
      text += ' ';
      text += word(i);
    }
    segments_.push_back({role, text});
  }

  bool prep_is(size_t i, std::initializer_list<const char*> words) const {
    if (tag(i) != "IN" && tag(i) != "TO") return false;
    std::string w = to_lower(word(i));
    for (const char* c : words)
      if (w == c) return true;
    return false;
  }

  bool at_trigger(size_t i) const {
    if (i >= toks_.size()) return true;
    if (is_rel_pronoun(tag(i))) return true;
    if (prep_is(i, {"in", "at", "on", "during", "from", "for"})) return true;
    if (tag(i) == "TO" && i + 1 < toks_.size() && is_verb(tag(i + 1))) return true;
    return false;
  }

  void leading_determiner() {
    if (i_ >= toks_.size()) return;
    // Quantifier phrases ("any of the nine") are accessory determiners.
    if (kQuantifiers.count(lower(i_)) && i_ + 1 < toks_.size() && lower(i_ + 1) == "of") {
      size_t b = i_;
      i_ += 2;
      while (i_ < toks_.size() && (tag(i_) == "DT" || tag(i_) == "PDT" || tag(i_) == "CD"))
        ++i_;
      emit(RoleLabel::ACC_DETERMINER, b, i_);
      // a bare article may still precede the noun group ("any of ... the ...")
    }
    if (i_ < toks_.size() && tag(i_) == "DT") ++i_;  // plain article is dropped
  }

  void adjective_block() {
    // Adverb + adjective pairs contribute a quality modifier, gradable
    // adjectives a differentia quality each; trailing relational adjectives
    // stay with the noun group and are handled by the supertype scan.
    while (i_ < toks_.size()) {
      if (is_adv(tag(i_)) && i_ + 1 < toks_.size() && is_adj(tag(i_ + 1))) {
        emit(RoleLabel::QUALITY_MODIFIER, i_, i_ + 1);
        ++i_;
        continue;
      }
      if (!is_adj(tag(i_))) break;
      // Stop if this adjective (and everything up to the nouns) is relational.
      bool all_relational = true;
      for (size_t j = i_; j < toks_.size() && is_adj(tag(j)); ++j) {
        if (!relational_adjective(word(j))) {
          all_relational = false;
          break;
        }
      }
      if (all_relational) break;
      emit(RoleLabel::DIFF_QUALITY, i_, i_ + 1);
      ++i_;
    }
  }

  void supertype_noun_group() {
    size_t b = i_;
    while (i_ < toks_.size() && is_adj(tag(i_)) && relational_adjective(word(i_))) ++i_;
    while (i_ < toks_.size() && is_noun(tag(i_))) ++i_;
    // "of"-complements belong with the head noun ("account of ownership").
    while (i_ < toks_.size() && prep_is(i_, {"of"})) {
      size_t save = i_;
      ++i_;
      if (i_ < toks_.size() && tag(i_) == "DT") ++i_;
      size_t nouns = 0;
      while (i_ < toks_.size() &&
             (is_noun(tag(i_)) || is_adj(tag(i_)) || tag(i_) == "CC")) {
        if (is_noun(tag(i_))) ++nouns;
        ++i_;
      }
      if (nouns == 0) {
        i_ = save;
        break;
      }
    }
    if (i_ > b) emit(RoleLabel::SUPERTYPE, b, i_);
  }

  void supertype_verb_group() {
    if (i_ < toks_.size() && tag(i_) == "TO") ++i_;  // definitions lead with "to"
    size_t b = i_;
    while (i_ < toks_.size() && (is_verb(tag(i_)) || tag(i_) == "RP")) ++i_;
    // Non-locative complements stay in the verb group ("come into the possession").
    while (i_ < toks_.size() && !at_trigger(i_)) ++i_;
    if (i_ > b) emit(RoleLabel::SUPERTYPE, b, i_);
  }

  void nominal_run() {
    while (i_ < toks_.size() && kNominalTags.count(tag(i_))) ++i_;
  }

  void remainder_segment() {
    size_t b = i_;
    if (is_rel_pronoun(tag(i_))) {
      // Relative clauses run to the end of the definition.
      i_ = toks_.size();
      emit(RoleLabel::DIFF_EVENT, b, i_);
      return;
    }
    if (is_verb(tag(i_))) {
      i_ = toks_.size();
      emit(RoleLabel::DIFF_EVENT, b, i_);
      return;
    }
    if (prep_is(i_, {"in", "at", "on"})) {
      ++i_;
      nominal_run();
      emit(RoleLabel::EVENT_LOCATION, b, i_);
      return;
    }
    if (prep_is(i_, {"during"})) {
      ++i_;
      nominal_run();
      emit(RoleLabel::EVENT_TIME, b, i_);
      return;
    }
    if (prep_is(i_, {"from"})) {
      ++i_;
      nominal_run();
      emit(RoleLabel::ORIGIN_LOCATION, b, i_);
      return;
    }
    if (prep_is(i_, {"for"}) ||
        (tag(i_) == "TO" && i_ + 1 < toks_.size() && is_verb(tag(i_ + 1)))) {
      ++i_;
      while (i_ < toks_.size() && !at_trigger(i_)) ++i_;
      emit(RoleLabel::PURPOSE, b, i_);
      return;
    }
    // Residue up to the next recognized boundary.
    ++i_;
    while (i_ < toks_.size() && !at_trigger(i_) && !is_verb(tag(i_))) ++i_;
    emit(RoleLabel::ASSOCIATED_FACT, b, i_);
  }
};

}  // namespace

std::vector<RoleSegment> pre_annotate(const std::vector<TaggedToken>& tokens, WordPos pos) {
  Annotator a(tokens, pos);
  return a.run();
}

}  // namespace xte
