#pragma once

#include <string>
#include <vector>

#include "xte/dkg.hpp"

namespace xte {

struct TaggedToken {
  std::string word;
  std::string tag;  // Penn-style POS tag
};

// Rule-based pre-annotation of a definition into ordered role segments,
// approximating the phrasal patterns of hand-labeled definitions. For nouns
// the supertype is the first noun group (relational adjectives attached,
// gradable ones peeled off as differentia qualities); for verbs it is the
// leading verb group including its non-locative complements. Prepositional
// groups map in/at/on to event location, during to event time, from to origin
// location and for/to+verb to purpose; relative clauses and verb groups after
// the supertype become differentia events; anything else is an associated
// fact. Throws if a token has no tag.
std::vector<RoleSegment> pre_annotate(const std::vector<TaggedToken>& tokens, WordPos pos);

}  // namespace xte
