#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace xte {

// Semantic roles a segment can play inside a dictionary definition.
enum class RoleLabel {
  SUPERTYPE,
  DIFF_QUALITY,
  DIFF_EVENT,
  EVENT_LOCATION,
  EVENT_TIME,
  ORIGIN_LOCATION,
  QUALITY_MODIFIER,
  PURPOSE,
  ASSOCIATED_FACT,
  ACC_DETERMINER,
  ACC_QUALITY,
  ROLE_PARTICLE,
};

std::string role_label_name(RoleLabel r);            // "supertype", "diff_quality", ...
std::string role_predicate(RoleLabel r);             // "has_supertype", "has_diff_qual", ...
std::optional<RoleLabel> role_label_from_name(const std::string& name);
std::optional<RoleLabel> role_label_from_predicate(const std::string& pred);

enum class WordPos { NOUN, VERB };

struct RoleSegment {
  RoleLabel role = RoleLabel::SUPERTYPE;
  std::string text;
};

// One definition record as carried by defs.jsonl.
struct DefinitionRecord {
  std::string term;
  WordPos pos = WordPos::NOUN;
  std::vector<std::string> synset;  // defaults to {term} when absent
  std::vector<RoleSegment> roles;
};

struct EntityNode {
  std::string id;
  std::set<std::string> labels;  // identifying synset, lowercased
  WordPos pos = WordPos::NOUN;
};

struct RoleNode {
  std::string id;
  RoleLabel role = RoleLabel::SUPERTYPE;
  std::string text;
};

// Entity nodes linked to their supertype role node, which in turn links to
// every other role node of the definition.
class DefinitionGraph {
 public:
  // Builds the two-level definition topology; repairs a missing supertype by
  // promoting the first noun-bearing segment, or drops the record.
  void add_definition(const DefinitionRecord& record);

  std::vector<const EntityNode*> lookup_entities(const std::string& word) const;
  // Supertype role node first, then the other role nodes of this definition.
  std::vector<const RoleNode*> neighbors(const EntityNode& entity) const;
  std::vector<const RoleNode*> neighbors_for_word(const std::string& word) const;

  const EntityNode* entity_by_id(const std::string& id) const;
  const RoleNode* role_by_id(const std::string& id) const;
  const RoleNode* supertype_of(const std::string& entity_id) const;
  const EntityNode* entity_of_role(const std::string& role_id) const;

  size_t entity_count() const { return entities_.size(); }
  size_t role_count() const { return roles_.size(); }
  size_t node_count() const { return entities_.size() + roles_.size(); }

  const std::vector<EntityNode>& entities() const { return entities_; }
  const std::vector<RoleNode>& roles() const { return roles_; }

  // One document per definition: the role texts in order. Used as the IDF
  // corpus for the resource that produced this graph.
  std::vector<std::string> definition_documents() const;

  std::string serialize() const;

 private:
  friend DefinitionGraph parse_graph(const std::string&, const std::string&);

  struct Definition {
    size_t entity_idx = 0;
    size_t supertype_idx = 0;
    std::vector<size_t> other_role_idxs;
  };

  std::vector<EntityNode> entities_;
  std::vector<RoleNode> roles_;
  std::vector<Definition> definitions_;
  std::unordered_map<std::string, std::vector<size_t>> lemma_index_;  // lemma -> definition idx
  std::unordered_map<std::string, size_t> entity_id_index_;
  std::unordered_map<std::string, size_t> role_id_index_;
  std::unordered_map<std::string, size_t> definition_of_entity_;
  std::unordered_map<std::string, size_t> definition_of_role_;

  void index_definition(size_t def_idx);
};

// defs.jsonl: one JSON object per line with keys term, pos, synset (optional),
// roles (array of [label, text] pairs). Unknown role labels are an error.
DefinitionGraph ingest_labeled_definitions(const std::string& path);
DefinitionGraph parse_labeled_definitions(const std::string& content,
                                          const std::string& origin = "<string>");

// Triple TSV: "subject\tpredicate\tobject" with predicates has_*, label, pos,
// synset. Round-trips losslessly through DefinitionGraph::serialize().
DefinitionGraph load_graph(const std::string& path);
DefinitionGraph parse_graph(const std::string& content,
                            const std::string& origin = "<string>");
void save_graph(const DefinitionGraph& graph, const std::string& path);

}  // namespace xte
