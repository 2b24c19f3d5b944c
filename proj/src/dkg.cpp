#include "xte/dkg.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "xte/normalize.hpp"
#include "xte/util.hpp"

namespace xte {

namespace {

struct RoleNames {
  RoleLabel label;
  const char* name;
  const char* predicate;
};

constexpr std::array<RoleNames, 12> kRoles = {{
    {RoleLabel::SUPERTYPE, "supertype", "has_supertype"},
    {RoleLabel::DIFF_QUALITY, "diff_quality", "has_diff_qual"},
    {RoleLabel::DIFF_EVENT, "diff_event", "has_diff_event"},
    {RoleLabel::EVENT_LOCATION, "event_location", "has_event_location"},
    {RoleLabel::EVENT_TIME, "event_time", "has_event_time"},
    {RoleLabel::ORIGIN_LOCATION, "origin_location", "has_origin_location"},
    {RoleLabel::QUALITY_MODIFIER, "quality_modifier", "has_quality_modifier"},
    {RoleLabel::PURPOSE, "purpose", "has_purpose"},
    {RoleLabel::ASSOCIATED_FACT, "associated_fact", "has_associated_fact"},
    {RoleLabel::ACC_DETERMINER, "acc_determiner", "has_acc_determiner"},
    {RoleLabel::ACC_QUALITY, "acc_quality", "has_acc_quality"},
    {RoleLabel::ROLE_PARTICLE, "role_particle", "has_role_particle"},
}};

// A segment can stand in for a missing supertype if it carries nominal
// material: some token that is neither a stop word nor obviously verbal.
bool noun_bearing(const std::string& text) {
  for (const auto& tok : tokenize(text)) {
    if (default_stopwords().count(tok)) continue;
    if (tok.size() > 4 && (tok.ends_with("ing") || tok.ends_with("ed"))) continue;
    if (tok.size() > 3 && tok.ends_with("ly")) continue;
    return true;
  }
  return false;
}

}  // namespace

std::string role_label_name(RoleLabel r) {
  for (const auto& e : kRoles)
    if (e.label == r) return e.name;
  return "?";
}

std::string role_predicate(RoleLabel r) {
  for (const auto& e : kRoles)
    if (e.label == r) return e.predicate;
  return "?";
}

std::optional<RoleLabel> role_label_from_name(const std::string& name) {
  std::string n = to_lower(trim(name));
  for (const auto& e : kRoles)
    if (n == e.name) return e.label;
  return std::nullopt;
}

std::optional<RoleLabel> role_label_from_predicate(const std::string& pred) {
  for (const auto& e : kRoles)
    if (pred == e.predicate) return e.label;
  return std::nullopt;
}

void DefinitionGraph::index_definition(size_t def_idx) {
  const Definition& d = definitions_[def_idx];
  const EntityNode& e = entities_[d.entity_idx];
  for (const auto& lemma : e.labels) lemma_index_[lemma].push_back(def_idx);
  entity_id_index_[e.id] = d.entity_idx;
  definition_of_entity_[e.id] = def_idx;
  role_id_index_[roles_[d.supertype_idx].id] = d.supertype_idx;
  definition_of_role_[roles_[d.supertype_idx].id] = def_idx;
  for (size_t r : d.other_role_idxs) {
    role_id_index_[roles_[r].id] = r;
    definition_of_role_[roles_[r].id] = def_idx;
  }
}

void DefinitionGraph::add_definition(const DefinitionRecord& record) {
  if (record.term.empty()) throw std::runtime_error("definition record with empty term");

  std::vector<RoleSegment> segments = record.roles;
  int supertype_pos = -1;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].role == RoleLabel::SUPERTYPE) {
      if (supertype_pos != -1)
        throw std::runtime_error("definition of '" + record.term +
                                 "' has more than one supertype segment");
      supertype_pos = static_cast<int>(i);
    }
  }
  if (supertype_pos == -1) {
    // Post-processing repair: promote the first noun-bearing segment.
    for (size_t i = 0; i < segments.size(); ++i) {
      if (noun_bearing(segments[i].text)) {
        segments[i].role = RoleLabel::SUPERTYPE;
        supertype_pos = static_cast<int>(i);
        log_info("promoted segment '" + segments[i].text + "' to supertype for '" +
                 record.term + "'");
        break;
      }
    }
  }
  if (supertype_pos == -1) {
    log_warn("dropping definition of '" + record.term + "': no supertype and no " +
             "noun-bearing segment to promote");
    return;
  }

  // Sense counter keyed by the term keeps ids readable for homonyms.
  size_t sense = 1;
  for (const auto& e : entities_)
    if (e.id.rfind("e:" + to_lower(record.term) + ":", 0) == 0) ++sense;

  EntityNode entity;
  entity.id = "e:" + to_lower(record.term) + ":" + std::to_string(sense);
  entity.pos = record.pos;
  if (record.synset.empty()) {
    entity.labels.insert(to_lower(record.term));
  } else {
    for (const auto& s : record.synset) entity.labels.insert(to_lower(s));
    entity.labels.insert(to_lower(record.term));
  }

  Definition def;
  entities_.push_back(entity);
  def.entity_idx = entities_.size() - 1;

  size_t role_counter = 0;
  auto add_role = [&](const RoleSegment& seg) -> size_t {
    if (seg.text.empty())
      throw std::runtime_error("definition of '" + record.term + "' has an empty segment");
    RoleNode node;
    node.id = "r:" + entity.id.substr(2) + ":" + std::to_string(role_counter++);
    node.role = seg.role;
    node.text = seg.text;
    roles_.push_back(node);
    return roles_.size() - 1;
  };

  def.supertype_idx = add_role(segments[static_cast<size_t>(supertype_pos)]);
  for (size_t i = 0; i < segments.size(); ++i) {
    if (static_cast<int>(i) == supertype_pos) continue;
    def.other_role_idxs.push_back(add_role(segments[i]));
  }
  definitions_.push_back(def);
  index_definition(definitions_.size() - 1);
}

std::vector<const EntityNode*> DefinitionGraph::lookup_entities(const std::string& word) const {
  std::vector<const EntityNode*> out;
  auto it = lemma_index_.find(to_lower(word));
  if (it == lemma_index_.end()) return out;
  for (size_t def_idx : it->second) out.push_back(&entities_[definitions_[def_idx].entity_idx]);
  return out;
}

std::vector<const RoleNode*> DefinitionGraph::neighbors(const EntityNode& entity) const {
  auto it = definition_of_entity_.find(entity.id);
  if (it == definition_of_entity_.end())
    throw std::runtime_error("unknown entity: " + entity.id);
  const Definition& d = definitions_[it->second];
  std::vector<const RoleNode*> out;
  out.push_back(&roles_[d.supertype_idx]);
  for (size_t r : d.other_role_idxs) out.push_back(&roles_[r]);
  return out;
}

std::vector<const RoleNode*> DefinitionGraph::neighbors_for_word(const std::string& word) const {
  std::vector<const RoleNode*> out;
  for (const EntityNode* e : lookup_entities(word)) {
    auto more = neighbors(*e);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

const EntityNode* DefinitionGraph::entity_by_id(const std::string& id) const {
  auto it = entity_id_index_.find(id);
  return it == entity_id_index_.end() ? nullptr : &entities_[it->second];
}

const RoleNode* DefinitionGraph::role_by_id(const std::string& id) const {
  auto it = role_id_index_.find(id);
  return it == role_id_index_.end() ? nullptr : &roles_[it->second];
}

const RoleNode* DefinitionGraph::supertype_of(const std::string& entity_id) const {
  auto it = definition_of_entity_.find(entity_id);
  if (it == definition_of_entity_.end()) return nullptr;
  return &roles_[definitions_[it->second].supertype_idx];
}

const EntityNode* DefinitionGraph::entity_of_role(const std::string& role_id) const {
  auto it = definition_of_role_.find(role_id);
  if (it == definition_of_role_.end()) return nullptr;
  return &entities_[definitions_[it->second].entity_idx];
}

std::vector<std::string> DefinitionGraph::definition_documents() const {
  std::vector<std::string> docs;
  docs.reserve(definitions_.size());
  for (const auto& d : definitions_) {
    std::string doc = roles_[d.supertype_idx].text;
    for (size_t r : d.other_role_idxs) {
      doc += ' ';
      doc += roles_[r].text;
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

DefinitionGraph parse_labeled_definitions(const std::string& content,
                                          const std::string& origin) {
  DefinitionGraph graph;
  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(t);
    } catch (const std::exception& e) {
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": invalid JSON: " + e.what());
    }
    DefinitionRecord def;
    try {
      def.term = rec.at("term").get<std::string>();
      std::string pos = to_lower(rec.value("pos", "noun"));
      if (pos == "noun") def.pos = WordPos::NOUN;
      else if (pos == "verb") def.pos = WordPos::VERB;
      else throw std::runtime_error("pos must be noun or verb, got '" + pos + "'");
      if (rec.contains("synset"))
        for (const auto& s : rec.at("synset")) def.synset.push_back(s.get<std::string>());
      for (const auto& pair : rec.at("roles")) {
        if (!pair.is_array() || pair.size() != 2)
          throw std::runtime_error("each role must be a [label, text] pair");
        std::string label = pair[0].get<std::string>();
        auto role = role_label_from_name(label);
        if (!role) throw std::runtime_error("unknown role label '" + label + "'");
        def.roles.push_back({*role, pair[1].get<std::string>()});
      }
    } catch (const std::exception& e) {
      throw std::runtime_error(origin + " line " + std::to_string(line_no) + ": " + e.what());
    }
    graph.add_definition(def);
  }
  return graph;
}

DefinitionGraph ingest_labeled_definitions(const std::string& path) {
  return parse_labeled_definitions(read_file(path), path);
}

std::string DefinitionGraph::serialize() const {
  std::ostringstream out;
  for (const auto& d : definitions_) {
    const EntityNode& e = entities_[d.entity_idx];
    out << e.id << "\tpos\t" << (e.pos == WordPos::NOUN ? "noun" : "verb") << "\n";
    for (const auto& lemma : e.labels) out << e.id << "\tsynset\t" << lemma << "\n";
    const RoleNode& st = roles_[d.supertype_idx];
    out << e.id << "\t" << role_predicate(RoleLabel::SUPERTYPE) << "\t" << st.id << "\n";
    out << st.id << "\tlabel\t" << st.text << "\n";
    for (size_t r : d.other_role_idxs) {
      const RoleNode& role = roles_[r];
      out << st.id << "\t" << role_predicate(role.role) << "\t" << role.id << "\n";
      out << role.id << "\tlabel\t" << role.text << "\n";
    }
  }
  return out.str();
}

void save_graph(const DefinitionGraph& graph, const std::string& path) {
  write_file(path, graph.serialize());
}

DefinitionGraph parse_graph(const std::string& content, const std::string& origin) {
  DefinitionGraph graph;

  struct PendingDef {
    std::string entity_id;
    WordPos pos = WordPos::NOUN;
    std::vector<std::string> synset;
    std::string supertype_id;
    std::vector<std::pair<RoleLabel, std::string>> other_roles;  // label + role id
  };
  std::vector<PendingDef> defs;
  std::unordered_map<std::string, size_t> def_of_entity;
  std::unordered_map<std::string, size_t> def_of_supertype;
  std::unordered_map<std::string, std::string> labels;

  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos)
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": expected \"subject\\tpredicate\\tobject\"");
    std::string subj = line.substr(0, t1);
    std::string pred = line.substr(t1 + 1, t2 - t1 - 1);
    std::string obj = line.substr(t2 + 1);

    auto def_for_entity = [&](const std::string& id) -> PendingDef& {
      auto it = def_of_entity.find(id);
      if (it == def_of_entity.end()) {
        defs.push_back({});
        defs.back().entity_id = id;
        def_of_entity[id] = defs.size() - 1;
        return defs.back();
      }
      return defs[it->second];
    };

    if (pred == "pos") {
      if (obj != "noun" && obj != "verb")
        throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                                 ": pos must be noun or verb");
      def_for_entity(subj).pos = obj == "noun" ? WordPos::NOUN : WordPos::VERB;
    } else if (pred == "synset") {
      def_for_entity(subj).synset.push_back(obj);
    } else if (pred == "label") {
      labels[subj] = obj;
    } else if (pred == role_predicate(RoleLabel::SUPERTYPE)) {
      PendingDef& d = def_for_entity(subj);
      if (!d.supertype_id.empty())
        throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                                 ": entity " + subj + " has two supertype edges");
      d.supertype_id = obj;
      def_of_supertype[obj] = def_of_entity[subj];
    } else if (auto role = role_label_from_predicate(pred)) {
      auto it = def_of_supertype.find(subj);
      if (it == def_of_supertype.end())
        throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                                 ": role edge from unknown supertype node " + subj);
      defs[it->second].other_roles.push_back({*role, obj});
    } else {
      throw std::runtime_error(origin + " line " + std::to_string(line_no) +
                               ": unknown predicate '" + pred + "'");
    }
  }

  for (const auto& d : defs) {
    if (d.supertype_id.empty())
      throw std::runtime_error(origin + ": entity " + d.entity_id + " has no supertype edge");
    auto text_of = [&](const std::string& id) -> std::string {
      auto it = labels.find(id);
      if (it == labels.end())
        throw std::runtime_error(origin + ": node " + id + " has no label line");
      return it->second;
    };

    EntityNode entity;
    entity.id = d.entity_id;
    entity.pos = d.pos;
    for (const auto& s : d.synset) entity.labels.insert(to_lower(s));
    if (entity.labels.empty())
      throw std::runtime_error(origin + ": entity " + d.entity_id + " has no synset lines");

    DefinitionGraph::Definition def;
    graph.entities_.push_back(entity);
    def.entity_idx = graph.entities_.size() - 1;

    RoleNode st;
    st.id = d.supertype_id;
    st.role = RoleLabel::SUPERTYPE;
    st.text = text_of(d.supertype_id);
    graph.roles_.push_back(st);
    def.supertype_idx = graph.roles_.size() - 1;

    for (const auto& [role, id] : d.other_roles) {
      RoleNode node;
      node.id = id;
      node.role = role;
      node.text = text_of(id);
      graph.roles_.push_back(node);
      def.other_role_idxs.push_back(graph.roles_.size() - 1);
    }
    graph.definitions_.push_back(def);
    graph.index_definition(graph.definitions_.size() - 1);
  }
  return graph;
}

DefinitionGraph load_graph(const std::string& path) {
  return parse_graph(read_file(path), path);
}

}  // namespace xte
