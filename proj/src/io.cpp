#include "galloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace galloc {

namespace {

using LabelGroups = std::vector<std::vector<std::string>>;

// Shared by the JSON and text parsers: maps label groups to index classes
// with label-level diagnostics.
Profile build_profile(std::vector<std::string> labels, const LabelGroups groups[2]) {
  if (labels.empty()) {
    throw ParseError("instance: object list is empty");
  }
  std::unordered_map<std::string, Obj> index_of;
  for (Obj o = 0; o < labels.size(); ++o) {
    if (labels[o].empty()) {
      throw ParseError("instance: object " + std::to_string(o + 1) + " has an empty label");
    }
    if (!index_of.emplace(labels[o], o).second) {
      throw ParseError("instance: duplicate object label '" + labels[o] + "'");
    }
  }

  std::vector<std::vector<Obj>> classes[2];
  for (int agent = 0; agent < 2; ++agent) {
    const std::string who = "agent " + std::to_string(agent + 1);
    std::unordered_set<std::string> seen;
    for (std::size_t g = 0; g < groups[agent].size(); ++g) {
      if (groups[agent][g].empty()) {
        throw ParseError(who + ": preference class " + std::to_string(g + 1) + " is empty");
      }
      std::vector<Obj> cls;
      for (const std::string& label : groups[agent][g]) {
        auto it = index_of.find(label);
        if (it == index_of.end()) {
          throw ParseError(who + ": unknown object '" + label + "'");
        }
        if (!seen.insert(label).second) {
          throw ParseError(who + ": object '" + label + "' appears in more than one class");
        }
        cls.push_back(it->second);
      }
      classes[agent].push_back(std::move(cls));
    }
    for (const std::string& label : labels) {
      if (!seen.count(label)) {
        throw ParseError(who + ": object '" + label + "' appears in no class");
      }
    }
  }
  return make_profile(std::move(labels), std::move(classes[0]), std::move(classes[1]));
}

Profile parse_profile_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("objects") || !doc.contains("agents")) {
    throw ParseError("instance: expected a JSON object with 'objects' and 'agents'");
  }
  if (!doc["objects"].is_array()) {
    throw ParseError("instance: 'objects' must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& item : doc["objects"]) {
    if (!item.is_string()) throw ParseError("instance: 'objects' entries must be strings");
    labels.push_back(item.get<std::string>());
  }
  if (!doc["agents"].is_array() || doc["agents"].size() != 2) {
    throw ParseError("instance: 'agents' must be an array of exactly two agents");
  }
  LabelGroups groups[2];
  for (int agent = 0; agent < 2; ++agent) {
    const auto& entry = doc["agents"][agent];
    if (!entry.is_array()) {
      throw ParseError("agent " + std::to_string(agent + 1) +
                       ": preferences must be an array of classes");
    }
    for (const auto& cls : entry) {
      if (!cls.is_array()) {
        throw ParseError("agent " + std::to_string(agent + 1) +
                         ": each preference class must be an array of labels");
      }
      std::vector<std::string> group;
      for (const auto& item : cls) {
        if (!item.is_string()) {
          throw ParseError("agent " + std::to_string(agent + 1) + ": labels must be strings");
        }
        group.push_back(item.get<std::string>());
      }
      groups[agent].push_back(std::move(group));
    }
  }
  return build_profile(std::move(labels), groups);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// One-line-per-agent text form:
//   objects: o1 o2 o3        (optional; fixes the canonical indexing)
//   agent1: [o7] [o1 o2 o3]
//   agent2: [o7] [o1] [o3]
// '#' starts a comment.
Profile parse_profile_text(const std::string& text) {
  std::vector<std::string> labels;
  bool have_objects_line = false;
  LabelGroups groups[2];
  bool have_agent[2] = {false, false};

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) {
      raw.pop_back();
    }
    std::string line = raw;
    line.erase(0, line.find_first_not_of(" \t"));
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError(where + "expected 'objects:', 'agent1:' or 'agent2:'");
    }
    const std::string key = line.substr(0, colon);
    const std::string rest = line.substr(colon + 1);

    if (key == "objects") {
      if (have_objects_line) throw ParseError(where + "duplicate 'objects:' line");
      if (!groups[0].empty() || !groups[1].empty()) {
        throw ParseError(where + "'objects:' must precede the agent lines");
      }
      labels = split_ws(rest);
      have_objects_line = true;
      continue;
    }
    int agent;
    if (key == "agent1") {
      agent = 0;
    } else if (key == "agent2") {
      agent = 1;
    } else {
      throw ParseError(where + "unknown line '" + key + ":'");
    }
    if (have_agent[agent]) throw ParseError(where + "duplicate '" + key + ":' line");
    have_agent[agent] = true;

    std::vector<std::string> current;
    bool in_group = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const char c = rest[i];
      if (c == '[') {
        if (in_group) throw ParseError(where + "nested '['");
        in_group = true;
        current.clear();
      } else if (c == ']') {
        if (!in_group) throw ParseError(where + "']' without matching '['");
        in_group = false;
        if (current.empty()) throw ParseError(where + "empty preference class '[]'");
        groups[agent].push_back(current);
      } else if (c == ' ' || c == '\t') {
        continue;
      } else {
        if (!in_group) throw ParseError(where + "labels must appear inside [...] groups");
        std::size_t j = i;
        while (j < rest.size() && rest[j] != ' ' && rest[j] != '\t' && rest[j] != ']' &&
               rest[j] != '[') {
          ++j;
        }
        current.push_back(rest.substr(i, j - i));
        i = j - 1;
      }
    }
    if (in_group) throw ParseError(where + "unterminated '['");

    // Without an objects: line, canonical order is order of appearance.
    if (!have_objects_line) {
      for (const auto& group : groups[agent]) {
        for (const std::string& label : group) {
          if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
            labels.push_back(label);
          }
        }
      }
    }
  }
  if (!have_agent[0] || !have_agent[1]) {
    throw ParseError("instance: need both 'agent1:' and 'agent2:' lines");
  }
  return build_profile(std::move(labels), groups);
}

nlohmann::ordered_json labels_json(const Profile& profile, std::span<const Obj> objs) {
  auto arr = nlohmann::ordered_json::array();
  for (Obj o : objs) arr.push_back(profile.label(o));
  return arr;
}

// Leading space so "key:" lines have no trailing blank when empty.
std::string join_labels(const Profile& profile, std::span<const Obj> objs) {
  std::string out;
  for (Obj o : objs) {
    out += ' ';
    out += profile.label(o);
  }
  return out;
}

nlohmann::ordered_json action_json(const Profile& profile, const RoundAction& action) {
  nlohmann::ordered_json j;
  if (const auto* both = std::get_if<BothPick>(&action)) {
    j["kind"] = "both_pick";
    j["agent1"] = profile.label(both->to_agent1);
    j["agent2"] = profile.label(both->to_agent2);
  } else if (const auto* res = std::get_if<ContestedResolved>(&action)) {
    j["kind"] = "contested_resolved";
    j["object"] = profile.label(res->contested);
    j["receiver"] = res->receiver;
    j["other"] = profile.label(res->other_object);
  } else if (const auto* pile = std::get_if<ContestedToC>(&action)) {
    j["kind"] = "contested_to_pile";
    j["object"] = profile.label(pile->contested);
  } else {
    j["kind"] = "last_to_pile";
    j["object"] = profile.label(std::get<LastToC>(action).object);
  }
  return j;
}

std::string action_text(const Profile& profile, const RoundAction& action) {
  if (const auto* both = std::get_if<BothPick>(&action)) {
    return "agent 1 <- " + profile.label(both->to_agent1) + ", agent 2 <- " +
           profile.label(both->to_agent2);
  }
  if (const auto* res = std::get_if<ContestedResolved>(&action)) {
    const int other = 3 - res->receiver;
    return "contested " + profile.label(res->contested) + " -> agent " +
           std::to_string(res->receiver) + ", " + profile.label(res->other_object) +
           " -> agent " + std::to_string(other);
  }
  if (const auto* pile = std::get_if<ContestedToC>(&action)) {
    return "contested " + profile.label(pile->contested) + " -> pile";
  }
  return "last object " + profile.label(std::get<LastToC>(action).object) + " -> pile";
}

}  // namespace

Profile parse_profile(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError("instance: file is empty");
  }
  return text[first] == '{' ? parse_profile_json(text) : parse_profile_text(text);
}

std::string serialize_profile(const Profile& profile) {
  nlohmann::ordered_json doc;
  doc["objects"] = nlohmann::ordered_json::array();
  for (const std::string& label : profile.labels) doc["objects"].push_back(label);
  doc["agents"] = nlohmann::ordered_json::array();
  for (int agent : {1, 2}) {
    auto classes = nlohmann::ordered_json::array();
    for (const auto& cls : profile.pref(agent).classes()) {
      classes.push_back(labels_json(profile, cls));
    }
    doc["agents"].push_back(classes);
  }
  return doc.dump(2) + "\n";
}

Profile load_profile_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_profile(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Assignment parse_assignment(const std::string& text, const Profile& profile) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("assignment: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p1") || !doc.contains("p2")) {
    throw ParseError("assignment: expected a JSON object with 'p1' and 'p2'");
  }
  auto read_side = [&](const char* key) {
    Allocation alloc;
    if (!doc[key].is_array()) {
      throw ParseError(std::string("assignment: '") + key + "' must be an array of labels");
    }
    for (const auto& item : doc[key]) {
      if (!item.is_string()) {
        throw ParseError(std::string("assignment: '") + key + "' entries must be strings");
      }
      alloc.push_back(profile.object_by_label(item.get<std::string>()));
    }
    return alloc;
  };
  try {
    return make_assignment(profile, read_side("p1"), read_side("p2"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Assignment load_assignment_file(const std::string& path, const Profile& profile) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_assignment(buffer.str(), profile);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string result_to_json(const Profile& profile, const GalResult& result, bool include_trace) {
  nlohmann::ordered_json doc;
  doc["p1"] = labels_json(profile, result.assignment.p1);
  doc["p2"] = labels_json(profile, result.assignment.p2);
  doc["contested"] = labels_json(profile, result.contested);
  doc["complete"] = result.complete();
  doc["favor"] = result.favor;
  doc["checks"] = {{"ef", is_ef(profile, result.assignment)},
                   {"lpo", is_lpo(profile, result.assignment)}};
  if (include_trace) {
    auto trace = nlohmann::ordered_json::array();
    for (const RoundRecord& record : result.trace) {
      nlohmann::ordered_json r;
      r["round"] = record.round;
      r["action"] = action_json(profile, record.action);
      r["p1"] = labels_json(profile, record.state_after.p1);
      r["p2"] = labels_json(profile, record.state_after.p2);
      r["contested"] = labels_json(profile, record.contested_after);
      trace.push_back(std::move(r));
    }
    doc["trace"] = std::move(trace);
  }
  return doc.dump(2) + "\n";
}

std::string result_to_text(const Profile& profile, const GalResult& result, bool include_trace) {
  std::string out;
  if (include_trace) {
    for (const RoundRecord& record : result.trace) {
      out += "round " + std::to_string(record.round) + ": " +
             action_text(profile, record.action) + " | p1:" +
             join_labels(profile, record.state_after.p1) + " | p2:" +
             join_labels(profile, record.state_after.p2) + " | pile:" +
             join_labels(profile, record.contested_after) + "\n";
    }
  }
  out += "p1:" + join_labels(profile, result.assignment.p1) + "\n";
  out += "p2:" + join_labels(profile, result.assignment.p2) + "\n";
  out += "contested:" + join_labels(profile, result.contested) + "\n";
  out += std::string("complete: ") + (result.complete() ? "true" : "false") + "\n";
  return out;
}

std::string assignment_to_json(const Profile& profile, const Assignment& a) {
  nlohmann::ordered_json doc;
  doc["p1"] = labels_json(profile, a.p1);
  doc["p2"] = labels_json(profile, a.p2);
  doc["unallocated"] = labels_json(profile, a.unallocated);
  return doc.dump(2) + "\n";
}

}  // namespace galloc
