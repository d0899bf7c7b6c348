#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "message_plan.hpp"

namespace fssp::io {

using json = nlohmann::ordered_json;

// ---- configurations ----
// JSON: {"size":w,"holes":[[x,y],...]} with holes in ascending (x,y) order.
// ASCII: "w=<w>", then rows y=w..0, '.' node, '#' hole.

inline json to_json(Position p) { return json::array({p.x, p.y}); }

inline Position position_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorCode::InvalidInput, "position must be [x, y]: " + j.dump());
  return {j[0].get<int>(), j[1].get<int>()};
}

inline json config_json(const Configuration& c) {
  json j;
  j["size"] = c.size();
  j["holes"] = json::array();
  for (auto h : c.holes()) j["holes"].push_back(to_json(h));
  return j;
}

inline std::string write_json(const Configuration& c) { return config_json(c).dump() + "\n"; }

inline std::string write_ascii(const Configuration& c) {
  std::string out = "w=" + std::to_string(c.size()) + "\n";
  for (int y = c.size(); y >= 0; --y) {
    for (int x = 0; x <= c.size(); ++x) out += c.is_hole({x, y}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

// Raw document contents before validation.
struct RawConfig {
  int w = 0;
  std::vector<Position> holes;
};

inline RawConfig parse_json_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer() || !j.contains("holes") ||
      !j["holes"].is_array())
    throw Error(ErrorCode::InvalidInput, "configuration needs integer \"size\" and array \"holes\"");
  RawConfig r;
  r.w = j["size"].get<int>();
  for (const auto& h : j["holes"]) r.holes.push_back(position_from(h));
  return r;
}

inline RawConfig parse_ascii_config(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("w=", 0) != 0)
    throw Error(ErrorCode::InvalidInput, "ASCII configuration must start with w=<size>");
  RawConfig r;
  try {
    r.w = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "bad size line: " + line);
  }
  if (r.w < 1 || r.w > 4096) throw Error(ErrorCode::InvalidInput, "size out of range");
  for (int y = r.w; y >= 0; --y) {
    if (!std::getline(in, line) || static_cast<int>(line.size()) != r.w + 1)
      throw Error(ErrorCode::InvalidInput, "row for y=" + std::to_string(y) + " must have w+1 characters");
    for (int x = 0; x <= r.w; ++x) {
      if (line[x] == '#') r.holes.push_back({x, y});
      else if (line[x] != '.') throw Error(ErrorCode::InvalidInput, std::string("unexpected character ") + line[x]);
    }
  }
  return r;
}

inline RawConfig parse_config(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_config(text);
  return parse_ascii_config(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Parses and validates; rejections surface as InvalidInput with the reason.
inline Configuration load_config(const std::string& path) {
  const auto raw = parse_config(read_file(path));
  auto v = validate(raw.w, raw.holes);
  if (!v) throw Error(ErrorCode::InvalidInput, v.rejection->message);
  return *v.config;
}

// ---- patterns and plans ----

inline json pattern_json(const Pattern& p) {
  json j;
  j["nodes"] = json::array();
  j["holes"] = json::array();
  for (const auto& [q, l] : p.assignments) j[l == Label::Hole ? "holes" : "nodes"].push_back(to_json(q));
  return j;
}

inline Pattern pattern_from(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "pattern must be an object");
  Pattern p;
  for (const char* key : {"nodes", "holes"}) {
    if (!j.contains(key)) continue;
    for (const auto& q : j[key])
      p.assignments[position_from(q)] = std::string(key) == "holes" ? Label::Hole : Label::Node;
  }
  return p;
}

inline json plan_json(const MessagePlan& plan) {
  json j;
  j["target_size"] = plan.target_size;
  j["slack"] = plan.slack;
  j["checked_region"] = json::array();
  for (auto q : plan.checked_region) j["checked_region"].push_back(to_json(q));
  j["groups"] = json::array();
  for (const auto& g : plan.groups) {
    json jg = json::array();
    for (const auto& m : g) {
      json jm;
      jm["site"] = to_json(m.site);
      jm["offset"] = m.offset;
      if (m.pattern) jm["pattern"] = pattern_json(*m.pattern);
      jg.push_back(jm);
    }
    j["groups"].push_back(jg);
  }
  j["pattern"] = pattern_json(plan.pattern);
  return j;
}

inline MessagePlan plan_from(const json& j) {
  MessagePlan plan;
  try {
    plan.target_size = j.at("target_size").get<int>();
    plan.slack = j.value("slack", 0);
    if (j.contains("checked_region"))
      for (const auto& q : j["checked_region"]) plan.checked_region.push_back(position_from(q));
    for (const auto& jg : j.at("groups")) {
      std::vector<MessageSite> g;
      for (const auto& jm : jg) {
        MessageSite m{position_from(jm.at("site")), jm.value("offset", 0), std::nullopt};
        if (jm.contains("pattern")) m.pattern = pattern_from(jm["pattern"]);
        g.push_back(std::move(m));
      }
      plan.groups.push_back(std::move(g));
    }
    if (j.contains("pattern")) plan.pattern = pattern_from(j["pattern"]);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad plan: ") + e.what());
  }
  if (plan.slack < 0) throw Error(ErrorCode::InvalidInput, "slack must be >= 0");
  for (const auto& g : plan.groups)
    for (const auto& m : g)
      if (m.offset < 0) throw Error(ErrorCode::InvalidInput, "offsets must be >= 0");
  return plan;
}

inline MessagePlan load_plan(const std::string& path) {
  try {
    return plan_from(json::parse(read_file(path)));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("bad JSON: ") + e.what());
  }
}

inline json transcript_json(const FiringTranscript& t) {
  json j;
  j["horizon"] = t.horizon;
  if (auto s = t.simultaneous()) j["simultaneous"] = *s;
  else j["simultaneous"] = nullptr;
  j["never_fired"] = json::array();
  for (const auto& [p, ft] : t.fire_time)
    if (!ft) j["never_fired"].push_back(to_json(p));
  return j;
}

}  // namespace fssp::io
