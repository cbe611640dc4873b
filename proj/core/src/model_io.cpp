#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ctlenum/error.hpp"
#include "ctlenum/kripke.hpp"

namespace ctlenum {
namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ModelError(std::string("model file: missing key \"") + key + "\"");
  }
  return *it;
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ModelError("model file: " + what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

KripkeModel parse_model_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model file: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model file: top level must be an object");

  ModelData data;
  const json& worlds = member(doc, "worlds");
  if (!worlds.is_array()) throw ModelError("model file: \"worlds\" must be an array");
  for (const json& w : worlds) {
    if (!w.is_object()) throw ModelError("model file: world entries must be objects");
    World world;
    world.id = as_string(member(w, "id"), "world id");
    if (auto it = w.find("labels"); it != w.end()) {
      if (!it->is_array()) {
        throw ModelError("model file: labels of " + world.id + " must be an array");
      }
      for (const json& l : *it) world.labels.insert(as_string(l, "label"));
    }
    data.worlds.push_back(std::move(world));
  }
  const json& edges = member(doc, "edges");
  if (!edges.is_array()) throw ModelError("model file: \"edges\" must be an array");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) {
      throw ModelError("model file: edges must be [source, target] pairs");
    }
    data.edges.emplace_back(as_string(e[0], "edge endpoint"),
                            as_string(e[1], "edge endpoint"));
  }
  data.root = as_string(member(doc, "root"), "root");
  return KripkeModel(std::move(data));
}

KripkeModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

std::string model_to_json(const KripkeModel& model) {
  nlohmann::ordered_json j;
  j["worlds"] = nlohmann::ordered_json::array();
  for (const World& w : model.worlds()) {
    j["worlds"].push_back({{"id", w.id}, {"labels", w.labels}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : model.edges()) {
    j["edges"].push_back({model.id(e.source), model.id(e.target)});
  }
  j["root"] = model.id(model.root());
  return j.dump(2) + "\n";
}

}  // namespace ctlenum
