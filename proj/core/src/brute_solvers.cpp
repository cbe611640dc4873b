#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ctlenum/error.hpp"
#include "ctlenum/reductions.hpp"

namespace ctlenum {
namespace {

// Compares digit runs numerically, so x2 < x10.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      da.erase(0, std::min(da.find_first_not_of('0'), da.size()));
      db.erase(0, std::min(db.find_first_not_of('0'), db.size()));
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = i2;
      j = j2;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

}  // namespace

PropFormula parse_prop_formula(std::string_view text) {
  Formula f = parse_formula(text);
  if (!is_propositional(f)) {
    throw PreconditionError("temporal operator in a propositional formula: " +
                            render_formula(f));
  }
  return f;
}

std::vector<std::string> prop_variables(const PropFormula& f) {
  auto atoms = atoms_of(f);
  std::vector<std::string> vars(atoms.begin(), atoms.end());
  std::sort(vars.begin(), vars.end(), natural_less);
  return vars;
}

bool evaluate_prop(const PropFormula& f, const std::map<std::string, bool>& a) {
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: {
      auto it = a.find(f.name());
      if (it == a.end()) throw PartialAssignment("no value for " + f.name());
      return it->second;
    }
    case Op::Not: return !evaluate_prop(f.child(0), a);
    case Op::And: return evaluate_prop(f.lhs(), a) && evaluate_prop(f.rhs(), a);
    case Op::Or: return evaluate_prop(f.lhs(), a) || evaluate_prop(f.rhs(), a);
    default:
      throw PreconditionError("temporal operator in a propositional formula");
  }
}

std::optional<std::map<std::string, bool>> brute_sat(const PropFormula& f,
                                                     std::size_t cap) {
  const auto vars = prop_variables(f);
  if (vars.size() > cap) {
    throw CapExceeded(std::to_string(vars.size()) +
                      " variables exceed the brute-force cap of " +
                      std::to_string(cap));
  }
  std::map<std::string, bool> a;
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    // Highest bit for the first variable, so all-true comes last.
    for (std::size_t i = 0; i < vars.size(); ++i) {
      a[vars[i]] = (bits >> (vars.size() - 1 - i)) & 1u;
    }
    if (evaluate_prop(f, a)) return a;
  }
  return std::nullopt;
}

void validate_hampath(const HampathInstance& h) {
  std::set<std::string> vs;
  for (const auto& v : h.vertices) {
    if (v.empty()) throw ModelError("digraph: empty vertex id");
    if (!vs.insert(v).second) throw ModelError("digraph: duplicate vertex " + v);
  }
  if (!vs.count(h.source)) throw ModelError("digraph: source is not a vertex");
  if (!vs.count(h.target)) throw ModelError("digraph: target is not a vertex");
  if (h.source == h.target) throw ModelError("digraph: source equals target");
  std::set<std::pair<std::string, std::string>> es;
  for (const auto& e : h.edges) {
    if (!vs.count(e.first) || !vs.count(e.second)) {
      throw ModelError("digraph: edge with unknown endpoint (" + e.first + ", " +
                       e.second + ")");
    }
    if (!es.insert(e).second) {
      throw ModelError("digraph: duplicate edge (" + e.first + ", " + e.second + ")");
    }
  }
}

std::optional<std::vector<std::string>> brute_hampath(const HampathInstance& h,
                                                      std::size_t cap) {
  validate_hampath(h);
  const std::size_t n = h.vertices.size();
  if (n > cap) {
    throw CapExceeded(std::to_string(n) + " vertices exceed the brute-force cap of " +
                      std::to_string(cap));
  }
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[h.vertices[i]] = i;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : h.edges) adj[idx[u]][idx[v]] = true;

  std::vector<std::size_t> path{idx[h.source]};
  std::vector<bool> used(n, false);
  used[path[0]] = true;
  const std::size_t t = idx[h.target];
  std::function<bool()> dfs = [&]() {
    const std::size_t cur = path.back();
    if (path.size() == n) return cur == t;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || !adj[cur][v]) continue;
      if (v == t && path.size() + 1 != n) continue;
      used[v] = true;
      path.push_back(v);
      if (dfs()) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  std::vector<std::string> out;
  for (std::size_t v : path) out.push_back(h.vertices[v]);
  return out;
}

HampathInstance parse_digraph_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("digraph file: ") + e.what());
  }
  HampathInstance h;
  try {
    h.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ModelError("digraph file: edges must be [source, target] pairs");
      }
      h.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    h.source = j.at("source").get<std::string>();
    h.target = j.at("target").get<std::string>();
  } catch (const json::exception& e) {
    throw ModelError(std::string("digraph file: ") + e.what());
  }
  validate_hampath(h);
  return h;
}

HampathInstance read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open digraph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_digraph_json(buf.str());
}

std::string digraph_to_json(const HampathInstance& h) {
  nlohmann::ordered_json j;
  j["vertices"] = h.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : h.edges) j["edges"].push_back({u, v});
  j["source"] = h.source;
  j["target"] = h.target;
  return j.dump();
}

}  // namespace ctlenum
