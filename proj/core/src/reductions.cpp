#include "ctlenum/reductions.hpp"

#include <cstdio>
#include <set>

#include "json.hpp"

#include "ctlenum/error.hpp"

namespace ctlenum {
namespace {

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Provenance make_provenance(std::string construction, std::string source) {
  Provenance p{std::move(construction), std::move(source), {}};
  p.digest = fnv1a_hex(p.source);
  return p;
}

std::string hampath_source(const HampathInstance& h) {
  return digraph_to_json(h);
}

class ModelBuilder {
 public:
  void world(const std::string& id, std::set<std::string> labels = {}) {
    if (!ids_.insert(id).second) {
      throw PreconditionError("generated world id collides: " + id);
    }
    data_.worlds.push_back({id, std::move(labels)});
  }
  void edge(const std::string& s, const std::string& t) {
    if (edges_.insert({s, t}).second) data_.edges.emplace_back(s, t);
  }
  // Worlds left without a successor get a self-loop so the model is total.
  KripkeModel build(const std::string& root) {
    std::set<std::string> has_succ;
    for (const auto& e : data_.edges) has_succ.insert(e.first);
    for (const World& w : data_.worlds) {
      if (!has_succ.count(w.id)) data_.edges.emplace_back(w.id, w.id);
    }
    data_.root = root;
    return KripkeModel(std::move(data_));
  }

 private:
  ModelData data_;
  std::set<std::string> ids_;
  std::set<std::pair<std::string, std::string>> edges_;
};

std::string sat_world(std::size_t level, int k) {
  return "w" + std::to_string(level) + "^" + std::to_string(k);
}

}  // namespace

std::string Provenance::to_json() const {
  nlohmann::ordered_json j;
  j["construction"] = construction;
  j["source"] = source;
  j["digest"] = "fnv1a64:" + digest;
  return j.dump(2) + "\n";
}

ReductionInstance sat_to_ag(const PropFormula& f, SatEncoding encoding) {
  if (!is_propositional(f) || !is_nnf(f)) {
    throw NotNNF("formula is not propositional NNF: " + render_formula(f));
  }
  const std::vector<std::string> vars = prop_variables(f);
  if (vars.empty()) throw PreconditionError("formula has no variables");
  const std::size_t n = vars.size();
  const std::set<std::string> var_set(vars.begin(), vars.end());
  auto comp = [&](const std::string& x) {
    std::string c = "not" + x;
    if (var_set.count(c)) {
      throw PreconditionError("complement label collides with a variable: " + c);
    }
    return c;
  };

  ModelBuilder b;
  b.world("w0", encoding == SatEncoding::Relabel
                    ? [&] {
                        std::set<std::string> l;
                        for (const auto& x : vars) l.insert(comp(x));
                        return l;
                      }()
                    : std::set<std::string>{});
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string& x = vars[i - 1];
    for (int k = 0; k < 2; ++k) {
      std::set<std::string> labels{x, x + "^" + std::to_string(k)};
      if (encoding == SatEncoding::Relabel) {
        for (const auto& other : vars) {
          if (other != x) labels.insert(comp(other));
        }
      }
      b.world(sat_world(i, k), std::move(labels));
    }
  }
  for (int k = 0; k < 2; ++k) b.edge("w0", sat_world(1, k));
  for (std::size_t i = 1; i < n; ++i) {
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) b.edge(sat_world(i, k), sat_world(i + 1, l));
    }
  }
  for (int k = 0; k < 2; ++k) b.edge(sat_world(n, k), sat_world(n, k));

  std::map<Literal, Formula> images;
  for (const auto& x : vars) {
    const Formula guard = encoding == SatEncoding::Negation
                              ? Formula::negation(Formula::atom(x))
                              : Formula::atom(comp(x));
    images.emplace(Literal{x, false},
                   Formula::ag(Formula::disj(guard, Formula::atom(x + "^1"))));
    images.emplace(Literal{x, true},
                   Formula::ag(Formula::disj(guard, Formula::atom(x + "^0"))));
  }
  Formula phi = substitute_atoms(f, images);
  std::string source = render_formula(f);
  source += encoding == SatEncoding::Negation ? " [negation]" : " [relabel]";
  return {b.build("w0"), std::move(phi), make_provenance("sat-ag", source)};
}

Submodel assignment_to_submodel(const PropFormula& f,
                                const std::map<std::string, bool>& assignment,
                                const KripkeModel& sat_model) {
  const auto vars = prop_variables(f);
  std::vector<std::string> worlds{"w0"};
  for (std::size_t i = 1; i <= vars.size(); ++i) {
    auto it = assignment.find(vars[i - 1]);
    if (it == assignment.end()) {
      throw PartialAssignment("no value for " + vars[i - 1]);
    }
    worlds.push_back(sat_world(i, it->second ? 1 : 0));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < worlds.size(); ++i) {
    edges.emplace_back(worlds[i], worlds[i + 1]);
  }
  edges.emplace_back(worlds.back(), worlds.back());
  return submodel_from_ids(sat_model, worlds, edges);
}

namespace {

KripkeModel hampath_model(const HampathInstance& h) {
  validate_hampath(h);
  ModelBuilder b;
  for (const auto& v : h.vertices) b.world("w_" + v, {"x_" + v});
  b.world("w_hat");
  for (const auto& [u, v] : h.edges) {
    if (u != h.target) b.edge("w_" + u, "w_" + v);
  }
  b.edge("w_" + h.target, "w_hat");
  b.edge("w_hat", "w_hat");
  return b.build("w_" + h.source);
}

}  // namespace

ReductionInstance hampath_to_af(const HampathInstance& h) {
  KripkeModel m = hampath_model(h);
  std::optional<Formula> phi;
  for (const auto& v : h.vertices) {
    Formula c = Formula::af(Formula::atom("x_" + v));
    phi = phi ? Formula::conj(*phi, c) : c;
  }
  return {std::move(m), *phi, make_provenance("hampath-af", hampath_source(h))};
}

ReductionInstance hampath_to_ax(const HampathInstance& h) {
  KripkeModel m = hampath_model(h);
  Formula phi = Formula::atom("x_" + h.target);
  for (std::size_t i = 1; i < h.vertices.size(); ++i) phi = Formula::ax(phi);
  return {std::move(m), phi, make_provenance("hampath-ax", hampath_source(h))};
}

namespace {

// Diamond expansion shared by the AU and AR constructions. With `guarded`
// the hat worlds that would otherwise loop on themselves (the target's and
// dead ends) lead to an unlabeled sink instead, and the target's hat world
// also carries x_t.
KripkeModel diamond_model(const HampathInstance& h, bool with_tilde,
                          bool guarded = false) {
  validate_hampath(h);
  const std::size_t n = h.vertices.size();
  std::set<std::string> all_x;
  for (std::size_t i = 1; i <= n; ++i) all_x.insert("x" + std::to_string(i));
  auto idx = [](const std::string& v, std::size_t i) {
    return "w_" + v + "_" + std::to_string(i);
  };
  ModelBuilder b;
  for (const auto& v : h.vertices) {
    std::set<std::string> lw, lt, lh;
    if (with_tilde) {
      lw = all_x;
      lw.insert("z");
      lt = all_x;
      lt.insert("y");
      lh = {"y", "z"};
      if (guarded && v == h.target) lh.insert("x_t");
    } else if (v == h.target) {
      lh = {"x_t"};
    }
    b.world("w_" + v, lw);
    for (std::size_t i = 1; i <= n; ++i) {
      b.world(idx(v, i), {"x" + std::to_string(i)});
    }
    if (with_tilde) b.world("w_tilde_" + v, lt);
    b.world("w_hat_" + v, lh);
  }
  for (const auto& v : h.vertices) {
    const std::string before_hat = with_tilde ? "w_tilde_" + v : "";
    for (std::size_t i = 1; i <= n; ++i) {
      b.edge("w_" + v, idx(v, i));
      b.edge(idx(v, i), with_tilde ? before_hat : "w_hat_" + v);
    }
    if (with_tilde) b.edge(before_hat, "w_hat_" + v);
  }
  std::set<std::string> live;
  for (const auto& [u, v] : h.edges) {
    if (u != h.target) {
      b.edge("w_hat_" + u, "w_" + v);
      live.insert(u);
    }
  }
  if (!guarded) {
    b.edge("w_hat_" + h.target, "w_hat_" + h.target);
    return b.build("w_" + h.source);
  }
  b.world("w_sink");
  for (const auto& v : h.vertices) {
    if (!live.count(v)) b.edge("w_hat_" + v, "w_sink");
  }
  return b.build("w_" + h.source);
}

}  // namespace

ReductionInstance hampath_to_au(const HampathInstance& h) {
  KripkeModel m = diamond_model(h, false);
  Formula phi = Formula::au(Formula::top(), Formula::atom("x_t"));
  for (std::size_t i = 1; i <= h.vertices.size(); ++i) {
    phi = Formula::au(phi, Formula::atom("x" + std::to_string(i)));
  }
  return {std::move(m), phi, make_provenance("hampath-au", hampath_source(h))};
}

ReductionInstance hampath_to_ar(const HampathInstance& h) {
  KripkeModel m = diamond_model(h, true);
  const Formula z = Formula::atom("z"), y = Formula::atom("y");
  Formula phi = Formula::top();
  for (std::size_t i = 1; i <= h.vertices.size(); ++i) {
    phi = Formula::ar(Formula::ar(Formula::ar(phi, z), y),
                      Formula::atom("x" + std::to_string(i)));
  }
  return {std::move(m), phi, make_provenance("hampath-ar", hampath_source(h))};
}

ReductionInstance hampath_to_ar_guarded(const HampathInstance& h) {
  KripkeModel m = diamond_model(h, true, true);
  const Formula z = Formula::atom("z"), y = Formula::atom("y");
  Formula phi = Formula::atom("x_t");
  for (std::size_t i = 1; i <= h.vertices.size(); ++i) {
    phi = Formula::ar(Formula::ar(Formula::ar(phi, z), y),
                      Formula::atom("x" + std::to_string(i)));
  }
  return {std::move(m), phi,
          make_provenance("hampath-ar-guarded", hampath_source(h))};
}

}  // namespace ctlenum
