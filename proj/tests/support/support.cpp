#include "support.hpp"

#include <map>

namespace ctlenum::testing {

std::string data_path(const std::string& name) {
  return std::string(CTLENUM_DATA_DIR) + "/" + name;
}

KripkeModel load_fixture(const std::string& name) {
  return read_model_file(data_path(name));
}

Formula FormulaGen::leaf() {
  if (std::bernoulli_distribution(0.1)(rng_)) {
    return std::bernoulli_distribution(0.5)(rng_) ? Formula::top() : Formula::bottom();
  }
  std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
  return Formula::atom(atoms_[pick(rng_)]);
}

Formula FormulaGen::general(std::size_t depth) {
  if (depth == 0 || std::bernoulli_distribution(0.2)(rng_)) return leaf();
  static constexpr Op ops[] = {Op::Not, Op::And, Op::Or, Op::EX, Op::AX,
                               Op::EF,  Op::AF,  Op::EG, Op::AG, Op::EU,
                               Op::AU,  Op::ER,  Op::AR};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(ops) - 1);
  const Op op = ops[pick(rng_)];
  if (op_arity(op) == 1) return Formula::unary(op, general(depth - 1));
  Formula a = general(depth - 1);
  return Formula::binary(op, a, general(depth - 1));
}

Formula FormulaGen::monotone(std::size_t depth) {
  if (depth == 0 || std::bernoulli_distribution(0.2)(rng_)) {
    std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
    return Formula::atom(atoms_[pick(rng_)]);
  }
  static constexpr Op ops[] = {Op::And, Op::Or, Op::EX, Op::EF,
                               Op::EG,  Op::EU, Op::ER};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(ops) - 1);
  const Op op = ops[pick(rng_)];
  if (op_arity(op) == 1) return Formula::unary(op, monotone(depth - 1));
  Formula a = monotone(depth - 1);
  return Formula::binary(op, a, monotone(depth - 1));
}

Formula FormulaGen::operator()(Family family, std::size_t depth) {
  switch (family) {
    case Family::General:
      return general(depth);
    case Family::Monotone:
      return monotone(depth);
    case Family::AfagChain: {
      std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(depth, 1));
      std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
      Formula f = Formula::atom(atoms_[pick(rng_)]);
      for (std::size_t n = len(rng_); n > 0; --n) {
        f = std::bernoulli_distribution(0.5)(rng_) ? Formula::af(f) : Formula::ag(f);
      }
      return f;
    }
  }
  return Formula::top();
}

std::vector<Formula> all_afag_chains(const std::string& atom, std::size_t max_ops) {
  std::vector<Formula> out;
  std::vector<Formula> layer{Formula::atom(atom)};
  for (std::size_t k = 1; k <= max_ops; ++k) {
    std::vector<Formula> next;
    for (const Formula& f : layer) {
      next.push_back(Formula::af(f));
      next.push_back(Formula::ag(f));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

using Set = std::set<std::string>;

struct Graph {
  Set worlds;
  std::map<std::string, Set> succ;
  std::map<std::string, Set> labels;
};

Set pre_exists(const Graph& g, const Set& z) {
  Set out;
  for (const auto& w : g.worlds) {
    for (const auto& v : g.succ.at(w)) {
      if (z.count(v)) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

Set pre_forall(const Graph& g, const Set& z) {
  Set out;
  for (const auto& w : g.worlds) {
    bool all = true;
    for (const auto& v : g.succ.at(w)) all = all && z.count(v);
    if (all) out.insert(w);
  }
  return out;
}

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Set meet(const Set& a, const Set& b) {
  Set out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

// Path unrolling: a path of |W| + 1 worlds repeats a world, so any
// property that survives |W| steps along a path survives forever on the
// lasso it contains. `base` must hold at every step; the path stops with
// success at a `stop` world, and `reach_stop` says whether stopping is the
// only way to succeed (until) or merely an early exit (release/globally).
bool unroll(const Graph& g, const std::string& w, std::size_t steps,
            bool universal, bool reach_stop, const Set& base, const Set& stop) {
  if (reach_stop) {
    // until: stop (= psi) ends the path, base (= phi) must hold up to it
    if (stop.count(w)) return true;
    if (!base.count(w) || steps == 0) return false;
  } else {
    // release: base (= psi) everywhere, stop (= phi) discharges
    if (!base.count(w)) return false;
    if (stop.count(w) || steps == 0) return true;
  }
  for (const auto& v : g.succ.at(w)) {
    const bool r = unroll(g, v, steps - 1, universal, reach_stop, base, stop);
    if (universal && !r) return false;
    if (!universal && r) return true;
  }
  return universal;
}

Set temporal(const Graph& g, bool universal, bool until, const Set& phi,
             const Set& psi) {
  Set out;
  for (const auto& w : g.worlds) {
    const bool ok = until ? unroll(g, w, g.worlds.size(), universal, true, phi, psi)
                          : unroll(g, w, g.worlds.size(), universal, false, psi, phi);
    if (ok) out.insert(w);
  }
  return out;
}

Set eval(const Graph& g, const Formula& f) {
  const Set none;
  switch (f.op()) {
    case Op::True:
      return g.worlds;
    case Op::False:
      return none;
    case Op::Atom: {
      Set out;
      for (const auto& w : g.worlds) {
        if (g.labels.at(w).count(f.name())) out.insert(w);
      }
      return out;
    }
    case Op::Not: {
      const Set a = eval(g, f.child(0));
      Set out;
      for (const auto& w : g.worlds) {
        if (!a.count(w)) out.insert(w);
      }
      return out;
    }
    case Op::And:
      return meet(eval(g, f.lhs()), eval(g, f.rhs()));
    case Op::Or:
      return unite(eval(g, f.lhs()), eval(g, f.rhs()));
    case Op::EX:
      return pre_exists(g, eval(g, f.child(0)));
    case Op::AX:
      return pre_forall(g, eval(g, f.child(0)));
    case Op::EF:
      return temporal(g, false, true, g.worlds, eval(g, f.child(0)));
    case Op::AF:
      return temporal(g, true, true, g.worlds, eval(g, f.child(0)));
    case Op::EG:
      return temporal(g, false, false, none, eval(g, f.child(0)));
    case Op::AG:
      return temporal(g, true, false, none, eval(g, f.child(0)));
    case Op::EU:
      return temporal(g, false, true, eval(g, f.lhs()), eval(g, f.rhs()));
    case Op::AU:
      return temporal(g, true, true, eval(g, f.lhs()), eval(g, f.rhs()));
    case Op::ER:
      return temporal(g, false, false, eval(g, f.lhs()), eval(g, f.rhs()));
    case Op::AR:
      return temporal(g, true, false, eval(g, f.lhs()), eval(g, f.rhs()));
  }
  return none;
}

Graph to_graph(const ModelData& m) {
  Graph g;
  for (const auto& w : m.worlds) {
    g.worlds.insert(w.id);
    g.succ[w.id];
    g.labels[w.id] = w.labels;
  }
  for (const auto& [s, t] : m.edges) g.succ[s].insert(t);
  return g;
}

}  // namespace

std::set<std::string> reference_sat(const ModelData& model, const Formula& f) {
  return eval(to_graph(model), f);
}

bool reference_check(const ModelData& model, const Formula& f) {
  return reference_sat(model, f).count(model.root) != 0;
}

bool reference_check(const KripkeModel& model, const Submodel& sub,
                     const Formula& f) {
  return reference_check(induced_model(model, sub).data(), f);
}

Submodel random_submodel(const KripkeModel& model, std::mt19937_64& rng,
                         bool connected) {
  std::bernoulli_distribution keep(0.7);
  Submodel s = Submodel::full(model);
  for (std::size_t e = 0; e < model.num_edges(); ++e) s.set_edge(e, keep(rng));
  auto closed = largest_valid_within(model, s, connected);
  return closed ? *closed : Submodel::full(model);
}

KripkeModel random_model(std::mt19937_64& rng, std::size_t n,
                         const std::vector<std::string>& atoms,
                         double edge_density) {
  std::bernoulli_distribution edge(edge_density), label(0.5);
  std::uniform_int_distribution<std::size_t> any(0, n - 1);
  ModelData d;
  for (std::size_t w = 0; w < n; ++w) {
    World world{"w" + std::to_string(w), {}};
    for (const auto& a : atoms) {
      if (label(rng)) world.labels.insert(a);
    }
    d.worlds.push_back(std::move(world));
  }
  for (std::size_t w = 0; w < n; ++w) {
    bool any_succ = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (edge(rng)) {
        d.edges.emplace_back(d.worlds[w].id, d.worlds[v].id);
        any_succ = true;
      }
    }
    if (!any_succ) d.edges.emplace_back(d.worlds[w].id, d.worlds[any(rng)].id);
  }
  d.root = "w0";
  return KripkeModel(std::move(d));
}

std::vector<std::string> serialize_all(const KripkeModel& model,
                                       const std::vector<Submodel>& subs) {
  std::vector<std::string> out;
  out.reserve(subs.size());
  for (const Submodel& s : subs) out.push_back(canonical_serialize(model, s));
  return out;
}

}  // namespace ctlenum::testing
