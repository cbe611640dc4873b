#include "ctlenum/modelcheck.hpp"

#include "ctlenum/error.hpp"

namespace ctlenum {

const std::vector<bool>& LabelingResult::at(const Formula& f) const {
  auto it = sat.find(f);
  if (it == sat.end()) {
    throw PreconditionError("not a labeled subformula: " + render_formula(f));
  }
  return it->second;
}

std::set<std::string> LabelingResult::worlds(const KripkeModel& model,
                                             const Formula& f) const {
  const auto& mask = at(f);
  std::set<std::string> out;
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if (mask[w]) out.insert(model.id(w));
  }
  return out;
}

CompiledCheck::CompiledCheck(const KripkeModel& model, const Formula& formula)
    : model_(&model) {
  std::unordered_map<Formula, int, FormulaHash> memo;
  std::unordered_map<std::string, int> atom_ids;
  compile(formula, memo, atom_ids);
  vals_.assign(nodes_.size(), std::vector<char>(model.num_worlds(), 0));
  counter_.assign(model.num_worlds(), 0);
  work_.reserve(model.num_worlds());
}

int CompiledCheck::compile(const Formula& f,
                           std::unordered_map<Formula, int, FormulaHash>& memo,
                           std::unordered_map<std::string, int>& atom_ids) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  Node node{f.op()};
  if (f.op() == Op::Atom) {
    auto [it, fresh] = atom_ids.emplace(f.name(), static_cast<int>(atoms_.size()));
    if (fresh) {
      std::vector<char> mask(model_->num_worlds(), 0);
      for (std::size_t w = 0; w < model_->num_worlds(); ++w) {
        mask[w] = model_->has_label(w, f.name());
      }
      atoms_.push_back(std::move(mask));
    }
    node.atom = it->second;
  }
  if (f.arity() >= 1) node.a = compile(f.child(0), memo, atom_ids);
  if (f.arity() >= 2) node.b = compile(f.child(1), memo, atom_ids);
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  formulas_.push_back(f);
  memo.emplace(f, id);
  return id;
}

const std::vector<char>& CompiledCheck::evaluate(const Submodel& sub) {
  const KripkeModel& m = *model_;
  const std::size_t n = m.num_worlds();
  auto in_sub = [&](std::size_t w) { return sub.has_world(w); };
  auto kept = [&](std::size_t e) { return sub.has_edge(e); };

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    std::vector<char>& z = vals_[i];
    const std::vector<char>* pa = node.a >= 0 ? &vals_[node.a] : nullptr;
    const std::vector<char>* pb = node.b >= 0 ? &vals_[node.b] : nullptr;
    switch (node.op) {
      case Op::True:
        for (std::size_t w = 0; w < n; ++w) z[w] = in_sub(w);
        break;
      case Op::False:
        std::fill(z.begin(), z.end(), 0);
        break;
      case Op::Atom: {
        const auto& mask = atoms_[node.atom];
        for (std::size_t w = 0; w < n; ++w) z[w] = in_sub(w) && mask[w];
        break;
      }
      case Op::Not:
        for (std::size_t w = 0; w < n; ++w) z[w] = in_sub(w) && !(*pa)[w];
        break;
      case Op::And:
        for (std::size_t w = 0; w < n; ++w) z[w] = (*pa)[w] && (*pb)[w];
        break;
      case Op::Or:
        for (std::size_t w = 0; w < n; ++w) z[w] = (*pa)[w] || (*pb)[w];
        break;
      case Op::EX:
      case Op::AX: {
        const bool exists = node.op == Op::EX;
        for (std::size_t w = 0; w < n; ++w) {
          if (!in_sub(w)) {
            z[w] = 0;
            continue;
          }
          bool r = !exists;
          for (std::size_t e : m.out_edges(w)) {
            if (!kept(e)) continue;
            if ((*pa)[m.edge(e).target] == exists) {
              r = exists;
              break;
            }
          }
          z[w] = r;
        }
        break;
      }
      case Op::EF:
      case Op::EU: {
        // Least Z = psi | (phi & EX Z): backward search from psi.
        const std::vector<char>& psi = node.op == Op::EF ? *pa : *pb;
        work_.clear();
        for (std::size_t w = 0; w < n; ++w) {
          z[w] = psi[w];
          if (z[w]) work_.push_back(w);
        }
        while (!work_.empty()) {
          std::size_t v = work_.back();
          work_.pop_back();
          for (std::size_t e : m.in_edges(v)) {
            if (!kept(e)) continue;
            std::size_t s = m.edge(e).source;
            if (z[s] || !in_sub(s)) continue;
            if (node.op == Op::EU && !(*pa)[s]) continue;
            z[s] = 1;
            work_.push_back(s);
          }
        }
        break;
      }
      case Op::AF:
      case Op::AU: {
        // Least Z = psi | (phi & AX Z): count successors not yet in Z.
        const std::vector<char>& psi = node.op == Op::AF ? *pa : *pb;
        work_.clear();
        for (std::size_t w = 0; w < n; ++w) {
          z[w] = psi[w];
          if (z[w]) work_.push_back(w);
          counter_[w] = 0;
          if (!in_sub(w)) continue;
          for (std::size_t e : m.out_edges(w)) counter_[w] += kept(e);
        }
        while (!work_.empty()) {
          std::size_t v = work_.back();
          work_.pop_back();
          for (std::size_t e : m.in_edges(v)) {
            if (!kept(e)) continue;
            std::size_t s = m.edge(e).source;
            if (z[s] || !in_sub(s)) continue;
            if (node.op == Op::AU && !(*pa)[s]) continue;
            if (--counter_[s] == 0) {
              z[s] = 1;
              work_.push_back(s);
            }
          }
        }
        break;
      }
      case Op::EG:
      case Op::ER: {
        // Greatest Z = psi & (phi | EX Z); EG is the case phi = false. Worlds
        // with phi never leave; the others leave when no successor is in Z.
        const std::vector<char>& psi = node.op == Op::EG ? *pa : *pb;
        const bool release = node.op == Op::ER;
        work_.clear();
        for (std::size_t w = 0; w < n; ++w) z[w] = psi[w];
        for (std::size_t w = 0; w < n; ++w) {
          if (!z[w] || (release && (*pa)[w])) continue;
          counter_[w] = 0;
          for (std::size_t e : m.out_edges(w)) {
            if (kept(e) && z[m.edge(e).target]) ++counter_[w];
          }
          if (counter_[w] == 0) work_.push_back(w);
        }
        for (std::size_t w : work_) z[w] = 0;
        while (!work_.empty()) {
          std::size_t v = work_.back();
          work_.pop_back();
          for (std::size_t e : m.in_edges(v)) {
            if (!kept(e)) continue;
            std::size_t s = m.edge(e).source;
            if (!z[s] || (release && (*pa)[s])) continue;
            if (--counter_[s] == 0) {
              z[s] = 0;
              work_.push_back(s);
            }
          }
        }
        break;
      }
      case Op::AG:
      case Op::AR: {
        // Greatest Z = psi & (phi | AX Z): a world without phi leaves as soon
        // as one successor is outside Z.
        const std::vector<char>& psi = node.op == Op::AG ? *pa : *pb;
        const bool release = node.op == Op::AR;
        work_.clear();
        for (std::size_t w = 0; w < n; ++w) {
          z[w] = psi[w];
          if (in_sub(w) && !z[w]) work_.push_back(w);
        }
        while (!work_.empty()) {
          std::size_t v = work_.back();
          work_.pop_back();
          for (std::size_t e : m.in_edges(v)) {
            if (!kept(e)) continue;
            std::size_t s = m.edge(e).source;
            if (!z[s] || (release && (*pa)[s])) continue;
            z[s] = 0;
            work_.push_back(s);
          }
        }
        break;
      }
    }
  }
  return vals_.back();
}

LabelingResult label(const KripkeModel& model, const Submodel& sub,
                     const Formula& f) {
  if (!is_valid(model, sub, false)) {
    throw InvalidStructure("labeling requires a valid submodel");
  }
  CompiledCheck cc(model, f);
  cc.evaluate(sub);
  LabelingResult out;
  for (std::size_t i = 0; i < cc.node_count(); ++i) {
    const auto& v = cc.value(i);
    out.sat.emplace(cc.node_formulas()[i], std::vector<bool>(v.begin(), v.end()));
  }
  return out;
}

LabelingResult label(const KripkeModel& model, const Formula& f) {
  return label(model, Submodel::full(model), f);
}

bool check(const KripkeModel& model, const Submodel& sub, const Formula& f) {
  if (!is_valid(model, sub, false)) {
    throw InvalidStructure("model checking requires a valid submodel");
  }
  return CompiledCheck(model, f).holds(sub);
}

bool check(const KripkeModel& model, const Formula& f) {
  return CompiledCheck(model, f).holds(Submodel::full(model));
}

bool check_equiv(const Formula& a, const Formula& b,
                 std::span<const KripkeModel> family) {
  for (const KripkeModel& m : family) {
    if (check(m, a) != check(m, b)) return false;
  }
  return true;
}

bool check_equiv(const Formula& a, const Formula& b,
                 const SmallModelOptions& family) {
  bool same = true;
  for_each_small_model(family, [&](const KripkeModel& m) {
    if (same && check(m, a) != check(m, b)) same = false;
  });
  return same;
}

}  // namespace ctlenum
