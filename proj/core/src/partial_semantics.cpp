#include "internal.hpp"

namespace ctlenum::detail {

PartialCheck::PartialCheck(const KripkeModel& model, const Formula& formula)
    : shape_(model, formula), model_(&model) {
  hi_.assign(shape_.node_count(), std::vector<char>(model.num_worlds(), 0));
  lo_ = hi_;
  tmp_.assign(model.num_worlds(), 0);
}

// EX over may edges (hi) or must edges (lo).
void PartialCheck::ex(const std::vector<char>& z, bool use_may,
                      std::vector<char>& out) {
  const KripkeModel& m = *model_;
  for (std::size_t w = 0; w < m.num_worlds(); ++w) {
    char r = 0;
    if (may_->has_world(w)) {
      for (std::size_t e : m.out_edges(w)) {
        const bool edge_ok = use_may ? may_->has_edge(e) : (*must_)[e];
        if (edge_ok && z[m.edge(e).target]) {
          r = 1;
          break;
        }
      }
    }
    out[w] = r;
  }
}

// AX upper bound: every must successor qualifies and some may successor
// does. Lower bound: every may successor qualifies.
void PartialCheck::ax(const std::vector<char>& z, bool use_may,
                      std::vector<char>& out) {
  const KripkeModel& m = *model_;
  for (std::size_t w = 0; w < m.num_worlds(); ++w) {
    if (!may_->has_world(w)) {
      out[w] = 0;
      continue;
    }
    bool all = true, some = false;
    for (std::size_t e : m.out_edges(w)) {
      if (!may_->has_edge(e)) continue;
      const bool in = z[m.edge(e).target] != 0;
      some = some || in;
      if (!in && (!use_may || (*must_)[e])) all = false;
    }
    out[w] = use_may ? (all && some) : all;
  }
}

bool PartialCheck::root_may(const Submodel& may,
                            const std::vector<bool>& must_edges) {
  may_ = &may;
  must_ = &must_edges;
  const KripkeModel& m = *model_;
  const std::size_t n = m.num_worlds();
  const auto& nodes = shape_.nodes();

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    auto& hi = hi_[i];
    auto& lo = lo_[i];
    auto dom = [&](std::size_t w) -> char { return may.has_world(w); };
    switch (node.op) {
      case Op::True:
        for (std::size_t w = 0; w < n; ++w) hi[w] = lo[w] = dom(w);
        break;
      case Op::False:
        std::fill(hi.begin(), hi.end(), 0);
        std::fill(lo.begin(), lo.end(), 0);
        break;
      case Op::Atom: {
        const auto& mask = shape_.atom_mask(node.atom);
        for (std::size_t w = 0; w < n; ++w) hi[w] = lo[w] = dom(w) && mask[w];
        break;
      }
      case Op::Not:
        for (std::size_t w = 0; w < n; ++w) {
          hi[w] = dom(w) && !lo_[node.a][w];
          lo[w] = dom(w) && !hi_[node.a][w];
        }
        break;
      case Op::And:
        for (std::size_t w = 0; w < n; ++w) {
          hi[w] = hi_[node.a][w] && hi_[node.b][w];
          lo[w] = lo_[node.a][w] && lo_[node.b][w];
        }
        break;
      case Op::Or:
        for (std::size_t w = 0; w < n; ++w) {
          hi[w] = hi_[node.a][w] || hi_[node.b][w];
          lo[w] = lo_[node.a][w] || lo_[node.b][w];
        }
        break;
      case Op::EX:
        ex(hi_[node.a], true, hi);
        ex(lo_[node.a], false, lo);
        break;
      case Op::AX:
        ax(hi_[node.a], true, hi);
        ax(lo_[node.a], false, lo);
        break;
      default: {
        // Fixpoint operators by plain iteration; the models this runs on
        // are small.
        const bool universal = node.op == Op::AF || node.op == Op::AG ||
                               node.op == Op::AU || node.op == Op::AR;
        const bool least = node.op == Op::EF || node.op == Op::AF ||
                           node.op == Op::EU || node.op == Op::AU;
        const bool unary = node.op == Op::EF || node.op == Op::AF ||
                           node.op == Op::EG || node.op == Op::AG;
        for (int bound = 0; bound < 2; ++bound) {
          const bool use_may = bound == 0;
          auto& z = use_may ? hi : lo;
          auto& side = use_may ? hi_ : lo_;
          // phi: left operand (absent for unary forms), psi: right/only one.
          const std::vector<char>* phi = unary ? nullptr : &side[node.a];
          const std::vector<char>& psi = unary ? side[node.a] : side[node.b];
          for (std::size_t w = 0; w < n; ++w) z[w] = least ? 0 : dom(w);
          bool changed = true;
          while (changed) {
            changed = false;
            if (universal) {
              ax(z, use_may, tmp_);
            } else {
              ex(z, use_may, tmp_);
            }
            for (std::size_t w = 0; w < n; ++w) {
              char v;
              if (least) {
                // psi | (phi & X Z); EF/AF have phi = true
                const char phi_w = phi ? (*phi)[w] : dom(w);
                v = psi[w] || (phi_w && tmp_[w]);
              } else {
                // psi & (phi | X Z); EG/AG have phi = false
                const char phi_w = phi ? (*phi)[w] : 0;
                v = psi[w] && (phi_w || tmp_[w]);
              }
              if (v != z[w]) {
                z[w] = v;
                changed = true;
              }
            }
          }
        }
        break;
      }
    }
  }
  return hi_.back()[m.root()] != 0;
}

}  // namespace ctlenum::detail
