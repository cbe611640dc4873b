#include "ctlenum/error.hpp"
#include "internal.hpp"

namespace ctlenum {

std::string_view oracle_name(OracleKind k) {
  switch (k) {
    case OracleKind::Auto: return "auto";
    case OracleKind::Exhaustive: return "exhaustive";
    case OracleKind::Monotone: return "monotone";
    case OracleKind::AFAG: return "afag";
  }
  return "?";
}

std::optional<OracleKind> parse_oracle_kind(std::string_view text) {
  for (OracleKind k : {OracleKind::Auto, OracleKind::Exhaustive,
                       OracleKind::Monotone, OracleKind::AFAG}) {
    if (oracle_name(k) == text) return k;
  }
  return std::nullopt;
}

OracleKind resolve_oracle(OracleKind kind, const FragmentProfile& profile) {
  if (kind != OracleKind::Auto) return kind;
  if (profile.has(FragmentTag::MonotoneE)) return OracleKind::Monotone;
  if (profile.has(FragmentTag::AfagChain)) return OracleKind::AFAG;
  return OracleKind::Exhaustive;
}

namespace {

class ExhaustiveOracle : public ExtensionOracle {
 public:
  ExhaustiveOracle(const KripkeModel& model, const Formula& formula,
                   bool connected)
      : model_(model),
        ground_(ground_set(model)),
        search_(model, formula, connected) {}

  OracleKind kind() const override { return OracleKind::Exhaustive; }

  bool extend(const PartialDecision& d) override {
    return search_.extend(detail::commitments(model_, ground_, d));
  }

 private:
  const KripkeModel& model_;
  std::vector<ElementId> ground_;
  detail::CompletionSearch search_;
};

// Deletions only shrink the satisfying set, so the largest valid submodel
// inside the commitments is the best candidate.
class MonotoneOracle : public ExtensionOracle {
 public:
  MonotoneOracle(const KripkeModel& model, const Formula& formula,
                 bool connected)
      : model_(model),
        ground_(ground_set(model)),
        connected_(connected),
        check_(model, formula) {}

  OracleKind kind() const override { return OracleKind::Monotone; }

  bool extend(const PartialDecision& d) override {
    auto c = detail::commitments(model_, ground_, d);
    auto top = detail::closure_with_keeps(model_, c, connected_);
    return top && check_.holds(*top);
  }

 private:
  const KripkeModel& model_;
  std::vector<ElementId> ground_;
  bool connected_;
  CompiledCheck check_;
};

class AfagOracle : public ExtensionOracle {
 public:
  AfagOracle(const KripkeModel& model, const Formula& formula, bool connected)
      : model_(model),
        formula_(formula),
        ground_(ground_set(model)),
        connected_(connected) {
    auto chain = as_afag_chain(formula);
    if (chain->ops.empty()) {
      atom_ = chain->atom;
    } else {
      form_ = afag_trim(formula);
      decider_ = std::make_unique<detail::AfagDecider>(model, *form_);
    }
  }

  OracleKind kind() const override { return OracleKind::AFAG; }
  std::size_t fallback_queries() const override { return fallbacks_; }

  bool extend(const PartialDecision& d) override {
    auto c = detail::commitments(model_, ground_, d);
    auto top = detail::closure_with_keeps(model_, c, connected_);
    if (!top) return false;
    if (!form_) return model_.has_label(model_.root(), *atom_);
    if (!c.any_keep) return decider_->exists(*top);
    if (form_->shape == TrimmedForm::Shape::AG && connected_) {
      return ag_with_keeps(c);
    }
    ++fallbacks_;
    if (!fallback_) {
      fallback_ = std::make_unique<detail::CompletionSearch>(model_, formula_,
                                                             connected_);
    }
    return fallback_->extend(c);
  }

 private:
  // In a connected submodel AG x forces every world to carry x.
  bool ag_with_keeps(const detail::Commitments& c) {
    const std::string& x = form_->atom;
    for (std::size_t w = 0; w < model_.num_worlds(); ++w) {
      if (c.keep.has_world(w) && !model_.has_label(w, x)) return false;
    }
    for (std::size_t e = 0; e < model_.num_edges(); ++e) {
      if (!c.keep.has_edge(e)) continue;
      const Edge& edge = model_.edge(e);
      if (!model_.has_label(edge.source, x) || !model_.has_label(edge.target, x)) {
        return false;
      }
    }
    Submodel allowed = c.allowed;
    for (std::size_t w = 0; w < model_.num_worlds(); ++w) {
      if (!model_.has_label(w, x)) allowed.set_world(w, false);
    }
    auto top = largest_valid_within(model_, std::move(allowed), true);
    return top && c.keep.subset_of(*top);
  }

  const KripkeModel& model_;
  Formula formula_;
  std::vector<ElementId> ground_;
  bool connected_;
  std::optional<std::string> atom_;
  std::optional<TrimmedForm> form_;
  std::unique_ptr<detail::AfagDecider> decider_;
  std::unique_ptr<detail::CompletionSearch> fallback_;
  std::size_t fallbacks_ = 0;
};

}  // namespace

std::unique_ptr<ExtensionOracle> make_oracle(OracleKind kind,
                                             const KripkeModel& model,
                                             const Formula& formula,
                                             bool connected) {
  const FragmentProfile profile = classify_fragment(formula);
  switch (resolve_oracle(kind, profile)) {
    case OracleKind::Monotone:
      if (!profile.has(FragmentTag::MonotoneE)) {
        throw FragmentMismatch("monotone oracle needs a negation-free formula "
                               "over EX, EF, EG, EU, ER: " +
                               render_formula(formula));
      }
      return std::make_unique<MonotoneOracle>(model, formula, connected);
    case OracleKind::AFAG:
      if (!profile.has(FragmentTag::AfagChain)) {
        throw FragmentMismatch("afag oracle needs a chain of AF/AG over one atom: " +
                               render_formula(formula));
      }
      return std::make_unique<AfagOracle>(model, formula, connected);
    default:
      return std::make_unique<ExhaustiveOracle>(model, formula, connected);
  }
}

bool extend_exhaustive(const ExtensionQuery& q) {
  return make_oracle(OracleKind::Exhaustive, q.model, q.formula, q.connected)
      ->extend(q.decision);
}

bool extend_monotone(const ExtensionQuery& q) {
  return make_oracle(OracleKind::Monotone, q.model, q.formula, q.connected)
      ->extend(q.decision);
}

bool extend_afag(const ExtensionQuery& q) {
  return make_oracle(OracleKind::AFAG, q.model, q.formula, q.connected)
      ->extend(q.decision);
}

}  // namespace ctlenum
