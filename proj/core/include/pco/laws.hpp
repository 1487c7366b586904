#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pco/signature.hpp"

namespace pco {

/// Lookup table for one structural function F_V : Ran(W_V) -> Ran(V), where
/// W_V lists every other variable in signature order. Entries are indexed by
/// the mixed-radix encoding of the argument tuple, first variable most
/// significant, so entry order equals lexicographic tuple order.
class LawTable {
public:
  /// Throws RangeViolation on a wrong entry count or out-of-range output.
  LawTable(const Signature& sig, Var target, std::vector<Val> outputs);

  Var target() const { return target_; }
  const std::vector<Val>& outputs() const { return outputs_; }
  std::size_t entry_count() const { return outputs_.size(); }

  /// F_V applied to s(W_V); the target column of `s` is ignored.
  Val operator()(const Assignment& s) const { return outputs_[index_of(s)]; }
  std::size_t index_of(const Assignment& s) const;
  /// Argument values (in W_V order) of the entry at `index`.
  std::vector<Val> arguments_at(std::size_t index) const;

  /// Non-dummy arguments, ascending.
  const std::vector<Var>& parents() const { return parents_; }
  bool is_constant() const;

  friend bool operator==(const LawTable& a, const LawTable& b) {
    return a.target_ == b.target_ && a.outputs_ == b.outputs_;
  }

private:
  Var target_;
  std::vector<Val> outputs_;
  std::vector<std::size_t> strides_;  // zero for the target column
  std::vector<std::size_t> radices_;
  std::vector<Var> parents_;
};

/// The function component F: a law for each endogenous variable. The parent
/// graph is always acyclic. Restriction (as performed by interventions) shares
/// the underlying tables and only masks out variables.
class FunctionComponent {
public:
  /// All variables exogenous.
  explicit FunctionComponent(SignaturePtr sig);
  /// Throws RangeViolation (duplicate target / bad table) or CycleError.
  FunctionComponent(SignaturePtr sig, std::vector<LawTable> tables);

  const SignaturePtr& signature_ptr() const { return sig_; }
  const Signature& signature() const { return *sig_; }

  bool is_endogenous(Var v) const { return (mask_ >> v) & 1U; }
  std::uint64_t endogenous_mask() const { return mask_; }
  std::vector<Var> endogenous() const;

  /// Throws NotEndogenous.
  const LawTable& table(Var v) const;
  /// PA_V; throws NotEndogenous.
  const std::vector<Var>& parents(Var v) const { return table(v).parents(); }

  /// Endogenous variables in a topological order of the parent graph.
  std::vector<Var> topological_order() const;
  /// Topological order over the unrestricted table set (callers filter by mask).
  const std::vector<Var>& base_order() const { return base_->topo; }
  const LawTable* table_or_null(Var v) const {
    return is_endogenous(v) ? &*base_->tables[v] : nullptr;
  }

  /// F restricted to V minus the masked variables; no re-validation.
  FunctionComponent restricted(std::uint64_t removed) const;

  /// Throws ConstantFunction naming the first constant law.
  void check_non_constant() const;

  friend bool operator==(const FunctionComponent& a, const FunctionComponent& b);

private:
  struct Base {
    std::vector<std::optional<LawTable>> tables;
    std::vector<Var> topo;
  };

  SignaturePtr sig_;
  std::shared_ptr<const Base> base_;
  std::uint64_t mask_ = 0;
};

/// Directed graph over Dom with an edge X -> V iff X ∈ PA_V.
struct CausalGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Var, Var>> edges;  // sorted

  bool has_edge(Var from, Var to) const;
  friend bool operator==(const CausalGraph&, const CausalGraph&) = default;
};

CausalGraph causal_graph(const FunctionComponent& laws);

/// PA_V by exhaustive table scan; throws NotEndogenous.
std::vector<Var> parents(const FunctionComponent& laws, Var v);

/// Some directed cycle in the graph given by per-vertex parent lists, if any.
std::optional<std::vector<Var>> find_cycle(const std::vector<std::vector<Var>>& parents_of);

}  // namespace pco
