#pragma once

// A deliberately naive second implementation of the semantics, used as an
// oracle: teams are expanded row lists and interventions iterate every law
// until nothing changes.

#include <optional>
#include <vector>

#include "pco/pco.hpp"

namespace pco::test::ref {

struct Laws {
  std::vector<std::optional<LawTable>> tables;
};

inline Laws laws_of(const FunctionComponent& f) {
  Laws out;
  for (Var v = 0; v < f.signature().size(); ++v) {
    const LawTable* t = f.table_or_null(v);
    out.tables.push_back(t ? std::optional<LawTable>(*t) : std::nullopt);
  }
  return out;
}

inline std::vector<Assignment> rows_of(const CausalMultiteam& m) {
  std::vector<Assignment> out;
  for (const auto& [s, n] : m.team().rows())
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(s);
  return out;
}

inline bool consistent(const InterventionSpec& spec) {
  for (const auto& [v, x] : spec.pairs())
    for (const auto& [w, y] : spec.pairs())
      if (v == w && x != y) return false;
  return true;
}

inline Assignment intervene_row(Assignment s, const Laws& laws, const InterventionSpec& spec) {
  for (const auto& [v, x] : spec.pairs()) s[v] = x;
  for (std::size_t round = 0; round <= s.size(); ++round)
    for (Var v = 0; v < s.size(); ++v)
      if (laws.tables[v] && !spec.value_of(v)) s[v] = (*laws.tables[v])(s);
  return s;
}

inline Laws without(Laws laws, const InterventionSpec& spec) {
  for (const auto& [v, x] : spec.pairs()) laws.tables[v].reset();
  return laws;
}

inline bool holds(const std::vector<Assignment>& team, const Laws& laws, const Formula& phi);

inline bool at(const Assignment& s, const Laws& laws, const Formula& phi) { return holds({s}, laws, phi); }

inline std::size_t count(const std::vector<Assignment>& team, const Laws& laws, const Formula& alpha) {
  std::size_t n = 0;
  for (const auto& s : team) n += at(s, laws, alpha) ? 1 : 0;
  return n;
}

inline bool holds(const std::vector<Assignment>& team, const Laws& laws, const Formula& phi) {
  switch (phi.kind()) {
    case Kind::Eq:
      for (const auto& s : team)
        if (s[phi.var()] != phi.val()) return false;
      return true;
    case Kind::Neq:
      for (const auto& s : team)
        if (s[phi.var()] == phi.val()) return false;
      return true;
    case Kind::And:
      return holds(team, laws, phi.left()) && holds(team, laws, phi.right());
    case Kind::GOr:
      return holds(team, laws, phi.left()) || holds(team, laws, phi.right());
    case Kind::SelImp: {
      std::vector<Assignment> kept;
      for (const auto& s : team)
        if (at(s, laws, phi.antecedent())) kept.push_back(s);
      return holds(kept, laws, phi.consequent());
    }
    case Kind::Cf: {
      if (!consistent(phi.spec())) return true;
      std::vector<Assignment> moved;
      for (const auto& s : team) moved.push_back(intervene_row(s, laws, phi.spec()));
      return holds(moved, without(laws, phi.spec()), phi.body());
    }
    case Kind::ProbConst: {
      if (team.empty()) return true;
      const Rational p(static_cast<long>(count(team, laws, phi.arg())), static_cast<long>(team.size()));
      return phi.cmp() == Cmp::Ge ? p >= phi.threshold() : p > phi.threshold();
    }
    case Kind::ProbProb: {
      if (team.empty()) return true;
      const auto a = count(team, laws, phi.arg());
      const auto b = count(team, laws, phi.arg2());
      return phi.cmp() == Cmp::Ge ? a >= b : a > b;
    }
  }
  return false;
}

inline bool holds(const CausalMultiteam& m, const Formula& phi) { return holds(rows_of(m), laws_of(m.laws()), phi); }

}  // namespace pco::test::ref
