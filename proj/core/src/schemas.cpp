#include "pco/schemas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "pco/characterize.hpp"
#include "pco/defined.hpp"
#include "pco/error.hpp"

namespace pco {

namespace {

using F = Formula;

F conj(const F& a, const F& b) { return F::conj(a, b); }
F conj3(const F& a, const F& b, const F& c) { return F::conj(a, F::conj(b, c)); }
F to(const F& a, const F& b) { return implies(a, b); }

void need(const SchemaArgs& a, std::size_t co, std::size_t pco, std::size_t q, std::size_t specs, std::size_t vars) {
  if (a.co.size() < co || a.pco.size() < pco || a.q.size() < q || a.specs.size() < specs || a.vars.size() < vars)
    throw Error(ErrorCode::IllTypedArgument, "schema instance is missing metavariables");
}

Cmp cmp_of(std::size_t variant) { return variant % 2 ? Cmp::Gt : Cmp::Ge; }

std::vector<Var> all_but(const Signature& sig, Var v) {
  std::vector<Var> out;
  for (Var w = 0; w < sig.size(); ++w)
    if (w != v) out.push_back(w);
  return out;
}

InterventionSpec spec_of(const std::vector<Var>& vars, std::span<const Val> vals) {
  std::vector<InterventionSpec::Pair> pairs;
  for (std::size_t i = 0; i < vars.size(); ++i) pairs.emplace_back(vars[i], vals[i]);
  return InterventionSpec(std::move(pairs));
}

// Classical tautologies over ∧, ⊔, →, ^C, ⊤, ⊥.
constexpr std::size_t kT1Templates = 14;
F t1(std::size_t k, const F& p, const F& q, const F& r) {
  switch (k % kT1Templates) {
    case 0: return to(p, p);
    case 1: return to(p, to(q, p));
    case 2: return to(to(p, to(q, r)), to(to(p, q), to(p, r)));
    case 3: return to(to(to(p, q), p), p);
    case 4: return iff(neg_c(conj(p, q)), F::gor(neg_c(p), neg_c(q)));
    case 5: return iff(neg_c(F::gor(p, q)), conj(neg_c(p), neg_c(q)));
    case 6: return F::gor(p, neg_c(p));
    case 7: return iff(neg_c(neg_c(p)), p);
    case 8: return to(bot(), p);
    case 9: return to(p, top());
    case 10: return to(conj(p, q), p);
    case 11: return to(p, F::gor(p, q));
    case 12: return to(to(neg_c(p), p), p);
    default: return to(to(p, q), to(neg_c(q), neg_c(p)));
  }
}

// The same templates read over ∧, ∨, ⊃, ¬ inside CO.
constexpr std::size_t kT2Templates = 14;
F t2(std::size_t k, const F& a, const F& b, const F& c) {
  auto im = [](const F& x, const F& y) { return F::sel(x, y); };
  switch (k % kT2Templates) {
    case 0: return im(a, a);
    case 1: return im(a, im(b, a));
    case 2: return im(im(a, im(b, c)), im(im(a, b), im(a, c)));
    case 3: return im(im(im(a, b), a), a);
    case 4: return co_equiv(dual_neg(conj(a, b)), tensor_or(dual_neg(a), dual_neg(b)));
    case 5: return co_equiv(dual_neg(tensor_or(a, b)), conj(dual_neg(a), dual_neg(b)));
    case 6: return tensor_or(a, dual_neg(a));
    case 7: return co_equiv(dual_neg(dual_neg(a)), a);
    case 8: return im(bot(), a);
    case 9: return im(a, top());
    case 10: return im(conj(a, b), a);
    case 11: return im(a, tensor_or(a, b));
    case 12: return im(im(dual_neg(a), a), a);
    default: return im(im(a, b), im(dual_neg(b), dual_neg(a)));
  }
}

using Builder = std::function<std::optional<F>(const Signature&, const SchemaArgs&)>;

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = [] {
    std::map<std::string, Builder, std::less<>> m;
    const Rational zero(0), one(1);

    // co: α β γ
    m["T2"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 3, 0, 0, 0, 0);
      return t2(a.variant, a.co[0], a.co[1], a.co[2]);
    };
    // pco: φ ψ χ
    m["T1"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 3, 0, 0, 0);
      return t1(a.variant, a.pco[0], a.pco[1], a.pco[2]);
    };
    // α ↔ Pr(α)=1
    m["P1"] = [one](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 0, 0, 0, 0);
      return iff(a.co[0], prob_eq(a.co[0], one));
    };
    m["P2"] = [zero](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 0, 0, 0, 0);
      return prob_ge(a.co[0], zero);
    };
    // q: δ ε
    m["P3"] = [zero](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 2, 0, 0);
      const auto& [d, e] = std::tie(a.q[0], a.q[1]);
      if (d + e > Rational(1)) return std::nullopt;
      const F& al = a.co[0];
      const F& be = a.co[1];
      return to(conj3(prob_eq(al, d), prob_eq(be, e), prob_eq(conj(al, be), zero)), prob_eq(tensor_or(al, be), d + e));
    };
    // q: ε
    m["P3b"] = [zero](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 1, 0, 0);
      const F& al = a.co[0];
      return to(conj(prob_ge(al, a.q[0]), prob_eq(conj(al, a.co[1]), zero)), prob_le(a.co[1], Rational(1) - a.q[0]));
    };
    // q: ε δ
    m["P4"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 0, 2, 0, 0);
      if (!(a.q[1] > a.q[0])) return std::nullopt;
      return to(prob_le(a.co[0], a.q[0]), prob_lt(a.co[0], a.q[1]));
    };
    m["P5"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 0, 1, 0, 0);
      return to(prob_lt(a.co[0], a.q[0]), prob_le(a.co[0], a.q[0]));
    };
    m["P6"] = [one](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 1, 0, 0);
      const F& al = a.co[0];
      const F& be = a.co[1];
      return to(prob_eq(co_equiv(al, be), one), to(prob_eq(al, a.q[0]), prob_eq(be, a.q[0])));
    };
    m["P6b"] = [one](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 1, 0, 0);
      const F& al = a.co[0];
      const F& be = a.co[1];
      return to(prob_eq(F::sel(al, be), one), to(prob_eq(al, a.q[0]), prob_ge(be, a.q[0])));
    };
    // q: δ ε
    m["CP1"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 2, 0, 0);
      if (!(a.q[0] >= a.q[1])) return std::nullopt;
      return to(conj(prob_eq(a.co[0], a.q[0]), prob_eq(a.co[1], a.q[1])), F::prob_cmp(a.co[0], Cmp::Ge, a.co[1]));
    };
    m["CP2"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 2, 0, 0);
      if (!(a.q[0] > a.q[1])) return std::nullopt;
      return to(conj(prob_eq(a.co[0], a.q[0]), prob_eq(a.co[1], a.q[1])), F::prob_cmp(a.co[0], Cmp::Gt, a.co[1]));
    };
    m["O1"] = [zero](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 1, 0, 0, 0);
      return to(prob_eq(a.co[0], zero), F::sel(a.co[0], a.pco[0]));
    };
    m["O1b"] = [zero](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 0, 0, 0, 0);
      return to(F::sel(a.co[0], bot()), prob_eq(a.co[0], zero));
    };
    // q: δ ε; ε/δ must be a legal threshold
    m["O2"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 2, 0, 0);
      const auto& [d, e] = std::tie(a.q[0], a.q[1]);
      if (d.is_zero() || e > d) return std::nullopt;
      const F& al = a.co[0];
      return to(conj(prob_eq(al, d), prob_eq(conj(al, a.co[1]), e)), F::sel(al, prob_eq(a.co[1], e / d)));
    };
    // q: ε δ
    m["O3"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 2, 0, 0);
      const auto& [e, d] = std::tie(a.q[0], a.q[1]);
      if (e.is_zero()) return std::nullopt;
      const F& al = a.co[0];
      return to(F::sel(al, prob_eq(a.co[1], e)), iff(prob_eq(al, d), prob_eq(conj(al, a.co[1]), e * d)));
    };
    m["O4"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 1, 0, 0, 0);
      return to(F::sel(a.co[0], a.pco[0]), to(a.co[0], a.pco[0]));
    };
    m["O5∧"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 2, 0, 0, 0);
      const F& al = a.co[0];
      return iff(F::sel(al, conj(a.pco[0], a.pco[1])), conj(F::sel(al, a.pco[0]), F::sel(al, a.pco[1])));
    };
    m["O5⊔"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 2, 0, 0, 0);
      const F& al = a.co[0];
      return iff(F::sel(al, F::gor(a.pco[0], a.pco[1])), F::gor(F::sel(al, a.pco[0]), F::sel(al, a.pco[1])));
    };
    m["O5⊃"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 1, 0, 0, 0);
      return iff(F::sel(a.co[0], F::sel(a.co[1], a.pco[0])), F::sel(conj(a.co[0], a.co[1]), a.pco[0]));
    };
    // vars: Y (distinct); vals: y then y'
    m["A1"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 0, 1);
      const std::size_t n = a.vars.size();
      if (a.vals.size() != 2 * n) throw Error(ErrorCode::IllTypedArgument, "A1 needs two value tuples");
      std::span<const Val> y(a.vals.data(), n), y2(a.vals.data() + n, n);
      if (std::equal(y.begin(), y.end(), y2.begin())) return std::nullopt;
      return to(tuple_literal(a.vars, y, Polarity::Eq), tuple_literal(a.vars, y2, Polarity::Neq));
    };
    // vars: X; vals: x
    m["A2"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 0, 1);
      const Var x = a.vars[0];
      const Val v = a.vals.at(0);
      return iff(F::neq(x, v), F::sel(F::eq(x, v), bot()));
    };
    // vars: Y (distinct)
    m["A3"] = [](const Signature& sig, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 0, 1);
      std::vector<F> parts;
      std::vector<Val> vals(a.vars.size(), 0);
      while (true) {
        parts.push_back(tuple_literal(a.vars, vals, Polarity::Eq));
        std::size_t i = vals.size();
        while (i > 0 && ++vals[i - 1] == sig.range_size(a.vars[i - 1])) vals[--i] = 0;
        if (i == 0) break;
      }
      return tensor_or_all(parts);
    };
    // specs: X=x; pco: ψ χ
    m["C1"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 2, 0, 1, 0);
      const auto& s = a.specs[0];
      return iff(F::cf(s, conj(a.pco[0], a.pco[1])), conj(F::cf(s, a.pco[0]), F::cf(s, a.pco[1])));
    };
    m["C2"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 2, 0, 1, 0);
      const auto& s = a.specs[0];
      return iff(F::cf(s, F::gor(a.pco[0], a.pco[1])), F::gor(F::cf(s, a.pco[0]), F::cf(s, a.pco[1])));
    };
    // specs: X=x; co: α; pco: χ
    m["C3"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 1, 0, 1, 0);
      const auto& s = a.specs[0];
      return iff(F::cf(s, F::sel(a.co[0], a.pco[0])), F::sel(F::cf(s, a.co[0]), F::cf(s, a.pco[0])));
    };
    // specs: X=x (consistent), Y=y; pco: χ
    m["C4"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 1, 0, 2, 0);
      const auto& [x, y] = std::tie(a.specs[0], a.specs[1]);
      if (!x.consistent()) return std::nullopt;
      return to(F::cf(x, F::cf(y, a.pco[0])), F::cf(x.overridden_by(y), a.pco[0]));
    };
    // specs: X=x, Y=y with X=x ∧ Y=y consistent; pco: χ
    m["C4b"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 1, 0, 2, 0);
      const auto& [x, y] = std::tie(a.specs[0], a.specs[1]);
      if (!(x + y).consistent()) return std::nullopt;
      return to(F::cf(x + y, a.pco[0]), F::cf(x, F::cf(y, a.pco[0])));
    };
    // specs: X=x (consistent); pco: ψ
    m["C5"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 1, 0, 1, 0);
      if (!a.specs[0].consistent()) return std::nullopt;
      return to(F::cf(a.specs[0], bot()), a.pco[0]);
    };
    // specs: X=x; vars: Y; vals: y
    m["C6"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 1, 1);
      const Var y = a.vars[0];
      const Val v = a.vals.at(0);
      return F::cf(a.specs[0] + InterventionSpec({{y, v}}), F::eq(y, v));
    };
    // specs: X=x (consistent); pco: γ without ▷
    m["C7"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 1, 0, 1, 0);
      const auto& s = a.specs[0];
      if (!s.consistent() || a.pco[0].has_counterfactual()) return std::nullopt;
      return to(conj(spec_formula(s), a.pco[0]), F::cf(s, a.pco[0]));
    };
    // specs: X=x (consistent); co: α; q: ε; variant: comparison
    m["C8"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 1, 0, 1, 1, 0);
      const auto& s = a.specs[0];
      if (!s.consistent()) return std::nullopt;
      const Cmp c = cmp_of(a.variant);
      return iff(F::cf(s, F::prob(a.co[0], c, a.q[0])), F::prob(F::cf(s, a.co[0]), c, a.q[0]));
    };
    // specs: X=x (consistent); co: α β; variant: comparison
    m["C8b"] = [](const Signature&, const SchemaArgs& a) -> std::optional<F> {
      need(a, 2, 0, 0, 1, 0);
      const auto& s = a.specs[0];
      if (!s.consistent()) return std::nullopt;
      const Cmp c = cmp_of(a.variant);
      return iff(F::cf(s, F::prob_cmp(a.co[0], c, a.co[1])),
                 F::prob_cmp(F::cf(s, a.co[0]), c, F::cf(s, a.co[1])));
    };
    // vars: Y; vals: w over W_Y
    m["C9"] = [](const Signature& sig, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 0, 1);
      const Var y = a.vars[0];
      const auto ws = all_but(sig, y);
      if (a.vals.size() != ws.size()) throw Error(ErrorCode::IllTypedArgument, "C9 needs a value for every other variable");
      std::vector<F> lits;
      for (Val v = 0; v < sig.range_size(y); ++v) lits.push_back(F::eq(y, v));
      return to(build_end(sig, y), F::cf(spec_of(ws, a.vals), gor_all(lits)));
    };
    // vars: Y; vals: y followed by w over W_Y
    m["C10"] = [](const Signature& sig, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 0, 1);
      const Var y = a.vars[0];
      const auto ws = all_but(sig, y);
      if (a.vals.size() != ws.size() + 1) throw Error(ErrorCode::IllTypedArgument, "C10 needs y and a value for every other variable");
      const Val v = a.vals[0];
      return to(build_exo(sig, y),
                F::sel(F::eq(y, v), F::cf(spec_of(ws, std::span<const Val>(a.vals).subspan(1)), F::eq(y, v))));
    };
    // vars: the chain X1 ... Xn
    m["C11"] = [](const Signature& sig, const SchemaArgs& a) -> std::optional<F> {
      need(a, 0, 0, 0, 0, 2);
      const auto& xs = a.vars;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i] == xs[i + 1]) return std::nullopt;
      if (xs.back() == xs.front()) return std::nullopt;
      std::vector<F> links;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) links.push_back(build_aff(sig, xs[i], xs[i + 1]));
      return to(conj_all(links), neg_c(build_aff(sig, xs.back(), xs.front())));
    };
    return m;
  }();
  return table;
}

const Builder& builder(std::string_view id) {
  const auto& m = builders();
  auto it = m.find(id);
  if (it == m.end()) throw Error(ErrorCode::UnknownSchema, "unknown schema '" + std::string(id) + "'");
  return it->second;
}

// Every value tuple over `vars`, lexicographic.
std::vector<std::vector<Val>> tuples(const Signature& sig, const std::vector<Var>& vars) {
  std::vector<std::vector<Val>> out;
  std::vector<Val> vals(vars.size(), 0);
  while (true) {
    out.push_back(vals);
    std::size_t i = vals.size();
    while (i > 0 && ++vals[i - 1] == sig.range_size(vars[i - 1])) vals[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<std::vector<Var>> subsets(const Signature& sig, std::uint64_t excluded, bool nonempty) {
  std::vector<Var> pool;
  for (Var v = 0; v < sig.size(); ++v)
    if (!((excluded >> v) & 1U)) pool.push_back(v);
  std::vector<std::vector<Var>> out;
  for (std::uint64_t m = nonempty ? 1 : 0; m < (std::uint64_t{1} << pool.size()); ++m) {
    std::vector<Var> s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((m >> i) & 1U) s.push_back(pool[i]);
    out.push_back(std::move(s));
  }
  return out;
}

// Argument lists for the schemas with finitely many instances.
std::vector<SchemaArgs> finite_args(std::string_view id, const Signature& sig) {
  std::vector<SchemaArgs> out;
  if (id == "A1") {
    for (const auto& ys : subsets(sig, 0, true)) {
      const auto ts = tuples(sig, ys);
      for (const auto& y : ts)
        for (const auto& y2 : ts) {
          if (y == y2) continue;
          SchemaArgs a;
          a.vars = ys;
          a.vals = y;
          a.vals.insert(a.vals.end(), y2.begin(), y2.end());
          out.push_back(std::move(a));
        }
    }
  } else if (id == "A2") {
    for (Var v = 0; v < sig.size(); ++v)
      for (Val x = 0; x < sig.range_size(v); ++x) out.push_back(SchemaArgs{.vars = {v}, .vals = {x}});
  } else if (id == "A3") {
    for (const auto& ys : subsets(sig, 0, true)) out.push_back(SchemaArgs{.vars = ys});
  } else if (id == "C6") {
    for (Var y = 0; y < sig.size(); ++y)
      for (Val v = 0; v < sig.range_size(y); ++v)
        for (const auto& xs : subsets(sig, std::uint64_t{1} << y, false))
          for (const auto& x : tuples(sig, xs)) out.push_back(SchemaArgs{.specs = {spec_of(xs, x)}, .vars = {y}, .vals = {v}});
  } else if (id == "C9") {
    for (Var y = 0; y < sig.size(); ++y)
      for (const auto& w : tuples(sig, all_but(sig, y))) out.push_back(SchemaArgs{.vars = {y}, .vals = w});
  } else if (id == "C10") {
    for (Var y = 0; y < sig.size(); ++y)
      for (Val v = 0; v < sig.range_size(y); ++v)
        for (const auto& w : tuples(sig, all_but(sig, y))) {
          SchemaArgs a{.vars = {y}, .vals = {v}};
          a.vals.insert(a.vals.end(), w.begin(), w.end());
          out.push_back(std::move(a));
        }
  } else if (id == "C11") {
    // chains of length 2 and 3
    for (Var a = 0; a < sig.size(); ++a)
      for (Var b = 0; b < sig.size(); ++b) {
        if (a == b) continue;
        out.push_back(SchemaArgs{.vars = {a, b}});
      }
    for (Var a = 0; a < sig.size(); ++a)
      for (Var b = 0; b < sig.size(); ++b)
        for (Var c = 0; c < sig.size(); ++c) {
          if (a == b || b == c || c == a) continue;
          out.push_back(SchemaArgs{.vars = {a, b, c}});
        }
  }
  return out;
}

SchemaArgs random_args(std::string_view id, FormulaGenerator& gen, std::size_t k) {
  constexpr std::size_t kDepth = 2;
  SchemaArgs a;
  a.variant = k;
  for (int i = 0; i < 3; ++i) a.co.push_back(gen.co(kDepth));
  for (int i = 0; i < 3; ++i) a.pco.push_back(id == "C7" ? gen.pco_plain(kDepth) : gen.pco(kDepth));
  for (int i = 0; i < 2; ++i) a.q.push_back(gen.rational());
  const bool strict = id == "C4" || id == "C4b" || id == "C5" || id == "C7" || id == "C8" || id == "C8b";
  for (int i = 0; i < 2; ++i) a.specs.push_back(gen.spec(!strict || i == 1));
  return a;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return seed ^ h;
}

}  // namespace

const std::vector<std::string>& schema_ids() {
  static const std::vector<std::string> ids = {
      "T1", "T2", "P1", "P2", "P3", "P3b", "P4", "P5", "P6", "P6b", "CP1", "CP2",
      "O1", "O1b", "O2", "O3", "O4", "O5∧", "O5⊔", "O5⊃", "A1", "A2", "A3", "C1",
      "C2", "C3", "C4", "C4b", "C5", "C6", "C7", "C8", "C8b", "C9", "C10", "C11"};
  return ids;
}

std::size_t schema_variants(std::string_view id) {
  builder(id);
  if (id == "T1") return kT1Templates;
  if (id == "T2") return kT2Templates;
  if (id == "C8" || id == "C8b") return 2;
  return 1;
}

bool schema_is_finite(std::string_view id) {
  builder(id);
  return id == "A1" || id == "A2" || id == "A3" || id == "C6" || id == "C9" || id == "C10" || id == "C11";
}

std::optional<Formula> build_schema(std::string_view id, const Signature& sig, const SchemaArgs& args) {
  auto f = builder(id)(sig, args);
  if (f) check_formula(sig, *f);
  return f;
}

std::vector<Formula> instantiate_schema(std::string_view id, const SignaturePtr& sig, std::size_t samples,
                                        std::uint64_t seed) {
  const Builder& build = builder(id);
  std::vector<Formula> out;
  if (schema_is_finite(id)) {
    auto args = finite_args(id, *sig);
    if (args.size() > samples) {
      std::mt19937_64 rng(mix_seed(seed, id));
      std::shuffle(args.begin(), args.end(), rng);
      args.resize(samples);
    }
    for (const auto& a : args)
      if (auto f = build(*sig, a)) out.push_back(*f);
    return out;
  }

  RandomFormulaOptions options;
  options.max_depth = 2;
  FormulaGenerator gen(sig, mix_seed(seed, id), options);
  std::unordered_set<Formula> seen;
  const std::size_t max_attempts = samples * 200 + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < samples; ++attempt) {
    auto f = build(*sig, random_args(id, gen, out.size()));
    if (f && seen.insert(*f).second) out.push_back(*f);
  }
  return out;
}

std::size_t SchemaReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return !r.verdict.holds; }));
}

SchemaReport check_schema(std::string_view id, const ModelSpace& space, std::size_t samples, std::uint64_t seed,
                          OracleOptions options) {
  SchemaReport report{std::string(id), seed, {}};
  const auto instances = instantiate_schema(id, space.budget().signature, samples, seed);
  for (std::size_t k = 0; k < instances.size(); ++k)
    report.instances.push_back({k, instances[k], check_validity(instances[k], space, options)});
  return report;
}

}  // namespace pco
