#include "pco/canonical.hpp"

#include <numeric>
#include <sstream>

#include "pco/error.hpp"
#include "pco/semantics.hpp"

namespace pco {

namespace {

std::string row_text(const Signature& sig, const Assignment& s) {
  std::string out = "(";
  for (Var v = 0; v < s.size(); ++v) {
    if (v) out += ", ";
    out += sig.name(v) + "=" + sig.value_name(v, s[v]);
  }
  return out + ")";
}

}  // namespace

mpz_class least_common_denominator(const AtomicDescription& desc) {
  mpz_class d = 1;
  for (const auto& [s, w] : desc.weights)
    if (!w.is_zero()) d = common_denominator(d, w.denominator());
  return d;
}

CausalMultiteam build_canonical(const AtomicDescription& desc) {
  const auto& sig = desc.signature();
  desc.laws.check_non_constant();
  Rational total;
  for (const auto& [s, w] : desc.weights) {
    check_assignment(sig, s);
    if (!w.in_unit_interval())
      throw Error(ErrorCode::WeightsNotNormalized, "weight " + w.str() + " of " + row_text(sig, s) + " is outside [0,1]");
    total += w;
  }
  if (total != Rational(1))
    throw Error(ErrorCode::WeightsNotNormalized, "weights sum to " + total.str() + ", not 1");

  const mpz_class d = least_common_denominator(desc);
  Multiteam team;
  for (const auto& [s, w] : desc.weights) {
    if (w.is_zero()) continue;
    if (!compatible(s, desc.laws))
      throw Error(ErrorCode::SupportIncompatible, "assignment " + row_text(sig, s) + " has positive weight but violates the laws");
    const mpz_class m = w.numerator() * (d / w.denominator());
    if (!m.fits_ulong_p()) throw Error(ErrorCode::Overflow, "multiplicity of " + row_text(sig, s) + " exceeds 64 bits");
    team.add(s, m.get_ui());
  }
  return CausalMultiteam::assume_valid(std::move(team), desc.laws);
}

AtomicDescription extract_description(const CausalMultiteam& model) {
  if (model.empty()) throw Error(ErrorCode::EmptyModel, "cannot describe an empty team");
  AtomicDescription desc{model.laws(), {}};
  for (const auto& [s, n] : model.team().rows()) {
    mpq_class q(mpz_class(n), mpz_class(model.size()));
    q.canonicalize();
    desc.weights.emplace(s, Rational(q));
  }
  return desc;
}

Formula full_assignment_formula(const Signature& sig, const Assignment& s) {
  check_assignment(sig, s);
  Formula acc = Formula::eq(static_cast<Var>(s.size() - 1), s.values.back());
  for (std::size_t i = s.size() - 1; i-- > 0;) acc = Formula::conj(Formula::eq(static_cast<Var>(i), s[static_cast<Var>(i)]), acc);
  return acc;
}

CausalMultiteam reduce_multiplicities(const CausalMultiteam& model) {
  std::uint64_t g = 0;
  for (const auto& [s, n] : model.team().rows()) g = std::gcd(g, n);
  if (g <= 1) return model;
  Multiteam team;
  for (const auto& [s, n] : model.team().rows()) team.add(s, n / g);
  return CausalMultiteam::assume_valid(std::move(team), model.laws());
}

bool CanonicalReport::ok() const {
  for (const auto& item : items)
    if (item.status == Status::Fail) return false;
  return true;
}

std::string CanonicalReport::str() const {
  std::ostringstream out;
  for (const auto& item : items) {
    out << "item " << item.number << " (" << item.name << "): "
        << (item.status == Status::Pass ? "pass" : item.status == Status::Fail ? "FAIL" : "n/a");
    if (!item.detail.empty()) out << " - " << item.detail;
    out << '\n';
  }
  return out.str();
}

CanonicalReport check_canonical_properties(const CausalMultiteam& model, const std::vector<Formula>& betas) {
  using Status = CanonicalReport::Status;
  CanonicalReport report;
  const auto& sig = model.signature();
  const auto& laws = model.laws();

  {
    std::string detail;
    for (const auto& [s, n] : model.team().rows())
      if (!compatible(s, laws)) {
        detail = "row " + row_text(sig, s) + " violates the laws";
        break;
      }
    report.items.push_back({1, "compatibility", detail.empty() ? Status::Pass : Status::Fail, detail});
  }
  {
    std::vector<std::vector<Var>> parents_of(sig.size());
    for (Var v : laws.endogenous()) parents_of[v] = parents(laws, v);
    auto cycle = find_cycle(parents_of);
    std::string detail;
    if (cycle) {
      detail = "cycle";
      for (Var v : *cycle) detail += " " + sig.name(v);
    }
    report.items.push_back({2, "acyclicity", cycle ? Status::Fail : Status::Pass, detail});
  }
  if (model.empty()) {
    for (int i = 3; i <= 6; ++i) report.items.push_back({i, i == 3 ? "weights sum" : i == 4 ? "denominator" : i == 5 ? "atom probabilities" : "sum identity", Status::NotApplicable, "empty team"});
    return report;
  }

  const auto desc = extract_description(model);
  {
    Rational total;
    for (const auto& [s, w] : desc.weights) total += w;
    report.items.push_back({3, "weights sum", total == Rational(1) ? Status::Pass : Status::Fail, "sum " + total.str()});
  }
  {
    const mpz_class d(mpz_class(model.size()));
    std::string detail;
    mpz_class sum = 0;
    for (const auto& [s, w] : desc.weights) {
      const mpq_class scaled = w.value() * d;
      if (scaled.get_den() != 1 || scaled.get_num() != mpz_class(model.team().multiplicity(s))) {
        detail = "multiplicity of " + row_text(sig, s) + " is not ε·|T⁻|";
        break;
      }
      sum += scaled.get_num();
    }
    if (detail.empty() && sum != d) detail = "multiplicities do not add up to |T⁻|";
    if (detail.empty()) detail = "d = " + d.get_str() + ", least = " + least_common_denominator(desc).get_str();
    report.items.push_back({4, "denominator", sum == d ? Status::Pass : Status::Fail, detail});
  }
  {
    std::string detail;
    for (const auto& [s, w] : desc.weights)
      if (prob(model, full_assignment_formula(sig, s)) != w) {
        detail = "P(α̂) differs from the weight at " + row_text(sig, s);
        break;
      }
    report.items.push_back({5, "atom probabilities", detail.empty() ? Status::Pass : Status::Fail, detail});
  }
  {
    std::string detail;
    for (std::size_t k = 0; k < betas.size() && detail.empty(); ++k) {
      Rational sum;
      for (const auto& [s, w] : desc.weights)
        if (eval_co_at(s, laws, betas[k])) sum += w;
      const Rational p = prob(model, betas[k]);
      if (p != sum) detail = "formula #" + std::to_string(k) + ": P = " + p.str() + ", sum = " + sum.str();
    }
    if (betas.empty())
      report.items.push_back({6, "sum identity", Status::NotApplicable, "no formulas supplied"});
    else
      report.items.push_back({6, "sum identity", detail.empty() ? Status::Pass : Status::Fail, detail});
  }
  return report;
}

}  // namespace pco
