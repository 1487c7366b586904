#include "pco/printer.hpp"

#include "pco/defined.hpp"

namespace pco {

namespace {

bool atomic(const Formula& f) { return f.is_literal() || f == top() || f == bot(); }

void print(const Formula& f, const Signature& sig, std::string& out);

void operand(const Formula& f, const Signature& sig, std::string& out) {
  if (atomic(f)) {
    print(f, sig, out);
    return;
  }
  out += '(';
  print(f, sig, out);
  out += ')';
}

void binary(const Formula& a, const char* op, const Formula& b, const Signature& sig, std::string& out) {
  operand(a, sig, out);
  out += op;
  operand(b, sig, out);
}

void print(const Formula& f, const Signature& sig, std::string& out) {
  if (f == top()) {
    out += "TOP";
    return;
  }
  if (f == bot()) {
    out += "BOT";
    return;
  }
  if (auto ab = as_tensor_or(f)) {
    binary(ab->first, " \\/ ", ab->second, sig, out);
    return;
  }
  if (auto a = as_dual_neg(f)) {
    out += '~';
    operand(*a, sig, out);
    return;
  }
  switch (f.kind()) {
    case Kind::Eq:
    case Kind::Neq:
      out += sig.name(f.var());
      out += f.kind() == Kind::Eq ? "=" : "!=";
      out += sig.value_name(f.var(), f.val());
      return;
    case Kind::And:
      binary(f.left(), " & ", f.right(), sig, out);
      return;
    case Kind::GOr:
      binary(f.left(), " || ", f.right(), sig, out);
      return;
    case Kind::SelImp:
      binary(f.antecedent(), " => ", f.consequent(), sig, out);
      return;
    case Kind::Cf:
      out += '[';
      out += print_spec(f.spec(), sig);
      out += "] ";
      operand(f.body(), sig, out);
      return;
    case Kind::ProbConst:
      out += "P(";
      print(f.arg(), sig, out);
      out += f.cmp() == Cmp::Ge ? ") >= " : ") > ";
      out += f.threshold().str();
      return;
    case Kind::ProbProb:
      out += "P(";
      print(f.arg(), sig, out);
      out += f.cmp() == Cmp::Ge ? ") >= P(" : ") > P(";
      print(f.arg2(), sig, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string print_spec(const InterventionSpec& spec, const Signature& sig) {
  std::string out;
  for (const auto& [v, x] : spec.pairs()) {
    if (!out.empty()) out += ',';
    out += sig.name(v) + "=" + sig.value_name(v, x);
  }
  return out;
}

std::string print_formula(const Formula& phi, const Signature& sig) {
  check_formula(sig, phi);
  std::string out;
  print(phi, sig, out);
  return out;
}

}  // namespace pco
