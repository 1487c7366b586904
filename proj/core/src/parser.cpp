#include "pco/parser.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <vector>

#include "pco/defined.hpp"
#include "pco/error.hpp"

namespace pco {

namespace {

enum class Tok { Word, Sym, End };

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

constexpr std::array<std::string_view, 22> kSymbols = {
    "<=>", "<->", "->", "=>", "!=", ">=", "<=", "\\/", "||", "=", ">", "<",
    "&",   "~",   "!",  "[",  "]",  "(",  ")",  ",",   "|",  "/"};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back({Tok::Word, text.substr(i, j - i), {i, j}});
      i = j;
      continue;
    }
    bool matched = false;
    for (auto sym : kSymbols) {  // longest symbols come first
      if (text.substr(i, sym.size()) == sym) {
        out.push_back({Tok::Sym, sym, {i, i + sym.size()}});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t j = i + 1;
      while (j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
      throw ParseError(ErrorCode::SyntaxError, "unexpected character '" + std::string(text.substr(i, j - i)) + "'",
                       {i, j});
    }
  }
  out.push_back({Tok::End, {}, {text.size(), text.size()}});
  return out;
}

// A formula together with the span it was parsed from.
struct Node {
  Formula f;
  SourceSpan span;
};

// Pr(α | γ) before a comparison is applied.
struct ProbTerm {
  Formula arg;
  std::optional<Formula> cond;
  SourceSpan span;
};

class Parser {
public:
  Parser(std::string_view text, const Signature& sig) : sig_(sig), toks_(lex(text)) {}

  Formula formula() {
    Node n = conditional();
    expect_end();
    return n.f;
  }

  InterventionSpec spec_only() {
    const bool bracket = accept("[");
    auto s = spec_body();
    if (bracket) expect("]");
    expect_end();
    return s;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(std::string_view sym) const { return peek().kind == Tok::Sym && peek().text == sym; }
  bool accept(std::string_view sym) {
    if (!at(sym)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(std::string_view sym) {
    if (!at(sym)) fail("expected '" + std::string(sym) + "'", peek().span);
    return toks_[pos_++];
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + std::string(peek().text) + "'", peek().span);
  }

  [[noreturn]] void fail(const std::string& msg, SourceSpan span, ErrorCode code = ErrorCode::SyntaxError) const {
    throw ParseError(code, msg, span);
  }

  static SourceSpan join(SourceSpan a, SourceSpan b) { return {a.start, b.end}; }

  void require_co(const Node& n, const char* what) const {
    if (!n.f.is_co())
      fail(std::string(what) + " needs a CO formula here", n.span, ErrorCode::CoFragmentViolation);
  }

  Node conditional() {
    Node lhs = disjunction();
    for (std::string_view op : {"=>", "->", "<->", "<=>"}) {
      if (!at(op)) continue;
      ++pos_;
      Node rhs = conditional();
      const SourceSpan span = join(lhs.span, rhs.span);
      if (op == "=>") {
        require_co(lhs, "the antecedent of =>");
        return {Formula::sel(lhs.f, rhs.f), span};
      }
      if (op == "->") return {implies(lhs.f, rhs.f), span};
      if (op == "<->") return {iff(lhs.f, rhs.f), span};
      require_co(lhs, "<=>");
      require_co(rhs, "<=>");
      return {co_equiv(lhs.f, rhs.f), span};
    }
    return lhs;
  }

  Node disjunction() {
    Node lhs = conjunction();
    while (at("\\/") || at("||")) {
      const bool tensor = at("\\/");
      ++pos_;
      Node rhs = conjunction();
      const SourceSpan span = join(lhs.span, rhs.span);
      if (tensor) {
        require_co(lhs, "\\/");
        require_co(rhs, "\\/");
        lhs = {tensor_or(lhs.f, rhs.f), span};
      } else {
        lhs = {Formula::gor(lhs.f, rhs.f), span};
      }
    }
    return lhs;
  }

  Node conjunction() {
    Node lhs = unary();
    while (accept("&")) {
      Node rhs = unary();
      lhs = {Formula::conj(lhs.f, rhs.f), join(lhs.span, rhs.span)};
    }
    return lhs;
  }

  Node unary() {
    const SourceSpan start = peek().span;
    if (accept("~")) {
      Node n = unary();
      require_co(n, "~");
      return {dual_neg(n.f), join(start, n.span)};
    }
    if (accept("!")) {
      Node n = unary();
      return {neg_c(n.f), join(start, n.span)};
    }
    if (accept("[")) {
      InterventionSpec s = at("]") ? InterventionSpec() : spec_body();
      expect("]");
      Node n = unary();
      return {Formula::cf(std::move(s), n.f), join(start, n.span)};
    }
    return primary();
  }

  Node primary() {
    const Token& t = peek();
    if (accept("(")) {
      Node n = conditional();
      const Token& close = expect(")");
      return {n.f, join(t.span, close.span)};
    }
    if (t.kind != Tok::Word) fail(t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + std::string(t.text) + "'", t.span);
    if (t.text == "TOP") {
      ++pos_;
      return {top(), t.span};
    }
    if (t.text == "BOT") {
      ++pos_;
      return {bot(), t.span};
    }
    if (t.text == "P" && toks_[pos_ + 1].kind == Tok::Sym && toks_[pos_ + 1].text == "(") return probability();
    return literal();
  }

  Node literal() {
    const Token& name = toks_[pos_++];
    const auto v = sig_.find(name.text);
    if (!v) fail("unknown variable '" + std::string(name.text) + "'", name.span, ErrorCode::UnknownVariable);
    bool eq = true;
    if (accept("!=")) eq = false;
    else if (!accept("=")) fail("expected '=' or '!=' after " + std::string(name.text), peek().span);
    const Token& value = peek();
    if (value.kind != Tok::Word) fail("expected a value", value.span);
    ++pos_;
    const auto x = sig_.find_value(*v, value.text);
    if (!x)
      fail("value '" + std::string(value.text) + "' is not in the range of " + std::string(name.text), value.span,
           ErrorCode::ValueOutOfRange);
    return {eq ? Formula::eq(*v, *x) : Formula::neq(*v, *x), join(name.span, value.span)};
  }

  InterventionSpec spec_body() {
    std::vector<InterventionSpec::Pair> pairs;
    do {
      const SourceSpan start = peek().span;
      if (peek().kind != Tok::Word) fail("expected an assignment X=x", start);
      Node lit = literal();
      if (lit.f.kind() != Kind::Eq) fail("interventions take equalities only", lit.span);
      pairs.emplace_back(lit.f.var(), lit.f.val());
    } while (accept(","));
    return InterventionSpec(std::move(pairs));
  }

  ProbTerm prob_term() {
    const Token& p = toks_[pos_++];  // "P"
    expect("(");
    Node arg = conditional();
    require_co(arg, "P(...)");
    std::optional<Formula> cond;
    if (accept("|")) {
      Node g = conditional();
      require_co(g, "the condition of P(...|...)");
      cond = g.f;
    }
    const Token& close = expect(")");
    return {arg.f, cond, join(p.span, close.span)};
  }

  Rational threshold() {
    const Token& num = peek();
    if (num.kind != Tok::Word) fail("expected a probability threshold", num.span);
    ++pos_;
    std::string text(num.text);
    SourceSpan span = num.span;
    if (accept("/")) {
      const Token& den = peek();
      if (den.kind != Tok::Word) fail("expected a denominator", den.span);
      ++pos_;
      text += "/" + std::string(den.text);
      span = join(span, den.span);
    }
    Rational r;
    try {
      r = Rational::parse(text);
    } catch (const Error&) {
      fail("malformed rational '" + text + "'", span);
    }
    if (!r.in_unit_interval()) fail("threshold " + r.str() + " is outside [0,1]", span);
    return r;
  }

  Node probability() {
    ProbTerm lhs = prob_term();
    std::string_view op;
    for (std::string_view cand : {">=", ">", "<=", "<", "=", "!="})
      if (at(cand)) {
        op = cand;
        break;
      }
    if (op.empty()) {
      // a bare probability term used as an operand of a connective
      for (std::string_view conn : {"\\/", "&", "||", "=>", "->", "<->", "<=>"})
        if (at(conn))
          fail("P(...) is a term, not a CO formula; compare it with a threshold before using '" +
                   std::string(conn) + "'",
               lhs.span, ErrorCode::CoFragmentViolation);
      fail("expected a comparison after P(...)", peek().span);
    }
    ++pos_;

    if (peek().kind == Tok::Word && peek().text == "P" && toks_[pos_ + 1].kind == Tok::Sym &&
        toks_[pos_ + 1].text == "(") {
      ProbTerm rhs = prob_term();
      const SourceSpan span = join(lhs.span, rhs.span);
      if (lhs.cond.has_value() != rhs.cond.has_value() || (lhs.cond && !(*lhs.cond == *rhs.cond)))
        fail("both sides of a comparison must share the same condition", span);
      const Formula& a = lhs.arg;
      const Formula& b = rhs.arg;
      Formula f = [&] {
        if (op == ">=") return Formula::prob_cmp(a, Cmp::Ge, b);
        if (op == ">") return Formula::prob_cmp(a, Cmp::Gt, b);
        if (op == "<=") return Formula::prob_cmp(b, Cmp::Ge, a);
        if (op == "<") return Formula::prob_cmp(b, Cmp::Gt, a);
        if (op == "=") return Formula::conj(Formula::prob_cmp(a, Cmp::Ge, b), Formula::prob_cmp(b, Cmp::Ge, a));
        return Formula::gor(Formula::prob_cmp(a, Cmp::Gt, b), Formula::prob_cmp(b, Cmp::Gt, a));
      }();
      if (lhs.cond) f = Formula::sel(*lhs.cond, f);
      return {f, span};
    }

    const Rational eps = threshold();
    const SourceSpan span = join(lhs.span, toks_[pos_ - 1].span);
    const Formula& a = lhs.arg;
    Formula f = [&] {
      if (op == ">=") return prob_ge(a, eps);
      if (op == ">") return prob_gt(a, eps);
      if (op == "<=") return prob_le(a, eps);
      if (op == "<") return prob_lt(a, eps);
      if (op == "=") return prob_eq(a, eps);
      return prob_ne(a, eps);
    }();
    if (lhs.cond) f = Formula::sel(*lhs.cond, f);
    return {f, span};
  }

  const Signature& sig_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).formula(); }

InterventionSpec parse_intervention(std::string_view text, const Signature& sig) {
  return Parser(text, sig).spec_only();
}

}  // namespace pco
