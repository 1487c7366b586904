#include "pco/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "pco/error.hpp"

namespace pco {

namespace {

struct Word {
  std::string_view text;
  SourceSpan span;
};

// One logical line: words and single-character separators (':' ',') and
// arrows ('<-' '->').
struct Line {
  std::vector<Word> words;
  SourceSpan span;
};

struct Sections {
  std::map<std::string, std::vector<Line>, std::less<>> lines;
  std::map<std::string, SourceSpan, std::less<>> headers;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '/' ||
         (static_cast<unsigned char>(c) & 0x80);
}

std::vector<Word> split(std::string_view text, std::size_t offset, std::size_t begin, std::size_t end) {
  std::vector<Word> out;
  std::size_t i = begin;
  while (i < end) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (text.substr(i, 2) == "<-" || text.substr(i, 2) == "->") {
      out.push_back({text.substr(i, 2), {offset + i, offset + i + 2}});
      i += 2;
    } else if (c == ':' || c == ',') {
      out.push_back({text.substr(i, 1), {offset + i, offset + i + 1}});
      ++i;
    } else if (word_char(c)) {
      std::size_t j = i;
      while (j < end && word_char(text[j])) ++j;
      out.push_back({text.substr(i, j - i), {offset + i, offset + j}});
      i = j;
    } else {
      throw ParseError(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, c) + "'",
                       {offset + i, offset + i + 1});
    }
  }
  return out;
}

Sections read_sections(std::string_view text) {
  Sections out;
  std::string current;
  std::optional<Line> pending;  // a laws line ending in ','
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::size_t end = text.find('#', pos);
    if (end == std::string_view::npos || end > eol) end = eol;
    auto words = split(text, 0, pos, end);
    if (!words.empty()) {
      const SourceSpan span{words.front().span.start, words.back().span.end};
      const bool header = words.size() == 1 && (words[0].text == "signature" || words[0].text == "laws" ||
                                               words[0].text == "team" || words[0].text == "weights");
      if (header && !pending) {
        current = std::string(words[0].text);
        if (out.headers.count(current))
          throw ParseError(ErrorCode::SyntaxError, "section '" + current + "' appears twice", span);
        out.headers[current] = span;
        out.lines[current];
      } else {
        if (current.empty()) throw ParseError(ErrorCode::SyntaxError, "content before the first section", span);
        if (pending) {
          pending->words.insert(pending->words.end(), words.begin(), words.end());
          pending->span.end = span.end;
        } else {
          pending = Line{words, span};
        }
        if (!(current == "laws" && pending->words.back().text == ",")) {
          out.lines[current].push_back(std::move(*pending));
          pending.reset();
        }
      }
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (pending) throw ParseError(ErrorCode::SyntaxError, "law table ends with ','", pending->span);
  return out;
}

[[noreturn]] void fail(const std::string& msg, SourceSpan span, ErrorCode code = ErrorCode::SyntaxError) {
  throw ParseError(code, msg, span);
}

bool is_sym(const Word& w) { return w.text == ":" || w.text == "," || w.text == "<-" || w.text == "->"; }

SignaturePtr signature_from(const Sections& sections, std::string_view text) {
  auto it = sections.lines.find("signature");
  if (it == sections.lines.end()) fail("missing 'signature' section", {0, std::min<std::size_t>(text.size(), 1)});
  std::vector<Signature::Variable> vars;
  for (const auto& line : it->second) {
    const auto& w = line.words;
    if (w.size() < 3 || is_sym(w[0]) || w[1].text != ":")
      fail("expected 'NAME: value value ...'", line.span);
    Signature::Variable v{std::string(w[0].text), {}};
    for (std::size_t i = 2; i < w.size(); ++i) {
      if (is_sym(w[i])) fail("unexpected '" + std::string(w[i].text) + "'", w[i].span);
      for (const auto& seen : v.values)
        if (seen == w[i].text) fail("value '" + seen + "' listed twice", w[i].span);
      v.values.emplace_back(w[i].text);
    }
    for (const auto& other : vars)
      if (other.name == v.name) fail("variable '" + v.name + "' declared twice", w[0].span);
    vars.push_back(std::move(v));
  }
  if (vars.empty()) fail("the signature declares no variables", sections.headers.at("signature"));
  return make_signature(std::move(vars));
}

Val value_at(const Signature& sig, Var v, const Word& w) {
  if (is_sym(w)) fail("expected a value of " + sig.name(v), w.span);
  auto x = sig.find_value(v, w.text);
  if (!x) fail("value '" + std::string(w.text) + "' is not in the range of " + sig.name(v), w.span, ErrorCode::ValueOutOfRange);
  return *x;
}

FunctionComponent laws_from(const Sections& sections, const SignaturePtr& sig) {
  auto it = sections.lines.find("laws");
  if (it == sections.lines.end()) return FunctionComponent(sig);
  std::vector<LawTable> tables;
  std::vector<bool> seen_target(sig->size(), false);
  for (const auto& line : it->second) {
    const auto& w = line.words;
    if (w.size() < 2 || w[1].text != "<-") fail("expected 'V <- args -> value, ...'", line.span);
    auto target = sig->find(w[0].text);
    if (!target) fail("unknown variable '" + std::string(w[0].text) + "'", w[0].span, ErrorCode::UnknownVariable);
    const Var v = *target;
    if (seen_target[v]) fail("second law for " + sig->name(v), w[0].span);
    seen_target[v] = true;

    std::vector<Var> args;
    for (Var a = 0; a < sig->size(); ++a)
      if (a != v) args.push_back(a);
    // only used for its index arithmetic
    std::size_t entries = 1;
    for (Var a : args) entries *= sig->range_size(a);
    std::vector<std::optional<Val>> outputs(entries);
    LawTable shape(*sig, v, std::vector<Val>(entries, 0));

    std::size_t i = 2;
    while (i < w.size()) {
      Assignment s{std::vector<Val>(sig->size(), 0)};
      const SourceSpan entry_start = w[i].span;
      for (Var a : args) {
        if (i >= w.size()) fail("incomplete law entry", entry_start);
        s[a] = value_at(*sig, a, w[i++]);
      }
      if (i >= w.size() || w[i].text != "->") fail("expected '->'", i < w.size() ? w[i].span : line.span);
      ++i;
      if (i >= w.size()) fail("missing law value", line.span);
      const Val out = value_at(*sig, v, w[i]);
      const SourceSpan entry{entry_start.start, w[i].span.end};
      ++i;
      const std::size_t idx = shape.index_of(s);
      if (outputs[idx]) fail("duplicate law entry", entry);
      outputs[idx] = out;
      if (i < w.size()) {
        if (w[i].text != ",") fail("expected ',' between law entries", w[i].span);
        ++i;
      }
    }
    std::vector<Val> table(entries);
    for (std::size_t k = 0; k < entries; ++k) {
      if (!outputs[k]) {
        std::string tuple;
        const auto argv = shape.arguments_at(k);
        for (std::size_t j = 0; j < argv.size(); ++j) tuple += (j ? " " : "") + sig->value_name(args[j], argv[j]);
        fail("law for " + sig->name(v) + " has no entry for (" + tuple + ")", line.span);
      }
      table[k] = *outputs[k];
    }
    tables.emplace_back(*sig, v, std::move(table));
  }
  return FunctionComponent(sig, std::move(tables));
}

std::vector<Val> values_from(const Signature& sig, const std::vector<Word>& w, std::size_t from, std::size_t to,
                             SourceSpan line) {
  if (to - from != sig.size())
    fail("expected " + std::to_string(sig.size()) + " values, found " + std::to_string(to - from), line);
  std::vector<Val> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(value_at(sig, static_cast<Var>(i - from), w[i]));
  return out;
}

std::string law_lines(const FunctionComponent& laws) {
  const auto& sig = laws.signature();
  std::string out;
  for (Var v : laws.endogenous()) {
    const auto& t = laws.table(v);
    std::vector<Var> args;
    for (Var a = 0; a < sig.size(); ++a)
      if (a != v) args.push_back(a);
    out += sig.name(v) + " <-";
    for (std::size_t k = 0; k < t.entry_count(); ++k) {
      if (k > 0) out += (k % 8 == 0) ? ",\n   " : ",";
      const auto argv = t.arguments_at(k);
      for (std::size_t j = 0; j < argv.size(); ++j) out += " " + sig.value_name(args[j], argv[j]);
      out += " -> " + sig.value_name(v, t.outputs()[k]);
    }
    out += '\n';
  }
  return out;
}

std::string row_values(const Signature& sig, const Assignment& s) {
  std::string out;
  for (Var v = 0; v < s.size(); ++v) out += (v ? " " : "") + sig.value_name(v, s[v]);
  return out;
}

}  // namespace

SignaturePtr parse_signature(std::string_view text) {
  const auto sections = read_sections(text);
  return signature_from(sections, text);
}

std::string write_signature(const Signature& sig) {
  std::string out = "signature\n";
  for (const auto& v : sig.variables()) {
    out += v.name + ":";
    for (const auto& x : v.values) out += " " + x;
    out += '\n';
  }
  return out;
}

CausalMultiteam parse_model(std::string_view text) {
  const auto sections = read_sections(text);
  if (sections.lines.count("weights")) fail("a model file has no 'weights' section", sections.headers.at("weights"));
  const auto sig = signature_from(sections, text);
  auto laws = laws_from(sections, sig);
  Multiteam team;
  if (auto it = sections.lines.find("team"); it != sections.lines.end()) {
    for (const auto& line : it->second) {
      const auto& w = line.words;
      if (w.size() < 2 || w[1].text != ":") fail("expected 'count: values...'", line.span);
      std::uint64_t count = 0;
      try {
        std::size_t used = 0;
        count = std::stoull(std::string(w[0].text), &used);
        if (used != w[0].text.size() || count == 0) throw std::invalid_argument("count");
      } catch (const std::exception&) {
        fail("multiplicity must be a positive integer", w[0].span);
      }
      team.add(Assignment{values_from(*sig, w, 2, w.size(), line.span)}, count);
    }
  }
  return validate_model(std::move(team), std::move(laws));
}

std::string write_model(const CausalMultiteam& model) {
  const auto& sig = model.signature();
  std::string out = write_signature(sig);
  if (!model.laws().endogenous().empty()) out += "\nlaws\n" + law_lines(model.laws());
  out += "\nteam\n";
  for (const auto& [s, n] : model.team().rows()) out += std::to_string(n) + ": " + row_values(sig, s) + '\n';
  return out;
}

AtomicDescription parse_description(std::string_view text) {
  const auto sections = read_sections(text);
  if (sections.lines.count("team")) fail("a description file has no 'team' section", sections.headers.at("team"));
  const auto sig = signature_from(sections, text);
  AtomicDescription desc{laws_from(sections, sig), {}};
  if (auto it = sections.lines.find("weights"); it != sections.lines.end()) {
    for (const auto& line : it->second) {
      const auto& w = line.words;
      std::size_t colon = 0;
      while (colon < w.size() && w[colon].text != ":") ++colon;
      if (colon + 2 != w.size()) fail("expected 'values... : p/q'", line.span);
      Assignment s{values_from(*sig, w, 0, colon, line.span)};
      Rational r;
      try {
        r = Rational::parse(w.back().text);
      } catch (const Error&) {
        fail("malformed weight '" + std::string(w.back().text) + "'", w.back().span);
      }
      if (desc.weights.count(s)) fail("assignment weighted twice", line.span);
      desc.weights.emplace(std::move(s), r);
    }
  }
  return desc;
}

std::string write_description(const AtomicDescription& desc) {
  const auto& sig = desc.signature();
  std::string out = write_signature(sig);
  out += "\nweights\n";
  for (const auto& [s, w] : desc.weights) out += row_values(sig, s) + " : " + w.str() + '\n';
  if (!desc.laws.endogenous().empty()) out += "\nlaws\n" + law_lines(desc.laws);
  return out;
}

}  // namespace pco
