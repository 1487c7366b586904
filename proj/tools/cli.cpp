#include "pco_cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pco/pco.hpp"

namespace pco::cli {

namespace {

// Input problems that should exit with status 2.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError{"cannot write '" + path + "'"};
  file << text;
}

// 1-based line and column of a byte offset.
std::string position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

template <typename Fn>
auto with_file(const std::string& path, Fn&& fn) {
  const std::string text = read_file(path);
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw InputError{path + ":" + position(text, e.span().start) + ": " + e.what()};
  }
}

CausalMultiteam load_model(const std::string& path) {
  return with_file(path, [](const std::string& t) { return parse_model(t); });
}

SignaturePtr load_signature(const std::string& path) {
  return with_file(path, [](const std::string& t) { return parse_signature(t); });
}

Formula formula_arg(const std::string& text, const Signature& sig) {
  try {
    return parse_formula(text, sig);
  } catch (const ParseError& e) {
    throw InputError{e.annotate(text)};
  }
}

Formula co_arg(const std::string& text, const Signature& sig) {
  Formula f = formula_arg(text, sig);
  if (!f.is_co()) throw InputError{"expected a CO formula: " + text};
  return f;
}

std::string schema_id(const std::string& id) {
  static const std::map<std::string, std::string> aliases = {
      {"O5and", "O5∧"}, {"O5or", "O5⊔"}, {"O5sel", "O5⊃"}, {"O5imp", "O5⊃"}};
  auto it = aliases.find(id);
  return it == aliases.end() ? id : it->second;
}

std::string file_safe(const std::string& id) {
  static const std::map<std::string, std::string> names = {{"O5∧", "O5and"}, {"O5⊔", "O5or"}, {"O5⊃", "O5sel"}};
  auto it = names.find(id);
  return it == names.end() ? id : it->second;
}

void print_verdict(const Verdict& v, const ModelSpace& space, const char* good, std::ostream& out) {
  if (v.holds) {
    out << good << " (" << space.size() << " models, max-rows " << space.budget().max_rows << ")\n";
    return;
  }
  out << "countermodel #" << v.countermodel_index << " of " << space.size() << ":\n" << write_model(*v.countermodel);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Causal multiteam semantics for probabilistic counterfactual logic", "pco"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string model_path, formula_text, out_path, sig_path, spec_text, desc_path, schema, out_dir;
  std::vector<std::string> premises;
  std::size_t max_rows = 3, samples = 50;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool push = false, trace = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a model; prints true or false");
  eval->add_option("model", model_path, "Model file")->required();
  eval->add_option("formula", formula_text, "Formula")->required();

  auto* prob_cmd = app.add_subcommand("prob", "Exact probability of a CO formula");
  prob_cmd->add_option("model", model_path, "Model file")->required();
  prob_cmd->add_option("formula", formula_text, "CO formula")->required();

  auto* intervene_cmd = app.add_subcommand("intervene", "Apply do(X=x) and print the resulting model");
  intervene_cmd->add_option("model", model_path, "Model file")->required();
  intervene_cmd->add_option("spec", spec_text, "Assignments like X=1,Y=2")->required();
  intervene_cmd->add_option("-o,--output", out_path, "Write the model here instead of stdout");

  auto* observe_cmd = app.add_subcommand("observe", "Keep the rows satisfying a CO formula");
  observe_cmd->add_option("model", model_path, "Model file")->required();
  observe_cmd->add_option("formula", formula_text, "CO formula")->required();
  observe_cmd->add_option("-o,--output", out_path, "Write the model here instead of stdout");

  auto* nf = app.add_subcommand("nf", "Normal form of a formula");
  nf->add_option("formula", formula_text, "Formula")->required();
  nf->add_option("--sig", sig_path, "Signature file")->required();
  nf->add_flag("--push-prob", push, "Also move counterfactuals inside probabilities");
  nf->add_flag("--trace", trace, "Print every rewrite step to stderr");

  auto* negc = app.add_subcommand("negc", "Weak contradictory negation of a formula");
  negc->add_option("formula", formula_text, "Formula")->required();
  negc->add_option("--sig", sig_path, "Signature file")->required();

  auto* canonical = app.add_subcommand("canonical", "Build the canonical model of a description");
  canonical->add_option("description", desc_path, "Description file")->required();
  canonical->add_option("-o,--output", out_path, "Write the model here instead of stdout");

  auto* validity = app.add_subcommand("validity", "Search every small model for a countermodel");
  validity->add_option("formula", formula_text, "Formula")->required();
  validity->add_option("--sig", sig_path, "Signature file")->required();
  validity->add_option("--max-rows", max_rows, "Largest team size enumerated")->required();
  validity->add_option("--threads", threads, "Worker threads")->capture_default_str();

  auto* entails = app.add_subcommand("entails", "Search every small model of the premises for a countermodel");
  entails->add_option("formula", formula_text, "Conclusion")->required();
  entails->add_option("--premise", premises, "Premise (repeatable)")->allow_extra_args(false);
  entails->add_option("--sig", sig_path, "Signature file")->required();
  entails->add_option("--max-rows", max_rows, "Largest team size enumerated")->required();
  entails->add_option("--threads", threads, "Worker threads")->capture_default_str();

  auto* axiom = app.add_subcommand("axiom-check", "Check instances of an axiom schema on every small model");
  axiom->add_option("--schema", schema, "Schema id (T1 ... C11, or all)")->required();
  axiom->add_option("--sig", sig_path, "Signature file")->required();
  axiom->add_option("--samples", samples, "Instances per schema")->required();
  axiom->add_option("--max-rows", max_rows, "Largest team size enumerated")->required();
  axiom->add_option("--seed", seed, "Random seed")->capture_default_str();
  axiom->add_option("--out-dir", out_dir, "Directory for countermodel files")->capture_default_str();
  axiom->add_option("--threads", threads, "Worker threads")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      const auto model = load_model(model_path);
      const bool holds = eval_pco(model, formula_arg(formula_text, model.signature()));
      out << (holds ? "true" : "false") << '\n';
      return holds ? 0 : 1;
    }
    if (prob_cmd->parsed()) {
      const auto model = load_model(model_path);
      out << prob(model, co_arg(formula_text, model.signature())) << '\n';
      return 0;
    }
    if (intervene_cmd->parsed()) {
      const auto model = load_model(model_path);
      InterventionSpec spec;
      try {
        spec = parse_intervention(spec_text, model.signature());
      } catch (const ParseError& e) {
        throw InputError{e.annotate(spec_text)};
      }
      write_text(out_path, write_model(intervene(model, spec)), out);
      return 0;
    }
    if (observe_cmd->parsed()) {
      const auto model = load_model(model_path);
      write_text(out_path, write_model(observe(model, co_arg(formula_text, model.signature()))), out);
      return 0;
    }
    if (nf->parsed()) {
      const auto sig = load_signature(sig_path);
      RewriteOptions options;
      if (trace)
        options.trace = [&](const RewriteStep& s) {
          err << to_string(s.rule) << ": " << print_formula(s.after, *sig) << '\n';
        };
      Formula f = normal_form(formula_arg(formula_text, *sig), options);
      if (push) f = push_prob_inward(f, options);
      out << print_formula(f, *sig) << '\n';
      return 0;
    }
    if (negc->parsed()) {
      const auto sig = load_signature(sig_path);
      out << print_formula(neg_c(formula_arg(formula_text, *sig)), *sig) << '\n';
      return 0;
    }
    if (canonical->parsed()) {
      const auto desc = with_file(desc_path, [](const std::string& t) { return parse_description(t); });
      write_text(out_path, write_model(build_canonical(desc)), out);
      return 0;
    }
    if (validity->parsed() || entails->parsed()) {
      const auto sig = load_signature(sig_path);
      const ModelSpace space(EnumerationBudget{sig, max_rows, {}});
      std::vector<Formula> prem;
      for (const auto& p : premises) prem.push_back(formula_arg(p, *sig));
      const Verdict v = check_entailment(prem, formula_arg(formula_text, *sig), space, OracleOptions{threads});
      print_verdict(v, space, validity->parsed() ? "valid-on-budget" : "holds-on-budget", out);
      return v.holds ? 0 : 1;
    }
    if (axiom->parsed()) {
      const auto sig = load_signature(sig_path);
      const ModelSpace space(EnumerationBudget{sig, max_rows, {}});
      std::vector<std::string> ids;
      if (schema == "all")
        ids = schema_ids();
      else
        ids.push_back(schema_id(schema));
      if (out_dir.empty()) out_dir = ".";
      out << "# seed " << seed << ", max-rows " << max_rows << ", " << space.size() << " models per instance\n"
          << "# VALID means valid-on-budget: no countermodel among the enumerated models\n";
      bool all_valid = true;
      for (const auto& id : ids) {
        const auto report = check_schema(id, space, samples, seed, OracleOptions{threads});
        for (const auto& r : report.instances) {
          out << "SCHEMA " << id << " instance " << r.k << ": ";
          if (r.verdict.holds) {
            out << "VALID\n";
            continue;
          }
          all_valid = false;
          std::filesystem::create_directories(out_dir);
          const auto file = (std::filesystem::path(out_dir) /
                             ("countermodel-" + file_safe(id) + "-" + std::to_string(r.k) + ".model"))
                                .string();
          write_text(file, "# " + print_formula(r.formula, *sig) + "\n" + write_model(*r.verdict.countermodel), out);
          out << "FAIL " << file << '\n';
        }
      }
      return all_valid ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << (e.message.starts_with("error:") ? "" : "error: ") << e.message << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pco::cli
