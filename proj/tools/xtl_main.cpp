// Command-line front end: instantiate templates, validate instances against
// XTL schemas, and build partial-derivatives automata for string regexes.
//
// Exit codes: 0 success/valid, 1 invalid instance, 2 usage or input error,
// 3 recursion guard tripped.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xtl/derivatives.hpp"
#include "xtl/instantiate.hpp"
#include "xtl/mapping.hpp"
#include "xtl/query.hpp"
#include "xtl/validate.hpp"
#include "xtl/xml.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw xtl::InvalidInputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw xtl::InvalidInputError("cannot write file: " + path);
  out << content;
}

xtl::DocNode parse_file(const std::string& path) {
  try {
    return xtl::parse_document(read_file(path));
  } catch (const xtl::ParseError& e) {
    throw xtl::InvalidInputError(path + ": " + e.what());
  }
}

struct InstantiateArgs {
  std::string template_path;
  std::string data_path;
  std::string out_path;
  int max_depth = 512;
  bool dump_xtl = false;
};

int run_instantiate(const InstantiateArgs& args) {
  xtl::DocNode template_doc = parse_file(args.template_path);
  xtl::DocNode data_doc = parse_file(args.data_path);

  xtl::XtlNode template_term = xtl::doc_to_xtl(template_doc);
  if (args.dump_xtl) std::cout << xtl::to_debug_string(template_term) << "\n";

  xtl::DocQueryPlugin plugin(std::move(data_doc));
  xtl::InstantiateOptions opts;
  opts.max_macro_depth = args.max_depth;
  xtl::XtlNode instance =
      xtl::instantiate_start(template_term, plugin.root_context(), plugin, opts);

  std::string payload =
      xtl::serialize_document(xtl::canonicalize(xtl::xtl_to_doc(instance))) + "\n";
  if (args.out_path.empty())
    std::cout << payload;
  else
    write_file(args.out_path, payload);
  return kExitOk;
}

struct ValidateArgs {
  std::string schema_path;
  std::string instance_path;
  bool memo = false;
  bool dump_reg = false;
  bool json = false;
  int max_depth = 512;
};

int run_validate(const ValidateArgs& args) {
  xtl::DocNode schema_doc = parse_file(args.schema_path);
  xtl::DocNode instance_doc = parse_file(args.instance_path);

  if (args.dump_reg) {
    xtl::XtlNode schema_root = xtl::doc_to_xtl(schema_doc);
    auto [env, rest] = xtl::extract_macros_reg(schema_root.children);
    xtl::RegPtr schema_reg = xtl::normalize_reg(xtl::reg_element(
        schema_root.name, schema_root.attributes, xtl::hedge_to_reg(rest)));
    xtl::RegPtr instance_reg =
        xtl::normalize_reg(xtl::xtl_to_reg(xtl::doc_to_xtl(instance_doc)));
    std::cout << "schema:   " << xtl::to_debug_string(schema_reg) << "\n";
    for (const auto& [name, body] : env.entries)
      std::cout << "macro " << name << ": " << xtl::to_debug_string(body) << "\n";
    std::cout << "instance: " << xtl::to_debug_string(instance_reg) << "\n";
  }

  xtl::ValidateOptions opts;
  opts.memo = args.memo;
  opts.max_macro_depth = args.max_depth;
  xtl::ValidationResult result = xtl::validate_document(instance_doc, schema_doc, opts);

  if (args.json) {
    nlohmann::json j;
    j["valid"] = result.valid;
    j["last_valid_path"] = result.last_valid_path;
    std::cout << j.dump() << "\n";
  } else if (result.valid) {
    std::cout << "valid\n";
  } else {
    std::string path;
    for (int i : result.last_valid_path) path += "/" + std::to_string(i);
    if (path.empty()) path = "/";
    std::cout << "invalid " << path << "\n";
  }
  return result.valid ? kExitOk : kExitInvalid;
}

struct NfaArgs {
  std::string regex;
  std::string accepts;
  bool have_accepts = false;
  std::string dot_path;
};

int run_nfa(const NfaArgs& args) {
  xtl::SRegexPtr regex = xtl::parse_sregex(args.regex);
  xtl::Nfa nfa = xtl::build_nfa(regex);
  std::cout << xtl::transition_table(nfa);
  if (args.have_accepts)
    std::cout << (xtl::nfa_accepts(nfa, args.accepts) ? "true" : "false") << "\n";
  if (!args.dot_path.empty()) write_file(args.dot_path, xtl::to_dot(nfa));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"XTL template instantiation and schema validation"};
  app.require_subcommand(1);

  InstantiateArgs iargs;
  CLI::App* inst = app.add_subcommand("instantiate", "Expand a template with instantiation data");
  inst->add_option("-t,--template", iargs.template_path, "Template file")->required();
  inst->add_option("-d,--data", iargs.data_path, "Instantiation data file")->required();
  inst->add_option("-o,--out", iargs.out_path, "Output file (default: stdout)");
  inst->add_option("--max-depth", iargs.max_depth, "Macro recursion guard");
  inst->add_flag("--dump-xtl", iargs.dump_xtl, "Print the template term");

  ValidateArgs vargs;
  CLI::App* val = app.add_subcommand("validate", "Validate an instance against an XTL schema");
  val->add_option("-s,--schema", vargs.schema_path, "Schema file")->required();
  val->add_option("-i,--instance", vargs.instance_path, "Instance file")->required();
  val->add_flag("--memo", vargs.memo, "Memoize matcher verdicts");
  val->add_flag("--dump-reg", vargs.dump_reg, "Print both regular expressions");
  val->add_flag("--json", vargs.json, "Machine-readable result");
  val->add_option("--max-depth", vargs.max_depth, "Macro recursion guard");

  NfaArgs nargs;
  CLI::App* nfa = app.add_subcommand("nfa", "Build the partial-derivatives automaton of a regex");
  nfa->add_option("regex", nargs.regex, "Regular expression")->required();
  CLI::Option* acc = nfa->add_option("--accepts", nargs.accepts, "Additionally test a word");
  nfa->add_option("--dot", nargs.dot_path, "Write a DOT graph to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  nargs.have_accepts = acc->count() > 0;
  try {
    if (inst->parsed()) return run_instantiate(iargs);
    if (val->parsed()) return run_validate(vargs);
    if (nfa->parsed()) return run_nfa(nargs);
  } catch (const xtl::RecursionLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitLimit;
  } catch (const xtl::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
