#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

#include "neutro/dempster.hpp"
#include "neutro/errors.hpp"
#include "neutro/eval.hpp"
#include "neutro/expr.hpp"
#include "neutro/finite_set.hpp"
#include "neutro/value.hpp"

using namespace neutro;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_eval = 3;

const std::map<std::string, eval_family> family_names{
    {"algebraic", eval_family::algebraic_sets},
    {"product-tif", eval_family::product_tif},
    {"product-itf", eval_family::product_itf},
    {"minmax", eval_family::minmax},
};

const std::map<std::string, normalization_mode> normalize_names{
    {"none", normalization_mode::none},
    {"sum", normalization_mode::sum_to_one},
    {"product", normalization_mode::vector_norm_product},
    {"average", normalization_mode::vector_norm_average},
};

const std::map<std::string, negation_variant> negation_names{
    {"complement", negation_variant::complement},
    {"swap", negation_variant::swap},
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  return in;
}

std::string label_line(const std::set<regime_label>& labels) {
  std::string out;
  for (regime_label l : labels) {
    if (!out.empty())
      out += ", ";
    out += to_string(l);
  }
  return out;
}

hypothesis_set parse_hypothesis(const std::string& text) {
  hypothesis_set h;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty())
      h.insert(item);
  }
  if (h.empty())
    throw eval_error("empty hypothesis");
  return h;
}

int run_eval(const std::string& expr_text, const std::string& bindings_path,
             const eval_config& cfg, bool classify_result) {
  const expr_ptr e = parse_expr(expr_text);
  auto in = open_or_throw(bindings_path);
  const bindings env = load_bindings(in, bindings_path);
  const neutrosophic_value v = evaluate(e, env, cfg);
  std::cout << format_value(v) << "\n";
  if (classify_result)
    std::cout << label_line(classify(v)) << "\n";
  return exit_ok;
}

int run_classify(const std::string& triple_text) {
  const marked_value mv = parse_marked_value(triple_text);
  std::cout << label_line(classify(mv.value, &mv.markers)) << "\n";
  return exit_ok;
}

int run_fuse(const std::string& path1, const std::string& path2,
             const std::string& hypothesis, bool print_triple) {
  auto in1 = open_or_throw(path1);
  auto in2 = open_or_throw(path2);
  const mass_function m1 = load_mass_file(in1, path1);
  const mass_function m2 = load_mass_file(in2, path2);
  const double k = conflict(m1, m2);
  const mass_function combined = dempster_combine(m1, m2);

  for (const auto& [mask, m] : combined.focal()) {
    const auto subset = combined.to_subset(mask);
    std::string names;
    for (const auto& h : subset) {
      if (!names.empty())
        names += ",";
      names += h;
    }
    std::printf("{%s}: %.6f\n", names.c_str(), m);
  }
  std::printf("conflict K = %.6f\n", k);

  if (!hypothesis.empty()) {
    const hypothesis_set h = parse_hypothesis(hypothesis);
    const double before = (belief_plausibility(m1, h).belief +
                           belief_plausibility(m2, h).belief) /
                          2.0;
    const double after = belief_plausibility(combined, h).belief;
    std::printf("increment jump(%s) = %.4f%%\n", hypothesis.c_str(),
                increment_jump(before, after));
    if (print_triple)
      std::cout << "neutrosophic " << hypothesis << " = "
                << format_value(to_neutrosophic(combined, h)) << "\n";
  }
  return exit_ok;
}

int run_topology(const std::vector<std::string>& paths,
                 const std::string& check, const std::string& ops_name) {
  std::vector<neutrosophic_finite_set> family;
  for (const auto& path : paths) {
    auto in = open_or_throw(path);
    family.push_back(load_set_file(in, path));
  }
  const set_ops_family ops = ops_name == "algebraic"
                                 ? set_ops_family::algebraic
                                 : set_ops_family::minmax;
  const family_check_report report = check == "sigma"
                                         ? check_sigma_algebra(family, ops)
                                         : check_topology(family, ops);
  std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& violation : report.violations)
    std::cout << "  " << violation << "\n";
  return exit_ok;
}

int run_repl() {
  eval_config cfg;
  bindings env;
#if defined(__unix__) || defined(__APPLE__)
  const bool interactive = isatty(fileno(stdin));
#else
  const bool interactive = true;
#endif
  std::string line;
  while (true) {
    if (interactive)
      std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line))
      break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    try {
      if (line[first] == ':') {
        std::istringstream ss(line.substr(first + 1));
        std::string cmd, arg;
        ss >> cmd >> arg;
        if (cmd == "quit" || cmd == "q")
          break;
        if (cmd == "family") {
          auto it = family_names.find(arg);
          if (it == family_names.end())
            throw eval_error("unknown family '" + arg + "'");
          cfg.family = it->second;
        } else if (cmd == "normalize") {
          auto it = normalize_names.find(arg);
          if (it == normalize_names.end())
            throw eval_error("unknown normalization '" + arg + "'");
          cfg.normalization = it->second;
        } else if (cmd == "negation") {
          auto it = negation_names.find(arg);
          if (it == negation_names.end())
            throw eval_error("unknown negation '" + arg + "'");
          cfg.negation = it->second;
        } else {
          throw eval_error("unknown command ':" + cmd + "'");
        }
        continue;
      }
      const auto eq = line.find('=');
      const auto let_pos = line.find("let ");
      if (let_pos == first && eq != std::string::npos) {
        std::string name = line.substr(let_pos + 4, eq - let_pos - 4);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty())
          throw parse_error("expected `let name = (T; I; F)`");
        env.insert_or_assign(name, parse_value(line.substr(eq + 1)));
        continue;
      }
      const expr_ptr e = parse_expr(line);
      std::cout << format_value(evaluate(e, env, cfg)) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"subset-valued neutrosophic logic toolkit"};
  app.require_subcommand(1);

  std::string expr_text, bindings_path;
  std::string family_name = "algebraic", normalize_name = "none",
              negation_name = "complement";
  bool classify_flag = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula");
  eval_cmd->add_option("-e,--expr", expr_text, "formula text")->required();
  eval_cmd->add_option("-b,--bindings", bindings_path, "bindings file")
      ->required();
  eval_cmd->add_option("--family", family_name, "connective family")
      ->check(CLI::IsMember({"algebraic", "product-tif", "product-itf",
                             "minmax"}));
  eval_cmd->add_option("--normalize", normalize_name, "normalization mode")
      ->check(CLI::IsMember({"none", "sum", "product", "average"}));
  eval_cmd->add_option("--negation", negation_name, "negation variant")
      ->check(CLI::IsMember({"complement", "swap"}));
  eval_cmd->add_flag("--classify", classify_flag,
                     "print regime labels of the result");

  std::string triple_text;
  auto* classify_cmd = app.add_subcommand("classify", "classify a triple");
  classify_cmd->add_option("-v,--value", triple_text, "triple text")
      ->required();

  std::string mass1, mass2, hypothesis;
  bool neutrosophic_flag = false;
  auto* fuse_cmd = app.add_subcommand("fuse", "combine two mass files");
  fuse_cmd->add_option("mass1", mass1, "first mass file")->required();
  fuse_cmd->add_option("mass2", mass2, "second mass file")->required();
  fuse_cmd->add_option("--hypothesis", hypothesis,
                       "hypothesis (comma-joined for compound sets)");
  fuse_cmd->add_flag("--neutrosophic", neutrosophic_flag,
                     "print the Bel/Pl-derived triple");

  std::vector<std::string> set_paths;
  std::string check_kind, ops_name = "minmax";
  auto* topo_cmd = app.add_subcommand("topology", "check a family of sets");
  topo_cmd->add_option("files", set_paths, "set files")->required();
  topo_cmd->add_option("--check", check_kind, "topology or sigma")
      ->required()
      ->check(CLI::IsMember({"topology", "sigma"}));
  topo_cmd->add_option("--family", ops_name, "operator family")
      ->check(CLI::IsMember({"minmax", "algebraic"}));

  auto* repl_cmd = app.add_subcommand("repl", "interactive session");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*eval_cmd) {
      eval_config cfg;
      cfg.family = family_names.at(family_name);
      cfg.normalization = normalize_names.at(normalize_name);
      cfg.negation = negation_names.at(negation_name);
      return run_eval(expr_text, bindings_path, cfg, classify_flag);
    }
    if (*classify_cmd)
      return run_classify(triple_text);
    if (*fuse_cmd)
      return run_fuse(mass1, mass2, hypothesis, neutrosophic_flag);
    if (*topo_cmd)
      return run_topology(set_paths, check_kind, ops_name);
    if (*repl_cmd)
      return run_repl();
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what();
    if (e.line() > 0 && e.column() > 0)
      std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
    else if (e.line() > 0)
      std::cerr << " (line " << e.line() << ")";
    else if (e.column() > 0)
      std::cerr << " (column " << e.column() << ")";
    std::cerr << "\n";
    return exit_parse;
  } catch (const eval_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_eval;
  }
  return exit_usage;
}
