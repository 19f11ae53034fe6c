#include "neutro/eval.hpp"

#include <cctype>
#include <istream>

#include "neutro/errors.hpp"

namespace neutro {

namespace {

[[noreturn]] void unsupported(const char* what, const char* family) {
  throw eval_error(std::string("connective ") + what +
                   " is not defined for the " + family + " family");
}

neutrosophic_value apply_negation(const eval_config& cfg,
                                  const neutrosophic_value& v) {
  return cfg.negation == negation_variant::complement ? alg_not(v) : n_swap(v);
}

neutrosophic_value apply_binary(const eval_config& cfg, connective op,
                                const neutrosophic_value& l,
                                const neutrosophic_value& r) {
  switch (cfg.family) {
  case eval_family::algebraic_sets:
    switch (op) {
    case connective::and_: return alg_and(l, r);
    case connective::or_weak: return alg_or_weak(l, r);
    case connective::or_strong: return alg_or_strong(l, r);
    case connective::implies: return alg_implies(l, r);
    case connective::iff: return alg_iff(l, r);
    case connective::nand_: return alg_sheffer(l, r);
    case connective::nor_: return alg_peirce(l, r);
    default: break;
    }
    break;
  case eval_family::product_tif:
  case eval_family::product_itf: {
    const bool tif = cfg.family == eval_family::product_tif;
    switch (op) {
    case connective::and_:
      return conj_product(tif ? component_order::tif : component_order::itf,
                          l, r);
    case connective::or_weak:
      return disj_product(tif ? component_order::fit : component_order::fti,
                          l, r);
    default:
      unsupported(op == connective::or_strong  ? "^"
                  : op == connective::implies  ? "->"
                  : op == connective::iff      ? "<->"
                  : op == connective::nand_    ? "NAND"
                                               : "NOR",
                  "product");
    }
    break;
  }
  case eval_family::minmax:
    switch (op) {
    case connective::and_: return conj_min_max(l, r);
    case connective::or_weak: return disj_min_max(l, r);
    default:
      unsupported(op == connective::or_strong  ? "^"
                  : op == connective::implies  ? "->"
                  : op == connective::iff      ? "<->"
                  : op == connective::nand_    ? "NAND"
                                               : "NOR",
                  "minmax");
    }
    break;
  }
  throw eval_error("unreachable connective dispatch");
}

neutrosophic_value normalize_result(const eval_config& cfg,
                                    const neutrosophic_value& l,
                                    const neutrosophic_value& r,
                                    const neutrosophic_value& result) {
  switch (cfg.normalization) {
  case normalization_mode::none:
    return result;
  case normalization_mode::sum_to_one:
    return normalize(result, cfg.normalization);
  case normalization_mode::vector_norm_product:
    return normalize(result, cfg.normalization,
                     vector_norm(l) * vector_norm(r));
  case normalization_mode::vector_norm_average:
    return normalize(result, cfg.normalization,
                     (vector_norm(l) + vector_norm(r)) / 2.0);
  }
  return result;
}

neutrosophic_value eval_node(const expr& e, const bindings& env,
                             const eval_config& cfg) {
  switch (e.node) {
  case expr::kind::atom: {
    auto it = env.find(e.name);
    if (it == env.end())
      throw eval_error("unbound atom '" + e.name + "'");
    return it->second;
  }
  case expr::kind::unary:
    return apply_negation(cfg, eval_node(*e.lhs, env, cfg));
  case expr::kind::binary: {
    const neutrosophic_value l = eval_node(*e.lhs, env, cfg);
    const neutrosophic_value r = eval_node(*e.rhs, env, cfg);
    return normalize_result(cfg, l, r, apply_binary(cfg, e.op, l, r));
  }
  }
  throw eval_error("unreachable expression node");
}

} // namespace

neutrosophic_value evaluate(const expr_ptr& e, const bindings& env,
                            const eval_config& cfg) {
  return eval_node(*e, env, cfg);
}

bindings load_bindings(std::istream& in, const std::string& name) {
  bindings env;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    const auto eq = line.find('=');
    std::string atom;
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos)
        continue;
      throw parse_error(name + ": expected `name = (T; I; F)`", lineno);
    }
    atom = line.substr(0, eq);
    atom.erase(0, atom.find_first_not_of(" \t"));
    atom.erase(atom.find_last_not_of(" \t\r") + 1);
    if (atom.empty() || !std::isalpha(static_cast<unsigned char>(atom[0])))
      throw parse_error(name + ": bad atom name '" + atom + "'", lineno);
    for (char c : atom)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw parse_error(name + ": bad atom name '" + atom + "'", lineno);
    if (env.count(atom))
      throw parse_error(name + ": duplicate atom '" + atom + "'", lineno);
    try {
      env.emplace(atom, parse_value(line.substr(eq + 1)));
    } catch (const parse_error& e) {
      throw parse_error(name + ": " + e.what(), lineno, e.column());
    }
  }
  return env;
}

} // namespace neutro
