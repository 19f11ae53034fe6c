#include "neutro/finite_set.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>

#include "neutro/connectives.hpp"
#include "neutro/errors.hpp"

namespace neutro {

neutrosophic_finite_set::neutrosophic_finite_set(
    std::vector<std::string> universe,
    std::map<std::string, neutrosophic_value> membership)
    : universe_(std::move(universe)), membership_(std::move(membership)) {
  if (universe_.empty())
    throw eval_error("universe may not be empty");
  for (const auto& e : universe_)
    if (!membership_.count(e))
      throw eval_error("element '" + e + "' has no membership value");
  if (membership_.size() != universe_.size())
    throw eval_error("membership mentions elements outside the universe");
}

const neutrosophic_value&
neutrosophic_finite_set::at(const std::string& element) const {
  auto it = membership_.find(element);
  if (it == membership_.end())
    throw eval_error("element '" + element + "' not in universe");
  return it->second;
}

neutrosophic_finite_set
neutrosophic_finite_set::constant(std::vector<std::string> universe,
                                  const neutrosophic_value& v) {
  std::map<std::string, neutrosophic_value> m;
  for (const auto& e : universe)
    m.emplace(e, v);
  return neutrosophic_finite_set(std::move(universe), std::move(m));
}

neutrosophic_relation::neutrosophic_relation(
    std::size_t arity,
    std::map<std::vector<std::string>, neutrosophic_value> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
  for (const auto& [key, value] : tuples_)
    if (key.size() != arity_)
      throw eval_error("relation tuple arity mismatch");
}

namespace {

void check_same_universe(const neutrosophic_finite_set& a,
                         const neutrosophic_finite_set& b) {
  if (a.universe() != b.universe())
    throw eval_error("sets are over different universes");
}

template <typename F>
neutrosophic_finite_set elementwise(const neutrosophic_finite_set& a,
                                    const neutrosophic_finite_set& b, F&& f) {
  check_same_universe(a, b);
  std::map<std::string, neutrosophic_value> m;
  for (const auto& e : a.universe())
    m.emplace(e, f(a.at(e), b.at(e)));
  return neutrosophic_finite_set(a.universe(), std::move(m));
}

} // namespace

neutrosophic_finite_set complement(const neutrosophic_finite_set& a) {
  std::map<std::string, neutrosophic_value> m;
  for (const auto& e : a.universe())
    m.emplace(e, alg_not(a.at(e)));
  return neutrosophic_finite_set(a.universe(), std::move(m));
}

neutrosophic_finite_set intersect(const neutrosophic_finite_set& a,
                                  const neutrosophic_finite_set& b) {
  return elementwise(a, b, [](const auto& x, const auto& y) {
    return alg_and(x, y);
  });
}

neutrosophic_finite_set unite(const neutrosophic_finite_set& a,
                              const neutrosophic_finite_set& b) {
  return elementwise(a, b, [](const auto& x, const auto& y) {
    return alg_or_weak(x, y);
  });
}

neutrosophic_finite_set difference(const neutrosophic_finite_set& a,
                                   const neutrosophic_finite_set& b) {
  // (T1 - T1*T2, I1 - I1*I2, F1 - F1*F2), componentwise set arithmetic
  return elementwise(a, b, [](const auto& x, const auto& y) {
    return neutrosophic_value{
        ominus(x.truth, odot(x.truth, y.truth)),
        ominus(x.indet, odot(x.indet, y.indet)),
        ominus(x.falsity, odot(x.falsity, y.falsity))};
  });
}

cartesian_relation cartesian(const neutrosophic_finite_set& a,
                             const neutrosophic_finite_set& b) {
  std::map<std::vector<std::string>, annotation_pair> tuples;
  for (const auto& x : a.universe())
    for (const auto& y : b.universe())
      tuples.emplace(std::vector<std::string>{x, y},
                     annotation_pair{a.at(x), b.at(y)});
  return cartesian_relation(std::move(tuples));
}

bool is_subset(const neutrosophic_finite_set& m,
               const neutrosophic_finite_set& n) {
  check_same_universe(m, n);
  for (const auto& e : m.universe()) {
    const auto cmp = compare_values(m.at(e), n.at(e));
    if (cmp != std::partial_ordering::less &&
        cmp != std::partial_ordering::equivalent)
      return false;
  }
  return true;
}

namespace {

neutrosophic_value combine_union(set_ops_family ops,
                                 const neutrosophic_value& x,
                                 const neutrosophic_value& y) {
  return ops == set_ops_family::minmax ? disj_min_max(x, y)
                                       : alg_or_weak(x, y);
}

neutrosophic_value combine_intersection(set_ops_family ops,
                                        const neutrosophic_value& x,
                                        const neutrosophic_value& y) {
  return ops == set_ops_family::minmax ? conj_min_max(x, y) : alg_and(x, y);
}

neutrosophic_value complement_value(set_ops_family ops,
                                    const neutrosophic_value& x) {
  return ops == set_ops_family::minmax ? n_swap(x) : alg_not(x);
}

bool values_equal(const neutrosophic_value& a, const neutrosophic_value& b) {
  return approx_equal(a.truth, b.truth, 1e-9) &&
         approx_equal(a.indet, b.indet, 1e-9) &&
         approx_equal(a.falsity, b.falsity, 1e-9);
}

bool sets_equal(const neutrosophic_finite_set& a,
                const neutrosophic_finite_set& b) {
  if (a.universe() != b.universe())
    return false;
  for (const auto& e : a.universe())
    if (!values_equal(a.at(e), b.at(e)))
      return false;
  return true;
}

int find_member(const std::vector<neutrosophic_finite_set>& family,
                const neutrosophic_finite_set& s) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (sets_equal(family[i], s))
      return static_cast<int>(i);
  return -1;
}

neutrosophic_finite_set
elementwise_binary(set_ops_family ops, bool is_union,
                   const neutrosophic_finite_set& a,
                   const neutrosophic_finite_set& b) {
  std::map<std::string, neutrosophic_value> m;
  for (const auto& e : a.universe())
    m.emplace(e, is_union ? combine_union(ops, a.at(e), b.at(e))
                          : combine_intersection(ops, a.at(e), b.at(e)));
  return neutrosophic_finite_set(a.universe(), std::move(m));
}

void check_shared_universe(const std::vector<neutrosophic_finite_set>& family) {
  if (family.empty())
    throw eval_error("family may not be empty");
  for (const auto& s : family)
    if (s.universe() != family.front().universe())
      throw eval_error("family members are over different universes");
}

std::string subfamily_names(std::size_t mask) {
  std::string names;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1)
      names += (names.empty() ? "#" : ", #") + std::to_string(i);
  return names;
}

void check_union_closure(const std::vector<neutrosophic_finite_set>& family,
                         set_ops_family ops, family_check_report& report) {
  const std::size_t n = family.size();
  if (n > 20)
    throw eval_error("family too large for subfamily enumeration");
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    if (!(mask & (mask - 1)))
      continue; // singleton unions are the member itself
    neutrosophic_finite_set acc = family[std::countr_zero(mask)];
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i & 1) && i != static_cast<std::size_t>(std::countr_zero(mask)))
        acc = elementwise_binary(ops, true, acc, family[i]);
    if (find_member(family, acc) < 0) {
      report.pass = false;
      report.violations.push_back("union of subfamily {" +
                                  subfamily_names(mask) +
                                  "} is not in the family");
      return; // one witness per axiom
    }
  }
}

} // namespace

family_check_report
check_topology(const std::vector<neutrosophic_finite_set>& family,
               set_ops_family ops) {
  check_shared_universe(family);
  family_check_report report;
  const auto& universe = family.front().universe();
  const auto zero = neutrosophic_finite_set::constant(
      universe, make_crisp(0, 0, 1));
  const auto unit = neutrosophic_finite_set::constant(
      universe, make_crisp(1, 0, 0));
  if (find_member(family, zero) < 0) {
    report.pass = false;
    report.violations.push_back("constant set 0(0,0,1) is missing");
  }
  if (find_member(family, unit) < 0) {
    report.pass = false;
    report.violations.push_back("constant set 1(1,0,0) is missing");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j) {
      const auto inter = elementwise_binary(ops, false, family[i], family[j]);
      if (find_member(family, inter) < 0) {
        report.pass = false;
        report.violations.push_back(
            "intersection of #" + std::to_string(i) + " and #" +
            std::to_string(j) + " is not in the family");
        i = family.size();
        break;
      }
    }
  check_union_closure(family, ops, report);
  return report;
}

family_check_report
check_sigma_algebra(const std::vector<neutrosophic_finite_set>& family,
                    set_ops_family ops) {
  check_shared_universe(family);
  family_check_report report;
  const auto& universe = family.front().universe();
  const auto zero = neutrosophic_finite_set::constant(
      universe, make_crisp(0, 0, 1));
  const auto unit = neutrosophic_finite_set::constant(
      universe, make_crisp(1, 0, 0));
  if (find_member(family, unit) < 0) {
    report.pass = false;
    report.violations.push_back("full set 1(1,0,0) is missing");
  }
  if (find_member(family, zero) < 0) {
    report.pass = false;
    report.violations.push_back("empty set 0(0,0,1) is missing");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::map<std::string, neutrosophic_value> m;
    for (const auto& e : universe)
      m.emplace(e, complement_value(ops, family[i].at(e)));
    const neutrosophic_finite_set comp(universe, std::move(m));
    if (find_member(family, comp) < 0) {
      report.pass = false;
      report.violations.push_back("complement of #" + std::to_string(i) +
                                  " is not in the family");
      break;
    }
  }
  check_union_closure(family, ops, report);
  return report;
}

neutrosophic_finite_set load_set_file(std::istream& in,
                                      const std::string& name) {
  std::vector<std::string> universe;
  std::map<std::string, neutrosophic_value> membership;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    const auto colon = line.find(':');
    std::string element;
    if (colon == std::string::npos) {
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (blank)
        continue;
      throw parse_error(name + ": expected `element : (T; I; F)`", lineno);
    }
    element = line.substr(0, colon);
    element.erase(0, element.find_first_not_of(" \t"));
    element.erase(element.find_last_not_of(" \t\r") + 1);
    if (element.empty())
      throw parse_error(name + ": missing element name", lineno);
    if (membership.count(element))
      throw parse_error(name + ": duplicate element '" + element + "'",
                        lineno);
    try {
      membership.emplace(element, parse_value(line.substr(colon + 1)));
    } catch (const parse_error& e) {
      throw parse_error(name + ": " + e.what(), lineno, e.column());
    }
    universe.push_back(element);
  }
  if (universe.empty())
    throw parse_error(name + ": no elements");
  return neutrosophic_finite_set(std::move(universe), std::move(membership));
}

} // namespace neutro
