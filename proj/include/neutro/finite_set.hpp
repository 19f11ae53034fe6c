#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "neutro/value.hpp"

namespace neutro {

/// Finite universe where every element carries a (T, I, F) membership value;
/// elements outside the intended set carry explicit zero-truth values.
class neutrosophic_finite_set {
public:
  neutrosophic_finite_set(std::vector<std::string> universe,
                          std::map<std::string, neutrosophic_value> membership);

  const std::vector<std::string>& universe() const { return universe_; }
  const neutrosophic_value& at(const std::string& element) const;

  /// Same membership value for every universe element.
  static neutrosophic_finite_set constant(std::vector<std::string> universe,
                                          const neutrosophic_value& v);

  bool operator==(const neutrosophic_finite_set&) const = default;

private:
  std::vector<std::string> universe_;
  std::map<std::string, neutrosophic_value> membership_;
};

/// n-tuples of element identifiers annotated with a value per tuple.
class neutrosophic_relation {
public:
  neutrosophic_relation(std::size_t arity,
                        std::map<std::vector<std::string>, neutrosophic_value>
                            tuples);

  std::size_t arity() const { return arity_; }
  const std::map<std::vector<std::string>, neutrosophic_value>& tuples() const {
    return tuples_;
  }

private:
  std::size_t arity_;
  std::map<std::vector<std::string>, neutrosophic_value> tuples_;
};

neutrosophic_finite_set complement(const neutrosophic_finite_set& a);
neutrosophic_finite_set intersect(const neutrosophic_finite_set& a,
                                  const neutrosophic_finite_set& b);
neutrosophic_finite_set unite(const neutrosophic_finite_set& a,
                              const neutrosophic_finite_set& b);
neutrosophic_finite_set difference(const neutrosophic_finite_set& a,
                                   const neutrosophic_finite_set& b);

/// The x and y annotations a cartesian tuple was built from; no combination
/// rule is applied.
struct annotation_pair {
  neutrosophic_value first;
  neutrosophic_value second;
};

/// 2-ary relation that keeps both factor annotations per pair.
class cartesian_relation {
public:
  explicit cartesian_relation(
      std::map<std::vector<std::string>, annotation_pair> t)
      : tuples_(std::move(t)) {}
  std::size_t arity() const { return 2; }
  const std::map<std::vector<std::string>, annotation_pair>& tuples() const {
    return tuples_;
  }

private:
  std::map<std::vector<std::string>, annotation_pair> tuples_;
};

cartesian_relation cartesian(const neutrosophic_finite_set& a,
                             const neutrosophic_finite_set& b);

bool is_subset(const neutrosophic_finite_set& m,
               const neutrosophic_finite_set& n);

/// Which operator suite the family checkers use: minmax pairs the min/max
/// connectives with the (F, I, T) swap complement; algebraic pairs the
/// product connectives with the {1}-minus complement.
enum class set_ops_family { minmax, algebraic };

struct family_check_report {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Topology axioms on a finite family: contains the constant 0(0,0,1) and
/// 1(1,0,0) sets, closed under pairwise intersection, closed under union of
/// every nonempty subfamily.
family_check_report
check_topology(const std::vector<neutrosophic_finite_set>& family,
               set_ops_family ops = set_ops_family::minmax);

/// Sigma-algebra axioms: contains the full and empty sets, closed under
/// complement and under union of every nonempty subfamily.
family_check_report
check_sigma_algebra(const std::vector<neutrosophic_finite_set>& family,
                    set_ops_family ops = set_ops_family::minmax);

/// Line-based file: `element : (T; I; F)`, `#` comments.
neutrosophic_finite_set load_set_file(std::istream& in,
                                      const std::string& name = "<set>");

} // namespace neutro
