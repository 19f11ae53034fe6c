// Acceptance suite: one criterion per check, one PASS/FAIL line per
// criterion, nonzero exit when anything fails.  Oracles here are written out
// independently of the library internals they exercise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "neutro/connectives.hpp"
#include "neutro/dempster.hpp"
#include "neutro/errors.hpp"
#include "neutro/eval.hpp"
#include "neutro/expr.hpp"
#include "neutro/finite_set.hpp"
#include "neutro/probability.hpp"
#include "neutro/subunitary.hpp"
#include "neutro/value.hpp"

using namespace neutro;

namespace {

struct runner {
  int failures = 0;

  void criterion(int number, const std::string& name,
                 const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
      ++failures;
  }
};

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

mass_function singletons(std::vector<std::string> frame,
                         std::vector<double> masses) {
  std::map<hypothesis_set, double> m;
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (masses[i] > 0)
      m.emplace(hypothesis_set{frame[i]}, masses[i]);
  return mass_function(std::move(frame), std::move(m));
}

neutrosophic_value random_crisp(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return make_crisp(u(rng), u(rng), u(rng));
}

subunitary_set random_unit_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> npieces(1, 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<interval> pieces;
  const int n = npieces(rng);
  for (int i = 0; i < n; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b)
      std::swap(a, b);
    pieces.push_back({a, b});
  }
  return subunitary_set(std::move(pieces));
}

subunitary_set random_wide_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> npieces(1, 3);
  std::uniform_real_distribution<double> coord(-0.5, 1.5);
  std::uniform_real_distribution<double> width(0.0, 0.3);
  std::bernoulli_distribution make_point(0.3);
  std::vector<interval> pieces;
  const int n = npieces(rng);
  for (int i = 0; i < n; ++i) {
    const double lo = coord(rng);
    pieces.push_back(make_point(rng) ? interval{lo, lo}
                                     : interval{lo, lo + width(rng)});
  }
  return subunitary_set(std::move(pieces));
}

neutrosophic_value random_subset_value(std::mt19937& rng) {
  return {random_unit_set(rng), random_unit_set(rng), random_unit_set(rng)};
}

bool value_equal(const neutrosophic_value& a, const neutrosophic_value& b,
                 double tol = 1e-12) {
  return approx_equal(a.truth, b.truth, tol) &&
         approx_equal(a.indet, b.indet, tol) &&
         approx_equal(a.falsity, b.falsity, tol);
}

// Printed 27-term tri-nary conjunction expansion, written out literally.
neutrosophic_value conj3_oracle(const neutrosophic_value& x,
                                const neutrosophic_value& y,
                                const neutrosophic_value& z) {
  const double T1 = x.truth.value(), I1 = x.indet.value(),
               F1 = x.falsity.value();
  const double T2 = y.truth.value(), I2 = y.indet.value(),
               F2 = y.falsity.value();
  const double T3 = z.truth.value(), I3 = z.indet.value(),
               F3 = z.falsity.value();
  const double t = T1 * T2 * T3;
  const double i = I1 * I2 * I3 + I1 * I2 * T3 + I1 * T2 * I3 + T1 * I2 * I3 +
                   I1 * T2 * T3 + T1 * I2 * T3 + T1 * T2 * I3;
  const double f = F1 * F2 * F3 + F1 * F2 * I3 + F1 * I2 * F3 + I1 * F2 * F3 +
                   F1 * I2 * I3 + I1 * F2 * I3 + I1 * I2 * F3 + F1 * F2 * T3 +
                   F1 * T2 * F3 + T1 * F2 * F3 + F1 * T2 * T3 + T1 * F2 * T3 +
                   T1 * T2 * F3 + T1 * I2 * F3 + T1 * F2 * I3 + I1 * F2 * T3 +
                   I1 * T2 * F3 + F1 * I2 * T3 + F1 * T2 * I3;
  return make_crisp(t, i, f);
}

// Printed tri-nary disjunction (TT + TI + TF + TIF, II + IF, FF).
neutrosophic_value disj3_oracle(const neutrosophic_value& x,
                                const neutrosophic_value& y,
                                const neutrosophic_value& z) {
  const double T1 = x.truth.value(), I1 = x.indet.value(),
               F1 = x.falsity.value();
  const double T2 = y.truth.value(), I2 = y.indet.value(),
               F2 = y.falsity.value();
  const double T3 = z.truth.value(), I3 = z.indet.value(),
               F3 = z.falsity.value();
  const double t = T1 * T2 * T3 + T1 * T2 * I3 + T1 * I2 * T3 + I1 * T2 * T3 +
                   T1 * I2 * I3 + I1 * T2 * I3 + I1 * I2 * T3 + T1 * T2 * F3 +
                   T1 * F2 * T3 + F1 * T2 * T3 + T1 * F2 * F3 + F1 * T2 * F3 +
                   F1 * F2 * T3 + T1 * I2 * F3 + T1 * F2 * I3 + I1 * T2 * F3 +
                   I1 * F2 * T3 + F1 * T2 * I3 + F1 * I2 * T3;
  const double i = I1 * I2 * I3 + I1 * I2 * F3 + I1 * F2 * I3 + F1 * I2 * I3 +
                   I1 * F2 * F3 + F1 * I2 * F3 + F1 * F2 * I3;
  const double f = F1 * F2 * F3;
  return make_crisp(t, i, f);
}

std::vector<double> sample_points(const subunitary_set& s, std::size_t cap) {
  std::vector<double> pts;
  const std::size_t per = std::max<std::size_t>(2, cap / s.pieces().size());
  for (const auto& p : s.pieces()) {
    if (p.is_point()) {
      pts.push_back(p.lo);
      continue;
    }
    for (std::size_t i = 0; i < per; ++i)
      pts.push_back(p.lo + (p.hi - p.lo) * double(i) / double(per - 1));
  }
  return pts;
}

bool sampling_oracle_holds(const subunitary_set& a, const subunitary_set& b,
                           subunitary_set (*op)(const subunitary_set&,
                                                const subunitary_set&),
                           double (*f)(double, double)) {
  const subunitary_set result = op(a, b);
  const auto xs = sample_points(a, 200);
  const auto ys = sample_points(b, 200);
  double lo = 1e300, hi = -1e300;
  for (double x : xs)
    for (double y : ys) {
      const double v = f(x, y);
      if (!result.contains(v, 1e-9))
        return false;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  return std::fabs(lo - result.inf()) < 1e-6 &&
         std::fabs(hi - result.sup()) < 1e-6;
}

const std::vector<std::string> uni{"x", "y"};

neutrosophic_finite_set crisp_set2(double tx, double ix, double fx, double ty,
                                   double iy, double fy) {
  return neutrosophic_finite_set(
      uni, {{"x", make_crisp(tx, ix, fx)}, {"y", make_crisp(ty, iy, fy)}});
}

bool first_violation_mentions(const family_check_report& report,
                              const char* needle) {
  return !report.pass && !report.violations.empty() &&
         report.violations[0].find(needle) != std::string::npos;
}

} // namespace

int main() {
  runner r;

  r.criterion(1, "equal-evidence combination: m(D) = .925185, 38.0873% jump",
              [](std::string& detail) {
                const auto start = std::chrono::steady_clock::now();
                const auto m = singletons({"A", "B", "C", "D"},
                                          {0.11, 0.11, 0.11, 0.67});
                const auto combined = dempster_combine(m, m);
                const double md = combined.mass({"D"});
                const double jump = increment_jump(0.67, md);
                char buf[128];
                std::snprintf(buf, sizeof buf, "m(D)=%.6f jump=%.4f%%", md,
                              jump);
                detail = buf;
                return std::fabs(md - 0.925185) < 5e-7 &&
                       std::fabs(jump - 38.0873) < 0.005 &&
                       elapsed_seconds(start) < 1.0;
              });

  r.criterion(2, "conflicting near-certain sources: m(C) = 1",
              [](std::string& detail) {
                const auto start = std::chrono::steady_clock::now();
                for (double a : {0.9, 0.99, 0.999}) {
                  const auto m1 = singletons({"A", "B", "C"}, {a, 0, 1 - a});
                  const auto m2 = singletons({"A", "B", "C"}, {0, a, 1 - a});
                  const double mc = dempster_combine(m1, m2).mass({"C"});
                  if (std::fabs(mc - 1.0) > 1e-12) {
                    detail = "a = " + std::to_string(a);
                    return false;
                  }
                }
                return elapsed_seconds(start) < 1.0;
              });

  r.criterion(3, "three near-certain sources concentrate all mass on A4",
              [](std::string&) {
                const std::vector<std::string> frame{"A1", "A2", "A3", "A4"};
                std::vector<mass_function> sources;
                for (int i = 0; i < 3; ++i) {
                  std::map<hypothesis_set, double> m;
                  m.emplace(hypothesis_set{frame[i]}, 0.99);
                  m.emplace(hypothesis_set{"A4"}, 0.01);
                  sources.emplace_back(frame, std::move(m));
                }
                mass_function acc = sources[0];
                for (int i = 1; i < 3; ++i)
                  acc = dempster_combine(acc, sources[i]);
                return std::fabs(acc.mass({"A4"}) - 1.0) < 1e-9;
              });

  r.criterion(
      4, "vector norm of product connectives multiplies input norms",
      [](std::string&) {
        std::mt19937 rng(211);
        for (int it = 0; it < 1000; ++it) {
          const auto x = random_crisp(rng), y = random_crisp(rng);
          const double want = vector_norm(x) * vector_norm(y);
          if (std::fabs(vector_norm(conj_product(component_order::tif, x, y)) -
                        want) > 1e-12)
            return false;
        }
        for (int it = 0; it < 500; ++it) {
          const auto x = random_crisp(rng), y = random_crisp(rng),
                     z = random_crisp(rng);
          const double want =
              vector_norm(x) * vector_norm(y) * vector_norm(z);
          if (std::fabs(vector_norm(conj3_product(x, y, z)) - want) > 1e-12)
            return false;
        }
        return true;
      });

  r.criterion(
      5, "tri-nary connectives equal the hard-coded 27-term expansions",
      [](std::string&) {
        std::mt19937 rng(223);
        for (int it = 0; it < 500; ++it) {
          const auto x = random_crisp(rng), y = random_crisp(rng),
                     z = random_crisp(rng);
          if (!value_equal(conj3_product(x, y, z), conj3_oracle(x, y, z)))
            return false;
          if (!value_equal(disj3_product(x, y, z), disj3_oracle(x, y, z)))
            return false;
        }
        return true;
      });

  r.criterion(
      6, "norm family axioms (boundary, commutativity, monotonicity, "
         "associativity)",
      [](std::string&) {
        std::mt19937 rng(227);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (norm_family f : {norm_family::algebraic, norm_family::bounded,
                              norm_family::minmax}) {
          for (int it = 0; it < 1000; ++it) {
            const double x = u(rng), y = u(rng), z = u(rng);
            if (std::fabs(nnorm(f, x, 1.0) - x) > 1e-12)
              return false;
            if (std::fabs(nnorm(f, x, 0.0)) > 1e-12)
              return false;
            if (std::fabs(nconorm(f, x, 0.0) - x) > 1e-12)
              return false;
            if (std::fabs(nconorm(f, x, 1.0) - 1.0) > 1e-12)
              return false;
            if (std::fabs(nnorm(f, x, y) - nnorm(f, y, x)) > 1e-12)
              return false;
            if (std::fabs(nconorm(f, x, y) - nconorm(f, y, x)) > 1e-12)
              return false;
            const double lo = std::min(x, y), hi = std::max(x, y);
            if (nnorm(f, lo, z) > nnorm(f, hi, z) + 1e-12)
              return false;
            if (nconorm(f, lo, z) > nconorm(f, hi, z) + 1e-12)
              return false;
            if (std::fabs(nnorm(f, nnorm(f, x, y), z) -
                          nnorm(f, x, nnorm(f, y, z))) > 1e-12)
              return false;
            if (std::fabs(nconorm(f, nconorm(f, x, y), z) -
                          nconorm(f, x, nconorm(f, y, z))) > 1e-12)
              return false;
          }
        }
        return true;
      });

  r.criterion(
      7, "algebra witnesses: units, non-absorption, non-distributivity, "
         "De Morgan failure, double negation",
      [](std::string&) {
        std::mt19937 rng(229);
        for (int it = 0; it < 1000; ++it) {
          const auto x = random_crisp(rng);
          if (!value_equal(alg_and(x, make_crisp(1, 1, 1)), x))
            return false;
          if (!value_equal(alg_or_weak(x, make_crisp(0, 0, 0)), x))
            return false;
          if (!value_equal(alg_not(alg_not(x)), x))
            return false;
        }
        const auto w = make_crisp(0.5, 0.5, 0.5);
        if (value_equal(alg_and(w, alg_and(w, w)), w))
          return false;
        if (value_equal(alg_or_weak(w, alg_or_weak(w, w)), w))
          return false;
        if (value_equal(alg_and(w, alg_or_weak(w, w)),
                        alg_or_weak(alg_and(w, w), alg_and(w, w))))
          return false;
        const neutrosophic_value sx{parse_set("[0.2,0.8]"),
                                    parse_set("[0.2,0.8]"),
                                    parse_set("[0.2,0.8]")};
        const neutrosophic_value sy{parse_set("[0.3,0.6]"),
                                    parse_set("[0.3,0.6]"),
                                    parse_set("[0.3,0.6]")};
        if (value_equal(alg_not(alg_and(sx, sy)),
                        alg_or_weak(alg_not(sx), alg_not(sy))))
          return false;
        return true;
      });

  r.criterion(
      8, "minmax family: idempotent, commutative, associative, De Morgan",
      [](std::string&) {
        std::mt19937 rng(233);
        for (int it = 0; it < 1000; ++it) {
          const auto x = random_subset_value(rng);
          const auto y = random_subset_value(rng);
          const auto z = random_subset_value(rng);
          if (!value_equal(conj_min_max(x, x), x))
            return false;
          if (!value_equal(disj_min_max(x, x), x))
            return false;
          if (!value_equal(conj_min_max(x, y), conj_min_max(y, x)))
            return false;
          if (!value_equal(disj_min_max(x, y), disj_min_max(y, x)))
            return false;
          if (!value_equal(conj_min_max(conj_min_max(x, y), z),
                           conj_min_max(x, conj_min_max(y, z))))
            return false;
          if (!value_equal(disj_min_max(disj_min_max(x, y), z),
                           disj_min_max(x, disj_min_max(y, z))))
            return false;
          if (!value_equal(neg_swap(conj_min_max(x, y)),
                           disj_min_max(neg_swap(x), neg_swap(y))))
            return false;
          if (!value_equal(neg_swap(disj_min_max(x, y)),
                           conj_min_max(neg_swap(x), neg_swap(y))))
            return false;
        }
        return true;
      });

  r.criterion(9, "set arithmetic sampling oracle per operator",
              [](std::string&) {
                std::mt19937 rng(239);
                for (int it = 0; it < 500; ++it) {
                  const auto a = random_wide_set(rng);
                  const auto b = random_wide_set(rng);
                  if (!sampling_oracle_holds(
                          a, b, oplus, [](double x, double y) { return x + y; }))
                    return false;
                  if (!sampling_oracle_holds(a, b, ominus,
                                             [](double x, double y) {
                                               return x - y;
                                             }))
                    return false;
                  if (!sampling_oracle_holds(a, b, odot,
                                             [](double x, double y) {
                                               return x * y;
                                             }))
                    return false;
                }
                return true;
              });

  r.criterion(
      10, "classifier fixtures", [](std::string& detail) {
        const auto paradox = classify(make_crisp(1, 1, 1));
        if (!paradox.count(regime_label::paradoxist)) {
          detail = "(1,1,1) lacks paradoxist";
          return false;
        }
        const auto buridan = classify(make_crisp(0.5, 1, 0.5));
        if (!buridan.count(regime_label::paraconsistent)) {
          detail = "(0.5,1,0.5) lacks paraconsistent";
          return false;
        }
        const auto incomplete = classify(make_crisp(0.3, 0.1, 0.2));
        if (!incomplete.count(regime_label::intuitionistic)) {
          detail = "(0.3,0.1,0.2) lacks intuitionistic";
          return false;
        }
        const auto fuzzy = classify(make_crisp(0.6, 0, 0.4));
        if (!fuzzy.count(regime_label::fuzzy)) {
          detail = "(0.6,0,0.4) lacks fuzzy";
          return false;
        }
        const neutrosophic_value popescu{
            parse_set("[0.40,0.60]"), parse_set("[0.20,0.25]U[0.30,0.35]"),
            parse_set("{0.10,0.20,0.30}")};
        if (std::fabs(sup_sum(popescu) - 1.25) > 1e-12) {
          detail = "popescu supSum != 1.25";
          return false;
        }
        if (!classify(popescu).count(regime_label::paraconsistent)) {
          detail = "popescu lacks paraconsistent";
          return false;
        }
        return true;
      });

  r.criterion(
      11, "parser round-trip and precedence fixture", [](std::string&) {
        const std::pair<const char*, const char*> fixture[20] = {
            {"A & B | C", "A & B | C"},
            {"!A -> B -> C", "!A -> B -> C"},
            {"A & (B | C)", "A & (B | C)"},
            {"A ^ B | C", "A ^ B | C"},
            {"A | B ^ C", "A | B ^ C"},
            {"(A | B) ^ C", "(A | B) ^ C"},
            {"!!A", "!!A"},
            {"!(A & B)", "!(A & B)"},
            {"A NAND B", "A NAND B"},
            {"(A | B) NAND C", "(A | B) NAND C"},
            {"A NOR B NOR C", "A NOR B NOR C"},
            {"A <-> B <-> C", "A <-> B <-> C"},
            {"(A <-> B) <-> C", "(A <-> B) <-> C"},
            {"A -> (B -> C)", "A -> B -> C"},
            {"(A -> B) -> C", "(A -> B) -> C"},
            {"A & B & C", "A & B & C"},
            {"A & (B & C)", "A & (B & C)"},
            {"!A & !B | !C", "!A & !B | !C"},
            {"A -> B | C & D", "A -> B | C & D"},
            {"(A | B) NAND (C NOR D)", "(A | B) NAND (C NOR D)"},
        };
        for (const auto& [input, canonical] : fixture) {
          const auto parsed = parse_expr(input);
          if (format_expr(parsed) != canonical)
            return false;
          if (!structurally_equal(parsed, parse_expr(canonical)))
            return false;
        }
        std::mt19937 rng(241);
        std::function<expr_ptr(int)> gen = [&](int depth) -> expr_ptr {
          std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 9);
          const char* names[4] = {"A", "B", "C", "D"};
          std::uniform_int_distribution<int> atom_pick(0, 3);
          switch (pick(rng)) {
          case 0:
            return expr::atom(names[atom_pick(rng)]);
          case 1:
            return expr::negation(gen(depth - 1));
          default: {
            std::uniform_int_distribution<int> op_pick(0, 6);
            const connective ops[7] = {
                connective::and_,    connective::or_weak, connective::or_strong,
                connective::implies, connective::iff,     connective::nand_,
                connective::nor_};
            return expr::binary(ops[op_pick(rng)], gen(depth - 1),
                                gen(depth - 1));
          }
          }
        };
        for (int it = 0; it < 100; ++it) {
          const auto e = gen(6);
          if (!structurally_equal(parse_expr(format_expr(e)), e))
            return false;
        }
        return true;
      });

  r.criterion(
      12, "topology and sigma-algebra fixtures", [](std::string& detail) {
        const auto zero =
            neutrosophic_finite_set::constant(uni, make_crisp(0, 0, 1));
        const auto one =
            neutrosophic_finite_set::constant(uni, make_crisp(1, 0, 0));
        const auto m = crisp_set2(0.7, 0, 0.2, 0.4, 0, 0.5);

        if (!check_topology({zero, one}).pass) {
          detail = "minimal topology rejected";
          return false;
        }
        if (!check_topology({zero, one, m}).pass) {
          detail = "idempotent member rejected";
          return false;
        }
        if (!first_violation_mentions(check_topology({one, m}), "0(0,0,1)")) {
          detail = "missing-0 fixture";
          return false;
        }
        if (!first_violation_mentions(check_topology({zero, m}), "1(1,0,0)")) {
          detail = "missing-1 fixture";
          return false;
        }
        const auto m3 = crisp_set2(0.2, 0, 0.9, 0.9, 0, 0.1);
        std::map<std::string, neutrosophic_value> um;
        um.emplace("x", disj_min_max(m.at("x"), m3.at("x")));
        um.emplace("y", disj_min_max(m.at("y"), m3.at("y")));
        const neutrosophic_finite_set m_union(uni, std::move(um));
        if (!first_violation_mentions(
                check_topology({zero, one, m, m3, m_union}), "intersection")) {
          detail = "intersection-violation fixture";
          return false;
        }
        const auto ma = crisp_set2(0.5, 0, 0.5, 0.2, 0, 0.8);
        const auto mb = crisp_set2(0.2, 0, 0.8, 0.5, 0, 0.5);
        const auto mab = crisp_set2(0.2, 0, 0.8, 0.2, 0, 0.8);
        if (!first_violation_mentions(check_topology({zero, one, ma, mb, mab}),
                                      "union")) {
          detail = "union-violation fixture";
          return false;
        }

        const std::vector<std::string> u2{"a", "b"};
        const auto z2 =
            neutrosophic_finite_set::constant(u2, make_crisp(0, 0, 1));
        const auto f2 =
            neutrosophic_finite_set::constant(u2, make_crisp(1, 0, 0));
        const neutrosophic_finite_set just_a(
            u2, {{"a", make_crisp(1, 0, 0)}, {"b", make_crisp(0, 0, 1)}});
        const neutrosophic_finite_set just_b(
            u2, {{"a", make_crisp(0, 0, 1)}, {"b", make_crisp(1, 0, 0)}});
        if (!check_sigma_algebra({z2, f2, just_a, just_b}).pass) {
          detail = "power-set family rejected";
          return false;
        }
        if (!first_violation_mentions(check_sigma_algebra({z2, just_a, just_b}),
                                      "full set")) {
          detail = "missing-full fixture";
          return false;
        }
        if (!first_violation_mentions(check_sigma_algebra({z2, f2, just_a}),
                                      "complement")) {
          detail = "missing-complement fixture";
          return false;
        }
        if (!first_violation_mentions(check_sigma_algebra({f2}), "empty set")) {
          detail = "singleton fixture";
          return false;
        }
        const auto s1 = crisp_set2(0.5, 0, 0.5, 0.5, 0, 0.5);
        const auto s2 = crisp_set2(0.7, 0, 0.3, 0.3, 0, 0.7);
        const auto s2c = crisp_set2(0.3, 0, 0.7, 0.7, 0, 0.3);
        if (!first_violation_mentions(
                check_sigma_algebra({zero, one, s1, s2, s2c}), "union")) {
          detail = "sigma union-violation fixture";
          return false;
        }
        return true;
      });

  r.criterion(
      13, "classical probability reduction on crisp i=0, t+f=1 inputs",
      [](std::string&) {
        std::mt19937 rng(251);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int it = 0; it < 1000; ++it) {
          const double ta = u(rng), tb = u(rng);
          const event_probability a{make_crisp(ta, 0, 1 - ta)};
          const event_probability b{make_crisp(tb, 0, 1 - tb)};
          if (std::fabs(np_and(a, b).value.truth.value() - ta * tb) > 1e-12)
            return false;
          if (std::fabs(np_or(a, b).value.truth.value() -
                        (ta + tb - ta * tb)) > 1e-12)
            return false;
          if (std::fabs(np_not(a).value.truth.value() - (1 - ta)) > 1e-12)
            return false;
        }
        return true;
      });

  if (r.failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", r.failures);
  return 1;
}
