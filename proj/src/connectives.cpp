#include "neutro/connectives.hpp"

#include <algorithm>
#include <array>

#include "neutro/errors.hpp"

namespace neutro {

namespace {

void check_unit(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw eval_error("N-norm/N-conorm input outside [0,1]");
}

} // namespace

double nnorm(norm_family f, double x, double y) {
  check_unit(x);
  check_unit(y);
  switch (f) {
  case norm_family::algebraic: return x * y;
  case norm_family::bounded: return std::max(0.0, x + y - 1.0);
  case norm_family::minmax: return std::min(x, y);
  }
  return 0.0;
}

double nconorm(norm_family f, double x, double y) {
  check_unit(x);
  check_unit(y);
  switch (f) {
  case norm_family::algebraic: return x + y - x * y;
  case norm_family::bounded: return std::min(1.0, x + y);
  case norm_family::minmax: return std::max(x, y);
  }
  return 0.0;
}

neutrosophic_value conj_min_max(const neutrosophic_value& x,
                                const neutrosophic_value& y) {
  return {piece_min(x.truth, y.truth), piece_max(x.indet, y.indet),
          piece_max(x.falsity, y.falsity)};
}

neutrosophic_value disj_min_max(const neutrosophic_value& x,
                                const neutrosophic_value& y) {
  return {piece_max(x.truth, y.truth), piece_min(x.indet, y.indet),
          piece_min(x.falsity, y.falsity)};
}

neutrosophic_value neg_swap(const neutrosophic_value& x) {
  return {x.falsity, reflect_unit(x.indet), x.truth};
}

neutrosophic_value n_swap(const neutrosophic_value& x) {
  return {x.falsity, x.indet, x.truth};
}

namespace {

void check_arity(std::span<const double> z, std::span<const double> w) {
  if (z.size() != w.size() || z.size() < 2)
    throw eval_error("composition law requires equal-length vectors, k >= 2");
  if (z.size() > 16)
    throw eval_error("composition law limited to k <= 16");
}

} // namespace

double compose_same(std::span<const double> z) {
  if (z.size() < 2)
    throw eval_error("composition law requires k >= 2");
  double p = 1.0;
  for (double v : z)
    p *= v;
  return p;
}

double compose_two(std::span<const double> z, std::span<const double> w) {
  check_arity(z, w);
  const std::size_t k = z.size();
  double sum = 0.0;
  // bit set -> take z at that position; skip the all-w and all-z picks
  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
    double p = 1.0;
    for (std::size_t i = 0; i < k; ++i)
      p *= (mask >> i & 1) ? z[i] : w[i];
    sum += p;
  }
  return sum;
}

double compose_three(std::span<const double> a, std::span<const double> b,
                     std::span<const double> c) {
  check_arity(a, b);
  check_arity(b, c);
  const std::size_t k = a.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i)
    total *= 3;
  double sum = 0.0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    bool used[3] = {false, false, false};
    double p = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t pick = rest % 3;
      rest /= 3;
      used[pick] = true;
      p *= pick == 0 ? a[i] : pick == 1 ? b[i] : c[i];
    }
    if (used[0] && used[1] && used[2])
      sum += p;
  }
  return sum;
}

namespace {

// component index: 0 = T, 1 = I, 2 = F
std::array<int, 3> order_chain(component_order order) {
  switch (order) {
  case component_order::tif: return {0, 1, 2};
  case component_order::itf: return {1, 0, 2};
  case component_order::fit: return {2, 1, 0};
  case component_order::fti: return {2, 0, 1};
  }
  return {0, 1, 2};
}

} // namespace

neutrosophic_value product_combine(component_order order,
                                   std::span<const neutrosophic_value> xs) {
  if (xs.size() < 2)
    throw eval_error("product connective requires k >= 2 operands");
  const std::size_t k = xs.size();
  std::array<std::vector<double>, 3> comp;
  for (auto& c : comp)
    c.reserve(k);
  for (const auto& x : xs) {
    if (!x.is_crisp())
      throw eval_error("product connectives require crisp triples");
    comp[0].push_back(x.truth.value());
    comp[1].push_back(x.indet.value());
    comp[2].push_back(x.falsity.value());
  }

  const auto chain = order_chain(order); // weakest, middle, strongest
  const auto& weak = comp[chain[0]];
  const auto& mid = comp[chain[1]];
  const auto& strong = comp[chain[2]];

  double buckets[3];
  buckets[chain[0]] = compose_same(weak);
  buckets[chain[1]] = compose_same(mid) + compose_two(mid, weak);
  buckets[chain[2]] = compose_same(strong) + compose_two(strong, mid) +
                      compose_two(strong, weak) +
                      compose_three(weak, mid, strong);
  return make_crisp(buckets[0], buckets[1], buckets[2]);
}

neutrosophic_value conj_product(component_order order,
                                const neutrosophic_value& x,
                                const neutrosophic_value& y) {
  const neutrosophic_value xs[2] = {x, y};
  return product_combine(order, xs);
}

neutrosophic_value disj_product(component_order order,
                                const neutrosophic_value& x,
                                const neutrosophic_value& y) {
  const neutrosophic_value xs[2] = {x, y};
  return product_combine(order, xs);
}

neutrosophic_value conj3_product(const neutrosophic_value& x,
                                 const neutrosophic_value& y,
                                 const neutrosophic_value& z) {
  const neutrosophic_value xs[3] = {x, y, z};
  return product_combine(component_order::tif, xs);
}

neutrosophic_value disj3_product(const neutrosophic_value& x,
                                 const neutrosophic_value& y,
                                 const neutrosophic_value& z) {
  const neutrosophic_value xs[3] = {x, y, z};
  return product_combine(component_order::fit, xs);
}

namespace {

const subunitary_set& one() {
  static const subunitary_set v(1.0);
  return v;
}

template <typename F>
neutrosophic_value componentwise(F&& f, const neutrosophic_value& a,
                                 const neutrosophic_value& b) {
  return {f(a.truth, b.truth), f(a.indet, b.indet), f(a.falsity, b.falsity)};
}

} // namespace

neutrosophic_value alg_not(const neutrosophic_value& a) {
  return {ominus(one(), a.truth), ominus(one(), a.indet),
          ominus(one(), a.falsity)};
}

neutrosophic_value alg_and(const neutrosophic_value& a,
                           const neutrosophic_value& b) {
  return componentwise(
      [](const subunitary_set& x, const subunitary_set& y) {
        return odot(x, y);
      },
      a, b);
}

neutrosophic_value alg_or_weak(const neutrosophic_value& a,
                               const neutrosophic_value& b) {
  return componentwise(
      [](const subunitary_set& x, const subunitary_set& y) {
        return ominus(oplus(x, y), odot(x, y));
      },
      a, b);
}

neutrosophic_value alg_or_strong(const neutrosophic_value& a,
                                 const neutrosophic_value& b) {
  return componentwise(
      [](const subunitary_set& x, const subunitary_set& y) {
        const subunitary_set nx = ominus(one(), x);
        const subunitary_set ny = ominus(one(), y);
        return ominus(oplus(odot(x, ny), odot(y, nx)),
                      odot(odot(odot(x, y), nx), ny));
      },
      a, b);
}

neutrosophic_value alg_implies(const neutrosophic_value& a,
                               const neutrosophic_value& b) {
  return componentwise(
      [](const subunitary_set& x, const subunitary_set& y) {
        return oplus(ominus(one(), x), odot(x, y));
      },
      a, b);
}

neutrosophic_value alg_iff(const neutrosophic_value& a,
                           const neutrosophic_value& b) {
  return componentwise(
      [](const subunitary_set& x, const subunitary_set& y) {
        const subunitary_set xy = odot(x, y);
        return odot(oplus(ominus(one(), x), xy), oplus(ominus(one(), y), xy));
      },
      a, b);
}

neutrosophic_value alg_sheffer(const neutrosophic_value& a,
                               const neutrosophic_value& b) {
  return alg_or_weak(alg_not(a), alg_not(b));
}

neutrosophic_value alg_sheffer_literal(const neutrosophic_value& a,
                                       const neutrosophic_value& b) {
  return componentwise(
      [](const subunitary_set& x, const subunitary_set& y) {
        return ominus(ominus(one(), x), y);
      },
      a, b);
}

neutrosophic_value alg_peirce(const neutrosophic_value& a,
                              const neutrosophic_value& b) {
  return alg_and(alg_not(a), alg_not(b));
}

} // namespace neutro
