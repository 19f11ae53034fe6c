#pragma once

#include <span>
#include <string>
#include <vector>

#include "neutro/value.hpp"

namespace neutro {

/// Paired N-norm / N-conorm family on crisp components in [0,1].
enum class norm_family { algebraic, bounded, minmax };

/// algebraic: x*y / x+y-xy; bounded: max{0,x+y-1} / min{1,x+y};
/// minmax: min / max.  Inputs outside [0,1] raise eval_error.
double nnorm(norm_family f, double x, double y);
double nconorm(norm_family f, double x, double y);

/// T combined with the min image, I and F with the max image, per piece.
neutrosophic_value conj_min_max(const neutrosophic_value& x,
                                const neutrosophic_value& y);
/// Dual: T max, I and F min.
neutrosophic_value disj_min_max(const neutrosophic_value& x,
                                const neutrosophic_value& y);

/// (F, 1-I reflected, T) -- the complement that pairs with the min/max
/// connectives under De Morgan.
neutrosophic_value neg_swap(const neutrosophic_value& x);
/// (F, I, T) -- the plain component swap.
neutrosophic_value n_swap(const neutrosophic_value& x);

/// Which component absorbs mixed product terms; the letters list the chain
/// weakest-first, so TIF means T < I < F and mixed terms sink to the
/// strongest factor present.
enum class component_order { tif, itf, fit, fti };

/// z o z: the product of all components of one vector.
double compose_same(std::span<const double> z);
/// z o w: sum of all k-factor products using at least one factor from each
/// vector, one factor per position.
double compose_two(std::span<const double> z, std::span<const double> w);
/// T o I o F: as above with at least one factor from each of three vectors.
double compose_three(std::span<const double> a, std::span<const double> b,
                     std::span<const double> c);

/// k-ary product connective: expands the product of the k component sums
/// and buckets every term by the strongest component it contains.
/// Crisp inputs only.
neutrosophic_value product_combine(component_order order,
                                   std::span<const neutrosophic_value> xs);

neutrosophic_value conj_product(component_order order,
                                const neutrosophic_value& x,
                                const neutrosophic_value& y);
neutrosophic_value disj_product(component_order order,
                                const neutrosophic_value& x,
                                const neutrosophic_value& y);
neutrosophic_value conj3_product(const neutrosophic_value& x,
                                 const neutrosophic_value& y,
                                 const neutrosophic_value& z);
neutrosophic_value disj3_product(const neutrosophic_value& x,
                                 const neutrosophic_value& y,
                                 const neutrosophic_value& z);

// Algebraic-product connective suite on subset components; crisp values
// lift to [a,a].  No normalization is applied here.
neutrosophic_value alg_not(const neutrosophic_value& a);
neutrosophic_value alg_and(const neutrosophic_value& a,
                           const neutrosophic_value& b);
neutrosophic_value alg_or_weak(const neutrosophic_value& a,
                               const neutrosophic_value& b);
neutrosophic_value alg_or_strong(const neutrosophic_value& a,
                                 const neutrosophic_value& b);
neutrosophic_value alg_implies(const neutrosophic_value& a,
                               const neutrosophic_value& b);
neutrosophic_value alg_iff(const neutrosophic_value& a,
                           const neutrosophic_value& b);
/// NL(!a | !b), the defining identity of the Sheffer stroke.
neutrosophic_value alg_sheffer(const neutrosophic_value& a,
                               const neutrosophic_value& b);
/// The literal printed right-hand side ({1} - T1 - T2, ...); disagrees with
/// alg_sheffer and is kept reachable for comparison.
neutrosophic_value alg_sheffer_literal(const neutrosophic_value& a,
                                       const neutrosophic_value& b);
neutrosophic_value alg_peirce(const neutrosophic_value& a,
                              const neutrosophic_value& b);

} // namespace neutro
