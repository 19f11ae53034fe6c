#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "neutro/value.hpp"

namespace neutro {

using hypothesis_set = std::set<std::string>;

/// Basic belief assignment over a small frame (<= 16 hypotheses): masses on
/// non-empty focal subsets summing to 1 within 1e-9.
class mass_function {
public:
  mass_function(std::vector<std::string> frame,
                std::map<hypothesis_set, double> masses);

  const std::vector<std::string>& frame() const { return frame_; }
  /// Focal subsets as bitmasks over the frame order, with their masses.
  const std::map<std::uint32_t, double>& focal() const { return focal_; }

  double mass(const hypothesis_set& subset) const;

  /// All mass on the full frame.
  static mass_function vacuous(std::vector<std::string> frame);

  std::uint32_t to_mask(const hypothesis_set& subset) const;
  hypothesis_set to_subset(std::uint32_t mask) const;

private:
  std::vector<std::string> frame_;
  std::map<std::uint32_t, double> focal_;
};

/// Conflict mass K: total product mass on empty intersections.
double conflict(const mass_function& m1, const mass_function& m2);

/// Dempster's rule: m(C) = sum over X.Y=C of m1(X) m2(Y) / (1-K).
/// Total conflict (K = 1) raises eval_error.
mass_function dempster_combine(const mass_function& m1,
                               const mass_function& m2);

struct belief_plausibility_result {
  double belief;
  double plausibility;
};

belief_plausibility_result belief_plausibility(const mass_function& m,
                                               const hypothesis_set& h);

/// T = [Bel, Pl], F = [1-Pl, 1-Bel], I = [0, Pl-Bel].
neutrosophic_value to_neutrosophic(const mass_function& m,
                                   const hypothesis_set& h);

/// 100 * (after - before) / before; before must be positive.
double increment_jump(double before, double after);

/// Lines `{A}: 0.11` / `{A,B}: 0.7`, `#` comments, optional `frame: A, B, C`
/// directive pinning the universe.
mass_function load_mass_file(std::istream& in,
                             const std::string& name = "<mass>");

} // namespace neutro
