#include "neutro/dempster.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "neutro/errors.hpp"

namespace neutro {

mass_function::mass_function(std::vector<std::string> frame,
                             std::map<hypothesis_set, double> masses)
    : frame_(std::move(frame)) {
  if (frame_.empty())
    throw eval_error("frame may not be empty");
  if (frame_.size() > 16)
    throw eval_error("frame too large (max 16 hypotheses)");
  std::sort(frame_.begin(), frame_.end());
  if (std::adjacent_find(frame_.begin(), frame_.end()) != frame_.end())
    throw eval_error("duplicate hypothesis in frame");
  double total = 0.0;
  for (const auto& [subset, m] : masses) {
    if (subset.empty())
      throw eval_error("mass on the empty set is not allowed");
    if (m < -1e-12 || m > 1.0 + 1e-9)
      throw eval_error("mass outside [0,1]");
    if (m <= 0.0)
      continue;
    const std::uint32_t mask = to_mask(subset);
    focal_[mask] += std::min(m, 1.0);
    total += std::min(m, 1.0);
  }
  if (std::fabs(total - 1.0) > 1e-9)
    throw eval_error("masses must sum to 1");
}

double mass_function::mass(const hypothesis_set& subset) const {
  auto it = focal_.find(to_mask(subset));
  return it == focal_.end() ? 0.0 : it->second;
}

mass_function mass_function::vacuous(std::vector<std::string> frame) {
  hypothesis_set all(frame.begin(), frame.end());
  return mass_function(std::move(frame), {{all, 1.0}});
}

std::uint32_t mass_function::to_mask(const hypothesis_set& subset) const {
  std::uint32_t mask = 0;
  for (const auto& h : subset) {
    auto it = std::lower_bound(frame_.begin(), frame_.end(), h);
    if (it == frame_.end() || *it != h)
      throw eval_error("hypothesis '" + h + "' not in frame");
    mask |= std::uint32_t(1) << (it - frame_.begin());
  }
  return mask;
}

hypothesis_set mass_function::to_subset(std::uint32_t mask) const {
  hypothesis_set subset;
  for (std::size_t i = 0; i < frame_.size(); ++i)
    if (mask >> i & 1)
      subset.insert(frame_[i]);
  return subset;
}

namespace {

void check_frames(const mass_function& m1, const mass_function& m2) {
  if (m1.frame() != m2.frame())
    throw eval_error("mass functions are over different frames");
}

} // namespace

double conflict(const mass_function& m1, const mass_function& m2) {
  check_frames(m1, m2);
  double k = 0.0;
  for (const auto& [x, mx] : m1.focal())
    for (const auto& [y, my] : m2.focal())
      if ((x & y) == 0)
        k += mx * my;
  return k;
}

mass_function dempster_combine(const mass_function& m1,
                               const mass_function& m2) {
  check_frames(m1, m2);
  std::map<std::uint32_t, double> combined;
  double surviving = 0.0;
  for (const auto& [x, mx] : m1.focal())
    for (const auto& [y, my] : m2.focal()) {
      const std::uint32_t inter = x & y;
      if (inter != 0) {
        combined[inter] += mx * my;
        surviving += mx * my;
      }
    }
  // surviving == 1 - K, summed directly for numerical stability
  const double denom = surviving;
  if (denom <= 1e-12)
    throw eval_error("total conflict: the evidences are entirely conflictive");
  std::map<hypothesis_set, double> masses;
  for (const auto& [mask, m] : combined)
    masses.emplace(m1.to_subset(mask), m / denom);
  return mass_function(m1.frame(), std::move(masses));
}

belief_plausibility_result belief_plausibility(const mass_function& m,
                                               const hypothesis_set& h) {
  if (h.empty())
    throw eval_error("hypothesis set may not be empty");
  const std::uint32_t hm = m.to_mask(h);
  double bel = 0.0, pl = 0.0;
  for (const auto& [x, mx] : m.focal()) {
    if ((x & ~hm) == 0)
      bel += mx;
    if ((x & hm) != 0)
      pl += mx;
  }
  return {bel, pl};
}

neutrosophic_value to_neutrosophic(const mass_function& m,
                                   const hypothesis_set& h) {
  const auto bp = belief_plausibility(m, h);
  const double bel = std::min(bp.belief, bp.plausibility);
  const double pl = bp.plausibility;
  return {subunitary_set(bel, pl), subunitary_set(0.0, pl - bel),
          subunitary_set(1.0 - pl, 1.0 - bel)};
}

double increment_jump(double before, double after) {
  if (before <= 0.0)
    throw eval_error("increment jump needs a positive base value");
  return 100.0 * (after - before) / before;
}

namespace {

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

hypothesis_set parse_subset(const std::string& text, const std::string& name,
                            int lineno) {
  std::string inner = trim(text);
  if (inner.size() < 2 || inner.front() != '{' || inner.back() != '}')
    throw parse_error(name + ": expected `{A,B,...}`", lineno);
  inner = inner.substr(1, inner.size() - 2);
  hypothesis_set subset;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw parse_error(name + ": empty hypothesis name", lineno);
    subset.insert(item);
  }
  if (subset.empty())
    throw parse_error(name + ": empty subset", lineno);
  return subset;
}

} // namespace

mass_function load_mass_file(std::istream& in, const std::string& name) {
  std::map<hypothesis_set, double> masses;
  std::set<std::string> mentioned;
  std::vector<std::string> declared_frame;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    if (trim(line).empty())
      continue;
    const std::string lowered = trim(line);
    if (lowered.rfind("frame:", 0) == 0) {
      std::stringstream ss(lowered.substr(6));
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
          declared_frame.push_back(item);
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw parse_error(name + ": expected `{subset}: mass`", lineno);
    const auto subset = parse_subset(line.substr(0, colon), name, lineno);
    double m = 0.0;
    try {
      std::size_t used = 0;
      const std::string num = trim(line.substr(colon + 1));
      m = std::stod(num, &used);
      if (used != num.size())
        throw parse_error(name + ": bad mass value", lineno);
    } catch (const std::exception&) {
      throw parse_error(name + ": bad mass value", lineno);
    }
    if (masses.count(subset))
      throw parse_error(name + ": duplicate subset", lineno);
    masses.emplace(subset, m);
    mentioned.insert(subset.begin(), subset.end());
  }
  std::vector<std::string> frame =
      declared_frame.empty()
          ? std::vector<std::string>(mentioned.begin(), mentioned.end())
          : declared_frame;
  return mass_function(std::move(frame), std::move(masses));
}

} // namespace neutro
