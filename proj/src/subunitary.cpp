#include "neutro/subunitary.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <initializer_list>

#include "neutro/errors.hpp"

namespace neutro {

namespace {

std::vector<interval> canonicalize(std::vector<interval> pieces) {
  if (pieces.empty())
    throw eval_error("subunitary set may not be empty");
  for (const auto& p : pieces) {
    if (!(std::isfinite(p.lo) && std::isfinite(p.hi)))
      throw eval_error("subunitary set endpoints must be finite");
    if (p.lo > p.hi)
      throw eval_error("interval endpoints out of order");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const interval& a, const interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<interval> merged;
  merged.push_back(pieces.front());
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    interval& last = merged.back();
    if (pieces[i].lo <= last.hi + subunitary_set::merge_gap)
      last.hi = std::max(last.hi, pieces[i].hi);
    else
      merged.push_back(pieces[i]);
  }
  return merged;
}

subunitary_set pairwise(const subunitary_set& a, const subunitary_set& b,
                        interval (*f)(const interval&, const interval&)) {
  std::vector<interval> out;
  out.reserve(a.pieces().size() * b.pieces().size());
  for (const auto& p : a.pieces())
    for (const auto& q : b.pieces())
      out.push_back(f(p, q));
  return subunitary_set(std::move(out));
}

} // namespace

subunitary_set::subunitary_set(double lo, double hi)
    : pieces_(canonicalize({interval{lo, hi}})) {}

subunitary_set::subunitary_set(std::vector<interval> pieces)
    : pieces_(canonicalize(std::move(pieces))) {}

subunitary_set subunitary_set::unite(const subunitary_set& a,
                                     const subunitary_set& b) {
  std::vector<interval> all = a.pieces_;
  all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
  return subunitary_set(std::move(all));
}

bool subunitary_set::contains(double x, double tol) const {
  for (const auto& p : pieces_)
    if (x >= p.lo - tol && x <= p.hi + tol)
      return true;
  return false;
}

subunitary_set oplus(const subunitary_set& a, const subunitary_set& b) {
  return pairwise(a, b, [](const interval& p, const interval& q) {
    return interval{p.lo + q.lo, p.hi + q.hi};
  });
}

subunitary_set ominus(const subunitary_set& a, const subunitary_set& b) {
  return pairwise(a, b, [](const interval& p, const interval& q) {
    return interval{p.lo - q.hi, p.hi - q.lo};
  });
}

subunitary_set odot(const subunitary_set& a, const subunitary_set& b) {
  return pairwise(a, b, [](const interval& p, const interval& q) {
    const double c[4] = {p.lo * q.lo, p.lo * q.hi, p.hi * q.lo, p.hi * q.hi};
    return interval{*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  });
}

subunitary_set oslash(const subunitary_set& a, double k) {
  if (k == 0.0)
    throw eval_error("division of a set by zero");
  std::vector<interval> out;
  out.reserve(a.pieces().size());
  for (const auto& p : a.pieces()) {
    if (k > 0)
      out.push_back({p.lo / k, p.hi / k});
    else
      out.push_back({p.hi / k, p.lo / k});
  }
  return subunitary_set(std::move(out));
}

subunitary_set clamp_unit(const subunitary_set& a) {
  std::vector<interval> out;
  for (const auto& p : a.pieces()) {
    const double lo = std::max(p.lo, 0.0);
    const double hi = std::min(p.hi, 1.0);
    if (lo <= hi)
      out.push_back({lo, hi});
  }
  if (out.empty())
    throw eval_error("clamp to [0,1] produced an empty set");
  return subunitary_set(std::move(out));
}

subunitary_set piece_min(const subunitary_set& a, const subunitary_set& b) {
  return pairwise(a, b, [](const interval& p, const interval& q) {
    return interval{std::min(p.lo, q.lo), std::min(p.hi, q.hi)};
  });
}

subunitary_set piece_max(const subunitary_set& a, const subunitary_set& b) {
  return pairwise(a, b, [](const interval& p, const interval& q) {
    return interval{std::max(p.lo, q.lo), std::max(p.hi, q.hi)};
  });
}

subunitary_set reflect_unit(const subunitary_set& a) {
  std::vector<interval> out;
  out.reserve(a.pieces().size());
  for (const auto& p : a.pieces())
    out.push_back({1.0 - p.hi, 1.0 - p.lo});
  return subunitary_set(std::move(out));
}

bool approx_equal(const subunitary_set& a, const subunitary_set& b,
                  double tol) {
  if (a.pieces().size() != b.pieces().size())
    return false;
  for (std::size_t i = 0; i < a.pieces().size(); ++i) {
    if (std::fabs(a.pieces()[i].lo - b.pieces()[i].lo) > tol ||
        std::fabs(a.pieces()[i].hi - b.pieces()[i].hi) > tol)
      return false;
  }
  return true;
}

namespace {

struct set_scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("set syntax error: " + what, 0,
                      static_cast<int>(pos) + 1);
  }

  double number() {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
      ++pos;
    bool digits = false;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '.')) {
      digits = digits || std::isdigit(static_cast<unsigned char>(text[pos]));
      ++pos;
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      ++pos;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
        ++pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    }
    if (!digits)
      fail("expected a number");
    double v = std::stod(text.substr(start, pos - start));
    if (pos < text.size() && text[pos] == '%') {
      ++pos;
      v /= 100.0;
    }
    return v;
  }

  // point | {p, p, ...} | [lo, hi]
  void piece(std::vector<interval>& out) {
    skip_ws();
    if (pos >= text.size())
      fail("expected a set piece");
    if (text[pos] == '[') {
      ++pos;
      const double lo = number();
      if (!eat(','))
        fail("expected ',' in interval");
      const double hi = number();
      if (!eat(']'))
        fail("expected ']'");
      if (lo > hi)
        fail("interval endpoints out of order (sup < inf)");
      out.push_back({lo, hi});
    } else if (text[pos] == '{') {
      ++pos;
      out.push_back({0, 0});
      out.back().lo = out.back().hi = number();
      while (eat(',')) {
        const double v = number();
        out.push_back({v, v});
      }
      if (!eat('}'))
        fail("expected '}'");
    } else {
      const double v = number();
      out.push_back({v, v});
    }
  }
};

void format_number(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  out += buf;
}

} // namespace

subunitary_set parse_set(const std::string& text) {
  set_scanner sc{text};
  std::vector<interval> pieces;
  sc.piece(pieces);
  while (true) {
    sc.skip_ws();
    if (sc.pos < text.size() && (text[sc.pos] == 'U' || text[sc.pos] == 'u')) {
      ++sc.pos;
      sc.piece(pieces);
    } else {
      break;
    }
  }
  sc.skip_ws();
  if (sc.pos != text.size())
    sc.fail("trailing input after set");
  return subunitary_set(std::move(pieces));
}

std::string format_set(const subunitary_set& s) {
  std::string out;
  const bool lone = s.pieces().size() == 1;
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    if (i)
      out += 'U';
    const interval& p = s.pieces()[i];
    if (p.is_point()) {
      if (!lone)
        out += '{';
      format_number(out, p.lo);
      if (!lone)
        out += '}';
    } else {
      out += '[';
      format_number(out, p.lo);
      out += ',';
      format_number(out, p.hi);
      out += ']';
    }
  }
  return out;
}

} // namespace neutro
