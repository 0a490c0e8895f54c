#include "skewpoly/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "skewpoly/error.hpp"

namespace skewpoly {

namespace {

struct Point {
  int index;
  Rational x;
  Rational y;
};

Rational slope(const Point& p, const Point& q) { return (q.y - p.y) / (q.x - p.x); }

std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && slope(hull[hull.size() - 2], hull.back()) >= slope(hull.back(), p)) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

// Height of the hull above abscissa x (x within the hull's range).
Rational hull_height(const std::vector<Point>& hull, const Rational& x) {
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    if (x <= hull[i + 1].x) return hull[i].y + slope(hull[i], hull[i + 1]) * (x - hull[i].x);
  }
  return hull.back().y;
}

}  // namespace

int b_length(const Rational& mu, int b) {
  std::int64_t t = mu.denominator();
  for (std::int64_t g = std::gcd(t, std::int64_t{b}); g > 1; g = std::gcd(t, std::int64_t{b})) t /= g;
  if (t == 1) return 0;
  int ell = 1;
  std::int64_t r = b % t;
  while (r != 1) {
    r = r * b % t;
    ++ell;
  }
  return ell;
}

int reduction_ell(const Rational& mu, int b) { return std::max(b_length(mu, b), 1); }

NewtonPolygon newton_polygon(const SkewPoly& a) {
  if (a.is_zero()) throw DomainError("the zero polynomial has no Newton polygon");
  const int b = a.field()->b();
  std::vector<Point> pts;
  std::vector<Point> pending;  // zero so far: (index, precision)
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& c = a.coeffs()[static_cast<std::size_t>(i)];
    const Rational x(ipow(b, i));
    if (!c.is_zero()) {
      pts.push_back({i, x, *c.valuation()});
    } else if (!c.is_exact()) {
      pending.push_back({i, x, *c.precision()});
    }
  }
  const auto hull = lower_hull(pts);
  for (const auto& p : pending) {
    if (p.index < hull.front().index || p.y <= hull_height(hull, p.x)) {
      throw PrecisionError("Newton polygon undetermined at this precision");
    }
  }
  NewtonPolygon np;
  np.b = b;
  for (const auto& p : hull) np.vertices.push_back({p.index, p.y});
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto mu = slope(hull[i], hull[i + 1]);
    np.slopes.push_back({mu, hull[i + 1].index - hull[i].index, b_length(mu, b)});
  }
  return np;
}

MuReduction mu_reduction(const SkewPoly& a, const Rational& mu) {
  if (a.is_zero()) throw DomainError("the zero polynomial has no reduction");
  const int b = a.field()->b();
  std::optional<Rational> best;
  std::vector<std::pair<int, Rational>> heights;  // index, v(a_i) − μ b^i
  std::vector<std::pair<int, Rational>> pending;
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& c = a.coeffs()[static_cast<std::size_t>(i)];
    const Rational shift = mu * Rational(ipow(b, i));
    if (c.is_zero()) {
      if (!c.is_exact()) pending.emplace_back(i, *c.precision() - shift);
      continue;
    }
    for (const auto& t : c.terms()) {
      if (c.ramification() != 1 && t.n % c.ramification() != 0) {
        throw DomainError("mu-reduction needs integral exponents");
      }
    }
    const auto h = *c.valuation() - shift;
    heights.emplace_back(i, h);
    if (!best || h < *best) best = h;
  }
  for (const auto& [i, h] : pending) {
    if (h <= *best) throw PrecisionError("mu-reduction undetermined at this precision");
  }
  const int ell = reduction_ell(mu, b);
  int i0 = -1;
  std::vector<FFElem> coeffs;
  const auto& k = *a.field();
  for (const auto& [i, h] : heights) {
    if (h != *best) continue;
    if (i0 < 0) i0 = i;
    if ((i - i0) % ell != 0) throw Error("on-segment index is not congruent to the offset");
    const auto j = static_cast<std::size_t>((i - i0) / ell);
    if (coeffs.size() <= j) coeffs.resize(j + 1, k.zero());
    coeffs[j] = a.coeffs()[static_cast<std::size_t>(i)].leading_coeff();
  }
  return {-*best, i0, BaseSkewPoly(a.field(), ell, std::move(coeffs))};
}

std::vector<SlopeDatum> predicted_product_slopes(const std::vector<SlopeDatum>& slopes_p, const Rational& mu, int d,
                                                 std::int64_t s, int b) {
  if (d < 1) throw DomainError("right factor must have positive degree");
  const Rational bd(ipow(b, d));
  if (mu * (bd - 1) != Rational(-s)) throw DomainError("inconsistent right-factor data: mu*(b^d-1) != -s");
  const auto split = bd * mu;
  std::vector<SlopeDatum> below;
  std::vector<SlopeDatum> above;
  int merged = d;
  for (const auto& sd : slopes_p) {
    if (sd.mu < split) {
      const auto m = sd.mu + Rational(s);
      below.push_back({m, sd.multiplicity, b_length(m, b)});
    } else if (sd.mu == split) {
      merged += sd.multiplicity;
    } else {
      const auto m = sd.mu / bd;
      above.push_back({m, sd.multiplicity, b_length(m, b)});
    }
  }
  auto out = below;
  out.push_back({mu, merged, b_length(mu, b)});
  out.insert(out.end(), above.begin(), above.end());
  return out;
}

std::string to_records(const NewtonPolygon& np) {
  std::ostringstream os;
  for (const auto& v : np.vertices) os << "vertex " << v.index << ' ' << to_string(v.valuation) << '\n';
  for (const auto& s : np.slopes) {
    os << "slope " << to_string(s.mu) << " mult " << s.multiplicity << " ell " << s.ell << '\n';
  }
  return os.str();
}

std::string render_ascii(const NewtonPolygon& np, const SkewPoly& a) {
  std::map<int, Rational> points;
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& c = a.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) points.emplace(i, *c.valuation());
  }
  if (points.empty()) return {};
  std::vector<Rational> levels;
  for (const auto& [i, v] : points) levels.push_back(v);
  std::ranges::sort(levels);
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<int> on_hull;
  for (const auto& v : np.vertices) on_hull.push_back(v.index);
  std::size_t width = 0;
  for (const auto& l : levels) width = std::max(width, to_string(l).size());
  std::ostringstream os;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const auto label = to_string(*it);
    os << std::string(width - label.size(), ' ') << label << " |";
    for (int i = 0; i <= a.degree(); ++i) {
      char mark = ' ';
      const auto p = points.find(i);
      if (p != points.end() && p->second == *it) mark = std::ranges::count(on_hull, i) ? '*' : 'o';
      os << ' ' << mark;
    }
    os << '\n';
  }
  os << std::string(width, ' ') << " +";
  for (int i = 0; i <= a.degree(); ++i) os << "--";
  os << '\n' << std::string(width + 2, ' ');
  for (int i = 0; i <= a.degree(); ++i) os << ' ' << (i % 10);
  os << "   (i; abscissa b^i)\n";
  return os.str();
}

}  // namespace skewpoly
