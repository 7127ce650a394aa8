#include "hpm/real_roots.hpp"

#include <algorithm>
#include <optional>

#include "hpm/error.hpp"

namespace hpm {

namespace {

int sign_of(const Rational& r) { return sgn(r); }

/// Horner evaluation with coefficients pre-converted to BigFloat.
class NumericPoly {
 public:
  NumericPoly(const SlopePolynomial& p, Precision precision) {
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c, precision);
    const auto d = p.derivative();
    for (const auto& c : d.coeffs()) deriv_.emplace_back(c, precision);
    precision_ = precision;
  }

  BigFloat value(const BigFloat& x) const { return horner(coeffs_, x); }
  BigFloat slope(const BigFloat& x) const { return horner(deriv_, x); }

 private:
  BigFloat horner(const std::vector<BigFloat>& c, const BigFloat& x) const {
    BigFloat acc(precision_);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  std::vector<BigFloat> coeffs_;
  std::vector<BigFloat> deriv_;
  Precision precision_{0};
};

struct Isolated {
  Rational lo;
  Rational hi;
  bool exact = false;  // root is exactly `hi`
};

/// Safeguarded Newton inside a sign-changing bracket of a simple root.
BigFloat refine(const NumericPoly& g, const Rational& a, const Rational& b, int sign_a, Precision work,
                Precision target) {
  BigFloat lo(a, work);
  BigFloat hi(b, work);
  BigFloat x = (lo + hi) / 2;
  const BigFloat tiny = BigFloat::pow10(-(target.digits() + 2), work);
  for (int iter = 0; iter < 4 * work.bits(); ++iter) {
    BigFloat gx = g.value(x);
    if (gx.is_zero()) break;
    if (gx.sign() == sign_a) {
      lo = x;
    } else {
      hi = x;
    }
    BigFloat scale(1, work);
    if (abs(x) > scale) scale = abs(x);
    if (hi - lo <= tiny * scale) {
      x = (lo + hi) / 2;
      break;
    }
    BigFloat dx = g.slope(x);
    bool use_newton = !dx.is_zero();
    BigFloat next(work);
    if (use_newton) {
      next = x - gx / dx;
      use_newton = next > lo && next < hi;
    }
    if (!use_newton) next = (lo + hi) / 2;
    BigFloat step = abs(next - x);
    x = std::move(next);
    if (use_newton && step <= tiny * scale) break;
  }
  return x.rounded(target);
}

int multiplicity_at_exact(const SlopePolynomial& p, const Rational& r) {
  int mult = 0;
  SlopePolynomial q = p;
  while (!q.is_zero() && q.evaluate(r) == 0) {
    ++mult;
    q = q.derivative();
  }
  return mult;
}

int multiplicity_in(const SlopePolynomial& p, const Rational& a, const Rational& b) {
  int mult = 0;
  SlopePolynomial q = p;
  while (q.degree() >= 1 && SturmChain(q).count_roots(a, b) > 0) {
    ++mult;
    q = gcd(q, q.derivative());
  }
  return mult;
}

}  // namespace

SturmChain::SturmChain(const SlopePolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() < 1) return;
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Scaling by a positive constant keeps signs and tames coefficient growth.
    Rational lead = abs(r.leading());
    r *= Rational(1) / lead;
    chain_.push_back(-r);
  }
}

int SturmChain::sign_variations(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_of(q.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
  return sign_variations(lo) - sign_variations(hi);
}

std::vector<RealRoot> poly_real_roots(const SlopePolynomial& p, const Rational& lo, const Rational& hi,
                                      Precision precision) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poly_real_roots on the zero polynomial");
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "poly_real_roots: empty interval");
  if (precision.digits() < 10) throw Error(ErrorKind::InvalidArgument, "poly_real_roots needs >= 10 digits");

  std::vector<RealRoot> roots;
  const SlopePolynomial g = square_free_part(p);
  if (g.degree() < 1) return roots;

  const bool certified = g.degree() <= kSturmDegreeLimit;
  std::optional<SturmChain> chain;
  if (certified) chain.emplace(g);

  auto count = [&](const Rational& a, const Rational& b) {
    if (chain) return chain->count_roots(a, b);
    const int sa = sign_of(g.evaluate(a));
    const int sb = sign_of(g.evaluate(b));
    return (sb == 0 || sa * sb < 0) ? 1 : 0;
  };

  std::vector<Isolated> cells;
  if (g.evaluate(lo) == 0) cells.push_back({lo, lo, true});

  // Uniform scan, subdivided wherever the exact count exceeds one.
  const long grid = std::max(64, 4 * g.degree());
  const Rational width = hi - lo;
  std::vector<std::pair<Rational, Rational>> stack;
  for (long i = grid; i-- > 0;) {
    Rational a = lo + width * Rational(i, grid);
    Rational b = lo + width * Rational(i + 1, grid);
    a.canonicalize();
    b.canonicalize();
    stack.emplace_back(a, b);
  }
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (a == b) continue;
    const int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      cells.push_back({a, b, g.evaluate(b) == 0});
      continue;
    }
    Rational mid = (a + b) / 2;
    mid.canonicalize();
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }

  const Precision work = precision.plus(kGuardDigits);
  const NumericPoly numeric(g, work);
  for (auto& cell : cells) {
    if (cell.exact) {
      roots.push_back({BigFloat(cell.hi, precision), multiplicity_at_exact(p, cell.hi), certified});
      continue;
    }
    // Shrink until both endpoints are nonzero with opposite signs.
    Rational a = cell.lo;
    Rational b = cell.hi;
    bool exact = false;
    while (sign_of(g.evaluate(a)) * sign_of(g.evaluate(b)) >= 0) {
      Rational mid = (a + b) / 2;
      mid.canonicalize();
      if (g.evaluate(mid) == 0) {
        roots.push_back({BigFloat(mid, precision), multiplicity_at_exact(p, mid), certified});
        exact = true;
        break;
      }
      if (count(a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    if (exact) continue;
    const int sign_a = sign_of(g.evaluate(a));
    roots.push_back({refine(numeric, a, b, sign_a, work, precision), multiplicity_in(p, a, b), certified});
  }
  std::sort(roots.begin(), roots.end(), [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
  return roots;
}

}  // namespace hpm
