#include "hpm/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hpm/error.hpp"

namespace hpm {

SlopePolynomial::SlopePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

SlopePolynomial SlopePolynomial::constant(const Rational& c) { return SlopePolynomial({c}); }

SlopePolynomial SlopePolynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> coeffs(static_cast<size_t>(power) + 1);
  coeffs.back() = c;
  return SlopePolynomial(std::move(coeffs));
}

Rational SlopePolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(power)];
}

void SlopePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SlopePolynomial SlopePolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return SlopePolynomial(std::move(out));
}

SlopePolynomial SlopePolynomial::monic() const {
  if (is_zero()) return {};
  SlopePolynomial out(*this);
  const Rational lead = leading();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Rational SlopePolynomial::evaluate(const Rational& s) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

SlopePolynomial SlopePolynomial::operator-() const {
  SlopePolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

SlopePolynomial& SlopePolynomial::operator+=(const SlopePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

SlopePolynomial& SlopePolynomial::operator-=(const SlopePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

SlopePolynomial& SlopePolynomial::operator*=(const SlopePolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

SlopePolynomial& SlopePolynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

std::string SlopePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << "s";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

SlopePolynomial poly_arith(const SlopePolynomial& a, const SlopePolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return {};
}

BigFloat poly_eval(const SlopePolynomial& p, const BigFloat& s, Precision precision) {
  if (precision.digits() < 10) {
    throw Error(ErrorKind::InvalidArgument, "poly_eval needs at least 10 digits");
  }
  const Precision work = precision.plus(kGuardDigits);
  BigFloat x = s.rounded(work);
  BigFloat acc(work);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += BigFloat(*it, work);
  }
  return acc.rounded(precision);
}

std::pair<SlopePolynomial, SlopePolynomial> divmod(const SlopePolynomial& a, const SlopePolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {SlopePolynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const Rational& lead = b.leading();
  const auto db = static_cast<size_t>(b.degree());
  for (size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(db);
  return {SlopePolynomial(std::move(quot)), SlopePolynomial(std::move(rem))};
}

SlopePolynomial exact_divide(const SlopePolynomial& a, const SlopePolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "exact_divide: nonzero remainder");
  return q;
}

SlopePolynomial gcd(SlopePolynomial a, SlopePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

SlopePolynomial square_free_part(const SlopePolynomial& p) {
  if (p.degree() < 1) return p;
  return exact_divide(p, gcd(p, p.derivative())).monic();
}

}  // namespace hpm
