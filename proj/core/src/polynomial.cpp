#include "lhl/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "lhl/error.hpp"

namespace lhl {
namespace {

const BigInt& zero_coefficient() {
  static const BigInt zero{0};
  return zero;
}

int sign_of(const BigInt& v) { return sgn(v); }

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, std::size_t exponent) {
  std::vector<BigInt> c(exponent + 1);
  c[exponent] = coefficient;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_counts(std::span<const std::int64_t> counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::int64_t v : counts) c.emplace_back(static_cast<long>(v));
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_coefficient();
}

const BigInt& IntPolynomial::leading() const {
  return coeffs_.empty() ? zero_coefficient() : coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Rational(*it);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  // den^deg * p(num/den) = sum c_i num^i den^(deg-i), with den > 0.
  if (coeffs_.empty()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_power;
    den_power *= den;
  }
  return sign_of(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed(std::size_t d) const {
  if (degree() > static_cast<int>(d)) {
    throw Error(ErrorKind::DegreeTooHigh,
                "cannot reverse a degree " + std::to_string(degree()) + " polynomial w.r.t. degree " +
                    std::to_string(d));
  }
  std::vector<BigInt> c(d + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[d - i] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (coeffs_.empty()) return {};
  std::vector<BigInt> c(k);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(c);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial pow(IntPolynomial base, unsigned exponent) {
  IntPolynomial result{1};
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  BigInt lead = abs(b.leading());
  // Multiplying by |lc(b)| each step keeps the sign of the rational remainder.
  const int sign_b = sgn(b.leading());
  std::vector<BigInt> r = a.coeffs();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    BigInt factor = r[k];
    if (factor == 0) {
      r.resize(k);
      continue;
    }
    if (sign_b < 0) factor = -factor;
    for (auto& c : r) c *= lead;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= factor * b[j];
    r.resize(k);  // r[k] is now zero
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::Internal, "inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t())) {
      throw Error(ErrorKind::Internal, "inexact polynomial division");
    }
    BigInt factor = r[k] / b.leading();
    q[k - db] = factor;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= factor * b[j];
  }
  for (const auto& c : r) {
    if (c != 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace lhl
