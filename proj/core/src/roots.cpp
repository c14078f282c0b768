#include "lhl/roots.hpp"

#include <algorithm>
#include <string>

#include "lhl/error.hpp"

namespace lhl {
namespace {

// Divide by the positive content, keeping the sign of every coefficient.
IntPolynomial strip_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = p.content();
  std::vector<BigInt> c = p.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

int count_in(const std::vector<IntPolynomial>& chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::size_t bit_length(const Rational& x) {
  BigInt ceiling = x.get_num() / x.get_den() + 1;
  return mpz_sizeinbase(ceiling.get_mpz_t(), 2);
}

void bisect(const std::vector<IntPolynomial>& chain, const Rational& lo, const Rational& hi, int count,
            std::size_t depth, std::size_t max_depth, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RootInterval{lo, hi, 1});
    return;
  }
  if (depth >= max_depth) {
    throw Error(ErrorKind::Internal, "root isolation exceeded the refinement cap");
  }
  Rational mid = (lo + hi) / 2;
  int left = count_in(chain, lo, mid);
  bisect(chain, lo, mid, left, depth + 1, max_depth, out);
  bisect(chain, mid, hi, count - left, depth + 1, max_depth, out);
}

struct FactorChains {
  std::vector<std::vector<IntPolynomial>> chains;  // chains[i] belongs to multiplicity i+1
};

FactorChains factor_chains(const IntPolynomial& p) {
  FactorChains fc;
  for (const auto& f : squarefree_factorization(p)) fc.chains.push_back(sturm_sequence(f));
  return fc;
}

unsigned multiplicity_in(const FactorChains& fc, const RootInterval& iv) {
  for (std::size_t i = 0; i < fc.chains.size(); ++i) {
    if (fc.chains[i].front().degree() < 1) continue;
    if (count_in(fc.chains[i], iv.lower, iv.upper) > 0) return static_cast<unsigned>(i + 1);
  }
  return 0;
}

}  // namespace

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.primitive_part();
  IntPolynomial a = p.primitive_part();
  return exact_quotient(a, gcd(a, a.derivative())).primitive_part();
}

std::vector<IntPolynomial> squarefree_factorization(const IntPolynomial& p) {
  std::vector<IntPolynomial> factors;
  if (p.degree() < 1) return factors;
  IntPolynomial a = p.primitive_part();
  IntPolynomial b = a.derivative();
  IntPolynomial c = gcd(a, b);
  IntPolynomial w = exact_quotient(a, c);
  IntPolynomial y = exact_quotient(b, c);
  while (w.degree() > 0) {
    IntPolynomial z = y - w.derivative();
    IntPolynomial g = gcd(w, z);
    factors.push_back(g);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
  }
  while (!factors.empty() && factors.back().degree() < 1) factors.pop_back();
  return factors;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(strip_content(p));
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(strip_content(d));
  while (true) {
    IntPolynomial r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(strip_content(-r));
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
  int variations = 0;
  int previous = 0;
  for (const auto& f : chain) {
    int s = f.sign_at(x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

int sign_variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive) {
  int variations = 0;
  int previous = 0;
  for (const auto& f : chain) {
    if (f.is_zero()) continue;
    int s = sgn(f.leading());
    if (!positive && f.degree() % 2 == 1) s = -s;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

std::size_t count_distinct_real_roots(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_sequence(p);
  return static_cast<std::size_t>(sign_variations_at_infinity(chain, false) -
                                  sign_variations_at_infinity(chain, true));
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.degree() < 1) return true;
  IntPolynomial s = squarefree_part(p);
  return count_distinct_real_roots(s) == static_cast<std::size_t>(s.degree());
}

Rational cauchy_root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  BigInt largest = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt m = abs(p[i]);
    if (m > largest) largest = m;
  }
  Rational bound(largest, abs(p.leading()));
  bound.canonicalize();
  return bound + 1;
}

std::size_t RootIsolation::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

RootIsolation isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "the zero polynomial has no isolated roots");
  RootIsolation iso;
  if (p.degree() < 1) return iso;
  IntPolynomial s = squarefree_part(p);
  auto chain = sturm_sequence(s);
  Rational bound = cauchy_root_bound(s);
  const std::size_t max_depth = 10 * static_cast<std::size_t>(s.degree()) + bit_length(bound) + 1;
  Rational lo = -bound;
  Rational hi = bound;
  bisect(chain, lo, hi, count_in(chain, lo, hi), 0, max_depth, iso.roots);

  FactorChains fc = factor_chains(p);
  for (auto& iv : iso.roots) {
    iv.multiplicity = multiplicity_in(fc, iv);
    if (iv.multiplicity == 0) throw Error(ErrorKind::Internal, "root without a squarefree factor");
  }
  return iso;
}

bool interlaces(const IntPolynomial& q, const IntPolynomial& p) {
  if (!is_real_rooted(q)) throw Error(ErrorKind::NotRealRooted, to_string(q));
  if (!is_real_rooted(p)) throw Error(ErrorKind::NotRealRooted, to_string(p));
  if (q.is_zero() || p.is_zero()) return true;
  const int dp = p.degree();
  const int dq = q.degree();
  if (dq != dp && dq != dp - 1) return false;
  if (dp == 0) return true;

  // Isolate the distinct roots of p*q jointly; equal roots of p and q land in
  // the same interval, so interval index gives an exact total order.
  RootIsolation joint = isolate_real_roots(squarefree_part(p * q));
  FactorChains fp = factor_chains(p);
  FactorChains fq = factor_chains(q);
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  for (std::size_t k = joint.roots.size(); k-- > 0;) {
    const auto& iv = joint.roots[k];
    alpha.insert(alpha.end(), multiplicity_in(fp, iv), k);
    beta.insert(beta.end(), multiplicity_in(fq, iv), k);
  }
  if (alpha.size() != static_cast<std::size_t>(dp) || beta.size() != static_cast<std::size_t>(dq)) {
    throw Error(ErrorKind::Internal, "root count mismatch during interlacing check");
  }
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (alpha[i] < beta[i]) return false;
    if (i + 1 < alpha.size() && beta[i] < alpha[i + 1]) return false;
  }
  return true;
}

}  // namespace lhl
