#include "splitex/exact.hpp"

#include <cmath>
#include <sstream>

#include "splitex/errors.hpp"

namespace splitex {

namespace mp = boost::multiprecision;

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const Polynomial& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

// Scales by a positive rational so the coefficients become coprime integers.
// Positive scaling keeps every sign, which the Sturm chain relies on.
Polynomial positive_primitive(const RatPoly& p) {
  BigInt lcm_den = 1;
  for (const Rational& c : p) lcm_den = mp::lcm(lcm_den, BigInt(mp::denominator(c)));
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  BigInt content = 0;
  for (const Rational& c : p) {
    BigInt v = mp::numerator(c) * (lcm_den / mp::denominator(c));
    content = mp::gcd(content, v);
    ints.push_back(std::move(v));
  }
  if (content > 1)
    for (BigInt& v : ints) v /= content;
  return Polynomial(std::move(ints));
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - db, Rational(0));
  while (!a.empty() && a.size() - 1 >= db) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

BigInt cauchy_bound(const Polynomial& p) {
  const BigInt lead = mp::abs(p.leading());
  BigInt top = 0;
  for (int i = 0; i < p.degree(); ++i) top = mp::max(top, BigInt(mp::abs(p.coefficients()[static_cast<std::size_t>(i)])));
  return top / lead + 2;
}

}  // namespace

// ----------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt num = mp::numerator(x);
  const BigInt den = mp::denominator(x);
  // den^deg * p(num/den) by homogenized Horner
  BigInt acc = coeffs_.back();
  BigInt den_power = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_power *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * den_power;
  }
  return acc.sign();
}

int Polynomial::sign_at_positive_infinity() const { return is_zero() ? 0 : leading().sign(); }

int Polynomial::sign_at_negative_infinity() const {
  if (is_zero()) return 0;
  return degree() % 2 == 0 ? leading().sign() : -leading().sign();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = mp::abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial characteristic_polynomial(const Graph& g) {
  const int n = g.order();
  if (n > kExactOrderLimit)
    throw CapacityError("exact characteristic polynomial limited to " + std::to_string(kExactOrderLimit) +
                        " vertices, got " + std::to_string(n));
  const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };

  std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 1));
  coeffs[static_cast<std::size_t>(n)] = 1;
  std::vector<BigInt> m(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) m[idx(i, i)] = 1;
  std::vector<BigInt> am(m.size());

  for (int k = 1; k <= n; ++k) {
    // A·M_k: row i of the product sums the rows of M_k over N(i)
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l : g.neighbors(i)) s += m[idx(l, j)];
        am[idx(i, j)] = std::move(s);
      }
      trace += am[idx(i, i)];
    }
    BigInt c = -trace / k;
    m.swap(am);
    for (int i = 0; i < n; ++i) m[idx(i, i)] += c;
    coeffs[static_cast<std::size_t>(n - k)] = std::move(c);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  RatPoly x = to_rat(a);
  RatPoly y = to_rat(b);
  while (!y.empty()) {
    RatPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  Polynomial out = positive_primitive(x);
  if (out.leading() < 0) {
    std::vector<BigInt> neg = out.coefficients();
    for (BigInt& c : neg) c = -c;
    out = Polynomial(std::move(neg));
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  const Polynomial g = polynomial_gcd(p, p.derivative());
  return positive_primitive(quotient(to_rat(p), to_rat(g)));
}

// ----------------------------------------------------------- SturmChain

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() < 1) return;
  chain_.push_back(chain_.front().derivative());
  for (;;) {
    RatPoly r = remainder(to_rat(chain_[chain_.size() - 2]), to_rat(chain_.back()));
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain_.push_back(positive_primitive(r));
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const Polynomial& s : chain_) {
    const int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int SturmChain::variations_at_positive_infinity() const {
  int count = 0;
  int last = 0;
  for (const Polynomial& s : chain_) {
    const int sg = s.sign_at_positive_infinity();
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations(a) - variations(b);
}

int SturmChain::count_roots_above(const Rational& a) const {
  return variations(a) - variations_at_positive_infinity();
}

// --------------------------------------------------------- root compare

RationalInterval isolate_largest_root(const SturmChain& chain, std::optional<RationalInterval> hint) {
  const Polynomial& sf = chain.squarefree();
  if (sf.degree() < 1) throw DomainError("polynomial has no real roots");
  RationalInterval iv;
  if (hint && hint->lo < hint->hi && chain.count_roots(*hint) >= 1 && chain.count_roots_above(hint->hi) == 0) {
    iv = *hint;
  } else {
    const BigInt bound = cauchy_bound(sf);
    iv = {Rational(-bound), Rational(bound)};
    if (chain.count_roots(iv) < 1) throw DomainError("polynomial has no real roots");
  }
  while (chain.count_roots(iv) > 1) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (chain.count_roots(mid, iv.hi) >= 1)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

void refine_largest_root(const SturmChain& chain, RationalInterval& iv) {
  const Rational mid = (iv.lo + iv.hi) / 2;
  if (chain.count_roots(mid, iv.hi) >= 1)
    iv.lo = mid;
  else
    iv.hi = mid;
}

std::strong_ordering compare_largest_roots(const Polynomial& a, const Polynomial& b,
                                           std::optional<RationalInterval> hint_a,
                                           std::optional<RationalInterval> hint_b) {
  if (a == b) return std::strong_ordering::equal;
  const SturmChain ca(a);
  const SturmChain cb(b);
  RationalInterval ia = isolate_largest_root(ca, hint_a);
  RationalInterval ib = isolate_largest_root(cb, hint_b);
  const Polynomial common = polynomial_gcd(ca.squarefree(), cb.squarefree());
  std::optional<SturmChain> cc;
  if (common.degree() >= 1) cc.emplace(common);

  for (;;) {
    if (ia.hi <= ib.lo) return std::strong_ordering::less;
    if (ib.hi <= ia.lo) return std::strong_ordering::greater;
    // if the roots coincide, the common value is a root of the gcd lying in
    // both isolating intervals
    if (cc && cc->count_roots(mp::max(ia.lo, ib.lo), mp::min(ia.hi, ib.hi)) >= 1)
      return std::strong_ordering::equal;
    refine_largest_root(ca, ia);
    refine_largest_root(cb, ib);
  }
}

int sign_at_largest_root(const Polynomial& p, const Polynomial& d, std::optional<RationalInterval> hint) {
  if (d.is_zero()) return 0;
  const SturmChain cp(p);
  RationalInterval iv = isolate_largest_root(cp, hint);
  if (d.degree() == 0) return d.leading().sign();
  const Polynomial common = polynomial_gcd(cp.squarefree(), d);
  if (common.degree() >= 1 && SturmChain(common).count_roots(iv) >= 1) return 0;
  const SturmChain cd(d);
  while (cd.count_roots(iv) > 0) refine_largest_root(cp, iv);
  return d.sign_at(iv.hi);
}

Rational separate_largest_root(const Polynomial& p) {
  const SturmChain chain(p);
  const RationalInterval iv = isolate_largest_root(chain);
  Rational lo = -Rational(cauchy_bound(chain.squarefree()));
  Rational hi = iv.lo;
  if (chain.count_roots_above(lo) < 2) return hi;
  for (int i = 0; i < 40; ++i) {
    const Rational mid = (lo + hi) / 2;
    if (chain.count_roots_above(mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
  if (x == 0) return 0;
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r = Rational(scaled);
  const int shift = exp - 53;
  if (shift >= 0)
    r *= Rational(BigInt(1) << shift);
  else
    r /= Rational(BigInt(1) << -shift);
  return r;
}

}  // namespace splitex
