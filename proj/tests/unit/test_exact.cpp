#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "splitex/constructions.hpp"
#include "splitex/errors.hpp"
#include "splitex/exact.hpp"

using namespace splitex;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(std::move(v));
}

long long eval_int(const Polynomial& p, long long t) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc.convert_to<long long>();
}

}  // namespace

TEST_CASE("characteristic polynomial of small graphs") {
  // K3: t^3 - 3t - 2
  CHECK(characteristic_polynomial(Graph::complete(3)) == poly({-2, -3, 0, 1}));
  // C5: t^5 - 5t^3 + 5t - 2
  CHECK(characteristic_polynomial(cycle(5)) == poly({-2, 5, 0, -5, 0, 1}));
  // Edgeless: t^n
  CHECK(characteristic_polynomial(Graph::empty(3)) == poly({0, 0, 0, 1}));
}

TEST_CASE("characteristic polynomial matches a determinant oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = brute::random_graph(n, 0.5, rng);
    const Polynomial p = characteristic_polynomial(g);
    CHECK(p.degree() == n);
    CHECK(p.leading() == 1);
    for (long long t : {-3LL, -1LL, 0LL, 2LL, 5LL}) CHECK(eval_int(p, t) == brute::charpoly_at(g, t));
  }
}

TEST_CASE("sturm root counts") {
  // (x-1)(x-2)(x-3)
  const Polynomial p = poly({-6, 11, -6, 1});
  const SturmChain s(p);
  CHECK(s.count_roots(Rational(0), Rational(10)) == 3);
  CHECK(s.count_roots(Rational(1), Rational(2)) == 1);  // (1, 2]
  CHECK(s.count_roots(Rational(3, 2), Rational(5, 2)) == 1);
  CHECK(s.count_roots_above(Rational(2)) == 1);
  // Repeated roots count once: (x-1)^2 (x+1)
  const SturmChain r(poly({1, -1, -1, 1}));
  CHECK(r.count_roots(Rational(-5), Rational(5)) == 2);
  CHECK(squarefree_part(poly({1, -1, -1, 1})).degree() == 2);
}

TEST_CASE("largest root comparisons") {
  const Polynomial a = poly({-2, 0, 1});  // sqrt 2
  const Polynomial b = poly({-3, 0, 1});  // sqrt 3
  CHECK(compare_largest_roots(a, b) == std::strong_ordering::less);
  CHECK(compare_largest_roots(b, a) == std::strong_ordering::greater);
  // sqrt 2 against (x^2-2)(x-1): equal largest roots
  const Polynomial c = poly({2, -2, -1, 1});
  CHECK(compare_largest_roots(a, c) == std::strong_ordering::equal);
  CHECK(sign_at_largest_root(a, poly({-1, 1})) == 1);   // sqrt2 - 1 > 0
  CHECK(sign_at_largest_root(b, poly({-2, 1})) == -1);  // sqrt3 - 2 < 0
  CHECK(sign_at_largest_root(a, poly({-2, 0, 1})) == 0);

  const Rational sep = separate_largest_root(poly({-6, 11, -6, 1}));
  CHECK(sep >= 2);
  CHECK(sep < 3);

  const SturmChain chain(b);
  RationalInterval iv = isolate_largest_root(chain);
  for (int i = 0; i < 30; ++i) refine_largest_root(chain, iv);
  CHECK(iv.lo * iv.lo < 3);
  CHECK(iv.hi * iv.hi >= 3);
  CHECK(iv.hi - iv.lo < Rational(1, 1000000));
}

TEST_CASE("exact rational conversion") {
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(to_rational(-3.0) == Rational(-3));
  CHECK(to_rational(0.1) != Rational(1, 10));
}

TEST_CASE("polynomial basics") {
  const Polynomial p = poly({1, 2, 3});
  CHECK(p.derivative() == poly({2, 6}));
  CHECK(p.evaluate(Rational(2)) == 17);
  CHECK(p.sign_at(Rational(-1)) == 1);
  CHECK((p - p).is_zero());
  CHECK(polynomial_gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
}
