#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cherednik/errors.hpp"
#include "cherednik/singular.hpp"
#include "support.hpp"

using namespace cherednik;
using namespace testing_support;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

// Power series in u, truncated after u^top.
using USeries = std::vector<Rational>;

USeries mul(const USeries& a, const USeries& b) {
  USeries out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (1 - a u)^mu
USeries binomial_series(const Rational& a, const Rational& mu, std::size_t len) {
  USeries out(len, Rational(0));
  Rational c = 1, pw = 1;
  for (std::size_t j = 0; j < len; ++j) {
    out[j] = c * pw;
    c = c * (mu - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
    pw *= -a;
  }
  return out;
}

// -[u^r] prod_j (1 - x_j u)^{r/n} / (1 - x_i u)
Rational typeA_oracle(const std::vector<Rational>& pt, int r, std::size_t i) {
  const std::size_t len = static_cast<std::size_t>(r) + 1;
  USeries s = binomial_series(0, 0, len);
  for (const auto& v : pt) s = mul(s, binomial_series(v, Rational(r, static_cast<long>(pt.size())), len));
  s = mul(s, binomial_series(pt[i], -1, len));
  return -s[static_cast<std::size_t>(r)];
}

Rational qpow(const Rational& a, long e) {
  Rational out = 1;
  for (long i = 0; i < e; ++i) out *= a;
  return out;
}

// -x_i^q [w^{p-1}] prod_j (1 - x_j^l w)^k / (1 - x_i^l w) / ((k-1)...(k-s))
Rational wreath_oracle(const std::vector<Rational>& pt, int l, int r, const Rational& k, std::size_t i) {
  const int n = static_cast<int>(pt.size());
  const int p = r / l + 1, q = r % l;
  int s = 0;
  while ((s + 1) * n < p) ++s;
  const std::size_t len = static_cast<std::size_t>(p);
  USeries acc = binomial_series(0, 0, len);
  for (const auto& v : pt) acc = mul(acc, binomial_series(qpow(v, l), k, len));
  acc = mul(acc, binomial_series(qpow(pt[i], l), -1, len));
  Rational norm = 1;
  for (int j = 1; j <= s; ++j) norm *= k - j;
  return -qpow(pt[i], q) * acc[len - 1] / norm;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng));
  return out;
}

Vector to_vector(const std::vector<Rational>& v) {
  Vector out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool killed(const DunklSystem& sys, const Polynomial& f) {
  for (std::size_t i = 0; i < sys.nvars(); ++i)
    if (!sys.apply(i, f).is_zero()) return false;
  return true;
}

std::size_t span_dimension(const std::vector<Polynomial>& fs, unsigned degree) {
  const MonomialBasis b(fs.front().nvars(), degree);
  Subspace s(b.size());
  for (const auto& f : fs) s.insert(b.to_vector(f));
  return s.dimension();
}

bool span_contains(const std::vector<Polynomial>& basis, const Polynomial& f, unsigned degree) {
  const MonomialBasis b(f.nvars(), degree);
  Subspace s(b.size());
  for (const auto& g : basis) s.insert(b.to_vector(g));
  return s.contains(b.to_vector(f));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(TypeAParams::make(2, 4), PreconditionError);
  CHECK(TypeAParams::make(4, 6).d() == 2);
  const auto w = WreathParams::make(3, 2, 7, Scalar(0), {Scalar(0), Scalar(0)});
  CHECK(w.p == 3);
  CHECK(w.q == 1);
  CHECK(w.s == 1);
  CHECK(WreathParams::make(2, 2, 9, Scalar(0), {Scalar(0)}).s == 2);
  CHECK(WreathParams::make(2, 2, 3, Scalar(0), {Scalar(0)}).s == 0);
  CHECK_THROWS_AS(WreathParams::make(2, 2, 4, Scalar(0), {Scalar(0)}), PreconditionError);
}

TEST_CASE("type A vectors for (n, r) = (2, 1)") {
  const auto f = typeA_singular(TypeAParams::make(2, 1));
  CHECK(f[1] == -f[0]);
  CHECK(span_dimension({f[0], x(2, 0) - x(2, 1)}, 1) == 1);
  CHECK(!f[0].is_zero());
}

TEST_CASE("type A vectors match the residue oracle, sum to zero and are singular") {
  std::mt19937_64 rng(30);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {3, 5}}) {
    const auto tp = TypeAParams::make(n, r);
    const auto f = typeA_singular(tp);
    REQUIRE(f.size() == static_cast<std::size_t>(n));
    for (int t = 0; t < 4; ++t) {
      const auto pt = random_point(rng, static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(evaluate(f[i], to_vector(pt)) == Scalar(typeA_oracle(pt, r, i)));
    }
    Polynomial sum(static_cast<std::size_t>(n));
    for (const auto& g : f) {
      CHECK(g.is_homogeneous());
      CHECK(g.degree() == r);
      sum += g;
    }
    CHECK(sum.is_zero());
    CHECK(span_dimension(f, static_cast<unsigned>(r)) == static_cast<std::size_t>(n - 1));
    const DunklSystem sys(tp.group(), tp.params());
    for (const auto& g : f) CHECK(killed(sys, g));
    // sigma f_i = f_{sigma(i)}
    for (const auto& g : tp.group().generators()) {
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(act(tp.group(), g, f[i]) == f[static_cast<std::size_t>(g.perm[i])]);
    }
  }
}

TEST_CASE("wreath vectors match the residue oracle") {
  std::mt19937_64 rng(31);
  for (auto [l, n, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 2, 3}, {3, 2, 2}, {2, 2, 9}, {3, 2, 7}, {2, 3, 5}}) {
    for (const Rational k : {Rational(1, 4), Rational(-2, 3), Rational(7, 2)}) {
      const auto w = on_er(l, n, r, Scalar(k), {});
      const auto f = wreath_singular(w);
      for (int t = 0; t < 3; ++t) {
        const auto pt = random_point(rng, static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(evaluate(f[i], to_vector(pt)) == Scalar(wreath_oracle(pt, l, r, k, i)));
      }
    }
  }
}

TEST_CASE("wreath vectors are singular on E_r, including at zeros of the normalization") {
  std::mt19937_64 rng(32);
  for (auto [l, n, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 2, 3}, {3, 2, 1}, {3, 2, 2}, {2, 2, 9}, {3, 2, 7}}) {
    std::vector<Scalar> ks = {Scalar(0), Scalar(1), Scalar(2), Scalar(Rational(1, 4)), random_scalar(rng, l)};
    for (const auto& k : ks) {
      std::vector<Scalar> c;
      for (int j = 1; j < l; ++j) c.push_back(random_scalar(rng, l));
      const auto w = on_er(l, n, r, k, c);
      CHECK(er_residual(w).is_zero());
      const DunklSystem sys(w.group(), w.params());
      const auto f = wreath_singular(w);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(!f[i].is_zero());
        CHECK(f[i].is_homogeneous());
        CHECK(f[i].degree() == r);
        CHECK(killed(sys, f[i]));
      }
      // g f_i = e^{-q a_i} f_{perm(i)}
      const auto& G = w.group();
      for (const auto& g : G.generators()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          const auto expected = Polynomial::constant(f[i].nvars(), G.epsilon(-static_cast<long>(w.q) * g.weights[i])) *
                                f[static_cast<std::size_t>(g.perm[i])];
          CHECK(act(G, g, f[i]) == expected);
        }
      }
    }
  }
}

TEST_CASE("at k = 0 the wreath vectors are multiples of x_i^r") {
  for (auto [l, n, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {3, 2, 2}, {3, 3, 4}}) {
    const auto f = wreath_singular(on_er(l, n, r, Scalar(0), {}));
    for (std::size_t i = 0; i < f.size(); ++i) {
      REQUIRE(f[i].size() == 1);
      Exponents e(static_cast<std::size_t>(n), 0);
      e[i] = static_cast<unsigned>(r);
      CHECK(f[i].terms().begin()->first == e);
    }
  }
}

TEST_CASE("formal wreath vectors: division by (k-1)...(k-s) is exact") {
  const auto formal = wreath_singular_formal(2, 2, 9);
  REQUIRE(formal.size() == 2);
  for (const auto& f : formal) {
    CHECK(!f.is_zero());
    for (const auto& [e, c] : f.terms()) CHECK(c.degree() >= 0);
  }
  // Evaluated values at the roots of the normalization are still nonzero.
  for (long k : {1, 2}) {
    const auto f = wreath_singular(on_er(2, 2, 9, Scalar(k), {}));
    CHECK(!f[0].is_zero());
  }
}

TEST_CASE("E_r residual") {
  std::mt19937_64 rng(33);
  for (int n = 1; n <= 3; ++n) {
    for (int r : {1, 3, 5}) {
      const Scalar k = random_scalar(rng, 1), c1 = random_scalar(rng, 1);
      const auto w = WreathParams::make(2, n, r, k, {c1});
      CHECK(er_residual(w) == Scalar(2 * (n - 1)) * k + Scalar(2) * c1 - Scalar(r));
    }
  }
  CHECK(er_residual(WreathParams::make(2, 2, 3, Scalar(Rational(1, 2)), {Scalar(1)})).is_zero());
  CHECK(er_residual(WreathParams::make(2, 2, 3, Scalar(0), {Scalar(0)})) == Scalar(-3));
  CHECK(er_residual(WreathParams::make(3, 2, 2, Scalar(0), {Scalar(0), Scalar(0)})) == Scalar(-2));
  // q = 1: every ratio (1 - e^{-jq}) / (1 - e^{-j}) is 1.
  const auto w = WreathParams::make(3, 2, 1, Scalar(0), {Scalar(Rational(1, 4)), Scalar(Rational(1, 4))});
  CHECK(er_residual(w) == Scalar(0));
}

TEST_CASE("Sigma_r") {
  CHECK(sigma_r(2, 2, 3) == std::vector<Rational>{Rational(1, 2), Rational(1)});
  CHECK(sigma_r_contains(Rational(1, 2), 2, 2, 3));
  CHECK_FALSE(sigma_r_contains(Rational(1, 3), 2, 2, 3));
  CHECK_FALSE(sigma_r_contains(Rational(2), 2, 2, 3));
  CHECK(sigma_r(3, 2, 1).empty());
  CHECK(sigma_r(3, 2, 2).empty());
  // Irrational k is never in Sigma_r.
  const auto w = on_er(3, 2, 7, Scalar::root_of_unity(3, 1), {});
  CHECK_FALSE(sigma_r_contains(w.k, w));
  // p = 4, n = 3: P in 1..3, Q in 1..3.
  const auto s = sigma_r(2, 3, 7);
  CHECK(s == std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2), Rational(2), Rational(3)});
}

TEST_CASE("support predicates") {
  const auto tp = TypeAParams::make(4, 2);
  const auto pt = [](std::vector<long> v) {
    Vector out;
    for (long x : v) out.emplace_back(x);
    return out;
  };
  CHECK(support_member(pt({1, 1, 5, 5}), tp));
  CHECK(pattern_member(pt({1, 1, 5, 5}), tp));
  CHECK_FALSE(support_member(pt({1, 2, 3, 4}), tp));
  CHECK_FALSE(pattern_member(pt({1, 2, 3, 4}), tp));
  CHECK(support_member(pt({7, 7, 7, 7}), tp));
  CHECK(pattern_member(pt({7, 7, 7, 7}), tp));
  CHECK_FALSE(support_member(pt({1, 1, 1, 5}), tp));

  std::mt19937_64 rng(34);
  int in = 0;
  for (int t = 0; t < 40; ++t) {
    const auto p = sample_support_point(tp, rng);
    const bool a = support_member(p, tp);
    CHECK(a == pattern_member(p, tp));
    in += a;
  }
  CHECK(in > 0);
  CHECK(in < 40);
}

TEST_CASE("residue lemma oracle") {
  const auto poly = residue_lemma_oracle({Rational(1), Rational(1)}, {Rational(1), Rational(2)});
  CHECK(poly.polynomial);
  CHECK(poly.residues_vanish);
  CHECK(poly.residues.size() == 1);

  // ((z-1)(z-2))^{1/2} = z - 3/2 - 1/8 z^{-1} + ...
  const auto half = residue_lemma_oracle({Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(2)});
  CHECK_FALSE(half.polynomial);
  CHECK_FALSE(half.residues_vanish);
  CHECK(half.residues[0] == Scalar(Rational(1, 8)));

  // A polynomial times an inverse: mu = (2, -1) is not polynomial.
  const auto inv = residue_lemma_oracle({Rational(2), Rational(-1)}, {Rational(0), Rational(1)});
  CHECK_FALSE(inv.polynomial);

  CHECK_THROWS_AS(residue_lemma_oracle({Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(1)}), PreconditionError);
  CHECK_THROWS_AS(residue_lemma_oracle({Rational(-2), Rational(-1)}, {Rational(0), Rational(1)}), PreconditionError);
  CHECK_THROWS_AS(residue_lemma_oracle({Rational(1), Rational(1)}, {Rational(1), Rational(1)}), PreconditionError);

  std::mt19937_64 rng(35);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> mu = {Rational(3, 2), Rational(1, 2), Rational(static_cast<long>(rng() % 3))};
    std::vector<Rational> y = {Rational(0), Rational(1), Rational(static_cast<long>(2 + rng() % 5), 3)};
    const auto res = residue_lemma_oracle(mu, y);
    if (res.residues_vanish) CHECK(res.polynomial);
  }
}

TEST_CASE("rank one classification examples") {
  const Rank1Data d(2, {Scalar(Rational(3, 2))});
  CHECK(d.f_at_root(0) - d.f_at_root(1) == Scalar(3));
  CHECK(d.multiplicity(0, 1) == 1);
  CHECK(d.multiplicity(1, 0) == 0);
  CHECK(d.b(0) == std::optional<long>(3));
  CHECK(!d.b(1).has_value());
  CHECK(d.lowest_eigenvalue(0) == Scalar(-1));

  const Rank1Data generic(3, {Scalar(Rational(1, 7)), Scalar(Rational(2, 11))});
  for (int p = 0; p < 3; ++p) {
    CHECK(!generic.b(p).has_value());
    for (int m = 0; m < 3; ++m) CHECK(generic.multiplicity(p, m) == 0);
  }
}

TEST_CASE("rank one characters follow the closed form and the brute force") {
  for (int l : {2, 3, 4}) {
    for (int p = 0; p < l; ++p) {
      const int m = (p + 1) % l;
      for (long b = 1; b <= 7; ++b) {
        if (((b - (p - m)) % l + l) % l != 0) continue;
        std::vector<Scalar> c;
        for (int j = 1; j < l; ++j) c.emplace_back(Rational(1, j + 4));
        c = rank1_resonant_parameters(l, p, m, b, c, 1);
        const Rank1Data d(l, c);
        CHECK(d.gap(p, m) == std::optional<long>(b));
        const auto bb = d.b(p);
        REQUIRE(bb.has_value());
        const auto top = static_cast<unsigned>(2 * *bb);
        const auto brute = rank1_brute_force(d, p, top + 1);
        const auto& G = brute.quotient.system()->group();
        for (int j = 0; j < l; ++j) {
          const auto closed = d.character(p, j, top);
          // e^{pj} e^{-ij} for i < b, then zero.
          for (unsigned i = 0; i <= top; ++i) {
            const Scalar expected = static_cast<long>(i) < *bb ? G.epsilon(p * j - static_cast<long>(i) * j) : Scalar(0);
            CHECK(closed[i] == expected);
          }
          const auto chi = character_series(brute.quotient, G.power(G.generators()[0], j));
          CHECK(chi.shift == d.lowest_eigenvalue(p));
          for (unsigned i = 0; i <= top; ++i) CHECK(chi.coefficients[i] == closed[i]);
        }
        for (int mm = 0; mm < l; ++mm) CHECK(brute.multiplicity[static_cast<std::size_t>(mm)] == d.multiplicity(p, mm));
      }
    }
  }
}

TEST_CASE("generic singular solver") {
  std::mt19937_64 rng(36);
  const DunklSystem generic(ReflectionGroup(1, 3), ParameterFunction::type_a(Scalar(Rational(1, 7))));
  for (unsigned d = 2; d <= 4; ++d) CHECK(generic_singular_solver(generic, d).empty());
  const DunklSystem g2(ReflectionGroup(2, 2), ParameterFunction::wreath(random_scalar(rng, 1), {random_scalar(rng, 1)}));
  for (unsigned d = 1; d <= 4; ++d) CHECK(generic_singular_solver(g2, d).empty());

  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 4}}) {
    const auto tp = TypeAParams::make(n, r);
    const DunklSystem sys(tp.group(), tp.params());
    const auto ker = generic_singular_solver(sys, static_cast<unsigned>(r));
    CHECK(ker.size() == static_cast<std::size_t>(n - 1));
    CHECK(ker == generic_singular_solver(sys, static_cast<unsigned>(r), Execution::parallel));
    for (const auto& f : typeA_singular(tp)) CHECK(span_contains(ker, f, static_cast<unsigned>(r)));
  }
  for (auto [l, n, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {3, 2, 2}}) {
    const auto w = on_er(l, n, r, Scalar(Rational(1, 5)), {});
    const DunklSystem sys(w.group(), w.params());
    const auto ker = generic_singular_solver(sys, static_cast<unsigned>(r));
    CHECK(ker.size() == static_cast<std::size_t>(n));
    for (const auto& f : wreath_singular(w)) CHECK(span_contains(ker, f, static_cast<unsigned>(r)));
  }
}

TEST_CASE("Gorenstein but reducible rank one quotient for l = 3") {
  const auto ce = find_gorenstein_counterexample(3, 12);
  REQUIRE(ce.has_value());
  CHECK(ce->b1 < ce->b2);
  CHECK(ce->quotient_dimension == ce->b2);
  CHECK(ce->irreducible_dimension == ce->b1);
  const DunklSystem sys(ReflectionGroup(3, 1), ParameterFunction::rank1(ce->c));
  const auto q = submodule_closure(sys, {Polynomial::monomial({ce->b2}, Scalar(1))}, ce->b2 + 2);
  CHECK(gorenstein_check(q));
  CHECK_FALSE(gram_radical_vanishes_on(q));
}
