#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cherednik/errors.hpp"
#include "cherednik/euler.hpp"
#include "cherednik/graded_quotient.hpp"
#include "support.hpp"

using namespace cherednik;
using namespace testing_support;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

Polynomial power(const Polynomial& f, unsigned e) {
  Polynomial out = Polynomial::constant(f.nvars(), Scalar(1));
  for (unsigned i = 0; i < e; ++i) out = out * f;
  return out;
}

// a(T) b for a polynomial a in the coordinate Dunkl operators.
Polynomial apply_in_dunkl(const DunklSystem& sys, const Polynomial& a, const Polynomial& b) {
  Polynomial out(b.nvars());
  for (const auto& [e, c] : a.terms()) {
    Polynomial v = b;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) v = sys.apply(i, v);
    out += Polynomial::constant(b.nvars(), c) * v;
  }
  return out;
}

Scalar constant_term(const Polynomial& f) { return f.coefficient(Exponents(f.nvars(), 0)); }

Scalar form(const DunklSystem& sys, const Polynomial& a, const Polynomial& b) {
  return constant_term(apply_in_dunkl(sys, a, b));
}

unsigned long binomial(unsigned long a, unsigned long b) {
  unsigned long r = 1;
  for (unsigned long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::vector<Scalar> as_scalars(const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<std::size_t> prefix(std::vector<std::size_t> v, std::size_t n) {
  v.resize(n);
  return v;
}

}  // namespace

TEST_CASE("Gram matrix examples") {
  const Scalar c1(Rational(2, 5));
  const DunklSystem rank1(ReflectionGroup(2, 1), ParameterFunction::rank1({c1}));
  CHECK(gram_matrix(rank1, 1)(0, 0) == Scalar(1) - Scalar(2) * c1);
  CHECK(gram_matrix(rank1, 0).rows() == 1);
  CHECK(gram_matrix(rank1, 0)(0, 0) == Scalar(1));

  const DunklSystem free1(ReflectionGroup(2, 1), ParameterFunction::rank1({Scalar(0)}));
  long fact = 1;
  for (unsigned m = 1; m <= 7; ++m) {
    fact *= m;
    CHECK(gram_matrix(free1, m)(0, 0) == Scalar(fact));
  }
}

TEST_CASE("Gram matrices agree with direct application of Dunkl words") {
  std::mt19937_64 rng(20);
  std::vector<DunklSystem> systems;
  systems.emplace_back(ReflectionGroup(1, 3), ParameterFunction::type_a(Scalar(Rational(2, 3))));
  systems.emplace_back(ReflectionGroup(3, 2), ParameterFunction::wreath(random_scalar(rng, 3), {random_scalar(rng, 3), random_scalar(rng, 3)}));
  systems.emplace_back(ReflectionGroup(3, 1), ParameterFunction::rank1({random_scalar(rng, 3), random_scalar(rng, 3)}), LinearCharacter::eta(2));
  for (const auto& sys : systems) {
    const auto grams = gram_matrices(sys, 4);
    const auto grams_par = gram_matrices(sys, 4, {}, Execution::parallel);
    for (unsigned m = 0; m <= 4; ++m) {
      CHECK(grams[m] == grams_par[m]);
      const MonomialBasis basis(sys.nvars(), m);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
          CHECK(grams[m](a, b) == form(sys, Polynomial::monomial(basis[a], Scalar(1)), Polynomial::monomial(basis[b], Scalar(1))));
        }
      }
    }
  }
}

TEST_CASE("type A Gram rows run over words in the sum-zero directions") {
  const DunklSystem sys(ReflectionGroup(1, 3), ParameterFunction::type_a(Scalar(Rational(2, 3))));
  const auto dirs = type_a_directions(3);
  const auto b = gram_matrix(sys, 2, dirs);
  CHECK(b.rows() == 3);  // words of degree 2 in two directions
  CHECK(b.cols() == 6);
  // T_{e1 - e2}^2 applied to x1^2 has constant term computed by hand from apply.
  const auto v = sys.apply(dirs[0], sys.apply(dirs[0], x(3, 0) * x(3, 0)));
  CHECK(b(0, 0) == constant_term(v));
}

TEST_CASE("contravariance, symmetry and W-invariance of the form for real groups") {
  std::mt19937_64 rng(21);
  std::vector<DunklSystem> systems;
  systems.emplace_back(ReflectionGroup(1, 3), ParameterFunction::type_a(Scalar(Rational(3, 4))));
  systems.emplace_back(ReflectionGroup(2, 2), ParameterFunction::wreath(Scalar(Rational(1, 3)), {Scalar(Rational(-2, 5))}));
  for (const auto& sys : systems) {
    const std::size_t n = sys.nvars();
    for (unsigned m = 0; m <= 3; ++m) {
      const auto g = gram_matrix(sys, m);
      CHECK(g == g.transpose());
      for (int t = 0; t < 4; ++t) {
        const auto f = random_homogeneous(rng, n, m + 1);
        const auto h = random_homogeneous(rng, n, m);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(form(sys, f, x(n, i) * h) == form(sys, sys.apply(i, f), h));
        }
        const auto a = random_homogeneous(rng, n, m);
        for (const auto& w : sys.group().elements()) {
          CHECK(form(sys, act(sys.group(), w, a), act(sys.group(), w, h)) == form(sys, a, h));
        }
      }
    }
  }
}

TEST_CASE("closure examples") {
  const DunklSystem s2(ReflectionGroup(1, 2), ParameterFunction::type_a(Scalar(Rational(1, 3))));
  ClosureOptions ring_only;
  ring_only.dunkl = false;
  const auto q = submodule_closure(s2, {x(2, 0)}, 5, ring_only);
  CHECK(q.hilbert_series() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
  // x_1 is not singular, so Dunkl operators reach the constants.
  const auto all = submodule_closure(s2, {x(2, 0)}, 5);
  CHECK(all.hilbert_series() == std::vector<std::size_t>{0, 0, 0, 0, 0, 0});

  const auto full = submodule_closure(s2, {}, 5);
  CHECK(full.hilbert_series() == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});

  const auto v = type_a_quotient(2, 3, 6);
  CHECK(v.quotient.hilbert_series() == std::vector<std::size_t>{1, 1, 1, 0, 0, 0, 0});
}

TEST_CASE("closed relation spaces are stable under x, W and Dunkl operators") {
  const auto v = type_a_quotient(3, 2, 6);
  const auto& q = v.quotient;
  for (unsigned m = 0; m <= q.cutoff(); ++m) {
    for (const auto& row : q.relations(m).basis()) {
      const auto f = q.basis(m).to_polynomial(row);
      for (const auto& g : v.system.group().generators()) CHECK(q.contains_relation(v.system.act(g, f)));
      if (m < q.cutoff())
        for (std::size_t i = 0; i < 3; ++i) CHECK(q.contains_relation(f * x(3, i)));
      if (m > 0)
        for (const auto& y : type_a_directions(3)) CHECK(q.contains_relation(v.system.apply(y, f)));
    }
  }
}

TEST_CASE("irreducible quotient examples") {
  // Generic parameter: nondegenerate form, L = M.
  const DunklSystem generic(ReflectionGroup(1, 3), ParameterFunction::type_a(Scalar(Rational(1, 7))));
  for (unsigned m = 0; m <= 5; ++m) {
    const auto g = gram_matrix(generic, m);
    CHECK(rank(g) == g.rows());
  }
  const auto lg = irreducible_quotient(generic, 5);
  for (unsigned m = 0; m <= 5; ++m) CHECK(lg.dimension(m) == binomial(m + 2, 2));

  const DunklSystem rank1(ReflectionGroup(2, 1), ParameterFunction::rank1({Scalar(Rational(3, 2))}));
  CHECK(irreducible_quotient(rank1, 6).hilbert_series() == std::vector<std::size_t>{1, 1, 1, 0, 0, 0, 0});

  const DunklSystem s2(ReflectionGroup(1, 2), ParameterFunction::type_a(Scalar(Rational(1, 2))));
  CHECK(irreducible_quotient(s2, 4, type_a_directions(2)).hilbert_series() == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("Hilbert series examples") {
  CHECK(ideal_quotient(2, {}, 4).hilbert_series() == std::vector<std::size_t>{1, 2, 3, 4, 5});
  const auto w = on_er(2, 2, 3, Scalar(0), {});
  CHECK(wreath_quotient(w, 8).quotient.hilbert_series() == std::vector<std::size_t>{1, 2, 3, 2, 1, 0, 0, 0, 0});
  CHECK(type_a_quotient(3, 2, 8).quotient.total_dimension() == 4);
}

TEST_CASE("character series examples") {
  const auto v = type_a_quotient(3, 2, 6);
  const auto& G = v.system.group();
  const auto id = character_series(v.quotient, G.identity());
  std::vector<Scalar> h;
  for (auto d : v.quotient.hilbert_series()) h.emplace_back(static_cast<long>(d));
  CHECK(id.coefficients == h);
  CHECK(id.shift == Scalar(-1));

  // A 3-cycle: det(1 - g t^2) / det(1 - g t) = (1 + t^2 + t^4) / (1 + t + t^2) = 1 - t + t^2.
  GroupElement cycle{{1, 2, 0}, {0, 0, 0}};
  CHECK(character_series(v.quotient, cycle).coefficients == as_scalars({1, -1, 1, 0, 0, 0, 0}));
  // A transposition: (1 - t^4) / (1 - t^2) = 1 + t^2, on the reflection representation.
  GroupElement swap{{1, 0, 2}, {0, 0, 0}};
  CHECK(character_series(v.quotient, swap).coefficients == as_scalars({1, 0, 1, 0, 0, 0, 0}));

  const DunklSystem rank1(ReflectionGroup(2, 1), ParameterFunction::rank1({Scalar(Rational(3, 2))}));
  const auto l = irreducible_quotient(rank1, 5);
  const auto s = rank1.group().generators()[0];
  const auto chi = character_series(l, s);
  CHECK(chi.coefficients == as_scalars({1, -1, 1, 0, 0, 0}));
  CHECK(chi.shift == Scalar(-1));
}

TEST_CASE("standard characters") {
  const DunklSystem s3(ReflectionGroup(1, 3), ParameterFunction::type_a(Scalar(Rational(1, 5))));
  const auto& G = s3.group();
  const auto triv = standard_character(s3, G.identity(), 6);
  CHECK(triv.shift == s3.lowest_eigenvalue());
  for (unsigned m = 0; m <= 6; ++m) CHECK(triv.coefficients[m] == Scalar(static_cast<long>(m + 1)));
  const auto refl = standard_character(G, Scalar(2), Scalar(0), G.identity(), 4);
  for (unsigned m = 0; m <= 4; ++m) CHECK(refl.coefficients[m] == Scalar(static_cast<long>(2 * (m + 1))));

  const ReflectionGroup Z3(3, 1);
  const DunklSystem r1(Z3, ParameterFunction::rank1({Scalar(Rational(1, 3)), Scalar(Rational(2, 7))}), LinearCharacter::eta(2));
  for (const auto& g : Z3.elements()) {
    const auto chi = standard_character(r1, g, 5);
    const Scalar tau = LinearCharacter::eta(2)(Z3, g);
    const Scalar lam = Z3.matrix_on_h_dual(g)(0, 0);
    Scalar acc = tau;
    for (unsigned m = 0; m <= 5; ++m) {
      CHECK(chi.coefficients[m] == acc);
      acc *= lam;
    }
  }
}

TEST_CASE("Gorenstein examples") {
  for (unsigned r = 1; r <= 5; ++r) CHECK(gorenstein_check(ideal_quotient(1, {power(x(1, 0), r)}, r + 2)));
  CHECK_FALSE(gorenstein_check(ideal_quotient(2, {x(2, 0) * x(2, 0), x(2, 0) * x(2, 1), x(2, 1) * x(2, 1)}, 4)));
  // C[x, y] / (x^2, y^2) is a complete intersection.
  CHECK(gorenstein_check(ideal_quotient(2, {x(2, 0) * x(2, 0), x(2, 1) * x(2, 1)}, 4)));
  // One-dimensional top degree but degenerate pairing: C[x, y] / (x^2, xy, y^3).
  CHECK_FALSE(gorenstein_check(ideal_quotient(2, {x(2, 0) * x(2, 0), x(2, 0) * x(2, 1), power(x(2, 1), 3)}, 5)));
  CHECK(gorenstein_check(type_a_quotient(3, 2, 8).quotient));
  CHECK_THROWS_AS(gorenstein_check(ideal_quotient(2, {x(2, 0)}, 4)), PreconditionError);
}

TEST_CASE("finite dimensionality decisions") {
  const auto d23 = finite_dim_decide(type_a_quotient(2, 3, 8).quotient);
  CHECK(d23.status == FiniteStatus::finite);
  CHECK(d23.dimension == 3);
  CHECK(d23.vanishing_degree == 3);
  const auto d42 = finite_dim_decide(type_a_quotient(4, 2, 8).quotient);
  CHECK(d42.status == FiniteStatus::unknown_at_cutoff);
  CHECK(finite_dim_decide(ideal_quotient(2, {}, 6)).status == FiniteStatus::unknown_at_cutoff);
}

TEST_CASE("truncation is sound: a larger cutoff gives the same finite answer") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 5}}) {
    const auto small = type_a_quotient(n, r, default_finite_cutoff(n, r));
    const auto big = type_a_quotient(n, r, default_finite_cutoff(n, r) + 4);
    const auto a = finite_dim_decide(small.quotient), b = finite_dim_decide(big.quotient);
    CHECK(a.status == FiniteStatus::finite);
    CHECK(b.status == FiniteStatus::finite);
    CHECK(a.dimension == b.dimension);
    CHECK(prefix(big.quotient.hilbert_series(), small.quotient.hilbert_series().size()) == small.quotient.hilbert_series());
  }
  const auto w = on_er(2, 2, 3, Scalar(Rational(1, 3)), {});
  CHECK(finite_dim_decide(wreath_quotient(w, 8).quotient).dimension == finite_dim_decide(wreath_quotient(w, 12).quotient).dimension);
}

TEST_CASE("Gorenstein finite quotients of real groups are irreducible") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}}) {
    const auto v = type_a_quotient(n, r, default_finite_cutoff(n, r));
    CHECK(gorenstein_check(v.quotient));
    CHECK(gram_radical_vanishes_on(v.quotient));
  }
  const auto w = wreath_quotient(on_er(2, 2, 3, Scalar(Rational(1, 3)), {}), 8);
  CHECK(gorenstein_check(w.quotient));
  CHECK(gram_radical_vanishes_on(w.quotient));
  // x^3 is singular at c = 3/2 for l = 2.
  const DunklSystem r1(ReflectionGroup(2, 1), ParameterFunction::rank1({Scalar(Rational(3, 2))}));
  const auto q = submodule_closure(r1, {power(x(1, 0), 3)}, 6);
  CHECK(gorenstein_check(q));
  CHECK(gram_radical_vanishes_on(q));
}

TEST_CASE("Euler character identity") {
  const auto v = type_a_quotient(3, 2, 10);
  const auto rep = euler_character_identity(v.quotient, v.generators, 2, 10);
  CHECK(rep.ok);
  CHECK(rep.classes.size() == 3);
  CHECK(rep.h0 == Scalar(-1));
  for (const auto& c : rep.classes) {
    CHECK(c.matches);
    CHECK(c.computed == c.alternating);
    CHECK(c.computed == c.closed_form);
  }
  // Identity: total dimension r^l.
  Scalar total;
  for (const auto& s : rep.classes.front().computed) total += s;
  CHECK(total == Scalar(4));

  const auto w = wreath_quotient(on_er(2, 2, 3, Scalar(Rational(1, 3)), {}), 10);
  const auto rw = euler_character_identity(w.quotient, w.generators, 3, 10);
  CHECK(rw.ok);
  CHECK(rw.classes.size() == 5);
  Scalar tw;
  for (const auto& s : rw.classes.front().computed) tw += s;
  CHECK(tw == Scalar(9));
}
