#pragma once

// Singular vectors given by residues at infinity, the parameter loci they
// live on, the support predicates for type A, the residue lemma oracle, the
// rank one classification, and a kernel-based singular vector solver.
//
// Res_inf w = -(coefficient of z^{-1} in the expansion of w at z = inf).

#include <optional>
#include <random>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/graded_quotient.hpp"
#include "cherednik/polynomial.hpp"

namespace cherednik {

// S_n with k = r / n, n not dividing r.
struct TypeAParams {
  int n = 0;
  int r = 0;

  static TypeAParams make(int n, int r);
  Rational k() const { return Rational(r, n); }
  int d() const;
  ReflectionGroup group() const { return ReflectionGroup(1, n); }
  ParameterFunction params() const { return ParameterFunction::type_a(Scalar(k())); }
};

// G(l,1,n) with r = (p - 1) l + q, 1 <= q <= l - 1; s is the largest integer
// below p / n.
struct WreathParams {
  int l = 0;
  int n = 0;
  int r = 0;
  int p = 0;
  int q = 0;
  int s = 0;
  Scalar k;
  std::vector<Scalar> c;  // c_1 .. c_{l-1}

  static WreathParams make(int l, int n, int r, Scalar k, std::vector<Scalar> c);
  ReflectionGroup group() const { return ReflectionGroup(l, n); }
  ParameterFunction params() const { return ParameterFunction::wreath(k, c); }
};

// f_1 .. f_n, f_i = Res_inf [(z - x_1) ... (z - x_n)]^{r/n} dz / (z - x_i).
std::vector<Polynomial> typeA_singular(const TypeAParams& params);

// f_i = Res_inf z^{(p - nk) l - 1} prod_j (z^l - x_j^l)^k x_i^q dz / (z^l - x_i^l)
// divided by (k - 1) ... (k - s), with k kept formal. The division is exact.
std::vector<KappaPolynomial> wreath_singular_formal(int l, int n, int r);
// The formal vectors evaluated at params.k.
std::vector<Polynomial> wreath_singular(const WreathParams& params);

// l (n - 1) k + 2 sum_j c_j (1 - e^{-jq}) / (1 - e^{-j}) - r; zero on E_r.
Scalar er_residual(const WreathParams& params);
// Value of c_j that puts (k, c) on E_r, the other c's held fixed. Throws
// DomainError if c_j does not enter the equation.
Scalar solve_on_er(int l, int n, int r, const Scalar& k, std::vector<Scalar> c, int j);

// {P/Q : gcd(P, Q) = 1, 1 <= P <= p - 1, 1 <= Q <= n}, in increasing order.
std::vector<Rational> sigma_r(int l, int n, int r);
bool sigma_r_contains(const Rational& k, int l, int n, int r);
bool sigma_r_contains(const Scalar& k, const WreathParams& params);

// All f_i vanish at the point.
bool support_member(const std::vector<Scalar>& point, const TypeAParams& params);
// Every multiplicity of a repeated coordinate value is divisible by n / d.
bool pattern_member(const std::vector<Scalar>& point, const TypeAParams& params);

// Random point with distinct small rational values repeated according to a
// random coincidence pattern; about a third of the draws use a pattern whose
// multiplicities are all divisible by n / d. Coordinates are shuffled.
std::vector<Scalar> sample_support_point(const TypeAParams& params, std::mt19937_64& rng);

struct ResidueLemmaResult {
  // Res_inf a(z) z^i dz for i = 0 .. p - 2.
  std::vector<Scalar> residues;
  bool residues_vanish = false;
  // a(z) = prod (z - y_j)^{mu_j} is a polynomial (all mu_j in Z_{>=0}).
  bool polynomial = false;
};

// Requires distinct y, sum mu in Z and sum mu > -p; throws
// PreconditionError otherwise.
ResidueLemmaResult residue_lemma_oracle(const std::vector<Rational>& mu, const std::vector<Rational>& y);

// Rank one: W = Z/l acting on C by e, parameters c_1 .. c_{l-1}.
class Rank1Data {
 public:
  Rank1Data(int l, std::vector<Scalar> c);

  int l() const { return l_; }
  const std::vector<Scalar>& c() const { return c_; }

  // f_c(z) = sum_j 2 c_j / (1 - e^{-j}) z^j at z = e^power.
  Scalar f_at_root(int power) const;
  // 1/2 - f_c(e^p).
  Scalar lowest_eigenvalue(int p) const;
  // Positive integer f_c(e^p) - f_c(e^m) congruent to p - m mod l, if any.
  std::optional<long> gap(int p, int m) const;
  // Multiplicity of L_c(eta^m) in M_c(eta^p) among composition factors
  // other than the head.
  int multiplicity(int p, int m) const;
  // Smallest gap over m; nullopt means L_c(eta^p) = M_c(eta^p).
  std::optional<long> b(int p) const;
  // Coefficients of t^{h + i}, i = 0..order, in Tr(s^j t^h) on L_c(eta^p).
  std::vector<Scalar> character(int p, int j, unsigned order) const;

  DunklSystem system(int p) const;

 private:
  int l_;
  std::vector<Scalar> c_;
};

// Direct computation in the one-variable module M_c(eta^p): which degrees
// carry singular vectors, and the graded traces of the Gram quotient.
struct Rank1BruteForce {
  std::vector<unsigned> singular_degrees;  // i >= 1 with T x^i = 0
  std::vector<int> multiplicity;           // indexed by m = 0..l-1
  GradedQuotient quotient;
};
Rank1BruteForce rank1_brute_force(const Rank1Data& data, int p, unsigned cutoff);

// c with f_c(e^p) - f_c(e^m) = b, obtained by solving for c_j with the other
// entries fixed. b must be congruent to p - m mod l.
std::vector<Scalar> rank1_resonant_parameters(int l, int p, int m, long b, std::vector<Scalar> c, int j);

// A rank one quotient M_c / (x^b2) that is Gorenstein but not irreducible,
// found by searching c with two singular degrees b1 < b2 in M_c.
struct GorensteinCounterexample {
  int l = 0;
  std::vector<Scalar> c;
  unsigned b1 = 0;
  unsigned b2 = 0;
  std::size_t quotient_dimension = 0;     // b2
  std::size_t irreducible_dimension = 0;  // b1
};
std::optional<GorensteinCounterexample> find_gorenstein_counterexample(int l, long max_degree);

// Basis of the degree-d polynomials killed by T_{e_1} .. T_{e_n}.
std::vector<Polynomial> generic_singular_solver(const DunklSystem& system, unsigned degree,
                                                Execution exec = Execution::serial);

}  // namespace cherednik
