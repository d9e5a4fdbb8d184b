#pragma once

// Graded quotients M_c / J of the polynomial representation, truncated at a
// cutoff degree N: submodule closure, Gram (Shapovalov-type) matrices and
// their radicals, Hilbert and character series, the Gorenstein test, and the
// finite-dimensionality decision.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/polynomial.hpp"
#include "cherednik/series.hpp"

namespace cherednik {

// Default cutoff for quotients that are expected to be finite: n r + 2 bounds
// the top degree l (r - 1) of an r^l-dimensional complete intersection.
unsigned default_finite_cutoff(int n, int r);
inline constexpr unsigned kDefaultCutoff = 20;

// How a relation space is closed. Multiplication by every x_i is always
// applied; group and Dunkl closure need a DunklSystem.
struct ClosureOptions {
  bool group = true;
  bool dunkl = true;
  // Dunkl directions; empty means the coordinate directions.
  std::vector<Vector> directions;
  // Generators added to the ideal (and closed under x_i and W) but not fed
  // to Dunkl operators, e.g. x_1 + ... + x_n for the type A reduction.
  std::vector<Polynomial> ideal_only;
  Execution exec = Execution::serial;
};

class GradedQuotient {
 public:
  GradedQuotient(std::size_t nvars, unsigned cutoff, std::optional<DunklSystem> system = std::nullopt,
                 std::vector<Vector> directions = {});

  std::size_t nvars() const { return nvars_; }
  unsigned cutoff() const { return cutoff_; }
  const std::optional<DunklSystem>& system() const { return system_; }
  const std::vector<Vector>& directions() const { return directions_; }

  const MonomialBasis& basis(unsigned m) const { return bases_.at(m); }
  const Subspace& relations(unsigned m) const { return relations_.at(m); }
  Subspace& relations(unsigned m) { return relations_.at(m); }

  std::size_t dimension(unsigned m) const;
  // Per-degree quotient dimensions for m = 0..cutoff.
  std::vector<std::size_t> hilbert_series() const;
  std::size_t total_dimension() const;

  // Homogeneous f of degree <= cutoff reduced modulo the relations.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains_relation(const Polynomial& f) const;

 private:
  std::size_t nvars_;
  unsigned cutoff_;
  std::optional<DunklSystem> system_;
  std::vector<Vector> directions_;
  std::vector<MonomialBasis> bases_;
  std::vector<Subspace> relations_;
};

// Smallest graded subspace containing the generators and closed under the
// operations in options, computed degree by degree up to the cutoff.
GradedQuotient submodule_closure(const DunklSystem& system, const std::vector<Polynomial>& generators, unsigned cutoff,
                                 const ClosureOptions& options = {});

// Quotient of C[x_1..x_n] by the ring ideal generated by the given
// homogeneous polynomials (no group or Dunkl structure).
GradedQuotient ideal_quotient(std::size_t nvars, const std::vector<Polynomial>& generators, unsigned cutoff);

// Gram matrices B_0 .. B_N with B_m(mu, nu) = constant term of T^mu(x^nu),
// rows indexed by degree-m words in the Dunkl directions, columns by degree-m
// monomials.
std::vector<Matrix> gram_matrices(const DunklSystem& system, unsigned max_degree,
                                  const std::vector<Vector>& directions = {}, Execution exec = Execution::serial);
Matrix gram_matrix(const DunklSystem& system, unsigned degree, const std::vector<Vector>& directions = {},
                   Execution exec = Execution::serial);

// Quotient by the per-degree radicals of the Gram matrices (L_c truncated).
// The radical is checked for closure under x_i, W and T_y; a failure throws
// IntegrityError.
GradedQuotient irreducible_quotient(const DunklSystem& system, unsigned cutoff, const std::vector<Vector>& directions = {},
                                    Execution exec = Execution::serial);

// True when the relations of q coincide with the Gram radical in every degree
// up to the cutoff, i.e. the Gram form is nondegenerate on the quotient.
bool gram_radical_vanishes_on(const GradedQuotient& q, Execution exec = Execution::serial);

struct CharacterSeries {
  GroupElement element;
  Scalar shift;               // exponent of t attached to degree 0
  std::vector<Scalar> coefficients;  // coefficient of t^{shift + m}
};

// Traces of g on the graded pieces of q, shifted by the lowest eigenvalue of
// the attached Dunkl system. q must have a system.
CharacterSeries character_series(const GradedQuotient& q, const GroupElement& g);

// chi_tau(g) t^{h_tau} / det_{h*}(1 - g t), expanded through t^{h_tau + N}.
CharacterSeries standard_character(const ReflectionGroup& group, const Scalar& chi_tau_g, const Scalar& h_tau,
                                   const GroupElement& g, unsigned order);
// One-dimensional lowest weight taken from the system.
CharacterSeries standard_character(const DunklSystem& system, const GroupElement& g, unsigned order);

enum class FiniteStatus { finite, unknown_at_cutoff };

struct FiniteDecision {
  FiniteStatus status = FiniteStatus::unknown_at_cutoff;
  std::size_t dimension = 0;   // valid when finite
  unsigned vanishing_degree = 0;  // first degree with a zero component
};

FiniteDecision finite_dim_decide(const GradedQuotient& q);

// Gorenstein test for a finite-dimensional graded quotient ring: the top
// component is one-dimensional and multiplication A_i x A_{top-i} -> A_top is
// a perfect pairing. Throws PreconditionError if q is not finite at its
// cutoff.
bool gorenstein_check(const GradedQuotient& q);

}  // namespace cherednik
