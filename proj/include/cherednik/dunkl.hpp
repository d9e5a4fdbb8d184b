#pragma once

// Dunkl operators on M_c(tau) = C[x_1..x_n] (x) tau for a one-dimensional
// lowest weight tau, the grading element h, and the sl2 triple (h, E, F) for
// real groups.
//
//   T_y f = d_y f - sum_s (2 c_s / (1 - lambda_s)) (alpha_s, y) tau(s) (f - s f) / alpha_s
//   h     = sum_i x_i T_{e_i} + n/2 - sum_s (2 c_s / (1 - lambda_s)) s
//
// For S_n the ambient space is all of C^n (reflection representation plus a
// trivial line); see type_a_directions() for the directions of h proper.

#include <cstddef>
#include <vector>

#include "cherednik/polynomial.hpp"
#include "cherednik/reflection_group.hpp"

namespace cherednik {

Vector coordinate_direction(std::size_t n, std::size_t i);
std::vector<Vector> coordinate_directions(std::size_t n);
// e_i - e_{i+1}, i = 1..n-1: a basis of the sum-zero hyperplane, whose Dunkl
// operators commute with multiplication by x_1 + ... + x_n.
std::vector<Vector> type_a_directions(std::size_t n);

class DunklSystem {
 public:
  DunklSystem(ReflectionGroup group, ParameterFunction params, LinearCharacter tau = LinearCharacter::trivial());

  const ReflectionGroup& group() const { return group_; }
  const ParameterFunction& params() const { return params_; }
  const LinearCharacter& tau() const { return tau_; }
  std::size_t nvars() const { return static_cast<std::size_t>(group_.n()); }

  // 2 c_s / (1 - lambda_s), in the order of group().reflections().
  const std::vector<Scalar>& reflection_weights() const { return weights_; }

  Polynomial apply(const Vector& y, const Polynomial& f) const;
  Polynomial apply(std::size_t direction, const Polynomial& f) const;

  // g acting on M_c(tau): (g f) tau(g).
  Polynomial act(const GroupElement& g, const Polynomial& f) const;

  // h(tau) = l/2 - sum_s (2 c_s / (1 - lambda_s)) tau(s) with l the rank of
  // the reflection representation.
  Scalar lowest_eigenvalue() const;
  // Same with l = n, the eigenvalue on the ambient C[x_1..x_n].
  Scalar ambient_lowest_eigenvalue() const;

  // The grading element h applied literally (not via the degree).
  Polynomial grading_element(const Polynomial& f) const;
  // E = 1/2 sum x_i^2 and F = -1/2 sum T_i^2, so that [E, F] = h,
  // [h, E] = 2E, [h, F] = -2F. Only for real groups.
  Polynomial sl2_e(const Polynomial& f) const;
  Polynomial sl2_f(const Polynomial& f) const;

 private:
  ReflectionGroup group_;
  ParameterFunction params_;
  LinearCharacter tau_;
  std::vector<Scalar> weights_;
  std::vector<Scalar> tau_on_reflections_;
};

// Lowest eigenvalue of h on M_c(tau) for a one-dimensional tau.
Scalar lowest_eigenvalue(const ReflectionGroup& group, const ParameterFunction& params,
                         const LinearCharacter& tau = LinearCharacter::trivial());

// Matrix of T_y from degree d to degree d - 1 in the monomial bases. d >= 1.
Matrix dunkl_matrix(const DunklSystem& system, const Vector& y, unsigned degree,
                    Execution exec = Execution::serial);

}  // namespace cherednik
