#pragma once

// Euler characteristic of the resolution of A = M_c / (U) by standard
// modules M_c(wedge^i U), where U is a space of degree-r singular vectors:
//   chi_A(g, t) = sum_i (-1)^i chi_{M_c(wedge^i U)}(g, t)
//               = t^{h0} det_U(1 - g t^r) / det_{h*}(1 - g t).

#include <vector>

#include "cherednik/graded_quotient.hpp"

namespace cherednik {

struct EulerClassReport {
  GroupElement element;
  std::vector<Scalar> computed;     // traces on A
  std::vector<Scalar> alternating;  // sum of standard characters
  std::vector<Scalar> closed_form;
  bool matches = false;
};

struct EulerReport {
  Scalar h0;
  // Lowest eigenvalue on M_c(wedge^i U), i = 0..dim U.
  std::vector<Scalar> exterior_shifts;
  std::vector<EulerClassReport> classes;
  bool ok = false;
};

// Matrix of g on span(generators) in the basis of its reduced echelon form.
Matrix representation_matrix(const ReflectionGroup& group, const GroupElement& g, const std::vector<Polynomial>& generators);

// a must carry a Dunkl system with trivial lowest weight; the generators are
// homogeneous of degree r and span a W-stable space of singular vectors.
// Series run through t^{h0 + order}. Throws IntegrityError when the lowest
// eigenvalue of M_c(wedge^i U) is not h0 + i r.
EulerReport euler_character_identity(const GradedQuotient& a, const std::vector<Polynomial>& generators, unsigned r,
                                     unsigned order);

}  // namespace cherednik
