#pragma once

// The groups G(l,1,n) = S_n x| (Z/l)^n (with S_n = G(1,1,n) and Z/l =
// G(l,1,1)), their complex reflections, and conjugation-invariant parameter
// functions on the reflections.
//
// Conventions. An element g = (perm, weights) acts on h = C^n by
//     g e_i = e^{weights[i]} e_{perm[i]},
// where e is the primitive l-th root of unity Cyclotomic::root_of_unity(l, 1).
// The induced action on coordinate functions is g . x_i = e^{-weights[i]} x_{perm[i]},
// and on polynomials (g f)(v) = f(g^{-1} v). Products compose as maps:
// (g h) v = g (h v).

#include <cstddef>
#include <string>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {

struct GroupElement {
  std::vector<int> perm;     // perm[i] = image of coordinate i (0-based)
  std::vector<int> weights;  // residues modulo l, indexed by source coordinate

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

enum class ReflectionKind {
  transposition,  // sigma_{i,j}^{(m)}: x_i <-> x_j twisted by e^{+-m}
  diagonal,       // s_i^m: scales coordinate i by e^m
};

struct Reflection {
  GroupElement element;
  ReflectionKind kind = ReflectionKind::transposition;
  int i = 0;  // coordinates involved (j unused for diagonal reflections)
  int j = 0;
  int m = 0;  // twist / power
  Vector alpha;        // linear form on h vanishing on the fixed hyperplane
  Vector alpha_check;  // vector in h spanning the non-trivial eigenline
  Scalar lambda;       // non-trivial eigenvalue on h*
};

class ReflectionGroup {
 public:
  // G(l,1,n); l = 1 gives S_n and n = 1 gives Z/l. (1,1) is rejected.
  ReflectionGroup(int l, int n);

  // Parses "S(n)", "Z(l)" or "G(l,1,n)".
  static ReflectionGroup parse(const std::string& descriptor);

  int l() const { return l_; }
  int n() const { return n_; }
  // Dimension of the reflection representation: n - 1 for S_n, n otherwise.
  int rank() const { return l_ == 1 ? n_ - 1 : n_; }
  // True for S_n and G(2,1,n) (and Z/2).
  bool is_real() const { return l_ <= 2; }
  bool is_symmetric() const { return l_ == 1; }
  std::string descriptor() const;
  std::size_t order() const;

  Scalar epsilon(long power = 1) const { return Scalar::root_of_unity(l_, power); }

  const std::vector<Reflection>& reflections() const { return reflections_; }

  GroupElement identity() const;
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, int e) const;
  std::vector<GroupElement> elements() const;
  // Smallest element of each conjugacy class in the element ordering.
  std::vector<GroupElement> conjugacy_class_reps() const;
  std::size_t class_size(const GroupElement& g) const;
  std::size_t element_order(const GroupElement& g) const;
  // Generators: s_1^1 (when l > 1) and the adjacent transpositions.
  std::vector<GroupElement> generators() const;

  Matrix matrix_on_h(const GroupElement& g) const;
  Matrix matrix_on_h_dual(const GroupElement& g) const;
  Vector act_on_vector(const GroupElement& g, const Vector& v) const;
  Vector act_on_covector(const GroupElement& g, const Vector& x) const;
  // det(1 - g t) on h* as a polynomial in t. For S_n this is taken on the
  // (n-1)-dimensional reflection representation (the trivial summand
  // 1 - t of C^n divided out).
  UnivariatePolynomial det_one_minus_gt_dual(const GroupElement& g) const;

  // Sign of the underlying permutation.
  int sign(const GroupElement& g) const;
  // Sum of weights modulo l.
  int weight_sum(const GroupElement& g) const;

 private:
  void build_reflections();
  Reflection make_reflection(ReflectionKind kind, int i, int j, int m) const;

  int l_;
  int n_;
  std::vector<Reflection> reflections_;
};

// Conjugation-invariant function c on reflections: k on every
// sigma_{i,j}^{(m)}, c_m on every s_i^m.
class ParameterFunction {
 public:
  ParameterFunction() = default;
  static ParameterFunction type_a(const Scalar& k);
  // c holds c_1 .. c_{l-1}.
  static ParameterFunction wreath(const Scalar& k, std::vector<Scalar> c);
  static ParameterFunction rank1(std::vector<Scalar> c);

  const Scalar& k() const { return k_; }
  const std::vector<Scalar>& c() const { return c_; }
  // c_m for 1 <= m < l (zero when unspecified).
  Scalar c_m(int m) const;
  Scalar value(const Reflection& s) const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  Scalar k_;
  std::vector<Scalar> c_;
};

// One-dimensional character g -> sign(g)^sign_power * e^{weight_power * weight_sum(g)}.
// The rank-1 characters eta^p have weight_power = p.
struct LinearCharacter {
  int sign_power = 0;
  int weight_power = 0;

  static LinearCharacter trivial() { return {}; }
  static LinearCharacter eta(int p) { return {0, p}; }
  Scalar operator()(const ReflectionGroup& group, const GroupElement& g) const;
  bool is_trivial() const { return sign_power % 2 == 0 && weight_power == 0; }
};

}  // namespace cherednik
