#pragma once

// Sparse multivariate polynomials. Terms are keyed by exponent vectors and
// kept in descending lexicographic order (x1 > x2 > ...), so iteration order
// and rendering are deterministic. Zero coefficients are never stored.

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/reflection_group.hpp"

namespace cherednik {

using Exponents = std::vector<unsigned>;

struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

template <class Ring>
class BasicPolynomial {
 public:
  using Terms = std::map<Exponents, Ring, LexGreater>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static BasicPolynomial constant(std::size_t nvars, const Ring& value) {
    BasicPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), value);
    return p;
  }
  static BasicPolynomial variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), Ring(1));
  }
  static BasicPolynomial monomial(Exponents e, const Ring& coefficient) {
    BasicPolynomial p(e.size());
    p.add_term(std::move(e), coefficient);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) != d) return false;
    }
    return true;
  }

  Ring coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Ring() : it->second;
  }

  void add_term(Exponents e, const Ring& coefficient) {
    if (e.size() != nvars_) throw PreconditionError("monomial has wrong number of variables");
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicPolynomial& operator+=(const BasicPolynomial& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  BasicPolynomial& operator*=(const Ring& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(BasicPolynomial a, const Ring& s) { return a *= s; }
  friend BasicPolynomial operator*(const Ring& s, BasicPolynomial a) { return a *= s; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_compatible(b);
    BasicPolynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  BasicPolynomial operator-() const {
    BasicPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) { return !(a == b); }

  BasicPolynomial derivative(std::size_t i) const {
    BasicPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      --f[i];
      out.add_term(std::move(f), c * Ring(static_cast<long>(e[i])));
    }
    return out;
  }

  BasicPolynomial times_variable(std::size_t i) const {
    BasicPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      ++f[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  BasicPolynomial homogeneous_component(unsigned d) const {
    BasicPolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> BasicPolynomial<decltype(f(std::declval<const Ring&>()))> {
    BasicPolynomial<decltype(f(std::declval<const Ring&>()))> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  void check_compatible(const BasicPolynomial& other) const {
    if (nvars_ != other.nvars_) throw PreconditionError("polynomials have different numbers of variables");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using Polynomial = BasicPolynomial<Scalar>;
// Polynomial whose coefficients depend polynomially on a formal parameter.
using KappaPolynomial = BasicPolynomial<FormalParamPoly>;

// All monomials of degree d in n variables, in descending lexicographic
// order; there are C(d + n - 1, n - 1) of them.
std::vector<Exponents> graded_basis(std::size_t n, unsigned d);
std::size_t graded_dimension(std::size_t n, unsigned d);

// Coordinates of homogeneous polynomials of one degree in the monomial basis.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  // Throws PreconditionError for a monomial of another degree.
  std::size_t index(const Exponents& e) const;

  Vector to_vector(const Polynomial& f) const;
  Polynomial to_polynomial(const Vector& v) const;

 private:
  struct Hash {
    std::size_t operator()(const Exponents& e) const {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : e) h = (h ^ x) * 1099511628211ULL;
      return h;
    }
  };
  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  std::vector<Exponents> monomials_;
  std::unordered_map<Exponents, std::size_t, Hash> index_;
};

// (g f)(v) = f(g^{-1} v); a ring automorphism and a left action.
Polynomial act(const ReflectionGroup& group, const GroupElement& g, const Polynomial& f);

// f / alpha for a nonzero linear form alpha (coefficient vector); throws
// IntegrityError unless the division is exact.
Polynomial divide_by_linear_form(const Polynomial& f, const Vector& alpha);

// (f - s f) / alpha_s, always a polynomial for a genuine reflection.
Polynomial divided_difference(const ReflectionGroup& group, const Reflection& s, const Polynomial& f);

Scalar evaluate(const Polynomial& f, const Vector& point);

// Linear form sum_i coefficients[i] x_i.
Polynomial linear_form(const Vector& coefficients);

}  // namespace cherednik
