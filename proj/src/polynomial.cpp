#include "cherednik/polynomial.hpp"

#include <functional>

namespace cherednik {

std::vector<Exponents> graded_basis(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  // Depth-first, largest exponent of the earliest variable first: this is
  // descending lexicographic order.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos, unsigned remaining) {
    if (pos + 1 == n) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      e[pos] = a;
      fill(pos + 1, remaining - a);
    }
  };
  fill(0, d);
  return out;
}

std::size_t graded_dimension(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(d + n - 1, n - 1)
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), d + n - 1, n - 1);
  return c.get_ui();
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), monomials_(graded_basis(nvars, degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw PreconditionError("monomial not in this graded basis");
  return it->second;
}

Vector MonomialBasis::to_vector(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw PreconditionError("polynomial has wrong number of variables");
  Vector v(monomials_.size());
  for (const auto& [e, c] : f.terms()) v[index(e)] = c;
  return v;
}

Polynomial MonomialBasis::to_polynomial(const Vector& v) const {
  if (v.size() != monomials_.size()) throw PreconditionError("coordinate vector has wrong length");
  Polynomial f(nvars_);
  for (std::size_t i = 0; i < v.size(); ++i) f.add_term(monomials_[i], v[i]);
  return f;
}

Polynomial act(const ReflectionGroup& group, const GroupElement& g, const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (n != static_cast<std::size_t>(group.n())) throw PreconditionError("polynomial and group dimensions differ");
  Polynomial out(n);
  Exponents image(n);
  for (const auto& [e, c] : f.terms()) {
    long twist = 0;
    for (std::size_t i = 0; i < n; ++i) {
      image[static_cast<std::size_t>(g.perm[i])] = e[i];
      twist -= static_cast<long>(g.weights[i]) * e[i];
    }
    out.add_term(image, twist % group.l() == 0 ? c : c * group.epsilon(twist));
  }
  return out;
}

Polynomial divide_by_linear_form(const Polynomial& f, const Vector& alpha) {
  const std::size_t n = f.nvars();
  if (alpha.size() != n) throw PreconditionError("linear form has wrong number of variables");
  std::size_t lead = 0;
  while (lead < n && alpha[lead].is_zero()) ++lead;
  if (lead == n) throw DomainError("division by the zero linear form");
  const Scalar lead_inv = alpha[lead].inverse();

  Polynomial remainder = f;
  Polynomial quotient(n);
  while (!remainder.is_zero()) {
    const auto& [e, c] = *remainder.terms().begin();
    if (e[lead] == 0) throw IntegrityError("polynomial is not divisible by the linear form");
    Exponents t = e;
    --t[lead];
    const Scalar q = c * lead_inv;
    quotient.add_term(t, q);
    Polynomial step(n);
    for (std::size_t i = lead; i < n; ++i) {
      if (alpha[i].is_zero()) continue;
      Exponents u = t;
      ++u[i];
      step.add_term(std::move(u), q * alpha[i]);
    }
    remainder -= step;
  }
  return quotient;
}

Polynomial divided_difference(const ReflectionGroup& group, const Reflection& s, const Polynomial& f) {
  return divide_by_linear_form(f - act(group, s.element, f), s.alpha);
}

Scalar evaluate(const Polynomial& f, const Vector& point) {
  if (point.size() != f.nvars()) throw PreconditionError("evaluation point has wrong dimension");
  Scalar out;
  for (const auto& [e, c] : f.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    out += term;
  }
  return out;
}

Polynomial linear_form(const Vector& coefficients) {
  Polynomial f(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Exponents e(coefficients.size(), 0);
    e[i] = 1;
    f.add_term(std::move(e), coefficients[i]);
  }
  return f;
}

}  // namespace cherednik
