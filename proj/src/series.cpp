#include "cherednik/series.hpp"

#include "cherednik/errors.hpp"

namespace cherednik {

Series series_from_polynomial(const UnivariatePolynomial& p, unsigned order) {
  Series out(order + 1);
  for (unsigned i = 0; i <= order; ++i) out[i] = p.coefficient(i);
  return out;
}

Series series_multiply(const Series& a, const Series& b) {
  if (a.size() != b.size()) throw PreconditionError("series lengths differ");
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series series_inverse(const UnivariatePolynomial& p, unsigned order) {
  const Scalar c0 = p.coefficient(0);
  if (c0.is_zero()) throw DomainError("series inverse needs a nonzero constant term");
  const Scalar inv = c0.inverse();
  Series out(order + 1);
  out[0] = inv;
  for (unsigned m = 1; m <= order; ++m) {
    Scalar acc;
    for (unsigned j = 1; j <= m && static_cast<int>(j) <= p.degree(); ++j) {
      if (!out[m - j].is_zero()) acc += p.coefficient(j) * out[m - j];
    }
    out[m] = -acc * inv;
  }
  return out;
}

UnivariatePolynomial substitute_power(const UnivariatePolynomial& p, unsigned step) {
  if (p.is_zero()) return p;
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()) * step + 1);
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i) * step] = p.coefficient(static_cast<std::size_t>(i));
  return UnivariatePolynomial(std::move(out));
}

Series series_shift(const Series& a, unsigned offset) {
  Series out(a.size());
  for (std::size_t i = 0; i + offset < a.size(); ++i) out[i + offset] = a[i];
  return out;
}

}  // namespace cherednik
