#include "cherednik/euler.hpp"

namespace cherednik {

Matrix representation_matrix(const ReflectionGroup& group, const GroupElement& g, const std::vector<Polynomial>& generators) {
  if (generators.empty()) return Matrix();
  const auto degree = static_cast<unsigned>(generators.front().degree());
  const MonomialBasis basis(generators.front().nvars(), degree);
  Subspace span(basis.size());
  for (const auto& f : generators) span.insert(basis.to_vector(f));
  const std::size_t u = span.dimension();
  Matrix out(u, u);
  for (std::size_t a = 0; a < u; ++a) {
    const Vector image = basis.to_vector(act(group, g, basis.to_polynomial(span.basis()[a])));
    if (!span.contains(image)) throw IntegrityError("singular span is not stable under the group");
    out.set_column(a, span.coordinates(image));
  }
  return out;
}

EulerReport euler_character_identity(const GradedQuotient& a, const std::vector<Polynomial>& generators, unsigned r,
                                     unsigned order) {
  if (!a.system()) throw PreconditionError("Euler identity needs a Dunkl system");
  const auto& system = *a.system();
  if (!system.tau().is_trivial()) throw PreconditionError("Euler identity is stated for the polynomial representation");
  if (order > a.cutoff()) throw PreconditionError("order exceeds the quotient cutoff");
  const auto& group = system.group();
  const auto& refl = group.reflections();
  const auto& weights = system.reflection_weights();

  EulerReport report;
  report.h0 = system.lowest_eigenvalue();

  // h(wedge^i U) = l/2 - (trace of sum_s w_s s on wedge^i U) / dim wedge^i U.
  std::vector<UnivariatePolynomial> reflection_exteriors;
  for (const auto& s : refl) reflection_exteriors.push_back(det_one_plus_t(representation_matrix(group, s.element, generators)));
  const std::size_t u = representation_matrix(group, group.identity(), generators).rows();
  for (std::size_t i = 0; i <= u; ++i) {
    Scalar central;
    for (std::size_t s = 0; s < refl.size(); ++s) central += weights[s] * reflection_exteriors[s].coefficient(i);
    const Scalar dim(generalized_binomial(Rational(static_cast<long>(u)), static_cast<unsigned>(i)));
    const Scalar h = Scalar(Rational(group.rank(), 2)) - central / dim;
    if (!(h - report.h0 == Scalar(static_cast<long>(i * r)))) {
      throw IntegrityError("lowest eigenvalue of the exterior power " + std::to_string(i) + " is not h0 + i r");
    }
    report.exterior_shifts.push_back(h);
  }

  report.ok = true;
  for (const auto& g : group.conjugacy_class_reps()) {
    EulerClassReport row;
    row.element = g;
    auto computed = character_series(a, g);
    computed.coefficients.resize(order + 1);
    row.computed = computed.coefficients;

    const UnivariatePolynomial exterior = det_one_plus_t(representation_matrix(group, g, generators));
    row.alternating.assign(order + 1, Scalar(0));
    for (std::size_t i = 0; i <= u; ++i) {
      Scalar chi = exterior.coefficient(i);
      if (i % 2 == 1) chi = -chi;
      const auto standard = standard_character(group, chi, report.exterior_shifts[i], g, order);
      const Scalar offset = standard.shift - report.h0;
      const auto step = static_cast<std::size_t>(offset.to_rational().get_num().get_ui());
      for (std::size_t m = 0; m + step <= order; ++m) row.alternating[m + step] += standard.coefficients[m];
    }

    // det_U(1 - g t^r) = sum_i (-1)^i e_i(g) t^{i r}.
    std::vector<Scalar> numerator(u * r + 1);
    for (std::size_t i = 0; i <= u; ++i) numerator[i * r] = (i % 2 == 1) ? -exterior.coefficient(i) : exterior.coefficient(i);
    row.closed_form = series_multiply(series_from_polynomial(UnivariatePolynomial(numerator), order),
                                      series_inverse(group.det_one_minus_gt_dual(g), order));
    row.matches = row.computed == row.alternating && row.alternating == row.closed_form &&
                  computed.shift == report.h0;
    report.ok = report.ok && row.matches;
    report.classes.push_back(std::move(row));
  }
  return report;
}

}  // namespace cherednik
