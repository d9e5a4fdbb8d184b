#include "cherednik/dunkl.hpp"

#include "cherednik/kernels.hpp"

namespace cherednik {

Vector coordinate_direction(std::size_t n, std::size_t i) {
  Vector y(n);
  y.at(i) = Scalar(1);
  return y;
}

std::vector<Vector> coordinate_directions(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(coordinate_direction(n, i));
  return out;
}

std::vector<Vector> type_a_directions(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vector y(n);
    y[i] = Scalar(1);
    y[i + 1] = Scalar(-1);
    out.push_back(std::move(y));
  }
  return out;
}

DunklSystem::DunklSystem(ReflectionGroup group, ParameterFunction params, LinearCharacter tau)
    : group_(std::move(group)), params_(std::move(params)), tau_(tau) {
  for (const auto& s : group_.reflections()) {
    weights_.push_back(Scalar(2) * params_.value(s) / (Scalar(1) - s.lambda));
    tau_on_reflections_.push_back(tau_(group_, s.element));
  }
}

Polynomial DunklSystem::apply(const Vector& y, const Polynomial& f) const {
  const std::size_t n = nvars();
  if (y.size() != n || f.nvars() != n) throw PreconditionError("Dunkl operator dimension mismatch");
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!y[i].is_zero()) out += f.derivative(i) * y[i];
  }
  const auto& refl = group_.reflections();
  for (std::size_t r = 0; r < refl.size(); ++r) {
    if (weights_[r].is_zero()) continue;
    Scalar pairing;
    for (std::size_t i = 0; i < n; ++i) pairing += refl[r].alpha[i] * y[i];
    if (pairing.is_zero()) continue;
    out -= divided_difference(group_, refl[r], f) * (weights_[r] * pairing * tau_on_reflections_[r]);
  }
  return out;
}

Polynomial DunklSystem::apply(std::size_t direction, const Polynomial& f) const {
  return apply(coordinate_direction(nvars(), direction), f);
}

Polynomial DunklSystem::act(const GroupElement& g, const Polynomial& f) const {
  Polynomial out = cherednik::act(group_, g, f);
  if (!tau_.is_trivial()) out *= tau_(group_, g);
  return out;
}

Scalar DunklSystem::lowest_eigenvalue() const {
  Scalar h = Scalar(Rational(group_.rank(), 2));
  for (std::size_t r = 0; r < weights_.size(); ++r) h -= weights_[r] * tau_on_reflections_[r];
  return h;
}

Scalar DunklSystem::ambient_lowest_eigenvalue() const {
  return lowest_eigenvalue() + Scalar(Rational(group_.n() - group_.rank(), 2));
}

Polynomial DunklSystem::grading_element(const Polynomial& f) const {
  const std::size_t n = nvars();
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) out += apply(i, f).times_variable(i);
  out += f * Scalar(Rational(static_cast<long>(n), 2));
  const auto& refl = group_.reflections();
  for (std::size_t r = 0; r < refl.size(); ++r) {
    if (weights_[r].is_zero()) continue;
    out -= act(refl[r].element, f) * weights_[r];
  }
  return out;
}

Polynomial DunklSystem::sl2_e(const Polynomial& f) const {
  if (!group_.is_real()) throw PreconditionError("sl2 triple requires a real reflection group");
  Polynomial out(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) out += f.times_variable(i).times_variable(i);
  return out * Scalar(Rational(1, 2));
}

Polynomial DunklSystem::sl2_f(const Polynomial& f) const {
  if (!group_.is_real()) throw PreconditionError("sl2 triple requires a real reflection group");
  Polynomial out(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) out += apply(i, apply(i, f));
  return out * Scalar(Rational(-1, 2));
}

Scalar lowest_eigenvalue(const ReflectionGroup& group, const ParameterFunction& params, const LinearCharacter& tau) {
  return DunklSystem(group, params, tau).lowest_eigenvalue();
}

Matrix dunkl_matrix(const DunklSystem& system, const Vector& y, unsigned degree, Execution exec) {
  return exec == Execution::parallel ? kernels::parallel::dunkl_matrix(system, y, degree)
                                     : kernels::serial::dunkl_matrix(system, y, degree);
}

}  // namespace cherednik
