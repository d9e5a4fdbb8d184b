#pragma once

// Builders and small oracles shared by the unit tests and the acceptance run.

#include <random>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/graded_quotient.hpp"
#include "cherednik/singular.hpp"

namespace testing_support {

using namespace cherednik;

struct Built {
  DunklSystem system;
  std::vector<Polynomial> generators;
  GradedQuotient quotient;
};

inline Polynomial sum_of_variables(std::size_t n) {
  Polynomial e1(n);
  for (std::size_t i = 0; i < n; ++i) e1 += Polynomial::variable(n, i);
  return e1;
}

// V_k = M_k / (f_1..f_n, x_1 + ... + x_n) for k = r / n.
inline Built type_a_quotient(int n, int r, unsigned cutoff, Execution exec = Execution::serial) {
  const auto tp = TypeAParams::make(n, r);
  DunklSystem system(tp.group(), tp.params());
  auto gens = typeA_singular(tp);
  ClosureOptions options;
  options.directions = type_a_directions(static_cast<std::size_t>(n));
  options.ideal_only = {sum_of_variables(static_cast<std::size_t>(n))};
  options.exec = exec;
  auto q = submodule_closure(system, gens, cutoff, options);
  return {system, gens, q};
}

// M_c / (f_1..f_n) for c on E_r.
inline Built wreath_quotient(const WreathParams& w, unsigned cutoff, Execution exec = Execution::serial) {
  DunklSystem system(w.group(), w.params());
  auto gens = wreath_singular(w);
  ClosureOptions options;
  options.exec = exec;
  auto q = submodule_closure(system, gens, cutoff, options);
  return {system, gens, q};
}

// Wreath parameters on E_r: c_1 solved, the other c_j fixed.
inline WreathParams on_er(int l, int n, int r, const Scalar& k, std::vector<Scalar> c) {
  c.resize(static_cast<std::size_t>(l - 1));
  c[0] = solve_on_er(l, n, r, k, c, 1);
  return WreathParams::make(l, n, r, k, c);
}

inline Rational random_rational(std::mt19937_64& rng, long num = 9, long den = 7) {
  std::uniform_int_distribution<long> a(-num, num), b(1, den);
  Rational q(a(rng), b(rng));
  q.canonicalize();
  return q;
}

inline Scalar random_scalar(std::mt19937_64& rng, int order) {
  std::vector<Rational> v;
  for (int i = 0; i < std::max(order, 1); ++i) v.push_back(random_rational(rng));
  return order <= 2 ? Scalar(v[0]) : Scalar::from_powers(order, v);
}

// Random homogeneous polynomial of degree d.
inline Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t n, unsigned d, int order = 1) {
  Polynomial f(n);
  for (const auto& e : graded_basis(n, d)) {
    if (rng() % 3 == 0) continue;
    f.add_term(e, random_scalar(rng, order));
  }
  return f;
}

// Coefficients of (1 - t^a)^n / (1 - t)^n, i.e. ((1 - t^a) / (1 - t))^n, through degree top.
inline std::vector<std::size_t> power_of_truncated_geometric(unsigned a, unsigned n, unsigned top) {
  std::vector<std::size_t> acc(top + 1, 0);
  acc[0] = 1;
  for (unsigned f = 0; f < n; ++f) {
    std::vector<std::size_t> next(top + 1, 0);
    for (unsigned i = 0; i <= top; ++i) {
      for (unsigned j = 0; j < a && i + j <= top; ++j) next[i + j] += acc[i];
    }
    acc = next;
  }
  return acc;
}

}  // namespace testing_support
