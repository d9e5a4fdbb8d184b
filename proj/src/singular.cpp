#include "cherednik/singular.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cherednik {

namespace {

template <class Ring>
BasicPolynomial<Ring> truncated_product(const BasicPolynomial<Ring>& a, const BasicPolynomial<Ring>& b,
                                        unsigned max_degree) {
  BasicPolynomial<Ring> out(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    const unsigned da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > max_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Exponents power_of(std::size_t n, std::size_t i, unsigned e) {
  Exponents out(n, 0);
  out[i] = e;
  return out;
}

int positive_mod(long a, int l) {
  const long r = a % l;
  return static_cast<int>(r < 0 ? r + l : r);
}

}  // namespace

TypeAParams TypeAParams::make(int n, int r) {
  if (n < 2) throw PreconditionError("type A needs n >= 2");
  if (r < 1) throw PreconditionError("r must be a positive integer");
  if (r % n == 0) throw PreconditionError("r must not be divisible by n");
  return {n, r};
}

int TypeAParams::d() const { return std::gcd(n, r); }

WreathParams WreathParams::make(int l, int n, int r, Scalar k, std::vector<Scalar> c) {
  if (l < 2) throw PreconditionError("wreath case needs l >= 2");
  if (n < 1) throw PreconditionError("n must be positive");
  if (r < 1 || r % l == 0) throw PreconditionError("r must be positive and not divisible by l");
  if (c.size() > static_cast<std::size_t>(l - 1)) throw PreconditionError("too many c values");
  c.resize(static_cast<std::size_t>(l - 1));
  WreathParams w;
  w.l = l;
  w.n = n;
  w.r = r;
  w.q = r % l;
  w.p = (r - w.q) / l + 1;
  w.s = (w.p + n - 1) / n - 1;
  w.k = std::move(k);
  w.c = std::move(c);
  return w;
}

std::vector<Polynomial> typeA_singular(const TypeAParams& params) {
  const auto n = static_cast<std::size_t>(params.n);
  const auto r = static_cast<unsigned>(params.r);
  const Rational k = params.k();
  if (k * params.n != params.r) throw IntegrityError("k n != r");

  // prod_j (1 - x_j u)^{r/n}, setting u = 1 and keeping degrees <= r.
  Polynomial common = Polynomial::constant(n, Scalar(1));
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial factor(n);
    for (unsigned t = 0; t <= r; ++t) {
      Rational c = generalized_binomial(k, t);
      if (t % 2 == 1) c = -c;
      factor.add_term(power_of(n, j, t), Scalar(c));
    }
    common = truncated_product(common, factor, r);
  }
  // The z-exponent r - 1 - t is integral for every t, and the z^{-1} term is t = r.
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial geometric(n);
    for (unsigned t = 0; t <= r; ++t) geometric.add_term(power_of(n, i, t), Scalar(1));
    out.push_back(-truncated_product(common, geometric, r).homogeneous_component(r));
  }
  return out;
}

std::vector<KappaPolynomial> wreath_singular_formal(int l, int n, int r) {
  const auto w = WreathParams::make(l, n, r, Scalar(0), {});
  const auto nv = static_cast<std::size_t>(n);
  const auto lu = static_cast<unsigned>(l);
  // In w = z^{-l} the integrand is z^{pl - l - 1} sum_t B_t w^t x_i^q, so the
  // z^{-1} term is t = p - 1.
  const int z_exponent = w.p * l - l - 1;
  if ((z_exponent + 1) % l != 0) throw IntegrityError("non-integral residue index in wreath expansion");
  const auto t_max = static_cast<unsigned>((z_exponent + 1) / l);
  const unsigned top = lu * t_max;

  KappaPolynomial common = KappaPolynomial::constant(nv, FormalParamPoly(Scalar(1)));
  for (std::size_t j = 0; j < nv; ++j) {
    KappaPolynomial factor(nv);
    for (unsigned t = 0; t <= t_max; ++t) {
      FormalParamPoly c = FormalParamPoly::binomial(t);
      if (t % 2 == 1) c = -c;
      factor.add_term(power_of(nv, j, lu * t), c);
    }
    common = truncated_product(common, factor, top);
  }
  std::vector<Scalar> roots;
  for (int i = 1; i <= w.s; ++i) roots.emplace_back(i);
  const FormalParamPoly normalization = FormalParamPoly::from_roots(roots);

  std::vector<KappaPolynomial> out;
  for (std::size_t i = 0; i < nv; ++i) {
    KappaPolynomial geometric(nv);
    for (unsigned t = 0; t <= t_max; ++t) geometric.add_term(power_of(nv, i, lu * t), FormalParamPoly(Scalar(1)));
    const auto head = truncated_product(common, geometric, top).homogeneous_component(top);
    KappaPolynomial f(nv);
    for (const auto& [e, c] : head.terms()) {
      Exponents shifted = e;
      shifted[i] += static_cast<unsigned>(w.q);
      f.add_term(std::move(shifted), -formal_div_exact(c, normalization));
    }
    if (f.is_zero()) throw IntegrityError("wreath singular vector vanishes identically");
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> wreath_singular(const WreathParams& params) {
  std::vector<Polynomial> out;
  for (const auto& f : wreath_singular_formal(params.l, params.n, params.r)) {
    out.push_back(f.map_coefficients([&](const FormalParamPoly& c) { return c.evaluate(params.k); }));
  }
  return out;
}

namespace {

Scalar er_weight(int l, int q, int j) {
  return Scalar(2) * (Scalar(1) - Scalar::root_of_unity(l, -static_cast<long>(j) * q)) /
         (Scalar(1) - Scalar::root_of_unity(l, -j));
}

}  // namespace

Scalar er_residual(const WreathParams& params) {
  Scalar out = Scalar(params.l * (params.n - 1)) * params.k - Scalar(params.r);
  for (int j = 1; j < params.l; ++j) out += er_weight(params.l, params.q, j) * params.c[static_cast<std::size_t>(j - 1)];
  return out;
}

Scalar solve_on_er(int l, int n, int r, const Scalar& k, std::vector<Scalar> c, int j) {
  if (j < 1 || j >= l) throw PreconditionError("c index out of range");
  c.resize(static_cast<std::size_t>(l - 1));
  c[static_cast<std::size_t>(j - 1)] = Scalar(0);
  const auto w = WreathParams::make(l, n, r, k, c);
  const Scalar weight = er_weight(l, w.q, j);
  if (weight.is_zero()) throw DomainError("c_" + std::to_string(j) + " does not enter the E_r equation");
  return -er_residual(w) / weight;
}

std::vector<Rational> sigma_r(int l, int n, int r) {
  const auto w = WreathParams::make(l, n, r, Scalar(0), {});
  std::vector<Rational> out;
  for (int P = 1; P <= w.p - 1; ++P) {
    for (int Q = 1; Q <= n; ++Q) {
      if (std::gcd(P, Q) == 1) out.emplace_back(P, Q);
    }
  }
  for (auto& x : out) x.canonicalize();
  std::sort(out.begin(), out.end());
  return out;
}

bool sigma_r_contains(const Rational& k, int l, int n, int r) {
  const auto set = sigma_r(l, n, r);
  return std::binary_search(set.begin(), set.end(), k);
}

bool sigma_r_contains(const Scalar& k, const WreathParams& params) {
  if (!k.is_rational()) return false;
  return sigma_r_contains(k.to_rational(), params.l, params.n, params.r);
}

bool support_member(const std::vector<Scalar>& point, const TypeAParams& params) {
  if (point.size() != static_cast<std::size_t>(params.n)) throw PreconditionError("point has wrong dimension");
  for (const auto& f : typeA_singular(params)) {
    if (!evaluate(f, point).is_zero()) return false;
  }
  return true;
}

bool pattern_member(const std::vector<Scalar>& point, const TypeAParams& params) {
  if (point.size() != static_cast<std::size_t>(params.n)) throw PreconditionError("point has wrong dimension");
  const int block = params.n / params.d();
  std::vector<bool> seen(point.size(), false);
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (seen[i]) continue;
    int count = 0;
    for (std::size_t j = i; j < point.size(); ++j) {
      if (point[j] == point[i]) {
        seen[j] = true;
        ++count;
      }
    }
    if (count % block != 0) return false;
  }
  return true;
}

std::vector<Scalar> sample_support_point(const TypeAParams& params, std::mt19937_64& rng) {
  const int n = params.n;
  const int block = n / params.d();
  std::vector<int> multiplicities;
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    int left = n / block;
    while (left > 0) {
      const int take = std::uniform_int_distribution<int>(1, left)(rng);
      multiplicities.push_back(take * block);
      left -= take;
    }
  } else {
    int left = n;
    while (left > 0) {
      const int take = std::uniform_int_distribution<int>(1, left)(rng);
      multiplicities.push_back(take);
      left -= take;
    }
  }
  std::vector<Rational> values;
  std::uniform_int_distribution<int> numerator(-20, 20);
  std::uniform_int_distribution<int> denominator(1, 6);
  while (values.size() < multiplicities.size()) {
    Rational v(numerator(rng), denominator(rng));
    v.canonicalize();
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  std::vector<Scalar> point;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    for (int j = 0; j < multiplicities[i]; ++j) point.emplace_back(values[i]);
  }
  std::shuffle(point.begin(), point.end(), rng);
  return point;
}

ResidueLemmaResult residue_lemma_oracle(const std::vector<Rational>& mu, const std::vector<Rational>& y) {
  if (mu.size() != y.size() || mu.empty()) throw PreconditionError("need one exponent per point");
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      if (y[i] == y[j]) throw PreconditionError("points must be distinct");
    }
  }
  const long p = static_cast<long>(y.size());
  Rational total = 0;
  for (const auto& m : mu) total += m;
  if (total.get_den() != 1) throw PreconditionError("sum of exponents must be an integer");
  if (total <= -p) throw PreconditionError("sum of exponents must exceed -p");
  const long M = total.get_num().get_si();

  // a(z) z^i = z^{M + i} prod_j (1 - y_j u)^{mu_j} with u = 1/z; the z^{-1}
  // coefficient is the u^{M + i + 1} coefficient of the product.
  const long top = M + p - 1;
  std::vector<Rational> series(static_cast<std::size_t>(std::max(top, 0L)) + 1, 0);
  series[0] = 1;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    std::vector<Rational> factor(series.size());
    Rational power = 1;
    for (std::size_t t = 0; t < factor.size(); ++t) {
      factor[t] = generalized_binomial(mu[j], static_cast<unsigned>(t)) * power;
      power *= -y[j];
    }
    std::vector<Rational> next(series.size(), 0);
    for (std::size_t a = 0; a < series.size(); ++a) {
      if (series[a] == 0) continue;
      for (std::size_t b = 0; a + b < series.size(); ++b) next[a + b] += series[a] * factor[b];
    }
    series = std::move(next);
  }

  ResidueLemmaResult out;
  out.residues_vanish = true;
  for (long i = 0; i <= p - 2; ++i) {
    const long index = M + i + 1;
    const Rational value = index < 0 ? Rational(0) : Rational(-series[static_cast<std::size_t>(index)]);
    if (value != 0) out.residues_vanish = false;
    out.residues.emplace_back(value);
  }
  out.polynomial = std::all_of(mu.begin(), mu.end(), [](const Rational& m) { return m.get_den() == 1 && m >= 0; });
  return out;
}

Rank1Data::Rank1Data(int l, std::vector<Scalar> c) : l_(l), c_(std::move(c)) {
  if (l < 2) throw PreconditionError("rank one needs l >= 2");
  if (c_.size() > static_cast<std::size_t>(l - 1)) throw PreconditionError("too many c values");
  c_.resize(static_cast<std::size_t>(l - 1));
}

Scalar Rank1Data::f_at_root(int power) const {
  Scalar out;
  for (int j = 1; j < l_; ++j) {
    const Scalar& cj = c_[static_cast<std::size_t>(j - 1)];
    if (cj.is_zero()) continue;
    out += Scalar(2) * cj / (Scalar(1) - Scalar::root_of_unity(l_, -j)) *
           Scalar::root_of_unity(l_, static_cast<long>(j) * power);
  }
  return out;
}

Scalar Rank1Data::lowest_eigenvalue(int p) const { return Scalar(Rational(1, 2)) - f_at_root(p); }

std::optional<long> Rank1Data::gap(int p, int m) const {
  const Scalar d = f_at_root(p) - f_at_root(m);
  if (!d.is_integer()) return std::nullopt;
  const Rational v = d.to_rational();
  if (v <= 0 || !v.get_num().fits_slong_p()) return std::nullopt;
  const long b = v.get_num().get_si();
  if (positive_mod(b - (p - m), l_) != 0) return std::nullopt;
  return b;
}

int Rank1Data::multiplicity(int p, int m) const { return gap(p, m) ? 1 : 0; }

std::optional<long> Rank1Data::b(int p) const {
  std::optional<long> best;
  for (int m = 0; m < l_; ++m) {
    const auto g = gap(p, m);
    if (g && (!best || *g < *best)) best = g;
  }
  return best;
}

std::vector<Scalar> Rank1Data::character(int p, int j, unsigned order) const {
  const auto bound = b(p);
  std::vector<Scalar> out;
  for (unsigned i = 0; i <= order; ++i) {
    if (bound && static_cast<long>(i) >= *bound) {
      out.emplace_back(0);
    } else {
      out.push_back(Scalar::root_of_unity(l_, static_cast<long>(p) * j - static_cast<long>(i) * j));
    }
  }
  return out;
}

DunklSystem Rank1Data::system(int p) const {
  return DunklSystem(ReflectionGroup(l_, 1), ParameterFunction::rank1(c_), LinearCharacter::eta(p));
}

Rank1BruteForce rank1_brute_force(const Rank1Data& data, int p, unsigned cutoff) {
  const auto system = data.system(p);
  std::vector<unsigned> degrees;
  std::vector<int> mult(static_cast<std::size_t>(data.l()), 0);
  for (unsigned i = 1; i <= cutoff; ++i) {
    if (system.apply(std::size_t{0}, Polynomial::monomial({i}, Scalar(1))).is_zero()) {
      degrees.push_back(i);
      ++mult[static_cast<std::size_t>(positive_mod(static_cast<long>(p) - i, data.l()))];
    }
  }
  return {std::move(degrees), std::move(mult), irreducible_quotient(system, cutoff)};
}

std::vector<Scalar> rank1_resonant_parameters(int l, int p, int m, long b, std::vector<Scalar> c, int j) {
  if (positive_mod(b - (p - m), l) != 0) throw PreconditionError("b must be congruent to p - m mod l");
  if (j < 1 || j >= l) throw PreconditionError("c index out of range");
  c.resize(static_cast<std::size_t>(l - 1));
  c[static_cast<std::size_t>(j - 1)] = Scalar(0);
  const Rank1Data base(l, c);
  const Scalar offset = base.f_at_root(p) - base.f_at_root(m);
  const Scalar slope = Scalar(2) / (Scalar(1) - Scalar::root_of_unity(l, -j)) *
                       (Scalar::root_of_unity(l, static_cast<long>(j) * p) - Scalar::root_of_unity(l, static_cast<long>(j) * m));
  if (slope.is_zero()) throw DomainError("c_" + std::to_string(j) + " does not move f_c(e^p) - f_c(e^m)");
  c[static_cast<std::size_t>(j - 1)] = (Scalar(b) - offset) / slope;
  return c;
}

std::optional<GorensteinCounterexample> find_gorenstein_counterexample(int l, long max_degree) {
  if (l < 3) return std::nullopt;
  // Coefficient of c_j in f_c(1) - f_c(e^{-i}).
  auto slope = [l](int j, long i) {
    return Scalar(2) / (Scalar(1) - Scalar::root_of_unity(l, -j)) * (Scalar(1) - Scalar::root_of_unity(l, -j * i));
  };
  for (long b2 = 2; b2 <= max_degree; ++b2) {
    for (long b1 = 1; b1 < b2; ++b1) {
      if (b1 % l == 0 || b2 % l == 0 || b1 % l == b2 % l) continue;
      const Scalar a11 = slope(1, b1), a12 = slope(2, b1), a21 = slope(1, b2), a22 = slope(2, b2);
      const Scalar det = a11 * a22 - a12 * a21;
      if (det.is_zero()) continue;
      std::vector<Scalar> c(static_cast<std::size_t>(l - 1));
      c[0] = (Scalar(b1) * a22 - a12 * Scalar(b2)) / det;
      c[1] = (a11 * Scalar(b2) - Scalar(b1) * a21) / det;
      const Rank1Data data(l, c);
      const auto system = data.system(0);
      const auto cutoff = static_cast<unsigned>(b2 + 1);
      const auto brute = rank1_brute_force(data, 0, cutoff);
      if (brute.singular_degrees.size() < 2) continue;
      const unsigned low = brute.singular_degrees.front();
      const unsigned high = brute.singular_degrees.back();
      const auto reducible = submodule_closure(system, {Polynomial::monomial({high}, Scalar(1))}, high + 1);
      const auto decision = finite_dim_decide(reducible);
      const auto irreducible = finite_dim_decide(brute.quotient);
      if (decision.status != FiniteStatus::finite || irreducible.status != FiniteStatus::finite) continue;
      if (!gorenstein_check(reducible) || gram_radical_vanishes_on(reducible)) continue;
      if (decision.dimension == irreducible.dimension) continue;
      GorensteinCounterexample out;
      out.l = l;
      out.c = c;
      out.b1 = low;
      out.b2 = high;
      out.quotient_dimension = decision.dimension;
      out.irreducible_dimension = irreducible.dimension;
      return out;
    }
  }
  return std::nullopt;
}

std::vector<Polynomial> generic_singular_solver(const DunklSystem& system, unsigned degree, Execution exec) {
  if (degree < 1) throw PreconditionError("singular vectors are sought in positive degree");
  const std::size_t n = system.nvars();
  const MonomialBasis source(n, degree);
  const std::size_t target = graded_dimension(n, degree - 1);
  Matrix stacked(n * target, source.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix d = dunkl_matrix(system, coordinate_direction(n, i), degree, exec);
    for (std::size_t a = 0; a < target; ++a) {
      for (std::size_t b = 0; b < source.size(); ++b) stacked(i * target + a, b) = d(a, b);
    }
  }
  std::vector<Polynomial> out;
  for (const auto& v : kernel(stacked, exec)) out.push_back(source.to_polynomial(v));
  return out;
}

}  // namespace cherednik
