#include "cherednik/graded_quotient.hpp"

#include <deque>
#include <map>

#include "cherednik/kernels.hpp"

namespace cherednik {

unsigned default_finite_cutoff(int n, int r) { return static_cast<unsigned>(n * r + 2); }

GradedQuotient::GradedQuotient(std::size_t nvars, unsigned cutoff, std::optional<DunklSystem> system,
                               std::vector<Vector> directions)
    : nvars_(nvars), cutoff_(cutoff), system_(std::move(system)), directions_(std::move(directions)) {
  if (system_ && system_->nvars() != nvars_) throw PreconditionError("quotient and Dunkl system dimensions differ");
  if (system_ && directions_.empty()) directions_ = coordinate_directions(nvars_);
  for (unsigned m = 0; m <= cutoff_; ++m) {
    bases_.emplace_back(nvars_, m);
    relations_.emplace_back(bases_.back().size());
  }
}

std::size_t GradedQuotient::dimension(unsigned m) const {
  return relations_.at(m).ambient_dimension() - relations_.at(m).dimension();
}

std::vector<std::size_t> GradedQuotient::hilbert_series() const {
  std::vector<std::size_t> out;
  for (unsigned m = 0; m <= cutoff_; ++m) out.push_back(dimension(m));
  return out;
}

std::size_t GradedQuotient::total_dimension() const {
  std::size_t total = 0;
  for (unsigned m = 0; m <= cutoff_; ++m) total += dimension(m);
  return total;
}

Polynomial GradedQuotient::normal_form(const Polynomial& f) const {
  Polynomial out(nvars_);
  const int top = f.degree();
  for (int m = 0; m <= top; ++m) {
    const auto component = f.homogeneous_component(static_cast<unsigned>(m));
    if (component.is_zero()) continue;
    if (static_cast<unsigned>(m) > cutoff_) throw PreconditionError("normal form requested above the cutoff");
    const auto& basis = bases_[static_cast<std::size_t>(m)];
    out += basis.to_polynomial(relations_[static_cast<std::size_t>(m)].reduce(basis.to_vector(component)));
  }
  return out;
}

bool GradedQuotient::contains_relation(const Polynomial& f) const { return normal_form(f).is_zero(); }

namespace {

struct Pending {
  unsigned degree;
  Vector vector;
  bool feed_dunkl;
};

// Index maps for multiplication by x_i from degree m to m + 1.
std::vector<std::vector<std::vector<std::size_t>>> multiplication_maps(const GradedQuotient& q) {
  std::vector<std::vector<std::vector<std::size_t>>> maps(q.cutoff());
  for (unsigned m = 0; m < q.cutoff(); ++m) {
    const auto& src = q.basis(m);
    const auto& dst = q.basis(m + 1);
    maps[m].assign(q.nvars(), std::vector<std::size_t>(src.size()));
    for (std::size_t i = 0; i < q.nvars(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        Exponents e = src[j];
        ++e[i];
        maps[m][i][j] = dst.index(e);
      }
    }
  }
  return maps;
}

Vector act_on_coordinates(const ReflectionGroup& group, const GroupElement& g, const MonomialBasis& basis,
                          const Vector& v) {
  Vector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    const auto image = act(group, g, Polynomial::monomial(basis[j], v[j]));
    for (const auto& [e, c] : image.terms()) out[basis.index(e)] += c;
  }
  return out;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

GradedQuotient submodule_closure(const DunklSystem& system, const std::vector<Polynomial>& generators, unsigned cutoff,
                                 const ClosureOptions& options) {
  GradedQuotient q(system.nvars(), cutoff, system, options.directions);
  const auto& group = system.group();
  const auto mult = multiplication_maps(q);
  const auto gens = group.generators();

  // Dunkl matrices are built on first use; degrees past the vanishing point
  // never need them.
  std::vector<std::vector<Matrix>> dunkl(cutoff + 1);
  auto dunkl_at = [&](unsigned m) -> const std::vector<Matrix>& {
    if (dunkl[m].empty()) {
      for (const auto& y : q.directions()) dunkl[m].push_back(dunkl_matrix(system, y, m, options.exec));
    }
    return dunkl[m];
  };

  // Lowest degree first: low-degree relations generate most of the rest.
  std::map<unsigned, std::deque<Pending>> work;
  auto push = [&](Pending item) { work[item.degree].push_back(std::move(item)); };
  auto enqueue_polynomial = [&](const Polynomial& f, bool feed_dunkl) {
    if (f.nvars() != system.nvars()) throw PreconditionError("generator has wrong number of variables");
    if (!f.is_homogeneous()) throw PreconditionError("submodule generators must be homogeneous");
    if (f.is_zero()) return;
    const auto d = static_cast<unsigned>(f.degree());
    if (d > cutoff) return;
    push({d, q.basis(d).to_vector(f), feed_dunkl});
  };
  for (const auto& f : generators) enqueue_polynomial(f, true);
  for (const auto& f : options.ideal_only) enqueue_polynomial(f, false);

  while (!work.empty()) {
    auto bucket = work.begin();
    Pending item = std::move(bucket->second.front());
    bucket->second.pop_front();
    if (bucket->second.empty()) work.erase(bucket);
    const unsigned m = item.degree;
    auto& rel = q.relations(m);
    if (!rel.insert(item.vector)) continue;
    if (rel.is_full()) {
      // The relations form an ideal, so every higher degree is full as well.
      for (unsigned above = m + 1; above <= cutoff; ++above) {
        if (!q.relations(above).is_full()) q.relations(above) = Subspace::full(q.basis(above).size());
      }
    }
    if (m < cutoff && !q.relations(m + 1).is_full()) {
      for (std::size_t i = 0; i < q.nvars(); ++i) {
        Vector next(q.basis(m + 1).size());
        for (std::size_t j = 0; j < item.vector.size(); ++j) {
          if (!item.vector[j].is_zero()) next[mult[m][i][j]] = item.vector[j];
        }
        push({m + 1, std::move(next), item.feed_dunkl});
      }
    }
    if (options.group && !rel.is_full()) {
      for (const auto& g : gens) push({m, act_on_coordinates(group, g, q.basis(m), item.vector), item.feed_dunkl});
    }
    if (options.dunkl && item.feed_dunkl && m >= 1 && !q.relations(m - 1).is_full()) {
      for (const auto& d : dunkl_at(m)) {
        Vector image = d.apply(item.vector);
        if (!is_zero_vector(image)) push({m - 1, std::move(image), true});
      }
    }
  }
  return q;
}

GradedQuotient ideal_quotient(std::size_t nvars, const std::vector<Polynomial>& generators, unsigned cutoff) {
  GradedQuotient q(nvars, cutoff);
  std::deque<std::pair<unsigned, Vector>> work;
  for (const auto& f : generators) {
    if (!f.is_homogeneous()) throw PreconditionError("ideal generators must be homogeneous");
    if (f.is_zero() || static_cast<unsigned>(f.degree()) > cutoff) continue;
    const auto d = static_cast<unsigned>(f.degree());
    work.emplace_back(d, q.basis(d).to_vector(f));
  }
  const auto mult = multiplication_maps(q);
  while (!work.empty()) {
    auto [m, v] = std::move(work.front());
    work.pop_front();
    if (!q.relations(m).insert(v) || m == cutoff) continue;
    for (std::size_t i = 0; i < nvars; ++i) {
      Vector next(q.basis(m + 1).size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) next[mult[m][i][j]] = v[j];
      }
      work.emplace_back(m + 1, std::move(next));
    }
  }
  return q;
}

std::vector<Matrix> gram_matrices(const DunklSystem& system, unsigned max_degree, const std::vector<Vector>& directions,
                                  Execution exec) {
  const auto dirs = directions.empty() ? coordinate_directions(system.nvars()) : directions;
  std::vector<Matrix> out;
  Matrix b0(1, 1);
  b0(0, 0) = Scalar(1);
  out.push_back(std::move(b0));
  for (unsigned m = 1; m <= max_degree; ++m) {
    std::vector<Matrix> dunkl;
    for (const auto& y : dirs) dunkl.push_back(dunkl_matrix(system, y, m, exec));
    out.push_back(exec == Execution::parallel ? kernels::parallel::gram_step(out.back(), dunkl, m)
                                              : kernels::serial::gram_step(out.back(), dunkl, m));
  }
  return out;
}

Matrix gram_matrix(const DunklSystem& system, unsigned degree, const std::vector<Vector>& directions, Execution exec) {
  return gram_matrices(system, degree, directions, exec).back();
}

namespace {

Subspace radical_subspace(const Matrix& gram) {
  Subspace out(gram.cols());
  for (auto& v : kernel(gram)) out.insert(std::move(v));
  return out;
}

void verify_closed(const GradedQuotient& q, Execution exec) {
  const auto& system = *q.system();
  const auto& group = system.group();
  const auto gens = group.generators();
  for (unsigned m = 0; m <= q.cutoff(); ++m) {
    const auto& rel = q.relations(m);
    std::vector<Matrix> dunkl;
    if (m >= 1) {
      for (const auto& y : q.directions()) dunkl.push_back(dunkl_matrix(system, y, m, exec));
    }
    for (const auto& b : rel.basis()) {
      const Polynomial f = q.basis(m).to_polynomial(b);
      if (m < q.cutoff()) {
        for (std::size_t i = 0; i < q.nvars(); ++i) {
          if (!q.relations(m + 1).contains(q.basis(m + 1).to_vector(f.times_variable(i)))) {
            throw IntegrityError("radical not closed under multiplication by x" + std::to_string(i + 1));
          }
        }
      }
      for (const auto& g : gens) {
        if (!rel.contains(q.basis(m).to_vector(act(group, g, f)))) {
          throw IntegrityError("radical not closed under the group action");
        }
      }
      for (const auto& d : dunkl) {
        if (!q.relations(m - 1).contains(d.apply(b))) throw IntegrityError("radical not closed under Dunkl operators");
      }
    }
  }
}

}  // namespace

GradedQuotient irreducible_quotient(const DunklSystem& system, unsigned cutoff, const std::vector<Vector>& directions,
                                    Execution exec) {
  GradedQuotient q(system.nvars(), cutoff, system, directions);
  const auto grams = gram_matrices(system, cutoff, q.directions(), exec);
  for (unsigned m = 0; m <= cutoff; ++m) q.relations(m) = radical_subspace(grams[m]);
  verify_closed(q, exec);
  return q;
}

bool gram_radical_vanishes_on(const GradedQuotient& q, Execution exec) {
  if (!q.system()) throw PreconditionError("quotient has no Dunkl system attached");
  const auto grams = gram_matrices(*q.system(), q.cutoff(), q.directions(), exec);
  for (unsigned m = 0; m <= q.cutoff(); ++m) {
    if (!(radical_subspace(grams[m]) == q.relations(m))) return false;
  }
  return true;
}

CharacterSeries character_series(const GradedQuotient& q, const GroupElement& g) {
  if (!q.system()) throw PreconditionError("character series needs a Dunkl system");
  const auto& system = *q.system();
  const auto& group = system.group();
  CharacterSeries out;
  out.element = g;
  out.shift = system.lowest_eigenvalue();
  const Scalar tau_g = system.tau()(group, g);
  for (unsigned m = 0; m <= q.cutoff(); ++m) {
    const auto& basis = q.basis(m);
    const auto& rel = q.relations(m);
    Scalar trace;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      trace += act(group, g, Polynomial::monomial(basis[j], Scalar(1))).coefficient(basis[j]);
    }
    for (std::size_t r = 0; r < rel.dimension(); ++r) {
      const Vector image = act_on_coordinates(group, g, basis, rel.basis()[r]);
      if (!rel.contains(image)) throw IntegrityError("relation space is not stable under the group element");
      trace -= image[rel.pivots()[r]];
    }
    out.coefficients.push_back(trace * tau_g);
  }
  return out;
}

CharacterSeries standard_character(const ReflectionGroup& group, const Scalar& chi_tau_g, const Scalar& h_tau,
                                   const GroupElement& g, unsigned order) {
  CharacterSeries out;
  out.element = g;
  out.shift = h_tau;
  out.coefficients = series_inverse(group.det_one_minus_gt_dual(g), order);
  for (auto& c : out.coefficients) c *= chi_tau_g;
  return out;
}

CharacterSeries standard_character(const DunklSystem& system, const GroupElement& g, unsigned order) {
  return standard_character(system.group(), system.tau()(system.group(), g), system.lowest_eigenvalue(), g, order);
}

FiniteDecision finite_dim_decide(const GradedQuotient& q) {
  FiniteDecision out;
  std::size_t total = 0;
  for (unsigned m = 0; m <= q.cutoff(); ++m) {
    const auto d = q.dimension(m);
    if (d == 0) {
      out.status = FiniteStatus::finite;
      out.dimension = total;
      out.vanishing_degree = m;
      return out;
    }
    total += d;
  }
  return out;
}

bool gorenstein_check(const GradedQuotient& q) {
  const auto decision = finite_dim_decide(q);
  if (decision.status != FiniteStatus::finite) {
    throw PreconditionError("Gorenstein test needs a quotient that is finite-dimensional at its cutoff");
  }
  if (decision.vanishing_degree == 0) return false;  // zero ring
  const unsigned top = decision.vanishing_degree - 1;
  if (q.dimension(top) != 1) return false;
  const auto top_free = q.relations(top).free_columns();
  const std::size_t socle_index = top_free.front();
  for (unsigned i = 0; i <= top; ++i) {
    const auto left = q.relations(i).free_columns();
    const auto right = q.relations(top - i).free_columns();
    if (left.size() != right.size()) return false;
    Matrix pairing(left.size(), right.size());
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t b = 0; b < right.size(); ++b) {
        Exponents e = q.basis(i)[left[a]];
        const Exponents& f = q.basis(top - i)[right[b]];
        for (std::size_t v = 0; v < e.size(); ++v) e[v] += f[v];
        Vector product(q.basis(top).size());
        product[q.basis(top).index(e)] = Scalar(1);
        pairing(a, b) = q.relations(top).reduce(std::move(product))[socle_index];
      }
    }
    if (rank(pairing) != left.size()) return false;
  }
  return true;
}

}  // namespace cherednik
