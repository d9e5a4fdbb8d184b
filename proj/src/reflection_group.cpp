#include "cherednik/reflection_group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "cherednik/errors.hpp"

namespace cherednik {

ReflectionGroup::ReflectionGroup(int l, int n) : l_(l), n_(n) {
  if (l < 1 || n < 1) throw PreconditionError("G(l,1,n) requires l >= 1 and n >= 1");
  if (l == 1 && n == 1) throw PreconditionError("G(1,1,1) is trivial and has no reflections");
  build_reflections();
}

ReflectionGroup ReflectionGroup::parse(const std::string& descriptor) {
  std::string s;
  for (char ch : descriptor) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::smatch match;
  static const std::regex symmetric(R"(S\((\d+)\))");
  static const std::regex cyclic(R"(Z\((\d+)\))");
  static const std::regex wreath(R"(G\((\d+),1,(\d+)\))");
  try {
    if (std::regex_match(s, match, symmetric)) return ReflectionGroup(1, std::stoi(match[1]));
    if (std::regex_match(s, match, cyclic)) return ReflectionGroup(std::stoi(match[1]), 1);
    if (std::regex_match(s, match, wreath)) return ReflectionGroup(std::stoi(match[1]), std::stoi(match[2]));
  } catch (const std::out_of_range&) {
    throw ParseError("group descriptor out of range: '" + descriptor + "'");
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unrecognized group descriptor '" + descriptor + "' (expected S(n), Z(l) or G(l,1,n))");
}

std::string ReflectionGroup::descriptor() const {
  if (l_ == 1) return "S(" + std::to_string(n_) + ")";
  if (n_ == 1) return "Z(" + std::to_string(l_) + ")";
  return "G(" + std::to_string(l_) + ",1," + std::to_string(n_) + ")";
}

std::size_t ReflectionGroup::order() const {
  std::size_t out = 1;
  for (int i = 2; i <= n_; ++i) out *= static_cast<std::size_t>(i);
  for (int i = 0; i < n_; ++i) out *= static_cast<std::size_t>(l_);
  return out;
}

GroupElement ReflectionGroup::identity() const {
  GroupElement g;
  g.perm.resize(static_cast<std::size_t>(n_));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.weights.assign(static_cast<std::size_t>(n_), 0);
  return g;
}

GroupElement ReflectionGroup::compose(const GroupElement& g, const GroupElement& h) const {
  // h e_i = e^{b_i} e_{h(i)}; g e_{h(i)} = e^{a_{h(i)}} e_{g(h(i))}.
  GroupElement out;
  out.perm.resize(static_cast<std::size_t>(n_));
  out.weights.resize(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    const auto hi = static_cast<std::size_t>(h.perm[i]);
    out.perm[i] = g.perm[hi];
    out.weights[i] = (h.weights[i] + g.weights[hi]) % l_;
  }
  return out;
}

GroupElement ReflectionGroup::inverse(const GroupElement& g) const {
  GroupElement out;
  out.perm.resize(static_cast<std::size_t>(n_));
  out.weights.resize(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    const auto gi = static_cast<std::size_t>(g.perm[i]);
    out.perm[gi] = static_cast<int>(i);
    out.weights[gi] = (l_ - g.weights[i] % l_) % l_;
  }
  return out;
}

GroupElement ReflectionGroup::power(const GroupElement& g, int e) const {
  GroupElement base = e < 0 ? inverse(g) : g;
  GroupElement out = identity();
  for (int i = 0; i < std::abs(e); ++i) out = compose(out, base);
  return out;
}

std::vector<GroupElement> ReflectionGroup::elements() const {
  std::vector<GroupElement> out;
  std::vector<int> perm(static_cast<std::size_t>(n_));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> w(static_cast<std::size_t>(n_), 0);
    while (true) {
      out.push_back({perm, w});
      std::size_t pos = 0;
      while (pos < w.size() && ++w[pos] == l_) w[pos++] = 0;
      if (pos == w.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> ReflectionGroup::conjugacy_class_reps() const {
  const auto all = elements();
  std::set<GroupElement> seen;
  std::vector<GroupElement> reps;
  for (const auto& g : all) {
    if (seen.count(g)) continue;
    reps.push_back(g);
    for (const auto& h : all) seen.insert(compose(compose(h, g), inverse(h)));
  }
  return reps;
}

std::size_t ReflectionGroup::class_size(const GroupElement& g) const {
  std::set<GroupElement> cls;
  for (const auto& h : elements()) cls.insert(compose(compose(h, g), inverse(h)));
  return cls.size();
}

std::size_t ReflectionGroup::element_order(const GroupElement& g) const {
  const auto id = identity();
  GroupElement p = g;
  std::size_t k = 1;
  while (!(p == id)) {
    p = compose(p, g);
    ++k;
  }
  return k;
}

std::vector<GroupElement> ReflectionGroup::generators() const {
  std::vector<GroupElement> out;
  if (l_ > 1) {
    GroupElement s = identity();
    s.weights[0] = 1;
    out.push_back(s);
  }
  for (int i = 0; i + 1 < n_; ++i) {
    GroupElement t = identity();
    std::swap(t.perm[static_cast<std::size_t>(i)], t.perm[static_cast<std::size_t>(i + 1)]);
    out.push_back(t);
  }
  return out;
}

Matrix ReflectionGroup::matrix_on_h(const GroupElement& g) const {
  Matrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    m(static_cast<std::size_t>(g.perm[i]), i) = epsilon(g.weights[i]);
  }
  return m;
}

Matrix ReflectionGroup::matrix_on_h_dual(const GroupElement& g) const {
  Matrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i) {
    m(static_cast<std::size_t>(g.perm[i]), i) = epsilon(-g.weights[i]);
  }
  return m;
}

Vector ReflectionGroup::act_on_vector(const GroupElement& g, const Vector& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw PreconditionError("vector dimension does not match group");
  return matrix_on_h(g).apply(v);
}

Vector ReflectionGroup::act_on_covector(const GroupElement& g, const Vector& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw PreconditionError("covector dimension does not match group");
  return matrix_on_h_dual(g).apply(x);
}

UnivariatePolynomial ReflectionGroup::det_one_minus_gt_dual(const GroupElement& g) const {
  UnivariatePolynomial det(Scalar(1));
  std::vector<bool> visited(static_cast<std::size_t>(n_), false);
  for (std::size_t start = 0; start < static_cast<std::size_t>(n_); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    long weight = 0;
    std::size_t i = start;
    while (!visited[i]) {
      visited[i] = true;
      weight -= g.weights[i];
      i = static_cast<std::size_t>(g.perm[i]);
      ++len;
    }
    std::vector<Scalar> block(len + 1);
    block[0] = Scalar(1);
    block[len] = -epsilon(weight);
    det *= UnivariatePolynomial(std::move(block));
  }
  if (l_ == 1) det = formal_div_exact(det, UnivariatePolynomial({Scalar(1), Scalar(-1)}));
  return det;
}

int ReflectionGroup::sign(const GroupElement& g) const {
  std::vector<bool> visited(static_cast<std::size_t>(n_), false);
  int parity = 0;
  for (std::size_t start = 0; start < static_cast<std::size_t>(n_); ++start) {
    if (visited[start]) continue;
    std::size_t i = start;
    int len = 0;
    while (!visited[i]) {
      visited[i] = true;
      i = static_cast<std::size_t>(g.perm[i]);
      ++len;
    }
    parity += len - 1;
  }
  return parity % 2 == 0 ? 1 : -1;
}

int ReflectionGroup::weight_sum(const GroupElement& g) const {
  int s = 0;
  for (int w : g.weights) s += w;
  return s % l_;
}

Reflection ReflectionGroup::make_reflection(ReflectionKind kind, int i, int j, int m) const {
  Reflection s;
  s.kind = kind;
  s.i = i;
  s.j = j;
  s.m = m;
  s.element = identity();
  const auto n = static_cast<std::size_t>(n_);
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  s.alpha.assign(n, Scalar(0));
  s.alpha_check.assign(n, Scalar(0));
  if (kind == ReflectionKind::transposition) {
    std::swap(s.element.perm[ui], s.element.perm[uj]);
    s.element.weights[ui] = (l_ - m) % l_;
    s.element.weights[uj] = m % l_;
    s.alpha[ui] = Scalar(1);
    s.alpha[uj] = -epsilon(m);
    s.alpha_check[ui] = Scalar(1);
    s.alpha_check[uj] = -epsilon(-m);
  } else {
    s.element.weights[ui] = m;
    s.alpha[ui] = Scalar(1);
    s.alpha_check[ui] = Scalar(2);
  }
  // lambda: the eigenvalue on h* besides the n - 1 trivial ones.
  const Matrix dual = matrix_on_h_dual(s.element);
  Scalar trace;
  for (std::size_t a = 0; a < n; ++a) trace += dual(a, a);
  s.lambda = trace - Scalar(static_cast<long>(n) - 1);

  Scalar pairing;
  for (std::size_t a = 0; a < n; ++a) pairing += s.alpha[a] * s.alpha_check[a];
  if (pairing != Scalar(2)) throw IntegrityError("reflection pairing (alpha_check, alpha) != 2");
  // On h the reflection must be v -> v + ((lambda^{-1} - 1)/2) alpha(v) alpha_check.
  const Matrix on_h = matrix_on_h(s.element);
  const Scalar factor = (s.lambda.inverse() - Scalar(1)) / Scalar(2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Scalar expected = a == b ? Scalar(1) : Scalar(0);
      expected += factor * s.alpha_check[a] * s.alpha[b];
      if (on_h(a, b) != expected) throw IntegrityError("reflection matrix does not fix the hyperplane alpha = 0");
    }
  }
  return s;
}

void ReflectionGroup::build_reflections() {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int m = 0; m < l_; ++m) reflections_.push_back(make_reflection(ReflectionKind::transposition, i, j, m));
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int m = 1; m < l_; ++m) reflections_.push_back(make_reflection(ReflectionKind::diagonal, i, i, m));
  }
}

ParameterFunction ParameterFunction::type_a(const Scalar& k) {
  ParameterFunction p;
  p.k_ = k;
  return p;
}

ParameterFunction ParameterFunction::wreath(const Scalar& k, std::vector<Scalar> c) {
  ParameterFunction p;
  p.k_ = k;
  p.c_ = std::move(c);
  return p;
}

ParameterFunction ParameterFunction::rank1(std::vector<Scalar> c) {
  ParameterFunction p;
  p.c_ = std::move(c);
  return p;
}

Scalar ParameterFunction::c_m(int m) const {
  if (m >= 1 && static_cast<std::size_t>(m) <= c_.size()) return c_[static_cast<std::size_t>(m - 1)];
  return Scalar(0);
}

Scalar ParameterFunction::value(const Reflection& s) const {
  return s.kind == ReflectionKind::transposition ? k_ : c_m(s.m);
}

bool ParameterFunction::is_zero() const {
  return k_.is_zero() && std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::string ParameterFunction::to_string() const {
  std::string out = "k=" + k_.to_string();
  for (std::size_t m = 0; m < c_.size(); ++m) out += ", c" + std::to_string(m + 1) + "=" + c_[m].to_string();
  return out;
}

Scalar LinearCharacter::operator()(const ReflectionGroup& group, const GroupElement& g) const {
  Scalar out = group.epsilon(static_cast<long>(weight_power) * group.weight_sum(g));
  if (sign_power % 2 != 0 && group.sign(g) < 0) out = -out;
  return out;
}

}  // namespace cherednik
