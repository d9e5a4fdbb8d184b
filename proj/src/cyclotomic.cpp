#include "cherednik/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  const auto slash = s.find('/');
  auto digits_only = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t j = from; j < to; ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    }
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits_only(i, num_end) || (slash != std::string::npos && !digits_only(slash + 1, s.size()))) {
    throw ParseError("not an exact rational: '" + text + "'");
  }
  Rational q;
  if (q.set_str(s.c_str(), 10) != 0 || q.get_den() == 0) {
    throw ParseError("not an exact rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational generalized_binomial(const Rational& a, unsigned e) {
  Rational result = 1;
  for (unsigned i = 0; i < e; ++i) {
    result *= (a - i);
    result /= (i + 1);
  }
  return result;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using IntPoly = std::vector<Integer>;

// Exact division of integer polynomials whose divisor is monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  IntPoly poly(static_cast<std::size_t>(order) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

namespace detail {

struct CyclotomicField {
  int order = 1;
  int degree = 1;
  // reduction[j] = e^j modulo Phi_order, for 0 <= j <= 2 * degree - 2.
  std::vector<std::vector<Rational>> reduction;
  std::vector<Rational> modulus;  // Phi_order, constant term first
};

namespace {

std::unique_ptr<CyclotomicField> make_field(int order) {
  auto field = std::make_unique<CyclotomicField>();
  field->order = order;
  const auto phi = cyclotomic_polynomial(order);
  field->degree = static_cast<int>(phi.size()) - 1;
  for (const auto& c : phi) field->modulus.emplace_back(c);
  const int d = field->degree;
  const int count = std::max(1, 2 * d - 1);
  std::vector<Rational> current(static_cast<std::size_t>(d), 0);
  current[0] = 1;
  for (int j = 0; j < count; ++j) {
    field->reduction.push_back(current);
    // multiply by e and reduce using e^d = -sum_{i<d} phi_i e^i
    Rational top = current[static_cast<std::size_t>(d - 1)];
    for (int i = d - 1; i > 0; --i) current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)];
    current[0] = 0;
    if (top != 0) {
      for (int i = 0; i < d; ++i) current[static_cast<std::size_t>(i)] -= top * field->modulus[static_cast<std::size_t>(i)];
    }
  }
  return field;
}

}  // namespace

const CyclotomicField* field_for(int order) {
  if (order <= 2) return nullptr;
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = fields[order];
  if (!slot) slot = make_field(order);
  return slot.get();
}

}  // namespace detail

Cyclotomic::Cyclotomic() : coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim_to_rational_if_possible();
}

void Cyclotomic::trim_to_rational_if_possible() {
  if (field_ == nullptr) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  field_ = nullptr;
  coeffs_.resize(1);
}

Cyclotomic Cyclotomic::root_of_unity(int order, long power) {
  if (order < 1) throw DomainError("root of unity order must be positive");
  long e = power % order;
  if (e < 0) e += order;
  if (order == 1) return Cyclotomic(1);
  if (order == 2) return Cyclotomic(e == 0 ? 1 : -1);
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, 0);
  c[static_cast<std::size_t>(e)] = 1;
  return from_powers(order, c);
}

Cyclotomic Cyclotomic::from_powers(int order, const std::vector<Rational>& coefficients) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  if (order <= 2) {
    Rational sum = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      sum += (order == 2 && j % 2 == 1) ? Rational(-coefficients[j]) : coefficients[j];
    }
    return Cyclotomic(sum);
  }
  const auto* field = detail::field_for(order);
  const auto d = static_cast<std::size_t>(field->degree);
  std::vector<Rational> out(d, 0);
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (coefficients[j] == 0) continue;
    const std::size_t reduced = j % static_cast<std::size_t>(order);
    // e^reduced may exceed the precomputed range when order > 2 * degree - 1.
    std::vector<Rational> power;
    if (reduced < field->reduction.size()) {
      power = field->reduction[reduced];
    } else {
      power = field->reduction.back();
      for (std::size_t step = field->reduction.size() - 1; step < reduced; ++step) {
        Rational top = power[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) power[i] = power[i - 1];
        power[0] = 0;
        if (top != 0) {
          for (std::size_t i = 0; i < d; ++i) power[i] -= top * field->modulus[i];
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) out[i] += coefficients[j] * power[i];
  }
  return Cyclotomic(field, std::move(out));
}

int Cyclotomic::order() const { return field_ == nullptr ? 1 : field_->order; }
int Cyclotomic::degree() const { return field_ == nullptr ? 1 : field_->degree; }

bool Cyclotomic::is_zero() const { return field_ == nullptr && coeffs_[0] == 0; }
bool Cyclotomic::is_one() const { return field_ == nullptr && coeffs_[0] == 1; }
bool Cyclotomic::is_rational() const { return field_ == nullptr; }

Rational Cyclotomic::to_rational() const {
  if (field_ != nullptr) throw DomainError("cyclotomic value " + to_string() + " is not rational");
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const { return field_ == nullptr && coeffs_[0].get_den() == 1; }

const detail::CyclotomicField* Cyclotomic::common_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.field_;
  if (a.field_ == nullptr) return b.field_;
  if (b.field_ == nullptr) return a.field_;
  throw DomainError("cannot mix elements of Q(e_" + std::to_string(a.field_->order) + ") and Q(e_" +
                    std::to_string(b.field_->order) + ")");
}

Cyclotomic Cyclotomic::promoted(const detail::CyclotomicField* field) const {
  if (field == field_) return *this;
  Cyclotomic out;
  out.field_ = field;
  out.coeffs_.assign(static_cast<std::size_t>(field->degree), 0);
  out.coeffs_[0] = coeffs_[0];
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (field_ == other.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  } else if (other.field_ == nullptr) {
    coeffs_[0] += other.coeffs_[0];
  } else {
    *this = promoted(common_field(*this, other));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }
  trim_to_rational_if_possible();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.field_ == nullptr) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    if (other.coeffs_[0] == 0) {
      field_ = nullptr;
      coeffs_.assign(1, 0);
    }
    return *this;
  }
  if (field_ == nullptr) {
    const Rational scale = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= scale;
    trim_to_rational_if_possible();
    return *this;
  }
  const auto* field = common_field(*this, other);
  const auto d = static_cast<std::size_t>(field->degree);
  std::vector<Rational> product(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coeffs_[j] != 0) product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  std::vector<Rational> out(product.begin(), product.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t j = d; j < product.size(); ++j) {
    if (product[j] == 0) continue;
    const auto& power = field->reduction[j];
    for (std::size_t i = 0; i < d; ++i) out[i] += product[j] * power[i];
  }
  coeffs_ = std::move(out);
  trim_to_rational_if_possible();
  return *this;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder).
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  QPoly q;
  trim(a);
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size() - 1;; --i) {
    const Rational c = a[i] / b.back();
    q[i - (b.size() - 1)] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    }
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (field_ == nullptr) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Extended Euclid: find u with u * a = 1 modulo Phi.
  QPoly r0 = field_->modulus;
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;         // coefficient of a in r0
  QPoly s1 = {1};   // coefficient of a in r1
  while (!(r1.size() == 1)) {
    auto [q, r] = qdivmod(r0, r1);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw IntegrityError("cyclotomic modulus is not irreducible");
  }
  const Rational scale = Rational(1) / r1[0];
  for (auto& c : s1) c *= scale;
  s1.resize(static_cast<std::size_t>(field_->degree), 0);
  return Cyclotomic(field_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string Cyclotomic::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (j == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "e";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return first ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

// ---------------------------------------------------------------------------

UnivariatePolynomial::UnivariatePolynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial::UnivariatePolynomial(const Scalar& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UnivariatePolynomial UnivariatePolynomial::variable() { return UnivariatePolynomial({Scalar(0), Scalar(1)}); }

UnivariatePolynomial UnivariatePolynomial::from_roots(const std::vector<Scalar>& roots) {
  UnivariatePolynomial out(Scalar(1));
  for (const auto& root : roots) out *= UnivariatePolynomial({-root, Scalar(1)});
  return out;
}

UnivariatePolynomial UnivariatePolynomial::binomial(unsigned e) {
  UnivariatePolynomial out(Scalar(1));
  for (unsigned i = 0; i < e; ++i) {
    out *= UnivariatePolynomial({Scalar(-static_cast<long>(i)), Scalar(1)});
    out *= Scalar(Rational(1, i + 1));
  }
  return out;
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UnivariatePolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
}

const Scalar& UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Scalar UnivariatePolynomial::evaluate(const Scalar& at) const {
  Scalar acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= at;
    acc += coeffs_[i];
  }
  return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const UnivariatePolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Scalar> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size() - 1;
  if (rem.size() <= dn) return {UnivariatePolynomial(), *this};
  std::vector<Scalar> quot(rem.size() - dn);
  const Scalar lead_inv = divisor.leading().inverse();
  for (std::size_t i = rem.size(); i-- > dn;) {
    const Scalar c = rem[i] * lead_inv;
    quot[i - dn] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * divisor.coeffs_[j];
  }
  return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = coeffs_[i].to_string();
    const bool compound = !coeffs_[i].is_rational();
    if (i == 0) {
      out += compound ? "(" + c + ")" : c;
    } else {
      if (!coeffs_[i].is_one()) out += (compound ? "(" + c + ")" : c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

FormalParamPoly formal_div_exact(const FormalParamPoly& p, const FormalParamPoly& q) {
  auto [quot, rem] = p.divmod(q);
  if (!rem.is_zero()) {
    throw IntegrityError("formal division not exact: (" + p.to_string() + ") / (" + q.to_string() + ")");
  }
  return quot;
}

}  // namespace cherednik
