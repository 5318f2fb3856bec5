#include "vtwist/numcore/number_field.hpp"

#include <sstream>
#include <stdexcept>

namespace vtwist::numcore {

NumberField::NumberField(QPoly defining, std::string generator_name)
    : f_(std::move(defining)), name_(std::move(generator_name)) {
  if (f_.degree() < 1 || f_.leading() != 1) throw std::invalid_argument("NumberField: defining polynomial must be monic");
}

NfElem::NfElem(const mpq_class& q) : c_{q} {}

NfElem::NfElem(FieldPtr K, const mpq_class& q) : K_(std::move(K)), c_(K_->degree()) { c_[0] = q; }

NfElem::NfElem(FieldPtr K, std::vector<mpq_class> coeffs) : K_(std::move(K)), c_(std::move(coeffs)) { reduce(); }

NfElem NfElem::generator(FieldPtr K) {
  if (K->degree() == 1) return NfElem(K, mpq_class(-K->defining_poly()[0]));
  std::vector<mpq_class> c(K->degree());
  c[1] = 1;
  return NfElem(K, c);
}

mpq_class NfElem::coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : mpq_class(0); }

std::vector<mpq_class> NfElem::coeffs(int degree) const {
  std::vector<mpq_class> out(degree);
  for (int i = 0; i < degree; ++i) out[i] = coeff(i);
  return out;
}

bool NfElem::is_zero() const {
  for (auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool NfElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

void NfElem::adopt(const NfElem& o) {
  if (o.K_ && !K_) {
    K_ = o.K_;
    c_.resize(K_->degree());
  } else if (o.K_ && K_ && o.K_ != K_ && o.K_->defining_poly() != K_->defining_poly()) {
    throw std::invalid_argument("NfElem: elements of different fields");
  }
}

void NfElem::reduce() {
  if (!K_) return;
  const int d = K_->degree();
  if (static_cast<int>(c_.size()) > d) {
    auto r = divmod(QPoly(c_), K_->defining_poly()).second;
    c_ = r.coeffs();
  }
  c_.resize(d);
}

NfElem& NfElem::operator+=(const NfElem& o) {
  adopt(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
  adopt(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) {
  adopt(o);
  if (c_.empty() || o.c_.empty()) {
    for (auto& x : c_) x = 0;
    return *this;
  }
  std::vector<mpq_class> prod(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  reduce();
  return *this;
}

NfElem NfElem::inverse() const {
  if (is_zero()) throw std::domain_error("NfElem: inverse of zero");
  if (!K_ || is_rational()) {
    NfElem r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  auto x = xgcd(QPoly(c_), K_->defining_poly());
  if (x.g.degree() != 0) throw std::domain_error("NfElem: element is a zero divisor (defining polynomial reducible)");
  return NfElem(K_, x.s.coeffs());
}

NfElem& NfElem::operator/=(const NfElem& o) { return *this *= o.inverse(); }

NfElem NfElem::operator-() const {
  NfElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const NfElem& a, const NfElem& b) {
  size_t n = std::max(a.c_.size(), b.c_.size());
  for (size_t i = 0; i < n; ++i)
    if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
  return true;
}

QPoly NfElem::as_poly() const { return QPoly(c_); }

std::string NfElem::str() const {
  std::string name = K_ ? K_->generator_name() : "a";
  return QPoly(c_).str(name);
}

QPolyXgcd xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0 = QPoly::constant(1), s1, t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace vtwist::numcore
