#include "vtwist/cubicfield/binary_cubic.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "vtwist/numcore/integer.hpp"

namespace vtwist::cubicfield {

namespace {

// Dense polynomials over F_p, coefficients low to high.
using ModPoly = std::vector<mpz_class>;

mpz_class md(const mpz_class& x, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

mpz_class inv(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t())) throw std::domain_error("not invertible mod p");
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, const mpz_class& p) {
  trim(a);
  mpz_class il = inv(b.back(), p);
  while (a.size() >= b.size()) {
    mpz_class f = md(a.back() * il, p);
    size_t sh = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[sh + i] = md(a[sh + i] - f * b[i], p);
    trim(a);
  }
  return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = md(x, p);
  return mod_rem(c, m, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, const mpz_class& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpz_class il = inv(a.back(), p);
    for (auto& x : a) x = md(x * il, p);
  }
  return a;
}

// x^e mod m over F_p.
ModPoly x_power(const mpz_class& e, const ModPoly& m, const mpz_class& p) {
  ModPoly result{1}, base{0, 1};
  base = mod_rem(base, m, p);
  result = mod_rem(result, m, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = mod_mul(result, result, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod_mul(result, base, m, p);
  }
  return result;
}

ModPoly affine_poly(const BinaryCubicForm& F, const mpz_class& p) {
  ModPoly f{md(F.d, p), md(F.c, p), md(F.b, p), md(F.a, p)};
  trim(f);
  return f;
}

ModPoly derivative(const ModPoly& f, const mpz_class& p) {
  ModPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(md(f[i] * static_cast<unsigned long>(i), p));
  trim(d);
  return d;
}

mpz_class eval(const ModPoly& f, const mpz_class& x, const mpz_class& p) {
  mpz_class v = 0;
  for (size_t i = f.size(); i-- > 0;) v = md(v * x + f[i], p);
  return v;
}

// An affine multiple root r of F(x, 1) mod p, if F has one.
std::optional<mpz_class> affine_multiple_root(const BinaryCubicForm& F, const mpz_class& p) {
  ModPoly f = affine_poly(F, p);
  if (f.size() <= 1) return std::nullopt;
  ModPoly df = derivative(f, p);
  if (p < 50) {
    for (mpz_class r = 0; r < p; ++r)
      if (eval(f, r, p) == 0 && (df.empty() || eval(df, r, p) == 0)) return r;
    return std::nullopt;
  }
  ModPoly g = mod_gcd(f, df, p);
  if (g.size() == 2) return md(-g[0], p);
  if (g.size() == 3) return md(-g[1] * inv(mpz_class(2), p), p);
  return std::nullopt;
}

}  // namespace

mpz_class BinaryCubicForm::discriminant() const {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

mpz_class BinaryCubicForm::content() const {
  mpz_class g = gcd(gcd(a, b), gcd(c, d));
  return g;
}

BinaryCubicForm BinaryCubicForm::substitute(const mpz_class& al, const mpz_class& be, const mpz_class& ga,
                                            const mpz_class& de) const {
  // Expand X^i Y^(3-i) with X = al x + be y, Y = ga x + de y as (x^3, x^2y, xy^2, y^3) coefficients.
  auto mul = [](const std::vector<mpz_class>& u, const mpz_class& p, const mpz_class& q) {
    std::vector<mpz_class> r(u.size() + 1);
    for (size_t i = 0; i < u.size(); ++i) {
      r[i] += u[i] * p;
      r[i + 1] += u[i] * q;
    }
    return r;
  };
  std::array<mpz_class, 4> coeff{a, b, c, d};  // coefficient of X^(3-k) Y^k
  std::vector<mpz_class> out(4);
  for (int k = 0; k < 4; ++k) {
    std::vector<mpz_class> term{1};
    for (int i = 0; i < 3 - k; ++i) term = mul(term, al, be);
    for (int i = 0; i < k; ++i) term = mul(term, ga, de);
    for (int i = 0; i < 4; ++i) out[i] += coeff[k] * term[i];
  }
  return {out[0], out[1], out[2], out[3]};
}

std::string BinaryCubicForm::str() const {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ", " << d << ")";
  return os.str();
}

int maximize_at(BinaryCubicForm& F, const mpz_class& p) {
  int steps = 0;
  mpz_class p2 = p * p;
  while (true) {
    mpz_class D = F.discriminant();
    if (D == 0) throw std::domain_error("maximize_at: degenerate form");
    if (!mpz_divisible_p(D.get_mpz_t(), p2.get_mpz_t())) return steps;
    if (mpz_divisible_p(F.content().get_mpz_t(), p.get_mpz_t())) {
      F = {F.a / p, F.b / p, F.c / p, F.d / p};
      steps += 2;
      continue;
    }
    // Move the multiple root to (1:0).
    if (!(mpz_divisible_p(F.a.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(F.b.get_mpz_t(), p.get_mpz_t()))) {
      auto r = affine_multiple_root(F, p);
      if (!r) return steps;
      F = F.substitute(*r, -1, 1, 0);
    }
    if (mpz_divisible_p(F.a.get_mpz_t(), p2.get_mpz_t()) && mpz_divisible_p(F.b.get_mpz_t(), p.get_mpz_t())) {
      F = {F.a / p2, F.b / p, F.c, F.d * p};
      ++steps;
      continue;
    }
    return steps;
  }
}

int count_roots_mod_p(const BinaryCubicForm& F, const mpz_class& p) {
  int n = 0;
  if (md(F.a, p) == 0) ++n;  // the point (1:0)
  ModPoly f = affine_poly(F, p);
  if (f.size() <= 1) return f.empty() ? static_cast<int>(mpz_class(p + 1).get_ui()) : n;
  if (p < 50) {
    for (mpz_class r = 0; r < p; ++r)
      if (eval(f, r, p) == 0) ++n;
    return n;
  }
  ModPoly xp = x_power(p, f, p);
  if (xp.size() < 2) xp.resize(2);
  xp[1] = md(xp[1] - 1, p);
  trim(xp);
  ModPoly g = mod_gcd(f, xp, p);
  return n + static_cast<int>(g.empty() ? f.size() - 1 : g.size() - 1);
}

}  // namespace vtwist::cubicfield
