#include "vtwist/lvalue/central_value.hpp"

#include <algorithm>
#include <cmath>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::lvalue {

using numcore::Complex;
using numcore::Real;

namespace {

constexpr mpfr_prec_t kMaxPrec = 2000;

// Terms needed so that 2 q^(M+1) / (1 - q) <= 2^-bits with q = e^-x.
std::size_t terms_needed(double x, mpfr_prec_t bits) {
  double lhs = bits * std::log(2.0) + std::log(2.0 / -std::expm1(-x));
  return static_cast<std::size_t>(std::ceil(lhs / x)) + 1;
}

double tail_bound(double x, std::size_t M) {
  // log of 2 e^{-x (M+1)} / (1 - e^{-x})
  double lg = std::log(2.0) - x * static_cast<double>(M + 1) - std::log(-std::expm1(-x));
  return std::exp(lg);
}

}  // namespace

OrbitValues orbit_values(const elliptic::EllipticCurve& E, const dirichlet::Character& chi, mpfr_prec_t prec,
                         const SeriesOptions& opts) {
  if (prec > kMaxPrec) throw PrecisionError("orbit_values: precision cap exceeded");
  const int ell = chi.ell();
  const std::uint64_t f = chi.conductor();
  const std::uint64_t N = E.conductor();
  if (numcore::gcd_u64(f, N) != 1)
    throw InadmissibleConductorError("unsupported twist: conductor " + std::to_string(f) +
                                     " is not coprime to the curve conductor");
  if (sgn(opts.t) <= 0) throw std::invalid_argument("orbit_values: t must be positive");
  const int w = opts.root_number_override.value_or(E.root_number());
  const bool two_series = opts.t != 1;

  const mpfr_prec_t wp = prec + 40;
  Real pi = Real::pi(wp);
  Real A = sqrt(Real(static_cast<long>(N), wp)) * static_cast<long>(f);
  Real t(opts.t, wp);
  Real x1 = pi * 2L * t / A;
  Real x2 = pi * 2L / (t * A);
  double dx1 = x1.to_double(), dx2 = x2.to_double();
  std::size_t M1 = static_cast<std::size_t>(terms_needed(dx1, prec + 8) * opts.length_factor);
  std::size_t M2 = static_cast<std::size_t>(terms_needed(dx2, prec + 8) * opts.length_factor);
  if (!two_series) M2 = M1;
  const std::size_t M = std::max(M1, M2);

  auto an_ptr = E.an_table(M);
  const auto& an = *an_ptr;
  const auto tab = chi.exponent_table();
  const int nb = chi.is_trivial() ? 1 : ell;

  Real q1 = exp(-x1), q2 = exp(-x2);
  Real qn1(1L, wp), qn2(1L, wp), term(wp);
  std::vector<Real> B1(nb, Real(wp)), B2(nb, Real(wp));
  for (std::size_t n = 1; n <= M; ++n) {
    if (n <= M1) mpfr_mul(qn1.get(), qn1.get(), q1.get(), MPFR_RNDN);
    if (two_series && n <= M2) mpfr_mul(qn2.get(), qn2.get(), q2.get(), MPFR_RNDN);
    int k = tab[n % f];
    if (k < 0 || an[n] == 0) continue;
    if (n <= M1) {
      mpfr_mul_si(term.get(), qn1.get(), an[n], MPFR_RNDN);
      mpfr_div_ui(term.get(), term.get(), n, MPFR_RNDN);
      mpfr_add(B1[k].get(), B1[k].get(), term.get(), MPFR_RNDN);
    }
    if (two_series && n <= M2) {
      mpfr_mul_si(term.get(), qn2.get(), an[n], MPFR_RNDN);
      mpfr_div_ui(term.get(), term.get(), n, MPFR_RNDN);
      mpfr_add(B2[k].get(), B2[k].get(), term.get(), MPFR_RNDN);
    }
  }
  if (!two_series) B2 = B1;

  // Gauss sums of every power from one set of buckets.
  std::vector<Complex> gb(nb, Complex(wp));
  if (!chi.is_trivial()) {
    Real step = pi * 2L / static_cast<long>(f);
    for (std::uint64_t c = 1; c < f; ++c) {
      if (tab[c] < 0) continue;
      Real th = step * static_cast<long>(c);
      gb[tab[c]] += Complex(cos(th), sin(th));
    }
  }
  std::vector<Complex> zeta;
  for (int k = 0; k < ell; ++k) zeta.push_back(Complex::root_of_unity(k, ell, wp));

  const double unit = std::ldexp(1.0, -static_cast<int>(wp));
  const double sum1 = 2.0 / -std::expm1(-dx1), sum2 = 2.0 / -std::expm1(-dx2);
  const double round_err = 8.0 * static_cast<double>(M) * unit * (sum1 + sum2) * ell;
  const double tail = tail_bound(dx1, M1) + tail_bound(dx2, M2);
  const double tau_err = static_cast<double>(f) * unit * 64;

  OrbitValues out;
  out.prec = prec;
  const int n_conj = chi.is_trivial() ? 1 : ell - 1;
  int expN = 0;
  if (!chi.is_trivial()) expN = *chi.exponent(N % f);
  for (int j = 1; j <= n_conj; ++j) {
    Complex S1(wp), S2(wp), tau(wp);
    if (chi.is_trivial()) {
      S1 = Complex(B1[0], Real(wp));
      S2 = Complex(B2[0], Real(wp));
      tau = Complex(Real(1L, wp), Real(wp));
    } else {
      for (int k = 0; k < ell; ++k) {
        S1 += zeta[(static_cast<long>(j) * k) % ell] * B1[k];
        S2 += zeta[(static_cast<long>(ell - j) * k) % ell] * B2[k];
        tau += zeta[(static_cast<long>(j) * k) % ell] * gb[k];
      }
    }
    Complex eps = tau * tau / Real(static_cast<long>(f), wp) * zeta[(static_cast<long>(j) * expN) % ell];
    if (w < 0) eps = -eps;
    Complex L = S1 + eps * S2;
    double eps_err = 3.0 * tau_err / std::sqrt(static_cast<double>(f)) * sum2;
    double err = tail + round_err + eps_err;
    Complex Lr(Real(L.re), Real(L.im));
    mpfr_prec_round(Lr.re.get(), prec, MPFR_RNDN);
    mpfr_prec_round(Lr.im.get(), prec, MPFR_RNDN);
    err += 2 * std::ldexp(std::max(1.0, std::abs(L.re.to_double()) + std::abs(L.im.to_double())), -static_cast<int>(prec));
    out.L.push_back({Lr, err});
    out.tau.push_back({tau, tau_err});
  }
  return out;
}

ValueWithError central_value(const elliptic::EllipticCurve& E, const dirichlet::Character& chi, double target_err,
                             const SeriesOptions& opts) {
  if (!(target_err > 0)) throw std::invalid_argument("central_value: target error must be positive");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::ceil(-std::log2(target_err))) + 16;
  prec = std::max<mpfr_prec_t>(prec, 64);
  auto ov = orbit_values(E, chi, prec, opts);
  if (ov.L[0].err > target_err) throw PrecisionError("central_value: error bound above target");
  return ov.L[0];
}

ValueWithError curve_value(const elliptic::EllipticCurve& E, mpfr_prec_t prec) {
  return orbit_values(E, dirichlet::Character::trivial(3), prec).L[0];
}

bool root_number_consistent(const elliptic::EllipticCurve& E, const dirichlet::Character& chi, mpfr_prec_t prec,
                            std::optional<int> root_number_override) {
  SeriesOptions a, b;
  a.root_number_override = b.root_number_override = root_number_override;
  b.t = mpq_class(13, 10);
  auto va = orbit_values(E, chi, prec, a);
  auto vb = orbit_values(E, chi, prec, b);
  for (std::size_t j = 0; j < va.L.size(); ++j) {
    double d = (va.L[j].value - vb.L[j].value).abs().to_double();
    if (d > va.L[j].err + vb.L[j].err) return false;
  }
  return true;
}

}  // namespace vtwist::lvalue
