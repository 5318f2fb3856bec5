#include "vtwist/lvalue/algebraic_part.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"
#include "vtwist/numcore/recognize.hpp"

namespace vtwist::lvalue {

using numcore::Complex;
using numcore::CyclotomicInt;
using numcore::Real;

namespace {

constexpr double kIntegerTol = 1e-4;

struct Numeric {
  std::vector<Complex> alg;  // algebraic parts of chi^j, j = 1..ell-1
  std::vector<double> err;
};

Numeric numeric_algebraic_parts(const OrbitValues& ov, std::uint64_t f, const Real& omega_plus) {
  Numeric out;
  const mpfr_prec_t prec = ov.prec + 40;
  Real twof(static_cast<long>(2 * f), prec);
  double scale = 2.0 * std::sqrt(static_cast<double>(f)) / omega_plus.to_double();
  for (std::size_t j = 0; j < ov.L.size(); ++j) {
    out.alg.push_back(ov.L[j].value * twof / (ov.tau[j].value * omega_plus));
    double absL = ov.L[j].value.abs().to_double();
    double rel_tau = ov.tau[j].err / std::sqrt(static_cast<double>(f));
    out.err.push_back(scale * (ov.L[j].err + 2 * absL * rel_tau) + std::ldexp(1.0, -static_cast<int>(ov.prec) + 8));
  }
  return out;
}

// S_t = (total + sum_j zeta^{jt} alg_j) / ell, with imaginary parts.
std::vector<Complex> inverse_dft(const Numeric& nm, const mpz_class& total, int ell, mpfr_prec_t prec) {
  std::vector<Complex> S;
  for (int t = 0; t < ell; ++t) {
    Complex s(Real(total, prec), Real(prec));
    for (int j = 1; j < ell; ++j) s += Complex::root_of_unity(static_cast<long>(j) * t, ell, prec) * nm.alg[j - 1];
    S.push_back(s / Real(static_cast<long>(ell), prec));
  }
  return S;
}

std::vector<dirichlet::Character> calibration_set(const elliptic::EllipticCurve& E, int ell, int count) {
  std::vector<dirichlet::Character> out;
  for (std::uint64_t X = 200;; X *= 2) {
    out.clear();
    for (auto& c : dirichlet::enumerate(ell, X)) {
      if (numcore::gcd_u64(c.conductor(), E.conductor()) != 1) continue;
      out.push_back(c);
      if (static_cast<int>(out.size()) == count) return out;
    }
    if (X > 1000000) return out;
  }
}

}  // namespace

std::string PeriodNormalization::str() const {
  std::ostringstream os;
  os << "omega_plus = " << scale << " * " << omega_e << ", L_alg(E,1) = " << L_alg_trivial << " (calibrated on "
     << calibration_orbits << " orbits, worst residual " << worst_residual << ")";
  return os.str();
}

std::string CosetSums::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < S.size(); ++i) os << (i ? " " : "") << S[i];
  os << "]";
  return os.str();
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Vanishes:
      return "vanishes";
    case Decision::Nonzero:
      return "nonzero";
    case Decision::Undecided:
      return "undecided";
  }
  return "?";
}

int delta(const elliptic::EllipticCurve& E, std::uint64_t p) { return E.conductor() % p == 0 ? 0 : 1; }

mpz_class hecke_factor(const elliptic::EllipticCurve& E, std::uint64_t q, int ell) {
  const std::uint64_t l = static_cast<std::uint64_t>(ell);
  if (q == l * l) {
    mpz_class a = E.ap(l);
    int d = delta(E, l);
    return (a - 1) * (a - d) - d * mpz_class(ell);
  }
  if (!numcore::is_prime(q) || q % l != 1)
    throw InadmissibleConductorError("hecke_factor: " + std::to_string(q) + " is not an admissible block");
  return mpz_class(E.ap(q)) - delta(E, q) - 1;
}

mpz_class trivial_coset_sum(const elliptic::EllipticCurve& E, std::uint64_t f, int ell,
                            const PeriodNormalization& norm) {
  mpz_class s = norm.L_alg_trivial;
  if (f == 1) return s;
  if (!dirichlet::is_admissible_conductor(f, ell))
    throw InadmissibleConductorError("trivial_coset_sum: conductor " + std::to_string(f) + " is not admissible");
  for (auto& pp : numcore::factor(f)) {
    std::uint64_t q = pp.exponent == 2 ? pp.prime * pp.prime : pp.prime;
    s *= hecke_factor(E, q, ell);
  }
  return s;
}

PeriodNormalization calibrate_normalization(const elliptic::EllipticCurve& E, int ell, int calibration, int digits) {
  const mpfr_prec_t prec = numcore::bits_for_digits(digits);
  Real omega = E.real_period(prec + 32);
  auto Lv = curve_value(E, prec);
  const bool rank_zero_sign = E.root_number() == 1;

  auto chis = calibration_set(E, ell, calibration);
  std::vector<OrbitValues> ovs;
  for (auto& c : chis) ovs.push_back(orbit_values(E, c, prec));

  std::set<mpq_class, std::greater<mpq_class>> scales;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 24; ++n) scales.insert(mpq_class(m, n));

  std::string last_failure = "no candidate tried";
  for (const mpq_class& sc : scales) {
    PeriodNormalization norm;
    norm.omega_e = omega.to_double();
    norm.scale = sc;
    norm.calibration_orbits = static_cast<int>(chis.size());
    Real omega_plus = omega * Real(sc, prec + 32);
    if (rank_zero_sign) {
      Real v = Lv.value.re * 2L / omega_plus;
      mpz_class m = v.round();
      if (std::fabs((v - Real(m, prec)).to_double()) > 1e-20) {
        last_failure = "2L(E,1)/omega_plus not integral";
        continue;
      }
      norm.L_alg_trivial = m;
    } else {
      norm.L_alg_trivial = 0;
    }
    bool ok = true;
    double worst = 0;
    for (std::size_t i = 0; i < chis.size() && ok; ++i) {
      auto nm = numeric_algebraic_parts(ovs[i], chis[i].conductor(), omega_plus);
      mpz_class total = trivial_coset_sum(E, chis[i].conductor(), ell, norm);
      for (auto& s : inverse_dft(nm, total, ell, prec)) {
        double r = std::fabs((s.re - Real(s.re.round(), prec)).to_double());
        double im = std::fabs(s.im.to_double());
        worst = std::max({worst, r, im});
        if (r > 1e-20 || im > 1e-20) {
          ok = false;
          last_failure = "orbit " + chis[i].id() + " not integral";
          break;
        }
      }
    }
    if (!ok) continue;
    norm.worst_residual = worst;
    return norm;
  }
  throw RecognitionError("calibrate_normalization: no period scaling makes the calibration set integral (" +
                         last_failure + ")");
}

TwistRecord algebraic_part(const elliptic::EllipticCurve& E, const dirichlet::Character& chi,
                           const PeriodNormalization& norm, int digits) {
  const int ell = chi.ell();
  const std::uint64_t f = chi.conductor();
  const mpfr_prec_t prec = numcore::bits_for_digits(digits);
  auto ov = orbit_values(E, chi, prec);
  Real omega_plus = E.real_period(prec + 32) * Real(norm.scale, prec + 32);
  auto nm = numeric_algebraic_parts(ov, f, omega_plus);

  TwistRecord rec;
  rec.curve_label = E.label();
  rec.chi = chi;
  rec.L = ov.L[0];
  rec.conjugates = ov.L;
  rec.digits = digits;
  rec.sums.ell = ell;
  rec.sums.f = f;
  rec.sums.omega_e = norm.omega_e;
  rec.sums.scale = norm.scale;
  rec.sums.total = trivial_coset_sum(E, f, ell, norm);

  double errS = 0;
  for (double e : nm.err) errS += e;
  errS /= ell;
  auto Snum = inverse_dft(nm, rec.sums.total, ell, prec);
  double worst = 0;
  std::ostringstream residuals;
  for (int t = 0; t < ell; ++t) {
    double im = std::fabs(Snum[t].im.to_double());
    try {
      if (im > kIntegerTol) throw RecognitionError("imaginary part " + std::to_string(im));
      rec.sums.S.push_back(numcore::recognize_integer(Snum[t].re, std::min(errS, 0.2), kIntegerTol));
    } catch (const RecognitionError&) {
      residuals << " S_" << t << "=" << Snum[t].re.str(12) << "+" << Snum[t].im.str(4) << "i";
      rec.sums.S.clear();
      for (int u = t + 1; u < ell; ++u) residuals << " S_" << u << "=" << Snum[u].re.str(12);
      throw RecognitionError("integrality alarm for " + chi.id() + ":" + residuals.str());
    }
    worst = std::max({worst, im, std::fabs((Snum[t].re - Real(rec.sums.S.back(), prec)).to_double())});
  }
  rec.sums.residual = worst;

  mpz_class sum = 0;
  for (auto& s : rec.sums.S) sum += s;
  if (sum != rec.sums.total)
    throw RecognitionError("DFT consistency failure for " + chi.id() + ": sum of S_t is " + sum.get_str() +
                           ", expected " + rec.sums.total.get_str());

  for (int j = 1; j < ell; ++j) {
    auto exact = CyclotomicInt::from_exponent_sums(ell, rec.sums.S, -j);
    double d = (exact.to_complex(prec) - nm.alg[j - 1]).abs().to_double();
    double allowed = nm.err[j - 1] + ell * (worst + errS) + 1e-30;
    if (d > allowed)
      throw TheoryAlarm("reconstruction of L_alg for " + chi.power(j).id() + " is off by " + std::to_string(d));
    rec.L_alg_conjugates.push_back(exact);
  }
  rec.L_alg = rec.L_alg_conjugates[0];
  rec.recognized = true;
  rec.decision = vanishing_decision(rec);
  if (rec.decision == Decision::Vanishes && rec.L.value.abs().to_double() > 10 * rec.L.err + 1e-30)
    throw TheoryAlarm("coset sums of " + chi.id() + " are constant but |L| is not small");
  return rec;
}

Decision vanishing_decision(const TwistRecord& record) {
  if (record.recognized && !record.sums.S.empty()) {
    bool constant = std::all_of(record.sums.S.begin(), record.sums.S.end(),
                                [&](const mpz_class& s) { return s == record.sums.S[0]; });
    if (constant) return Decision::Vanishes;
  }
  if (record.L.value.abs().to_double() > 10 * record.L.err) return Decision::Nonzero;
  return Decision::Undecided;
}

TwistRecord analyze_orbit(const elliptic::EllipticCurve& E, const dirichlet::Character& chi,
                          const PeriodNormalization& norm, int digits) {
  std::vector<int> ladder{digits};
  for (int d : {80, 120})
    if (d > digits) ladder.push_back(d);
  TwistRecord last;
  std::string notes;
  for (int d : ladder) {
    try {
      TwistRecord rec = algebraic_part(E, chi, norm, d);
      rec.note = notes;
      if (rec.decision != Decision::Undecided) return rec;
      last = rec;
    } catch (const RecognitionError& e) {
      notes += std::string(notes.empty() ? "" : "; ") + e.what();
      auto ov = orbit_values(E, chi, numcore::bits_for_digits(d));
      last = TwistRecord();
      last.curve_label = E.label();
      last.chi = chi;
      last.L = ov.L[0];
      last.conjugates = ov.L;
      last.digits = d;
      last.sums.ell = chi.ell();
      last.sums.f = chi.conductor();
      last.sums.total = trivial_coset_sum(E, chi.conductor(), chi.ell(), norm);
      last.decision = vanishing_decision(last);
    }
  }
  last.note = notes;
  return last;
}

}  // namespace vtwist::lvalue
