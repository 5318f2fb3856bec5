#include "vtwist/kummer/e37b.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::kummer {

using numcore::NfElem;
using numcore::QPoly;

elliptic::Weierstrass<mpq_class> e37b_shifted_model() { return {4, 0, 1, 0, 0}; }

E37bParam e37b_param(const mpq_class& r) {
  mpq_class H1 = 7 * r * r + 12 * r + 9, H2 = 9 * r * r - 12 * r + 7, Q = 3 * r * r + r - 3, G = r * r + 1;
  E37bParam p;
  p.u = H1 / H2;
  p.delta = 32 * H1 * Q / (H2 * H2);
  p.F = QPoly{mpq_class(-16 * G * H1 * H2), mpq_class(-4 * H1 * H2), mpq_class(0), mpq_class(1)};
  return p;
}

E37bForms e37b_forms(const mpz_class& a, const mpz_class& b) {
  return {7 * a * a + 12 * a * b + 9 * b * b, 9 * a * a - 12 * a * b + 7 * b * b, a * a + b * b,
          3 * a * a + a * b - 3 * b * b};
}

QPoly e37b_integral_cubic(const mpz_class& a, const mpz_class& b) {
  auto f = e37b_forms(a, b);
  mpz_class M = f.H1 * f.H2;
  return QPoly{mpq_class(-16 * f.G * M), mpq_class(-4 * M), mpq_class(0), mpq_class(1)};
}

cubicfield::CubicField e37b_field(const mpz_class& a, const mpz_class& b) {
  auto f = e37b_forms(a, b);
  // disc = 2^10 H1^2 H2^2 Q^2
  return cubicfield::from_cubic(e37b_integral_cubic(a, b), {2, 3, f.H1, f.H2, f.Q});
}

elliptic::PointK e37b_point(const cubicfield::CubicField& K, const mpz_class& a, const mpz_class& b) {
  auto f = e37b_forms(a, b);
  NfElem W = NfElem::generator(K.K);
  mpq_class u(f.H1, f.H2);
  u.canonicalize();
  return elliptic::PointK::affine(W / NfElem(K.K, mpq_class(f.H2)), NfElem(K.K, u));
}

bool squarefree_away_from_bad(const mpz_class& H1, const mpz_class& H2) {
  std::map<mpz_class, int> e;
  for (const mpz_class& h : {H1, H2}) {
    if (h == 0) return false;
    if (abs(h) == 1) continue;
    for (auto& pp : numcore::factor(h)) e[pp.prime] += pp.exponent;
  }
  for (auto& [p, k] : e)
    if (k >= 2 && p != 2 && p != 3 && p != 37) return false;
  return true;
}

std::string E37bCensus::csv() const {
  std::ostringstream os;
  os << "a,b,H1,H2,squarefree,conductor,new_field\n";
  for (auto& r : rows)
    os << r.a << "," << r.b << "," << r.H1 << "," << r.H2 << "," << (r.squarefree ? 1 : 0) << ","
       << (r.cyclic ? r.conductor.get_str() : std::string()) << "," << (r.new_field ? 1 : 0) << "\n";
  return os.str();
}

std::optional<double> loglog_slope(const std::vector<LadderCount>& ladder) {
  std::vector<double> xs, ys;
  for (auto& l : ladder)
    if (l.count > 0) {
      xs.push_back(std::log(l.X));
      ys.push_back(std::log(static_cast<double>(l.count)));
    }
  if (xs.size() < 2) return std::nullopt;
  double n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n, my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

namespace {

E37bRow census_row(long a, long b) {
  E37bRow r;
  r.a = a;
  r.b = b;
  auto f = e37b_forms(a, b);
  r.H1 = f.H1;
  r.H2 = f.H2;
  r.squarefree = squarefree_away_from_bad(f.H1, f.H2);
  try {
    auto K = e37b_field(a, b);
    r.cyclic = true;
    r.conductor = K.conductor;
  } catch (const ReducibleCubicError&) {
    r.cyclic = false;
  }
  return r;
}

}  // namespace

E37bCensus census_37b(std::uint64_t X, long H, const std::vector<double>& cutoffs, int workers) {
  E37bCensus out;
  out.X = X;
  out.height_bound = H;
  std::vector<std::pair<long, long>> grid;
  for (long b = 0; b <= H; ++b)
    for (long a = -H; a <= H; ++a) {
      if (std::gcd(a, b) != 1) continue;
      if (b == 0 && a != 1) continue;
      grid.emplace_back(a, b);
    }
  out.rows.resize(grid.size());
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) out.rows[i] = census_row(grid[i].first, grid[i].second);
    });
  for (auto& t : pool) t.join();

  // first occurrence in grid order (b, a) marks a new field
  std::set<mpz_class> seen;
  for (auto& r : out.rows) {
    if (!r.cyclic || !r.squarefree) continue;
    r.new_field = seen.insert(r.conductor).second;
  }
  for (auto& c : seen)
    if (c <= X) out.conductors.push_back(c);
  for (double x : cutoffs) {
    std::size_t n = 0;
    for (auto& c : seen)
      if (c.get_d() <= x) ++n;
    out.ladder.push_back({x, n});
  }
  out.slope = loglog_slope(out.ladder);
  return out;
}

}  // namespace vtwist::kummer
