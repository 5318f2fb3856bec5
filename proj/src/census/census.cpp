#include "vtwist/census/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "vtwist/census/report.hpp"
#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/errors.hpp"
#include "vtwist/kummer/surface.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::census {

using dirichlet::Character;
using lvalue::Decision;

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool inq = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (inq) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          inq = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      inq = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string fmt_err(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", e);
  return buf;
}

Decision parse_decision(const std::string& s) {
  if (s == "vanishes") return Decision::Vanishes;
  if (s == "nonzero") return Decision::Nonzero;
  if (s == "undecided") return Decision::Undecided;
  throw ConfigError("census: unknown decision '" + s + "'");
}

CensusRow make_row(const lvalue::TwistRecord& rec) {
  CensusRow r;
  r.conductor = rec.chi.conductor();
  r.chi = rec.chi.id();
  r.decision = rec.decision;
  r.L_re = rec.L.value.re.str(20);
  r.L_im = rec.L.value.im.str(20);
  r.err = rec.L.err;
  if (rec.recognized) r.S = rec.sums.str();
  r.note = rec.note;
  return r;
}

std::vector<double> geometric_ladder(std::uint64_t X) {
  std::vector<double> out;
  for (double x = 10; x < static_cast<double>(X); x *= 10) out.push_back(x);
  out.push_back(static_cast<double>(X));
  return out;
}

Character probe_character(const elliptic::EllipticCurve& E, int ell) {
  for (auto& c : dirichlet::enumerate(ell, 2000))
    if (numcore::gcd_u64(c.conductor(), E.conductor()) == 1) return c;
  throw ConfigError("no probe character coprime to the conductor");
}

}  // namespace

std::string CensusRow::csv() const {
  std::ostringstream os;
  os << conductor << "," << quote(chi) << "," << lvalue::to_string(decision) << "," << L_re << "," << L_im << ","
     << fmt_err(err) << "," << quote(S) << "," << quote(note);
  return os.str();
}

std::string census_csv_header() { return "conductor,character,decision,L_re,L_im,error_bound,S,note"; }

CensusRow parse_census_line(const std::string& line, bool with_timing) {
  auto f = split_csv(line);
  std::size_t want = with_timing ? 9 : 8;
  if (f.size() != want) throw ConfigError("census: malformed row '" + line + "'");
  CensusRow r;
  r.conductor = std::stoull(f[0]);
  r.chi = f[1];
  r.decision = parse_decision(f[2]);
  r.L_re = f[3];
  r.L_im = f[4];
  r.err = std::stod(f[5]);
  r.S = f[6];
  r.note = f[7];
  if (with_timing) r.seconds = std::stod(f[8]);
  return r;
}

CensusSummary summarize(const std::vector<CensusRow>& rows, std::uint64_t X) {
  CensusSummary s;
  for (auto& r : rows) {
    if (r.conductor > X) continue;
    ++s.orbits;
    if (r.decision == Decision::Vanishes) ++s.vanishes;
    if (r.decision == Decision::Nonzero) ++s.nonzero;
    if (r.decision == Decision::Undecided) ++s.undecided;
  }
  std::vector<kummer::LadderCount> lc;
  for (double x : geometric_ladder(X)) {
    CutoffCount c{x};
    for (auto& r : rows) {
      if (static_cast<double>(r.conductor) > x) continue;
      ++c.orbits;
      if (r.decision == Decision::Vanishes) ++c.vanishes;
      if (r.decision == Decision::Nonzero) ++c.nonzero;
      if (r.decision == Decision::Undecided) ++c.undecided;
    }
    s.ladder.push_back(c);
    lc.push_back({x, c.vanishes});
  }
  s.vanish_slope = kummer::loglog_slope(lc);
  return s;
}

std::string CensusSummary::str() const {
  std::ostringstream os;
  os << "orbits " << orbits << "  vanishes " << vanishes << "  nonzero " << nonzero << "  undecided " << undecided
     << "  skipped (conductor not prime to N) " << skipped_bad_conductor << "\n";
  os << "       X    orbits  vanishes   nonzero undecided\n";
  for (auto& c : ladder) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%8.0f %9zu %9zu %9zu %9zu\n", c.X, c.orbits, c.vanishes, c.nonzero, c.undecided);
    os << buf;
  }
  if (vanish_slope) os << "log-log slope of the vanishing count: " << *vanish_slope << "\n";
  return os.str();
}

CensusResult run_census(const CurveConfig& config, const CensusOptions& opts) {
  auto E = config.curve();
  const int digits = opts.digits.value_or(config.precision_digits);
  const int ell = opts.ell;
  if (ell < 3 || !numcore::is_prime(static_cast<std::uint64_t>(ell)))
    throw ConfigError("census: ell must be an odd prime");

  Character probe = probe_character(E, ell);
  if (!lvalue::root_number_consistent(E, probe, numcore::bits_for_digits(30)))
    throw TheoryAlarm("census: root number " + std::to_string(config.root_number) + " of " + config.label +
                      " fails the parameter-independence test");

  CensusResult result;
  result.norm = lvalue::calibrate_normalization(E, ell, 10, digits);

  std::vector<Character> todo;
  std::size_t skipped = 0;
  std::map<std::string, CensusRow> done;
  const std::string log_path = opts.out_path.empty() ? "" : opts.out_path + ".log";
  if (opts.resume && !log_path.empty()) {
    std::ifstream in(log_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        auto r = parse_census_line(line, true);
        done[r.chi] = r;
      } catch (const std::exception&) {
        // a torn last line from an interrupted run is recomputed
      }
    }
  } else if (!log_path.empty()) {
    std::ofstream(log_path, std::ios::trunc);
  }
  for (auto& c : dirichlet::enumerate(ell, opts.X)) {
    if (numcore::gcd_u64(c.conductor(), E.conductor()) != 1) {
      ++skipped;
      continue;
    }
    if (!done.count(c.id())) todo.push_back(c);
  }

  std::mutex mu;
  std::ofstream log;
  if (!log_path.empty()) log.open(log_path, std::ios::app);
  std::atomic<std::size_t> next{0}, computed{0};
  std::vector<std::string> alarms;
  const std::size_t limit = opts.max_new_orbits.value_or(todo.size());
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= todo.size() || i >= limit) return;
      const Character& chi = todo[i];
      auto t0 = std::chrono::steady_clock::now();
      CensusRow row;
      try {
        row = make_row(lvalue::analyze_orbit(E, chi, result.norm, digits));
      } catch (const TheoryAlarm& e) {
        row.conductor = chi.conductor();
        row.chi = chi.id();
        row.note = std::string("theory alarm: ") + e.what();
        std::lock_guard<std::mutex> g(mu);
        alarms.push_back(chi.id() + ": " + e.what());
      } catch (const std::exception& e) {
        row.conductor = chi.conductor();
        row.chi = chi.id();
        row.note = std::string("failed: ") + e.what();
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::lock_guard<std::mutex> g(mu);
      done[row.chi] = row;
      ++computed;
      if (log.is_open()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", row.seconds);
        log << row.csv() << "," << buf << "\n" << std::flush;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::max(1, opts.workers); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  result.complete = limit >= todo.size();
  for (auto& [id, r] : done) result.rows.push_back(r);
  std::sort(result.rows.begin(), result.rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return a.conductor != b.conductor ? a.conductor < b.conductor : a.chi < b.chi;
  });
  result.summary = summarize(result.rows, opts.X);
  result.summary.skipped_bad_conductor = skipped;
  if (!opts.out_path.empty() && result.complete) write_census_csv(opts.out_path, result.rows);
  if (!alarms.empty()) {
    std::string msg = "census: theory alarms:";
    for (auto& a : alarms) msg += "\n  " + a;
    throw TheoryAlarm(msg);
  }
  return result;
}

std::string CongruenceSweep::str(bool verbose) const {
  std::ostringstream os;
  os << "pairs " << pairs << "  passed " << passed << "  failed " << pairs - passed << "\n";
  for (auto& r : reports) {
    if (!verbose && r.holds) continue;
    os << (r.holds ? "pass " : "FAIL ") << r.chi.id() << " x " << r.psi.id() << ": lhs " << r.lhs << " rhs "
       << r.rhs;
    if (!r.holds) os << "\n    " << r.detail;
    os << "\n";
  }
  return os.str();
}

CongruenceSweep run_congruence_sweep(const CurveConfig& config, int ell, std::uint64_t bound,
                                     const std::map<std::uint64_t, long>& ap_override) {
  auto E = config.curve();
  auto norm = lvalue::calibrate_normalization(E, ell, 10, config.precision_digits);
  lvalue::OrbitCache cache(E, norm, config.precision_digits);
  CongruenceSweep out;
  for (auto& [chi, psi] : lvalue::congruence_pairs(E, ell, bound)) {
    ++out.pairs;
    try {
      auto r = lvalue::congruence_check(E, ell, chi, psi, cache, ap_override);
      if (r.holds) ++out.passed;
      out.reports.push_back(std::move(r));
    } catch (const Error& e) {
      lvalue::CongruenceReport r;
      r.chi = chi;
      r.psi = psi;
      r.detail = std::string("error: ") + e.what();
      out.reports.push_back(std::move(r));
    }
  }
  return out;
}

std::string NonvanishingReport::str() const {
  std::ostringstream os;
  os << "L_alg(E,1) mod ell = " << set.L_alg_residue << (set.hypothesis_holds ? "" : "  (" + set.note + ")") << "\n";
  os << "S = {";
  for (std::size_t i = 0; i < set.primes.size(); ++i) os << (i ? ", " : "") << set.primes[i];
  os << "}  (" << set.primes.size() << " of " << set.candidates << " primes = 1 mod ell)\n";
  for (auto& c : checks) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  p=%-5llu %-14s |L| = %.6e  err %.2e  %s\n",
                  static_cast<unsigned long long>(c.p), c.chi.c_str(), c.absL, c.err, c.nonzero ? "nonzero" : "NOT SEPARATED");
    os << buf;
  }
  return os.str();
}

NonvanishingReport run_nonvanishing(const CurveConfig& config, int ell, std::uint64_t bound) {
  auto E = config.curve();
  auto norm = lvalue::calibrate_normalization(E, ell, 10, config.precision_digits);
  NonvanishingReport out;
  out.set = lvalue::nonvanishing_prime_set(E, ell, bound, norm);
  for (auto p : out.set.primes) {
    for (auto& chi : dirichlet::characters_of_order(p, ell)) {
      auto v = lvalue::central_value(E, chi, 1e-30);
      double a = v.value.abs().to_double();
      bool nz = a > 10 * v.err;
      out.checks.push_back({p, chi.id(), a, v.err, nz});
      out.all_nonzero = out.all_nonzero && nz;
    }
  }
  return out;
}

std::string E37bReport::str() const {
  std::ostringstream os;
  os << "pairs " << census.rows.size() << " (|a|, |b| <= " << census.height_bound << ")  distinct conductors <= "
     << census.X << ": " << census.conductors.size() << "\n";
  os << "           X     count\n";
  for (auto& l : census.ladder) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%12.0f %9zu\n", l.X, l.count);
    os << buf;
  }
  if (census.slope) os << "log-log slope: " << *census.slope << "\n";
  for (auto& s : samples) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  (a,b)=(%ld,%ld) f=%s %s %s |L|=%.3e err=%.3e S=%s %s\n", s.a, s.b,
                  s.conductor.c_str(), s.chi.c_str(), lvalue::to_string(s.decision).c_str(), s.absL, s.err,
                  s.S.c_str(), s.ok ? "ok" : "FAILED");
    os << buf;
  }
  return os.str();
}

E37bReport run_e37b(std::uint64_t X, long height_bound, const std::vector<double>& cutoffs, int workers,
                    std::size_t samples, int digits) {
  E37bReport out;
  out.census = kummer::census_37b(X, height_bound, cutoffs, workers);
  if (samples == 0) return out;
  auto cfg = builtin_config("37b");
  auto E = cfg.curve();
  auto norm = lvalue::calibrate_normalization(E, 3, 10, digits);
  std::set<mpz_class> used;
  const mpz_class cap = std::min<std::uint64_t>(X, 2000);
  std::vector<std::string> failures;
  for (auto& r : out.census.rows) {
    if (out.samples.size() >= samples) break;
    if (!r.cyclic || r.conductor > cap || r.conductor % 37 == 0 || used.count(r.conductor)) continue;
    used.insert(r.conductor);
    auto K = kummer::e37b_field(r.a, r.b);
    auto chi = cubicfield::matching_character(K);
    auto rec = lvalue::analyze_orbit(E, chi, norm, digits);
    E37bSample s{r.a, r.b, r.conductor.get_str(), chi.id(), rec.decision, rec.L.value.abs().to_double(), rec.L.err,
                 rec.recognized ? rec.sums.str() : "", false};
    s.ok = rec.decision == Decision::Vanishes && s.absL <= s.err;
    if (!s.ok) failures.push_back(chi.id());
    out.samples.push_back(s);
  }
  if (!failures.empty()) {
    std::string msg = "e37b: constructed fields whose twist does not vanish:";
    for (auto& f : failures) msg += " " + f;
    throw TheoryAlarm(msg + "\n" + out.str());
  }
  return out;
}

std::string FamilyReport::str() const {
  std::ostringstream os;
  for (auto& r : rows) {
    os << kummer::to_string(r.kind) << " lambda=" << r.lambda << ": ";
    if (r.excluded) {
      os << "excluded (" << r.message << ")\n";
      continue;
    }
    const auto& F = *r.fiber;
    os << (r.pass ? "pass" : "FAIL") << "  point (" << F.point.x << ", " << F.point.y << ")"
       << (F.singular_fiber ? " on the singular fiber" : "") << "  on-curve " << F.on_curve << "  non-torsion "
       << F.nontorsion << "  fiber point (t,u,delta)=(" << F.t0 << ", " << F.u0 << ", " << F.delta0 << ") "
       << (r.surface_point_ok ? "ok" : "BAD") << "\n";
    for (auto& c : r.cubic_fields) os << "    " << c << "\n";
  }
  return os.str();
}

FamilyReport run_family(kummer::FamilyKind kind, const std::vector<mpq_class>& lambdas, long fiber_height) {
  FamilyReport out;
  for (auto& l : lambdas) {
    FamilyRow row;
    row.kind = kind;
    row.lambda = l;
    try {
      row.fiber = kummer::torsion_family(kind, l);
    } catch (const kummer::ExcludedParameterError& e) {
      row.excluded = true;
      row.message = e.what();
      out.rows.push_back(row);
      continue;
    }
    const auto& F = *row.fiber;
    auto S = kummer::delta_poly(F.source);
    row.surface_point_ok = S.eval(F.u0, F.t0) == F.delta0 * F.delta0;
    if (!F.singular_fiber && fiber_height > 0) {
      std::set<std::string> seen;
      for (auto& p : kummer::fiber_search(S, F.t0, fiber_height).points) {
        if (p.cls != kummer::FiberClass::CyclicCubic || p.delta < 0) continue;
        auto K = cubicfield::from_cubic(cubicfield::integral_monic_model(p.cubic));
        std::string s = "u=" + p.u.get_str() + "  " + K.defining_poly().str() + "  conductor " + K.conductor.get_str();
        if (seen.insert(K.conductor.get_str()).second) row.cubic_fields.push_back(s);
      }
    }
    row.pass = F.on_curve && F.nontorsion && row.surface_point_ok;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace vtwist::census
