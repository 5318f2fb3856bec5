#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vtwist/census/config.hpp"
#include "vtwist/kummer/e37b.hpp"
#include "vtwist/kummer/families.hpp"
#include "vtwist/lvalue/congruence.hpp"

namespace vtwist::census {

struct CensusRow {
  std::uint64_t conductor = 0;
  std::string chi;  // orbit representative id
  lvalue::Decision decision = lvalue::Decision::Undecided;
  std::string L_re, L_im;
  double err = 0;
  std::string S;  // "[s0 s1 ...]" or empty when not recognized
  double seconds = 0;
  std::string note;

  // Deterministic CSV fields (no timing).
  std::string csv() const;
};

std::string census_csv_header();
// Parses a line written by CensusRow::csv(), optionally followed by ",seconds".
CensusRow parse_census_line(const std::string& line, bool with_timing);

struct CutoffCount {
  double X;
  std::size_t orbits = 0, vanishes = 0, nonzero = 0, undecided = 0;
};

struct CensusSummary {
  std::size_t orbits = 0, vanishes = 0, nonzero = 0, undecided = 0;
  std::size_t skipped_bad_conductor = 0;
  std::vector<CutoffCount> ladder;
  std::optional<double> vanish_slope;
  std::string str() const;
};

CensusSummary summarize(const std::vector<CensusRow>& rows, std::uint64_t X);

struct CensusOptions {
  int ell = 3;
  std::uint64_t X = 100;
  int workers = 1;
  std::optional<int> digits;  // overrides the config precision
  std::string out_path;        // final sorted CSV; the log is out_path + ".log"
  bool resume = false;
  // stop after this many newly computed orbits (simulates an interruption)
  std::optional<std::size_t> max_new_orbits;
};

struct CensusResult {
  lvalue::PeriodNormalization norm;
  std::vector<CensusRow> rows;  // sorted by (conductor, id)
  CensusSummary summary;
  bool complete = true;
};

// Throws TheoryAlarm when the root number fails the parameter test.
CensusResult run_census(const CurveConfig& config, const CensusOptions& opts);

struct CongruenceSweep {
  std::size_t pairs = 0, passed = 0;
  std::vector<lvalue::CongruenceReport> reports;
  std::string str(bool verbose) const;
};

CongruenceSweep run_congruence_sweep(const CurveConfig& config, int ell, std::uint64_t bound,
                                     const std::map<std::uint64_t, long>& ap_override = {});

struct NonvanishingCheck {
  std::uint64_t p;
  std::string chi;
  double absL, err;
  bool nonzero;
};
struct NonvanishingReport {
  lvalue::NonvanishingSet set;
  std::vector<NonvanishingCheck> checks;
  bool all_nonzero = true;
  std::string str() const;
};
NonvanishingReport run_nonvanishing(const CurveConfig& config, int ell, std::uint64_t bound);

struct E37bSample {
  long a, b;
  std::string conductor;
  std::string chi;
  lvalue::Decision decision;
  double absL, err;
  std::string S;
  bool ok;
};
struct E37bReport {
  kummer::E37bCensus census;
  std::vector<E37bSample> samples;
  std::string str() const;
};

// Sample fields are the first distinct conductors <= min(X, 2000) prime to 37
// over all cyclic rows. Throws TheoryAlarm if a sample does not vanish.
E37bReport run_e37b(std::uint64_t X, long height_bound, const std::vector<double>& cutoffs, int workers = 1,
                    std::size_t samples = 10, int digits = 50);

struct FamilyRow {
  kummer::FamilyKind kind;
  mpq_class lambda;
  bool excluded = false;
  std::string message;
  std::optional<kummer::FamilyFiber> fiber;
  bool surface_point_ok = false;
  std::vector<std::string> cubic_fields;  // "cubic; conductor f" from the fiber
  bool pass = false;
};
struct FamilyReport {
  std::vector<FamilyRow> rows;
  std::string str() const;
};
FamilyReport run_family(kummer::FamilyKind kind, const std::vector<mpq_class>& lambdas, long fiber_height = 6);

}  // namespace vtwist::census
