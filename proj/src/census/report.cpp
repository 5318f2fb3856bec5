#include "vtwist/census/report.hpp"

#include <fstream>

#include "vtwist/errors.hpp"

namespace vtwist::census {

std::vector<CensusRow> read_census_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("report: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != census_csv_header())
    throw ConfigError("report: '" + path + "' is not a census file");
  std::vector<CensusRow> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(parse_census_line(line, false));
  return rows;
}

void write_census_csv(const std::string& path, const std::vector<CensusRow>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ConfigError("census: cannot write '" + path + "'");
  out << census_csv_header() << "\n";
  for (auto& r : rows) out << r.csv() << "\n";
}

std::string report_csv(const std::string& path, std::uint64_t X) {
  auto rows = read_census_csv(path);
  if (X == 0)
    for (auto& r : rows) X = std::max<std::uint64_t>(X, r.conductor);
  return summarize(rows, X).str();
}

}  // namespace vtwist::census
