#pragma once

#include <string>
#include <vector>

#include "vtwist/census/census.hpp"

namespace vtwist::census {

std::vector<CensusRow> read_census_csv(const std::string& path);
void write_census_csv(const std::string& path, const std::vector<CensusRow>& rows);

// Summary block for a census CSV, as printed by the report subcommand.
std::string report_csv(const std::string& path, std::uint64_t X = 0);

}  // namespace vtwist::census
