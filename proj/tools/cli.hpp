#pragma once

#include "r2r/r2r.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace r2r::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Fixed-width table of the rows with nonzero multiplicity.
std::string spectrum_table(const SpectrumReport& report, bool probability);
std::string spectrum_csv(const std::vector<SpectrumReport>& reports, bool probability);

// Value of R2R_MAX_N, default 6.
int max_brute_force_size();

}  // namespace r2r::cli
