#pragma once

// Figure and table generators. Each builds a Document and throws
// Error(NumericalCheck) when an identity the output relies on fails.

#include <cstdint>
#include <string>
#include <vector>

#include "qgeo/document.hpp"

namespace qgeo {

Document cmd_fig2(double omega0, double nu0, int steps);

enum class GapCase { Orthogonal, Overlapping };
GapCase parse_gap_case(const std::string& name);
Document cmd_fig3(GapCase which, int grid);

Document cmd_scaling(int k_max);

enum class TransportScenario { OptimalStationary, SuboptimalNonstationary };
TransportScenario parse_scenario(const std::string& name);
Document cmd_table1(const std::vector<TransportScenario>& scenarios);

enum class Scheme { FG, Fenner, RolandCerf };
enum class FailureReason { InfiniteSearchTime, ExcludedByConstruction, VanishingGap, None };

struct FailureDiagnosis {
  Scheme scheme;
  bool fails_on_orthogonal;
  FailureReason reason;
  double evidence;  // FG: peak probability; Fenner: overlap x; RC: minimum gap
};

std::string to_string(Scheme s);
std::string to_string(FailureReason r);

/// Runs each search scheme on the orthogonal pair |s> = |0>, |w> = |1>.
std::vector<FailureDiagnosis> diagnose_orthogonal_failures();
Document cmd_table2();

Document cmd_coupling_fix(const std::vector<double>& gammas);

Document cmd_constraint_scan(int grid);

Document cmd_grover_check(const std::vector<std::int64_t>& sizes);

}  // namespace qgeo
