// ============================================================================
// ptsynth/oracle.hpp: brute-force minimal-time reachability for plain TAs
// ============================================================================
//
// Explores concrete runs whose delays are multiples of 1/2.  For integer,
// non-strict models the minimal duration is attained on that grid, so the
// answer is exact on the oracle's domain.
//
// ============================================================================

#ifndef PTSYNTH_ORACLE_HPP
#define PTSYNTH_ORACLE_HPP

#include "ptsynth/minimum.hpp"
#include "ptsynth/pta.hpp"

#include <span>
#include <vector>

namespace ptsynth {

struct OracleResult {
    Minimum minimum;                  // infinity when no target within the horizon
    bool horizon_exhausted = false;   // search was cut at the horizon
    std::size_t explored = 0;
    std::vector<std::size_t> path;    // edges of one optimal run
};

/// Throws std::invalid_argument if the model has parameters, strict atoms or
/// non-integer constants.
OracleResult concrete_min_time_oracle(const Pta& ta, std::span<const std::size_t> targets, const Rational& horizon);

}  // namespace ptsynth

#endif  // PTSYNTH_ORACLE_HPP
