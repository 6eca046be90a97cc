#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclosrg/cyclotomy.hpp"
#include "cyclosrg/ffield.hpp"
#include "cyclosrg/index_theory.hpp"

namespace cyclosrg {

/// counts[i][c] = #{ x in C_i : Tr(x) = c }, filled by one pass over F_q^*.
struct TraceCountMatrix {
    uint64_t N = 0;
    uint32_t p = 0;
    std::vector<uint64_t> counts;  // row-major, N rows of p entries

    uint64_t at(uint64_t i, uint32_t c) const { return counts[i * p + c]; }
};

TraceCountMatrix build_trace_counts(const ExtensionField& fld, uint64_t N, const RunLimits& limits);

/// The N exact integers psi(gamma^a D), a = 0 .. N-1. Integrality holds
/// because the nonzero-trace counts agree; profile_spectrum asserts that and
/// never touches a root of unity numerically.
struct SpectrumProfile {
    uint64_t N = 0;
    std::vector<int64_t> values;                // indexed by a
    std::map<int64_t, uint64_t> multiplicities; // distinct values with counts
};

/// Throws NonIntegralPeriodError when some shifted connection set has unequal
/// nonzero-trace counts, and CapExceededError past the enumeration cap.
SpectrumProfile profile_spectrum(const ExtensionField& fld, const ConnectionSet& d,
                                 const RunLimits& limits);

/// Empirical srg verdict with parameters.
struct SrgCheckResult {
    bool is_srg = false;
    bool imprimitive = false;
    BigInt v, k, lambda, mu;
    std::array<BigInt, 2> eigenvalues;  // meaningful when is_srg
    std::string reason;                 // why not, when !is_srg
};

/// Two distinct restricted eigenvalues <=> srg (complete/edgeless rejected).
SrgCheckResult srg_decision(const SpectrumProfile& profile, const BigInt& v, const BigInt& k);

/// Dense-matrix oracle: builds the q x q adjacency matrix of Cay(F_q, D),
/// derives (lambda, mu) from one adjacent and one non-adjacent pair, and
/// checks A^2 = (lambda - mu) A + (k - mu) I + mu J entrywise over exact
/// integers. Independent of the character-sum machinery.
SrgCheckResult adjacency_oracle(const ExtensionField& fld, const ConnectionSet& d,
                                uint64_t oracle_cap = kDefaultOracleCap);

/// Same oracle over an explicit connection set given by element ranks
/// (must satisfy -D = D, 0 not in D).
SrgCheckResult adjacency_oracle_subset(const ExtensionField& fld,
                                       const std::vector<uint64_t>& connection_ranks,
                                       uint64_t oracle_cap = kDefaultOracleCap);

/// Prediction vs exact spectrum. Disagreement anywhere is the artifact's
/// headline failure mode and is reported with both sides' data.
struct CrossCheckReport {
    bool agree = false;
    std::string mismatch_detail;
    SrgCheckResult empirical;
    SpectrumProfile profile;
};

CrossCheckReport cross_check(const SrgPrediction& prediction, const ExtensionField& fld,
                             const ConnectionSet& d, const RunLimits& limits);

}  // namespace cyclosrg
