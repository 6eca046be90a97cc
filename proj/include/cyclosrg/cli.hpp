#pragma once

#include <iosfwd>

#include "cyclosrg/report.hpp"

namespace cyclosrg {

/// Runs the command-line interface against explicit streams. Exit codes:
/// 0 success, 1 usage error, 2 prediction/verification mismatch detected.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Command entry points, also used directly by the test suites.

ReportRecord cmd_check(uint64_t p, uint64_t p1, uint32_t m);

/// Prediction plus exact spectrum verification when q - 1 fits the cap;
/// otherwise the record carries status "cap-exceeded" with the prediction.
ReportRecord cmd_verify(uint64_t p, uint64_t p1, uint32_t m, const RunConfig& cfg);

/// All hypothesis-passing pairs with p <= p_max, p1 <= p1_max, ordered by
/// (p1, p); with verify_under_cap every record under the cap is verified.
std::vector<ReportRecord> cmd_scan(uint64_t p_max, uint64_t p1_max, uint32_t m,
                                   bool verify_under_cap, const RunConfig& cfg);

struct CatalogRow {
    uint64_t N, p, f_stored, w_stored;
    uint64_t f_computed, w_computed;
    BigInt q;
    std::string desk;  // yes | borderline | no
};

std::vector<CatalogRow> cmd_catalog(const RunConfig& cfg);

struct DecomposeReport {
    uint64_t p = 0, p1 = 0;
    uint64_t f = 0;
    BigInt q;
    uint64_t r = 0;
    BigInt r_expected;  // Stickelberger value (f - ftilde)/2 + b
    std::vector<BigInt> coefficients;
    BigInt m0;
    bool srg_signature = false;  // all N_i in {0, eps}
    int epsilon = 0;
    uint64_t ell = 0;
    bool norm_ok = false;  // g * conj(g) == q exactly
};

DecomposeReport cmd_decompose(uint64_t p, uint64_t p1, const RunConfig& cfg);

}  // namespace cyclosrg
