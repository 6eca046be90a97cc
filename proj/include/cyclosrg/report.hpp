#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cyclosrg/ffield.hpp"
#include "cyclosrg/index_theory.hpp"

namespace cyclosrg {

enum class OutputFormat { Json, Csv, Text };

std::optional<OutputFormat> parse_format(const std::string& name);

/// Runtime knobs shared by all commands.
struct RunConfig {
    uint64_t enumeration_cap = kDefaultEnumerationCap;  // max q-1 for verify
    uint64_t oracle_cap = kDefaultOracleCap;            // max q for the dense oracle
    unsigned workers = 0;                               // 0 = all cores
    OutputFormat format = OutputFormat::Text;

    RunLimits limits() const { return RunLimits{enumeration_cap, workers}; }
};

/// One instance's worth of results. Big integers are serialized as decimal
/// strings so records survive v = p^f for m >= 2 bit-exactly.
struct ReportRecord {
    uint64_t p = 0;
    uint64_t p1 = 0;
    uint32_t m = 0;
    BigInt N;
    BigInt f;
    uint64_t w = 0;
    uint64_t ftilde = 0;
    uint64_t b = 0;
    BigInt r;
    uint64_t s = 0;

    std::string verdict;  // srg | not-srg | hypothesis-failed
    std::optional<uint64_t> ell;
    std::optional<int> epsilon;
    bool ell_unique = true;
    std::vector<BigInt> eigenvalues;  // empty unless srg
    BigInt v, k, lambda, mu;          // zero unless srg
    bool imprimitive = false;
    std::string failure_reason;

    std::string verification;  // predicted-only | verified | mismatch | cap-exceeded
    std::string mismatch_detail;

    bool operator==(const ReportRecord&) const = default;

    nlohmann::json to_json() const;
    static ReportRecord from_json(const nlohmann::json& j);

    static std::string csv_header();
    std::string to_csv() const;
    std::string to_text() const;
};

/// Fills the arithmetic profile and verdict fields from a prediction.
ReportRecord record_from_prediction(const SrgPrediction& pred);

/// Renders one record in the configured format (JSON = one object per line).
std::string render_record(const ReportRecord& rec, OutputFormat format, bool with_csv_header);

}  // namespace cyclosrg
