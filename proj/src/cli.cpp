#include "cyclosrg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclosrg/errors.hpp"
#include "cyclosrg/verifier.hpp"

namespace cyclosrg {

namespace {

/// q = p^f for the instance, or nullopt when the hypotheses failed.
std::optional<BigInt> instance_q(const SrgPrediction& pred) {
    if (!pred.hypothesis.pass || !pred.hypothesis.f.fits_ulong_p()) return std::nullopt;
    const uint64_t f = pred.hypothesis.f.get_ui();
    if (f > 4096) return std::nullopt;  // far beyond any enumeration cap anyway
    return pow_big(BigInt(static_cast<unsigned long>(pred.hypothesis.p)), f);
}

void apply_verification(ReportRecord& rec, const SrgPrediction& pred, const RunConfig& cfg) {
    const auto q = instance_q(pred);
    if (!q || *q - 1 > cfg.enumeration_cap) {
        rec.verification = "cap-exceeded";
        return;
    }
    const ExtensionField fld = build_field(pred.hypothesis.p, static_cast<uint32_t>(pred.hypothesis.f.get_ui()));
    const ConnectionSet d = build_connection_set(fld, pred.hypothesis.p1, pred.hypothesis.m);
    const CrossCheckReport report = cross_check(pred, fld, d, cfg.limits());
    rec.verification = report.agree ? "verified" : "mismatch";
    rec.mismatch_detail = report.mismatch_detail;
    if (report.agree && rec.verdict == "not-srg") {
        rec.failure_reason = "confirmed: " + report.empirical.reason;
    }
}

uint64_t require_prime(uint64_t value, const char* name) {
    if (!is_prime_u64(value)) {
        throw NonPrimeError(std::string(name) + " = " + std::to_string(value) + " is not prime");
    }
    return value;
}

}  // namespace

ReportRecord cmd_check(uint64_t p, uint64_t p1, uint32_t m) {
    require_prime(p, "--p");
    require_prime(p1, "--p1");
    return record_from_prediction(predict(p, p1, m));
}

ReportRecord cmd_verify(uint64_t p, uint64_t p1, uint32_t m, const RunConfig& cfg) {
    require_prime(p, "--p");
    require_prime(p1, "--p1");
    const SrgPrediction pred = predict(p, p1, m);
    ReportRecord rec = record_from_prediction(pred);
    if (!pred.hypothesis.pass) return rec;  // nothing to verify, D is undefined
    apply_verification(rec, pred, cfg);
    return rec;
}

std::vector<ReportRecord> cmd_scan(uint64_t p_max, uint64_t p1_max, uint32_t m,
                                   bool verify_under_cap, const RunConfig& cfg) {
    std::vector<ReportRecord> records;
    for (uint64_t p1 = 3; p1 <= p1_max; ++p1) {
        if (!is_prime_u64(p1)) continue;
        for (uint64_t p = 2; p <= p_max; ++p) {
            if (!is_prime_u64(p) || p == p1) continue;
            const SrgPrediction pred = predict(p, p1, m);
            if (!pred.hypothesis.pass) continue;
            ReportRecord rec = record_from_prediction(pred);
            if (verify_under_cap) apply_verification(rec, pred, cfg);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<CatalogRow> cmd_catalog(const RunConfig& cfg) {
    std::vector<CatalogRow> rows;
    for (const SporadicRow& row : sporadic_catalog()) {
        CatalogRow out;
        out.N = row.N;
        out.p = row.p;
        out.f_stored = row.f;
        out.w_stored = row.w;
        out.f_computed = multiplicative_order(row.p, row.N);
        out.w_computed = euler_phi_u64(row.N) / out.f_computed;
        out.q = pow_big(BigInt(static_cast<unsigned long>(row.p)), out.f_computed);
        if (out.q <= 20000000) {
            out.desk = "yes";
        } else if (out.q - 1 <= cfg.enumeration_cap) {
            out.desk = "borderline";
        } else {
            out.desk = "no";
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

DecomposeReport cmd_decompose(uint64_t p, uint64_t p1, const RunConfig& cfg) {
    require_prime(p, "--p");
    require_prime(p1, "--p1");
    const HypothesisCheck hc = check_hypotheses(p, p1, 1);
    if (!hc.pass) {
        std::string why;
        for (const auto& fail : hc.failures) why += (why.empty() ? "" : "; ") + fail;
        throw Error("decompose: hypotheses fail: " + why);
    }

    DecomposeReport rep;
    rep.p = p;
    rep.p1 = p1;
    rep.f = hc.ftilde;
    rep.q = pow_big(BigInt(static_cast<unsigned long>(p)), rep.f);
    if (rep.q - 1 > cfg.enumeration_cap) {
        throw CapExceededError("decompose: q - 1 = " + rep.q.get_str() + " exceeds cap " +
                               std::to_string(cfg.enumeration_cap));
    }

    const ExtensionField fld = build_field(p, static_cast<uint32_t>(rep.f));
    const CosetDecomposition dec = decompose_cosets(static_cast<uint32_t>(p), static_cast<uint32_t>(p1));
    const CompositeCyclotomic gs = gauss_sum_exact(fld, dec, cfg.limits());

    const CompositeCyclotomic norm = gs * gs.conjugate();
    rep.norm_ok = norm.is_constant() && norm.constant_value() == rep.q;

    const GaussSumDecomposition gd = decompose_gauss_sum(gs, dec, p);
    rep.r = gd.r;
    const auto [b_list, b] = stickelberger_b(p, p1);
    rep.r_expected = compute_r(BigInt(static_cast<unsigned long>(hc.ftilde)), hc.ftilde, b).first;
    rep.coefficients = gd.coefficients;
    rep.m0 = gd.m0;
    rep.srg_signature = gd.srg_signature(rep.epsilon, rep.ell);
    return rep;
}

namespace {

void emit_records(const std::vector<ReportRecord>& records, const RunConfig& cfg,
                  std::ostream& out) {
    bool first = true;
    for (const auto& rec : records) {
        out << render_record(rec, cfg.format, first) << "\n";
        first = false;
    }
}

void emit_catalog(const std::vector<CatalogRow>& rows, const RunConfig& cfg, std::ostream& out) {
    switch (cfg.format) {
        case OutputFormat::Json:
            for (const auto& r : rows) {
                nlohmann::json j;
                j["N"] = r.N;
                j["p"] = r.p;
                j["f"] = r.f_stored;
                j["index"] = r.w_stored;
                j["f_computed"] = r.f_computed;
                j["index_computed"] = r.w_computed;
                j["q"] = r.q.get_str();
                j["desk_scale"] = r.desk;
                out << j.dump() << "\n";
            }
            break;
        case OutputFormat::Csv:
            out << "N,p,f,index,f_computed,index_computed,q,desk_scale\n";
            for (const auto& r : rows) {
                out << r.N << ',' << r.p << ',' << r.f_stored << ',' << r.w_stored << ','
                    << r.f_computed << ',' << r.w_computed << ',' << r.q.get_str() << ','
                    << r.desk << "\n";
            }
            break;
        case OutputFormat::Text:
            out << "  N    p    f  index  desk-scale  q\n";
            for (const auto& r : rows) {
                char line[64];
                std::snprintf(line, sizeof(line), "%3llu  %3llu  %3llu  %5llu  %-10s  ",
                              static_cast<unsigned long long>(r.N),
                              static_cast<unsigned long long>(r.p),
                              static_cast<unsigned long long>(r.f_stored),
                              static_cast<unsigned long long>(r.w_stored), r.desk.c_str());
                out << line << r.q.get_str() << "\n";
            }
            break;
    }
}

void emit_decompose(const DecomposeReport& rep, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == OutputFormat::Json) {
        nlohmann::json j;
        j["p"] = rep.p;
        j["p1"] = rep.p1;
        j["f"] = rep.f;
        j["q"] = rep.q.get_str();
        j["r"] = rep.r;
        j["r_expected"] = rep.r_expected.get_str();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : rep.coefficients) coeffs.push_back(c.get_str());
        j["coefficients"] = coeffs;
        j["m0"] = rep.m0.get_str();
        j["srg_signature"] = rep.srg_signature;
        if (rep.srg_signature) {
            j["epsilon"] = rep.epsilon;
            j["ell"] = rep.ell;
        }
        j["norm_ok"] = rep.norm_ok;
        out << j.dump() << "\n";
        return;
    }
    out << "g(theta-bar) over F_" << rep.q.get_str() << ", order " << rep.p1 << "\n"
        << "  r = " << rep.r << " (Stickelberger: " << rep.r_expected.get_str() << ")\n"
        << "  coefficients N_i = [";
    for (size_t i = 0; i < rep.coefficients.size(); ++i) {
        out << (i ? ", " : "") << rep.coefficients[i].get_str();
    }
    out << "]\n  M_0 = " << rep.m0.get_str() << "\n";
    if (rep.srg_signature) {
        out << "  srg signature: yes (eps = " << rep.epsilon << ", ell = " << rep.ell << ")\n";
    } else {
        out << "  srg signature: no (coefficients outside {0, eps})\n";
    }
    out << "  norm g * conj(g) = q: " << (rep.norm_ok ? "exact" : "FAILED") << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclotomic strongly regular Cayley graphs: index-w conditions and exact verification"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env_cap = std::getenv("CYCLOSRG_CAP")) {
        cfg.enumeration_cap = std::strtoull(env_cap, nullptr, 10);
    }
    std::string format = "text";
    app.add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cap", cfg.enumeration_cap, "max q-1 a verify run may enumerate");
    app.add_option("--oracle-cap", cfg.oracle_cap, "max q for the dense adjacency oracle");
    app.add_option("--workers", cfg.workers, "worker threads (0 = all cores)");

    uint64_t p = 0, p1 = 0, p_max = 0, p1_max = 0;
    uint32_t m = 1;
    bool scan_verify = false;

    CLI::App* check = app.add_subcommand("check", "condition-only srg decision, never enumerates the field");
    check->add_option("--p", p, "characteristic")->required();
    check->add_option("--p1", p1, "odd prime with N = p1^m")->required();
    check->add_option("--m", m, "exponent of p1");

    CLI::App* verify = app.add_subcommand("verify", "exact spectrum verification against the prediction");
    verify->add_option("--p", p, "characteristic")->required();
    verify->add_option("--p1", p1, "odd prime with N = p1^m")->required();
    verify->add_option("--m", m, "exponent of p1");

    CLI::App* scan = app.add_subcommand("scan", "sweep prime pairs and predict, optionally verifying");
    scan->add_option("--p-max", p_max, "largest characteristic")->required();
    scan->add_option("--p1-max", p1_max, "largest p1")->required();
    scan->add_option("--m", m, "exponent of p1");
    scan->add_flag("--verify", scan_verify, "verify every record under the enumeration cap");

    CLI::App* catalog = app.add_subcommand("catalog", "the 11 sporadic rows with recomputed invariants");

    CLI::App* decompose = app.add_subcommand("decompose", "exact Gauss-sum decomposition in the period basis");
    decompose->add_option("--p", p, "characteristic")->required();
    decompose->add_option("--p1", p1, "odd prime, N = p1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (auto parsed = parse_format(format)) cfg.format = *parsed;

    try {
        if (check->parsed()) {
            emit_records({cmd_check(p, p1, m)}, cfg, out);
            return 0;
        }
        if (verify->parsed()) {
            const auto start = std::chrono::steady_clock::now();
            ReportRecord rec = cmd_verify(p, p1, m, cfg);
            const auto elapsed =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            emit_records({rec}, cfg, out);
            err << "verify runtime: " << elapsed.count() << " ms\n";
            return rec.verification == "mismatch" ? 2 : 0;
        }
        if (scan->parsed()) {
            if (p_max < 2 || p1_max < 2) {
                err << "scan: bounds must be >= 2\n";
                return 1;
            }
            const auto records = cmd_scan(p_max, p1_max, m, scan_verify, cfg);
            emit_records(records, cfg, out);
            for (const auto& rec : records) {
                if (rec.verification == "mismatch") return 2;
            }
            return 0;
        }
        if (catalog->parsed()) {
            emit_catalog(cmd_catalog(cfg), cfg, out);
            return 0;
        }
        if (decompose->parsed()) {
            emit_decompose(cmd_decompose(p, p1, cfg), cfg, out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace cyclosrg
