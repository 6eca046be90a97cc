#include "cyclosrg/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace cyclosrg {

using nlohmann::json;

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "text") return OutputFormat::Text;
    return std::nullopt;
}

namespace {

std::string dec(const BigInt& x) { return x.get_str(); }

BigInt parse_big(const json& j) { return BigInt(j.get<std::string>()); }

}  // namespace

json ReportRecord::to_json() const {
    json j;
    j["p"] = p;
    j["p1"] = p1;
    j["m"] = m;
    j["N"] = dec(N);
    j["f"] = dec(f);
    j["w"] = w;
    j["ftilde"] = ftilde;
    j["b"] = b;
    j["r"] = dec(r);
    j["s"] = s;
    j["verdict"] = verdict;
    if (ell) j["ell"] = *ell;
    if (epsilon) j["epsilon"] = *epsilon;
    j["ell_unique"] = ell_unique;
    json eigs = json::array();
    for (const BigInt& e : eigenvalues) eigs.push_back(dec(e));
    j["eigenvalues"] = eigs;
    j["v"] = dec(v);
    j["k"] = dec(k);
    j["lambda"] = dec(lambda);
    j["mu"] = dec(mu);
    j["imprimitive"] = imprimitive;
    j["failure_reason"] = failure_reason;
    j["verification"] = verification;
    j["mismatch_detail"] = mismatch_detail;
    return j;
}

ReportRecord ReportRecord::from_json(const json& j) {
    ReportRecord r;
    r.p = j.at("p").get<uint64_t>();
    r.p1 = j.at("p1").get<uint64_t>();
    r.m = j.at("m").get<uint32_t>();
    r.N = parse_big(j.at("N"));
    r.f = parse_big(j.at("f"));
    r.w = j.at("w").get<uint64_t>();
    r.ftilde = j.at("ftilde").get<uint64_t>();
    r.b = j.at("b").get<uint64_t>();
    r.r = parse_big(j.at("r"));
    r.s = j.at("s").get<uint64_t>();
    r.verdict = j.at("verdict").get<std::string>();
    if (j.contains("ell")) r.ell = j.at("ell").get<uint64_t>();
    if (j.contains("epsilon")) r.epsilon = j.at("epsilon").get<int>();
    r.ell_unique = j.at("ell_unique").get<bool>();
    for (const auto& e : j.at("eigenvalues")) r.eigenvalues.push_back(parse_big(e));
    r.v = parse_big(j.at("v"));
    r.k = parse_big(j.at("k"));
    r.lambda = parse_big(j.at("lambda"));
    r.mu = parse_big(j.at("mu"));
    r.imprimitive = j.at("imprimitive").get<bool>();
    r.failure_reason = j.at("failure_reason").get<std::string>();
    r.verification = j.at("verification").get<std::string>();
    r.mismatch_detail = j.at("mismatch_detail").get<std::string>();
    return r;
}

std::string ReportRecord::csv_header() {
    return "p,p1,m,N,f,w,ftilde,b,r,s,verdict,ell,epsilon,eig_hi,eig_lo,v,k,lambda,mu,"
           "imprimitive,verification";
}

std::string ReportRecord::to_csv() const {
    std::ostringstream out;
    out << p << ',' << p1 << ',' << m << ',' << dec(N) << ',' << dec(f) << ',' << w << ','
        << ftilde << ',' << b << ',' << dec(r) << ',' << s << ',' << verdict << ',';
    if (ell) out << *ell;
    out << ',';
    if (epsilon) out << *epsilon;
    out << ',';
    if (eigenvalues.size() == 2) {
        const bool first_hi = eigenvalues[0] >= eigenvalues[1];
        out << dec(eigenvalues[first_hi ? 0 : 1]) << ',' << dec(eigenvalues[first_hi ? 1 : 0]);
    } else {
        out << ',';
    }
    out << ',' << dec(v) << ',' << dec(k) << ',' << dec(lambda) << ',' << dec(mu) << ','
        << (imprimitive ? 1 : 0) << ',' << verification;
    return out.str();
}

std::string ReportRecord::to_text() const {
    std::ostringstream out;
    out << "instance: p=" << p << " p1=" << p1 << " m=" << m << " N=" << dec(N) << "\n"
        << "  profile: f=" << dec(f) << " w=" << w << " ftilde=" << ftilde << " b=" << b
        << " r=" << dec(r) << " s=" << s << "\n"
        << "  verdict: " << verdict;
    if (verdict == "srg") {
        out << " (ell=" << (ell ? std::to_string(*ell) : "?")
            << ", eps=" << (epsilon ? std::to_string(*epsilon) : "?") << ")";
        if (!ell_unique) out << " [multiple ell pass!]";
        if (imprimitive) out << " [imprimitive]";
        out << "\n  eigenvalues: {";
        for (size_t i = 0; i < eigenvalues.size(); ++i) out << (i ? ", " : "") << dec(eigenvalues[i]);
        out << "}\n  srg(" << dec(v) << ", " << dec(k) << ", " << dec(lambda) << ", " << dec(mu)
            << ")";
    } else if (!failure_reason.empty()) {
        out << "\n  reason: " << failure_reason;
    }
    out << "\n  verification: " << verification;
    if (!mismatch_detail.empty()) out << "\n  MISMATCH: " << mismatch_detail;
    return out.str();
}

ReportRecord record_from_prediction(const SrgPrediction& pred) {
    ReportRecord rec;
    rec.p = pred.hypothesis.p;
    rec.p1 = pred.hypothesis.p1;
    rec.m = pred.hypothesis.m;
    rec.N = pred.hypothesis.N;
    rec.f = pred.hypothesis.f;
    rec.w = pred.hypothesis.w;
    rec.ftilde = pred.hypothesis.ftilde;
    if (pred.params) {
        rec.b = pred.params->b;
        rec.r = pred.params->r;
        rec.s = pred.params->s;
    }
    rec.verdict = to_string(pred.verdict);
    rec.failure_reason = pred.failure_reason;
    if (pred.verdict == Verdict::Srg) {
        rec.ell = pred.ell;
        rec.epsilon = pred.epsilon;
        rec.ell_unique = pred.ell_unique;
        rec.eigenvalues = {pred.eigenvalues[0], pred.eigenvalues[1]};
        rec.v = pred.v;
        rec.k = pred.k;
        rec.lambda = pred.lambda;
        rec.mu = pred.mu;
        rec.imprimitive = pred.imprimitive;
    }
    rec.verification = "predicted-only";
    return rec;
}

std::string render_record(const ReportRecord& rec, OutputFormat format, bool with_csv_header) {
    switch (format) {
        case OutputFormat::Json:
            return rec.to_json().dump();
        case OutputFormat::Csv:
            return with_csv_header ? ReportRecord::csv_header() + "\n" + rec.to_csv() : rec.to_csv();
        case OutputFormat::Text:
            return rec.to_text();
    }
    return {};
}

}  // namespace cyclosrg
