#include "cyclosrg/verifier.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cyclosrg/errors.hpp"

namespace cyclosrg {

TraceCountMatrix build_trace_counts(const ExtensionField& fld, uint64_t N, const RunLimits& limits) {
    TraceCountMatrix tcm;
    tcm.N = N;
    tcm.p = static_cast<uint32_t>(fld.p());
    tcm.counts = class_trace_histogram(fld, N, limits);
    return tcm;
}

SpectrumProfile profile_spectrum(const ExtensionField& fld, const ConnectionSet& d,
                                 const RunLimits& limits) {
    if (d.q != fld.q()) throw Error("profile_spectrum: connection set built for a different field");
    const TraceCountMatrix tcm = build_trace_counts(fld, d.N, limits);
    const uint32_t p = tcm.p;
    const uint64_t N = d.N;

    SpectrumProfile profile;
    profile.N = N;
    profile.values.resize(N);

    std::vector<uint64_t> n(p);
    int64_t total = 0;
    for (uint64_t a = 0; a < N; ++a) {
        std::fill(n.begin(), n.end(), 0);
        for (uint64_t j = 0; j < d.class_count; ++j) {
            const uint64_t cls = (a + j) % N;
            for (uint32_t c = 0; c < p; ++c) n[c] += tcm.at(cls, c);
        }
        // psi(gamma^a D) = sum_c n_c xi_p^c collapses to n_0 - n_1 exactly
        // when n_1 = ... = n_{p-1}
        for (uint32_t c = 2; c < p; ++c) {
            if (n[c] != n[1]) {
                throw NonIntegralPeriodError(
                    "profile_spectrum: unequal nonzero-trace counts at a = " + std::to_string(a) +
                    " (hypotheses violated?)");
            }
        }
        profile.values[a] = static_cast<int64_t>(n[0]) - static_cast<int64_t>(n[1]);
        profile.multiplicities[profile.values[a]] += 1;
        total += profile.values[a];
    }

    if (total != -static_cast<int64_t>(d.class_count)) {
        throw InternalError("profile_spectrum: period sum identity violated");
    }
    return profile;
}

SrgCheckResult srg_decision(const SpectrumProfile& profile, const BigInt& v, const BigInt& k) {
    SrgCheckResult res;
    res.v = v;
    res.k = k;
    if (k == 0) {
        res.reason = "edgeless graph";
        return res;
    }
    if (k == v - 1) {
        res.reason = "complete graph";
        return res;
    }
    if (profile.multiplicities.size() != 2) {
        res.reason = std::to_string(profile.multiplicities.size()) + " distinct restricted eigenvalues";
        return res;
    }
    const int64_t low = profile.multiplicities.begin()->first;
    const int64_t high = profile.multiplicities.rbegin()->first;
    res.eigenvalues = {BigInt(static_cast<long>(high)), BigInt(static_cast<long>(low))};
    std::tie(res.lambda, res.mu) = srg_params_from_spectrum(v, k, res.eigenvalues[0], res.eigenvalues[1]);
    res.is_srg = true;
    res.imprimitive = res.mu == 0 || res.mu == res.k;
    return res;
}

namespace {

SrgCheckResult oracle_on_ranks(const ExtensionField& fld, const std::vector<uint64_t>& d_ranks,
                               uint64_t oracle_cap) {
    const uint64_t q = fld.q();
    if (q > oracle_cap) {
        throw CapExceededError("adjacency_oracle: q = " + std::to_string(q) + " exceeds cap " +
                               std::to_string(oracle_cap));
    }
    if (q > (uint64_t{1} << 14)) {
        throw CapExceededError("adjacency_oracle: dense matrix capped at q = 16384");
    }
    SrgCheckResult res;
    res.v = static_cast<unsigned long>(q);
    res.k = static_cast<unsigned long>(d_ranks.size());
    if (d_ranks.empty()) {
        res.reason = "edgeless graph";
        return res;
    }
    if (d_ranks.size() == q - 1) {
        res.reason = "complete graph";
        return res;
    }

    // packed 0/1 rows; row x has bit y set iff y - x lies in D
    std::vector<FieldElement> d_elems;
    d_elems.reserve(d_ranks.size());
    for (uint64_t r : d_ranks) d_elems.push_back(fld.unrank(r));

    const uint64_t words = (q + 63) / 64;
    std::vector<uint64_t> bits(q * words, 0);
    for (uint64_t x = 0; x < q; ++x) {
        const FieldElement xe = fld.unrank(x);
        for (const FieldElement& de : d_elems) {
            const uint64_t y = fld.rank(fld.add(xe, de));
            bits[x * words + y / 64] |= uint64_t{1} << (y % 64);
        }
    }

    auto adjacent = [&](uint64_t x, uint64_t y) {
        return (bits[x * words + y / 64] >> (y % 64)) & 1;
    };
    auto common = [&](uint64_t x, uint64_t y) {
        uint64_t acc = 0;
        const uint64_t* rx = &bits[x * words];
        const uint64_t* ry = &bits[y * words];
        for (uint64_t wi = 0; wi < words; ++wi) acc += std::popcount(rx[wi] & ry[wi]);
        return acc;
    };

    // sanity: loops/symmetry/regularity
    for (uint64_t x = 0; x < q; ++x) {
        if (adjacent(x, x)) {
            res.reason = "loop at vertex " + std::to_string(x);
            return res;
        }
        uint64_t deg = 0;
        for (uint64_t wi = 0; wi < words; ++wi) deg += std::popcount(bits[x * words + wi]);
        if (deg != d_ranks.size()) {
            res.reason = "graph is not regular";
            return res;
        }
    }
    std::vector<uint8_t> in_d(q, 0);
    for (uint64_t r : d_ranks) in_d[r] = 1;
    for (const FieldElement& de : d_elems) {
        if (!in_d[fld.rank(fld.neg(de))]) {
            res.reason = "-D != D, graph is directed";
            return res;
        }
    }

    // fix lambda/mu from the first pair of each kind, then verify
    // A^2 = (lambda - mu) A + (k - mu) I + mu J on every off-diagonal entry
    int64_t lambda = -1, mu = -1;
    for (uint64_t x = 0; x < q && (lambda < 0 || mu < 0); ++x) {
        for (uint64_t y = x + 1; y < q && (lambda < 0 || mu < 0); ++y) {
            if (adjacent(x, y)) {
                if (lambda < 0) lambda = static_cast<int64_t>(common(x, y));
            } else if (mu < 0) {
                mu = static_cast<int64_t>(common(x, y));
            }
        }
    }
    if (mu < 0) {
        res.reason = "complete graph";
        return res;
    }
    if (lambda < 0) {
        res.reason = "edgeless graph";
        return res;
    }
    for (uint64_t x = 0; x < q; ++x) {
        for (uint64_t y = x + 1; y < q; ++y) {
            const int64_t expect = adjacent(x, y) ? lambda : mu;
            if (static_cast<int64_t>(common(x, y)) != expect) {
                res.reason = "matrix identity fails at (" + std::to_string(x) + ", " +
                             std::to_string(y) + ")";
                return res;
            }
        }
    }

    res.is_srg = true;
    res.lambda = static_cast<long>(lambda);
    res.mu = static_cast<long>(mu);
    res.imprimitive = res.mu == 0 || res.mu == res.k;
    // restricted eigenvalues from x^2 - (lambda - mu) x - (k - mu) = 0; both
    // roots are integers for any srg arising here (conference graphs have
    // irrational spectra but never occur on these vertex counts with k = (q-1)/p1)
    const BigInt tr = res.lambda - res.mu;
    const BigInt disc = tr * tr + 4 * (res.k - res.mu);
    BigInt root = sqrt(disc);
    if (root * root == disc && (tr + root) % 2 == 0) {
        res.eigenvalues = {(tr + root) / 2, (tr - root) / 2};
    }
    return res;
}

}  // namespace

SrgCheckResult adjacency_oracle(const ExtensionField& fld, const ConnectionSet& d,
                                uint64_t oracle_cap) {
    if (d.q != fld.q()) throw Error("adjacency_oracle: connection set built for a different field");
    if (fld.q() > oracle_cap) {
        throw CapExceededError("adjacency_oracle: q = " + std::to_string(fld.q()) +
                               " exceeds cap " + std::to_string(oracle_cap));
    }
    std::vector<uint64_t> ranks;
    ranks.reserve(d.size);
    for_each_power(fld, 0, fld.q() - 1, [&](uint64_t k, const FieldElement& x) {
        if (d.contains_class(k % d.N)) ranks.push_back(fld.rank(x));
    });
    return oracle_on_ranks(fld, ranks, oracle_cap);
}

SrgCheckResult adjacency_oracle_subset(const ExtensionField& fld,
                                       const std::vector<uint64_t>& connection_ranks,
                                       uint64_t oracle_cap) {
    return oracle_on_ranks(fld, connection_ranks, oracle_cap);
}

CrossCheckReport cross_check(const SrgPrediction& prediction, const ExtensionField& fld,
                             const ConnectionSet& d, const RunLimits& limits) {
    CrossCheckReport report;
    report.profile = profile_spectrum(fld, d, limits);
    report.empirical = srg_decision(report.profile, BigInt(static_cast<unsigned long>(fld.q())),
                                    BigInt(static_cast<unsigned long>(d.size)));

    std::ostringstream detail;
    const bool predicted_srg = prediction.verdict == Verdict::Srg;
    if (predicted_srg != report.empirical.is_srg) {
        detail << "verdict: predicted " << to_string(prediction.verdict) << ", spectrum says "
               << (report.empirical.is_srg ? "srg" : report.empirical.reason);
    } else if (predicted_srg) {
        auto pred_pair = prediction.eigenvalues;
        auto emp_pair = report.empirical.eigenvalues;
        std::sort(pred_pair.begin(), pred_pair.end());
        std::sort(emp_pair.begin(), emp_pair.end());
        if (pred_pair != emp_pair) {
            detail << "eigenvalues: predicted {" << pred_pair[0] << ", " << pred_pair[1]
                   << "}, exact {" << emp_pair[0] << ", " << emp_pair[1] << "}";
        } else if (prediction.v != report.empirical.v || prediction.k != report.empirical.k ||
                   prediction.lambda != report.empirical.lambda ||
                   prediction.mu != report.empirical.mu) {
            detail << "parameters: predicted (" << prediction.v << ", " << prediction.k << ", "
                   << prediction.lambda << ", " << prediction.mu << "), exact ("
                   << report.empirical.v << ", " << report.empirical.k << ", "
                   << report.empirical.lambda << ", " << report.empirical.mu << ")";
        }
    }
    report.mismatch_detail = detail.str();
    report.agree = report.mismatch_detail.empty();
    return report;
}

}  // namespace cyclosrg
