#include "cyclosrg/index_theory.hpp"

#include <algorithm>
#include <numeric>

#include "cyclosrg/errors.hpp"

namespace cyclosrg {

HypothesisCheck check_hypotheses(uint64_t p, uint64_t p1, uint32_t m) {
    HypothesisCheck hc;
    hc.p = p;
    hc.p1 = p1;
    hc.m = m;

    if (!is_prime_u64(p)) hc.failures.push_back("p is not prime");
    if (!is_prime_u64(p1) || p1 == 2) hc.failures.push_back("p1 is not an odd prime");
    if (m < 1) hc.failures.push_back("m must be >= 1");
    if (!hc.failures.empty()) return hc;

    hc.N = pow_big(BigInt(static_cast<unsigned long>(p1)), m);

    // gcd(p(p-1), p1^m) = 1 amounts to p != p1 and p1 not dividing p - 1
    if (p == p1) hc.failures.push_back("p = p1, so gcd(p, N) > 1");
    if (p % p1 == 1) hc.failures.push_back("p1 divides p - 1, so gcd(p - 1, N) > 1");
    if (!hc.failures.empty()) return hc;

    hc.ftilde = multiplicative_order(p, p1);

    // ord_{p1^m}(p) = ftilde * p1^j for the least j <= m-1 that works
    const BigInt big_p(static_cast<unsigned long>(p));
    BigInt f = hc.ftilde;
    for (uint32_t j = 0; j < m; ++j) {
        if (powmod_big(big_p, f, hc.N) == 1) break;
        f *= p1;
    }
    if (powmod_big(big_p, f, hc.N) != 1) throw InternalError("check_hypotheses: order computation failed");
    hc.f = f;

    // -1 lies in <p> mod N iff the (unique) involution of the cyclic group
    // <p> is -1, i.e. f is even and p^{f/2} = -1 (mod N)
    if (f % 2 == 0 && powmod_big(big_p, f / 2, hc.N) == hc.N - 1) {
        hc.failures.push_back("-1 lies in <p> mod N (semi-primitive case, out of hypothesis)");
    }

    BigInt phi = pow_big(BigInt(static_cast<unsigned long>(p1)), m - 1) * (p1 - 1);
    if (phi % f != 0) throw InternalError("check_hypotheses: f does not divide phi(N)");
    BigInt w_big = phi / f;
    if ((BigInt(static_cast<unsigned long>(p1)) - 1) % w_big != 0) {
        hc.failures.push_back("w = phi(N)/f does not divide p1 - 1");
    }
    if (!hc.failures.empty()) return hc;

    hc.w = static_cast<uint64_t>(w_big.get_ui());
    if (hc.w % 2 != 0) {
        // forced by the hypotheses; reaching this is a bug, not a user error
        throw InternalError("check_hypotheses: hypotheses hold but w is odd");
    }
    if (hc.w != (p1 - 1) / hc.ftilde) {
        throw InternalError("check_hypotheses: index at level N differs from level p1");
    }

    hc.pass = true;
    return hc;
}

std::pair<std::vector<uint64_t>, uint64_t> stickelberger_b(uint64_t p, uint64_t p1) {
    const CosetDecomposition dec = decompose_cosets(static_cast<uint32_t>(p), static_cast<uint32_t>(p1));
    std::vector<uint64_t> b_list(dec.w);
    for (uint32_t j = 0; j < dec.w; ++j) {
        uint64_t sum = std::accumulate(dec.cosets[j].begin(), dec.cosets[j].end(), uint64_t{0});
        if (sum % p1 != 0) {
            throw InternalError("stickelberger_b: coset sum not divisible by p1");
        }
        b_list[j] = sum / p1;
    }
    const uint64_t b = *std::min_element(b_list.begin(), b_list.end());
    return {std::move(b_list), b};
}

std::pair<BigInt, uint64_t> compute_r(const BigInt& f, uint64_t ftilde, uint64_t b) {
    BigInt diff = f - ftilde;
    if (diff % 2 != 0) {
        throw ParityViolationError("compute_r: f - ftilde is odd");
    }
    BigInt r = diff / 2 + b;
    BigInt s_big = f - 2 * r;  // equals ftilde - 2b
    if (s_big < 0 || !s_big.fits_ulong_p()) {
        throw InternalError("compute_r: s = f - 2r out of range");
    }
    return {std::move(r), s_big.get_ui()};
}

IndexParameters compute_index_parameters(uint64_t p, uint64_t p1, uint32_t m) {
    HypothesisCheck hc = check_hypotheses(p, p1, m);
    if (!hc.pass) {
        std::string why;
        for (const auto& fail : hc.failures) why += (why.empty() ? "" : "; ") + fail;
        throw Error("compute_index_parameters: hypotheses fail: " + why);
    }
    IndexParameters ip;
    ip.p = p;
    ip.p1 = p1;
    ip.m = m;
    ip.N = hc.N;
    ip.f = hc.f;
    ip.w = hc.w;
    ip.ftilde = hc.ftilde;
    std::tie(ip.b_list, ip.b) = stickelberger_b(p, p1);
    std::tie(ip.r, ip.s) = compute_r(ip.f, ip.ftilde, ip.b);
    return ip;
}

std::vector<uint64_t> check_cond2(uint64_t p, uint64_t p1, uint64_t w, uint64_t s) {
    // p^s * w^2 = ell (p1 w - (p1-1) ell), exactly
    const BigInt target = pow_big(BigInt(static_cast<unsigned long>(p)), s) * w * w;
    std::vector<uint64_t> out;
    for (uint64_t ell = 1; ell < w; ++ell) {
        BigInt lhs = BigInt(static_cast<unsigned long>(ell)) *
                     (BigInt(static_cast<unsigned long>(p1)) * w - BigInt(static_cast<unsigned long>(p1 - 1)) * ell);
        if (lhs == target) out.push_back(ell);
    }
    return out;
}

std::optional<int> congruence_sign(uint64_t p, const BigInt& exponent, uint64_t p1, uint64_t w,
                                   uint64_t ell) {
    if ((p1 - 1) % w != 0) throw Error("congruence_sign: w must divide p1 - 1");
    const BigInt big_p1(static_cast<unsigned long>(p1));
    const BigInt pe = powmod_big(BigInt(static_cast<unsigned long>(p)), exponent, big_p1);
    // (1 - p1)/w is an exact integer; reduce it mod p1
    BigInt u = (BigInt(1) - big_p1) / static_cast<long>(w);
    BigInt value = (pe * u * static_cast<unsigned long>(ell)) % big_p1;
    if (value < 0) value += big_p1;
    if (value == 1) return 1;
    if (value == big_p1 - 1) return -1;
    return std::nullopt;
}

std::optional<int> check_cond3(uint64_t p, uint64_t p1, uint64_t w, uint64_t b, uint64_t ell) {
    return congruence_sign(p, BigInt(static_cast<unsigned long>(b)), p1, w, ell);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Srg: return "srg";
        case Verdict::NotSrg: return "not-srg";
        case Verdict::HypothesisFailed: return "hypothesis-failed";
    }
    return "?";
}

std::pair<BigInt, BigInt> srg_params_from_spectrum(const BigInt& v, const BigInt& k,
                                                   const BigInt& theta1, const BigInt& theta2) {
    if (theta1 == theta2) throw Error("srg_params_from_spectrum: eigenvalues must be distinct");
    const BigInt prod = theta1 * theta2;
    BigInt lambda = k + theta1 + theta2 + prod;
    BigInt mu = k + prod;

    // multiplicities from the trace equations: m1 + m2 = v - 1 and
    // k + m1 t1 + m2 t2 = 0 must have a nonnegative integer solution
    BigInt num = -(k + (v - 1) * theta2);
    BigInt den = theta1 - theta2;
    if (num % den != 0) {
        throw InconsistentSpectrumError("srg_params_from_spectrum: non-integral multiplicity");
    }
    BigInt m1 = num / den;
    BigInt m2 = v - 1 - m1;
    if (m1 < 0 || m2 < 0 || lambda < 0 || mu < 0 || mu > k) {
        throw InconsistentSpectrumError("srg_params_from_spectrum: parameters out of range");
    }
    if (k + m1 * theta1 + m2 * theta2 != 0) {
        throw InternalError("srg_params_from_spectrum: trace equation violated");
    }
    return {std::move(lambda), std::move(mu)};
}

SrgPrediction predict(uint64_t p, uint64_t p1, uint32_t m) {
    SrgPrediction pred;
    pred.hypothesis = check_hypotheses(p, p1, m);
    if (!pred.hypothesis.pass) {
        pred.verdict = Verdict::HypothesisFailed;
        for (const auto& fail : pred.hypothesis.failures) {
            pred.failure_reason += (pred.failure_reason.empty() ? "" : "; ") + fail;
        }
        return pred;
    }

    pred.params = compute_index_parameters(p, p1, m);
    const IndexParameters& ip = *pred.params;

    const std::vector<uint64_t> candidates = check_cond2(p, p1, ip.w, ip.s);
    if (candidates.empty()) {
        pred.verdict = Verdict::NotSrg;
        pred.failure_reason = "counting condition unsatisfiable: no ell in [1, w-1] with "
                              "p^s = (ell/w)(p1 - (p1-1) ell / w)";
        return pred;
    }

    for (uint64_t ell : candidates) {
        if (auto eps = congruence_sign(p, ip.r, p1, ip.w, ell)) {
            pred.passing.emplace_back(ell, *eps);
        }
    }
    if (pred.passing.empty()) {
        pred.verdict = Verdict::NotSrg;
        pred.failure_reason = "congruence condition fails for every ell satisfying the "
                              "counting condition";
        return pred;
    }

    pred.verdict = Verdict::Srg;
    pred.ell_unique = pred.passing.size() == 1;
    std::tie(pred.ell, pred.epsilon) = pred.passing.front();

    // guard the width of v = p^f before materializing it (2^27 bits ~ 16 MB)
    const uint64_t p_bits = mpz_sizeinbase(BigInt(static_cast<unsigned long>(p)).get_mpz_t(), 2);
    if (!ip.f.fits_ulong_p() || ip.f.get_ui() > (uint64_t{1} << 27) / p_bits) {
        throw DegreeTooLargeError("predict: v = p^f too wide for exact parameter arithmetic");
    }

    const BigInt big_p1(static_cast<unsigned long>(p1));
    const BigInt pr = pow_big(BigInt(static_cast<unsigned long>(p)), ip.r.get_ui());
    const BigInt u = (BigInt(1) - big_p1) / static_cast<long>(ip.w);
    BigInt numerator = -1 + u * pr * static_cast<unsigned long>(pred.ell) * pred.epsilon;
    if (numerator % big_p1 != 0) {
        throw InternalError("predict: eigenvalue base is not integral despite the congruence");
    }
    pred.eigenvalue_base = numerator / big_p1;
    pred.eigenvalues = {pred.eigenvalue_base, pred.eigenvalue_base + pred.epsilon * pr};

    pred.v = pow_big(BigInt(static_cast<unsigned long>(p)), ip.f.get_ui());
    pred.k = (pred.v - 1) / big_p1;
    std::tie(pred.lambda, pred.mu) =
        srg_params_from_spectrum(pred.v, pred.k, pred.eigenvalues[0], pred.eigenvalues[1]);
    pred.imprimitive = pred.mu == 0 || pred.mu == pred.k;
    return pred;
}

DifferenceSetResult difference_set_check(uint64_t p1, const std::vector<uint32_t>& subset) {
    if (subset.empty() || subset.size() >= p1) {
        throw Error("difference_set_check: subset must be nonempty and proper");
    }
    std::vector<uint64_t> hits(p1, 0);
    for (uint32_t a : subset) {
        for (uint32_t b : subset) {
            if (a == b) continue;
            hits[(a + p1 - b) % p1] += 1;
        }
    }
    DifferenceSetResult res;
    res.v = p1;
    res.k = subset.size();
    res.lambda = hits[1 % p1];
    res.pass = true;
    for (uint64_t d = 1; d < p1; ++d) {
        if (hits[d] != res.lambda) {
            res.pass = false;
            break;
        }
    }
    return res;
}

CosetDifferenceSet find_difference_set_cosets(uint64_t p, uint64_t p1, uint64_t ell) {
    const CosetDecomposition dec = decompose_cosets(static_cast<uint32_t>(p), static_cast<uint32_t>(p1));
    const uint64_t w = dec.w;
    if (ell == 0 || ell >= w) throw Error("find_difference_set_cosets: need 1 <= ell <= w-1");

    const auto [b_list, b] = stickelberger_b(p, p1);
    const uint64_t s = dec.ftilde - 2 * b;
    const uint64_t k_expected = (p1 - 1) / w * ell;
    const BigInt ps = pow_big(BigInt(static_cast<unsigned long>(p)), s);
    if (BigInt(static_cast<unsigned long>(k_expected)) < ps) {
        return {};  // target lambda would be negative; nothing to search for
    }
    const uint64_t lambda_expected = k_expected - ps.get_ui();

    // lexicographic run over the C(w, ell) index subsets
    std::vector<uint32_t> idx(ell);
    for (uint64_t i = 0; i < ell; ++i) idx[i] = static_cast<uint32_t>(i);
    while (true) {
        std::vector<uint32_t> candidate;
        for (uint32_t j : idx) {
            candidate.insert(candidate.end(), dec.cosets[j].begin(), dec.cosets[j].end());
        }
        DifferenceSetResult res = difference_set_check(p1, candidate);
        if (res.pass && res.k == k_expected && res.lambda == lambda_expected) {
            CosetDifferenceSet out;
            out.found = true;
            out.coset_indices = idx;
            out.params = res;
            return out;
        }
        // next combination
        int64_t i = static_cast<int64_t>(ell) - 1;
        while (i >= 0 && idx[i] == w - ell + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (uint64_t j = i + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {};
}

const std::array<SporadicRow, 11>& sporadic_catalog() {
    static const std::array<SporadicRow, 11> rows = {{
        {11, 3, 5, 2},
        {19, 5, 9, 2},
        {35, 3, 12, 2},
        {37, 7, 9, 4},
        {43, 11, 7, 6},
        {67, 17, 33, 2},
        {107, 3, 53, 2},
        {133, 5, 18, 6},
        {163, 41, 81, 2},
        {323, 3, 144, 2},
        {499, 5, 249, 2},
    }};
    return rows;
}

}  // namespace cyclosrg
