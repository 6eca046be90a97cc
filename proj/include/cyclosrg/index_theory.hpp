#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclosrg/cyclotomy.hpp"
#include "cyclosrg/nt.hpp"

namespace cyclosrg {

/// Outcome of the standing hypotheses for N = p1^m:
/// gcd(p(p-1), N) = 1, -1 not in <p> mod N, and w | p1 - 1.
struct HypothesisCheck {
    bool pass = false;
    std::vector<std::string> failures;

    uint64_t p = 0, p1 = 0;
    uint32_t m = 0;
    BigInt N;
    BigInt f;            // ord_N(p)
    uint64_t w = 0;      // phi(N) / f, valid when pass
    uint64_t ftilde = 0; // ord_{p1}(p)
};

HypothesisCheck check_hypotheses(uint64_t p, uint64_t p1, uint32_t m);

/// Full arithmetic profile of an instance. Only meaningful once the
/// hypotheses pass; compute_index_parameters enforces that.
struct IndexParameters {
    uint64_t p = 0, p1 = 0;
    uint32_t m = 0;
    BigInt N;
    BigInt f;
    uint64_t w = 0;
    uint64_t ftilde = 0;
    std::vector<uint64_t> b_list;  // b_j = (1/p1) sum of coset j, j = 0 .. w-1
    uint64_t b = 0;                // min b_j
    BigInt r;                      // (f - ftilde)/2 + b
    uint64_t s = 0;                // f - 2r = ftilde - 2b, independent of m
};

IndexParameters compute_index_parameters(uint64_t p, uint64_t p1, uint32_t m);

/// Coset element sums divided by p1 and their minimum (Stickelberger data).
std::pair<std::vector<uint64_t>, uint64_t> stickelberger_b(uint64_t p, uint64_t p1);

/// r = (f - ftilde)/2 + b and s = f - 2r. Throws ParityViolationError when
/// f - ftilde is odd.
std::pair<BigInt, uint64_t> compute_r(const BigInt& f, uint64_t ftilde, uint64_t b);

/// All ell in [1, w-1] with p^s = (ell/w)(p1 - (p1-1) ell / w), evaluated in
/// exact integer arithmetic (times w^2). Empty means the counting condition
/// is unsatisfiable.
std::vector<uint64_t> check_cond2(uint64_t p, uint64_t p1, uint64_t w, uint64_t s);

/// Sign of p^e (1-p1) ell / w mod p1 when it is +-1, for an arbitrary
/// exponent e; nullopt when the congruence misses both signs.
std::optional<int> congruence_sign(uint64_t p, const BigInt& exponent, uint64_t p1, uint64_t w,
                                   uint64_t ell);

/// The m-free form of the congruence condition, with exponent b. Equivalent
/// to the exponent-r form as a pass/fail test; the sign it returns is only
/// canonical when r = b (m = 1).
std::optional<int> check_cond3(uint64_t p, uint64_t p1, uint64_t w, uint64_t b, uint64_t ell);

enum class Verdict { Srg, NotSrg, HypothesisFailed };

const char* to_string(Verdict v);

/// Outcome of the two-condition strongly-regular test, with the predicted
/// spectrum and srg parameters when it holds.
struct SrgPrediction {
    Verdict verdict = Verdict::HypothesisFailed;
    HypothesisCheck hypothesis;
    std::optional<IndexParameters> params;

    uint64_t ell = 0;
    int epsilon = 0;
    std::vector<std::pair<uint64_t, int>> passing;  // all (ell, eps) that satisfy both conditions
    bool ell_unique = true;

    BigInt eigenvalue_base;            // x = (1/p1)(-1 + ((1-p1)/w) p^r ell eps)
    std::array<BigInt, 2> eigenvalues; // {x, x + eps p^r}
    BigInt v, k, lambda, mu;
    bool imprimitive = false;

    std::string failure_reason;
};

/// Decides srg-ness from arithmetic alone, never touching the field. The
/// epsilon reported is the one from the exponent-r congruence, so the
/// eigenvalue base is integral by construction.
SrgPrediction predict(uint64_t p, uint64_t p1, uint32_t m);

/// lambda = k + t1 + t2 + t1 t2 and mu = k + t1 t2, with the standard
/// multiplicity equations validated (nonnegative integers). Throws
/// InconsistentSpectrumError otherwise.
std::pair<BigInt, BigInt> srg_params_from_spectrum(const BigInt& v, const BigInt& k,
                                                   const BigInt& theta1, const BigInt& theta2);

struct DifferenceSetResult {
    bool pass = false;
    uint64_t v = 0, k = 0, lambda = 0;
};

/// Brute-force difference-set test for a subset of Z/p1Z.
DifferenceSetResult difference_set_check(uint64_t p1, const std::vector<uint32_t>& subset);

struct CosetDifferenceSet {
    bool found = false;
    std::vector<uint32_t> coset_indices;  // lexicographically smallest passing I
    DifferenceSetResult params;
};

/// Searches the C(w, ell) unions of cosets for a difference set with
/// parameters (p1, (p1-1) ell / w, (p1-1) ell / w - p^s).
CosetDifferenceSet find_difference_set_cosets(uint64_t p, uint64_t p1, uint64_t ell);

/// One row of the sporadic classification table.
struct SporadicRow {
    uint64_t N, p, f, w;
};

/// The 11 sporadic (N, p, f, index) rows.
const std::array<SporadicRow, 11>& sporadic_catalog();

}  // namespace cyclosrg
