#pragma once

#include <cstdint>
#include <vector>

#include "cyclosrg/nt.hpp"

namespace cyclosrg {

/// Default cap on the number of group elements a single verify run may
/// enumerate (2^28). Overridable per call site and via CYCLOSRG_CAP.
inline constexpr uint64_t kDefaultEnumerationCap = uint64_t{1} << 28;

/// Default cap on q for the dense adjacency-matrix oracle.
inline constexpr uint64_t kDefaultOracleCap = 4096;

/// Enumeration limits shared by every full-group pass.
struct RunLimits {
    uint64_t enumeration_cap = kDefaultEnumerationCap;
    unsigned workers = 0;  // 0 = use all available cores
};

/// Element of F_{p^f}: coordinates in the basis 1, gamma, ..., gamma^{f-1}.
struct FieldElement {
    std::vector<uint32_t> coeffs;

    bool operator==(const FieldElement&) const = default;
};

/// Exact arithmetic context for F_{p^f}.
///
/// The modulus is the lexicographically first monic irreducible polynomial of
/// degree f over F_p whose root (the residue class of the variable) generates
/// the multiplicative group, so repeated constructions agree bit-for-bit and
/// gamma is always the residue class of x. Traces of the basis monomials are
/// precomputed via Newton's identities, making trace() an O(f) dot product.
class ExtensionField {
public:
    ExtensionField(uint64_t p, uint32_t f);

    uint64_t p() const { return p_; }
    uint32_t f() const { return f_; }
    uint64_t q() const { return q_; }

    /// Monic modulus, length f+1, coefficients low to high.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// Traces of 1, gamma, ..., gamma^{f-1}.
    const std::vector<uint32_t>& trace_of_basis() const { return trace_of_basis_; }

    /// Distinct prime divisors of q - 1 (used by the primitivity proof).
    const std::vector<uint64_t>& group_order_prime_factors() const { return qm1_factors_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gamma() const { return gamma_; }
    FieldElement from_residue(uint64_t a) const;  // image of an integer in F_p

    bool is_zero(const FieldElement& x) const;
    bool is_one(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, uint64_t e) const;

    /// x <- gamma * x, the verifier's hot step.
    void step(FieldElement& x) const;

    uint32_t trace(const FieldElement& x) const;

    /// Mixed-radix rank in [0, q): sum coeffs[i] * p^i. Used to index vertices.
    uint64_t rank(const FieldElement& x) const;
    FieldElement unrank(uint64_t r) const;

private:
    uint64_t p_;
    uint32_t f_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> neg_modulus_;  // (p - modulus[i]) % p, reduction row
    std::vector<uint32_t> trace_of_basis_;
    std::vector<uint64_t> qm1_factors_;
    FieldElement gamma_;
};

/// Builds F_{p^f} deterministically. Throws NonPrimeError and
/// DegreeTooLargeError (q must fit the 64-bit element rank).
ExtensionField build_field(uint64_t p, uint32_t f);

/// Class indexing for the N-th cyclotomic classes: gamma^k lies in C_{k mod N}.
struct ClassIndexer {
    uint64_t N;

    ClassIndexer(uint64_t N, uint64_t q);  // checks N | q - 1

    uint64_t index_of(uint64_t exponent) const { return exponent % N; }
};

/// Visits gamma^k for k in [k_begin, k_end), calling fn(k, element).
/// The element reference is only valid during the call.
template <typename Fn>
void for_each_power(const ExtensionField& fld, uint64_t k_begin, uint64_t k_end, Fn&& fn) {
    FieldElement x = fld.pow(fld.gamma(), k_begin);
    for (uint64_t k = k_begin; k < k_end; ++k) {
        fn(k, static_cast<const FieldElement&>(x));
        fld.step(x);
    }
}

/// Single pass over F_q^* emitting (k mod N, Tr(gamma^k)) for k = 0 .. q-2.
/// Throws NotDivisorError when N does not divide q - 1 and CapExceededError
/// when q - 1 exceeds limits.enumeration_cap.
template <typename Fn>
void enumerate_classes(const ExtensionField& fld, uint64_t N, const RunLimits& limits, Fn&& fn);

/// counts[i * p + c] = #{ k in [0, q-1) : k = i (mod N), Tr(gamma^k) = c }.
///
/// This is the one enumeration engine behind both the spectrum profiler and
/// the exact Gauss sum. The pass is partitioned across workers; each worker
/// starts from a precomputed gamma^{k0} and accumulates a private histogram,
/// merged by elementwise addition, so the result is worker-count independent.
std::vector<uint64_t> class_trace_histogram(const ExtensionField& fld, uint64_t N,
                                            const RunLimits& limits);

// --- implementation of the template pass ------------------------------------

namespace detail {
void check_enumeration(const ExtensionField& fld, uint64_t N, const RunLimits& limits);
}

template <typename Fn>
void enumerate_classes(const ExtensionField& fld, uint64_t N, const RunLimits& limits, Fn&& fn) {
    detail::check_enumeration(fld, N, limits);
    ClassIndexer indexer(N, fld.q());
    for_each_power(fld, 0, fld.q() - 1, [&](uint64_t k, const FieldElement& x) {
        fn(indexer.index_of(k), fld.trace(x));
    });
}

}  // namespace cyclosrg
