#pragma once

#include <cstdint>
#include <vector>

#include "cyclosrg/ffield.hpp"
#include "cyclosrg/nt.hpp"

namespace cyclosrg {

/// Exact element of Z[xi_n] for prime n, stored in the power basis
/// xi^0, ..., xi^{n-2}. The relation xi^{n-1} = -(1 + xi + ... + xi^{n-2})
/// is applied eagerly, so equal elements have equal coordinate vectors.
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(uint32_t conductor);

    static CyclotomicInteger constant(uint32_t conductor, BigInt value);
    static CyclotomicInteger root_power(uint32_t conductor, uint64_t k);  // xi^k

    uint32_t conductor() const { return n_; }
    const std::vector<BigInt>& coords() const { return c_; }
    BigInt& coord(size_t i) { return c_[i]; }

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-() const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    bool operator==(const CyclotomicInteger& o) const = default;

    /// Image under xi -> xi^d, gcd(d, n) = 1 (d = n-1 is complex conjugation).
    CyclotomicInteger galois(uint64_t d) const;
    CyclotomicInteger conjugate() const { return galois(n_ - 1); }

    bool is_constant() const;
    const BigInt& constant_value() const;  // requires is_constant()

private:
    uint32_t n_;
    std::vector<BigInt> c_;  // length n-1
};

/// Coset decomposition of (Z/p1Z)^* by the subgroup generated by p:
/// coset j is g^j <p> for the smallest primitive root g mod p1.
struct CosetDecomposition {
    uint32_t p1 = 0;
    uint32_t p = 0;
    uint32_t w = 0;       // index [(Z/p1Z)^* : <p>]
    uint32_t ftilde = 0;  // ord_{p1}(p) = coset size
    uint32_t g = 0;       // smallest primitive root mod p1
    std::vector<std::vector<uint32_t>> cosets;  // w lists, each sorted ascending
    std::vector<int32_t> coset_of;              // residue -> coset index, coset_of[0] = -1
};

CosetDecomposition decompose_cosets(uint32_t p, uint32_t p1);

/// The w Gauss periods eta_j = sum of xi_{p1}^a over coset j.
struct GaussPeriodSet {
    uint32_t p1 = 0;
    uint32_t w = 0;
    std::vector<CyclotomicInteger> etas;
};

GaussPeriodSet gauss_periods(const CosetDecomposition& dec);

/// Exact K_t = sum_z eta_z eta_{z+t mod w}, t = 0 .. w-1. Each must reduce to
/// a rational integer; NotRationalError otherwise.
std::vector<BigInt> period_products(const GaussPeriodSet& periods);

/// Connection set D = C_0 u ... u C_{p1^{m-1}-1} for N = p1^m, described by
/// its class-index predicate. |D| = (q-1)/p1.
struct ConnectionSet {
    uint64_t q = 0;
    uint64_t p1 = 0;
    uint32_t m = 0;
    uint64_t N = 0;            // p1^m
    uint64_t class_count = 0;  // p1^{m-1}
    uint64_t size = 0;         // (q-1)/p1

    bool contains_class(uint64_t i) const { return i < class_count; }
};

/// Throws NotDivisorError when p1^m does not divide q - 1.
ConnectionSet build_connection_set(const ExtensionField& fld, uint64_t p1, uint32_t m);

/// Exact element of Z[xi_{n1}, xi_{n2}] (n1, n2 distinct primes), stored as a
/// full n1 x n2 coefficient matrix over the spanning set xi_{n1}^u xi_{n2}^c.
/// Canonicalization zeroes the last row and column via the two rank-one
/// relations, after which coordinates are unique.
class CompositeCyclotomic {
public:
    CompositeCyclotomic(uint32_t n1, uint32_t n2);

    uint32_t first_conductor() const { return n1_; }
    uint32_t second_conductor() const { return n2_; }

    const BigInt& coeff(uint32_t u, uint32_t c) const { return m_[u * n2_ + c]; }
    BigInt& coeff(uint32_t u, uint32_t c) { return m_[u * n2_ + c]; }

    void canonicalize();
    CompositeCyclotomic canonical() const;

    CompositeCyclotomic operator+(const CompositeCyclotomic& o) const;
    CompositeCyclotomic operator*(const CompositeCyclotomic& o) const;

    /// Complex conjugation: exponent negation in both conductors.
    CompositeCyclotomic conjugate() const;

    /// Image under xi_{n1} -> xi_{n1}^d on the first conductor.
    CompositeCyclotomic galois_first(uint64_t d) const;

    bool operator==(const CompositeCyclotomic& o) const;

    bool is_constant() const;
    BigInt constant_value() const;

    /// After canonicalization: no xi_{n2}-dependence left.
    bool lies_in_first_ring() const;

    /// Projection to Z[xi_{n1}]; requires lies_in_first_ring().
    CyclotomicInteger first_ring_part() const;

private:
    uint32_t n1_, n2_;
    std::vector<BigInt> m_;
};

/// Exact Gauss sum g(theta-bar) of order N = p1 over F_q, theta(gamma) = xi_N,
/// computed by one pass over F_q^*: the (u, c) entry counts the k with
/// -k = u (mod p1) and Tr(gamma^k) = c. Only m = 1 is supported
/// (UnsupportedMError otherwise); CapExceededError applies.
CompositeCyclotomic gauss_sum_exact(const ExtensionField& fld, const CosetDecomposition& dec,
                                    const RunLimits& limits, uint32_t m = 1);

/// Debug path: the trivial-character sum over F_q^*, always -1.
CyclotomicInteger trivial_character_sum(const ExtensionField& fld, const RunLimits& limits);

/// g(theta-bar) = p^r (N_0 eta_0 + ... + N_{w-1} eta_{w-1}).
struct GaussSumDecomposition {
    uint64_t r = 0;
    std::vector<BigInt> coefficients;  // N_0 .. N_{w-1}
    BigInt m0;                         // sum of the N_i

    /// True when every N_i lies in {0, eps} for one eps in {+1, -1}; the
    /// number of nonzero entries is then ell.
    bool srg_signature(int& eps_out, uint64_t& ell_out) const;
};

/// Splits an exact Gauss sum over the period basis. Throws NotInKError when
/// xi_p-dependence survives reduction and NotInPeriodBasisError when the
/// xi_{p1}-part is outside the span of the eta_j. The valuation r is
/// cross-checked against the Stickelberger value (f - ftilde)/2 + b, which is
/// just min b_j here since the exact sum is only available for m = 1.
GaussSumDecomposition decompose_gauss_sum(const CompositeCyclotomic& gs,
                                          const CosetDecomposition& dec, uint64_t p);

}  // namespace cyclosrg
