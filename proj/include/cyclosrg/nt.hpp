#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclosrg {

/// Arbitrary-precision integer used for every quantity that can outgrow a
/// machine word (f, r, v = p^f, eigenvalues, ...).
using BigInt = mpz_class;

// --- word-sized modular arithmetic -----------------------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t m);

// --- primality and factorization --------------------------------------------

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

/// Prime factorization (Pollard rho + trial division), pairs (prime, exponent)
/// sorted by prime.
std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<uint64_t> distinct_prime_factors_u64(uint64_t n);

uint64_t euler_phi_u64(uint64_t n);

// --- multiplicative structure ------------------------------------------------

/// Smallest t >= 1 with a^t = 1 (mod n). Throws NotCoprimeError when
/// gcd(a, n) != 1.
uint64_t multiplicative_order(uint64_t a, uint64_t n);

/// Smallest positive primitive root modulo an odd prime p.
uint64_t smallest_primitive_root(uint64_t p);

// --- big-integer helpers ------------------------------------------------------

/// base^exp for a nonnegative word exponent.
BigInt pow_big(const BigInt& base, uint64_t exp);

/// base^exp mod m, exp >= 0.
BigInt powmod_big(const BigInt& base, const BigInt& exp, const BigInt& m);

/// Largest e with p^e | n (n != 0), dividing n by p^e in place.
uint64_t remove_factor(BigInt& n, const BigInt& p);

}  // namespace cyclosrg
