#include "cyclosrg/nt.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclosrg/errors.hpp"

namespace cyclosrg {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

uint64_t invmod_u64(uint64_t a, uint64_t m) {
    // extended Euclid; requires gcd(a, m) = 1
    int64_t t = 0, new_t = 1;
    uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        uint64_t quot = r / new_r;
        int64_t tmp_t = t - static_cast<int64_t>(quot) * new_t;
        t = new_t;
        new_t = tmp_t;
        uint64_t tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw NotCoprimeError("invmod: arguments not coprime");
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(m)) : static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is deterministic for all n < 2^64
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    uint64_t c = 1;
    while (true) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(uint64_t n, std::map<uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n) {
    std::map<uint64_t, int> acc;
    // strip small primes first; rho only sees hard cofactors
    for (uint64_t p = 2; p <= 997 && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<uint64_t> distinct_prime_factors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (const auto& [p, e] : factorize_u64(n)) out.push_back(p);
    return out;
}

uint64_t euler_phi_u64(uint64_t n) {
    uint64_t phi = n;
    for (const auto& [p, e] : factorize_u64(n)) phi -= phi / p;
    return phi;
}

uint64_t multiplicative_order(uint64_t a, uint64_t n) {
    if (n == 0 || std::gcd(a % n, n) != 1) {
        throw NotCoprimeError("multiplicative_order: gcd(a, n) != 1");
    }
    if (n == 1) return 1;
    uint64_t t = euler_phi_u64(n);
    for (uint64_t p : distinct_prime_factors_u64(t)) {
        while (t % p == 0 && powmod_u64(a, t / p, n) == 1) t /= p;
    }
    return t;
}

uint64_t smallest_primitive_root(uint64_t p) {
    if (!is_prime_u64(p) || p == 2) {
        throw NonPrimeError("smallest_primitive_root: p must be an odd prime");
    }
    const auto factors = distinct_prime_factors_u64(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (uint64_t ell : factors) {
            if (powmod_u64(g, (p - 1) / ell, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw InternalError("smallest_primitive_root: no generator found");
}

BigInt pow_big(const BigInt& base, uint64_t exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

BigInt powmod_big(const BigInt& base, const BigInt& exp, const BigInt& m) {
    BigInt out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return out;
}

uint64_t remove_factor(BigInt& n, const BigInt& p) {
    return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace cyclosrg
