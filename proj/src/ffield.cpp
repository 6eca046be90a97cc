#include "cyclosrg/ffield.hpp"

#include <algorithm>
#include <thread>

#include "cyclosrg/errors.hpp"

namespace cyclosrg {

namespace {

// --- dense polynomial arithmetic over F_p (construction-time only) ----------

using Poly = std::vector<uint64_t>;  // coefficients low to high, no trailing zeros

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    // reduce modulo the monic polynomial mod
    const size_t deg = mod.size() - 1;
    for (size_t i = prod.size(); i-- > deg;) {
        uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < deg; ++j) {
            prod[i - deg + j] = (prod[i - deg + j] + c * (p - mod[j] % p)) % p;
        }
    }
    prod.resize(std::min(prod.size(), deg));
    poly_trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& mod, uint64_t p) {
    Poly result{1};
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t inv_lead = invmod_u64(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t c = (a.back() * inv_lead) % p;
            if (c != 0) {
                size_t shift = a.size() - b.size();
                for (size_t j = 0; j < b.size(); ++j) {
                    a[shift + j] = (a[shift + j] + (p - (c * b[j]) % p)) % p;
                }
            }
            poly_trim(a);
            if (a.empty()) break;
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
        poly_trim(b);
    }
    return a;
}

bool poly_has_root(const Poly& mod, uint64_t p) {
    for (uint64_t a = 0; a < p; ++a) {
        uint64_t acc = 0;
        for (size_t i = mod.size(); i-- > 0;) acc = (acc * a + mod[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// Irreducibility of a monic degree-f polynomial: m has no factor of degree
// <= f/2 iff gcd(x^{p^k} - x, m) = 1 for k = 1 .. f/2.
bool poly_irreducible(const Poly& mod, uint64_t p) {
    const size_t f = mod.size() - 1;
    if (f == 1) return true;
    if (mod[0] == 0) return false;  // x divides
    if (poly_has_root(mod, p)) return false;
    Poly h{0, 1};  // x
    for (size_t k = 1; k <= f / 2; ++k) {
        h = poly_powmod(h, p, mod, p);  // h = x^{p^k} mod m
        Poly diff = h;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;  // h - x
        poly_trim(diff);
        Poly g = poly_gcd(diff, mod, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

ExtensionField::ExtensionField(uint64_t p, uint32_t f) : p_(p), f_(f) {
    if (!is_prime_u64(p)) throw NonPrimeError("build_field: p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw Error("build_field: f must be >= 1");
    if (p >= (uint64_t{1} << 31)) {
        throw DegreeTooLargeError("build_field: p must fit the 32-bit coefficient representation");
    }

    // q = p^f must fit the 64-bit element rank (with headroom for p*p products)
    BigInt q_big = pow_big(BigInt(static_cast<unsigned long>(p)), f);
    if (!q_big.fits_ulong_p() || q_big >= BigInt(1) << 62) {
        throw DegreeTooLargeError("build_field: p^f exceeds the exact 64-bit representation");
    }
    q_ = q_big.get_ui();

    qm1_factors_ = distinct_prime_factors_u64(q_ - 1);

    // Lexicographic search over coefficient vectors (c_0, ..., c_{f-1}) for
    // x^f + c_{f-1} x^{f-1} + ... + c_0: first irreducible modulus whose root
    // x is primitive.
    //
    // Pre-screen on the constant term: the norm of the root is (-1)^f c_0,
    // and a primitive root of F_q has a norm that generates F_p^*, so blocks
    // with the wrong c_0 cannot contain a hit and are skipped whole.
    std::vector<bool> norm_ok(p, false);
    for (uint64_t c0 = 1; c0 < p; ++c0) {
        const uint64_t norm = (f % 2 == 0) ? c0 : (p - c0) % p;
        norm_ok[c0] = norm != 0 && multiplicative_order(norm, p) == p - 1;
    }

    std::vector<uint64_t> c(f, 0);
    auto advance = [&]() -> bool {
        for (uint32_t i = f; i-- > 0;) {
            if (++c[i] < p) return true;
            c[i] = 0;
        }
        return false;
    };
    auto skip_block = [&]() -> bool {  // jump to the next value of c_0
        for (uint32_t i = 1; i < f; ++i) c[i] = p - 1;
        return advance();
    };

    while (true) {
        if (!norm_ok[c[0]]) {
            if (!skip_block()) throw InternalError("build_field: no primitive modulus found");
            continue;
        }
        bool viable = c[0] != 0;  // constant term 0 means x divides
        if (viable) {
            Poly mod(c.begin(), c.end());
            mod.push_back(1);
            if (poly_irreducible(mod, p)) {
                // primitivity of x: x^{(q-1)/ell} != 1 for every prime ell | q-1
                bool primitive = true;
                if (f == 1) {
                    uint64_t g = (p - c[0] % p) % p;
                    for (uint64_t ell : qm1_factors_) {
                        if (powmod_u64(g, (q_ - 1) / ell, p) == 1) {
                            primitive = false;
                            break;
                        }
                    }
                } else {
                    Poly x{0, 1};
                    for (uint64_t ell : qm1_factors_) {
                        Poly e = poly_powmod(x, (q_ - 1) / ell, mod, p);
                        if (e.size() == 1 && e[0] == 1) {
                            primitive = false;
                            break;
                        }
                    }
                }
                if (primitive) {
                    modulus_.assign(mod.begin(), mod.end());
                    break;
                }
            }
        }
        if (!advance()) throw InternalError("build_field: no primitive modulus found");
    }

    neg_modulus_.resize(f);
    for (uint32_t i = 0; i < f; ++i) neg_modulus_[i] = static_cast<uint32_t>((p - modulus_[i] % p) % p);

    // Newton's identities: s_0 = f, s_k = -(a_1 s_{k-1} + ... + a_{k-1} s_1 + k a_k)
    // with a_i = modulus[f - i]; Tr(gamma^k) = s_k.
    trace_of_basis_.resize(f);
    trace_of_basis_[0] = static_cast<uint32_t>(f % p);
    for (uint32_t k = 1; k < f; ++k) {
        uint64_t acc = (static_cast<uint64_t>(k % p) * modulus_[f - k]) % p;
        for (uint32_t i = 1; i < k; ++i) {
            acc = (acc + static_cast<uint64_t>(modulus_[f - i]) * trace_of_basis_[k - i]) % p;
        }
        trace_of_basis_[k] = static_cast<uint32_t>((p - acc) % p);
    }

    gamma_.coeffs.assign(f, 0);
    if (f == 1) {
        gamma_.coeffs[0] = neg_modulus_[0];
    } else {
        gamma_.coeffs[1] = 1;
    }
}

ExtensionField build_field(uint64_t p, uint32_t f) { return ExtensionField(p, f); }

FieldElement ExtensionField::zero() const { return FieldElement{std::vector<uint32_t>(f_, 0)}; }

FieldElement ExtensionField::one() const {
    FieldElement x = zero();
    x.coeffs[0] = 1;
    return x;
}

FieldElement ExtensionField::from_residue(uint64_t a) const {
    FieldElement x = zero();
    x.coeffs[0] = static_cast<uint32_t>(a % p_);
    return x;
}

bool ExtensionField::is_zero(const FieldElement& x) const {
    return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](uint32_t c) { return c == 0; });
}

bool ExtensionField::is_one(const FieldElement& x) const {
    if (x.coeffs[0] != 1) return false;
    return std::all_of(x.coeffs.begin() + 1, x.coeffs.end(), [](uint32_t c) { return c == 0; });
}

FieldElement ExtensionField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (uint32_t i = 0; i < f_; ++i) {
        uint64_t s = static_cast<uint64_t>(out.coeffs[i]) + b.coeffs[i];
        out.coeffs[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
    }
    return out;
}

FieldElement ExtensionField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (uint32_t i = 0; i < f_; ++i) {
        uint64_t s = static_cast<uint64_t>(out.coeffs[i]) + p_ - b.coeffs[i];
        out.coeffs[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
    }
    return out;
}

FieldElement ExtensionField::neg(const FieldElement& a) const {
    FieldElement out = a;
    for (uint32_t i = 0; i < f_; ++i) {
        out.coeffs[i] = static_cast<uint32_t>(out.coeffs[i] == 0 ? 0 : p_ - out.coeffs[i]);
    }
    return out;
}

FieldElement ExtensionField::mul(const FieldElement& a, const FieldElement& b) const {
    std::vector<uint64_t> prod(2 * f_ - 1, 0);
    for (uint32_t i = 0; i < f_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (uint32_t j = 0; j < f_; ++j) {
            prod[i + j] = (prod[i + j] + static_cast<uint64_t>(a.coeffs[i]) * b.coeffs[j]) % p_;
        }
    }
    for (uint32_t i = 2 * f_ - 1; i-- > f_;) {
        uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (uint32_t j = 0; j < f_; ++j) {
            prod[i - f_ + j] = (prod[i - f_ + j] + c * neg_modulus_[j]) % p_;
        }
    }
    FieldElement out = zero();
    for (uint32_t i = 0; i < f_; ++i) out.coeffs[i] = static_cast<uint32_t>(prod[i]);
    return out;
}

FieldElement ExtensionField::pow(const FieldElement& a, uint64_t e) const {
    FieldElement base = a;
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

void ExtensionField::step(FieldElement& x) const {
    if (f_ == 1) {
        x.coeffs[0] = static_cast<uint32_t>((static_cast<uint64_t>(x.coeffs[0]) * gamma_.coeffs[0]) % p_);
        return;
    }
    const uint64_t carry = x.coeffs[f_ - 1];
    for (uint32_t i = f_ - 1; i > 0; --i) x.coeffs[i] = x.coeffs[i - 1];
    x.coeffs[0] = 0;
    if (carry != 0) {
        for (uint32_t i = 0; i < f_; ++i) {
            x.coeffs[i] = static_cast<uint32_t>((x.coeffs[i] + carry * neg_modulus_[i]) % p_);
        }
    }
}

uint32_t ExtensionField::trace(const FieldElement& x) const {
    uint64_t acc = 0;
    for (uint32_t i = 0; i < f_; ++i) {
        acc += static_cast<uint64_t>(x.coeffs[i]) * trace_of_basis_[i];
    }
    return static_cast<uint32_t>(acc % p_);
}

uint64_t ExtensionField::rank(const FieldElement& x) const {
    uint64_t r = 0;
    for (uint32_t i = f_; i-- > 0;) r = r * p_ + x.coeffs[i];
    return r;
}

FieldElement ExtensionField::unrank(uint64_t r) const {
    FieldElement x = zero();
    for (uint32_t i = 0; i < f_; ++i) {
        x.coeffs[i] = static_cast<uint32_t>(r % p_);
        r /= p_;
    }
    return x;
}

ClassIndexer::ClassIndexer(uint64_t N_, uint64_t q) : N(N_) {
    if (N == 0 || (q - 1) % N != 0) {
        throw NotDivisorError("ClassIndexer: N must divide q - 1");
    }
}

namespace detail {
void check_enumeration(const ExtensionField& fld, uint64_t N, const RunLimits& limits) {
    if (N == 0 || (fld.q() - 1) % N != 0) {
        throw NotDivisorError("enumerate_classes: N must divide q - 1");
    }
    if (fld.q() - 1 > limits.enumeration_cap) {
        throw CapExceededError("enumeration of q - 1 = " + std::to_string(fld.q() - 1) +
                               " elements exceeds cap " + std::to_string(limits.enumeration_cap));
    }
}
}  // namespace detail

std::vector<uint64_t> class_trace_histogram(const ExtensionField& fld, uint64_t N,
                                            const RunLimits& limits) {
    detail::check_enumeration(fld, N, limits);
    const uint64_t p = fld.p();
    if (N * p > (uint64_t{1} << 28)) {
        throw CapExceededError("class_trace_histogram: N * p too large to tabulate");
    }

    const uint64_t total = fld.q() - 1;
    unsigned workers = limits.workers == 0 ? std::thread::hardware_concurrency() : limits.workers;
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, std::max<uint64_t>(total / 4096, 1)));

    std::vector<std::vector<uint64_t>> partial(workers, std::vector<uint64_t>(N * p, 0));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        const uint64_t begin =
            static_cast<uint64_t>(static_cast<unsigned __int128>(total) * t / workers);
        const uint64_t end =
            static_cast<uint64_t>(static_cast<unsigned __int128>(total) * (t + 1) / workers);
        pool.emplace_back([&fld, N, p, begin, end, &acc = partial[t]]() {
            uint64_t cls = begin % N;
            for_each_power(fld, begin, end, [&](uint64_t, const FieldElement& x) {
                acc[cls * p + fld.trace(x)] += 1;
                if (++cls == N) cls = 0;
            });
        });
    }
    for (auto& th : pool) th.join();

    std::vector<uint64_t> counts(N * p, 0);
    for (const auto& part : partial) {
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    }
    return counts;
}

}  // namespace cyclosrg
