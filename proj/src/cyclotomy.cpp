#include "cyclosrg/cyclotomy.hpp"

#include <algorithm>

#include "cyclosrg/errors.hpp"

namespace cyclosrg {

// --- CyclotomicInteger -------------------------------------------------------

CyclotomicInteger::CyclotomicInteger(uint32_t conductor) : n_(conductor), c_(conductor - 1) {
    if (!is_prime_u64(conductor)) {
        throw NonPrimeError("CyclotomicInteger: conductor must be prime");
    }
}

CyclotomicInteger CyclotomicInteger::constant(uint32_t conductor, BigInt value) {
    CyclotomicInteger z(conductor);
    z.c_[0] = std::move(value);
    return z;
}

CyclotomicInteger CyclotomicInteger::root_power(uint32_t conductor, uint64_t k) {
    CyclotomicInteger z(conductor);
    k %= conductor;
    if (k == conductor - 1u) {
        for (auto& c : z.c_) c = -1;
    } else {
        z.c_[k] = 1;
    }
    return z;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    CyclotomicInteger out = *this;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
    CyclotomicInteger out = *this;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    CyclotomicInteger out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    // convolution with exponents mod n, then eliminate the xi^{n-1} slot
    std::vector<BigInt> full(n_);
    for (uint32_t i = 0; i < n_ - 1; ++i) {
        if (c_[i] == 0) continue;
        for (uint32_t j = 0; j < n_ - 1; ++j) {
            uint32_t k = i + j;
            if (k >= n_) k -= n_;
            full[k] += c_[i] * o.c_[j];
        }
    }
    CyclotomicInteger out(n_);
    for (uint32_t i = 0; i < n_ - 1; ++i) out.c_[i] = full[i] - full[n_ - 1];
    return out;
}

CyclotomicInteger CyclotomicInteger::galois(uint64_t d) const {
    d %= n_;
    if (d == 0) throw NotCoprimeError("galois: d must be a unit mod the conductor");
    std::vector<BigInt> full(n_);
    for (uint32_t i = 0; i < n_ - 1; ++i) {
        if (c_[i] == 0) continue;
        full[(i * d) % n_] += c_[i];
    }
    CyclotomicInteger out(n_);
    for (uint32_t i = 0; i < n_ - 1; ++i) out.c_[i] = full[i] - full[n_ - 1];
    return out;
}

bool CyclotomicInteger::is_constant() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const BigInt& c) { return c == 0; });
}

const BigInt& CyclotomicInteger::constant_value() const {
    if (!is_constant()) throw NotRationalError("CyclotomicInteger: value is not rational");
    return c_[0];
}

// --- coset decomposition and Gauss periods -----------------------------------

CosetDecomposition decompose_cosets(uint32_t p, uint32_t p1) {
    if (!is_prime_u64(p)) throw NonPrimeError("decompose_cosets: p not prime");
    if (!is_prime_u64(p1) || p1 == 2) throw NonPrimeError("decompose_cosets: p1 must be an odd prime");
    if (p % p1 == 0) throw NotCoprimeError("decompose_cosets: p = p1");

    CosetDecomposition dec;
    dec.p1 = p1;
    dec.p = p;
    dec.ftilde = static_cast<uint32_t>(multiplicative_order(p, p1));
    dec.w = (p1 - 1) / dec.ftilde;
    dec.g = static_cast<uint32_t>(smallest_primitive_root(p1));

    dec.coset_of.assign(p1, -1);
    dec.cosets.assign(dec.w, {});
    uint64_t rep = 1;
    for (uint32_t j = 0; j < dec.w; ++j) {
        uint64_t x = rep;
        for (uint32_t i = 0; i < dec.ftilde; ++i) {
            dec.cosets[j].push_back(static_cast<uint32_t>(x));
            dec.coset_of[x] = static_cast<int32_t>(j);
            x = (x * p) % p1;
        }
        std::sort(dec.cosets[j].begin(), dec.cosets[j].end());
        rep = (rep * dec.g) % p1;
    }
    for (uint32_t a = 1; a < p1; ++a) {
        if (dec.coset_of[a] < 0) throw InternalError("decompose_cosets: cosets do not partition");
    }
    return dec;
}

GaussPeriodSet gauss_periods(const CosetDecomposition& dec) {
    GaussPeriodSet out;
    out.p1 = dec.p1;
    out.w = dec.w;
    out.etas.reserve(dec.w);
    for (uint32_t j = 0; j < dec.w; ++j) {
        CyclotomicInteger eta(dec.p1);
        for (uint32_t a : dec.cosets[j]) eta = eta + CyclotomicInteger::root_power(dec.p1, a);
        out.etas.push_back(std::move(eta));
    }
    return out;
}

std::vector<BigInt> period_products(const GaussPeriodSet& periods) {
    const uint32_t w = periods.w;
    std::vector<BigInt> out(w);
    for (uint32_t t = 0; t < w; ++t) {
        CyclotomicInteger k(periods.p1);
        for (uint32_t z = 0; z < w; ++z) {
            k = k + periods.etas[z] * periods.etas[(z + t) % w];
        }
        if (!k.is_constant()) {
            throw NotRationalError("period_products: K_" + std::to_string(t) +
                                   " did not reduce to a rational integer");
        }
        out[t] = k.constant_value();
    }
    return out;
}

// --- connection set -----------------------------------------------------------

ConnectionSet build_connection_set(const ExtensionField& fld, uint64_t p1, uint32_t m) {
    if (!is_prime_u64(p1) || p1 == 2) throw NonPrimeError("build_connection_set: p1 must be an odd prime");
    if (m < 1) throw Error("build_connection_set: m must be >= 1");

    BigInt n_big = pow_big(BigInt(static_cast<unsigned long>(p1)), m);
    if (!n_big.fits_ulong_p()) throw NotDivisorError("build_connection_set: p1^m overflows");
    const uint64_t N = n_big.get_ui();
    if ((fld.q() - 1) % N != 0) {
        throw NotDivisorError("build_connection_set: N = " + std::to_string(N) +
                              " does not divide q - 1 = " + std::to_string(fld.q() - 1));
    }

    ConnectionSet d;
    d.q = fld.q();
    d.p1 = p1;
    d.m = m;
    d.N = N;
    d.class_count = N / p1;
    d.size = (fld.q() - 1) / p1;
    return d;
}

// --- composite cyclotomic ring -------------------------------------------------

CompositeCyclotomic::CompositeCyclotomic(uint32_t n1, uint32_t n2)
    : n1_(n1), n2_(n2), m_(static_cast<size_t>(n1) * n2) {
    if (!is_prime_u64(n1) || !is_prime_u64(n2) || n1 == n2) {
        throw NonPrimeError("CompositeCyclotomic: conductors must be distinct primes");
    }
}

void CompositeCyclotomic::canonicalize() {
    // subtract the last row (xi_{n1}^{n1-1} = -sum of lower powers), then the
    // last column; afterwards both are zero and coordinates are unique
    for (uint32_t c = 0; c < n2_; ++c) {
        const BigInt last = coeff(n1_ - 1, c);
        if (last == 0) continue;
        for (uint32_t u = 0; u < n1_; ++u) coeff(u, c) -= last;
    }
    for (uint32_t u = 0; u < n1_ - 1; ++u) {
        const BigInt last = coeff(u, n2_ - 1);
        if (last == 0) continue;
        for (uint32_t c = 0; c < n2_; ++c) coeff(u, c) -= last;
    }
}

CompositeCyclotomic CompositeCyclotomic::canonical() const {
    CompositeCyclotomic out = *this;
    out.canonicalize();
    return out;
}

CompositeCyclotomic CompositeCyclotomic::operator+(const CompositeCyclotomic& o) const {
    CompositeCyclotomic out = *this;
    for (size_t i = 0; i < m_.size(); ++i) out.m_[i] += o.m_[i];
    return out;
}

CompositeCyclotomic CompositeCyclotomic::operator*(const CompositeCyclotomic& o) const {
    CompositeCyclotomic out(n1_, n2_);
    for (uint32_t u1 = 0; u1 < n1_; ++u1) {
        for (uint32_t c1 = 0; c1 < n2_; ++c1) {
            const BigInt& a = coeff(u1, c1);
            if (a == 0) continue;
            for (uint32_t u2 = 0; u2 < n1_; ++u2) {
                uint32_t u = u1 + u2;
                if (u >= n1_) u -= n1_;
                for (uint32_t c2 = 0; c2 < n2_; ++c2) {
                    const BigInt& b = o.coeff(u2, c2);
                    if (b == 0) continue;
                    uint32_t c = c1 + c2;
                    if (c >= n2_) c -= n2_;
                    out.coeff(u, c) += a * b;
                }
            }
        }
    }
    return out;
}

CompositeCyclotomic CompositeCyclotomic::conjugate() const {
    CompositeCyclotomic out(n1_, n2_);
    for (uint32_t u = 0; u < n1_; ++u) {
        for (uint32_t c = 0; c < n2_; ++c) {
            out.coeff((n1_ - u) % n1_, (n2_ - c) % n2_) = coeff(u, c);
        }
    }
    return out;
}

CompositeCyclotomic CompositeCyclotomic::galois_first(uint64_t d) const {
    d %= n1_;
    if (d == 0) throw NotCoprimeError("galois_first: d must be a unit");
    CompositeCyclotomic out(n1_, n2_);
    for (uint32_t u = 0; u < n1_; ++u) {
        for (uint32_t c = 0; c < n2_; ++c) {
            out.coeff(static_cast<uint32_t>((u * d) % n1_), c) += coeff(u, c);
        }
    }
    return out;
}

bool CompositeCyclotomic::operator==(const CompositeCyclotomic& o) const {
    if (n1_ != o.n1_ || n2_ != o.n2_) return false;
    return canonical().m_ == o.canonical().m_;
}

bool CompositeCyclotomic::is_constant() const {
    CompositeCyclotomic z = canonical();
    for (uint32_t u = 0; u < n1_; ++u) {
        for (uint32_t c = 0; c < n2_; ++c) {
            if (u == 0 && c == 0) continue;
            if (z.coeff(u, c) != 0) return false;
        }
    }
    return true;
}

BigInt CompositeCyclotomic::constant_value() const {
    if (!is_constant()) throw NotRationalError("CompositeCyclotomic: value is not rational");
    return canonical().coeff(0, 0);
}

bool CompositeCyclotomic::lies_in_first_ring() const {
    CompositeCyclotomic z = canonical();
    for (uint32_t u = 0; u < n1_ - 1; ++u) {
        for (uint32_t c = 1; c < n2_ - 1; ++c) {
            if (z.coeff(u, c) != 0) return false;
        }
    }
    return true;
}

CyclotomicInteger CompositeCyclotomic::first_ring_part() const {
    if (!lies_in_first_ring()) {
        throw NotInKError("CompositeCyclotomic: xi_p-dependence survives reduction");
    }
    CompositeCyclotomic z = canonical();
    CyclotomicInteger out(n1_);
    for (uint32_t u = 0; u < n1_ - 1; ++u) out.coord(u) = z.coeff(u, 0);
    return out;
}

// --- exact Gauss sums ------------------------------------------------------------

CompositeCyclotomic gauss_sum_exact(const ExtensionField& fld, const CosetDecomposition& dec,
                                    const RunLimits& limits, uint32_t m) {
    if (m != 1) {
        throw UnsupportedMError("gauss_sum_exact: only m = 1 is supported; decisions for m > 1 "
                                "reduce to the p1 level");
    }
    const uint32_t p1 = dec.p1;
    // one histogram pass: counts[i][c] over k = i (mod p1), Tr(gamma^k) = c
    const auto counts = class_trace_histogram(fld, p1, limits);
    const uint32_t p = static_cast<uint32_t>(fld.p());

    CompositeCyclotomic g(p1, p);
    for (uint32_t i = 0; i < p1; ++i) {
        const uint32_t u = (p1 - i) % p1;  // theta-bar(gamma^k) = xi^{-k}
        for (uint32_t c = 0; c < p; ++c) {
            g.coeff(u, c) = counts[static_cast<size_t>(i) * p + c];
        }
    }
    g.canonicalize();
    return g;
}

CyclotomicInteger trivial_character_sum(const ExtensionField& fld, const RunLimits& limits) {
    const auto counts = class_trace_histogram(fld, 1, limits);
    const uint32_t p = static_cast<uint32_t>(fld.p());
    CyclotomicInteger out(p);
    for (uint32_t c = 0; c < p; ++c) {
        out = out + CyclotomicInteger::root_power(p, c) * CyclotomicInteger::constant(p, BigInt(counts[c]));
    }
    return out;
}

bool GaussSumDecomposition::srg_signature(int& eps_out, uint64_t& ell_out) const {
    int eps = 0;
    uint64_t nonzero = 0;
    for (const BigInt& n : coefficients) {
        if (n == 0) continue;
        if (n != 1 && n != -1) return false;
        const int sign = n > 0 ? 1 : -1;
        if (eps == 0) eps = sign;
        if (sign != eps) return false;
        ++nonzero;
    }
    if (eps == 0) return false;
    eps_out = eps;
    ell_out = nonzero;
    return true;
}

GaussSumDecomposition decompose_gauss_sum(const CompositeCyclotomic& gs,
                                          const CosetDecomposition& dec, uint64_t p) {
    const uint32_t p1 = dec.p1;
    const uint32_t w = dec.w;

    CyclotomicInteger z = gs.first_ring_part();  // throws NotInKError

    // Coordinates of sum c_j eta_j against the power basis: the coset j* that
    // contains p1 - 1 contributes -c_{j*} everywhere through the xi^{p1-1}
    // relation, so a_0 = -c_{j*} and a_u = c_{coset(u)} - c_{j*} for u >= 1.
    const int32_t j_star = dec.coset_of[p1 - 1];
    if (j_star < 0) throw InternalError("decompose_gauss_sum: -1 not covered by cosets");

    std::vector<BigInt> c(w);
    c[static_cast<uint32_t>(j_star)] = -z.coords()[0];
    for (uint32_t j = 0; j < w; ++j) {
        if (static_cast<int32_t>(j) == j_star) continue;
        const uint32_t u = dec.cosets[j].front();  // < p1-1 since p1-1 sits in coset j*
        c[j] = z.coords()[u] - z.coords()[0];
    }

    // the candidate coefficients must reproduce z exactly
    const GaussPeriodSet periods = gauss_periods(dec);
    CyclotomicInteger rebuilt(p1);
    for (uint32_t j = 0; j < w; ++j) {
        rebuilt = rebuilt + CyclotomicInteger::constant(p1, c[j]) * periods.etas[j];
    }
    if (!(rebuilt == z)) {
        throw NotInPeriodBasisError("decompose_gauss_sum: sum is outside the span of the "
                                    "Gauss periods (wrong coset decomposition?)");
    }

    bool all_zero = std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; });
    if (all_zero) throw InternalError("decompose_gauss_sum: Gauss sum is zero");

    // r = common p-adic valuation of the coefficients
    const BigInt big_p(static_cast<unsigned long>(p));
    uint64_t r = UINT64_MAX;
    for (const BigInt& x : c) {
        if (x == 0) continue;
        BigInt tmp = x;
        r = std::min(r, remove_factor(tmp, big_p));
    }

    // Stickelberger cross-check, m = 1 form: r must equal b = min_j b_j
    BigInt b_min;
    bool first = true;
    for (uint32_t j = 0; j < w; ++j) {
        BigInt sum = 0;
        for (uint32_t a : dec.cosets[j]) sum += a;
        if (sum % p1 != 0) throw InternalError("decompose_gauss_sum: coset sum not divisible by p1");
        BigInt bj = sum / p1;
        if (first || bj < b_min) b_min = bj;
        first = false;
    }
    if (b_min != BigInt(static_cast<unsigned long>(r))) {
        throw InternalError("decompose_gauss_sum: valuation r disagrees with the Stickelberger value");
    }

    GaussSumDecomposition out;
    out.r = r;
    const BigInt pr = pow_big(big_p, r);
    out.coefficients.resize(w);
    for (uint32_t j = 0; j < w; ++j) {
        out.coefficients[j] = c[j] / pr;
        out.m0 += out.coefficients[j];
    }
    return out;
}

}  // namespace cyclosrg
