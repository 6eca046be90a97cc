#include <doctest.h>

#include <random>
#include <set>

#include "cyclosrg/errors.hpp"
#include "cyclosrg/ffield.hpp"

using namespace cyclosrg;

namespace {

FieldElement random_element(const ExtensionField& fld, std::mt19937& rng) {
    FieldElement x = fld.zero();
    for (auto& c : x.coeffs) c = static_cast<uint32_t>(rng() % fld.p());
    return x;
}

}  // namespace

TEST_CASE("prime field F_3 picks gamma = 2") {
    const ExtensionField fld = build_field(3, 1);
    CHECK(fld.q() == 3);
    CHECK(fld.gamma().coeffs == std::vector<uint32_t>{2});
}

TEST_CASE("build_field is deterministic") {
    const ExtensionField a = build_field(3, 5);
    const ExtensionField b = build_field(3, 5);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.gamma() == b.gamma());
    CHECK(a.trace_of_basis() == b.trace_of_basis());
}

TEST_CASE("F_243: gamma has full order") {
    const ExtensionField fld = build_field(3, 5);
    CHECK(fld.q() == 243);

    // exhaustive oracle: step gamma until 1 recurs
    FieldElement x = fld.gamma();
    uint64_t order = 1;
    while (!fld.is_one(x)) {
        fld.step(x);
        ++order;
    }
    CHECK(order == 242);

    CHECK(fld.is_one(fld.pow(fld.gamma(), 242)));
    CHECK_FALSE(fld.is_one(fld.pow(fld.gamma(), 121)));
    CHECK_FALSE(fld.is_one(fld.pow(fld.gamma(), 22)));
}

TEST_CASE("F_{11^7}: gamma has full order (exhaustive walk)") {
    const ExtensionField fld = build_field(11, 7);
    CHECK(fld.q() == 19487171);
    FieldElement x = fld.gamma();
    uint64_t steps = 1;
    while (!fld.is_one(x)) {
        fld.step(x);
        ++steps;
    }
    CHECK(steps == fld.q() - 1);
}

TEST_CASE("modulus invariants") {
    for (auto [p, f] : {std::pair<uint64_t, uint32_t>{3, 5}, {2, 7}, {5, 3}, {7, 2}}) {
        const ExtensionField fld = build_field(p, f);
        CHECK(fld.modulus().size() == f + 1);
        CHECK(fld.modulus().back() == 1);
        CHECK(fld.trace_of_basis()[0] == f % p);
        // the modulus must kill gamma: gamma^f = -(c_0 + c_1 gamma + ...)
        FieldElement lhs = fld.pow(fld.gamma(), f);
        FieldElement rhs = fld.zero();
        for (uint32_t i = 0; i < f; ++i) {
            rhs.coeffs[i] = static_cast<uint32_t>((p - fld.modulus()[i] % p) % p);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("trace examples and properties") {
    const ExtensionField fld = build_field(3, 5);

    CHECK(fld.trace(fld.one()) == 5 % 3);  // Tr(1) = f mod p
    CHECK(fld.trace(fld.zero()) == 0);
    // Tr(gamma) = -c_{f-1} (first Newton identity)
    const uint32_t c_top = fld.modulus()[4];
    CHECK(fld.trace(fld.gamma()) == (3 - c_top % 3) % 3);

    // trace agrees with the power-sum definition Tr(x) = x + x^p + ... + x^{p^{f-1}}
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const FieldElement x = random_element(fld, rng);
        FieldElement acc = fld.zero(), frob = x;
        for (uint32_t k = 0; k < fld.f(); ++k) {
            acc = fld.add(acc, frob);
            frob = fld.pow(frob, fld.p());
        }
        for (uint32_t j = 1; j < fld.f(); ++j) CHECK(acc.coeffs[j] == 0);
        CHECK(fld.trace(x) == acc.coeffs[0]);
    }

    // linearity and Frobenius invariance
    for (int i = 0; i < 50; ++i) {
        const FieldElement x = random_element(fld, rng);
        const FieldElement y = random_element(fld, rng);
        CHECK(fld.trace(fld.add(x, y)) == (fld.trace(x) + fld.trace(y)) % fld.p());
        CHECK(fld.trace(fld.pow(x, fld.p())) == fld.trace(x));
    }
}

TEST_CASE("enumeration visits every nonzero element exactly once") {
    for (auto [p, f] : {std::pair<uint64_t, uint32_t>{3, 5}, {2, 10}, {11, 3}}) {
        const ExtensionField fld = build_field(p, f);
        std::set<uint64_t> seen;
        for_each_power(fld, 0, fld.q() - 1,
                       [&](uint64_t, const FieldElement& x) { seen.insert(fld.rank(x)); });
        CHECK(seen.size() == fld.q() - 1);
        CHECK(seen.count(0) == 0);
    }
}

TEST_CASE("enumerate_classes coset counts") {
    SUBCASE("F_9, N = 2") {
        const ExtensionField fld = build_field(3, 2);
        uint64_t per_class[2] = {0, 0}, total = 0;
        enumerate_classes(fld, 2, RunLimits{}, [&](uint64_t cls, uint32_t) {
            ++per_class[cls];
            ++total;
        });
        CHECK(total == 8);
        CHECK(per_class[0] == 4);
        CHECK(per_class[1] == 4);
    }
    SUBCASE("F_243, N = 11: sizes and the class-0 trace histogram") {
        const ExtensionField fld = build_field(3, 5);
        std::vector<uint64_t> size(11, 0);
        std::vector<uint64_t> hist0(3, 0);
        enumerate_classes(fld, 11, RunLimits{}, [&](uint64_t cls, uint32_t tr) {
            ++size[cls];
            if (cls == 0) ++hist0[tr];
        });
        for (uint64_t s : size) CHECK(s == 22);
        CHECK(hist0[1] == hist0[2]);  // equal nonzero-trace counts force integral periods
    }
}

TEST_CASE("histogram is worker-count independent") {
    const ExtensionField fld = build_field(3, 5);
    const auto one = class_trace_histogram(fld, 11, RunLimits{kDefaultEnumerationCap, 1});
    const auto three = class_trace_histogram(fld, 11, RunLimits{kDefaultEnumerationCap, 3});
    CHECK(one == three);
}

TEST_CASE("fields beyond the enumeration cap can still be built") {
    const ExtensionField fld = build_field(3, 30);  // q ~ 2e14, far over the default cap
    CHECK(fld.q() == 205891132094649ULL);
    CHECK(fld.trace(fld.one()) == 0);  // 30 = 0 mod 3
    CHECK_THROWS_AS(enumerate_classes(fld, 2, RunLimits{}, [](uint64_t, uint32_t) {}),
                    CapExceededError);
}

TEST_CASE("construction and enumeration errors") {
    CHECK_THROWS_AS(build_field(4, 2), NonPrimeError);
    CHECK_THROWS_AS(build_field(2, 63), DegreeTooLargeError);
    CHECK_THROWS_AS(ClassIndexer(7, 243), NotDivisorError);

    const ExtensionField fld = build_field(3, 5);
    CHECK_THROWS_AS(enumerate_classes(fld, 7, RunLimits{}, [](uint64_t, uint32_t) {}),
                    NotDivisorError);
    CHECK_THROWS_AS(enumerate_classes(fld, 11, RunLimits{100, 1}, [](uint64_t, uint32_t) {}),
                    CapExceededError);
}
