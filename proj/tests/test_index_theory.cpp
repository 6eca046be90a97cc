#include <doctest.h>

#include <algorithm>

#include "cyclosrg/errors.hpp"
#include "cyclosrg/index_theory.hpp"

using namespace cyclosrg;

TEST_CASE("hypothesis checks") {
    SUBCASE("(11, 43, 1) passes with w = 6") {
        const HypothesisCheck hc = check_hypotheses(11, 43, 1);
        CHECK(hc.pass);
        CHECK(hc.f == 7);
        CHECK(hc.w == 6);
        CHECK(hc.ftilde == 7);
    }
    SUBCASE("(3, 7, 1) fails: -1 in <3> mod 7") {
        const HypothesisCheck hc = check_hypotheses(3, 7, 1);
        CHECK_FALSE(hc.pass);
        REQUIRE(hc.failures.size() == 1);
        CHECK(hc.failures[0].find("-1") != std::string::npos);
    }
    SUBCASE("(2, 127, 1) passes with w = 18") {
        const HypothesisCheck hc = check_hypotheses(2, 127, 1);
        CHECK(hc.pass);
        CHECK(hc.w == 18);
        CHECK(hc.ftilde == 7);
    }
    SUBCASE("p = 1 mod p1 fails the gcd test") {
        const HypothesisCheck hc = check_hypotheses(23, 11, 1);
        CHECK_FALSE(hc.pass);
    }
    SUBCASE("m = 2 with full order growth: (11, 43, 2)") {
        const HypothesisCheck hc = check_hypotheses(11, 43, 2);
        CHECK(hc.pass);
        CHECK(hc.f == 301);  // ord_{43^2}(11) = 7 * 43
        CHECK(hc.w == 6);
        CHECK(multiplicative_order(11, 43 * 43) == 301);  // recompute directly
    }
    SUBCASE("m = 2 without full growth: 3^5 = 1 mod 121, so (3, 11, 2) drops out") {
        const HypothesisCheck hc = check_hypotheses(3, 11, 2);
        CHECK_FALSE(hc.pass);
        CHECK(hc.f == 5);  // the order does not grow, so w = 22 no longer divides p1 - 1
        REQUIRE(hc.failures.size() == 1);
        CHECK(hc.failures[0].find("divide p1 - 1") != std::string::npos);
    }
}

TEST_CASE("Stickelberger data") {
    SUBCASE("(11, 43): b = 3") {
        const auto [b_list, b] = stickelberger_b(11, 43);
        CHECK(b_list.size() == 6);
        CHECK(b == 3);
    }
    SUBCASE("(3, 11): coset sums 22 and 33") {
        auto [b_list, b] = stickelberger_b(3, 11);
        std::sort(b_list.begin(), b_list.end());
        CHECK(b_list == std::vector<uint64_t>{2, 3});
        CHECK(b == 2);
    }
    SUBCASE("(5, 31): b = 1 from {1, 5, 25}") {
        const auto [b_list, b] = stickelberger_b(5, 31);
        CHECK(b == 1);
    }
    SUBCASE("b_list is g-independent up to permutation") {
        // relabel the cosets with a different primitive root and re-derive the sums
        for (auto [p, p1] : {std::pair<uint64_t, uint64_t>{11, 43}, {2, 31}}) {
            auto [b_list, b] = stickelberger_b(p, p1);
            uint64_t g2 = smallest_primitive_root(p1) + 1;
            while (multiplicative_order(g2, p1) != p1 - 1) ++g2;
            const uint64_t ftilde = multiplicative_order(p, p1);
            std::vector<uint64_t> alt;
            uint64_t rep = 1;
            for (uint64_t j = 0; j < (p1 - 1) / ftilde; ++j) {
                uint64_t sum = 0, x = rep;
                for (uint64_t i = 0; i < ftilde; ++i) {
                    sum += x;
                    x = (x * p) % p1;
                }
                alt.push_back(sum / p1);
                rep = (rep * g2) % p1;
            }
            std::sort(alt.begin(), alt.end());
            std::sort(b_list.begin(), b_list.end());
            CHECK(alt == b_list);
            CHECK(alt.front() == b);
        }
    }
}

TEST_CASE("valuation r and exponent s") {
    CHECK(compute_r(BigInt(7), 7, 3) == std::pair<BigInt, uint64_t>{BigInt(3), 1});
    CHECK(compute_r(BigInt(301), 7, 3) == std::pair<BigInt, uint64_t>{BigInt(150), 1});
    CHECK(compute_r(BigInt(5), 5, 2) == std::pair<BigInt, uint64_t>{BigInt(2), 1});
    CHECK_THROWS_AS(compute_r(BigInt(8), 7, 3), ParityViolationError);

    SUBCASE("s is independent of m") {
        for (uint32_t m = 1; m <= 3; ++m) {
            const IndexParameters ip = compute_index_parameters(11, 43, m);
            CHECK(ip.s == 1);
        }
    }
}

TEST_CASE("counting condition (cond2)") {
    CHECK(check_cond2(11, 43, 6, 1) == std::vector<uint64_t>{3});
    const auto ells = check_cond2(5, 31, 10, 1);
    CHECK(std::find(ells.begin(), ells.end(), 2) != ells.end());
    CHECK(check_cond2(5, 11, 2, 1).empty());
}

TEST_CASE("congruence condition (cond3 / cond1)") {
    CHECK(check_cond3(11, 43, 6, 3, 3) == -1);
    CHECK(check_cond3(3, 11, 2, 2, 1) == -1);
    CHECK(check_cond3(2, 31, 6, 1, 3) == 1);
    CHECK_FALSE(check_cond3(11, 43, 6, 3, 2).has_value());
}

TEST_CASE("cond1 with exponent b agrees with exponent r for every candidate ell") {
    // the two congruence forms must accept the same ell, whatever m is
    for (uint64_t p : {2, 3, 5, 7, 11}) {
        for (uint64_t p1 : {7, 11, 13, 19, 31, 43}) {
            if (p == p1) continue;
            if (!check_hypotheses(p, p1, 1).pass) continue;
            const auto [b_list, b] = stickelberger_b(p, p1);
            for (uint32_t m = 1; m <= 3; ++m) {
                if (!check_hypotheses(p, p1, m).pass) continue;  // order growth can stall
                const IndexParameters ip = compute_index_parameters(p, p1, m);
                for (uint64_t ell = 1; ell < ip.w; ++ell) {
                    const bool via_b = check_cond3(p, p1, ip.w, b, ell).has_value();
                    const bool via_r = congruence_sign(p, ip.r, p1, ip.w, ell).has_value();
                    CHECK(via_b == via_r);
                }
            }
        }
    }
}

TEST_CASE("predict") {
    SUBCASE("(11, 43, 1): the index-6 family") {
        const SrgPrediction pred = predict(11, 43, 1);
        REQUIRE(pred.verdict == Verdict::Srg);
        CHECK(pred.ell == 3);
        CHECK(pred.epsilon == -1);
        CHECK(pred.ell_unique);
        CHECK(pred.eigenvalue_base == 650);
        CHECK(pred.eigenvalues == std::array<BigInt, 2>{650, -681});
        CHECK(pred.v == 19487171);
        CHECK(pred.k == 453190);
        CHECK(pred.lambda == 10509);
        CHECK(pred.mu == 10540);
        CHECK_FALSE(pred.imprimitive);
    }
    SUBCASE("(2, 127, 1): imprimitive subfield family") {
        const SrgPrediction pred = predict(2, 127, 1);
        REQUIRE(pred.verdict == Verdict::Srg);
        auto eigs = pred.eigenvalues;
        std::sort(eigs.begin(), eigs.end());
        CHECK(eigs == std::array<BigInt, 2>{-1, 1});
        CHECK(pred.v == 128);
        CHECK(pred.k == 1);
        CHECK(pred.lambda == 0);
        CHECK(pred.mu == 0);
        CHECK(pred.imprimitive);
    }
    SUBCASE("(5, 11, 1): cond2 empty") {
        const SrgPrediction pred = predict(5, 11, 1);
        CHECK(pred.verdict == Verdict::NotSrg);
        CHECK(pred.failure_reason.find("counting condition") != std::string::npos);
    }
    SUBCASE("verdict is m-invariant") {
        for (auto [p, p1] : {std::pair<uint64_t, uint64_t>{11, 43}, {5, 31}, {2, 127}, {5, 11}, {3, 7}}) {
            const Verdict base = predict(p, p1, 1).verdict;
            for (uint32_t m = 2; m <= 3; ++m) {
                CHECK(predict(p, p1, m).verdict == base);
            }
        }
    }
    SUBCASE("m = 2 profile of the Example-4.1 family") {
        const SrgPrediction pred = predict(11, 43, 2);
        REQUIRE(pred.verdict == Verdict::Srg);
        REQUIRE(pred.params.has_value());
        CHECK(pred.params->f == 301);
        CHECK(pred.params->r == 150);
        CHECK(pred.params->s == 1);
        CHECK(pred.ell == 3);
        CHECK(pred.epsilon == -1);
        CHECK(pred.v == pow_big(BigInt(11), 301));
    }
}

TEST_CASE("srg parameters from a spectrum") {
    CHECK(srg_params_from_spectrum(128, 1, 1, -1) == std::pair<BigInt, BigInt>{0, 0});
    CHECK(srg_params_from_spectrum(243, 22, 4, -5) == std::pair<BigInt, BigInt>{1, 2});
    CHECK(srg_params_from_spectrum(19487171, 453190, 650, -681) ==
          std::pair<BigInt, BigInt>{10509, 10540});
    CHECK_THROWS_AS(srg_params_from_spectrum(8, 3, 1, -2), InconsistentSpectrumError);
}

TEST_CASE("difference sets in Z/p1Z") {
    SUBCASE("quadratic residues mod 11 form an (11, 5, 2) difference set") {
        const DifferenceSetResult res = difference_set_check(11, {1, 3, 4, 5, 9});
        CHECK(res.pass);
        CHECK(res.v == 11);
        CHECK(res.k == 5);
        CHECK(res.lambda == 2);
    }
    SUBCASE("all of (Z/7Z)^* is a (7, 6, 5) difference set") {
        const DifferenceSetResult res = difference_set_check(7, {1, 2, 3, 4, 5, 6});
        CHECK(res.pass);
        CHECK(res.lambda == 5);
    }
    SUBCASE("{1, 2} mod 7 is not a difference set") {
        CHECK_FALSE(difference_set_check(7, {1, 2}).pass);
    }
}

TEST_CASE("coset unions realizing the difference sets") {
    SUBCASE("(3, 11, ell = 1): the residue coset itself") {
        const CosetDifferenceSet res = find_difference_set_cosets(3, 11, 1);
        REQUIRE(res.found);
        CHECK(res.coset_indices == std::vector<uint32_t>{0});
        CHECK(res.params.v == 11);
        CHECK(res.params.k == 5);
        CHECK(res.params.lambda == 2);
    }
    SUBCASE("(11, 43, ell = 3): a (43, 21, 10) difference set") {
        const CosetDifferenceSet res = find_difference_set_cosets(11, 43, 3);
        REQUIRE(res.found);
        CHECK(res.coset_indices.size() == 3);
        CHECK(res.params.v == 43);
        CHECK(res.params.k == 21);
        CHECK(res.params.lambda == 10);
    }
    SUBCASE("(5, 31, ell = 2): a (31, 6, 1) difference set") {
        const CosetDifferenceSet res = find_difference_set_cosets(5, 31, 2);
        REQUIRE(res.found);
        CHECK(res.params.v == 31);
        CHECK(res.params.k == 6);
        CHECK(res.params.lambda == 1);
    }
}

TEST_CASE("sporadic catalog reproduces its own invariants") {
    for (const SporadicRow& row : sporadic_catalog()) {
        CHECK(multiplicative_order(row.p, row.N) == row.f);
        CHECK(euler_phi_u64(row.N) / row.f == row.w);
    }
    CHECK(sporadic_catalog().size() == 11);
}

TEST_CASE("w is even whenever the hypotheses pass") {
    for (uint64_t p : {2, 3, 5, 7, 11}) {
        for (uint64_t p1 = 3; p1 <= 60; p1 += 2) {
            if (!is_prime_u64(p1) || p == p1) continue;
            const HypothesisCheck hc = check_hypotheses(p, p1, 1);
            if (hc.pass) CHECK(hc.w % 2 == 0);
        }
    }
}
