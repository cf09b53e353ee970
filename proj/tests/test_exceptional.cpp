#include <doctest.h>

#include "negdef/generators.hpp"
#include "negdef/stratified.hpp"
#include "oracles.hpp"

using namespace negdef;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rat>> out;
    for (const auto& r : rows) {
        std::vector<Rat> row;
        for (long v : r) {
            row.emplace_back(v);
        }
        out.push_back(row);
    }
    return QMatrix(out);
}

RatVector vec(std::initializer_list<Rat> values) {
    return RatVector(values);
}

const CurveSystem& a2() {
    static const CurveSystem sys(mat({{-2, 1}, {1, -2}}));
    return sys;
}

StratifiedSystem two_strata(long cross_value) {
    std::vector<Stratum> strata{{0, CurveSystem(mat({{-1}}))}, {1, CurveSystem(mat({{-2}}))}};
    std::vector<CrossPairing> cross{{1, 0, {{Rat(cross_value)}}}};
    return StratifiedSystem(3, std::move(strata), std::move(cross));
}

}  // namespace

TEST_SUITE("CurveSystem") {
    TEST_CASE("validation") {
        CHECK_NOTHROW(CurveSystem(mat({{-2, 1}, {1, -2}})));
        CHECK_THROWS_AS(CurveSystem(mat({{-2, -1}, {-1, -2}})), InvalidInput);
        CHECK_THROWS_AS(CurveSystem(mat({{-2, 3}, {3, -2}})), InvalidInput);
        CHECK_THROWS_AS(CurveSystem(mat({{-2, 1}, {0, -2}})), NonSymmetric);
        CHECK_THROWS_AS(CurveSystem({"A"}, mat({{-2, 1}, {1, -2}})), InvalidInput);
        CHECK_THROWS_AS(CurveSystem({"A", "A"}, mat({{-2, 1}, {1, -2}})), InvalidInput);
        // affine A_2 (triangle of -2 curves) is only semi-definite
        CHECK_THROWS_AS(CurveSystem(mat({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}})), InvalidInput);
    }

    TEST_CASE("empty system is legal everywhere") {
        const CurveSystem empty;
        CHECK(empty.size() == 0);
        CHECK(negativity_coefficients(empty, {}, {}, true).coefficients.empty());
        CHECK(find_negative_combination(empty).x.empty());
        CHECK(exceptional_completion(empty, {}, CompletionMode::scaled).e.empty());
        CHECK(exceptional_completion(empty, {}, CompletionMode::minimal).e.empty());
    }
}

TEST_SUITE("negativity_coefficients") {
    TEST_CASE("examples") {
        const auto r = negativity_coefficients(a2(), vec({-1, -1}), vec({0, 0}), true);
        CHECK(r.coefficients == vec({1, 1}));
        CHECK(r.strictly_positive);

        const auto z = negativity_coefficients(CurveSystem(mat({{-1}})), vec({0}), vec({0}), false);
        CHECK(z.coefficients == vec({0}));
        CHECK(z.nonnegative);
        CHECK_FALSE(z.strictly_positive);

        CHECK_THROWS_AS(negativity_coefficients(a2(), vec({-1, -1}), vec({0, -1}), false),
                        HypothesisViolated);
    }

    TEST_CASE("sign hypotheses on d") {
        CHECK_THROWS_AS(negativity_coefficients(a2(), vec({1, -1}), vec({0, 0}), false),
                        HypothesisViolated);
        CHECK_THROWS_AS(negativity_coefficients(a2(), vec({0, -1}), vec({0, 0}), true),
                        HypothesisViolated);
        CHECK_NOTHROW(negativity_coefficients(a2(), vec({0, -1}), vec({0, 0}), false));
    }

    TEST_CASE("random systems: coefficients nonnegative, positive for strict data") {
        gen::Rng rng(101);
        for (int trial = 0; trial < 300; ++trial) {
            const CurveSystem sys = gen::random_curve_system(rng, 6);
            RatVector d(sys.size());
            RatVector b(sys.size());
            bool strict = rng.chance(1, 2);
            for (std::size_t j = 0; j < sys.size(); ++j) {
                d[j] = make_rat(-rng.between(strict ? 1 : 0, 9), rng.between(1, 4));
                b[j] = make_rat(rng.between(0, 9), rng.between(1, 4));
            }
            const auto r = negativity_coefficients(sys, d, b, strict);
            RatVector rhs(d.size());
            for (std::size_t j = 0; j < d.size(); ++j) {
                rhs[j] = d[j] - b[j];
            }
            CHECK(oracle::mat_vec(sys.matrix(), r.coefficients) == rhs);
            for (const auto& a : r.coefficients) {
                CHECK(sgn(a) >= (strict ? 1 : 0));
            }
        }
    }
}

TEST_SUITE("find_negative_combination") {
    TEST_CASE("examples") {
        CHECK(find_negative_combination(CurveSystem(mat({{-1}}))).x == vec({1}));
        CHECK(find_negative_combination(a2()).x == vec({1, 1}));

        const auto c = find_negative_combination(CurveSystem(mat({{-3, 1}, {1, -2}})));
        CHECK(c.x == vec({make_rat(3, 5), make_rat(4, 5)}));
        CHECK(c.integral == std::vector<Int>{3, 4});
        CHECK(c.self_pairing == 5);

        const auto single = find_negative_combination(CurveSystem(mat({{-2}})));
        CHECK(single.x == vec({make_rat(1, 2)}));
        CHECK(single.integral == std::vector<Int>{1});
        CHECK(single.self_pairing == 2);
    }

    TEST_CASE("x > 0 and G x = -1 on random systems") {
        gen::Rng rng(202);
        for (int trial = 0; trial < 200; ++trial) {
            const CurveSystem sys = gen::random_curve_system(rng, 8);
            const auto c = find_negative_combination(sys);
            CHECK(oracle::mat_vec(sys.matrix(), c.x) == RatVector(sys.size(), Rat(-1)));
            RatVector as_rat(c.integral.begin(), c.integral.end());
            CHECK(oracle::mat_vec(sys.matrix(), as_rat) ==
                  RatVector(sys.size(), Rat(-c.self_pairing)));
            Int g = 0;
            for (std::size_t i = 0; i < sys.size(); ++i) {
                CHECK(sgn(c.x[i]) > 0);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.integral[i].get_mpz_t());
            }
            CHECK(g == 1);
        }
    }
}

TEST_SUITE("stratified_combination") {
    TEST_CASE("single stratum") {
        const StratifiedSystem ss(2, {{0, a2()}}, {});
        const auto out = stratified_combination(ss);
        REQUIRE(out.size() == 1);
        CHECK(out[0].multiplier == 1);
        CHECK(out[0].totals == vec({-1, -1}));
    }

    TEST_CASE("two strata with spill-over") {
        const auto out = stratified_combination(two_strata(4));
        REQUIRE(out.size() == 2);
        CHECK(out[1].multiplier == 1);
        CHECK(out[0].multiplier == 5);
        CHECK(out[0].totals == vec({-1}));
        CHECK(out[1].totals == vec({-2}));
    }

    TEST_CASE("decoupled strata all get multiplier one") {
        const StratifiedSystem ss(4, {{0, a2()}, {1, CurveSystem(mat({{-3}}))}, {2, a2()}}, {});
        for (const auto& s : stratified_combination(ss)) {
            CHECK(s.multiplier == 1);
        }
    }

    TEST_CASE("cross-pairing sign structure is validated") {
        std::vector<Stratum> strata{{0, CurveSystem(mat({{-1}}))}, {1, CurveSystem(mat({{-2}}))}};
        CHECK_THROWS_AS(StratifiedSystem(3, strata, {{1, 0, {{Rat(-1)}}}}), InvalidInput);
        CHECK_THROWS_AS(StratifiedSystem(3, strata, {{0, 1, {{Rat(1)}}}}), InvalidInput);
        CHECK_NOTHROW(StratifiedSystem(3, strata, {{0, 1, {{Rat(0)}}}}));
        CHECK_THROWS_AS(StratifiedSystem(2, strata, {}), InvalidInput);  // e = 1 > n - 2
        std::vector<Stratum> unsorted{strata[1], strata[0]};
        CHECK_THROWS_AS(StratifiedSystem(3, unsorted, {}), InvalidInput);
        CHECK_THROWS_AS(StratifiedSystem(3, strata, {{1, 0, {{Rat(1), Rat(2)}}}}), InvalidInput);
    }

    TEST_CASE("totals negative on random stratified systems") {
        gen::Rng rng(303);
        for (int trial = 0; trial < 100; ++trial) {
            const StratifiedSystem ss = gen::random_stratified_system(rng);
            for (const auto& s : stratified_combination(ss)) {
                for (const auto& t : s.totals) {
                    CHECK(sgn(t) < 0);
                }
            }
        }
    }
}

TEST_SUITE("effectivity_descent") {
    TEST_CASE("single stratum reduces to negativity_coefficients") {
        const StratifiedSystem ss(2, {{0, a2()}}, {});
        const auto r = effectivity_descent(ss, {vec({-1, -1})}, {vec({0, 0})});
        CHECK(r.coefficients[0] == negativity_coefficients(a2(), vec({-1, -1}), vec({0, 0}), true).coefficients);
    }

    TEST_CASE("decoupled strata solve independently") {
        const CurveSystem one(mat({{-1}}));
        const StratifiedSystem ss(3, {{0, one}, {1, one}}, {});
        const auto r = effectivity_descent(ss, {vec({-1}), vec({-1})}, {vec({0}), vec({0})});
        CHECK(r.coefficients[0] == vec({1}));
        CHECK(r.coefficients[1] == vec({1}));
    }

    TEST_CASE("round trip through stratified_combination") {
        const StratifiedSystem ss = two_strata(4);
        const auto comb = stratified_combination(ss);
        const auto r = effectivity_descent(ss, {comb[0].totals, comb[1].totals}, {vec({0}), vec({0})});
        CHECK(r.coefficients[0] == vec({5}));  // m_0 * x^0 = 5 * 1
        CHECK(r.coefficients[1] == vec({1}));  // m_1 * x^1 = 1 * 1
    }

    TEST_CASE("hypothesis violations") {
        const StratifiedSystem ss = two_strata(4);
        CHECK_THROWS_AS(effectivity_descent(ss, {vec({1}), vec({-1})}, {vec({0}), vec({0})}),
                        HypothesisViolated);
        CHECK_THROWS_AS(effectivity_descent(ss, {vec({-1}), vec({-1})}, {vec({0}), vec({-1})}),
                        HypothesisViolated);
        CHECK_THROWS_AS(effectivity_descent(ss, {vec({-1})}, {vec({0})}), InvalidInput);
    }

    TEST_CASE("random round trips recover the stratified combination") {
        gen::Rng rng(404);
        for (int trial = 0; trial < 100; ++trial) {
            const StratifiedSystem ss = gen::random_stratified_system(rng);
            const auto comb = stratified_combination(ss);
            std::vector<PairingVector> d;
            std::vector<PairingVector> b;
            for (const auto& s : comb) {
                d.push_back(s.totals);
                b.emplace_back(s.totals.size());
            }
            const auto r = effectivity_descent(ss, d, b);
            for (std::size_t s = 0; s < comb.size(); ++s) {
                for (std::size_t i = 0; i < comb[s].combination.integral.size(); ++i) {
                    CHECK(r.coefficients[s][i] ==
                          Rat(comb[s].multiplier * comb[s].combination.integral[i]));
                }
            }
        }
    }
}

TEST_SUITE("exceptional_completion") {
    TEST_CASE("examples") {
        const auto one = exceptional_completion(CurveSystem(mat({{-2}})), vec({2}), CompletionMode::minimal);
        CHECK(one.e == vec({1}));
        CHECK(one.residuals == vec({0}));

        const auto two = exceptional_completion(a2(), vec({1, -5}), CompletionMode::minimal);
        CHECK(two.e == vec({make_rat(1, 2), 0}));
        CHECK(two.residuals == vec({0, make_rat(-9, 2)}));

        const auto none = exceptional_completion(a2(), vec({-1, 0}), CompletionMode::minimal);
        CHECK(none.e == vec({0, 0}));
        CHECK(none.iterations == 0);
    }

    TEST_CASE("brute-force oracle agrees on the two-curve example") {
        const auto sols = oracle::complementary_solutions(a2().matrix(), vec({1, -5}));
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == vec({make_rat(1, 2), 0}));
    }

    TEST_CASE("scaled mode uses the smallest working multiple") {
        const auto s = exceptional_completion(a2(), vec({1, -5}), CompletionMode::scaled);
        // integral combination (1, 1) pairs to (-1, -1); need m >= 1
        CHECK(s.multiplier == 1);
        CHECK(s.e == vec({1, 1}));
        const auto zero = exceptional_completion(a2(), vec({-1, -1}), CompletionMode::scaled);
        CHECK(zero.multiplier == 0);
        CHECK(zero.e == vec({0, 0}));
        const auto big = exceptional_completion(CurveSystem(mat({{-2}})), vec({make_rat(7, 2)}),
                                                CompletionMode::scaled);
        // integral combination (1) pairs to -2; m = ceil(7/4) = 2
        CHECK(big.multiplier == 2);
        CHECK(big.residuals == vec({make_rat(-1, 2)}));
    }

    TEST_CASE("minimal mode is feasible, complementary and below scaled mode") {
        gen::Rng rng(505);
        for (int trial = 0; trial < 300; ++trial) {
            const CurveSystem sys = gen::random_curve_system(rng, 7);
            RatVector d(sys.size());
            for (auto& v : d) {
                v = make_rat(rng.between(-12, 12), rng.between(1, 6));
            }
            const auto minimal = exceptional_completion(sys, d, CompletionMode::minimal);
            const auto scaled = exceptional_completion(sys, d, CompletionMode::scaled);
            const RatVector r = oracle::mat_vec(sys.matrix(), minimal.e);
            for (std::size_t j = 0; j < sys.size(); ++j) {
                CHECK(sgn(minimal.e[j]) >= 0);
                CHECK(r[j] + d[j] <= 0);
                CHECK((sgn(minimal.e[j]) == 0 || r[j] + d[j] == 0));
                CHECK(minimal.e[j] <= scaled.e[j]);
            }
        }
    }
}
