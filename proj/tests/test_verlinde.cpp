#include "catch_amalgamated.hpp"

#include "lrv/lr_oracle.hpp"
#include "lrv/verlinde.hpp"

#include <complex>
#include <random>

using lrv::Backend;
using lrv::ParabolicType;
using lrv::Partition;
using lrv::Rational;
using lrv::SummationVector;
using lrv::SumOptions;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

SumOptions exact_opts(unsigned threads = 1) {
    SumOptions o;
    o.threads = threads;
    return o;
}
}  // namespace

TEST_CASE("summation vector enumeration") {
    auto vs = lrv::enumerate_vectors(2, 5);
    REQUIRE(vs.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(vs[static_cast<std::size_t>(i)].v == std::vector<int>{6 - i, 0});
    }
    CHECK(lrv::enumerate_vectors(1, 9).size() == 1);
    CHECK(lrv::enumerate_vectors(1, 9)[0].v == std::vector<int>{0});
    CHECK(lrv::enumerate_vectors(3, 2).size() == 6);
    CHECK(lrv::summation_vector_count(3, 2) == 6);

    // Every vector exactly once, strictly decreasing, ending in 0, lex
    // decreasing order of the leading coordinates.
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 5; ++k) {
            auto all = lrv::enumerate_vectors(r, k);
            CHECK(static_cast<long long>(all.size()) == lrv::summation_vector_count(r, k));
            for (std::size_t i = 0; i < all.size(); ++i) {
                const auto& v = all[i].v;
                REQUIRE(static_cast<int>(v.size()) == r);
                CHECK(v.back() == 0);
                CHECK(v.front() < r + k);
                for (std::size_t j = 1; j < v.size(); ++j) CHECK(v[j - 1] > v[j]);
                if (i > 0) CHECK(all[i - 1].v > v);
            }
        }
}

TEST_CASE("choose_level") {
    CHECK(lrv::choose_level({P({1, 0}), P({1, 0}), P({-1, -1})}) == 5);
    CHECK(lrv::choose_level({P({2, 2}), P({3, 3}), P({0, 0})}) == 1);
    CHECK(lrv::choose_level({P({3, 1, 0}), P({2, 2, 2}), P({0, -1, -2})}) == 16);
}

TEST_CASE("build_type") {
    const ParabolicType sigma = lrv::build_type({P({1, 0}), P({1, 0})}, P({1, 1}), 5);
    CHECK(sigma.rank == 2);
    CHECK(sigma.level == 5);
    REQUIRE(sigma.shifted.size() == 3);
    CHECK(sigma.shifted[0] == P({5, 4}));
    CHECK(sigma.shifted[1] == P({5, 4}));
    CHECK(sigma.shifted[2] == P({5, 5}));
    CHECK(sigma.sigma_size == 28);

    // Degenerate single-factor call pads with the zero partition's rectangle.
    const ParabolicType pad = lrv::build_type({P({0, 0})}, P({0, 0}), 1);
    REQUIRE(pad.shifted.size() == 3);
    CHECK(pad.shifted[1] == P({1, 1}));

    CHECK_THROWS_AS(lrv::build_type({P({1, 0}), P({1, 0})}, P({2, 1}), 5), lrv::SizeMismatch);
    CHECK_THROWS_AS(lrv::build_type({P({1, 0}), P({1, 0})}, P({1, 1}), 4), lrv::LevelTooSmall);
}

TEST_CASE("engine terms equal the rational reference") {
    const std::vector<std::pair<std::vector<Partition>, Partition>> cases = {
        {{P({1, 0}), P({1, 0})}, P({1, 1})},
        {{P({2, 1}), P({1, 1})}, P({3, 2})},
        {{P({1, 0, 0}), P({1, 1, 0})}, P({2, 1, 0})},
        {{P({2, 1, 0})}, P({2, 1, 0})},  // padded type
    };
    for (const auto& [factors, target] : cases) {
        std::vector<Partition> constituents = factors;
        constituents.push_back(target.dual());
        const int k = lrv::choose_level(constituents);
        const ParabolicType sigma = lrv::build_type(factors, target, k);
        std::vector<Partition> statics(sigma.shifted.begin(), sigma.shifted.end() - 1);
        lrv::detail::ExactVerlindeEngine engine(sigma.rank, sigma.level, statics,
                                                {sigma.shifted.back()}, {sigma.sigma_size});
        lrv::for_each_summation_vector(sigma.rank, sigma.level, [&](const SummationVector& v) {
            CHECK(engine.term_as_cyclotomic(v, 0) == lrv::verlinde_term(sigma, v));
        });
    }
}

TEST_CASE("reflected summation vectors contribute conjugate terms") {
    const ParabolicType sigma = lrv::build_type({P({1, 0}), P({1, 0})}, P({1, 1}), 5);
    for (int a = 1; a <= 6; ++a) {
        const auto t = lrv::verlinde_term(sigma, {{a, 0}}).to_complex();
        const auto t_ref = lrv::verlinde_term(sigma, {{7 - a, 0}}).to_complex();
        CHECK(std::abs(t - std::conj(t_ref)) < 1e-9);
    }
}

TEST_CASE("verlinde_sum on the basic triples") {
    auto run = [](std::vector<Partition> fs, Partition target) {
        return lrv::tensor_multiplicity(fs, target, exact_opts()).coefficient;
    };
    CHECK(run({P({1, 0}), P({1, 0})}, P({1, 1})) == 1);
    CHECK(run({P({1, 0}), P({1, 0})}, P({2, 0})) == 1);
    CHECK(run({P({2, 1, 0}), P({2, 1, 0})}, P({3, 2, 1})) == 2);
}

TEST_CASE("rank one collapses to triviality") {
    const auto res = lrv::lr_coefficient(P({3}), P({2}), P({5}), exact_opts());
    CHECK(res.coefficient == 1);
    CHECK(res.term_count == 1);
    CHECK(lrv::lr_coefficient(P({3}), P({2}), P({4}), exact_opts()).coefficient == 0);
}

TEST_CASE("lr_coefficient") {
    const auto res = lrv::lr_coefficient(P({1, 0}), P({1, 0}), P({1, 1}), exact_opts());
    CHECK(res.coefficient == 1);
    CHECK(res.level_used == 5);
    CHECK(res.term_count == 6);
    CHECK(res.backend == Backend::exact);
    CHECK_FALSE(res.float_residual.has_value());

    const auto zero = lrv::lr_coefficient(P({1, 0}), P({1, 0}), P({2, 1}), exact_opts());
    CHECK(zero.coefficient == 0);
    CHECK(zero.term_count == 0);

    CHECK(lrv::lr_coefficient(P({2, 1}), P({1, 1}), P({3, 2}), exact_opts()).coefficient == 1);

    SumOptions low = exact_opts();
    low.level = 2;
    CHECK_THROWS_AS(lrv::lr_coefficient(P({1, 0}), P({1, 0}), P({1, 1}), low),
                    lrv::LevelTooSmall);
}

TEST_CASE("tensor_multiplicity") {
    CHECK(lrv::tensor_multiplicity({P({2, 1})}, P({2, 1}), exact_opts()).coefficient == 1);
    CHECK(lrv::tensor_multiplicity({P({2, 1})}, P({3, 0}), exact_opts()).coefficient == 0);
    CHECK(lrv::tensor_multiplicity({P({1, 0}), P({1, 0}), P({1, 0})}, P({2, 1}), exact_opts())
              .coefficient == 2);
    CHECK(lrv::tensor_multiplicity({P({1, 0, 0}), P({1, 1, 0})}, P({2, 1, 0}), exact_opts())
              .coefficient == 1);
}

TEST_CASE("k-independence", "[property]") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> d(0, 3);
    int checked = 0;
    while (checked < 8) {
        std::vector<int> lp{d(rng), d(rng)}, mp{d(rng), d(rng)};
        std::sort(lp.rbegin(), lp.rend());
        std::sort(mp.rbegin(), mp.rend());
        const Partition lambda(lp), mu(mp);
        const auto nus = lrv::partitions_in_box(2, 0, 6, lambda.size() + mu.size());
        if (nus.empty()) continue;
        const Partition& nu = nus[rng() % nus.size()];
        const auto base = lrv::lr_coefficient(lambda, mu, nu, exact_opts());
        for (int extra : {2, 5}) {
            SumOptions o = exact_opts();
            o.level = base.level_used + extra;
            const auto again = lrv::lr_coefficient(lambda, mu, nu, o);
            CHECK(again.coefficient == base.coefficient);
            CHECK(again.level_used == base.level_used + extra);
        }
        ++checked;
    }
}

TEST_CASE("commutativity and translation invariance") {
    const Partition lambda = P({2, 1, 0}), mu = P({2, 0, 0}), nu = P({3, 2, 0});
    const long long c = lrv::lr_coefficient(lambda, mu, nu, exact_opts()).coefficient;
    CHECK(lrv::lr_coefficient(mu, lambda, nu, exact_opts()).coefficient == c);
    CHECK(lrv::lr_coefficient(lambda.shifted_by(2), mu, nu.shifted_by(2), exact_opts())
              .coefficient == c);
    CHECK(lrv::lr_coefficient(lambda.shifted_by(-3), mu, nu.shifted_by(-3), exact_opts())
              .coefficient == c);
}

TEST_CASE("oracle equivalence on a small sweep", "[property]") {
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> d(-1, 3);
    int nonzero = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const int r = 2 + trial % 2;
        std::vector<int> lp, mp;
        for (int i = 0; i < r; ++i) {
            lp.push_back(d(rng));
            mp.push_back(d(rng));
        }
        std::sort(lp.rbegin(), lp.rend());
        std::sort(mp.rbegin(), mp.rend());
        const Partition lambda(lp), mu(mp);
        const auto nus = lrv::partitions_in_box(r, lambda.parts().back() + mu.parts().back(),
                                                lambda.parts().front() + mu.parts().front(),
                                                lambda.size() + mu.size());
        if (nus.empty()) continue;
        const Partition& nu = nus[rng() % nus.size()];
        const long long via_formula = lrv::lr_coefficient(lambda, mu, nu, exact_opts()).coefficient;
        const long long via_rule = lrv::lr_tableaux_count(lambda, mu, nu);
        CHECK(via_formula == via_rule);
        if (via_rule > 0) ++nonzero;
    }
    CHECK(nonzero > 5);
}

TEST_CASE("float backend") {
    SumOptions f;
    f.backend = Backend::floating;
    f.threads = 1;
    const auto res = lrv::lr_coefficient(P({2, 1}), P({1, 1}), P({3, 2}), f);
    CHECK(res.coefficient == 1);
    REQUIRE(res.float_residual.has_value());
    CHECK(*res.float_residual < 1e-9);
    CHECK(res.backend == Backend::floating);

    // Absurd tolerance forces the advisory failure.
    SumOptions strict = f;
    strict.tolerance = 1e-18;
    CHECK_THROWS_AS(lrv::lr_coefficient(P({2, 1, 0}), P({2, 1, 0}), P({3, 2, 1}), strict),
                    lrv::ResidualTooLarge);
}

TEST_CASE("thread count does not change results") {
    const Partition lambda = P({3, 1, 0}), mu = P({2, 2, 1}), nu = P({4, 3, 2});
    const auto single = lrv::lr_coefficient(lambda, mu, nu, exact_opts(1));
    const auto multi = lrv::lr_coefficient(lambda, mu, nu, exact_opts(4));
    CHECK(single.coefficient == multi.coefficient);

    SumOptions f1, f4;
    f1.backend = f4.backend = Backend::floating;
    f1.threads = 1;
    f4.threads = 4;
    const auto fr1 = lrv::lr_coefficient(lambda, mu, nu, f1);
    const auto fr4 = lrv::lr_coefficient(lambda, mu, nu, f4);
    CHECK(fr1.coefficient == fr4.coefficient);
    CHECK(*fr1.float_residual == *fr4.float_residual);  // bit-identical by construction
}

TEST_CASE("presum integrality structure") {
    const ParabolicType sigma = lrv::build_type({P({2, 1}), P({1, 1})}, P({3, 2}), 7);
    const Rational pre = lrv::verlinde_presum(sigma, 1);
    const lrv::BigInt bound = lrv::BigInt(2) * lrv::big_pow(lrv::BigInt(9), 1);
    CHECK(denominator(pre) > 0);
    CHECK(bound % denominator(pre) == 0);  // denominator divides r (r+k)^(r-1)
    const Rational value = pre / Rational(bound);
    CHECK(denominator(value) == 1);
    CHECK(numerator(value) == 1);
}

TEST_CASE("verlinde_decompose matches the oracle") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> d(-1, 2);
    for (int trial = 0; trial < 6; ++trial) {
        const int r = 2 + trial % 2;
        std::vector<int> lp, mp;
        for (int i = 0; i < r; ++i) {
            lp.push_back(d(rng));
            mp.push_back(d(rng));
        }
        std::sort(lp.rbegin(), lp.rend());
        std::sort(mp.rbegin(), mp.rend());
        const Partition lambda(lp), mu(mp);
        const auto via_formula = lrv::verlinde_decompose({lambda, mu}, exact_opts(2));
        const auto via_rule = lrv::tensor_decompose(lambda, mu);
        CHECK(via_formula.table == via_rule);
        CHECK(via_formula.candidates_tested >= static_cast<long long>(via_rule.size()));
    }
}
