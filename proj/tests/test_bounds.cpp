#include <doctest.h>

#include <random>

#include "lrckit/bounds.hpp"
#include "lrckit/lrc.hpp"
#include "lrckit/verifier.hpp"

using namespace lrckit;
using bounds::BoundQuery;
using bounds::Rational;

TEST_CASE("vector distance bound values") {
    CHECK(bounds::distance_bound({6, 2, 8, 3}) == 3);
    // scalar case embeds: M = k, alpha = 1
    CHECK(bounds::distance_bound({6, 2, 4, 1}) == 2);
    // r >= M/alpha collapses the locality term: Singleton
    CHECK(bounds::distance_bound({10, 4, 4, 1}) == 10 - 4 + 1);
    CHECK_THROWS_AS(bounds::distance_bound({0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("scalar bound values and equivalence") {
    CHECK(bounds::scalar_bound(6, 4, 2) == 2);
    CHECK(bounds::scalar_bound(9, 4, 4) == 9 - 4 + 1);
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long long> d(1, 60);
    for (int t = 0; t < 200; ++t) {
        const long long n = d(rng) + 4, r = d(rng) % 8 + 1;
        const long long k = std::min(n, d(rng));
        CHECK(bounds::scalar_bound(n, k, r) == bounds::distance_bound({n, r, k, 1}));
    }
}

TEST_CASE("bound is monotone in M, alpha and r") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<long long> d(1, 30);
    for (int t = 0; t < 300; ++t) {
        const BoundQuery q{d(rng) + 30, d(rng) % 6 + 1, d(rng), d(rng) % 5 + 1};
        CHECK(bounds::distance_bound({q.n, q.r, q.M + 1, q.alpha}) <= bounds::distance_bound(q));
        CHECK(bounds::distance_bound({q.n, q.r, q.M, q.alpha + 1}) >= bounds::distance_bound(q));
        CHECK(bounds::distance_bound({q.n, q.r + 1, q.M, q.alpha}) >= bounds::distance_bound(q));
    }
}

TEST_CASE("effective rate is exact") {
    CHECK(bounds::effective_rate(CodeParams(6, 4, 2)) == Rational(4, 9));
    CHECK(bounds::effective_rate(CodeParams(6, 6, 2)) == Rational(2, 3));  // k = n: r/(r+1)
    // always below r/(r+1)
    for (auto [n, k, r] : {std::tuple{6, 4, 2}, {9, 5, 2}, {12, 7, 3}}) {
        const Rational rate = bounds::effective_rate(CodeParams(n, k, r));
        CHECK(rate.num * (r + 1) <= rate.den * r);
    }
    CHECK(Rational(8, 18).str() == "4/9");
}

TEST_CASE("witness on the explicit (6,4,2) code meets the exact distance") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    const GeneratorView gen = code.generator_view();
    std::vector<std::vector<int>> groups{{1, 2, 3}, {4, 5, 6}};

    const auto wit = bounds::witness_search(gen, groups);
    CHECK(wit.nodes.size() >= 3);
    CHECK(wit.bound <= 3);
    CHECK(wit.entropy < 8);
    CHECK((wit.exit_line == 9 || wit.exit_line == 12));

    // equality: the exhaustive oracle returns the same 3
    CHECK(verifier::exact_distance(gen) == 3);
    CHECK(wit.bound == 3);
}

TEST_CASE("witness step trace satisfies the size and entropy inequalities") {
    for (auto [n, k, r] : {std::tuple{6, 4, 2}, {9, 5, 2}, {8, 3, 3}, {12, 7, 2}}) {
        const CodeParams params(n, k, r);
        const LrcCode code(params);
        std::vector<std::vector<int>> groups;
        for (int g = 1; g <= params.num_groups(); ++g)
            groups.push_back(code.layout().group_members(g));
        const auto wit = bounds::witness_search(code.generator_view(), groups);

        const long long alpha = params.node_capacity();
        long long total_s = 0, total_h = 0;
        for (std::size_t i = 0; i < wit.steps.size(); ++i) {
            const auto& st = wit.steps[i];
            CHECK(st.size_delta >= 1);
            CHECK(st.size_delta <= r + 1);
            if (st.size_delta == r + 1)  // whole-group step
                CHECK(st.entropy_delta <= (st.size_delta - 1) * alpha);
            else  // partial final step
                CHECK(st.entropy_delta <= st.size_delta * alpha);
            total_s += st.size_delta;
            total_h += st.entropy_delta;
        }
        CHECK(total_s == static_cast<long long>(wit.nodes.size()));
        CHECK(total_h == wit.entropy);
        CHECK(wit.entropy < params.file_symbols());
    }
}

TEST_CASE("a zero-column node joins the witness set for free") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    GeneratorView gen = code.generator_view();
    // zero out node 1's columns
    gf::Matrix mat = gen.mat();
    for (std::size_t row = 0; row < mat.rows(); ++row)
        for (int c = 0; c < 3; ++c) mat(row, c) = 0;
    // node 1's content is now constant, so nodes {2..5} must reach full rank
    const GeneratorView zeroed(std::move(mat), 6, 3);
    REQUIRE(zeroed.node_rank({2, 3, 4, 5, 6}) == 8);

    const auto wit = bounds::witness_search(zeroed, {{1, 2, 3}, {4, 5, 6}});
    CHECK(std::count(wit.nodes.begin(), wit.nodes.end(), 1) == 1);
    CHECK(wit.bound <= 5);
}

TEST_CASE("witness rejects malformed groups") {
    const CodeParams params(6, 4, 2);
    const LrcCode code(params);
    const GeneratorView gen = code.generator_view();
    CHECK_THROWS_AS(bounds::witness_search(gen, {{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(bounds::witness_search(gen, {{1, 2, 3}, {3, 4, 5}}), std::invalid_argument);
}

TEST_CASE("ceiling and floor identity spot values") {
    CHECK(bounds::floor_div(7, 3) == bounds::ceil_div(8, 3) - 1);
    CHECK(bounds::ceil_div(bounds::ceil_div(8, 3), 2) == bounds::ceil_div(8, 6));
    // identity (ii) with x = 8/3, m = 2, n = 3: both sides 2
    CHECK(bounds::ceil_div(8 + 2 * 3, 3 * 3) == 2);
    CHECK(bounds::ceil_div(bounds::ceil_div(8, 3) + 2, 3) == 2);
    // negatives
    CHECK(bounds::floor_div(-7, 3) == -3);
    CHECK(bounds::ceil_div(-7, 3) == -2);
}

TEST_CASE("randomized ceiling identity check reports zero failures") {
    const auto rep = bounds::check_ceiling_identities(1000, 97);
    CHECK(rep.trials == 1000);
    CHECK(rep.failures == 0);
}
