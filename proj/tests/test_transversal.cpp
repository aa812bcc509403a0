#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "normext/corpus.hpp"
#include "normext/rational.hpp"
#include "normext/transversal.hpp"

using namespace normext;

namespace {

long hits(const std::vector<std::int64_t>& picked, const std::vector<std::int64_t>& set) {
    long n = 0;
    for (std::int64_t x : set)
        if (std::binary_search(picked.begin(), picked.end(), x)) ++n;
    return n;
}

} // namespace

TEST_CASE("collection constructors enforce shape") {
    CHECK_NOTHROW(UniformCollection(2, {{2, 1}, {3, 4}}));
    // Wrong set size.
    CHECK_THROWS_AS(UniformCollection(2, {{1, 2, 3}}), std::invalid_argument);
    // Duplicate label inside a set.
    CHECK_THROWS_AS(UniformCollection(2, {{1, 1}}), std::invalid_argument);
    // Overlapping sets.
    CHECK_THROWS_AS(UniformCollection(2, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(UniformCollection(0, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(Collection({{1, 2}, {2, 3}}), std::invalid_argument);

    const UniformCollection A(2, {{4, 3}, {1, 2}});
    CHECK(A.sets[0] == std::vector<std::int64_t>{3, 4}); // sets are sorted
    CHECK(A.support() == std::vector<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("doubly stochastic matrices verify their row and column sums") {
    CHECK_NOTHROW(DoublyStochasticMatrix({{Rational(1, 2), Rational(1, 2)},
                                          {Rational(1, 2), Rational(1, 2)}}));
    // Rows sum to 1 but the columns do not.
    CHECK_THROWS_AS(DoublyStochasticMatrix({{Rational(1), Rational(0)},
                                            {Rational(1), Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DoublyStochasticMatrix({{Rational(1, 2)}}), std::invalid_argument);
    CHECK_THROWS_AS(DoublyStochasticMatrix({{Rational(3, 2), Rational(-1, 2)},
                                            {Rational(-1, 2), Rational(3, 2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DoublyStochasticMatrix({{Rational(1), Rational(0)}}),
                    std::invalid_argument);
}

TEST_CASE("padding produces matched uniform collections containing the inputs") {
    const UniformCollection A(2, {{1, 2}});
    const UniformCollection B(2, {{2, 3}});
    const auto [C, D] = pad_collections(A, B);
    CHECK(C.k == 2);
    CHECK(D.k == 2);
    CHECK(C.sets.size() == D.sets.size());
    CHECK(C.support() == D.support());
    CHECK(std::find(C.sets.begin(), C.sets.end(), A.sets[0]) != C.sets.end());
    CHECK(std::find(D.sets.begin(), D.sets.end(), B.sets[0]) != D.sets.end());
    // The padded pair feeds straight into the intersection matrix.
    CHECK_NOTHROW(intersection_matrix(C, D));
}

TEST_CASE("intersection matrix of a collection with itself is the identity") {
    const UniformCollection C(3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    const DoublyStochasticMatrix M = intersection_matrix(C, C);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(M.entries[i][j] == (i == j ? Rational(1) : Rational(0)));
}

TEST_CASE("intersection matrix entries are |C_i cap D_j| / k") {
    const UniformCollection C(2, {{1, 2}, {3, 4}});
    const UniformCollection D(2, {{1, 3}, {2, 4}});
    const DoublyStochasticMatrix M = intersection_matrix(C, D);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(M.entries[i][j] == Rational(1, 2));
    // Mismatched supports are rejected.
    const UniformCollection E(2, {{1, 2}, {3, 5}});
    CHECK_THROWS_AS(intersection_matrix(C, E), std::invalid_argument);
}

TEST_CASE("positive-support permutations") {
    const DoublyStochasticMatrix half{{{Rational(1, 2), Rational(1, 2)},
                                       {Rational(1, 2), Rational(1, 2)}}};
    const auto s = positive_permutation(half);
    REQUIRE(s.size() == 2);
    CHECK(s[0] != s[1]);
    for (std::size_t i = 0; i < 2; ++i) CHECK(Rational(0) < half.entries[i][s[i]]);

    std::vector<std::vector<Rational>> id(4, std::vector<Rational>(4, Rational(0)));
    for (std::size_t i = 0; i < 4; ++i) id[i][i] = Rational(1);
    const auto t = positive_permutation(DoublyStochasticMatrix{id});
    for (std::size_t i = 0; i < 4; ++i) CHECK(t[i] == i);
}

TEST_CASE("Birkhoff decomposition of the half matrix") {
    const DoublyStochasticMatrix half{{{Rational(1, 2), Rational(1, 2)},
                                       {Rational(1, 2), Rational(1, 2)}}};
    const BirkhoffDecomposition D = birkhoff_decompose(half);
    REQUIRE(D.terms.size() == 2);
    CHECK(D.terms[0].weight == Rational(1, 2));
    CHECK(D.terms[1].weight == Rational(1, 2));
    CHECK(recompose(D, 2) == half.entries);
}

TEST_CASE("Birkhoff decomposition recomposes a lopsided matrix exactly") {
    const DoublyStochasticMatrix M{{{Rational(2, 3), Rational(1, 3), Rational(0)},
                                    {Rational(1, 3), Rational(1, 3), Rational(1, 3)},
                                    {Rational(0), Rational(1, 3), Rational(2, 3)}}};
    const BirkhoffDecomposition D = birkhoff_decompose(M);
    Rational total(0);
    for (const BirkhoffTerm& t : D.terms) {
        CHECK(Rational(0) < t.weight);
        total += t.weight;
    }
    CHECK(total == Rational(1));
    CHECK(recompose(D, 3) == M.entries);
    CHECK(D.terms.size() <= 7); // number of positive entries
}

TEST_CASE("random Birkhoff instances recompose exactly") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const auto M = corpus::random_doubly_stochastic(n, 1 + rng() % (n + 2), rng);
        const BirkhoffDecomposition D = birkhoff_decompose(M);
        Rational total(0);
        std::size_t positive = 0;
        for (const auto& row : M.entries)
            for (const Rational& e : row)
                if (Rational(0) < e) ++positive;
        for (const BirkhoffTerm& t : D.terms) {
            CHECK(Rational(0) < t.weight);
            total += t.weight;
        }
        CHECK(total == Rational(1));
        CHECK(recompose(D, n) == M.entries);
        CHECK(D.terms.size() <= positive);
    }
}

TEST_CASE("transversal hits every set of both collections exactly once") {
    const UniformCollection A(2, {{1, 2}, {3, 4}});
    const UniformCollection B(2, {{1, 3}, {2, 4}});
    std::vector<std::int64_t> T = transversal(A, B);
    std::sort(T.begin(), T.end());
    for (const auto& s : A.sets) CHECK(hits(T, s) == 1);
    for (const auto& s : B.sets) CHECK(hits(T, s) == 1);
}

TEST_CASE("transversals on random instances, against an exhaustive oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
        const std::int64_t ground = k + static_cast<std::int64_t>(rng() % (13 - k));
        const UniformCollection A = corpus::random_uniform_collection(k, ground, 3, rng);
        const UniformCollection B = corpus::random_uniform_collection(k, ground, 3, rng);
        std::vector<std::int64_t> T = transversal(A, B);
        std::sort(T.begin(), T.end());
        for (const auto& s : A.sets) CHECK(hits(T, s) == 1);
        for (const auto& s : B.sets) CHECK(hits(T, s) == 1);

        // Exhaustive check that some valid selector exists (it must: ours is one).
        std::vector<std::int64_t> support;
        {
            auto sa = A.support();
            auto sb = B.support();
            std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(),
                       std::back_inserter(support));
            support.erase(std::unique(support.begin(), support.end()), support.end());
        }
        REQUIRE(support.size() <= 13);
        bool any = false;
        for (std::uint64_t mask = 0; mask < (1ull << support.size()); ++mask) {
            std::vector<std::int64_t> pick;
            for (std::size_t b = 0; b < support.size(); ++b)
                if (mask & (1ull << b)) pick.push_back(support[b]);
            bool ok = true;
            for (const auto& s : A.sets) ok = ok && hits(pick, s) == 1;
            for (const auto& s : B.sets) ok = ok && hits(pick, s) == 1;
            if (ok) {
                any = true;
                break;
            }
        }
        CHECK(any);
    }
}

TEST_CASE("p-fractional transversal hits each set in exact proportion") {
    const Collection C({{1, 2, 3, 4}});
    const Collection D({{1, 2}, {3, 4}});
    std::vector<std::int64_t> T = p_fractional_transversal(C, D, 2);
    std::sort(T.begin(), T.end());
    CHECK(hits(T, {1, 2, 3, 4}) == 2);
    CHECK(hits(T, {1, 2}) == 1);
    CHECK(hits(T, {3, 4}) == 1);

    // Set sizes must be divisible by p.
    const Collection bad({{1, 2, 3}});
    CHECK_THROWS_AS(p_fractional_transversal(bad, Collection({{1, 2}}), 2),
                    std::invalid_argument);

    std::mt19937_64 rng(1717);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 2);
        const std::int64_t ground = 2 * p + static_cast<std::int64_t>(rng() % 10);
        const Collection E = corpus::random_p_collection(p, ground, rng);
        const Collection F = corpus::random_p_collection(p, ground, rng);
        std::vector<std::int64_t> I = p_fractional_transversal(E, F, p);
        std::sort(I.begin(), I.end());
        for (const auto& s : E.sets)
            CHECK(hits(I, s) == static_cast<long>(s.size()) / p);
        for (const auto& s : F.sets)
            CHECK(hits(I, s) == static_cast<long>(s.size()) / p);
    }
}
