#include <doctest.h>

#include <stdexcept>

#include "normext/group.hpp"

using namespace normext;

TEST_CASE("cyclic arithmetic mod 4") {
    const FiniteAbelianGroup G = make_group({4});
    CHECK(G.order() == 4);
    CHECK(G.rank() == 1);
    CHECK(G.zero() == Element{0});
    CHECK(G.add({3}, {2}) == Element{1});
    CHECK(G.neg({1}) == Element{3});
    CHECK(G.neg({0}) == Element{0});
    CHECK(G.sub({1}, {3}) == Element{2});
    CHECK(G.scale(3, {3}) == Element{1});
    CHECK(G.scale(-1, {1}) == Element{3});
    CHECK(G.scale(0, {2}) == Element{0});
}

TEST_CASE("direct sums index elements in mixed radix") {
    const FiniteAbelianGroup G = make_group({2, 3});
    CHECK(G.order() == 6);
    const auto elems = G.elements();
    REQUIRE(elems.size() == 6);
    for (std::int64_t i = 0; i < 6; ++i) {
        CHECK(G.index_of(elems[static_cast<std::size_t>(i)]) == i);
        CHECK(G.element_at(i) == elems[static_cast<std::size_t>(i)]);
    }
    CHECK(G.add({1, 2}, {1, 2}) == Element{0, 1});
    CHECK_FALSE(G.is_valid({2, 0}));
    CHECK_FALSE(G.is_valid({0}));
    CHECK_THROWS_AS(G.add({2, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(G.index_of({0}), std::invalid_argument);
    CHECK_THROWS_AS(G.element_at(6), std::invalid_argument);
}

TEST_CASE("degenerate group shapes are rejected") {
    CHECK_THROWS_AS(make_group({}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({0}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({-2}), std::invalid_argument);
    CHECK(make_group({1}).order() == 1); // trivial group is fine
}

TEST_CASE("element rendering") {
    CHECK(element_str({0}) == "[0]");
    CHECK(element_str({1, 2, 3}) == "[1,2,3]");
}

TEST_CASE("subgroup closure and membership") {
    const FiniteAbelianGroup G = make_group({4});
    const Subgroup H(G, {{2}});
    CHECK(H.size() == 2);
    CHECK(H.contains({0}));
    CHECK(H.contains({2}));
    CHECK_FALSE(H.contains({1}));
    CHECK(H.member_index({2}) == 1);
    CHECK(H.member_index({3}) == -1);

    CHECK(Subgroup::trivial(G).size() == 1);
    CHECK(Subgroup::whole(G).size() == 4);
    CHECK(Subgroup::whole(G).is_whole_group());
    CHECK(Subgroup::whole(G).contains_subgroup(H));
    CHECK(H.contains_subgroup(Subgroup::trivial(G)));
    CHECK_FALSE(H.contains_subgroup(Subgroup::whole(G)));

    const Subgroup empty_gens(G, {});
    CHECK(empty_gens.size() == 1);
}

TEST_CASE("subgroups from explicit member lists") {
    const FiniteAbelianGroup G = make_group({2, 2});
    const Subgroup D = Subgroup::from_members(G, {{0, 0}, {1, 1}});
    CHECK(D.size() == 2);
    CHECK(D.contains({1, 1}));
    // Missing identity and non-closed lists are rejected.
    CHECK_THROWS_AS(Subgroup::from_members(G, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Subgroup::from_members(G, {{0, 0}, {1, 0}, {0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("scaled subgroups") {
    const FiniteAbelianGroup G = make_group({4});
    CHECK(scale_subgroup(G, 2).size() == 2);
    CHECK(scale_subgroup(G, 2).contains({2}));
    CHECK(scale_subgroup(G, 4).size() == 1);
    const FiniteAbelianGroup G2 = make_group({4, 4});
    CHECK(scale_subgroup(G2, 2).size() == 4);
    CHECK_THROWS_AS(scale_subgroup(G, 0), std::invalid_argument);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(61));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(57));
}

TEST_CASE("quotient structure of Z_4 by its index-two subgroup") {
    const FiniteAbelianGroup G = make_group({4});
    const QuotientStructure Q = quotient(G, Subgroup(G, {{2}}));
    CHECK(Q.coset_count() == 2);
    CHECK(Q.exponent() == 2);
    CHECK(Q.has_prime_exponent());
    CHECK(Q.prime() == 2);
    REQUIRE(Q.basis_size() == 1);
    CHECK(Q.basis()[0] == Element{1});
    CHECK(Q.mu_index() == 1);
    CHECK(Q.basis_rep(Q.mu_index()) == Element{0});
    CHECK(Q.coset_of({0}) == Q.coset_of({2}));
    CHECK(Q.coset_of({1}) == Q.coset_of({3}));
    CHECK(Q.coset_of({0}) != Q.coset_of({1}));
    CHECK(Q.coordinates({0}) == std::vector<std::int64_t>{0});
    CHECK(Q.coordinates({1}) == std::vector<std::int64_t>{1});
    CHECK(Q.coordinates({2}) == std::vector<std::int64_t>{0});
    CHECK(Q.coordinates({3}) == std::vector<std::int64_t>{1});
}

TEST_CASE("quotient with rank-two F_2 structure") {
    const FiniteAbelianGroup G = make_group({4, 4});
    const QuotientStructure Q = quotient(G, scale_subgroup(G, 2));
    CHECK(Q.coset_count() == 4);
    CHECK(Q.prime() == 2);
    REQUIRE(Q.basis_size() == 2);
    // Greedy basis over lexicographic representatives.
    CHECK(Q.basis()[0] == Element{0, 1});
    CHECK(Q.basis()[1] == Element{1, 0});
    CHECK(Q.coordinates({1, 3}) == std::vector<std::int64_t>{1, 1});
    CHECK(Q.coordinates({2, 2}) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("non-prime quotient exponents expose no basis") {
    const FiniteAbelianGroup G = make_group({4});
    const QuotientStructure Q = quotient(G, Subgroup::trivial(G));
    CHECK(Q.exponent() == 4);
    CHECK_FALSE(Q.has_prime_exponent());
    CHECK_FALSE(Q.has_basis());
    CHECK_THROWS_AS(Q.basis(), std::invalid_argument);

    // Trivial quotient: exponent 1, empty basis, only the sentinel.
    const QuotientStructure T = quotient(G, Subgroup::whole(G));
    CHECK(T.exponent() == 1);
    CHECK(T.has_basis());
    CHECK(T.basis_size() == 0);
    CHECK(T.coordinates({3}).empty());
}

TEST_CASE("quotient requires nested subgroups") {
    const FiniteAbelianGroup G = make_group({2, 2});
    const Subgroup A(G, {{1, 0}});
    const Subgroup B(G, {{0, 1}});
    CHECK_THROWS_AS(quotient(A, B), std::invalid_argument);
}

TEST_CASE("homomorphisms respect the generator relations") {
    const FiniteAbelianGroup Z4 = make_group({4});
    const FiniteAbelianGroup Z2 = make_group({2});
    const Homomorphism h(Z4, Z2, {{1}});
    CHECK(h.apply({0}) == Element{0});
    CHECK(h.apply({1}) == Element{1});
    CHECK(h.apply({2}) == Element{0});
    CHECK(h.apply({3}) == Element{1});
    CHECK(apply_hom(h, {3}) == Element{1});

    // 4 * h(e) must be 0 in the target: images of order not dividing 4 fail.
    const FiniteAbelianGroup Z3 = make_group({3});
    CHECK_THROWS_AS(Homomorphism(Z4, Z3, {{1}}), std::invalid_argument);
    // One image per source generator.
    CHECK_THROWS_AS(Homomorphism(Z4, Z2, {}), std::invalid_argument);
    // Sum-compatibility on a rank-two source.
    const FiniteAbelianGroup G = make_group({2, 4});
    const Homomorphism g(G, Z2, {{1}, {1}});
    CHECK(g.apply({1, 3}) == Element{0});
}
