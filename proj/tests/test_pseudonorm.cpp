#include <doctest.h>

#include <map>
#include <stdexcept>

#include "normext/group.hpp"
#include "normext/pseudonorm.hpp"
#include "normext/rational.hpp"

using namespace normext;

namespace {

Pseudonorm table_norm(const FiniteAbelianGroup& G, std::vector<Rational> values) {
    return Pseudonorm(Subgroup::whole(G), std::move(values));
}

} // namespace

TEST_CASE("a valid table passes the full axiom scan") {
    const FiniteAbelianGroup G = make_group({4});
    const Pseudonorm N = table_norm(G, {Rational(0), Rational(1), Rational(1), Rational(1)});
    const ValidationReport report = validate(N);
    CHECK(report.ok);
    CHECK(report.violations.empty());
    CHECK(N.value({2}) == Rational(1));
    CHECK(N.value_at(0) == Rational(0));
}

TEST_CASE("triangle violations are reported with the offending pair") {
    const FiniteAbelianGroup G = make_group({4});
    // |1 - 3| = |2| = 5 > |1| + |3| = 2.
    const Pseudonorm N = table_norm(G, {Rational(0), Rational(1), Rational(5), Rational(1)});
    const ValidationReport report = validate(N);
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const Violation& v : report.violations) {
        if (v.kind != Violation::Kind::triangle) continue;
        if ((v.x == Element{1} && v.y == Element{3}) ||
            (v.x == Element{3} && v.y == Element{1})) {
            found = true;
            CHECK(v.lhs == Rational(5));
            CHECK(v.rhs == Rational(2));
            CHECK_FALSE(v.describe().empty());
        }
    }
    CHECK(found);
}

TEST_CASE("identity and sign violations are reported") {
    const FiniteAbelianGroup G = make_group({2});
    {
        const ValidationReport r = validate(table_norm(G, {Rational(1), Rational(1)}));
        REQUIRE_FALSE(r.ok);
        CHECK(r.violations.front().kind == Violation::Kind::nonzero_at_identity);
    }
    {
        const ValidationReport r = validate(table_norm(G, {Rational(0), Rational(-1)}));
        REQUIRE_FALSE(r.ok);
        bool negative = false;
        for (const Violation& v : r.violations)
            negative = negative || v.kind == Violation::Kind::negative_value;
        CHECK(negative);
    }
}

TEST_CASE("construction checks totality and membership, not the axioms") {
    const FiniteAbelianGroup G = make_group({4});
    const Subgroup H(G, {{2}});
    std::map<Element, Rational> table{{{0}, Rational(0)}, {{2}, Rational(1)}};
    CHECK(Pseudonorm(H, table).value({2}) == Rational(1));

    std::map<Element, Rational> missing{{{0}, Rational(0)}};
    CHECK_THROWS_AS(Pseudonorm(H, missing), std::invalid_argument);

    std::map<Element, Rational> outside{
        {{0}, Rational(0)}, {{2}, Rational(1)}, {{1}, Rational(1)}};
    CHECK_THROWS_AS(Pseudonorm(H, outside), std::invalid_argument);

    CHECK_THROWS_AS(Pseudonorm(H, std::vector<Rational>{Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(Pseudonorm(H, table).value({1}), std::invalid_argument);
}

TEST_CASE("induced metric is the norm of the difference") {
    const FiniteAbelianGroup G = make_group({4});
    const Pseudonorm N = table_norm(G, {Rational(0), Rational(1), Rational(5), Rational(1)});
    CHECK(induced_metric(N, {1}, {3}) == Rational(5));
    CHECK(induced_metric(N, {3}, {1}) == Rational(5));
    CHECK(induced_metric(N, {2}, {2}) == Rational(0));
    CHECK(induced_metric(N, {0}, {1}) == Rational(1));
}

TEST_CASE("pullback along a quotient map") {
    const FiniteAbelianGroup Z4 = make_group({4});
    const FiniteAbelianGroup Z2 = make_group({2});
    const Homomorphism h(Z4, Z2, {{1}});
    const Pseudonorm N = table_norm(Z2, {Rational(0), Rational(3, 2)});
    const Pseudonorm pulled = pullback_norm(h, N);
    CHECK(pulled.carrier().size() == 4);
    CHECK(pulled.value({0}) == Rational(0));
    CHECK(pulled.value({1}) == Rational(3, 2));
    CHECK(pulled.value({2}) == Rational(0));
    CHECK(pulled.value({3}) == Rational(3, 2));
    CHECK(validate(pulled).ok);
}

TEST_CASE("pullback rejects images outside the norm's carrier") {
    const FiniteAbelianGroup Z4 = make_group({4});
    const FiniteAbelianGroup Z2 = make_group({2});
    const Homomorphism h(Z4, Z2, {{1}});
    const Pseudonorm N(Subgroup::trivial(Z2), std::vector<Rational>{Rational(0)});
    CHECK_THROWS_AS(pullback_norm(h, N), std::invalid_argument);
}

TEST_CASE("closure turns a seed table into the largest dominated pseudonorm") {
    const FiniteAbelianGroup G = make_group({4});
    const Subgroup whole = Subgroup::whole(G);
    // seed(3) = 1 caps |1| = |-3| at 1 even though seed(1) = 5.
    const Pseudonorm N =
        closure_pseudonorm(whole, {Rational(0), Rational(5), Rational(1), Rational(1)});
    CHECK(N.value({1}) == Rational(1));
    CHECK(N.value({2}) == Rational(1));
    CHECK(N.value({3}) == Rational(1));
    CHECK(validate(N).ok);

    // Closure never exceeds the seed and is always valid.
    const Pseudonorm M =
        closure_pseudonorm(whole, {Rational(0), Rational(5), Rational(1), Rational(5)});
    CHECK(validate(M).ok);
    CHECK(M.value({1}) <= Rational(5));
    CHECK(M.value({2}) <= Rational(1));

    CHECK_THROWS_AS(closure_pseudonorm(whole, {Rational(0), Rational(-1), Rational(1), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(closure_pseudonorm(whole, {Rational(0)}), std::invalid_argument);
}
