#include <doctest.h>

#include <algorithm>

#include "hilbert/monomial.hpp"
#include "test_support.hpp"

using namespace hilbert;

TEST_SUITE("monomial")
{
    TEST_CASE("degree, divisibility, lcm and gcd")
    {
        Monomial u{2, 1, 0};
        Monomial v{1, 0, 2};
        CHECK(u.degree() == 3);
        CHECK(degree(v) == 3);
        CHECK(lcm(u, v) == Monomial{2, 1, 2});
        CHECK(gcd(u, v) == Monomial{1, 0, 0});
        CHECK(divides(Monomial{1, 0, 0}, u));
        CHECK_FALSE(divides(u, v));
        CHECK(quotient(Monomial{2, 1, 2}, u) == Monomial{0, 0, 2});
        CHECK_THROWS_AS(quotient(v, u), PreconditionError);
        CHECK(u * v == Monomial{3, 1, 2});
        CHECK(Monomial::one(3).is_one());
        CHECK(Monomial::variable(3, 1, 4) == Monomial{0, 4, 0});
        CHECK(Monomial{1, 1, 0}.is_square_free());
        CHECK_FALSE(u.is_square_free());
        CHECK(u.last_variable() == 1);
        CHECK(Monomial::one(2).last_variable() == -1);
    }

    TEST_CASE("syzygy quotient is lcm over the second monomial")
    {
        Monomial y6{0, 6, 0};
        Monomial x3y5{3, 5, 0};
        CHECK(syzygy_quotient(y6, x3y5) == Monomial{0, 1, 0});
        CHECK(syzygy_quotient(x3y5, y6) == Monomial{3, 0, 0});
        CHECK(syzygy_quotient(y6, x3y5) == quotient(lcm(y6, x3y5), x3y5));
    }

    TEST_CASE("arity mismatches are rejected")
    {
        CHECK_THROWS_AS(lcm(Monomial{1, 0}, Monomial{1, 0, 0}), ArityMismatch);
        CHECK_THROWS_AS(divides(Monomial{1}, Monomial{1, 0}), ArityMismatch);
        CHECK_THROWS_AS(MonomialIdeal(2, {Monomial{1, 0, 0}}), ArityMismatch);
        CHECK_THROWS_AS(Monomial::variable(2, 2), PreconditionError);
    }

    TEST_CASE("exponent overflow is detected")
    {
        Monomial big{0xFFFFFFFFu};
        CHECK_THROWS_AS(big * Monomial{1}, std::overflow_error);
    }

    TEST_CASE("for_each_monomial visits every monomial of the degree once")
    {
        for (std::size_t a = 0; a <= 5; ++a) {
            for (unsigned b = 0; b <= 7; ++b) {
                std::vector<Monomial> seen;
                for_each_monomial(a, b, [&](const Monomial& m) {
                    CHECK(m.degree() == static_cast<Degree>(b));
                    seen.push_back(m);
                });
                CHECK(seen.size() == oracle::monomial_count(a, b));
                std::sort(seen.begin(), seen.end());
                CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            }
        }
        int calls = 0;
        for_each_monomial(3, -1, [&](const Monomial&) { ++calls; });
        CHECK(calls == 0);
    }

    TEST_CASE("variable orders")
    {
        VariableOrder order({1, 0, 2});
        Monomial m{3, 5, 1};
        CHECK(order.to_ordered(m) == Monomial{5, 3, 1});
        CHECK(order.from_ordered(order.to_ordered(m)) == m);
        CHECK(order.position_of(1) == 0);
        CHECK_THROWS_AS(VariableOrder({0, 0, 1}), PreconditionError);
        CHECK_THROWS_AS(VariableOrder({0, 3}), PreconditionError);
        CHECK(VariableOrder::identity(3) == VariableOrder({0, 1, 2}));
    }

    TEST_CASE("minimalize keeps survivors in order and collapses duplicates")
    {
        MonomialIdeal ideal(2, {Monomial{2, 1}, Monomial{1, 0}, Monomial{0, 3}, Monomial{1, 0}, Monomial{0, 4}});
        auto min = minimalize(ideal);
        CHECK(min == MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 3}}));
        auto canon = canonicalize(MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 3}}));
        CHECK(canon == canonicalize(MonomialIdeal(2, {Monomial{0, 3}, Monomial{1, 0}, Monomial{1, 1}})));
        CHECK(minimalize(MonomialIdeal::zero(3)).empty());
        CHECK(minimalize(MonomialIdeal(2, {Monomial{1, 1}, Monomial{0, 0}})) == MonomialIdeal::unit(2));
    }

    TEST_CASE("restriction, stages and re-indexing")
    {
        // ring x,y,z; order y,x,z
        VariableOrder order({1, 0, 2});
        MonomialIdeal ideal(3, {Monomial{2, 1, 3}, Monomial{3, 0, 1}, Monomial{0, 2, 2}, Monomial{0, 4, 0}});
        CHECK(stage_of(Monomial{0, 4, 0}, order) == 1);
        CHECK(stage_of(Monomial{1, 4, 0}, order) == 2);
        CHECK(stage_of(Monomial{0, 0, 1}, order) == 3);
        CHECK(stage_of(Monomial::one(3), order) == 1);

        CHECK(restrict_to(ideal, order, 1) == MonomialIdeal(1, {Monomial{4}}));
        CHECK(restrict_to(ideal, order, 2) == MonomialIdeal(2, {Monomial{4, 0}}));
        CHECK(restrict_to(ideal, order, 3).size() == 4);
        CHECK_THROWS_AS(restrict_to(ideal, order, 0), PreconditionError);
        CHECK_THROWS_AS(restrict_to(ideal, order, 4), PreconditionError);

        auto re = reindex_for_table(ideal, order);
        CHECK(re == MonomialIdeal(3, {Monomial{0, 4, 0}, Monomial{3, 0, 1}, Monomial{0, 2, 2}, Monomial{2, 1, 3}}));
        CHECK(extend_arity(MonomialIdeal(2, {Monomial{1, 2}}), 4) == MonomialIdeal(4, {Monomial{1, 2, 0, 0}}));
        CHECK_THROWS_AS(extend_arity(ideal, 2), PreconditionError);
    }

    TEST_CASE("ideal membership")
    {
        MonomialIdeal ideal(3, {Monomial{2, 1, 0}, Monomial{1, 0, 2}});
        CHECK(contains_monomial(ideal, Monomial{3, 1, 0}));
        CHECK(contains_monomial(ideal, Monomial{1, 1, 2}));
        CHECK_FALSE(contains_monomial(ideal, Monomial{1, 1, 1}));
        CHECK(MonomialIdeal::unit(3).is_unit());
        CHECK_FALSE(ideal.is_unit());
        CHECK(MonomialIdeal::zero(3).is_zero());
    }
}
