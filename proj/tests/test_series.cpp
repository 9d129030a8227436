#include <doctest.h>

#include "hilbert/hilbert_series.hpp"
#include "hilbert/parser.hpp"
#include "test_support.hpp"

using namespace hilbert;

TEST_SUITE("hilbert-series")
{
    TEST_CASE("numerator of x^2, y^3 in three variables")
    {
        MonomialIdeal ideal(3, {Monomial{2, 0, 0}, Monomial{0, 3, 0}});
        auto num = series_numerator(ideal);
        CHECK(num.arity() == 3);
        CHECK(num.coefficient(0) == 1);
        CHECK(num.coefficient(2) == -1);
        CHECK(num.coefficient(3) == -1);
        CHECK(num.coefficient(5) == 1);
        CHECK(num.coefficient(4) == 0);
        CHECK(num.degree() == 5);
        CHECK(num.value_at_one() == 0);
        CHECK(render(num) == "(1 - t^2 - t^3 + t^5)/(1 - t)^3");
        CHECK(oracle::show(expand_series(num, 5)) == "1 3 5 6 6 6");
    }

    TEST_CASE("zero and unit ideals")
    {
        auto zero = series_numerator(MonomialIdeal::zero(2));
        CHECK(zero == SeriesNumerator(2, {{0, 1}}));
        CHECK(render(zero) == "1/(1 - t)^2");
        auto unit = series_numerator(MonomialIdeal::unit(2));
        CHECK(unit.is_zero());
        CHECK(unit.degree() == -1);
        CHECK(oracle::show(expand_series(unit, 3)) == "0 0 0 0");
    }

    TEST_CASE("principal ideal numerator is 1 - t^d")
    {
        auto num = series_numerator(MonomialIdeal(3, {Monomial{5, 0, 0}}));
        CHECK(render(num) == "(1 - t^5)/(1 - t)^3");
    }

    TEST_CASE("expansion matches the oracle")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 60; ++i) {
            auto raw = oracle::random_ideal(rng, 4, 5, 4);
            auto num = series_numerator(oracle::to_ideal(raw));
            CHECK(expand_series(num, 12) == oracle::counts(oracle::hf_sequence(raw, 12)));
            // the numerator only depends on the ideal, not its generating set
            CHECK(num == series_numerator(minimalize(oracle::to_ideal(raw))));
        }
    }

    TEST_CASE("a numerator that is not a Hilbert series is rejected on expansion")
    {
        SeriesNumerator bad(0, {{0, 1}, {1, -2}});
        CHECK_THROWS_AS(expand_series(bad, 2), std::logic_error);
        CHECK_THROWS_AS(SeriesNumerator(1, {{-1, 1}}), PreconditionError);
        CHECK_THROWS_AS(expand_series(SeriesNumerator(1), -1), PreconditionError);
    }

    TEST_CASE("coefficients cancel on add")
    {
        SeriesNumerator s(2);
        s.add(3, 4);
        s.add(3, -4);
        CHECK(s.is_zero());
    }
}
