#include <doctest.h>

#include <random>

#include "hilbert/parser.hpp"
#include "test_support.hpp"

using namespace hilbert;

namespace {

template <class F>
ParseError capture(F&& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(ParseErrorKind::syntax, {}, "");
}

} // namespace

TEST_SUITE("ideal-parser")
{
    TEST_CASE("rings")
    {
        CHECK(parse_ring("x,y,z").names() == std::vector<std::string>{"x", "y", "z"});
        CHECK(parse_ring(" y, x ,z ").names() == std::vector<std::string>{"y", "x", "z"});
        CHECK(parse_ring("x,xh,x',x_1").arity() == 4);

        auto e = capture([] { parse_ring("x,,y"); });
        CHECK(e.kind() == ParseErrorKind::syntax);
        CHECK(e.span().start == 1);
        CHECK(e.span().end == 3);

        auto dup = capture([] { parse_ring("x,y,x"); });
        CHECK(dup.kind() == ParseErrorKind::duplicate_variable);
        CHECK(dup.span().start == 4);
        CHECK(std::string(dup.what()).find("'x'") != std::string::npos);

        CHECK(capture([] { parse_ring("2x"); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([] { parse_ring("x y"); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([] { parse_ring(""); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([] { parse_ring("x,#"); }).kind() == ParseErrorKind::syntax);
        CHECK_THROWS_AS(Ring({"x", "x"}), PreconditionError);
        CHECK_THROWS_AS(Ring({"1x"}), PreconditionError);
    }

    TEST_CASE("ideals")
    {
        auto ring = parse_ring("x,y,z");
        CHECK(parse_ideal("x^2*y, x*z^2", ring) == MonomialIdeal(3, {Monomial{2, 1, 0}, Monomial{1, 0, 2}}));
        CHECK(parse_ideal("x^2*y^3*z, x*z^3, x*y^4*z, x^2*z^2", ring) ==
              MonomialIdeal(3, {Monomial{2, 3, 1}, Monomial{1, 0, 3}, Monomial{1, 4, 1}, Monomial{2, 0, 2}}));
        CHECK(parse_ideal("x*x*y^2*x", ring) == MonomialIdeal(3, {Monomial{3, 2, 0}}));
        CHECK(parse_ideal(" 0 ", ring) == MonomialIdeal::zero(3));
        CHECK(parse_ideal("1", ring) == MonomialIdeal::unit(3));
        CHECK(parse_ideal("x, 1", ring) == MonomialIdeal(3, {Monomial{1, 0, 0}, Monomial{0, 0, 0}}));
        CHECK(parse_monomial("z^10*x", ring) == Monomial{1, 0, 10});
    }

    TEST_CASE("ideal errors carry spans and name the token")
    {
        auto ring = parse_ring("x,y,z");
        auto zero = capture([&] { parse_ideal("x^0", ring); });
        CHECK(zero.kind() == ParseErrorKind::bad_exponent);
        CHECK(zero.span().start == 2);
        CHECK(std::string(zero.what()).find("'0'") != std::string::npos);

        CHECK(capture([&] { parse_ideal("x^a", ring); }).kind() == ParseErrorKind::bad_exponent);
        CHECK(capture([&] { parse_ideal("x^", ring); }).kind() == ParseErrorKind::bad_exponent);
        CHECK(capture([&] { parse_ideal("x^99999999999", ring); }).kind() == ParseErrorKind::bad_exponent);
        CHECK(capture([&] { parse_ideal("x^4294967295*x", ring); }).kind() == ParseErrorKind::bad_exponent);

        auto unknown = capture([&] { parse_ideal("x*q^2", ring); });
        CHECK(unknown.kind() == ParseErrorKind::unknown_variable);
        CHECK(unknown.span().start == 2);
        CHECK(unknown.span().end == 3);
        CHECK(std::string(unknown.what()).find("'q'") != std::string::npos);

        CHECK(capture([&] { parse_ideal("x,,y", ring); }).kind() == ParseErrorKind::empty_generator);
        CHECK(capture([&] { parse_ideal("x,", ring); }).kind() == ParseErrorKind::empty_generator);
        CHECK(capture([&] { parse_ideal("", ring); }).kind() == ParseErrorKind::empty_generator);
        CHECK(capture([&] { parse_ideal("x*", ring); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([&] { parse_ideal("x y", ring); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([&] { parse_ideal("2*x", ring); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([&] { parse_ideal("x, 0", ring); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([&] { parse_ideal("x+y", ring); }).kind() == ParseErrorKind::syntax);

        const std::string input = "x^2, y*w";
        auto e = capture([&] { parse_ideal(input, ring); });
        CHECK(e.span().start <= e.span().end);
        CHECK(e.span().end <= input.size());
        auto text = describe(e, input);
        CHECK(text.find("unknown-variable") != std::string::npos);
        CHECK(text.find("        ^") != std::string::npos);
    }

    TEST_CASE("every error span lies inside the input")
    {
        auto ring = parse_ring("x,y");
        for (std::string bad : {"", ",", "x,", ",x", "x^", "x^0", "x**y", "x*,y", "q", "x^y", "1^2", "x y", "%",
                                "x^-1", "0,0", "3"}) {
            try {
                parse_ideal(bad, ring);
                FAIL("accepted " << bad);
            } catch (const ParseError& e) {
                INFO(bad);
                CHECK(e.span().start <= e.span().end);
                CHECK(e.span().end <= bad.size());
                CHECK(std::string(e.what()).size() > 0);
            }
        }
    }

    TEST_CASE("variable orders")
    {
        auto ring = parse_ring("x,y,z");
        CHECK(parse_order("y,x,z", ring) == VariableOrder({1, 0, 2}));
        CHECK(capture([&] { parse_order("y,x", ring); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([&] { parse_order("y,x,q", ring); }).kind() == ParseErrorKind::unknown_variable);
        CHECK(capture([&] { parse_order("y,x,y", ring); }).kind() == ParseErrorKind::duplicate_variable);
    }

    TEST_CASE("complexes")
    {
        auto ring = parse_ring("x,xh,y,z");
        auto c = parse_complex("x,y,z; xh,y,z", ring);
        CHECK(c.vertices == ring.names());
        REQUIRE(c.facets.size() == 2);
        CHECK(c.facets[0] == Face{"x", "y", "z"});
        CHECK(c.facets[1] == Face{"xh", "y", "z"});

        auto uv = parse_complex("u; v", parse_ring("u,v"));
        CHECK(uv.facets.size() == 2);

        auto unknown = capture([] { parse_complex("x,q", parse_ring("x,y")); });
        CHECK(unknown.kind() == ParseErrorKind::unknown_variable);
        CHECK(unknown.span().start == 2);
        CHECK(capture([&] { parse_complex("x,y;;z", ring); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([&] { parse_complex("x,,y", ring); }).kind() == ParseErrorKind::syntax);
        CHECK_THROWS_AS(parse_complex("x,y; x", parse_ring("x,y")), InvalidComplex);
    }

    TEST_CASE("rendering")
    {
        auto ring = parse_ring("x,y,z");
        CHECK(render(MonomialIdeal(3, {Monomial{2, 1, 0}, Monomial{1, 0, 2}}), ring) == "x^2*y, x*z^2");
        CHECK(render(MonomialIdeal::zero(3), ring) == "0");
        CHECK(render(MonomialIdeal::unit(3), ring) == "1");
        CHECK(render(SeriesNumerator(3, {{0, 1}, {5, -1}})) == "(1 - t^5)/(1 - t)^3");
        CHECK(render(SeriesNumerator(1, {{0, 1}, {1, -1}})) == "(1 - t)/(1 - t)");
        CHECK(render(SeriesNumerator(2, {{0, 1}, {3, -2}, {4, 1}})) == "(1 - 2*t^3 + t^4)/(1 - t)^2");
        CHECK(render(SeriesNumerator(2)) == "0/(1 - t)^2");
        CHECK(render(SeriesNumerator(0, {{0, 1}})) == "1/1");
        CHECK(render(Face{"x", "y"}) == "{x,y}");
        CHECK_THROWS_AS(render(Monomial{1, 2}, ring), ArityMismatch);
    }

    TEST_CASE("series round trip")
    {
        std::vector<SeriesNumerator> samples{
            SeriesNumerator(3, {{0, 1}, {2, -1}, {3, -1}, {5, 1}}),
            SeriesNumerator(2, {{0, 1}}),
            SeriesNumerator(2),
            SeriesNumerator(0, {{0, 1}}),
            SeriesNumerator(1, {{2, -7}}),
            SeriesNumerator(4, {{0, 1}, {1, 3}, {7, BigInt("-123456789012345678901234567890")}}),
            SeriesNumerator(1, {{3, 1}}),
        };
        for (const auto& s : samples) {
            INFO(render(s));
            CHECK(parse_series(render(s)) == s);
        }
        CHECK(parse_series(" ( 1-t ) / (1-t)^2 ") == SeriesNumerator(2, {{0, 1}, {1, -1}}));
        CHECK(capture([] { parse_series("(1 - u)/(1 - t)"); }).kind() == ParseErrorKind::unknown_variable);
        CHECK(capture([] { parse_series("(1 - t)/(1 - t)^0"); }).kind() == ParseErrorKind::bad_exponent);
        CHECK(capture([] { parse_series("(1 - t)"); }).kind() == ParseErrorKind::syntax);
        CHECK(capture([] { parse_series("(1 - t)/(2 - t)"); }).kind() == ParseErrorKind::syntax);
    }

    TEST_CASE("ideal round trip on random ideals")
    {
        std::mt19937_64 rng(99);
        const std::vector<std::string> names{"x", "y", "z", "xh", "w'", "v_2"};
        for (int i = 0; i < 300; ++i) {
            auto raw = oracle::random_ideal(rng, 6, 7, 12);
            Ring ring(std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(raw.arity)));
            auto ideal = oracle::to_ideal(raw);
            CHECK(parse_ideal(render(ideal, ring), ring) == ideal);
        }
        Ring ring({"x", "y"});
        CHECK(parse_ideal(render(MonomialIdeal::zero(2), ring), ring) == MonomialIdeal::zero(2));
        CHECK(parse_ideal(render(MonomialIdeal::unit(2), ring), ring) == MonomialIdeal::unit(2));
    }
}
