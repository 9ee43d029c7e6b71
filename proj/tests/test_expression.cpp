#include <doctest.h>

#include "chern/expression.hpp"
#include "chern/space_file.hpp"
#include "chern/spaces.hpp"

using namespace chern;

namespace {

const char* kQuinticFile = R"(# degree-5 threefold in P4
name = quintic_threefold
dim = 3
ambient_dim = 4
generator = h : 1
relation = h^4
integral = h^3 : 5
tangent_chern = (1+h)^5 * (1+5*h)^(-1)
polarization = h
very_ample = true
)";

}  // namespace

TEST_CASE("model expressions") {
    PolarizedSpace quintic = hypersurface(3, 5);
    ModelPtr m = quintic.model;

    Element parsed = parse_model_expression("(1+h)^5 * (1+5*h)^(-1)", m);
    CHECK(parsed == quintic.tangent_chern);

    CHECK(parse_model_expression("1+5h", m) ==
          Element::one(m) + quintic.polarization * Rational(5));
    CHECK(parse_model_expression("1/2 * h + 1/2*h", m) == quintic.polarization);
    CHECK(parse_model_expression("-h + 2h", m) == quintic.polarization);
    CHECK(parse_model_expression("2h^3", m) == quintic.polarization.pow(3) * Rational(2));
    CHECK(parse_model_expression("(1+h)(1-h)", m) ==
          Element::one(m) - quintic.polarization.pow(2));
}

TEST_CASE("series inverses need an invertible unit part") {
    ModelPtr m = projective_space(3).model;
    Element h = Element::generator(m, 0);
    CHECK(parse_model_expression("(1+h)^(-1) * (1+h)", m) == Element::one(m));
    CHECK(parse_model_expression("(2+2h)^(-1)", m) ==
          (Element::one(m) - h + h.pow(2) - h.pow(3)) * make_rational(1, 2));
    CHECK_THROWS_AS(parse_model_expression("h^(-1)", m), ParseError);
}

TEST_CASE("parse errors carry position and expectation") {
    ModelPtr m = projective_space(2).model;
    try {
        parse_model_expression("1 + (2*h", m);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 9);
        CHECK(e.expected == "\")\"");
    }
    try {
        parse_model_expression("1 + * 2", m);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == 5);
    }
    CHECK_THROWS_AS(parse_model_expression("1 + zz", m), ParseError);
    CHECK_THROWS_AS(parse_model_expression("(1+h)^", m), ParseError);
    CHECK_THROWS_AS(parse_model_expression("h @ 2", m), ParseError);
}

TEST_CASE("abstract chern expressions") {
    ChernPolynomial p = parse_chern_expression("c1^2 - c2", 2, 8);
    CHECK(p == ChernPolynomial::variable(1, 2).pow(2) - ChernPolynomial::variable(2, 2));
    CHECK(parse_chern_expression("c7", 3, 8).is_zero());  // beyond the rank
    CHECK(parse_chern_expression("c0", 3, 8).is_one());
    CHECK_THROWS_AS(parse_chern_expression("q1", 3, 8), ParseError);
}

TEST_CASE("space file ingestion round-trips the quintic") {
    PolarizedSpace from_file = parse_space_text(kQuinticFile, "test");
    PolarizedSpace builtin = hypersurface(3, 5);
    CHECK(from_file.name == "quintic_threefold");
    CHECK(from_file.n == 3);
    CHECK(from_file.N == 4);
    CHECK(from_file.flags.polarization_very_ample);
    CHECK(chern_numbers(from_file) == chern_numbers(builtin));
    CHECK(integrate(from_file, from_file.chern_class(2) * from_file.polarization) == 50);
}

TEST_CASE("space file schema violations") {
    CHECK_THROWS_AS(parse_space_text("name = x\ndim = 2\ngenerator = h : 1\n"
                                     "tangent_chern = 1\npolarization = h\n",
                                     "test"),
                    ParseError);  // missing integral
    CHECK_THROWS_AS(parse_space_text("dim = 2\n", "test"), ParseError);  // missing name
    CHECK_THROWS_AS(
        parse_space_text("name = x\ndim = 2\ngenerator = h : 1\nintegral = h^2 : 1\n"
                         "tangent_chern = h\npolarization = h\n",
                         "test"),
        ParseError);  // unit part of tangent_chern is not 1
    CHECK_THROWS_AS(
        parse_space_text("name = x\ndim = 2\ngenerator = h : 1\nintegral = h^2 : 1\n"
                         "tangent_chern = 1\npolarization = 1+h\n",
                         "test"),
        ParseError);  // polarization not homogeneous of degree 1
    CHECK_THROWS_AS(parse_space_text("bogus_key = 1\n", "test"), ParseError);

    try {
        parse_space_text("name = x\ndim = 2\ngenerator = h : 1\nintegral = h^3 : 1\n"
                         "tangent_chern = 1\npolarization = h\n",
                         "test");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);  // integral of non-top degree, reported on its line
    }
}

TEST_CASE("non-integer chern numbers get a warning note") {
    const char* text =
        "name = fractional\n"
        "dim = 1\n"
        "generator = h : 1\n"
        "integral = h : 1/3\n"
        "tangent_chern = 1+2h\n"
        "polarization = h\n";
    PolarizedSpace s = parse_space_text(text, "test");
    CHECK(s.flags.notes.find("non-integer Chern number") != std::string::npos);
}

TEST_CASE("relations declared above the truncation degree still apply") {
    const char* text =
        "name = capped\n"
        "dim = 4\n"
        "generator = a : 1\n"
        "generator = b : 1\n"
        "relation = a^2\n"
        "relation = b^4\n"
        "integral = a*b^3 : 1\n"
        "tangent_chern = (1+2a)*(1+b)^4\n"
        "polarization = a+b\n"
        "very_ample = true\n";
    PolarizedSpace s = parse_space_text(text, "test");
    Element a = Element::generator(s.model, 0);
    CHECK(a.pow(2).is_zero());
    CHECK(integrate(s, s.polarization.pow(4)) == 4);  // C(4,1) a b^3
}
