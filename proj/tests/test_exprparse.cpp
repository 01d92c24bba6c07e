#include <doctest.h>

#include <fstream>

#include "qosp/exprparse.hpp"
#include "test_helpers.hpp"

using namespace qosp;

TEST_CASE("AST shapes") {
    {
        const ExprAST ast = parse("e*f + f*e");
        REQUIRE(ast->kind == ExprNode::Kind::add);
        CHECK(ast->lhs->kind == ExprNode::Kind::mul);
        CHECK(ast->rhs->kind == ExprNode::Kind::mul);
        CHECK(ast->lhs->lhs->symbol == 'e');
        CHECK(ast->rhs->lhs->symbol == 'f');
    }
    {
        const ExprAST ast = parse("q^2*k^-3");
        REQUIRE(ast->kind == ExprNode::Kind::mul);
        CHECK(ast->lhs->kind == ExprNode::Kind::pow);
        CHECK(ast->lhs->exponent == 2);
        CHECK(ast->rhs->kind == ExprNode::Kind::pow);
        CHECK(ast->rhs->exponent == -3);
        CHECK(ast->rhs->lhs->symbol == 'k');
    }
    {
        // unary minus binds tighter than '*' but looser than '^'
        const ExprAST ast = parse("-e^2");
        REQUIRE(ast->kind == ExprNode::Kind::neg);
        CHECK(ast->lhs->kind == ExprNode::Kind::pow);
    }
}

TEST_CASE("lowering to normal form") {
    auto F = ScalarField::make_generic();
    // e f + f e = (k - k^{-1}) / (q - q^{-1})
    const AlgebraElement lhs = parse_element("e*f + f*e", F);
    const AlgebraElement rhs = parse_element("(k - k^-1)/(q - q^-1)", F);
    CHECK(lhs == rhs);

    CHECK(parse_element("1", F) == AlgebraElement::one(F));

    // the Scasimir written out in the expression language
    const AlgebraElement s_text =
        parse_element("s*k - s^-1*k^-1 - (s+s^-1)*(q-q^-1)*f*e", F);
    CHECK(s_text == scasimir(F));

    // q and s lower to the field constants in root mode; z is the generator
    auto R = ScalarField::make_root(3);
    CHECK(parse_element("q", R) == AlgebraElement::from_scalar(R, R->q()));
    CHECK(parse_element("z^4", R) == AlgebraElement::from_scalar(R, R->q()));
    CHECK(parse_element("s - z^2", R).is_zero());
}

TEST_CASE("parse and lowering errors carry byte offsets") {
    auto check_offset = [](const std::string& text, long expected_offset) {
        try {
            (void)parse(text);
            FAIL("expected a parse error for: " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
            CHECK(e.offset() == expected_offset);
        }
    };
    check_offset("e*", 2);
    check_offset("e f", 2);     // implicit multiplication is rejected
    check_offset("(e", 2);
    check_offset("e^f", 2);     // non-integer exponent
    check_offset("e @ f", 2);
    check_offset("e^(2)", 2);   // exponents are bare integer literals

    auto F = ScalarField::make_generic();
    CHECK_THROWS_AS((void)parse_element("e^-1", F), Error);
    CHECK_THROWS_AS((void)parse_element("f^-2", F), Error);
    CHECK_THROWS_AS((void)parse_element("e/f", F), Error);
    CHECK_THROWS_AS((void)parse_element("1/(q - q)", F), Error);
    CHECK_THROWS_AS((void)parse_element("z", F), Error);  // root mode only

    // k and scaled k-powers may be inverted
    CHECK(parse_element("(2*k^2)^-1", F) == parse_element("1/2 * k^-2", F));
}

TEST_CASE("golden corpus parses and lowers") {
    std::ifstream in(std::string(QOSP_FIXTURES_DIR) + "/expressions.txt");
    REQUIRE(in.good());
    auto F = ScalarField::make_generic();
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++count;
        CAPTURE(line);
        CHECK_NOTHROW((void)parse_element(line, F));
    }
    CHECK(count == 30);
}

TEST_CASE("round-trip: print then parse") {
    for (auto F : {ScalarField::make_generic(), ScalarField::make_root(3),
                   ScalarField::make_root(6)}) {
        testing::ElementSampler sampler(F, 77);
        for (int i = 0; i < 25; ++i) {
            const AlgebraElement x = sampler.random_element(3, 2, 3);
            const std::string text = to_text(x);
            CAPTURE(text);
            CHECK(parse_element(text, F) == x);
        }
        // distinguished elements
        CHECK(parse_element(to_text(scasimir(F)), F) == scasimir(F));
        CHECK(parse_element(to_text(casimir(F)), F) == casimir(F));
        CHECK(parse_element(to_text(AlgebraElement::zero(F)), F).is_zero());
    }
}
