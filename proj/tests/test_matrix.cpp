#include <doctest.h>

#include "qosp/matrix.hpp"
#include "test_helpers.hpp"

using namespace qosp;

namespace {

ExactMatrix random_matrix(testing::ElementSampler& sampler, const FieldPtr& field, int n) {
    ExactMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = sampler.random_scalar();
    return m;
}

}  // namespace

TEST_CASE("inverse and rank") {
    auto field = ScalarField::make_root(3);
    testing::ElementSampler sampler(field, 99);
    for (int trial = 0; trial < 5; ++trial) {
        ExactMatrix m = random_matrix(sampler, field, 4);
        if (m.rank() < 4) continue;
        CHECK(m * m.inverse() == ExactMatrix::identity(field, 4));
        CHECK(m.inverse() * m == ExactMatrix::identity(field, 4));
    }
    ExactMatrix singular(field, 2, 2);
    singular.at(0, 0) = field->one();
    singular.at(1, 0) = field->one();
    CHECK(singular.rank() == 1);
    CHECK_THROWS_AS((void)singular.inverse(), Error);
}

TEST_CASE("nullspace") {
    auto field = ScalarField::make_root(3);
    ExactMatrix m(field, 2, 3);
    // x + y + z = 0; y - z = 0
    m.at(0, 0) = field->one();
    m.at(0, 1) = field->one();
    m.at(0, 2) = field->one();
    m.at(1, 1) = field->one();
    m.at(1, 2) = -field->one();
    const ExactMatrix ns = m.nullspace();
    CHECK(ns.cols() == 1);
    CHECK((m * ns).is_zero());

    // a full-rank square matrix has trivial kernel
    CHECK(ExactMatrix::identity(field, 3).nullspace().cols() == 0);
}

TEST_CASE("solve") {
    auto field = ScalarField::make_root(3);
    testing::ElementSampler sampler(field, 5);
    ExactMatrix b(field, 3, 2);  // full column rank basis
    b.at(0, 0) = field->one();
    b.at(1, 1) = field->one();
    b.at(2, 0) = field->q();
    b.at(2, 1) = field->one();
    ExactMatrix x(field, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) x.at(i, j) = sampler.random_scalar();
    CHECK(b.solve(b * x) == x);
}

TEST_CASE("scalar detection and power") {
    auto field = ScalarField::make_root(4);
    ExactMatrix id = ExactMatrix::identity(field, 3);
    CHECK(id.as_scalar() == field->one());
    CHECK((field->q() * id).as_scalar() == field->q());
    ExactMatrix m = id;
    m.at(0, 1) = field->one();
    CHECK_FALSE(m.as_scalar().has_value());
    CHECK(m.pow(0) == id);
    CHECK(m.pow(3) * m.pow(-3) == id);
}

TEST_CASE("span basis") {
    auto field = ScalarField::make_root(3);
    SpanBasis span(field, 3);
    CHECK(span.insert({field->one(), field->zero(), field->one()}));
    CHECK(span.insert({field->zero(), field->one(), field->zero()}));
    // dependent vector
    CHECK_FALSE(span.insert({field->one(), field->one(), field->one()}));
    CHECK(span.size() == 2);
    CHECK(span.insert({field->zero(), field->zero(), field->q()}));
    CHECK(span.size() == 3);
}
