#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qosp/pbw.hpp"

namespace qosp {

/// AST of the element expression language.
///
/// Grammar, lowest to highest precedence:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | pow
///   pow     := atom ['^' ['-'] integer]
///   atom    := 'e' | 'f' | 'k' | 'q' | 's' | 'z' | integer | '(' expr ')'
///
/// '/' is scalar division only: the divisor must lower to a scalar.
/// 'z' denotes the cyclotomic generator and lowers only in root mode.
/// Whitespace is insignificant; implicit multiplication is a syntax error.
struct ExprNode {
    enum class Kind { literal, symbol, neg, add, sub, mul, div, pow };

    Kind kind;
    size_t offset = 0;                  // byte offset in the input
    mpz_class literal;                  // Kind::literal
    char symbol = 0;                    // Kind::symbol: e f k q s z
    long exponent = 0;                  // Kind::pow
    std::unique_ptr<ExprNode> lhs, rhs; // children (lhs only for neg/pow)
};

using ExprAST = std::unique_ptr<ExprNode>;

/// Parse or throw Error(ErrorKind::parse) carrying the byte offset.
ExprAST parse(const std::string& text);

/// Lower an AST to a normal-form element of the given field.
AlgebraElement lower(const ExprNode& ast, const FieldPtr& field);

/// parse + lower.
AlgebraElement parse_element(const std::string& text, const FieldPtr& field);

/// parse + lower, requiring a pure scalar (coefficient of the identity).
Scalar parse_scalar(const std::string& text, const FieldPtr& field);

}  // namespace qosp
