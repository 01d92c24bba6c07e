#include "qosp/exprparse.hpp"

#include <cctype>

namespace qosp {

namespace {

struct Token {
    enum class Kind { integer, symbol, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    size_t offset;
    mpz_class value;  // integer
    char symbol = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        cur_.offset = pos_;
        if (pos_ >= text_.size()) {
            cur_.kind = Token::Kind::end;
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': cur_.kind = Token::Kind::plus; ++pos_; return;
            case '-': cur_.kind = Token::Kind::minus; ++pos_; return;
            case '*': cur_.kind = Token::Kind::star; ++pos_; return;
            case '/': cur_.kind = Token::Kind::slash; ++pos_; return;
            case '^': cur_.kind = Token::Kind::caret; ++pos_; return;
            case '(': cur_.kind = Token::Kind::lparen; ++pos_; return;
            case ')': cur_.kind = Token::Kind::rparen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            cur_.kind = Token::Kind::integer;
            cur_.value = mpz_class(text_.substr(start, pos_ - start));
            return;
        }
        if (c == 'e' || c == 'f' || c == 'k' || c == 'q' || c == 's' || c == 'z') {
            cur_.kind = Token::Kind::symbol;
            cur_.symbol = c;
            ++pos_;
            return;
        }
        throw Error(ErrorKind::parse,
                    "unexpected character '" + std::string(1, c) + "' at byte " +
                        std::to_string(pos_),
                    static_cast<long>(pos_));
    }

    const std::string& text_;
    size_t pos_ = 0;
    Token cur_{Token::Kind::end, 0};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprAST run() {
        ExprAST ast = parse_expr();
        if (lex_.peek().kind != Token::Kind::end)
            fail("trailing input", lex_.peek().offset);
        return ast;
    }

private:
    [[noreturn]] static void fail(const std::string& what, size_t offset) {
        throw Error(ErrorKind::parse, what + " at byte " + std::to_string(offset),
                    static_cast<long>(offset));
    }

    static ExprAST node(ExprNode::Kind kind, size_t offset) {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->offset = offset;
        return n;
    }

    ExprAST parse_expr() {
        ExprAST left = parse_term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Kind::plus && t.kind != Token::Kind::minus) return left;
            Token op = lex_.take();
            ExprAST n = node(op.kind == Token::Kind::plus ? ExprNode::Kind::add
                                                          : ExprNode::Kind::sub,
                             op.offset);
            n->lhs = std::move(left);
            n->rhs = parse_term();
            left = std::move(n);
        }
    }

    ExprAST parse_term() {
        ExprAST left = parse_unary();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Kind::star && t.kind != Token::Kind::slash) return left;
            Token op = lex_.take();
            ExprAST n = node(op.kind == Token::Kind::star ? ExprNode::Kind::mul
                                                          : ExprNode::Kind::div,
                             op.offset);
            n->lhs = std::move(left);
            n->rhs = parse_unary();
            left = std::move(n);
        }
    }

    ExprAST parse_unary() {
        if (lex_.peek().kind == Token::Kind::minus) {
            Token op = lex_.take();
            ExprAST n = node(ExprNode::Kind::neg, op.offset);
            n->lhs = parse_unary();
            return n;
        }
        return parse_pow();
    }

    ExprAST parse_pow() {
        ExprAST base = parse_atom();
        if (lex_.peek().kind != Token::Kind::caret) return base;
        Token caret = lex_.take();
        bool negative = false;
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            negative = true;
        }
        if (lex_.peek().kind != Token::Kind::integer)
            fail("exponent must be an integer literal", lex_.peek().offset);
        Token expo = lex_.take();
        if (!expo.value.fits_slong_p()) fail("exponent out of range", expo.offset);
        ExprAST n = node(ExprNode::Kind::pow, caret.offset);
        n->lhs = std::move(base);
        n->exponent = negative ? -expo.value.get_si() : expo.value.get_si();
        return n;
    }

    ExprAST parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::integer: {
                Token tok = lex_.take();
                ExprAST n = node(ExprNode::Kind::literal, tok.offset);
                n->literal = tok.value;
                return n;
            }
            case Token::Kind::symbol: {
                Token tok = lex_.take();
                ExprAST n = node(ExprNode::Kind::symbol, tok.offset);
                n->symbol = tok.symbol;
                return n;
            }
            case Token::Kind::lparen: {
                lex_.take();
                ExprAST inner = parse_expr();
                if (lex_.peek().kind != Token::Kind::rparen)
                    fail("expected ')'", lex_.peek().offset);
                lex_.take();
                return inner;
            }
            default: fail("expected an atom", t.offset);
        }
    }

    Lexer lex_;
};

[[noreturn]] void lower_fail(const ExprNode& n, const std::string& what) {
    throw Error(ErrorKind::parse, what + " at byte " + std::to_string(n.offset),
                static_cast<long>(n.offset));
}

}  // namespace

ExprAST parse(const std::string& text) { return Parser(text).run(); }

AlgebraElement lower(const ExprNode& n, const FieldPtr& field) {
    switch (n.kind) {
        case ExprNode::Kind::literal:
            return AlgebraElement::from_scalar(field,
                                               field->from_rational(Rational(n.literal)));
        case ExprNode::Kind::symbol:
            switch (n.symbol) {
                case 'e': return generator(GeneratorName::e, field);
                case 'f': return generator(GeneratorName::f, field);
                case 'k': return generator(GeneratorName::k, field);
                case 'q': return AlgebraElement::from_scalar(field, field->q());
                case 's': return AlgebraElement::from_scalar(field, field->q_half());
                case 'z':
                    if (!field->is_root())
                        lower_fail(n, "'z' denotes the root of unity and needs root mode");
                    return AlgebraElement::from_scalar(field, field->root_power(1));
                default: lower_fail(n, "unknown symbol");
            }
        case ExprNode::Kind::neg: return -lower(*n.lhs, field);
        case ExprNode::Kind::add: return lower(*n.lhs, field) + lower(*n.rhs, field);
        case ExprNode::Kind::sub: return lower(*n.lhs, field) - lower(*n.rhs, field);
        case ExprNode::Kind::mul: return lower(*n.lhs, field) * lower(*n.rhs, field);
        case ExprNode::Kind::div: {
            AlgebraElement num = lower(*n.lhs, field);
            AlgebraElement den = lower(*n.rhs, field);
            auto c = den.as_scalar();
            if (!c) lower_fail(n, "division is only defined by scalar subexpressions");
            if (c->is_zero()) throw Error(ErrorKind::arithmetic, "division by zero");
            return c->inverse() * num;
        }
        case ExprNode::Kind::pow: {
            AlgebraElement base = lower(*n.lhs, field);
            if (n.exponent >= 0) return power(base, n.exponent);
            // negative powers: scalars and pure k-monomials only
            if (auto c = base.as_scalar()) {
                if (c->is_zero()) throw Error(ErrorKind::arithmetic, "inverse of zero");
                return AlgebraElement::from_scalar(field, c->pow(n.exponent));
            }
            if (base.term_count() == 1) {
                const auto& [m, coeff] = *base.terms().begin();
                if (m.a == 0 && m.b == 0)
                    return AlgebraElement::monomial_term(field, {0, 0, m.c * n.exponent},
                                                         coeff.pow(n.exponent));
            }
            lower_fail(*n.lhs, "negative powers are limited to k, q, s, z and scalars");
        }
    }
    lower_fail(n, "malformed expression tree");
}

AlgebraElement parse_element(const std::string& text, const FieldPtr& field) {
    ExprAST ast = parse(text);
    return lower(*ast, field);
}

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
    AlgebraElement x = parse_element(text, field);
    auto c = x.as_scalar();
    if (!c) usage_error("expected a scalar expression: " + text);
    return *c;
}

}  // namespace qosp
