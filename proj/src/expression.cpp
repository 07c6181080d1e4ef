#include "lginv/expression.hpp"

#include <cctype>
#include <vector>

namespace lginv {

namespace {

enum class TokKind { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;  // 1-based position of the first character
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (at_end()) {
                out.push_back({TokKind::end, "", pos() + 1});
                return out;
            }
            char c = src_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(lex_number());
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(lex_ident());
            } else {
                std::size_t p = pos() + 1;
                switch (c) {
                    case '+': out.push_back({TokKind::plus, "+", p}); break;
                    case '-': out.push_back({TokKind::minus, "-", p}); break;
                    case '*': out.push_back({TokKind::star, "*", p}); break;
                    case '^': out.push_back({TokKind::caret, "^", p}); break;
                    case '(': out.push_back({TokKind::lparen, "(", p}); break;
                    case ')': out.push_back({TokKind::rparen, ")", p}); break;
                    default:
                        throw ExpressionError(std::string("unexpected character '") + c + "'", p);
                }
                ++i_;
            }
        }
    }

private:
    bool at_end() const { return i_ >= src_.size(); }
    std::size_t pos() const { return i_; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    }

    Token lex_number() {
        std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
        if (!at_end() && src_[i_] == '/') {
            std::size_t slash = i_;
            ++i_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[i_])))
                throw ExpressionError("malformed rational literal", slash + 1);
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
        }
        return {TokKind::number, std::string(src_.substr(start, i_ - start)), start + 1};
    }

    Token lex_ident() {
        std::size_t start = i_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(src_[i_]))) ++i_;
        return {TokKind::ident, std::string(src_.substr(start, i_ - start)), start + 1};
    }

    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t var_count)
        : tokens_(std::move(tokens)), var_count_(var_count) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        expect(TokKind::end, "unexpected trailing input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[i_]; }
    const Token& advance() { return tokens_[i_++]; }
    bool match(TokKind k) {
        if (peek().kind != k) return false;
        ++i_;
        return true;
    }
    void expect(TokKind k, const std::string& msg) {
        if (peek().kind != k) throw ExpressionError(msg, peek().pos);
        ++i_;
    }

    static ExprPtr make(ExprNode::Kind kind) {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        return n;
    }

    static ExprPtr binary(ExprNode::Kind kind, ExprPtr lhs, ExprPtr rhs) {
        ExprPtr n = make(kind);
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (true) {
            if (match(TokKind::plus))
                lhs = binary(ExprNode::Kind::add, std::move(lhs), parse_term());
            else if (match(TokKind::minus))
                lhs = binary(ExprNode::Kind::sub, std::move(lhs), parse_term());
            else
                return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (match(TokKind::star))
            lhs = binary(ExprNode::Kind::mul, std::move(lhs), parse_factor());
        return lhs;
    }

    ExprPtr parse_factor() {
        if (match(TokKind::minus)) {
            ExprPtr n = make(ExprNode::Kind::neg);
            n->lhs = parse_factor();
            return n;
        }
        ExprPtr base = parse_atom();
        if (match(TokKind::caret)) {
            const Token& t = peek();
            if (t.kind != TokKind::number || t.text.find('/') != std::string::npos)
                throw ExpressionError("expected a nonnegative integer exponent", t.pos);
            advance();
            ExprPtr n = make(ExprNode::Kind::pow);
            try {
                n->exponent = std::stoul(t.text);
            } catch (const std::out_of_range&) {
                throw ExpressionError("exponent out of range", t.pos);
            }
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::number: {
                advance();
                ExprPtr n = make(ExprNode::Kind::literal);
                n->value = Rational::from_string(t.text);
                return n;
            }
            case TokKind::ident:
                return parse_ident();
            case TokKind::lparen: {
                advance();
                ExprPtr inner = parse_expr();
                expect(TokKind::rparen, "expected ')'");
                return inner;
            }
            default:
                throw ExpressionError("expected a value", t.pos);
        }
    }

    ExprPtr parse_ident() {
        const Token& t = advance();
        if (t.text == "inv" || t.text == "exp") {
            expect(TokKind::lparen, "expected '(' after '" + t.text + "'");
            ExprPtr inner = parse_expr();
            expect(TokKind::rparen, "expected ')'");
            ExprPtr n = make(t.text == "inv" ? ExprNode::Kind::inv : ExprNode::Kind::exp);
            n->lhs = std::move(inner);
            return n;
        }
        if (t.text.size() >= 2 && t.text[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < t.text.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
            if (digits) {
                unsigned long idx = 0;
                try {
                    idx = std::stoul(t.text.substr(1));
                } catch (const std::out_of_range&) {
                    throw ExpressionError("variable index out of range", t.pos);
                }
                if (idx == 0)
                    throw ExpressionError("variable indices start at x1", t.pos);
                if (idx > var_count_)
                    throw ExpressionError("variable " + t.text + " exceeds the variable count " +
                                              std::to_string(var_count_),
                                          t.pos);
                ExprPtr n = make(ExprNode::Kind::variable);
                n->var = idx - 1;
                return n;
            }
        }
        throw ExpressionError("unknown identifier '" + t.text + "'", t.pos);
    }

    std::vector<Token> tokens_;
    std::size_t var_count_;
    std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view src, std::size_t var_count) {
    return Parser(Lexer(src).run(), var_count).run();
}

TruncatedSeries evaluate(const ExprNode& node, std::size_t var_count, unsigned degree_cap) {
    switch (node.kind) {
        case ExprNode::Kind::literal:
            return TruncatedSeries::constant(var_count, degree_cap, node.value);
        case ExprNode::Kind::variable:
            return TruncatedSeries::variable(var_count, degree_cap, node.var);
        case ExprNode::Kind::add:
            return evaluate(*node.lhs, var_count, degree_cap) +
                   evaluate(*node.rhs, var_count, degree_cap);
        case ExprNode::Kind::sub:
            return evaluate(*node.lhs, var_count, degree_cap) -
                   evaluate(*node.rhs, var_count, degree_cap);
        case ExprNode::Kind::mul:
            return evaluate(*node.lhs, var_count, degree_cap) *
                   evaluate(*node.rhs, var_count, degree_cap);
        case ExprNode::Kind::neg:
            return -evaluate(*node.lhs, var_count, degree_cap);
        case ExprNode::Kind::pow:
            return evaluate(*node.lhs, var_count, degree_cap).pow(node.exponent);
        case ExprNode::Kind::inv:
            return evaluate(*node.lhs, var_count, degree_cap).invert_unit();
        case ExprNode::Kind::exp:
            return evaluate(*node.lhs, var_count, degree_cap).exp();
    }
    throw std::logic_error("unreachable expression node kind");
}

}  // namespace lginv
