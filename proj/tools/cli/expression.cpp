#include "expression.hpp"

#include <cctype>
#include <vector>

namespace windnum::cli {

namespace {

enum class Tok { Int, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s, char variable) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        const char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = k;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            out.push_back({Tok::Int, std::string(s.substr(start, k - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case 'i': kind = Tok::Imag; break;
            default:
                if (c == variable) {
                    kind = Tok::Var;
                } else if (std::isalpha(static_cast<unsigned char>(c))) {
                    throw SyntaxError(std::string("unknown variable '") + c + "' (expected '" + variable + "')", k);
                } else {
                    throw SyntaxError(std::string("unexpected character '") + c + "'", k);
                }
        }
        out.push_back({kind, std::string(1, c), k});
        ++k;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

ExprPtr leaf(NodeKind kind) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    return e;
}

ExprPtr binary(NodeKind kind, ExprPtr l, ExprPtr r) {
    auto e = leaf(kind);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& take() { return toks_[pos_++]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    ExprPtr expr() {
        ExprPtr l = sum();
        if (accept(Tok::Slash)) return binary(NodeKind::Div, std::move(l), sum());
        return l;
    }

    ExprPtr sum() {
        ExprPtr l = term();
        for (;;) {
            if (accept(Tok::Plus)) {
                l = binary(NodeKind::Add, std::move(l), term());
            } else if (accept(Tok::Minus)) {
                l = binary(NodeKind::Sub, std::move(l), term());
            } else {
                return l;
            }
        }
    }

    ExprPtr term() {
        ExprPtr l = factor();
        while (accept(Tok::Star)) l = binary(NodeKind::Mul, std::move(l), factor());
        return l;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!accept(Tok::Caret)) return base;
        const Token& t = peek();
        if (t.kind != Tok::Int) throw SyntaxError("exponent must be a nonnegative integer", t.pos);
        take();
        if (t.text.size() > 4) throw SyntaxError("exponent too large", t.pos);
        auto e = leaf(NodeKind::Pow);
        e->exponent = static_cast<unsigned>(std::stoul(t.text));
        e->lhs = std::move(base);
        return e;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                take();
                auto e = leaf(NodeKind::Number);
                if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
                    take();
                    const Token& den = take();
                    if (den.text.find_first_not_of('0') == std::string::npos) {
                        throw SyntaxError("zero denominator in rational literal", den.pos);
                    }
                    e->number = Rational(mpz_class(t.text, 10), mpz_class(den.text, 10));
                } else {
                    e->number = Rational(mpz_class(t.text, 10));
                }
                return e;
            }
            case Tok::Imag: take(); return leaf(NodeKind::ImaginaryUnit);
            case Tok::Var: take(); return leaf(NodeKind::Variable);
            case Tok::Minus: {
                take();
                auto e = leaf(NodeKind::Neg);
                e->lhs = atom();
                return e;
            }
            case Tok::LParen: {
                take();
                ExprPtr inner = expr();
                if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
                return inner;
            }
            case Tok::End: throw SyntaxError("unexpected end of input", t.pos);
            default: throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Precedence of the grammar level a node is produced by.
int level(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Div: return 0;
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul: return 2;
        case NodeKind::Pow: return 3;
        default: return 4;
    }
}

std::string print_at(const Expr& e, int context, char variable) {
    std::string s;
    switch (e.kind) {
        case NodeKind::Number: s = e.number.to_string(); break;
        case NodeKind::ImaginaryUnit: s = "i"; break;
        case NodeKind::Variable: s = std::string(1, variable); break;
        case NodeKind::Neg: s = "-" + print_at(*e.lhs, 4, variable); break;
        case NodeKind::Add: s = print_at(*e.lhs, 1, variable) + " + " + print_at(*e.rhs, 2, variable); break;
        case NodeKind::Sub: s = print_at(*e.lhs, 1, variable) + " - " + print_at(*e.rhs, 2, variable); break;
        case NodeKind::Mul: s = print_at(*e.lhs, 2, variable) + "*" + print_at(*e.rhs, 3, variable); break;
        case NodeKind::Pow: s = print_at(*e.lhs, 4, variable) + "^" + std::to_string(e.exponent); break;
        case NodeKind::Div: {
            std::string den = print_at(*e.rhs, 1, variable);
            // keep "int/int" from fusing into a rational literal
            if (std::isdigit(static_cast<unsigned char>(den.front()))) den = "(" + den + ")";
            s = print_at(*e.lhs, 1, variable) + "/" + den;
            break;
        }
    }
    return level(e) < context ? "(" + s + ")" : s;
}

} // namespace

bool same_tree(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.number != b.number || a.exponent != b.exponent) return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
    return true;
}

ExprPtr parse_expr(std::string_view text, char variable) {
    return Parser(tokenize(text, variable)).parse_all();
}

std::string print_expr(const Expr& e, char variable) { return print_at(e, 0, variable); }

RationalFunction lower(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Number: return ComplexPoly(GaussianRational(e.number));
        case NodeKind::ImaginaryUnit: return ComplexPoly(GaussianRational::i());
        case NodeKind::Variable: return ComplexPoly::variable();
        case NodeKind::Neg: return RationalFunction() - lower(*e.lhs);
        case NodeKind::Add: return lower(*e.lhs) + lower(*e.rhs);
        case NodeKind::Sub: return lower(*e.lhs) - lower(*e.rhs);
        case NodeKind::Mul: return lower(*e.lhs) * lower(*e.rhs);
        case NodeKind::Pow: return pow(lower(*e.lhs), e.exponent);
        case NodeKind::Div: {
            const RationalFunction den = lower(*e.rhs);
            if (den.is_zero()) throw ZeroDenominator("expression");
            return lower(*e.lhs) / den;
        }
    }
    throw Error("lower: unknown node");
}

RealPoly lower_real(const Expr& e) {
    const RationalFunction f = lower(e);
    if (!f.denominator().is_constant()) throw Error("expected a polynomial, got a rational function");
    const ComplexPoly p = f.numerator() * f.denominator().leading().inverse();
    auto [re, im] = split_re_im(p);
    if (!im.is_zero()) throw Error("expected real coefficients");
    return re;
}

} // namespace windnum::cli
