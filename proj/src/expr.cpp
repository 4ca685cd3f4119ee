#include "eudoxus/expr.hpp"

#include <cctype>
#include <optional>

namespace eudoxus {

ExprPtr make_int_lit(BigInt v) {
    auto e = std::make_unique<ExprNode>();
    e->kind = ExprNode::Kind::IntLit;
    e->int_value = std::move(v);
    return e;
}

ExprPtr make_rat_lit(Rat v) {
    v.canonicalize();
    auto e = std::make_unique<ExprNode>();
    e->kind = ExprNode::Kind::RatLit;
    e->rat_value = std::move(v);
    return e;
}

ExprPtr make_unary(ExprNode::Kind k, ExprPtr operand) {
    auto e = std::make_unique<ExprNode>();
    e->kind = k;
    e->lhs = std::move(operand);
    return e;
}

ExprPtr make_binary(ExprNode::Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_unique<ExprNode>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

ExprPtr clone(const ExprNode& e) {
    auto c = std::make_unique<ExprNode>();
    c->kind = e.kind;
    c->int_value = e.int_value;
    c->rat_value = e.rat_value;
    if (e.lhs) c->lhs = clone(*e.lhs);
    if (e.rhs) c->rhs = clone(*e.rhs);
    return c;
}

bool ast_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::IntLit:
            return a.int_value == b.int_value;
        case ExprNode::Kind::RatLit:
            return a.rat_value == b.rat_value;
        case ExprNode::Kind::Sqrt:
        case ExprNode::Kind::Neg:
            return ast_equal(*a.lhs, *b.lhs);
        default:
            return ast_equal(*a.lhs, *b.lhs) && ast_equal(*a.rhs, *b.rhs);
    }
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr run() {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty input");
        ExprPtr e = expr();
        skip_ws();
        if (!at_end()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

  private:
    static constexpr int kMaxDepth = 4096;

    std::string_view s_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxDepth)
                throw ParseError(p.pos_, "expression nesting too deep");
        }
        ~DepthGuard() { --p.depth_; }
    };

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (at_end() || peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (at_end() || peek() != c)
            throw ParseError(pos_, std::string("expected '") + c + "' " + what);
        ++pos_;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make_binary(ExprNode::Kind::Add, std::move(lhs), term());
            else if (accept('-'))
                lhs = make_binary(ExprNode::Kind::Sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = make_binary(ExprNode::Kind::Mul, std::move(lhs),
                                  factor());
            else if (accept('/'))
                lhs = make_binary(ExprNode::Kind::Div, std::move(lhs),
                                  factor());
            else
                return lhs;
        }
    }

    ExprPtr factor() {
        DepthGuard guard(*this);
        skip_ws();
        if (at_end()) throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (c == '-') {
            ++pos_;
            return make_unary(ExprNode::Kind::Neg, factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return int_or_ratio();
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "to close '('");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() &&
                   std::isalpha(static_cast<unsigned char>(peek())))
                ++pos_;
            std::string_view word = s_.substr(start, pos_ - start);
            if (word != "sqrt")
                throw ParseError(start, "unknown identifier '" +
                                            std::string(word) + "'");
            expect('(', "after 'sqrt'");
            ExprPtr e = expr();
            expect(')', "to close 'sqrt('");
            return make_unary(ExprNode::Kind::Sqrt, std::move(e));
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    // INT, or INT '/' INT as an exact rational literal when the token after
    // '/' is another integer literal; otherwise the '/' is left for term().
    ExprPtr int_or_ratio() {
        BigInt num = integer();
        std::size_t mark = pos_;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            if (!at_end() &&
                std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t den_at = pos_;
                BigInt den = integer();
                if (den == 0)
                    throw ParseError(den_at,
                                     "rational literal with zero denominator");
                return make_rat_lit(make_rat(num, den));
            }
        }
        pos_ = mark;
        return make_int_lit(std::move(num));
    }

    BigInt integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        BigInt v;
        // Base 10 explicitly: auto-detection would read leading zeros as octal.
        v.set_str(std::string(s_.substr(start, pos_ - start)), 10);
        return v;
    }
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_text(const ExprNode& e) {
    switch (e.kind) {
        case ExprNode::Kind::IntLit:
            return e.int_value.get_str();
        case ExprNode::Kind::RatLit:
            return e.rat_value.get_num().get_str() + "/" +
                   e.rat_value.get_den().get_str();
        case ExprNode::Kind::Neg:
            return "-(" + to_text(*e.lhs) + ")";
        case ExprNode::Kind::Sqrt:
            return "sqrt(" + to_text(*e.lhs) + ")";
        case ExprNode::Kind::Add:
            return "(" + to_text(*e.lhs) + " + " + to_text(*e.rhs) + ")";
        case ExprNode::Kind::Sub:
            return "(" + to_text(*e.lhs) + " - " + to_text(*e.rhs) + ")";
        case ExprNode::Kind::Mul:
            return "(" + to_text(*e.lhs) + " * " + to_text(*e.rhs) + ")";
        case ExprNode::Kind::Div: {
            // After an integer-literal dividend, a divisor that renders
            // starting with digits would re-parse as a rational literal;
            // parenthesise it.
            std::string rhs = to_text(*e.rhs);
            if (e.lhs->kind == ExprNode::Kind::IntLit &&
                (e.rhs->kind == ExprNode::Kind::IntLit ||
                 e.rhs->kind == ExprNode::Kind::RatLit))
                rhs = "(" + rhs + ")";
            return "(" + to_text(*e.lhs) + " / " + rhs + ")";
        }
    }
    throw Error("unreachable expression kind");
}

namespace {

// sqrt of a certified-positive real: approximate the operand by a rational
// midpoint, then bisect t^2 <= mid in exact rational arithmetic. With
// lambda <= x and window w = eps * min(1, lambda):
//   |sqrt(mid) - sqrt(x)| <= (w/2) / sqrt(lambda) <= eps/2
// and the bisection contributes another eps/2.
Real sqrt_positive(const Real& v, const Rat& lambda, const Budget& b) {
    Rat lambda_floor = std::min(Rat(1), lambda);
    auto approx = [v, lambda_floor, b](const Rat& eps) -> Rat {
        Rat w = eps * lambda_floor;
        Rat mid = refine(v, w, b).midpoint();
        Rat lo(0);
        Rat hi = std::max(Rat(1), mid);
        while (hi - lo > eps) {
            Rat m = (lo + hi) / 2;
            if (m * m <= mid)
                lo = m;
            else
                hi = m;
        }
        return (lo + hi) / 2;
    };
    return from_oracle(std::move(approx), "sqrt(" + v.label() + ")");
}

Rat positive_enclosure_lower_bound(const Real& x, const Budget& b) {
    // sign(x) was Positive, so a positive enclosure exists within budget;
    // tighten until width <= lo, giving a bound >= x/2.
    const BigInt limit = budget_limit(b);
    std::optional<Rat> best;
    for (BigInt q = 1; q <= limit; q *= 2) {
        Interval i = enclose(x, q);
        if (i.lo > 0) {
            best = i.lo;
            if (i.width() <= i.lo) break;
        }
    }
    if (!best) throw SignUndecided("sqrt: lost positivity within budget");
    return *best;
}

}  // namespace

Real evaluate(const ExprNode& e, const Budget& b) {
    switch (e.kind) {
        case ExprNode::Kind::IntLit:
            return eu_embed(e.int_value);
        case ExprNode::Kind::RatLit:
            return from_rational(e.rat_value);
        case ExprNode::Kind::Neg:
            return neg(evaluate(*e.lhs, b));
        case ExprNode::Kind::Add:
            return add(evaluate(*e.lhs, b), evaluate(*e.rhs, b));
        case ExprNode::Kind::Sub:
            return sub(evaluate(*e.lhs, b), evaluate(*e.rhs, b));
        case ExprNode::Kind::Mul:
            return mul(evaluate(*e.lhs, b), evaluate(*e.rhs, b));
        case ExprNode::Kind::Div:
            return mul(evaluate(*e.lhs, b), recip(evaluate(*e.rhs, b), b));
        case ExprNode::Kind::Sqrt: {
            if (e.lhs->kind == ExprNode::Kind::IntLit) {
                if (e.lhs->int_value < 0)
                    throw DomainError("sqrt: negative integer operand");
                return sqrt_int(e.lhs->int_value);
            }
            Real v = evaluate(*e.lhs, b);
            SignResult s = sign(v, b);
            if (s.negative()) throw DomainError("sqrt: operand is negative");
            if (s.inconclusive())
                throw SignUndecided(
                    "sqrt: operand sign not established within budget "
                    "(enclosure " +
                    s.enclosure.str() + ")");
            return sqrt_positive(v, positive_enclosure_lower_bound(v, b), b);
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace eudoxus
