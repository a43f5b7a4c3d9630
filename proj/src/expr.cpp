#include "ringlab/expr.hpp"

#include <algorithm>
#include <cctype>

namespace ringlab {

ParseError::ParseError(std::size_t position_, std::string expected_, const std::string& got)
    : Error("parse error at position " + std::to_string(position_) + ": expected " + expected_ +
            ", got " + got),
      position(position_),
      expected(std::move(expected_)) {}

UnknownName::UnknownName(std::string name_, std::size_t position_)
    : Error("unknown construction name '" + name_ + "' at position " +
            std::to_string(position_)),
      name(std::move(name_)),
      position(position_) {}

ArityError::ArityError(std::size_t position_, const std::string& detail)
    : Error("arity error at position " + std::to_string(position_) + ": " + detail),
      position(position_) {}

EvalError::EvalError(SourceSpan span_, const std::string& detail)
    : Error("evaluation failed at [" + std::to_string(span_.begin) + "," +
            std::to_string(span_.end) + "): " + detail),
      span(span_) {}

const char* expr_kind_name(ExprKind k) {
    switch (k) {
        case ExprKind::Z: return "Z";
        case ExprKind::GF: return "GF";
        case ExprKind::M: return "M";
        case ExprKind::T: return "T";
        case ExprKind::Prod: return "Prod";
        case ExprKind::TrivExt: return "TrivExt";
        case ExprKind::Quot: return "Quot";
        case ExprKind::Corner: return "Corner";
        case ExprKind::GR: return "GR";
        case ExprKind::C: return "C";
        case ExprKind::GProd: return "GProd";
        case ExprKind::S3: return "S3";
    }
    return "?";
}

bool ExprAst::structurally_equal(const ExprAst& o) const {
    if (kind != o.kind || ints != o.ints || elems != o.elems ||
        children.size() != o.children.size())
        return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i].structurally_equal(o.children[i])) return false;
    return true;
}

namespace {

struct Token {
    enum Type { Name, Int, LParen, RParen, Comma, LBracket, RBracket, End } type;
    std::string text;
    long long value = 0;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.type = Token::End;
            tok_.text = "<end>";
            return;
        }
        char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[j])))
                ++j;
            tok_.type = Token::Name;
            tok_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            long long v = 0;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
                v = v * 10 + (text_[j] - '0');
                if (v > 1'000'000'000LL)
                    throw ParseError(i_, "a smaller integer", text_.substr(i_, j - i_ + 1));
                ++j;
            }
            tok_.type = Token::Int;
            tok_.text = text_.substr(i_, j - i_);
            tok_.value = v;
            i_ = j;
            return;
        }
        switch (c) {
            case '(': tok_.type = Token::LParen; break;
            case ')': tok_.type = Token::RParen; break;
            case ',': tok_.type = Token::Comma; break;
            case '[': tok_.type = Token::LBracket; break;
            case ']': tok_.type = Token::RBracket; break;
            default:
                throw ParseError(i_, "a name, integer, '(', ')', ',', '[' or ']'",
                                 std::string(1, c));
        }
        tok_.text = std::string(1, c);
        ++i_;
    }

    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool lookup_kind(const std::string& name, ExprKind& out) {
    static const std::pair<const char*, ExprKind> table[] = {
        {"z", ExprKind::Z},           {"gf", ExprKind::GF},
        {"m", ExprKind::M},           {"t", ExprKind::T},
        {"prod", ExprKind::Prod},     {"trivext", ExprKind::TrivExt},
        {"quot", ExprKind::Quot},     {"corner", ExprKind::Corner},
        {"gr", ExprKind::GR},         {"c", ExprKind::C},
        {"gprod", ExprKind::GProd},   {"s3", ExprKind::S3},
    };
    std::string n = lower(name);
    for (const auto& [key, kind] : table)
        if (n == key) {
            out = kind;
            return true;
        }
    return false;
}

struct Arg {
    enum Type { IntArg, ExprArg, ListArg } type;
    long long value = 0;
    ExprAst expr;
    std::vector<elem_t> list;
    std::size_t pos = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprAst parse_toplevel() {
        ExprAst ast = parse_expression();
        if (lex_.peek().type != Token::End)
            throw ParseError(lex_.peek().pos, "end of input", lex_.peek().text);
        return ast;
    }

private:
    ExprAst parse_expression() {
        Token name = lex_.take();
        if (name.type != Token::Name)
            throw ParseError(name.pos, "a construction name", name.text);
        ExprKind kind;
        if (!lookup_kind(name.text, kind)) throw UnknownName(name.text, name.pos);

        std::vector<Arg> args;
        std::size_t end = name.pos + name.text.size();
        if (lex_.peek().type == Token::LParen) {
            lex_.take();
            if (lex_.peek().type == Token::RParen)
                throw ParseError(lex_.peek().pos, "an argument", ")");
            args.push_back(parse_arg());
            while (lex_.peek().type == Token::Comma) {
                lex_.take();
                args.push_back(parse_arg());
            }
            Token close = lex_.take();
            if (close.type != Token::RParen)
                throw ParseError(close.pos, "')' or ','", close.text);
            end = close.pos + 1;
        }
        return assemble(kind, std::move(args), {name.pos, end});
    }

    Arg parse_arg() {
        const Token& t = lex_.peek();
        Arg a;
        a.pos = t.pos;
        if (t.type == Token::Int) {
            a.type = Arg::IntArg;
            a.value = lex_.take().value;
            return a;
        }
        if (t.type == Token::LBracket) {
            lex_.take();
            a.type = Arg::ListArg;
            if (lex_.peek().type != Token::RBracket) {
                for (;;) {
                    Token v = lex_.take();
                    if (v.type != Token::Int)
                        throw ParseError(v.pos, "an element index", v.text);
                    if (v.value > static_cast<long long>(kHardOrderCap))
                        throw ParseError(v.pos, "an element index within the order cap", v.text);
                    a.list.push_back(static_cast<elem_t>(v.value));
                    if (lex_.peek().type != Token::Comma) break;
                    lex_.take();
                }
            }
            Token close = lex_.take();
            if (close.type != Token::RBracket)
                throw ParseError(close.pos, "']' or ','", close.text);
            return a;
        }
        if (t.type == Token::Name) {
            a.type = Arg::ExprArg;
            a.expr = parse_expression();
            return a;
        }
        throw ParseError(t.pos, "an integer, sub-expression or '[' list", t.text);
    }

    static long long int_arg(const Arg& a, const char* what) {
        if (a.type != Arg::IntArg)
            throw ArityError(a.pos, std::string("expected an integer for ") + what);
        return a.value;
    }
    static ExprAst expr_arg(Arg& a, const char* what) {
        if (a.type != Arg::ExprArg)
            throw ArityError(a.pos, std::string("expected a sub-expression for ") + what);
        return std::move(a.expr);
    }

    static ExprAst assemble(ExprKind kind, std::vector<Arg> args, SourceSpan span) {
        ExprAst ast;
        ast.kind = kind;
        ast.span = span;
        auto need = [&](std::size_t k) {
            if (args.size() != k)
                throw ArityError(span.begin, std::string(expr_kind_name(kind)) + " takes " +
                                                 std::to_string(k) + " argument(s), got " +
                                                 std::to_string(args.size()));
        };
        switch (kind) {
            case ExprKind::Z:
            case ExprKind::C:
                need(1);
                ast.ints.push_back(int_arg(args[0], "the order"));
                break;
            case ExprKind::GF:
                need(2);
                ast.ints.push_back(int_arg(args[0], "the prime"));
                ast.ints.push_back(int_arg(args[1], "the exponent"));
                break;
            case ExprKind::M:
            case ExprKind::T:
                need(2);
                ast.ints.push_back(int_arg(args[0], "the matrix size"));
                ast.children.push_back(expr_arg(args[1], "the base ring"));
                break;
            case ExprKind::Prod:
            case ExprKind::GProd:
                if (args.size() < 2)
                    throw ArityError(span.begin,
                                     std::string(expr_kind_name(kind)) +
                                         " takes at least 2 factors");
                for (auto& a : args) ast.children.push_back(expr_arg(a, "a factor"));
                break;
            case ExprKind::TrivExt:
                need(1);
                ast.children.push_back(expr_arg(args[0], "the base ring"));
                break;
            case ExprKind::Quot:
                need(2);
                ast.children.push_back(expr_arg(args[0], "the base ring"));
                if (args[1].type != Arg::ListArg)
                    throw ArityError(args[1].pos, "Quot takes a [..] generator list");
                ast.elems = std::move(args[1].list);
                break;
            case ExprKind::Corner:
                need(2);
                ast.children.push_back(expr_arg(args[0], "the base ring"));
                ast.elems.push_back(static_cast<elem_t>(int_arg(args[1], "the idempotent index")));
                break;
            case ExprKind::GR:
                need(2);
                ast.children.push_back(expr_arg(args[0], "the coefficient ring"));
                ast.children.push_back(expr_arg(args[1], "the group"));
                break;
            case ExprKind::S3:
                need(0);
                break;
        }
        return ast;
    }

    Lexer lex_;
};

}  // namespace

ExprAst parse_expr(const std::string& text) {
    if (text.size() > 4096) throw ParseError(4096, "input of at most 4096 characters", "...");
    Parser p(text);
    return p.parse_toplevel();
}

std::string print_expr(const ExprAst& ast) {
    std::string out = expr_kind_name(ast.kind);
    switch (ast.kind) {
        case ExprKind::S3: return out;
        case ExprKind::Z:
        case ExprKind::C:
            return out + "(" + std::to_string(ast.ints[0]) + ")";
        case ExprKind::GF:
            return out + "(" + std::to_string(ast.ints[0]) + "," + std::to_string(ast.ints[1]) +
                   ")";
        case ExprKind::M:
        case ExprKind::T:
            return out + "(" + std::to_string(ast.ints[0]) + "," + print_expr(ast.children[0]) +
                   ")";
        case ExprKind::Prod:
        case ExprKind::GProd: {
            out += "(";
            for (std::size_t i = 0; i < ast.children.size(); ++i)
                out += (i ? "," : "") + print_expr(ast.children[i]);
            return out + ")";
        }
        case ExprKind::TrivExt:
            return out + "(" + print_expr(ast.children[0]) + ")";
        case ExprKind::Quot: {
            out += "(" + print_expr(ast.children[0]) + ",[";
            for (std::size_t i = 0; i < ast.elems.size(); ++i)
                out += (i ? "," : "") + std::to_string(ast.elems[i]);
            return out + "])";
        }
        case ExprKind::Corner:
            return out + "(" + print_expr(ast.children[0]) + "," +
                   std::to_string(ast.elems[0]) + ")";
        case ExprKind::GR:
            return out + "(" + print_expr(ast.children[0]) + "," + print_expr(ast.children[1]) +
                   ")";
    }
    return out;
}

namespace {

FiniteRing ring_of(Engine& engine, const ExprAst& child) {
    Evaluated v = eval_expr(engine, child);
    if (auto* r = std::get_if<FiniteRing>(&v)) return *r;
    throw EvalError(child.span, "expected a ring, got a group");
}

FiniteGroup group_of(Engine& engine, const ExprAst& child) {
    Evaluated v = eval_expr(engine, child);
    if (auto* g = std::get_if<FiniteGroup>(&v)) return *g;
    throw EvalError(child.span, "expected a group, got a ring");
}

long long positive_int(const ExprAst& ast, long long v, const char* what) {
    if (v < 1) throw EvalError(ast.span, std::string(what) + " must be >= 1");
    return v;
}

}  // namespace

Evaluated eval_expr(Engine& engine, const ExprAst& ast) {
    const RingLimits& lim = engine.limits();
    const std::string canonical = print_expr(ast);
    try {
        switch (ast.kind) {
            case ExprKind::Z:
                return ring_zn(static_cast<std::size_t>(
                                   positive_int(ast, ast.ints[0], "Z order")),
                               lim)
                    .with_label(canonical);
            case ExprKind::GF:
                return ring_gf(static_cast<std::size_t>(positive_int(ast, ast.ints[0], "prime")),
                               static_cast<std::size_t>(
                                   positive_int(ast, ast.ints[1], "exponent")),
                               lim)
                    .with_label(canonical);
            case ExprKind::M:
                return matrix_ring(ring_of(engine, ast.children[0]),
                                   static_cast<std::size_t>(
                                       positive_int(ast, ast.ints[0], "matrix size")),
                                   lim)
                    .with_label(canonical);
            case ExprKind::T:
                return upper_triangular(ring_of(engine, ast.children[0]),
                                        static_cast<std::size_t>(
                                            positive_int(ast, ast.ints[0], "matrix size")),
                                        lim)
                    .with_label(canonical);
            case ExprKind::TrivExt:
                return trivial_extension(ring_of(engine, ast.children[0]), lim)
                    .with_label(canonical);
            case ExprKind::Prod: {
                // rings or groups, decided by the first factor
                Evaluated first = eval_expr(engine, ast.children[0]);
                if (std::holds_alternative<FiniteRing>(first)) {
                    std::vector<FiniteRing> factors{std::get<FiniteRing>(first)};
                    for (std::size_t i = 1; i < ast.children.size(); ++i)
                        factors.push_back(ring_of(engine, ast.children[i]));
                    return direct_product(factors, lim).ring.with_label(canonical);
                }
                FiniteGroup acc = std::get<FiniteGroup>(first);
                for (std::size_t i = 1; i < ast.children.size(); ++i)
                    acc = group_product(acc, group_of(engine, ast.children[i]), lim);
                return acc.with_label(canonical);
            }
            case ExprKind::GProd: {
                FiniteGroup acc = group_of(engine, ast.children[0]);
                for (std::size_t i = 1; i < ast.children.size(); ++i)
                    acc = group_product(acc, group_of(engine, ast.children[i]), lim);
                return acc.with_label(canonical);
            }
            case ExprKind::Quot: {
                FiniteRing base = ring_of(engine, ast.children[0]);
                for (elem_t g : ast.elems)
                    if (g >= base.order())
                        throw EvalError(ast.span, "generator index out of range");
                Ideal ideal =
                    ideal_generated(base, make_elem_set(base, ast.elems));
                return quotient(base, ideal, lim).ring.with_label(canonical);
            }
            case ExprKind::Corner: {
                FiniteRing base = ring_of(engine, ast.children[0]);
                return corner(base, ast.elems[0], lim).with_label(canonical);
            }
            case ExprKind::GR: {
                FiniteRing base = ring_of(engine, ast.children[0]);
                FiniteGroup grp = group_of(engine, ast.children[1]);
                GroupRing rg = group_ring(base, grp, lim);
                rg.ring = rg.ring.with_label(canonical);
                engine.register_group_ring(rg);
                return rg.ring;
            }
            case ExprKind::C:
                return cyclic_group(static_cast<std::size_t>(
                                        positive_int(ast, ast.ints[0], "C order")),
                                    lim)
                    .with_label(canonical);
            case ExprKind::S3:
                return symmetric_group_3(lim).with_label(canonical);
        }
    } catch (const EvalError&) {
        throw;
    } catch (const Error& e) {
        throw EvalError(ast.span, e.what());
    }
    throw EvalError(ast.span, "unhandled expression kind");
}

FiniteRing eval_ring(Engine& engine, const std::string& text) {
    ExprAst ast = parse_expr(text);
    Evaluated v = eval_expr(engine, ast);
    if (auto* r = std::get_if<FiniteRing>(&v)) return *r;
    throw EvalError(ast.span, "expression names a group, not a ring");
}

FiniteGroup eval_group(Engine& engine, const std::string& text) {
    ExprAst ast = parse_expr(text);
    Evaluated v = eval_expr(engine, ast);
    if (auto* g = std::get_if<FiniteGroup>(&v)) return *g;
    throw EvalError(ast.span, "expression names a ring, not a group");
}

}  // namespace ringlab
