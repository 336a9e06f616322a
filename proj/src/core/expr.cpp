#include "core/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "core/errors.hpp"

namespace entro {

namespace {

enum class Tok {
    number, ident, lparen, rparen, comma, semicolon, bar,
    plus, minus, star, rel_ge, rel_le, rel_eq, end
};

struct Token {
    Tok type;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // integer ["/" positive-integer]
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < n && text[i] == '/' && i + 1 < n &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            out.push_back({Tok::number, text.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({Tok::ident, text.substr(start, i - start), start});
            continue;
        }
        switch (c) {
            case '(': out.push_back({Tok::lparen, "(", start}); ++i; break;
            case ')': out.push_back({Tok::rparen, ")", start}); ++i; break;
            case ',': out.push_back({Tok::comma, ",", start}); ++i; break;
            case ';': out.push_back({Tok::semicolon, ";", start}); ++i; break;
            case '|': out.push_back({Tok::bar, "|", start}); ++i; break;
            case '+': out.push_back({Tok::plus, "+", start}); ++i; break;
            case '-': out.push_back({Tok::minus, "-", start}); ++i; break;
            case '*': out.push_back({Tok::star, "*", start}); ++i; break;
            case '>':
            case '<':
                if (i + 1 >= n || text[i + 1] != '=')
                    throw ParseError(std::string("expected '") + c + "='", start);
                out.push_back({c == '>' ? Tok::rel_ge : Tok::rel_le,
                               text.substr(start, 2), start});
                i += 2;
                break;
            case '=': out.push_back({Tok::rel_eq, "=", start}); ++i; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::end, "", n});
    return out;
}

// Identifiers as written in the input; variable resolution happens after the
// whole expression is parsed.
struct RawTerm {
    Rat coefficient;
    TermKind kind;
    std::vector<std::string> j, k, l;
    std::size_t pos;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    std::vector<RawTerm> parse_expr() {
        std::vector<RawTerm> terms;
        Rat sign = 1;
        if (peek().type == Tok::plus || peek().type == Tok::minus) {
            sign = peek().type == Tok::minus ? -1 : 1;
            next();
        }
        parse_term(terms, sign);
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            sign = peek().type == Tok::minus ? -1 : 1;
            next();
            parse_term(terms, sign);
        }
        return terms;
    }

    bool at_relation() const {
        Tok t = peek().type;
        return t == Tok::rel_ge || t == Tok::rel_le || t == Tok::rel_eq;
    }

    Relation parse_relation() {
        Token t = next();
        switch (t.type) {
            case Tok::rel_ge: return Relation::ge;
            case Tok::rel_le: return Relation::le;
            case Tok::rel_eq: return Relation::eq;
            default: throw ParseError("expected '>=', '<=' or '='", t.pos);
        }
    }

    void expect_end() {
        if (peek().type != Tok::end)
            throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
    }

    const Token& peek() const { return tokens_[cursor_]; }

  private:
    Token next() { return tokens_[cursor_++]; }

    void expect(Tok t, const char* what) {
        if (peek().type != t)
            throw ParseError(std::string("expected ") + what + " before '" + peek().text + "'",
                             peek().pos);
        next();
    }

    std::vector<std::string> parse_varlist() {
        std::vector<std::string> names;
        if (peek().type != Tok::ident)
            throw ParseError("expected a variable name", peek().pos);
        names.push_back(next().text);
        while (peek().type == Tok::comma) {
            next();
            if (peek().type != Tok::ident)
                throw ParseError("expected a variable name after ','", peek().pos);
            names.push_back(next().text);
        }
        return names;
    }

    void parse_term(std::vector<RawTerm>& terms, const Rat& sign) {
        Rat coefficient = 1;
        const std::size_t term_pos = peek().pos;
        if (peek().type == Tok::number) {
            coefficient = parse_rat(next().text);
            if (peek().type == Tok::star) next();
            else if (peek().type != Tok::ident) {
                // Bare constant: only a zero constant has an entropy reading
                // (the rendered tautology "0 >= 0" must re-parse).
                if (coefficient != 0)
                    throw ParseError("nonzero constant term has no entropy interpretation",
                                     term_pos);
                return;
            }
        }
        RawTerm term;
        term.coefficient = sign * coefficient;
        term.pos = term_pos;
        if (peek().type != Tok::ident || (peek().text != "H" && peek().text != "I"))
            throw ParseError("expected H(...) or I(...)", peek().pos);
        const bool is_mi = peek().text == "I";
        next();
        expect(Tok::lparen, "'('");
        term.j = parse_varlist();
        if (is_mi) {
            expect(Tok::semicolon, "';'");
            term.k = parse_varlist();
            term.kind = TermKind::mutual_info;
        } else {
            term.kind = TermKind::joint_entropy;
        }
        if (peek().type == Tok::bar) {
            next();
            term.l = parse_varlist();
            if (!is_mi) term.kind = TermKind::conditional_entropy;
        }
        expect(Tok::rparen, "')'");
        terms.push_back(term);
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
};

bool all_alpha(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isalpha(c); });
}

// Juxtaposition rule: "AB" means the variables A and B unless an explicit
// context declares a variable literally named "AB".
std::vector<std::string> resolve_ident(const std::string& ident, const VarContext* ctx,
                                       std::size_t pos) {
    auto split = [&ident]() {
        std::vector<std::string> letters;
        for (char c : ident) letters.emplace_back(1, c);
        return letters;
    };
    if (!ctx) {
        if (ident.size() >= 2 && all_alpha(ident)) return split();
        return {ident};
    }
    if (ctx->has(ident)) return {ident};
    if (ident.size() >= 2 && all_alpha(ident)) {
        auto letters = split();
        if (std::all_of(letters.begin(), letters.end(),
                        [&](const std::string& v) { return ctx->has(v); }))
            return letters;
    }
    throw UnknownVariableError("unknown variable '" + ident + "' at position " +
                               std::to_string(pos));
}

std::vector<std::string> resolve_varlist(const std::vector<std::string>& raw,
                                         const VarContext* ctx, std::size_t pos) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& ident : raw)
        for (auto& v : resolve_ident(ident, ctx, pos))
            if (seen.insert(v).second) out.push_back(std::move(v));
    return out;
}

std::vector<EntropyTerm> resolve_terms(const std::vector<RawTerm>& raw,
                                       const VarContext* ctx) {
    std::vector<EntropyTerm> out;
    out.reserve(raw.size());
    for (const auto& t : raw) {
        EntropyTerm term;
        term.coefficient = t.coefficient;
        term.kind = t.kind;
        term.j = resolve_varlist(t.j, ctx, t.pos);
        term.k = resolve_varlist(t.k, ctx, t.pos);
        term.l = resolve_varlist(t.l, ctx, t.pos);
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

Inequality parse_inequality(const std::string& text, const VarContext* ctx) {
    Parser parser(text);
    std::vector<RawTerm> lhs = parser.parse_expr();
    if (!parser.at_relation())
        throw ParseError("expected '>=', '<=' or '='", parser.peek().pos);
    Inequality out;
    out.rel = parser.parse_relation();
    std::vector<RawTerm> rhs = parser.parse_expr();
    parser.expect_end();
    out.lhs = resolve_terms(lhs, ctx);
    out.rhs = resolve_terms(rhs, ctx);
    return out;
}

std::vector<EntropyTerm> parse_expression(const std::string& text, const VarContext* ctx) {
    Parser parser(text);
    std::vector<RawTerm> terms = parser.parse_expr();
    parser.expect_end();
    return resolve_terms(terms, ctx);
}

VarContext inferred_context(const std::vector<EntropyTerm>& lhs,
                            const std::vector<EntropyTerm>& rhs) {
    std::set<std::string> names;
    auto collect = [&names](const std::vector<EntropyTerm>& terms) {
        for (const auto& t : terms) {
            names.insert(t.j.begin(), t.j.end());
            names.insert(t.k.begin(), t.k.end());
            names.insert(t.l.begin(), t.l.end());
        }
    };
    collect(lhs);
    collect(rhs);
    return VarContext(std::vector<std::string>(names.begin(), names.end()));
}

LinForm canonicalize(const std::vector<EntropyTerm>& terms, const VarContext& ctx) {
    LinForm out(ctx);
    for (const auto& t : terms) {
        const Mask j = ctx.subset_mask(t.j);
        const Mask l = ctx.subset_mask(t.l);
        switch (t.kind) {
            case TermKind::joint_entropy:
                out = out + t.coefficient * entropy_of(ctx, j);
                break;
            case TermKind::conditional_entropy:
                out = out + t.coefficient * cond_entropy(ctx, j, l);
                break;
            case TermKind::mutual_info:
                out = out + t.coefficient * mutual_info(ctx, j, ctx.subset_mask(t.k), l);
                break;
        }
    }
    return out;
}

CanonResult canonicalize_inequality(const Inequality& ineq, const VarContext* ctx) {
    CanonResult out;
    out.ctx = ctx ? *ctx : inferred_context(ineq.lhs, ineq.rhs);
    out.rel = ineq.rel;
    const LinForm lhs = canonicalize(ineq.lhs, out.ctx);
    const LinForm rhs = canonicalize(ineq.rhs, out.ctx);
    out.primary = ineq.rel == Relation::le ? rhs - lhs : lhs - rhs;
    if (ineq.rel == Relation::eq) out.secondary = rhs - lhs;
    return out;
}

CanonResult canonicalize_text(const std::string& text, const VarContext* ctx) {
    return canonicalize_inequality(parse_inequality(text, ctx), ctx);
}

std::string render_expression(const LinForm& f) {
    if (f.is_zero()) return "0";
    // Deterministic order: subset size first, then the displayed name
    // sequence lexicographically.
    std::vector<std::pair<std::vector<std::string>, Rat>> terms;
    terms.reserve(f.coeff.size());
    for (const auto& [subset, c] : f.coeff)
        terms.emplace_back(f.ctx.subset_names(subset), c);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [names, c] : terms) {
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        out += rat_str(abs(c));
        out += "*H(";
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) out += ',';
            out += names[i];
        }
        out += ')';
    }
    return out;
}

std::string render(const LinForm& f) {
    return render_expression(f) + " >= 0";
}

}  // namespace entro
