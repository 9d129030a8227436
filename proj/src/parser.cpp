#include "hilbert/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace hilbert {

namespace {

enum class TokenKind { identifier, number, punct, end };

struct Token {
    TokenKind kind;
    std::string_view text;
    SourceSpan span;
};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::string quoted(std::string_view s)
{
    return "'" + std::string(s) + "'";
}

std::vector<Token> lex(std::string_view text, std::string_view punctuation)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ident_start(c)) {
            while (i < text.size() && ident_char(text[i]))
                ++i;
            tokens.push_back({TokenKind::identifier, text.substr(start, i - start), {start, i}});
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0)
                ++i;
            // "2x" and "x2" are distinct: a digit run glued to letters is not an identifier
            if (i < text.size() && ident_char(text[i])) {
                std::size_t j = i;
                while (j < text.size() && ident_char(text[j]))
                    ++j;
                throw ParseError(ParseErrorKind::syntax, {start, j},
                                 "invalid token " + quoted(text.substr(start, j - start)) +
                                     ": names must start with a letter");
            }
            tokens.push_back({TokenKind::number, text.substr(start, i - start), {start, i}});
        } else if (punctuation.find(c) != std::string_view::npos) {
            ++i;
            tokens.push_back({TokenKind::punct, text.substr(start, 1), {start, i}});
        } else {
            throw ParseError(ParseErrorKind::syntax, {start, start + 1},
                             "unexpected character " + quoted(text.substr(start, 1)));
        }
    }
    tokens.push_back({TokenKind::end, {}, {text.size(), text.size()}});
    return tokens;
}

bool is_punct(const Token& t, char c)
{
    return t.kind == TokenKind::punct && t.text.size() == 1 && t.text[0] == c;
}

std::string describe_token(const Token& t)
{
    return t.kind == TokenKind::end ? std::string("end of input") : quoted(t.text);
}

/// Tokens between separators; the separator tokens themselves are kept
/// so that empty groups can point at them.
struct Group {
    std::vector<Token> tokens;
    SourceSpan where;
};

std::vector<Group> split(const std::vector<Token>& tokens, char separator)
{
    std::vector<Group> groups(1);
    std::size_t group_start = 0;
    for (const auto& t : tokens) {
        if (t.kind == TokenKind::end || is_punct(t, separator)) {
            auto& g = groups.back();
            g.where = g.tokens.empty() ? SourceSpan{group_start, t.span.end}
                                       : SourceSpan{g.tokens.front().span.start, g.tokens.back().span.end};
            if (t.kind == TokenKind::end)
                break;
            group_start = t.span.start;
            groups.emplace_back();
            continue;
        }
        groups.back().tokens.push_back(t);
    }
    return groups;
}

Exponent parse_exponent(const Token& t)
{
    if (t.kind != TokenKind::number)
        throw ParseError(ParseErrorKind::bad_exponent, t.span,
                         "expected a positive integer exponent, found " + describe_token(t));
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || value > std::numeric_limits<Exponent>::max())
        throw ParseError(ParseErrorKind::bad_exponent, t.span, "exponent " + quoted(t.text) + " is too large");
    if (value == 0)
        throw ParseError(ParseErrorKind::bad_exponent, t.span, "exponent " + quoted(t.text) + " must be positive");
    return static_cast<Exponent>(value);
}

/// The names of a comma list, each a single identifier.
std::vector<Token> identifier_list(std::string_view text, const char* what)
{
    auto tokens = lex(text, ",");
    std::vector<Token> names;
    for (const auto& g : split(tokens, ',')) {
        if (g.tokens.empty())
            throw ParseError(ParseErrorKind::syntax, g.where, std::string("empty item in ") + what);
        const Token& t = g.tokens.front();
        if (t.kind != TokenKind::identifier)
            throw ParseError(ParseErrorKind::syntax, t.span,
                             "expected a variable name in " + std::string(what) + ", found " + describe_token(t));
        if (g.tokens.size() > 1)
            throw ParseError(ParseErrorKind::syntax, g.tokens[1].span,
                             "expected ',' after " + quoted(t.text) + ", found " + describe_token(g.tokens[1]));
        names.push_back(t);
    }
    return names;
}

Monomial monomial_from_group(const Group& g, const Ring& ring)
{
    if (g.tokens.empty())
        throw ParseError(ParseErrorKind::empty_generator, g.where, "empty generator");
    std::vector<Exponent> e(ring.arity(), 0);
    std::size_t i = 0;
    const auto& toks = g.tokens;
    auto at = [&](std::size_t k) -> Token {
        return k < toks.size() ? toks[k] : Token{TokenKind::end, {}, {g.where.end, g.where.end}};
    };
    for (;;) {
        Token t = at(i);
        if (t.kind == TokenKind::identifier) {
            auto idx = ring.index_of(t.text);
            if (!idx)
                throw ParseError(ParseErrorKind::unknown_variable, t.span, "unknown variable " + quoted(t.text));
            Exponent power = 1;
            ++i;
            if (is_punct(at(i), '^')) {
                power = parse_exponent(at(i + 1));
                i += 2;
            }
            if (e[*idx] > std::numeric_limits<Exponent>::max() - power)
                throw ParseError(ParseErrorKind::bad_exponent, t.span,
                                 "exponent of " + quoted(t.text) + " overflows");
            e[*idx] += power;
        } else if (t.kind == TokenKind::number && t.text == "1") {
            ++i;
            if (is_punct(at(i), '^'))
                throw ParseError(ParseErrorKind::syntax, at(i).span, "the constant 1 takes no exponent");
        } else if (t.kind == TokenKind::number) {
            throw ParseError(ParseErrorKind::syntax, t.span,
                             "coefficient " + quoted(t.text) + " is not allowed in a monomial");
        } else {
            throw ParseError(ParseErrorKind::syntax, t.span, "expected a variable, found " + describe_token(t));
        }
        Token next = at(i);
        if (next.kind == TokenKind::end)
            break;
        if (!is_punct(next, '*'))
            throw ParseError(ParseErrorKind::syntax, next.span, "expected '*' or ',', found " + describe_token(next));
        ++i;
        if (at(i).kind == TokenKind::end)
            throw ParseError(ParseErrorKind::syntax, next.span, "dangling '*'");
    }
    return Monomial(std::move(e));
}

// Series text: a cursor over the token stream.
class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : tokens_(lex(text, "()+-*/^")) {}

    SeriesNumerator parse()
    {
        std::map<Degree, BigInt> terms;
        if (is_punct(peek(), '(')) {
            next();
            polynomial(terms);
            expect(')');
        } else {
            signed_term(terms, false);
        }
        expect('/');
        std::size_t arity = denominator();
        if (peek().kind != TokenKind::end)
            throw ParseError(ParseErrorKind::syntax, peek().span, "unexpected " + describe_token(peek()));
        SeriesNumerator result(arity);
        for (const auto& [d, c] : terms)
            result.add(d, c);
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

    void expect(char c)
    {
        const Token& t = next();
        if (!is_punct(t, c))
            throw ParseError(ParseErrorKind::syntax, t.span,
                             std::string("expected '") + c + "', found " + describe_token(t));
    }

    void polynomial(std::map<Degree, BigInt>& terms)
    {
        signed_term(terms, false);
        while (is_punct(peek(), '+') || is_punct(peek(), '-'))
            signed_term(terms, true);
    }

    void signed_term(std::map<Degree, BigInt>& terms, bool sign_required)
    {
        bool negative = false;
        if (is_punct(peek(), '+') || is_punct(peek(), '-')) {
            negative = next().text == "-";
        } else if (sign_required) {
            throw ParseError(ParseErrorKind::syntax, peek().span, "expected '+' or '-'");
        }
        BigInt coefficient = 1;
        Degree d = 0;
        const Token& t = next();
        if (t.kind == TokenKind::number) {
            coefficient = BigInt(std::string(t.text));
            if (is_punct(peek(), '*')) {
                next();
                d = power_of_t(next());
            }
        } else {
            d = power_of_t(t);
        }
        if (negative)
            coefficient = -coefficient;
        terms[d] += coefficient;
    }

    Degree power_of_t(const Token& t)
    {
        if (t.kind != TokenKind::identifier || t.text != "t")
            throw ParseError(t.kind == TokenKind::identifier ? ParseErrorKind::unknown_variable
                                                             : ParseErrorKind::syntax,
                             t.span, "expected 't', found " + describe_token(t));
        if (!is_punct(peek(), '^'))
            return 1;
        next();
        return parse_exponent(next());
    }

    std::size_t denominator()
    {
        const Token& t = next();
        if (t.kind == TokenKind::number && t.text == "1")
            return 0;
        if (!is_punct(t, '('))
            throw ParseError(ParseErrorKind::syntax, t.span, "expected '(1 - t)', found " + describe_token(t));
        const Token& one = next();
        if (one.kind != TokenKind::number || one.text != "1")
            throw ParseError(ParseErrorKind::syntax, one.span, "expected '1', found " + describe_token(one));
        expect('-');
        const Token& var = next();
        if (var.kind != TokenKind::identifier || var.text != "t")
            throw ParseError(ParseErrorKind::syntax, var.span, "expected 't', found " + describe_token(var));
        expect(')');
        if (!is_punct(peek(), '^'))
            return 1;
        next();
        return parse_exponent(next());
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string_view to_string(ParseErrorKind kind) noexcept
{
    switch (kind) {
    case ParseErrorKind::unknown_variable:
        return "unknown-variable";
    case ParseErrorKind::bad_exponent:
        return "bad-exponent";
    case ParseErrorKind::empty_generator:
        return "empty-generator";
    case ParseErrorKind::syntax:
        return "syntax";
    case ParseErrorKind::duplicate_variable:
        return "duplicate-variable";
    }
    return "syntax";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
    : std::invalid_argument(message), kind_(kind), span_(span)
{
}

std::string describe(const ParseError& error, std::string_view input)
{
    SourceSpan s = error.span();
    std::size_t start = std::min(s.start, input.size());
    std::size_t width = std::max<std::size_t>(1, std::min(s.end, input.size()) - start);
    std::string out = std::string(to_string(error.kind())) + " error at " + std::to_string(s.start) + ".." +
                      std::to_string(s.end) + ": " + error.what() + "\n";
    out += "  " + std::string(input) + "\n";
    out += "  " + std::string(start, ' ') + std::string(width, '^') + "\n";
    return out;
}

bool is_identifier(std::string_view name) noexcept
{
    return !name.empty() && ident_start(name.front()) && std::all_of(name.begin(), name.end(), ident_char);
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names))
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i]))
            throw PreconditionError("invalid variable name " + quoted(names_[i]));
        if (std::find(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(i), names_[i]) !=
            names_.begin() + static_cast<std::ptrdiff_t>(i))
            throw PreconditionError("variable " + quoted(names_[i]) + " listed twice");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

Ring parse_ring(std::string_view text)
{
    auto names = identifier_list(text, "ring");
    std::vector<std::string> out;
    for (const auto& t : names) {
        if (std::find(out.begin(), out.end(), t.text) != out.end())
            throw ParseError(ParseErrorKind::duplicate_variable, t.span, "variable " + quoted(t.text) + " listed twice");
        out.emplace_back(t.text);
    }
    return Ring(std::move(out));
}

Monomial parse_monomial(std::string_view text, const Ring& ring)
{
    auto groups = split(lex(text, "*^,"), ',');
    if (groups.size() > 1)
        throw ParseError(ParseErrorKind::syntax, groups[1].where, "expected a single monomial");
    return monomial_from_group(groups.front(), ring);
}

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring)
{
    auto tokens = lex(text, "*^,");
    if (tokens.size() == 2 && tokens[0].kind == TokenKind::number && tokens[0].text == "0")
        return MonomialIdeal::zero(ring.arity());
    std::vector<Monomial> gens;
    for (const auto& g : split(tokens, ',')) {
        if (g.tokens.size() == 1 && g.tokens[0].kind == TokenKind::number && g.tokens[0].text == "0")
            throw ParseError(ParseErrorKind::syntax, g.where, "'0' may only appear alone, as the zero ideal");
        gens.push_back(monomial_from_group(g, ring));
    }
    return MonomialIdeal(ring.arity(), std::move(gens));
}

VariableOrder parse_order(std::string_view text, const Ring& ring)
{
    auto names = identifier_list(text, "variable order");
    std::vector<std::size_t> perm;
    for (const auto& t : names) {
        auto idx = ring.index_of(t.text);
        if (!idx)
            throw ParseError(ParseErrorKind::unknown_variable, t.span, "unknown variable " + quoted(t.text));
        if (std::find(perm.begin(), perm.end(), *idx) != perm.end())
            throw ParseError(ParseErrorKind::duplicate_variable, t.span, "variable " + quoted(t.text) + " listed twice");
        perm.push_back(*idx);
    }
    if (perm.size() != ring.arity())
        throw ParseError(ParseErrorKind::syntax, {0, text.size()},
                         "variable order names " + std::to_string(perm.size()) + " of " +
                             std::to_string(ring.arity()) + " variables");
    return VariableOrder(std::move(perm));
}

SimplicialComplex parse_complex(std::string_view text, const Ring& ring)
{
    auto tokens = lex(text, ",;");
    SimplicialComplex complex;
    complex.vertices = ring.names();
    for (const auto& facet_group : split(tokens, ';')) {
        if (facet_group.tokens.empty())
            throw ParseError(ParseErrorKind::syntax, facet_group.where, "empty facet");
        auto inner = facet_group.tokens;
        inner.push_back({TokenKind::end, {}, {facet_group.where.end, facet_group.where.end}});
        Face facet;
        for (const auto& g : split(inner, ',')) {
            if (g.tokens.empty())
                throw ParseError(ParseErrorKind::syntax, g.where, "empty vertex name in facet");
            const Token& t = g.tokens.front();
            if (t.kind != TokenKind::identifier)
                throw ParseError(ParseErrorKind::syntax, t.span, "expected a vertex name, found " + describe_token(t));
            if (g.tokens.size() > 1)
                throw ParseError(ParseErrorKind::syntax, g.tokens[1].span,
                                 "expected ',' or ';', found " + describe_token(g.tokens[1]));
            if (!ring.index_of(t.text))
                throw ParseError(ParseErrorKind::unknown_variable, t.span, "unknown vertex " + quoted(t.text));
            facet.emplace_back(t.text);
        }
        complex.facets.push_back(std::move(facet));
    }
    auto report = validate_complex(complex);
    if (!report.ok())
        throw InvalidComplex(std::move(report));
    return complex;
}

SeriesNumerator parse_series(std::string_view text)
{
    return SeriesParser(text).parse();
}

std::string render(const Monomial& m, const Ring& ring)
{
    if (m.arity() != ring.arity())
        throw ArityMismatch("render: monomial arity differs from ring arity");
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring[i];
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string render(const MonomialIdeal& ideal, const Ring& ring)
{
    if (ideal.empty())
        return "0";
    std::string out;
    for (const auto& g : ideal.generators()) {
        if (!out.empty())
            out += ", ";
        out += render(g, ring);
    }
    return out;
}

std::string render(const SeriesNumerator& numerator)
{
    std::string top;
    const auto& coeffs = numerator.coefficients();
    if (coeffs.empty()) {
        top = "0";
    } else {
        bool first = true;
        for (const auto& [d, c] : coeffs) {
            BigInt magnitude = abs(c);
            if (first)
                top += sgn(c) < 0 ? "-" : "";
            else
                top += sgn(c) < 0 ? " - " : " + ";
            first = false;
            std::string power = d == 1 ? "t" : "t^" + std::to_string(d);
            if (d == 0)
                top += magnitude.get_str();
            else if (magnitude == 1)
                top += power;
            else
                top += magnitude.get_str() + "*" + power;
        }
        if (coeffs.size() > 1 || sgn(coeffs.begin()->second) < 0)
            top = "(" + top + ")";
    }
    std::string bottom = "1";
    if (numerator.arity() == 1)
        bottom = "(1 - t)";
    else if (numerator.arity() > 1)
        bottom = "(1 - t)^" + std::to_string(numerator.arity());
    return top + "/" + bottom;
}

std::string render(const Face& face)
{
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i)
        out += (i > 0 ? "," : "") + face[i];
    return out + "}";
}

} // namespace hilbert
