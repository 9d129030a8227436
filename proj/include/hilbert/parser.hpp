#ifndef HILBERT_PARSER_HPP
#define HILBERT_PARSER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert/hilbert_series.hpp"
#include "hilbert/monomial.hpp"
#include "hilbert/stanley_reisner.hpp"

namespace hilbert {

/// Byte offsets [start, end) into the parsed text.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

enum class ParseErrorKind { unknown_variable, bad_exponent, empty_generator, syntax, duplicate_variable };

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);

    ParseErrorKind kind() const noexcept { return kind_; }
    SourceSpan span() const noexcept { return span_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
};

/// Multi-line rendering of an error: the message, the input and a caret
/// line under the offending span.
std::string describe(const ParseError& error, std::string_view input);

/// The variables of k[x_1..x_a] by name, in listing order.
class Ring {
public:
    Ring() = default;
    /// Throws PreconditionError on an invalid or repeated name.
    explicit Ring(std::vector<std::string> names);

    std::size_t arity() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& operator[](std::size_t i) const noexcept { return names_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

/// True for a letter followed by letters, digits, '_' or '\''.
bool is_identifier(std::string_view name) noexcept;

/// "x, y, z": comma-separated identifiers. Whitespace is ignored.
Ring parse_ring(std::string_view text);

/// One generator: '*'-separated factors `name` or `name^k` with k >= 1, or
/// the constant "1". Repeated variables multiply.
Monomial parse_monomial(std::string_view text, const Ring& ring);

/// Comma-separated generators; "0" alone is the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);

/// A permutation of the ring's variables, e.g. "y,x,z".
VariableOrder parse_order(std::string_view text, const Ring& ring);

/// Facets separated by ';', vertices by ','. The vertices are the ring's
/// variables. Throws InvalidComplex when the facets fail validate_complex.
SimplicialComplex parse_complex(std::string_view text, const Ring& ring);

/// Inverse of render(SeriesNumerator), e.g. "(1 - t^2)/(1 - t)^3".
SeriesNumerator parse_series(std::string_view text);

/// "x^2*y", or "1" for the constant monomial.
std::string render(const Monomial& m, const Ring& ring);
/// "x^2*y, x*z^2", or "0" for the zero ideal.
std::string render(const MonomialIdeal& ideal, const Ring& ring);
/// "(1 - t^2 - t^3 + t^5)/(1 - t)^3", "1/(1 - t)^2".
std::string render(const SeriesNumerator& numerator);
std::string render(const Face& face);

} // namespace hilbert

#endif
