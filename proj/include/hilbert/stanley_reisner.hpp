#ifndef HILBERT_STANLEY_REISNER_HPP
#define HILBERT_STANLEY_REISNER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/monomial.hpp"

namespace hilbert {

using Face = std::vector<std::string>;

/// A simplicial complex given by its facets. The face family is everything
/// below some facet, plus the empty face.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<Face> facets;
};

enum class ViolationKind {
    duplicate_vertex, ///< a name listed twice in the vertex set
    unknown_vertex,   ///< a facet mentions a name outside the vertex set
    repeated_vertex,  ///< a facet lists the same vertex twice
    contained_facet,  ///< a facet lies inside another facet
    uncovered_vertex  ///< a vertex belongs to no facet
};

struct Violation {
    ViolationKind kind;
    /// The offending face (or the single offending vertex).
    Face face;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    /// One line per violation.
    std::string describe() const;
};

ValidationReport validate_complex(const SimplicialComplex& complex);

/// Thrown by operations that need a valid complex.
class InvalidComplex : public std::invalid_argument {
public:
    explicit InvalidComplex(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// True iff `face` is contained in some facet. Names must be vertices.
bool is_face(const SimplicialComplex& complex, const Face& face);

/// Minimal non-faces, ascending by size then lexicographic in vertex order.
/// Each subset lists its vertices in vertex order. Throws ResourceCapError
/// for more than `vertex_cap` vertices.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex, std::size_t vertex_cap = 24);

/// One square-free generator per minimal non-face, in minimal_nonfaces
/// order; variable i is vertices[i].
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, std::size_t vertex_cap = 24);

} // namespace hilbert

#endif
