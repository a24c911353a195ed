#pragma once

// Characteristic pairs over simple polytopes.
//
// A polytope is kept as its vertex-facet incidence only: n, the number of
// facets m (ids 0..m-1) and, per vertex, the sorted n-set of facets through
// it. Two vertices are adjacent when they share n-1 facets (a ridge of the
// dual sphere); every ridge must lie in exactly two vertices.
//
// Over Z, the sign of a vertex needs an orientation of the polytope. It is
// the function o(v) = +-1 fixed by o(0) = +1 and, for adjacent v, w with
// common ridge R, o(v) s_v(R) + o(w) s_w(R) = 0, where s_v(R) = (-1)^k when R
// is v minus its k-th facet (0-based, increasing order). A pair may carry
// the opposite orientation (orientation = -1). The vertex contributes
// o(v) (lambda_{f_1} ^ ... ^ lambda_{f_n}) with f_1 < ... < f_n, and its sign is
// epsilon(v) = o(v) det(lambda_{f_1} ... lambda_{f_n}).

#include <optional>
#include <string>
#include <vector>

#include "toribord/gf2.hpp"
#include "toribord/integer.hpp"
#include "toribord/rep_algebra.hpp"

namespace toribord {

using FacetId = int;
using FacetSet = std::vector<FacetId>;  // strictly increasing

struct SimplePolytope {
    int n = 0;
    int num_facets = 0;
    std::vector<FacetSet> vertices;

    friend bool operator==(const SimplePolytope&, const SimplePolytope&) = default;
};

struct SmallCoverPair {
    SimplePolytope polytope;
    std::vector<GF2Vec> lambda;  // indexed by facet id
};

struct QuasitoricPair {
    SimplePolytope polytope;
    std::vector<IntVec> lambda;  // indexed by facet id
    int orientation = 1;         // +1 or -1
};

struct VertexSign {
    std::size_t vertex = 0;
    int sign = 1;
};

struct PolytopeCheck {
    bool valid = true;
    std::string diagnostic;  // names the first violation
    explicit operator bool() const noexcept { return valid; }
};

/// Simplicity, no duplicate vertices, every facet used, connected vertex
/// graph, every ridge in exactly two vertices.
PolytopeCheck validate_polytope(const SimplePolytope& p);

/// The orientation o(v), or nullopt when the ridge conditions are inconsistent.
std::optional<std::vector<int>> polytope_orientation(const SimplePolytope& p);

/// Throw InvalidPair with the first violation.
void check_pair(const SmallCoverPair& pair);
void check_pair(const QuasitoricPair& pair);

PolytopeCheck validate_pair(const SmallCoverPair& pair);
PolytopeCheck validate_pair(const QuasitoricPair& pair);

// Standard shapes. Facet ids of the cube: 2i and 2i+1 are opposite.
SimplePolytope simplex_polytope(int n);
SimplePolytope polygon(int k);
SimplePolytope cube_polytope(int n);

/// Sum over vertices of the product of the facet colors there (side J*).
GF2PolyJStar coloring_polynomial_z2(const SmallCoverPair& pair);

/// Vertex-wise dual of the coloring polynomial (side J).
GF2PolyJ fixed_point_data_z2(const SmallCoverPair& pair);

/// Signed sum of vertex wedges (side J*); d_z of it vanishes.
ExtPolyJStar phi_quasitoric(const QuasitoricPair& pair);

/// dualize_z(phi_quasitoric(pair)).
ExtPolyJ fixed_point_data_unitary(const QuasitoricPair& pair);

std::vector<VertexSign> vertex_signs(const QuasitoricPair& pair);

/// Some facet relabeling maps the vertex sets onto each other and the
/// columns (and, over Z, the vertex contributions) onto each other exactly.
bool pair_equivalent(const SmallCoverPair& a, const SmallCoverPair& b);
bool pair_equivalent(const QuasitoricPair& a, const QuasitoricPair& b);

/// Connected sum at vertices v1, v2: both vertices are removed, the facets at
/// v2 are identified with the facets at v1 carrying the same column, and the
/// other facets of the second pair follow those of the first. The polynomial
/// of the result is the sum of the two polynomials; this is checked on every
/// call. Throws NoMatching (columns differ, or over Z the vertex terms do not
/// cancel) and InvalidResult.
SmallCoverPair connect_sum(const SmallCoverPair& p1, std::size_t v1, const SmallCoverPair& p2, std::size_t v2);
QuasitoricPair connect_sum(const QuasitoricPair& p1, std::size_t v1, const QuasitoricPair& p2, std::size_t v2);

/// Replaces every column c by A c. Throws NotInvertible.
SmallCoverPair apply_basis_change(const SmallCoverPair& pair, const GF2Matrix& a);
QuasitoricPair apply_basis_change(const QuasitoricPair& pair, const IntMatrix& a);

/// A signed permutation matrix A such that apply_basis_change(p2, A) can be
/// connect-summed with p1 at (v1, v2), if one exists.
std::optional<IntMatrix> find_signed_permutation(const QuasitoricPair& p1, std::size_t v1, const QuasitoricPair& p2,
                                                 std::size_t v2);

} // namespace toribord
