#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "toribord/gf2.hpp"
#include "toribord/integer.hpp"

namespace toribord {

/// Coefficient ring / vertex lattice of a complex: vertices in Z_2^n or Z^n.
enum class Ring { GF2, Z };

const char* ring_name(Ring r);

using VertexId = std::uint32_t;

/// Limits for building universal complexes. The defaults are n <= 5 over
/// GF(2), a candidate pool of (2B+1)^n <= 1e5 over Z, and at most `max_cells`
/// simplices in total. `allow_large` lifts the first two and keeps only the
/// cell cap.
struct BuildLimits {
    int max_gf2_rank = 5;
    std::size_t max_z_candidates = 100000;
    std::size_t max_cells = 10'000'000;
    bool allow_large = false;
};

/// Default limits, with TORIBORD_MAX_CELLS (if set) turning on `allow_large`
/// and replacing the cell cap.
BuildLimits default_build_limits();

/// A finite simplicial complex whose vertices are vectors of Z_2^n or Z^n.
///
/// Vertices are stored in strictly increasing lexicographic order; that order
/// orients every simplex. Simplices of dimension m are sorted tuples of m+1
/// vertex ids, kept sorted lexicographically so lookup is a binary search.
/// Instances are immutable once built.
class SimplicialComplex {
public:
    /// Builds the closure of `facets` (tuples of vertex ids, any order) after
    /// checking every vertex and every facet. Throws InvalidComplex.
    static SimplicialComplex from_gf2(int n, std::vector<GF2Vec> vertices,
                                      const std::vector<std::vector<VertexId>>& facets);
    static SimplicialComplex from_z(int n, std::vector<IntVec> vertices,
                                    const std::vector<std::vector<VertexId>>& facets,
                                    std::optional<long> bound = std::nullopt);

    Ring ring() const noexcept { return ring_; }
    int n() const noexcept { return n_; }
    std::optional<long> bound() const noexcept { return bound_; }

    std::size_t num_vertices() const noexcept;
    const std::vector<GF2Vec>& gf2_vertices() const noexcept { return gf2_vertices_; }
    const std::vector<IntVec>& z_vertices() const noexcept { return z_vertices_; }

    /// Largest m with an m-simplex; -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

    /// Number of m-simplices. Dimension -1 holds the single empty simplex.
    std::size_t count(int m) const noexcept;
    std::span<const VertexId> simplex(int m, std::size_t id) const;
    std::optional<std::size_t> find_simplex(std::span<const VertexId> sorted_ids) const;

    std::optional<VertexId> find_vertex(const GF2Vec& v) const;
    std::optional<VertexId> find_vertex(const IntVec& v) const;

    /// Internal constructor used by the builders; `simplices[m]` is the flat,
    /// sorted list of m-simplices.
    SimplicialComplex(Ring ring, int n, std::optional<long> bound, std::vector<GF2Vec> gf2_vertices,
                      std::vector<IntVec> z_vertices, std::vector<std::vector<VertexId>> simplices);

private:
    Ring ring_ = Ring::GF2;
    int n_ = 0;
    std::optional<long> bound_;
    std::vector<GF2Vec> gf2_vertices_;
    std::vector<IntVec> z_vertices_;
    std::vector<std::vector<VertexId>> simplices_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// X(Z_2^n): every linearly independent set of nonzero vectors of Z_2^n.
/// Throws ResourceLimit outside `limits`.
SimplicialComplex build_universal_z2(int n, const BuildLimits& limits = default_build_limits());

/// X(Z^n) restricted to primitive vectors of max-norm <= bound: every
/// unimodular subset of those vectors. Throws ResourceLimit outside `limits`.
SimplicialComplex build_universal_z_truncated(int n, long bound, const BuildLimits& limits = default_build_limits());

/// Number of simplices per dimension, index 0 = vertices.
std::vector<std::size_t> f_vector(const SimplicialComplex& k);

/// Every maximal simplex has dimension n-1 (and the complex is not empty).
bool is_pure(const SimplicialComplex& k);

enum class Membership { Contained, NotContained, OutOfBound };

/// Looks up the vertex set (duplicates collapse). Over Z, a primitive vector
/// outside the stored bound reports OutOfBound.
Membership contains_simplex(const SimplicialComplex& k, std::span<const GF2Vec> vectors);
Membership contains_simplex(const SimplicialComplex& k, std::span<const IntVec> vectors);

/// Largest absolute coordinate.
Integer max_norm(const IntVec& v);

} // namespace toribord
