#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toribord/gf2.hpp"
#include "toribord/integer.hpp"
#include "toribord/universal_complex.hpp"

namespace toribord {

/// Formal combination of the m-simplices of one complex, with coefficients in
/// GF(2) or Z. Dimension -1 is the augmentation degree: a single generator
/// (the empty simplex, id 0) so that the 0-th boundary is the augmentation.
/// Zero coefficients are never stored.
class Chain {
public:
    Chain(ComplexPtr complex, int dim, Ring ring);

    const ComplexPtr& complex() const noexcept { return complex_; }
    int dim() const noexcept { return dim_; }
    Ring ring() const noexcept { return ring_; }
    const std::map<std::size_t, Integer>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Integer coeff(std::size_t id) const;

    /// Adds c times the given simplex, reducing mod 2 over GF(2).
    void add(std::size_t id, const Integer& c);
    Chain& operator+=(const Chain& other);
    Chain& operator*=(const Integer& c);

    friend bool operator==(const Chain& a, const Chain& b)
    {
        return a.complex_ == b.complex_ && a.dim_ == b.dim_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    ComplexPtr complex_;
    int dim_;
    Ring ring_;
    std::map<std::size_t, Integer> coeffs_;
};

/// Reduced homology in one degree.
struct HomologySummary {
    int dim = 0;
    Ring ring = Ring::GF2;
    std::size_t gf2_dimension = 0;  // GF(2) case
    std::size_t betti = 0;          // Z case
    std::vector<Integer> torsion;   // Z case, invariant factors > 1

    /// `H_m = d` over GF(2); `H_m = Z^b (+) Z/t1 (+) ...` over Z; `H_m = 0` when trivial.
    std::string to_string() const;
};

/// Boundary from m-chains to (m-1)-chains; rows are (m-1)-simplices. For m = 0
/// this is the augmentation, a single row of ones. Columns follow the stored
/// simplex order; deleting the i-th vertex of a sorted tuple carries (-1)^i.
GF2Matrix boundary_matrix_gf2(const SimplicialComplex& k, int m);
IntMatrix boundary_matrix_z(const SimplicialComplex& k, int m);

HomologySummary reduced_homology(const SimplicialComplex& k, int m, Ring ring, const ProgressFn& progress = {});

Chain boundary(const Chain& z);
bool is_cycle(const Chain& z);

/// Basis of the m-cycles (vector-space basis over GF(2), lattice basis over Z).
std::vector<Chain> cycle_space_basis(const ComplexPtr& k, int m, Ring ring);

/// Some (m+1)-chain c with boundary(c) == z, or nullopt. Throws NotACycle.
std::optional<Chain> is_boundary(const Chain& z);

/// Coefficients c with z == sum c_i basis_i. Throws NotInSpan, DimensionMismatch.
std::vector<Integer> express_in_basis(const Chain& z, const std::vector<Chain>& basis);

} // namespace toribord
