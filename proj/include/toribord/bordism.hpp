#pragma once

#include <optional>
#include <vector>

#include "toribord/chain_homology.hpp"
#include "toribord/rep_algebra.hpp"
#include "toribord/universal_complex.hpp"

namespace toribord {

/// The closed form
///   A_n = (-1)^n + sum_{i=0}^{n-1} (-1)^{n-1-i} (2^n - 2^i)...(2^n - 2^0) / (i+1)!
/// evaluated in exact rationals. Throws IntegralityViolation naming the first
/// non-integral term (or the sum) instead of rounding.
Integer a_n(int n);

/// dim over GF(2) of reduced H_{n-1}(X(Z_2^n)).
std::size_t z2_bordism_dim(int n, const BuildLimits& limits = default_build_limits(), const ProgressFn& progress = {});

struct UnitaryRank {
    std::size_t betti = 0;
    std::vector<Integer> torsion;
    long bound = 0;
};

/// Reduced H_{n-1}(X(Z^n) truncated at max-norm `bound`; Z).
UnitaryRank unitary_rank_truncated(int n, long bound, const BuildLimits& limits = default_build_limits());

/// Outcome of the realizability test for fixed point data g: g is realizable
/// iff it is faithful and d(g*) = 0. `residual` is d(g*), the obstruction
/// when nonzero; `certificate` is g* as a cycle of the universal complex.
template <typename PolyJ, typename PolyJStar>
struct RealizabilityReport {
    explicit RealizabilityReport(PolyJ g) : input(std::move(g)) {}

    PolyJ input;
    bool faithful = false;
    std::optional<PolyJStar> dual;
    std::optional<PolyJStar> residual;
    bool realizable = false;
    std::optional<Chain> certificate;
    std::optional<long> bound;  // Z only: truncation of the certificate's complex
};

using Z2Report = RealizabilityReport<GF2PolyJ, GF2PolyJStar>;
using UnitaryReport = RealizabilityReport<ExtPolyJ, ExtPolyJStar>;

struct RealizeOptions {
    /// Complex for the certificate; built on demand when null.
    ComplexPtr complex;
    bool certificate = true;
    /// Z only: truncation for an on-demand complex; defaults to the smallest
    /// bound containing every vector of g*.
    std::optional<long> bound;
};

Z2Report is_realizable_z2(const GF2PolyJ& g, const RealizeOptions& options = {});
UnitaryReport is_realizable_unitary(const ExtPolyJ& g, const RealizeOptions& options = {});

/// Smallest B >= 1 with every vector of p inside [-B, B]^n.
long minimal_bound(const ExtPolyJStar& p);

/// Coordinates of the class of g (the cycle g*) in cycle_space_basis(K, n-1).
/// Throws NotACycle when g is not realizable, VertexOutOfBound / NotInSpan when
/// the truncated complex is too small.
std::vector<Integer> class_coordinates(const GF2PolyJ& g, const ComplexPtr& k);
std::vector<Integer> class_coordinates(const ExtPolyJ& g, const ComplexPtr& k);
std::vector<Integer> class_coordinates(const GF2PolyJ& g, const std::vector<Chain>& basis);
std::vector<Integer> class_coordinates(const ExtPolyJ& g, const std::vector<Chain>& basis);

} // namespace toribord
