#include "toribord/bordism.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace toribord {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

Integer a_n(int n)
{
    if (n < 1) throw IntegralityViolation("A_n is defined for n >= 1");
    const Integer two_n = Integer(1) << n;
    Rational total = (n % 2 == 0) ? 1 : -1;
    Integer product = 1;
    Integer factorial = 1;
    for (int i = 0; i < n; ++i) {
        product *= two_n - (Integer(1) << i);
        factorial *= i + 1;
        const Rational term = Rational(product, factorial);
        if (denominator(term) != 1)
            throw IntegralityViolation("term i=" + std::to_string(i) + " equals " + product.str() + "/" + factorial.str());
        total += ((n - 1 - i) % 2 == 0) ? term : Rational(-term);
    }
    if (denominator(total) != 1) throw IntegralityViolation("sum is not an integer: " + total.str());
    return numerator(total);
}

std::size_t z2_bordism_dim(int n, const BuildLimits& limits, const ProgressFn& progress)
{
    const auto k = build_universal_z2(n, limits);
    return reduced_homology(k, n - 1, Ring::GF2, progress).gf2_dimension;
}

UnitaryRank unitary_rank_truncated(int n, long bound, const BuildLimits& limits)
{
    const auto k = build_universal_z_truncated(n, bound, limits);
    const auto h = reduced_homology(k, n - 1, Ring::Z);
    return {h.betti, h.torsion, bound};
}

long minimal_bound(const ExtPolyJStar& p)
{
    Integer b = 1;
    for (const auto& [m, c] : p.terms())
        for (const auto& v : m) b = std::max(b, max_norm(v));
    if (b > std::numeric_limits<long>::max()) throw ResourceLimit("vector entries exceed any feasible bound");
    return b.convert_to<long>();
}

Z2Report is_realizable_z2(const GF2PolyJ& g, const RealizeOptions& options)
{
    Z2Report r(g);
    r.faithful = is_faithful(g);
    if (!r.faithful) return r;
    r.dual = dualize_gf2(g);
    r.residual = d_gf2(*r.dual);
    r.realizable = r.residual->is_zero();
    if (r.realizable && options.certificate) {
        ComplexPtr k = options.complex;
        if (!k) k = std::make_shared<const SimplicialComplex>(build_universal_z2(g.n()));
        r.certificate = poly_to_chain(*r.dual, k);
    }
    return r;
}

UnitaryReport is_realizable_unitary(const ExtPolyJ& g, const RealizeOptions& options)
{
    UnitaryReport r(g);
    r.faithful = is_faithful(g);
    if (!r.faithful) return r;
    r.dual = dualize_z(g);
    r.residual = d_z(*r.dual);
    r.realizable = r.residual->is_zero();
    if (r.realizable && options.certificate) {
        ComplexPtr k = options.complex;
        if (!k) {
            const long bound = options.bound.value_or(minimal_bound(*r.dual));
            k = std::make_shared<const SimplicialComplex>(build_universal_z_truncated(g.n(), bound));
        }
        r.bound = k->bound();
        r.certificate = poly_to_chain(*r.dual, k);
    }
    return r;
}

namespace {

template <typename PolyJ>
void require_realizable(const PolyJ& g, bool realizable)
{
    if (!is_faithful(g)) throw NotFaithful("class coordinates need faithful fixed point data");
    if (!realizable) throw NotACycle("fixed point data is not realizable: d(g*) != 0");
}

} // namespace

std::vector<Integer> class_coordinates(const GF2PolyJ& g, const std::vector<Chain>& basis)
{
    if (basis.empty()) {
        require_realizable(g, d_gf2(dualize_gf2(g)).is_zero());
        if (!g.is_zero()) throw NotInSpan("empty basis cannot represent a nonzero class");
        return {};
    }
    const auto dual = dualize_gf2(g);
    require_realizable(g, d_gf2(dual).is_zero());
    return express_in_basis(poly_to_chain(dual, basis.front().complex()), basis);
}

std::vector<Integer> class_coordinates(const ExtPolyJ& g, const std::vector<Chain>& basis)
{
    if (basis.empty()) {
        require_realizable(g, d_z(dualize_z(g)).is_zero());
        if (!g.is_zero()) throw NotInSpan("empty basis cannot represent a nonzero class");
        return {};
    }
    const auto dual = dualize_z(g);
    require_realizable(g, d_z(dual).is_zero());
    return express_in_basis(poly_to_chain(dual, basis.front().complex()), basis);
}

std::vector<Integer> class_coordinates(const GF2PolyJ& g, const ComplexPtr& k)
{
    return class_coordinates(g, cycle_space_basis(k, g.n() - 1, Ring::GF2));
}

std::vector<Integer> class_coordinates(const ExtPolyJ& g, const ComplexPtr& k)
{
    return class_coordinates(g, cycle_space_basis(k, g.n() - 1, Ring::Z));
}

} // namespace toribord
