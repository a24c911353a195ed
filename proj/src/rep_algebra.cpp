#include "toribord/rep_algebra.hpp"

namespace toribord {

const char* side_name(Side s) { return s == Side::J ? "J" : "J*"; }

CanonicalTerm canonicalize_exterior(ExtMonomial mono, Integer c)
{
    // Insertion sort, counting transpositions.
    bool odd = false;
    for (std::size_t i = 1; i < mono.size(); ++i) {
        for (std::size_t j = i; j > 0 && lex_less(mono[j], mono[j - 1]); --j) {
            std::swap(mono[j], mono[j - 1]);
            odd = !odd;
        }
    }
    for (std::size_t i = 1; i < mono.size(); ++i)
        if (same_vector(mono[i - 1], mono[i])) return {std::move(mono), Integer(0)};
    if (odd) c = -c;
    return {std::move(mono), std::move(c)};
}

bool monomial_is_essential(const GF2Monomial& mono)
{
    return is_independent_gf2(mono);
}

bool monomial_is_essential(const ExtMonomial& mono)
{
    return is_unimodular_set_z(mono);
}

// ------------------------------------------------------------ differential

GF2PolyJStar d_gf2(const GF2PolyJStar& p)
{
    if (!is_essential(p)) throw NotEssential("d is defined on essential polynomials only");
    GF2PolyJStar out(p.n(), p.degree() - 1);
    if (p.degree() == 0) return out;
    for (const auto& m : p.monomials()) {
        for (std::size_t drop = 0; drop < m.size(); ++drop) {
            GF2Monomial face;
            face.reserve(m.size() - 1);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != drop) face.push_back(m[i]);
            out.add(std::move(face));
        }
    }
    return out;
}

ExtPolyJStar d_z(const ExtPolyJStar& p)
{
    if (!is_essential(p)) throw NotEssential("d is defined on essential polynomials only");
    ExtPolyJStar out(p.n(), p.degree() - 1);
    if (p.degree() == 0) return out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t drop = 0; drop < m.size(); ++drop) {
            ExtMonomial face;
            face.reserve(m.size() - 1);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (i != drop) face.push_back(m[i]);
            out.add(std::move(face), (drop % 2) ? Integer(-c) : c);
        }
    }
    return out;
}

// ---------------------------------------------------------------- duality

namespace {

template <Side To, Side From>
GF2Poly<To> dualize_gf2_impl(const GF2Poly<From>& g)
{
    if (!is_faithful(g)) throw NotFaithful("dualization needs a faithful polynomial (every monomial a basis)");
    const auto n = static_cast<std::size_t>(g.n());
    GF2Poly<To> out(g.n(), g.degree());
    for (const auto& m : g.monomials()) {
        const GF2Matrix dual = gf2_dual_basis(GF2Matrix::from_columns(n, m));
        GF2Monomial image;
        for (std::size_t j = 0; j < n; ++j) image.push_back(dual.col_vec(j));
        out.add(std::move(image));
    }
    return out;
}

template <Side To, Side From>
ExtPoly<To> dualize_z_impl(const ExtPoly<From>& g)
{
    if (!is_faithful(g)) throw NotFaithful("dualization needs a faithful polynomial (every monomial a basis)");
    ExtPoly<To> out(g.n(), g.degree());
    for (const auto& [m, c] : g.terms()) {
        const IntMatrix dual = int_dual_basis(columns_matrix(m, g.n()));
        ExtMonomial image;
        for (Index j = 0; j < dual.cols(); ++j) image.push_back(dual.col(j));
        out.add(std::move(image), c);
    }
    return out;
}

} // namespace

GF2PolyJStar dualize_gf2(const GF2PolyJ& g) { return dualize_gf2_impl<Side::JStar>(g); }
GF2PolyJ dualize_gf2(const GF2PolyJStar& g) { return dualize_gf2_impl<Side::J>(g); }
ExtPolyJStar dualize_z(const ExtPolyJ& g) { return dualize_z_impl<Side::JStar>(g); }
ExtPolyJ dualize_z(const ExtPolyJStar& g) { return dualize_z_impl<Side::J>(g); }

// ------------------------------------------------------------ chain map

Chain poly_to_chain(const GF2PolyJStar& p, const ComplexPtr& k)
{
    if (k->ring() != Ring::GF2 || k->n() != p.n()) throw DimensionMismatch("complex does not match the polynomial");
    if (!is_essential(p)) throw NotEssential("only essential polynomials map to chains");
    Chain out(k, p.degree() - 1, Ring::GF2);
    std::vector<VertexId> ids;
    for (const auto& m : p.monomials()) {
        ids.clear();
        for (const auto& v : m) {
            auto id = k->find_vertex(v);
            if (!id) throw NotInComplex("vector " + to_string(v) + " is not a vertex");
            ids.push_back(*id);
        }
        auto sid = k->find_simplex(ids);
        if (!sid) throw NotInComplex("monomial is not a simplex of the complex");
        out.add(*sid, 1);
    }
    return out;
}

Chain poly_to_chain(const ExtPolyJStar& p, const ComplexPtr& k)
{
    if (k->ring() != Ring::Z || k->n() != p.n()) throw DimensionMismatch("complex does not match the polynomial");
    if (!is_essential(p)) throw NotEssential("only essential polynomials map to chains");
    Chain out(k, p.degree() - 1, Ring::Z);
    std::vector<VertexId> ids;
    for (const auto& [m, c] : p.terms()) {
        ids.clear();
        for (const auto& v : m) {
            auto id = k->find_vertex(v);
            if (!id) {
                if (k->bound() && max_norm(v) > *k->bound())
                    throw VertexOutOfBound("vector " + to_string(v) + " exceeds the bound " + std::to_string(*k->bound()));
                throw NotInComplex("vector " + to_string(v) + " is not a vertex");
            }
            ids.push_back(*id);
        }
        // Canonical monomials are lexicographically sorted, as are vertex ids.
        auto sid = k->find_simplex(ids);
        if (!sid) throw NotInComplex("monomial is not a simplex of the complex");
        out.add(*sid, c);
    }
    return out;
}

GF2PolyJStar chain_to_gf2_poly(const Chain& c)
{
    const auto& k = *c.complex();
    if (k.ring() != Ring::GF2) throw DimensionMismatch("chain does not live on a GF(2) complex");
    GF2PolyJStar out(k.n(), c.dim() + 1);
    for (const auto& [id, coeff] : c.coeffs()) {
        if (coeff % 2 == 0) continue;
        GF2Monomial m;
        for (auto v : k.simplex(c.dim(), id)) m.push_back(k.gf2_vertices()[v]);
        out.add(std::move(m));
    }
    return out;
}

ExtPolyJStar chain_to_ext_poly(const Chain& c)
{
    const auto& k = *c.complex();
    if (k.ring() != Ring::Z) throw DimensionMismatch("chain does not live on a Z complex");
    ExtPolyJStar out(k.n(), c.dim() + 1);
    for (const auto& [id, coeff] : c.coeffs()) {
        ExtMonomial m;
        for (auto v : k.simplex(c.dim(), id)) m.push_back(k.z_vertices()[v]);
        out.add(std::move(m), coeff);
    }
    return out;
}

} // namespace toribord
