#pragma once

// Fixed point data polynomials.
//
// Over GF(2): homogeneous polynomials in the nonzero vectors of Z_2^n, with
// each monomial appearing zero or one times. Over Z: homogeneous exterior
// polynomials in integer vectors with integer coefficients, every monomial in
// canonical (lexicographically increasing) order.
//
// Polynomials in characters (side J) and in cocharacters (side J*) are
// different types; dualization is the only way across. The differential and
// the map to chains act on the J* side only.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "toribord/chain_homology.hpp"
#include "toribord/gf2.hpp"
#include "toribord/integer.hpp"

namespace toribord {

enum class Side { J, JStar };

constexpr Side dual_side(Side s) { return s == Side::J ? Side::JStar : Side::J; }
const char* side_name(Side s);

using GF2Monomial = std::vector<GF2Vec>;  // sorted, repeats allowed
using ExtMonomial = std::vector<IntVec>;  // strictly increasing

struct ExtMonomialLess {
    bool operator()(const ExtMonomial& a, const ExtMonomial& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
    }
};

template <Side S>
class GF2Poly {
public:
    static constexpr Side side = S;

    GF2Poly(int n, int degree) : n_(n), degree_(degree)
    {
        if (n < 1) throw DimensionMismatch("ambient rank must be positive");
    }

    int n() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    const std::set<GF2Monomial>& monomials() const noexcept { return monomials_; }
    bool is_zero() const noexcept { return monomials_.empty(); }
    std::size_t size() const noexcept { return monomials_.size(); }

    /// Adds the monomial mod 2 (a second copy cancels the first).
    void add(GF2Monomial mono)
    {
        if (static_cast<int>(mono.size()) != degree_)
            throw DimensionMismatch("monomial of degree " + std::to_string(mono.size()) + " in a degree " +
                                    std::to_string(degree_) + " polynomial");
        for (const auto& v : mono) {
            if (v.size() != static_cast<std::size_t>(n_)) throw DimensionMismatch("vector length differs from n");
            if (v.is_zero()) throw DimensionMismatch("the zero vector is not a nontrivial character");
        }
        std::sort(mono.begin(), mono.end());
        auto [it, inserted] = monomials_.insert(std::move(mono));
        if (!inserted) monomials_.erase(it);
    }

    GF2Poly& operator+=(const GF2Poly& other)
    {
        if (other.n_ != n_ || other.degree_ != degree_) throw DimensionMismatch("adding polynomials of different shape");
        for (const auto& m : other.monomials_) add(m);
        return *this;
    }
    friend GF2Poly operator+(GF2Poly a, const GF2Poly& b) { return a += b; }

    friend bool operator==(const GF2Poly&, const GF2Poly&) = default;

private:
    int n_;
    int degree_;
    std::set<GF2Monomial> monomials_;
};

struct CanonicalTerm {
    ExtMonomial mono;
    Integer coeff;  // zero when the monomial had a repeated vector
};

/// Sorts the wedge factors, multiplying c by the permutation sign; a repeated
/// factor makes the term zero.
CanonicalTerm canonicalize_exterior(ExtMonomial mono, Integer c);

template <Side S>
class ExtPoly {
public:
    static constexpr Side side = S;

    ExtPoly(int n, int degree) : n_(n), degree_(degree)
    {
        if (n < 1) throw DimensionMismatch("ambient rank must be positive");
    }

    int n() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    const std::map<ExtMonomial, Integer, ExtMonomialLess>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * (v_1 ^ ... ^ v_m) after canonicalizing the factor order.
    void add(ExtMonomial mono, const Integer& c)
    {
        if (static_cast<int>(mono.size()) != degree_)
            throw DimensionMismatch("monomial of degree " + std::to_string(mono.size()) + " in a degree " +
                                    std::to_string(degree_) + " polynomial");
        for (const auto& v : mono)
            if (v.size() != n_) throw DimensionMismatch("vector length differs from n");
        auto term = canonicalize_exterior(std::move(mono), c);
        if (term.coeff == 0) return;
        auto it = terms_.find(term.mono);
        if (it == terms_.end()) {
            terms_.emplace(std::move(term.mono), std::move(term.coeff));
            return;
        }
        it->second += term.coeff;
        if (it->second == 0) terms_.erase(it);
    }

    ExtPoly& operator+=(const ExtPoly& other)
    {
        if (other.n_ != n_ || other.degree_ != degree_) throw DimensionMismatch("adding polynomials of different shape");
        for (const auto& [m, c] : other.terms_) add(m, c);
        return *this;
    }
    friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }

    ExtPoly operator-() const
    {
        ExtPoly out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    friend bool operator==(const ExtPoly& a, const ExtPoly& b)
    {
        if (a.n_ != b.n_ || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->second != ib->second || ia->first.size() != ib->first.size()) return false;
            for (std::size_t i = 0; i < ia->first.size(); ++i)
                if (!same_vector(ia->first[i], ib->first[i])) return false;
        }
        return true;
    }

private:
    int n_;
    int degree_;
    std::map<ExtMonomial, Integer, ExtMonomialLess> terms_;
};

using GF2PolyJ = GF2Poly<Side::J>;
using GF2PolyJStar = GF2Poly<Side::JStar>;
using ExtPolyJ = ExtPoly<Side::J>;
using ExtPolyJStar = ExtPoly<Side::JStar>;

// -------------------------------------------------------------- predicates

bool monomial_is_essential(const GF2Monomial& mono);
bool monomial_is_essential(const ExtMonomial& mono);

template <Side S>
bool is_essential(const GF2Poly<S>& p)
{
    if (p.degree() > p.n()) return p.is_zero();
    return std::all_of(p.monomials().begin(), p.monomials().end(),
                       [](const GF2Monomial& m) { return monomial_is_essential(m); });
}

template <Side S>
bool is_essential(const ExtPoly<S>& p)
{
    if (p.degree() > p.n()) return p.is_zero();
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto& t) { return monomial_is_essential(t.first); });
}

template <typename Poly>
bool is_faithful(const Poly& p)
{
    return p.degree() == p.n() && is_essential(p);
}

// ------------------------------------------------------------ differential

/// Deletes each factor in turn; a degree-1 monomial maps to the unit and
/// the unit maps to zero. Throws NotEssential.
GF2PolyJStar d_gf2(const GF2PolyJStar& p);

/// Signed deletion: the i-th factor (1-based) carries (-1)^(i+1). Throws NotEssential.
ExtPolyJStar d_z(const ExtPolyJStar& p);

// ---------------------------------------------------------------- duality

/// Replaces each monomial's basis by its dual basis. Throws NotFaithful.
GF2PolyJStar dualize_gf2(const GF2PolyJ& g);
GF2PolyJ dualize_gf2(const GF2PolyJStar& g);
ExtPolyJStar dualize_z(const ExtPolyJ& g);
ExtPolyJ dualize_z(const ExtPolyJStar& g);

// -------------------------------------------------------- linear changes

/// Applies A to every vector.
template <Side S>
GF2Poly<S> transform(const GF2Poly<S>& p, const GF2Matrix& a)
{
    GF2Poly<S> out(p.n(), p.degree());
    for (const auto& m : p.monomials()) {
        GF2Monomial image;
        for (const auto& v : m) image.push_back(a * v);
        out.add(std::move(image));
    }
    return out;
}

template <Side S>
ExtPoly<S> transform(const ExtPoly<S>& p, const IntMatrix& a)
{
    ExtPoly<S> out(p.n(), p.degree());
    for (const auto& [m, c] : p.terms()) {
        ExtMonomial image;
        for (const auto& v : m) image.push_back(a * v);
        out.add(std::move(image), c);
    }
    return out;
}

// ------------------------------------------------------------ chain map

/// The chain with one simplex per monomial and the same coefficients, of
/// dimension degree - 1. Throws NotEssential, NotInComplex, and (over Z)
/// VertexOutOfBound naming the first primitive vector beyond the bound.
Chain poly_to_chain(const GF2PolyJStar& p, const ComplexPtr& k);
Chain poly_to_chain(const ExtPolyJStar& p, const ComplexPtr& k);

/// Inverse of poly_to_chain, used to read cycles back as polynomials.
GF2PolyJStar chain_to_gf2_poly(const Chain& c);
ExtPolyJStar chain_to_ext_poly(const Chain& c);

} // namespace toribord
