#include "toribord/chain_homology.hpp"

#include <sstream>

namespace toribord {

namespace {

Integer reduce(Ring ring, const Integer& c)
{
    if (ring == Ring::Z) return c;
    Integer r = c % 2;
    return r < 0 ? Integer(-r) : r;
}

// Calls f(face_id, sign) for every facet of the m-simplex `id`.
template <typename F>
void for_each_face(const SimplicialComplex& k, int m, std::size_t id, F&& f)
{
    if (m == 0) {
        f(std::size_t{0}, 1);
        return;
    }
    const auto s = k.simplex(m, id);
    std::vector<VertexId> face(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face[w++] = s[i];
        const auto face_id = k.find_simplex(face);
        if (!face_id) throw InvalidComplex("complex is not closed under faces");
        f(*face_id, (drop % 2) ? -1 : 1);
    }
}

void require_dim(const SimplicialComplex& k, int m)
{
    if (m < 0) throw DimensionMismatch("boundary degree must be nonnegative");
    (void)k;
}

} // namespace

// ------------------------------------------------------------------ Chain

Chain::Chain(ComplexPtr complex, int dim, Ring ring) : complex_(std::move(complex)), dim_(dim), ring_(ring)
{
    if (!complex_) throw DimensionMismatch("chain without a complex");
    if (dim_ < -1) throw DimensionMismatch("chain dimension below -1");
}

Integer Chain::coeff(std::size_t id) const
{
    auto it = coeffs_.find(id);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void Chain::add(std::size_t id, const Integer& c)
{
    if (id >= complex_->count(dim_))
        throw DimensionMismatch("simplex id " + std::to_string(id) + " out of range in dimension " + std::to_string(dim_));
    Integer v = reduce(ring_, coeff(id) + c);
    if (v == 0)
        coeffs_.erase(id);
    else
        coeffs_[id] = v;
}

Chain& Chain::operator+=(const Chain& other)
{
    if (other.complex_ != complex_ || other.dim_ != dim_ || other.ring_ != ring_)
        throw DimensionMismatch("adding chains of different complexes, dimensions or rings");
    for (const auto& [id, c] : other.coeffs_) add(id, c);
    return *this;
}

Chain& Chain::operator*=(const Integer& c)
{
    std::map<std::size_t, Integer> scaled;
    for (const auto& [id, x] : coeffs_) {
        Integer v = reduce(ring_, x * c);
        if (v != 0) scaled.emplace(id, v);
    }
    coeffs_ = std::move(scaled);
    return *this;
}

std::string HomologySummary::to_string() const
{
    std::ostringstream out;
    out << "H_" << dim << " = ";
    if (ring == Ring::GF2) {
        out << gf2_dimension;
        return out.str();
    }
    if (betti == 0 && torsion.empty()) {
        out << "0";
        return out.str();
    }
    bool first = true;
    if (betti > 0) {
        out << "Z^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) out << " (+) ";
        out << "Z/" << t;
        first = false;
    }
    return out.str();
}

// ------------------------------------------------------------- matrices

GF2Matrix boundary_matrix_gf2(const SimplicialComplex& k, int m)
{
    require_dim(k, m);
    GF2Matrix d(k.count(m - 1), k.count(m));
    for (std::size_t j = 0; j < k.count(m); ++j)
        for_each_face(k, m, j, [&](std::size_t i, int) { d.flip(i, j); });
    return d;
}

IntMatrix boundary_matrix_z(const SimplicialComplex& k, int m)
{
    require_dim(k, m);
    IntMatrix d = IntMatrix::Zero(static_cast<Index>(k.count(m - 1)), static_cast<Index>(k.count(m)));
    for (std::size_t j = 0; j < k.count(m); ++j)
        for_each_face(k, m, j, [&](std::size_t i, int sign) { d(static_cast<Index>(i), static_cast<Index>(j)) += sign; });
    return d;
}

HomologySummary reduced_homology(const SimplicialComplex& k, int m, Ring ring, const ProgressFn& progress)
{
    if (m < 0) throw DimensionMismatch("homology degree must be nonnegative");
    HomologySummary h;
    h.dim = m;
    h.ring = ring;
    const std::size_t cells = k.count(m);
    if (cells == 0) return h;
    if (ring == Ring::GF2) {
        const std::size_t rank_out = gf2_rank(boundary_matrix_gf2(k, m), progress);
        const std::size_t rank_in = k.count(m + 1) ? gf2_rank(boundary_matrix_gf2(k, m + 1), progress) : 0;
        h.gf2_dimension = cells - rank_out - rank_in;
    } else {
        const auto rank_out = static_cast<std::size_t>(int_rank(boundary_matrix_z(k, m)));
        std::size_t rank_in = 0;
        if (k.count(m + 1)) {
            const auto factors = invariant_factors(boundary_matrix_z(k, m + 1));
            rank_in = factors.size();
            for (const auto& f : factors)
                if (f > 1) h.torsion.push_back(f);
        }
        h.betti = cells - rank_out - rank_in;
    }
    return h;
}

// ---------------------------------------------------------------- chains

Chain boundary(const Chain& z)
{
    Chain out(z.complex(), z.dim() - 1, z.ring());
    if (z.dim() == -1) return Chain(z.complex(), -1, z.ring());
    for (const auto& [id, c] : z.coeffs())
        for_each_face(*z.complex(), z.dim(), id, [&](std::size_t face, int sign) { out.add(face, c * sign); });
    return out;
}

bool is_cycle(const Chain& z)
{
    if (z.dim() == -1) return true;
    return boundary(z).is_zero();
}

std::vector<Chain> cycle_space_basis(const ComplexPtr& k, int m, Ring ring)
{
    std::vector<Chain> out;
    if (m < 0 || k->count(m) == 0) return out;
    if (ring == Ring::GF2) {
        for (const auto& v : gf2_kernel_basis(boundary_matrix_gf2(*k, m))) {
            Chain c(k, m, ring);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v.get(j)) c.add(j, 1);
            out.push_back(std::move(c));
        }
    } else {
        const IntMatrix basis = int_kernel_basis(boundary_matrix_z(*k, m));
        for (Index col = 0; col < basis.cols(); ++col) {
            Chain c(k, m, ring);
            for (Index j = 0; j < basis.rows(); ++j)
                if (basis(j, col) != 0) c.add(static_cast<std::size_t>(j), basis(j, col));
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::optional<Chain> is_boundary(const Chain& z)
{
    if (!is_cycle(z)) throw NotACycle("chain of dimension " + std::to_string(z.dim()) + " has nonzero boundary");
    const auto& k = *z.complex();
    const int up = z.dim() + 1;
    Chain out(z.complex(), up, z.ring());
    if (z.is_zero()) return out;
    const std::size_t rows = k.count(z.dim());
    if (z.ring() == Ring::GF2) {
        GF2Vec b(rows);
        for (const auto& [id, c] : z.coeffs()) b.set(id, true);
        const auto x = gf2_solve(boundary_matrix_gf2(k, up), b);
        if (!x) return std::nullopt;
        for (std::size_t j = 0; j < x->size(); ++j)
            if (x->get(j)) out.add(j, 1);
    } else {
        IntVec b = IntVec::Zero(static_cast<Index>(rows));
        for (const auto& [id, c] : z.coeffs()) b(static_cast<Index>(id)) = c;
        const auto x = int_solve(boundary_matrix_z(k, up), b);
        if (!x) return std::nullopt;
        for (Index j = 0; j < x->size(); ++j)
            if ((*x)(j) != 0) out.add(static_cast<std::size_t>(j), (*x)(j));
    }
    return out;
}

std::vector<Integer> express_in_basis(const Chain& z, const std::vector<Chain>& basis)
{
    for (const auto& b : basis)
        if (b.complex() != z.complex() || b.dim() != z.dim() || b.ring() != z.ring())
            throw DimensionMismatch("basis chains must share complex, dimension and ring with the target");
    const std::size_t rows = z.complex()->count(z.dim());
    std::vector<Integer> coords(basis.size(), 0);
    if (z.is_zero()) return coords;
    if (z.ring() == Ring::GF2) {
        GF2Matrix a(rows, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (const auto& [id, c] : basis[j].coeffs()) a.set(id, j, true);
        GF2Vec b(rows);
        for (const auto& [id, c] : z.coeffs()) b.set(id, true);
        const auto x = gf2_solve(a, b);
        if (!x) throw NotInSpan("chain is not a combination of the given basis");
        for (std::size_t j = 0; j < basis.size(); ++j) coords[j] = x->get(j) ? 1 : 0;
    } else {
        IntMatrix a = IntMatrix::Zero(static_cast<Index>(rows), static_cast<Index>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (const auto& [id, c] : basis[j].coeffs()) a(static_cast<Index>(id), static_cast<Index>(j)) = c;
        IntVec b = IntVec::Zero(static_cast<Index>(rows));
        for (const auto& [id, c] : z.coeffs()) b(static_cast<Index>(id)) = c;
        const auto x = int_solve(a, b);
        if (!x) throw NotInSpan("chain is not an integer combination of the given basis");
        for (std::size_t j = 0; j < basis.size(); ++j) coords[j] = (*x)(static_cast<Index>(j));
    }
    return coords;
}

} // namespace toribord
