#include "toribord/universal_complex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

namespace toribord {

const char* ring_name(Ring r) { return r == Ring::GF2 ? "gf2" : "z"; }

BuildLimits default_build_limits()
{
    BuildLimits limits;
    if (const char* env = std::getenv("TORIBORD_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long cap = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            limits.allow_large = true;
            limits.max_cells = static_cast<std::size_t>(cap);
        }
    }
    return limits;
}

Integer max_norm(const IntVec& v)
{
    Integer m = 0;
    for (Index i = 0; i < v.size(); ++i) m = std::max(m, Integer(abs(v(i))));
    return m;
}

// ------------------------------------------------------ SimplicialComplex

SimplicialComplex::SimplicialComplex(Ring ring, int n, std::optional<long> bound, std::vector<GF2Vec> gf2_vertices,
                                     std::vector<IntVec> z_vertices, std::vector<std::vector<VertexId>> simplices)
    : ring_(ring), n_(n), bound_(bound), gf2_vertices_(std::move(gf2_vertices)), z_vertices_(std::move(z_vertices)),
      simplices_(std::move(simplices))
{
    while (!simplices_.empty() && simplices_.back().empty()) simplices_.pop_back();
}

std::size_t SimplicialComplex::num_vertices() const noexcept
{
    return ring_ == Ring::GF2 ? gf2_vertices_.size() : z_vertices_.size();
}

std::size_t SimplicialComplex::count(int m) const noexcept
{
    if (m == -1) return 1;
    if (m < -1 || m >= static_cast<int>(simplices_.size())) return 0;
    return simplices_[static_cast<std::size_t>(m)].size() / static_cast<std::size_t>(m + 1);
}

std::span<const VertexId> SimplicialComplex::simplex(int m, std::size_t id) const
{
    if (m == -1) return {};
    const auto width = static_cast<std::size_t>(m + 1);
    return {simplices_[static_cast<std::size_t>(m)].data() + id * width, width};
}

std::optional<std::size_t> SimplicialComplex::find_simplex(std::span<const VertexId> ids) const
{
    const int m = static_cast<int>(ids.size()) - 1;
    if (m == -1) return 0;
    const std::size_t total = count(m);
    std::size_t lo = 0, hi = total;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto s = simplex(m, mid);
        if (std::lexicographical_compare(s.begin(), s.end(), ids.begin(), ids.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < total && std::ranges::equal(simplex(m, lo), ids)) return lo;
    return std::nullopt;
}

std::optional<VertexId> SimplicialComplex::find_vertex(const GF2Vec& v) const
{
    auto it = std::lower_bound(gf2_vertices_.begin(), gf2_vertices_.end(), v);
    if (it == gf2_vertices_.end() || !(*it == v)) return std::nullopt;
    return static_cast<VertexId>(it - gf2_vertices_.begin());
}

std::optional<VertexId> SimplicialComplex::find_vertex(const IntVec& v) const
{
    auto it = std::lower_bound(z_vertices_.begin(), z_vertices_.end(), v, LexLess{});
    if (it == z_vertices_.end() || !same_vector(*it, v)) return std::nullopt;
    return static_cast<VertexId>(it - z_vertices_.begin());
}

namespace {

std::vector<std::vector<VertexId>> close_under_faces(std::size_t num_vertices,
                                                     const std::vector<std::vector<VertexId>>& facets)
{
    std::vector<std::set<std::vector<VertexId>>> by_dim(1);
    for (VertexId v = 0; v < num_vertices; ++v) by_dim[0].insert({v});
    for (const auto& f : facets) {
        const std::size_t k = f.size();
        if (k >= 31) throw InvalidComplex("simplex too large");
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(f[i]);
            if (by_dim.size() < face.size()) by_dim.resize(face.size());
            by_dim[face.size() - 1].insert(std::move(face));
        }
    }
    std::vector<std::vector<VertexId>> flat(by_dim.size());
    for (std::size_t m = 0; m < by_dim.size(); ++m)
        for (const auto& s : by_dim[m]) flat[m].insert(flat[m].end(), s.begin(), s.end());
    if (num_vertices == 0) flat.clear();
    return flat;
}

void check_facet_ids(const std::vector<VertexId>& f, std::size_t num_vertices, int n)
{
    if (f.empty()) throw InvalidComplex("empty simplex");
    if (static_cast<int>(f.size()) > n) throw InvalidComplex("simplex with more than n vertices");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= num_vertices) throw InvalidComplex("vertex id " + std::to_string(f[i]) + " out of range");
        if (i && f[i - 1] >= f[i]) throw InvalidComplex("simplex vertex ids must be strictly increasing");
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_gf2(int n, std::vector<GF2Vec> vertices,
                                              const std::vector<std::vector<VertexId>>& facets)
{
    if (n < 1) throw InvalidComplex("ambient rank must be positive");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].size() != static_cast<std::size_t>(n)) throw InvalidComplex("vertex " + std::to_string(i) + " has wrong length");
        if (vertices[i].is_zero()) throw InvalidComplex("vertex " + std::to_string(i) + " is zero");
        if (i && !(vertices[i - 1] < vertices[i]))
            throw InvalidComplex("vertices must be distinct and in increasing lexicographic order");
    }
    for (const auto& f : facets) {
        check_facet_ids(f, vertices.size(), n);
        std::vector<GF2Vec> vs;
        for (auto id : f) vs.push_back(vertices[id]);
        if (!is_independent_gf2(vs)) throw InvalidComplex("simplex is not a unimodular (independent) set");
    }
    auto simplices = close_under_faces(vertices.size(), facets);
    return SimplicialComplex(Ring::GF2, n, std::nullopt, std::move(vertices), {}, std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_z(int n, std::vector<IntVec> vertices,
                                            const std::vector<std::vector<VertexId>>& facets,
                                            std::optional<long> bound)
{
    if (n < 1) throw InvalidComplex("ambient rank must be positive");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].size() != n) throw InvalidComplex("vertex " + std::to_string(i) + " has wrong length");
        if (!is_primitive(vertices[i])) throw InvalidComplex("vertex " + std::to_string(i) + " is not primitive");
        if (bound && max_norm(vertices[i]) > *bound) throw InvalidComplex("vertex " + std::to_string(i) + " exceeds the bound");
        if (i && !lex_less(vertices[i - 1], vertices[i]))
            throw InvalidComplex("vertices must be distinct and in increasing lexicographic order");
    }
    for (const auto& f : facets) {
        check_facet_ids(f, vertices.size(), n);
        std::vector<IntVec> vs;
        for (auto id : f) vs.push_back(vertices[id]);
        if (!is_unimodular_set_z(vs)) throw InvalidComplex("simplex is not a unimodular set");
    }
    auto simplices = close_under_faces(vertices.size(), facets);
    return SimplicialComplex(Ring::Z, n, bound, {}, std::move(vertices), std::move(simplices));
}

// ---------------------------------------------------------------- builders

namespace {

// Depth-first enumeration of all sets extending `chosen` by larger vertex ids.
// `State` tracks the span of the chosen vectors and answers try_extend.
template <typename State>
void enumerate(std::size_t num_vertices, int n, const State& state, std::vector<VertexId>& chosen,
               std::vector<std::vector<VertexId>>& out, std::size_t& cells, std::size_t max_cells)
{
    const VertexId start = chosen.empty() ? 0 : chosen.back() + 1;
    for (VertexId v = start; v < num_vertices; ++v) {
        State next = state;
        if (!next.try_extend(v)) continue;
        chosen.push_back(v);
        if (++cells > max_cells) throw ResourceLimit("complex exceeds " + std::to_string(max_cells) + " cells");
        auto& bucket = out[chosen.size() - 1];
        bucket.insert(bucket.end(), chosen.begin(), chosen.end());
        if (static_cast<int>(chosen.size()) < n) enumerate(num_vertices, n, next, chosen, out, cells, max_cells);
        chosen.pop_back();
    }
}

// Echelon basis of the chosen vectors, indexed by pivot bit.
struct Gf2SpanState {
    const std::vector<Word>* masks;
    std::vector<Word> basis;

    bool try_extend(VertexId v)
    {
        Word x = (*masks)[v];
        for (std::size_t b = 0; b < basis.size() && x; ++b)
            if ((x >> b) & 1u) x ^= basis[b];
        if (!x) return false;
        const auto pivot = static_cast<std::size_t>(std::countr_zero(x));
        for (auto& row : basis)
            if ((row >> pivot) & 1u) row ^= x;
        basis[pivot] = x;
        return true;
    }
};

// T is unimodular with T * chosen_j = e_j; a new vector v extends the set to
// a unimodular one iff the tail (T v)[k..n) is primitive.
struct ZSpanState {
    const std::vector<IntVec>* vectors;
    IntMatrix T;
    Index k = 0;

    bool try_extend(VertexId id)
    {
        const Index n = T.rows();
        IntVec w = T * (*vectors)[id];
        Integer g = 0;
        for (Index i = k; i < n; ++i) g = gcd(g, w(i));
        if (g != 1) return false;
        // Euclid on the tail, mirrored on the rows of T, until w = e_k below k.
        for (Index i = k + 1; i < n; ++i) {
            while (w(i) != 0) {
                const Integer q = w(k) / w(i);
                if (q != 0) {
                    T.row(k) -= q * T.row(i);
                    w(k) -= q * w(i);
                }
                T.row(k).swap(T.row(i));
                std::swap(w(k), w(i));
            }
        }
        if (w(k) < 0) {
            T.row(k) = -T.row(k);
            w(k) = -w(k);
        }
        for (Index i = 0; i < k; ++i) {
            if (w(i) != 0) {
                T.row(i) -= w(i) * T.row(k);
                w(i) = 0;
            }
        }
        ++k;
        return true;
    }
};

std::size_t gf2_cell_count(int n)
{
    // Unordered bases of size k: prod_{i<k} (2^n - 2^i) / k!
    long double total = 0;
    long double ordered = 1;
    for (int k = 1; k <= n; ++k) {
        ordered *= std::ldexp(1.0L, n) - std::ldexp(1.0L, k - 1);
        long double fact = 1;
        for (int j = 2; j <= k; ++j) fact *= j;
        total += ordered / fact;
    }
    return total > 1e18L ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(total);
}

} // namespace

SimplicialComplex build_universal_z2(int n, const BuildLimits& limits)
{
    if (n < 1) throw ResourceLimit("rank must be at least 1");
    if (n > 62) throw ResourceLimit("rank " + std::to_string(n) + " is beyond any feasible build");
    if (!limits.allow_large && n > limits.max_gf2_rank)
        throw ResourceLimit("rank " + std::to_string(n) + " exceeds the guard n <= " + std::to_string(limits.max_gf2_rank) +
                            " (set TORIBORD_MAX_CELLS to override)");
    const std::size_t cells = gf2_cell_count(n);
    if (cells > limits.max_cells)
        throw ResourceLimit("X(Z_2^" + std::to_string(n) + ") has " + std::to_string(cells) + " cells, cap is " +
                            std::to_string(limits.max_cells));

    const Word count = (Word{1} << n) - 1;
    std::vector<GF2Vec> vertices;
    vertices.reserve(count);
    for (Word mask = 1; mask <= count; ++mask) vertices.push_back(GF2Vec::from_mask(static_cast<std::size_t>(n), mask));
    std::sort(vertices.begin(), vertices.end());
    std::vector<Word> masks;
    for (const auto& v : vertices) masks.push_back(v.mask());

    std::vector<std::vector<VertexId>> simplices(static_cast<std::size_t>(n));
    Gf2SpanState root{&masks, std::vector<Word>(static_cast<std::size_t>(n), 0)};
    std::vector<VertexId> chosen;
    std::size_t seen = 0;
    enumerate(vertices.size(), n, root, chosen, simplices, seen, limits.max_cells);
    return SimplicialComplex(Ring::GF2, n, std::nullopt, std::move(vertices), {}, std::move(simplices));
}

SimplicialComplex build_universal_z_truncated(int n, long bound, const BuildLimits& limits)
{
    if (n < 1 || bound < 1) throw ResourceLimit("rank and bound must be at least 1");
    const double pool = std::pow(2.0 * static_cast<double>(bound) + 1.0, n);
    if (pool > 4e9) throw ResourceLimit("candidate pool (2B+1)^n is beyond any feasible build");
    if (!limits.allow_large && pool > static_cast<double>(limits.max_z_candidates))
        throw ResourceLimit("candidate pool (2B+1)^n = " + std::to_string(static_cast<long long>(pool)) + " exceeds " +
                            std::to_string(limits.max_z_candidates) + " (set TORIBORD_MAX_CELLS to override)");

    // Lexicographic odometer over [-B, B]^n.
    std::vector<IntVec> vertices;
    std::vector<long> digits(static_cast<std::size_t>(n), -bound);
    for (;;) {
        IntVec v(n);
        for (int i = 0; i < n; ++i) v(i) = digits[static_cast<std::size_t>(i)];
        if (is_primitive(v)) vertices.push_back(std::move(v));
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == bound) digits[static_cast<std::size_t>(pos--)] = -bound;
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    if (vertices.size() > limits.max_cells) throw ResourceLimit("vertex count exceeds the cell cap");

    std::vector<std::vector<VertexId>> simplices(static_cast<std::size_t>(n));
    ZSpanState root{&vertices, IntMatrix::Identity(n, n), 0};
    std::vector<VertexId> chosen;
    std::size_t seen = 0;
    enumerate(vertices.size(), n, root, chosen, simplices, seen, limits.max_cells);
    return SimplicialComplex(Ring::Z, n, bound, {}, std::move(vertices), std::move(simplices));
}

// --------------------------------------------------------------- queries

std::vector<std::size_t> f_vector(const SimplicialComplex& k)
{
    std::vector<std::size_t> f;
    for (int m = 0; m <= k.dimension(); ++m) f.push_back(k.count(m));
    return f;
}

bool is_pure(const SimplicialComplex& k)
{
    if (k.dimension() != k.n() - 1) return false;
    for (int m = 0; m < k.dimension(); ++m) {
        std::vector<bool> covered(k.count(m), false);
        std::vector<VertexId> face;
        for (std::size_t id = 0; id < k.count(m + 1); ++id) {
            const auto s = k.simplex(m + 1, id);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                covered[*k.find_simplex(face)] = true;
            }
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;
    }
    return true;
}

namespace {

Membership lookup(const SimplicialComplex& k, std::vector<VertexId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return k.find_simplex(ids) ? Membership::Contained : Membership::NotContained;
}

} // namespace

Membership contains_simplex(const SimplicialComplex& k, std::span<const GF2Vec> vectors)
{
    if (k.ring() != Ring::GF2) throw DimensionMismatch("GF(2) vectors queried against a Z complex");
    std::vector<VertexId> ids;
    for (const auto& v : vectors) {
        if (v.size() != static_cast<std::size_t>(k.n())) throw DimensionMismatch("vector length differs from n");
        auto id = k.find_vertex(v);
        if (!id) return Membership::NotContained;
        ids.push_back(*id);
    }
    return lookup(k, std::move(ids));
}

Membership contains_simplex(const SimplicialComplex& k, std::span<const IntVec> vectors)
{
    if (k.ring() != Ring::Z) throw DimensionMismatch("integer vectors queried against a GF(2) complex");
    std::vector<VertexId> ids;
    bool out_of_bound = false;
    bool missing = false;
    for (const auto& v : vectors) {
        if (v.size() != k.n()) throw DimensionMismatch("vector length differs from n");
        auto id = k.find_vertex(v);
        if (!id) {
            if (k.bound() && is_primitive(v) && max_norm(v) > *k.bound())
                out_of_bound = true;
            else
                missing = true;
            continue;
        }
        ids.push_back(*id);
    }
    if (out_of_bound) return Membership::OutOfBound;
    if (missing) return Membership::NotContained;
    return lookup(k, std::move(ids));
}

} // namespace toribord
