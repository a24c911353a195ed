#include "toribord/toric_models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace toribord {

namespace {

std::string facets_text(const FacetSet& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "}";
}

PolytopeCheck fail(std::string why) { return {false, std::move(why)}; }

struct RidgeEntry {
    std::size_t vertex;
    int sign;
};

std::map<FacetSet, std::vector<RidgeEntry>> ridges_of(const SimplePolytope& p)
{
    std::map<FacetSet, std::vector<RidgeEntry>> ridges;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const auto& f = p.vertices[v];
        for (std::size_t k = 0; k < f.size(); ++k) {
            FacetSet r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != k) r.push_back(f[i]);
            ridges[r].push_back({v, (k % 2) ? -1 : 1});
        }
    }
    return ridges;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void require_vertex(const SimplePolytope& p, std::size_t v)
{
    if (v >= p.vertices.size())
        throw InvalidPair("vertex " + std::to_string(v) + " out of range (" + std::to_string(p.vertices.size()) +
                          " vertices)");
}

std::vector<GF2Vec> vertex_columns(const SmallCoverPair& pair, std::size_t v)
{
    std::vector<GF2Vec> cols;
    for (auto f : pair.polytope.vertices[v]) cols.push_back(pair.lambda[f]);
    return cols;
}

std::vector<IntVec> vertex_columns(const QuasitoricPair& pair, std::size_t v)
{
    std::vector<IntVec> cols;
    for (auto f : pair.polytope.vertices[v]) cols.push_back(pair.lambda[f]);
    return cols;
}

std::vector<int> require_orientation(const SimplePolytope& p)
{
    auto o = polytope_orientation(p);
    if (!o) throw InvalidPair("polytope has no consistent orientation");
    return *o;
}

CanonicalTerm vertex_term(const QuasitoricPair& pair, const std::vector<int>& o, std::size_t v)
{
    return canonicalize_exterior(vertex_columns(pair, v), Integer(pair.orientation * o[v]));
}

bool same_monomial(const ExtMonomial& a, const ExtMonomial& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same_vector(a[i], b[i])) return false;
    return true;
}

bool same_column(const GF2Vec& a, const GF2Vec& b) { return a == b; }
bool same_column(const IntVec& a, const IntVec& b) { return same_vector(a, b); }

// Searches facet bijections sigma: facets(a) -> facets(b) with equal columns
// that carry the vertex set of a onto that of b; `accept` gets the final
// sigma and may reject it.
template <typename Pair>
bool find_isomorphism(const Pair& a, const Pair& b, const std::function<bool(const std::vector<FacetId>&)>& accept)
{
    const auto& pa = a.polytope;
    const auto& pb = b.polytope;
    if (pa.n != pb.n || pa.num_facets != pb.num_facets || pa.vertices.size() != pb.vertices.size()) return false;
    const int m = pa.num_facets;
    const std::set<FacetSet> targets(pb.vertices.begin(), pb.vertices.end());

    // Vertices of a that become fully assigned once facet f is assigned.
    std::vector<std::vector<std::size_t>> closes(m);
    for (std::size_t v = 0; v < pa.vertices.size(); ++v) closes[pa.vertices[v].back()].push_back(v);

    std::vector<FacetId> sigma(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(int)> extend = [&](int f) -> bool {
        if (f == m) return accept(sigma);
        for (int g = 0; g < m; ++g) {
            if (used[g] || !same_column(a.lambda[f], b.lambda[g])) continue;
            sigma[f] = g;
            used[g] = true;
            bool ok = true;
            for (auto v : closes[f]) {
                FacetSet image;
                for (auto x : pa.vertices[v]) image.push_back(sigma[x]);
                std::sort(image.begin(), image.end());
                if (!targets.count(image)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(f + 1)) return true;
            used[g] = false;
            sigma[f] = -1;
        }
        return false;
    };
    return extend(0);
}

// Facet map of the connected sum: for each facet at v2, the facet at v1 with
// the same column.
template <typename Pair>
std::optional<std::map<FacetId, FacetId>> match_corners(const Pair& p1, std::size_t v1, const Pair& p2, std::size_t v2)
{
    std::map<FacetId, FacetId> match;
    for (auto b : p2.polytope.vertices[v2]) {
        bool found = false;
        for (auto a : p1.polytope.vertices[v1]) {
            if (same_column(p1.lambda[a], p2.lambda[b])) {
                match[b] = a;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return match;
}

template <typename Pair>
Pair glue(const Pair& p1, std::size_t v1, const Pair& p2, std::size_t v2, const std::map<FacetId, FacetId>& match)
{
    Pair out;
    auto& q = out.polytope;
    q.n = p1.polytope.n;
    out.lambda = p1.lambda;
    std::vector<FacetId> relabel(p2.polytope.num_facets);
    FacetId next = p1.polytope.num_facets;
    for (FacetId b = 0; b < p2.polytope.num_facets; ++b) {
        auto it = match.find(b);
        if (it != match.end()) {
            relabel[b] = it->second;
        } else {
            relabel[b] = next++;
            out.lambda.push_back(p2.lambda[b]);
        }
    }
    q.num_facets = next;
    for (std::size_t v = 0; v < p1.polytope.vertices.size(); ++v)
        if (v != v1) q.vertices.push_back(p1.polytope.vertices[v]);
    for (std::size_t v = 0; v < p2.polytope.vertices.size(); ++v) {
        if (v == v2) continue;
        FacetSet f;
        for (auto x : p2.polytope.vertices[v]) f.push_back(relabel[x]);
        std::sort(f.begin(), f.end());
        q.vertices.push_back(std::move(f));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- polytopes

PolytopeCheck validate_polytope(const SimplePolytope& p)
{
    if (p.n < 1) return fail("dimension must be positive");
    if (p.num_facets < 1) return fail("polytope has no facets");
    if (p.vertices.empty()) return fail("polytope has no vertices");
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const auto& f = p.vertices[v];
        if (static_cast<int>(f.size()) != p.n)
            return fail("vertex " + std::to_string(v) + " lies in " + std::to_string(f.size()) + " facets, expected " +
                        std::to_string(p.n));
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= p.num_facets)
                return fail("vertex " + std::to_string(v) + " names facet " + std::to_string(f[i]) + " out of range");
            if (i > 0 && f[i - 1] >= f[i])
                return fail("vertex " + std::to_string(v) + " facets " + facets_text(f) + " are not strictly increasing");
        }
    }
    {
        auto sorted = p.vertices;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) return fail("duplicate vertex " + facets_text(*dup));
    }
    const std::size_t m = static_cast<std::size_t>(p.num_facets);
    std::vector<bool> used(m, false);
    for (const auto& f : p.vertices)
        for (auto i : f) used[i] = true;
    for (std::size_t f = 0; f < m; ++f)
        if (!used[f]) return fail("facet " + std::to_string(f) + " contains no vertex");
    const auto ridges = ridges_of(p);
    std::vector<std::size_t> parent(p.vertices.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& [ridge, entries] : ridges) {
        if (entries.size() != 2)
            return fail("ridge " + facets_text(ridge) + " lies in " + std::to_string(entries.size()) +
                        " vertices, expected 2");
        parent[find_root(parent, entries[0].vertex)] = find_root(parent, entries[1].vertex);
    }
    const auto root = find_root(parent, 0);
    for (std::size_t v = 1; v < parent.size(); ++v)
        if (find_root(parent, v) != root) return fail("vertex graph is disconnected");
    return {};
}

std::optional<std::vector<int>> polytope_orientation(const SimplePolytope& p)
{
    if (p.vertices.empty()) return std::nullopt;
    const auto ridges = ridges_of(p);
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(p.vertices.size());  // (neighbor, required ratio)
    for (const auto& [ridge, e] : ridges) {
        if (e.size() != 2) return std::nullopt;
        // o(a) s_a + o(b) s_b = 0  <=>  o(b) = -o(a) s_a s_b
        const int ratio = -e[0].sign * e[1].sign;
        adj[e[0].vertex].push_back({e[1].vertex, ratio});
        adj[e[1].vertex].push_back({e[0].vertex, ratio});
    }
    std::vector<int> o(p.vertices.size(), 0);
    o[0] = 1;
    std::queue<std::size_t> todo;
    todo.push(0);
    while (!todo.empty()) {
        const auto v = todo.front();
        todo.pop();
        for (auto [w, ratio] : adj[v]) {
            const int want = o[v] * ratio;
            if (o[w] == 0) {
                o[w] = want;
                todo.push(w);
            } else if (o[w] != want) {
                return std::nullopt;
            }
        }
    }
    if (std::find(o.begin(), o.end(), 0) != o.end()) return std::nullopt;
    return o;
}

SimplePolytope simplex_polytope(int n)
{
    if (n < 1) throw DimensionMismatch("simplex dimension must be positive");
    SimplePolytope p{n, n + 1, {}};
    for (int omit = n; omit >= 0; --omit) {
        FacetSet f;
        for (int i = 0; i <= n; ++i)
            if (i != omit) f.push_back(i);
        p.vertices.push_back(std::move(f));
    }
    return p;
}

SimplePolytope polygon(int k)
{
    if (k < 3) throw DimensionMismatch("a polygon needs at least 3 edges");
    SimplePolytope p{2, k, {}};
    for (int i = 0; i + 1 < k; ++i) p.vertices.push_back({i, i + 1});
    p.vertices.push_back({0, k - 1});
    return p;
}

SimplePolytope cube_polytope(int n)
{
    if (n < 1 || n > 20) throw DimensionMismatch("cube dimension must lie in [1, 20]");
    SimplePolytope p{n, 2 * n, {}};
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        FacetSet f;
        for (int i = 0; i < n; ++i) f.push_back(2 * i + static_cast<int>((mask >> (n - 1 - i)) & 1));
        p.vertices.push_back(std::move(f));
    }
    return p;
}

// -------------------------------------------------------------------- pairs

PolytopeCheck validate_pair(const SmallCoverPair& pair)
{
    const auto& p = pair.polytope;
    if (auto c = validate_polytope(p); !c) return c;
    if (pair.lambda.size() != static_cast<std::size_t>(p.num_facets))
        return fail("expected " + std::to_string(p.num_facets) + " columns, got " + std::to_string(pair.lambda.size()));
    for (std::size_t f = 0; f < pair.lambda.size(); ++f) {
        if (pair.lambda[f].size() != static_cast<std::size_t>(p.n))
            return fail("column of facet " + std::to_string(f) + " has the wrong length");
        if (pair.lambda[f].is_zero()) return fail("column of facet " + std::to_string(f) + " is zero");
    }
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        if (!is_independent_gf2(vertex_columns(pair, v)))
            return fail("columns at vertex " + std::to_string(v) + " " + facets_text(p.vertices[v]) +
                        " are linearly dependent");
    return {};
}

PolytopeCheck validate_pair(const QuasitoricPair& pair)
{
    const auto& p = pair.polytope;
    if (auto c = validate_polytope(p); !c) return c;
    if (pair.orientation != 1 && pair.orientation != -1) return fail("orientation must be +1 or -1");
    if (!polytope_orientation(p)) return fail("polytope has no consistent orientation");
    if (pair.lambda.size() != static_cast<std::size_t>(p.num_facets))
        return fail("expected " + std::to_string(p.num_facets) + " columns, got " + std::to_string(pair.lambda.size()));
    for (std::size_t f = 0; f < pair.lambda.size(); ++f)
        if (pair.lambda[f].size() != p.n) return fail("column of facet " + std::to_string(f) + " has the wrong length");
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const Integer det = int_det(columns_matrix(vertex_columns(pair, v), p.n));
        if (abs(det) != 1)
            return fail("columns at vertex " + std::to_string(v) + " " + facets_text(p.vertices[v]) +
                        " have determinant " + det.str());
    }
    return {};
}

void check_pair(const SmallCoverPair& pair)
{
    if (auto c = validate_pair(pair); !c) throw InvalidPair(c.diagnostic);
}

void check_pair(const QuasitoricPair& pair)
{
    if (auto c = validate_pair(pair); !c) throw InvalidPair(c.diagnostic);
}

GF2PolyJStar coloring_polynomial_z2(const SmallCoverPair& pair)
{
    check_pair(pair);
    GF2PolyJStar out(pair.polytope.n, pair.polytope.n);
    for (std::size_t v = 0; v < pair.polytope.vertices.size(); ++v) out.add(vertex_columns(pair, v));
    return out;
}

GF2PolyJ fixed_point_data_z2(const SmallCoverPair& pair)
{
    check_pair(pair);
    const auto n = static_cast<std::size_t>(pair.polytope.n);
    GF2PolyJ out(pair.polytope.n, pair.polytope.n);
    for (std::size_t v = 0; v < pair.polytope.vertices.size(); ++v) {
        const GF2Matrix dual = gf2_dual_basis(GF2Matrix::from_columns(n, vertex_columns(pair, v)));
        GF2Monomial m;
        for (std::size_t j = 0; j < n; ++j) m.push_back(dual.col_vec(j));
        out.add(std::move(m));
    }
    return out;
}

ExtPolyJStar phi_quasitoric(const QuasitoricPair& pair)
{
    check_pair(pair);
    const auto o = require_orientation(pair.polytope);
    ExtPolyJStar out(pair.polytope.n, pair.polytope.n);
    for (std::size_t v = 0; v < pair.polytope.vertices.size(); ++v)
        out.add(vertex_columns(pair, v), Integer(pair.orientation * o[v]));
    return out;
}

ExtPolyJ fixed_point_data_unitary(const QuasitoricPair& pair) { return dualize_z(phi_quasitoric(pair)); }

std::vector<VertexSign> vertex_signs(const QuasitoricPair& pair)
{
    check_pair(pair);
    const auto o = require_orientation(pair.polytope);
    std::vector<VertexSign> out;
    for (std::size_t v = 0; v < pair.polytope.vertices.size(); ++v) {
        const Integer det = int_det(columns_matrix(vertex_columns(pair, v), pair.polytope.n));
        out.push_back({v, pair.orientation * o[v] * det.convert_to<int>()});
    }
    return out;
}

// -------------------------------------------------------------- equivalence

bool pair_equivalent(const SmallCoverPair& a, const SmallCoverPair& b)
{
    return find_isomorphism(a, b, [](const std::vector<FacetId>&) { return true; });
}

bool pair_equivalent(const QuasitoricPair& a, const QuasitoricPair& b)
{
    const auto oa = polytope_orientation(a.polytope);
    const auto ob = polytope_orientation(b.polytope);
    if (!oa || !ob) return false;
    std::map<FacetSet, std::size_t> index_b;
    for (std::size_t v = 0; v < b.polytope.vertices.size(); ++v) index_b[b.polytope.vertices[v]] = v;
    return find_isomorphism(a, b, [&](const std::vector<FacetId>& sigma) {
        for (std::size_t v = 0; v < a.polytope.vertices.size(); ++v) {
            FacetSet image;
            for (auto f : a.polytope.vertices[v]) image.push_back(sigma[f]);
            std::sort(image.begin(), image.end());
            const auto ta = vertex_term(a, *oa, v);
            const auto tb = vertex_term(b, *ob, index_b.at(image));
            if (ta.coeff != tb.coeff || !same_monomial(ta.mono, tb.mono)) return false;
        }
        return true;
    });
}

// ------------------------------------------------------------ connected sum

SmallCoverPair connect_sum(const SmallCoverPair& p1, std::size_t v1, const SmallCoverPair& p2, std::size_t v2)
{
    check_pair(p1);
    check_pair(p2);
    require_vertex(p1.polytope, v1);
    require_vertex(p2.polytope, v2);
    if (p1.polytope.n != p2.polytope.n) throw NoMatching("pairs have different dimensions");
    const auto match = match_corners(p1, v1, p2, v2);
    if (!match) throw NoMatching("the colors at the two vertices differ");
    SmallCoverPair out = glue(p1, v1, p2, v2, *match);
    if (auto c = validate_pair(out); !c) throw InvalidResult(c.diagnostic);
    if (!(coloring_polynomial_z2(out) == coloring_polynomial_z2(p1) + coloring_polynomial_z2(p2)))
        throw InvalidResult("coloring polynomial of the sum is not the sum of the coloring polynomials");
    return out;
}

QuasitoricPair connect_sum(const QuasitoricPair& p1, std::size_t v1, const QuasitoricPair& p2, std::size_t v2)
{
    check_pair(p1);
    check_pair(p2);
    require_vertex(p1.polytope, v1);
    require_vertex(p2.polytope, v2);
    if (p1.polytope.n != p2.polytope.n) throw NoMatching("pairs have different dimensions");
    const auto match = match_corners(p1, v1, p2, v2);
    if (!match) throw NoMatching("the columns at the two vertices differ");
    const auto o1 = require_orientation(p1.polytope);
    const auto o2 = require_orientation(p2.polytope);
    const auto t1 = vertex_term(p1, o1, v1);
    const auto t2 = vertex_term(p2, o2, v2);
    if (t1.coeff != -t2.coeff)
        throw NoMatching("vertex signs agree (" + t1.coeff.str() + " and " + t2.coeff.str() +
                         "); the two vertex terms must cancel");

    QuasitoricPair out = glue(p1, v1, p2, v2, *match);
    if (auto c = validate_polytope(out.polytope); !c) throw InvalidResult(c.diagnostic);
    const auto o = polytope_orientation(out.polytope);
    if (!o) throw InvalidResult("glued polytope has no consistent orientation");
    // Orient the result like the first summand on its surviving vertices.
    const std::size_t keep = (v1 == 0) ? 1 : 0;
    out.orientation = p1.orientation * o1[keep] * (*o)[0];
    if (auto c = validate_pair(out); !c) throw InvalidResult(c.diagnostic);
    if (!(phi_quasitoric(out) == phi_quasitoric(p1) + phi_quasitoric(p2)))
        throw InvalidResult("phi of the sum is not the sum of phi");
    return out;
}

// ------------------------------------------------------------ basis changes

SmallCoverPair apply_basis_change(const SmallCoverPair& pair, const GF2Matrix& a)
{
    const auto n = static_cast<std::size_t>(pair.polytope.n);
    if (a.rows() != n || a.cols() != n || gf2_rank(a) != n) throw NotInvertible("matrix is not invertible over GF(2)");
    SmallCoverPair out = pair;
    for (auto& c : out.lambda) c = a * c;
    return out;
}

QuasitoricPair apply_basis_change(const QuasitoricPair& pair, const IntMatrix& a)
{
    const Index n = pair.polytope.n;
    if (a.rows() != n || a.cols() != n || abs(int_det(a)) != 1)
        throw NotInvertible("matrix is not invertible over Z (|det| != 1)");
    QuasitoricPair out = pair;
    for (auto& c : out.lambda) c = a * c;
    return out;
}

std::optional<IntMatrix> find_signed_permutation(const QuasitoricPair& p1, std::size_t v1, const QuasitoricPair& p2,
                                                 std::size_t v2)
{
    check_pair(p1);
    check_pair(p2);
    require_vertex(p1.polytope, v1);
    require_vertex(p2.polytope, v2);
    const int n = p1.polytope.n;
    if (p2.polytope.n != n) return std::nullopt;
    const auto o1 = require_orientation(p1.polytope);
    const auto o2 = require_orientation(p2.polytope);
    const auto t1 = vertex_term(p1, o1, v1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            IntMatrix a = IntMatrix::Zero(n, n);
            for (int j = 0; j < n; ++j) a(perm[j], j) = ((signs >> j) & 1) ? -1 : 1;
            const QuasitoricPair q = apply_basis_change(p2, a);
            if (!match_corners(p1, v1, q, v2)) continue;
            if (vertex_term(q, o2, v2).coeff == -t1.coeff) return a;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace toribord
