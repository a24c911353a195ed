#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "toribord/errors.hpp"
#include "toribord/universal_complex.hpp"

using namespace toribord;

namespace {

GF2Vec bits(std::initializer_list<int> b) { return GF2Vec::from_bits(b); }

// Every facet of every stored simplex is stored.
bool closed_under_faces(const SimplicialComplex& k)
{
    for (int m = 1; m <= k.dimension(); ++m) {
        for (std::size_t id = 0; id < k.count(m); ++id) {
            const auto s = k.simplex(m, id);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<VertexId> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                if (!k.find_simplex(face)) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("X(Z_2^n) f-vectors match brute-force enumeration")
{
    CHECK(f_vector(build_universal_z2(1)) == std::vector<std::size_t>{1});
    CHECK(f_vector(build_universal_z2(2)) == std::vector<std::size_t>{3, 3});
    CHECK(f_vector(build_universal_z2(3)) == std::vector<std::size_t>{7, 21, 28});
    for (int n = 1; n <= 4; ++n) CHECK(f_vector(build_universal_z2(n)) == oracle::brute_f_vector_z2(n));
    CHECK(f_vector(build_universal_z2(4)) == std::vector<std::size_t>{15, 105, 420, 840});
}

TEST_CASE("X(Z_2^n): vertices are every nonzero vector in lexicographic order")
{
    for (int n = 1; n <= 4; ++n) {
        const auto k = build_universal_z2(n);
        REQUIRE(k.num_vertices() == (std::size_t{1} << n) - 1);
        for (std::size_t i = 1; i < k.num_vertices(); ++i) CHECK(k.gf2_vertices()[i - 1] < k.gf2_vertices()[i]);
        CHECK(is_pure(k));
        CHECK(k.dimension() == n - 1);
        CHECK(closed_under_faces(k));
    }
    const auto k2 = build_universal_z2(2);
    CHECK(k2.gf2_vertices()[0] == bits({0, 1}));
    CHECK(k2.gf2_vertices()[2] == bits({1, 1}));
}

TEST_CASE("truncated X(Z^n) small cases")
{
    const auto k11 = build_universal_z_truncated(1, 1);
    CHECK(f_vector(k11) == std::vector<std::size_t>{2});
    CHECK(same_vector(k11.z_vertices()[0], int_vec({-1})));
    CHECK(same_vector(k11.z_vertices()[1], int_vec({1})));
    CHECK(f_vector(build_universal_z_truncated(1, 4)) == std::vector<std::size_t>{2});

    const auto k21 = build_universal_z_truncated(2, 1);
    CHECK(f_vector(k21) == std::vector<std::size_t>{8, 20});
    CHECK(is_pure(k21));
    CHECK(k21.bound() == 1L);

    const auto k22 = build_universal_z_truncated(2, 2);
    CHECK(k22.num_vertices() == 16);
}

TEST_CASE("truncated X(Z^n) matches brute-force completion search")
{
    for (auto [n, b] : std::vector<std::pair<int, long>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}) {
        CAPTURE(n);
        CAPTURE(b);
        const auto k = build_universal_z_truncated(n, b);
        CHECK(f_vector(k) == oracle::brute_f_vector_z(n, b));
        CHECK(closed_under_faces(k));
        for (std::size_t i = 1; i < k.num_vertices(); ++i) CHECK(lex_less(k.z_vertices()[i - 1], k.z_vertices()[i]));
    }
}

TEST_CASE("truncation is monotone in the bound")
{
    for (int n = 1; n <= 2; ++n) {
        const auto small = build_universal_z_truncated(n, 1);
        const auto large = build_universal_z_truncated(n, 2);
        for (int m = 0; m <= small.dimension(); ++m) {
            for (std::size_t id = 0; id < small.count(m); ++id) {
                std::vector<IntVec> vs;
                for (auto v : small.simplex(m, id)) vs.push_back(small.z_vertices()[v]);
                CHECK(contains_simplex(large, vs) == Membership::Contained);
            }
        }
    }
}

TEST_CASE("is_pure rejects an isolated vertex below top dimension")
{
    const auto k = SimplicialComplex::from_gf2(2, {bits({0, 1}), bits({1, 0})}, {{0}, {1}});
    CHECK_FALSE(is_pure(k));
    const auto full = SimplicialComplex::from_gf2(2, {bits({0, 1}), bits({1, 0})}, {{0, 1}});
    CHECK(is_pure(full));
}

TEST_CASE("contains_simplex")
{
    const auto k = build_universal_z2(2);
    const auto e1 = bits({1, 0});
    const auto e2 = bits({0, 1});
    CHECK(contains_simplex(k, std::vector<GF2Vec>{e1, e2}) == Membership::Contained);
    CHECK(contains_simplex(k, std::vector<GF2Vec>{e1, e2, e1 ^ e2}) == Membership::NotContained);
    CHECK(contains_simplex(k, std::vector<GF2Vec>{e2, e1, e1}) == Membership::Contained);

    const auto z = build_universal_z_truncated(2, 1);
    CHECK(contains_simplex(z, std::vector<IntVec>{int_vec({2, 1})}) == Membership::OutOfBound);
    CHECK(contains_simplex(z, std::vector<IntVec>{int_vec({1, 1}), int_vec({1, -1})}) == Membership::NotContained);
    CHECK(contains_simplex(z, std::vector<IntVec>{int_vec({1, 1}), int_vec({0, 1})}) == Membership::Contained);
    CHECK(contains_simplex(z, std::vector<IntVec>{int_vec({2, 0})}) == Membership::NotContained);
}

TEST_CASE("factories reject invalid input")
{
    CHECK_THROWS_AS(SimplicialComplex::from_gf2(2, {bits({0, 0})}, {}), InvalidComplex);
    CHECK_THROWS_AS(SimplicialComplex::from_gf2(2, {bits({1, 0}), bits({0, 1})}, {}), InvalidComplex);
    CHECK_THROWS_AS(SimplicialComplex::from_gf2(2, {bits({0, 1}), bits({1, 0}), bits({1, 1})}, {{0, 1, 2}}),
                    InvalidComplex);
    CHECK_THROWS_AS(SimplicialComplex::from_z(2, {int_vec({2, 0})}, {}), InvalidComplex);
    CHECK_THROWS_AS(SimplicialComplex::from_z(2, {int_vec({1, 1}), int_vec({1, -1})}, {{0, 1}}), InvalidComplex);
    CHECK_THROWS_AS(SimplicialComplex::from_z(2, {int_vec({2, 1})}, {}, 1L), InvalidComplex);
}

TEST_CASE("resource guards")
{
    BuildLimits strict;
    CHECK_THROWS_AS(build_universal_z2(6, strict), ResourceLimit);
    CHECK_THROWS_AS(build_universal_z_truncated(6, 3, strict), ResourceLimit);  // 7^6 candidates
    BuildLimits tiny;
    tiny.max_cells = 10;
    CHECK_THROWS_AS(build_universal_z2(3, tiny), ResourceLimit);
    CHECK_THROWS_AS(build_universal_z2(0), ResourceLimit);
}
