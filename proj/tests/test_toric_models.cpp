#include <doctest.h>

#include "support/oracles.hpp"
#include "toribord/errors.hpp"
#include "toribord/toric_models.hpp"

using namespace toribord;

namespace {

const GF2Vec x = GF2Vec::from_bits({1, 0});
const GF2Vec y = GF2Vec::from_bits({0, 1});
const GF2Vec xy = GF2Vec::from_bits({1, 1});

SmallCoverPair rp2() { return {simplex_polytope(2), {x, y, xy}}; }

QuasitoricPair cp2() { return {simplex_polytope(2), {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, -1})}}; }

QuasitoricPair cp1() { return {simplex_polytope(1), {int_vec({1}), int_vec({-1})}}; }

ExtPolyJStar cp2_phi()
{
    ExtPolyJStar phi(2, 2);
    phi.add({int_vec({1, 0}), int_vec({0, 1})}, Integer(1));
    phi.add({int_vec({1, 0}), int_vec({-1, -1})}, Integer(-1));
    phi.add({int_vec({0, 1}), int_vec({-1, -1})}, Integer(1));
    return phi;
}

std::vector<int> signs_of(const QuasitoricPair& p)
{
    std::vector<int> out;
    for (const auto& s : vertex_signs(p)) out.push_back(s.sign);
    return out;
}

} // namespace

TEST_CASE("standard polytopes are valid")
{
    CHECK(validate_polytope(simplex_polytope(1)));
    CHECK(validate_polytope(simplex_polytope(2)));
    CHECK(validate_polytope(simplex_polytope(3)));
    for (int k = 3; k <= 7; ++k) CHECK(validate_polytope(polygon(k)));
    for (int n = 1; n <= 3; ++n) CHECK(validate_polytope(cube_polytope(n)));

    const auto tri = simplex_polytope(2);
    CHECK(tri.vertices == std::vector<FacetSet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(cube_polytope(2).vertices.size() == 4);
    CHECK(cube_polytope(3).num_facets == 6);
}

TEST_CASE("validate_polytope rejects broken incidence")
{
    // A vertex in three facets of a polygon.
    const auto three = validate_polytope({2, 3, {{0, 1, 2}, {0, 1}, {1, 2}}});
    CHECK_FALSE(three);
    CHECK_FALSE(three.diagnostic.empty());

    // Duplicate vertex.
    CHECK_FALSE(validate_polytope({2, 3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}}));
    // Unused facet.
    CHECK_FALSE(validate_polytope({2, 4, {{0, 1}, {0, 2}, {1, 2}}}));
    // A path: facets 0 and 2 each bound a single vertex.
    CHECK_FALSE(validate_polytope({2, 3, {{0, 1}, {1, 2}}}));
    // Two disjoint triangles.
    CHECK_FALSE(validate_polytope({2, 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}}));
    // Facet id outside range.
    CHECK_FALSE(validate_polytope({2, 3, {{0, 1}, {0, 3}, {1, 3}}}));
}

TEST_CASE("small cover pairs")
{
    CHECK(validate_pair(rp2()));
    GF2PolyJStar expect(2, 2);
    expect.add({x, y});
    expect.add({x, xy});
    expect.add({y, xy});
    CHECK(coloring_polynomial_z2(rp2()) == expect);
    CHECK(d_gf2(coloring_polynomial_z2(rp2())).is_zero());
    CHECK(fixed_point_data_z2(rp2()) == dualize_gf2(expect));

    const SmallCoverPair square{polygon(4), {x, y, x, y}};
    CHECK(validate_pair(square));
    CHECK(coloring_polynomial_z2(square).is_zero());

    const SmallCoverPair bad{simplex_polytope(2), {x, y, y}};
    CHECK_FALSE(validate_pair(bad));
    CHECK_THROWS_AS(check_pair(bad), InvalidPair);
    CHECK_THROWS_AS(coloring_polynomial_z2(bad), InvalidPair);

    const SmallCoverPair short_lambda{simplex_polytope(2), {x, y}};
    CHECK_THROWS_AS(check_pair(short_lambda), InvalidPair);
}

TEST_CASE("quasitoric CP^2 and CP^1")
{
    CHECK(validate_pair(cp2()));
    CHECK(phi_quasitoric(cp2()) == cp2_phi());
    CHECK(d_z(phi_quasitoric(cp2())).is_zero());
    CHECK(signs_of(cp2()) == std::vector<int>{1, 1, 1});
    CHECK(fixed_point_data_unitary(cp2()) == dualize_z(cp2_phi()));

    ExtPolyJStar cp1_phi(1, 1);
    cp1_phi.add({int_vec({1})}, Integer(1));
    cp1_phi.add({int_vec({-1})}, Integer(-1));
    CHECK(phi_quasitoric(cp1()) == cp1_phi);
    CHECK(signs_of(cp1()) == std::vector<int>{1, 1});

    auto reversed = cp2();
    reversed.orientation = -1;
    CHECK(phi_quasitoric(reversed) == -cp2_phi());
    CHECK(signs_of(reversed) == std::vector<int>{-1, -1, -1});
}

TEST_CASE("quasitoric square: d vanishes for any admissible characteristic matrix")
{
    const QuasitoricPair square{polygon(4), {int_vec({1, 0}), int_vec({0, 1}), int_vec({1, 0}), int_vec({0, 1})}};
    REQUIRE(validate_pair(square));
    CHECK(d_z(phi_quasitoric(square)).is_zero());

    const QuasitoricPair hirzebruch{polygon(4), {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, 2}), int_vec({0, -1})}};
    REQUIRE(validate_pair(hirzebruch));
    CHECK(d_z(phi_quasitoric(hirzebruch)).is_zero());
}

TEST_CASE("quasitoric pairs reject non-unimodular vertices")
{
    const QuasitoricPair bad{simplex_polytope(2), {int_vec({1, 0}), int_vec({1, 2}), int_vec({-1, -1})}};
    CHECK_FALSE(validate_pair(bad));
    CHECK_THROWS_AS(check_pair(bad), InvalidPair);
    CHECK_THROWS_AS(phi_quasitoric(bad), InvalidPair);

    auto flag = cp2();
    flag.orientation = 0;
    CHECK_FALSE(validate_pair(flag));
}

TEST_CASE("polytope_orientation")
{
    const auto o = polytope_orientation(simplex_polytope(2));
    REQUIRE(o.has_value());
    CHECK((*o)[0] == 1);
    CHECK(o->size() == 3);
    for (int n = 1; n <= 3; ++n) CHECK(polytope_orientation(cube_polytope(n)).has_value());
}

TEST_CASE("pair_equivalent")
{
    CHECK(pair_equivalent(rp2(), rp2()));
    CHECK(pair_equivalent(cp2(), cp2()));

    // Cyclic relabeling of the triangle's facets.
    const SmallCoverPair rp2_shift{simplex_polytope(2), {xy, x, y}};
    CHECK(pair_equivalent(rp2(), rp2_shift));
    const QuasitoricPair cp2_shift{simplex_polytope(2), {int_vec({-1, -1}), int_vec({1, 0}), int_vec({0, 1})}};
    CHECK(pair_equivalent(cp2(), cp2_shift));

    auto negated = cp2();
    negated.lambda[0] = int_vec({-1, 0});
    CHECK_FALSE(pair_equivalent(cp2(), negated));

    auto reversed = cp2();
    reversed.orientation = -1;
    CHECK_FALSE(pair_equivalent(cp2(), reversed));

    const SmallCoverPair square{polygon(4), {x, y, x, y}};
    CHECK_FALSE(pair_equivalent(rp2(), square));
}

TEST_CASE("connect_sum of small covers")
{
    const auto sum = connect_sum(rp2(), 0, rp2(), 0);
    CHECK(validate_pair(sum));
    CHECK(sum.polytope.num_facets == 4);
    CHECK(sum.polytope.vertices.size() == 4);
    CHECK(coloring_polynomial_z2(sum) == coloring_polynomial_z2(rp2()) + coloring_polynomial_z2(rp2()));
    // Facets around the square: x, xy, y, xy.
    CHECK(pair_equivalent(sum, SmallCoverPair{polygon(4), {x, xy, y, xy}}));
    CHECK_FALSE(pair_equivalent(sum, SmallCoverPair{polygon(4), {x, y, x, y}}));

    // Vertex 2 of the second copy carries {y, xy}, not {x, y}.
    CHECK_THROWS_AS(connect_sum(rp2(), 0, rp2(), 2), NoMatching);
    CHECK_THROWS_AS(connect_sum(rp2(), 5, rp2(), 0), InvalidPair);
}

TEST_CASE("connect_sum of quasitoric pairs")
{
    auto reversed = cp2();
    reversed.orientation = -1;
    const auto sum = connect_sum(cp2(), 0, reversed, 0);
    CHECK(validate_pair(sum));
    CHECK(sum.polytope.vertices.size() == 4);
    CHECK(phi_quasitoric(sum) == phi_quasitoric(cp2()) + phi_quasitoric(reversed));
    CHECK(d_z(phi_quasitoric(sum)).is_zero());

    CHECK_THROWS_AS(connect_sum(cp2(), 0, cp2(), 0), NoMatching);
}

TEST_CASE("apply_basis_change")
{
    const auto id = int_matrix({{1, 0}, {0, 1}});
    CHECK(pair_equivalent(apply_basis_change(cp2(), id), cp2()));

    const auto swapped = apply_basis_change(cp2(), int_matrix({{0, 1}, {1, 0}}));
    CHECK(validate_pair(swapped));
    CHECK(signs_of(swapped) == std::vector<int>{-1, -1, -1});
    CHECK(phi_quasitoric(swapped) == transform(cp2_phi(), int_matrix({{0, 1}, {1, 0}})));

    const auto flipped = apply_basis_change(cp2(), int_matrix({{1, 0}, {0, -1}}));
    CHECK(signs_of(flipped) == std::vector<int>{-1, -1, -1});

    CHECK_THROWS_AS(apply_basis_change(cp2(), int_matrix({{2, 0}, {0, 1}})), NotInvertible);

    const auto g = GF2Matrix::from_columns(2, {y, x});
    const auto rp2_swapped = apply_basis_change(rp2(), g);
    CHECK(rp2_swapped.lambda[0] == y);
    CHECK(coloring_polynomial_z2(rp2_swapped) == coloring_polynomial_z2(rp2()));
    CHECK_THROWS_AS(apply_basis_change(rp2(), GF2Matrix::from_columns(2, {x, x})), NotInvertible);
}

TEST_CASE("find_signed_permutation")
{
    const auto a = find_signed_permutation(cp2(), 0, cp2(), 0);
    REQUIRE(a.has_value());
    CHECK(abs(int_det(*a)) == 1);
    for (Index i = 0; i < 2; ++i) CHECK(a->row(i).cwiseAbs().sum() == 1);
    const auto moved = apply_basis_change(cp2(), *a);
    const auto sum = connect_sum(cp2(), 0, moved, 0);
    CHECK(phi_quasitoric(sum) == phi_quasitoric(cp2()) + phi_quasitoric(moved));

    // Columns at the vertex are not a signed permutation of each other.
    const QuasitoricPair far{simplex_polytope(2), {int_vec({1, 1}), int_vec({0, 1}), int_vec({-1, -2})}};
    REQUIRE(validate_pair(far));
    CHECK_FALSE(find_signed_permutation(cp2(), 0, far, 0).has_value());
}
