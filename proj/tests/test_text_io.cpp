#include <doctest.h>

#include "support/oracles.hpp"
#include "toribord/errors.hpp"
#include "toribord/text_io.hpp"

using namespace toribord;

namespace {

const GF2Vec x = GF2Vec::from_bits({1, 0});
const GF2Vec y = GF2Vec::from_bits({0, 1});
const GF2Vec xy = GF2Vec::from_bits({1, 1});

ComplexPtr share(SimplicialComplex k) { return std::make_shared<const SimplicialComplex>(std::move(k)); }

template <typename Read>
std::string reread(const std::string& text, Read read)
{
    std::istringstream in(text);
    return to_text(read(in));
}

AnyPoly poly_from(const std::string& text)
{
    std::istringstream in(text);
    return read_poly(in);
}

SimplicialComplex complex_from(const std::string& text)
{
    std::istringstream in(text);
    return read_complex(in);
}

PairFile pair_from(const std::string& text)
{
    std::istringstream in(text);
    return read_pair(in);
}

} // namespace

TEST_CASE("complex round trip")
{
    for (int n = 1; n <= 3; ++n) {
        const auto k = build_universal_z2(n);
        const auto text = to_text(k);
        CHECK(reread(text, read_complex) == text);
        CHECK(f_vector(complex_from(text)) == f_vector(k));
    }
    for (auto [n, b] : std::vector<std::pair<int, long>>{{1, 2}, {2, 1}, {2, 2}}) {
        const auto k = build_universal_z_truncated(n, b);
        const auto text = to_text(k);
        CHECK(reread(text, read_complex) == text);
        const auto back = complex_from(text);
        CHECK(f_vector(back) == f_vector(k));
        CHECK(back.bound() == b);
    }
    CHECK(to_text(build_universal_z2(2)) == "COMPLEX ring=gf2 n=2\nV 0 0,1\nV 1 1,0\nV 2 1,1\nS 0 1\nS 0 2\nS 1 2\n");
}

TEST_CASE("complex reader tolerates comments and rejects malformed input")
{
    const auto k = complex_from("# hollow triangle\n\nCOMPLEX ring=gf2 n=2\nV 0 0,1\nV 1 1,0\n# edges\nV 2 1,1\nS 0 1\nS 1 2\nS 0 2\n");
    CHECK(f_vector(k) == std::vector<std::size_t>{3, 3});

    CHECK_THROWS_AS(complex_from(""), ParseError);
    CHECK_THROWS_AS(complex_from("COMPLEX ring=q n=2\n"), ParseError);
    CHECK_THROWS_AS(complex_from("COMPLEX ring=gf2 n=2\nV 0 0,1\nV 2 1,0\n"), ParseError);
    CHECK_THROWS_AS(complex_from("COMPLEX ring=gf2 n=2\nV 0 0,1\nS 0 7\n"), ParseError);
    CHECK_THROWS_AS(complex_from("COMPLEX ring=gf2 n=2\nV 0 0,1\nV 1 1,0\nS 1 0\n"), ParseError);
    CHECK_THROWS_AS(complex_from("COMPLEX ring=gf2 n=2\nV 0 0,1\nQ 1\n"), ParseError);
    CHECK_THROWS_AS(complex_from("COMPLEX ring=z n=2\nV 0 1,1\nV 1 1,-1\nS 0 1\n"), InvalidComplex);
    try {
        complex_from("COMPLEX ring=gf2 n=2\nV 0 0,1\nV 1 x,0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("chain round trip")
{
    const auto k = share(build_universal_z2(2));
    Chain c(k, 1, Ring::GF2);
    for (std::size_t e = 0; e < 3; ++e) c.add(e, 1);
    const auto text = to_text(c);
    std::istringstream in(text);
    const auto back = read_chain(in, k);
    CHECK(back == c);
    CHECK(to_text(back) == text);

    const auto z = share(build_universal_z_truncated(2, 1));
    Chain cz(z, 1, Ring::Z);
    cz.add(3, -2);
    cz.add(7, 5);
    const auto tz = to_text(cz);
    std::istringstream inz(tz);
    CHECK(read_chain(inz, z) == cz);

    std::istringstream wrong("CHAIN dim=1 ring=q\nC 0 1\n");
    CHECK_THROWS_AS(read_chain(wrong, k), ParseError);
    std::istringstream out_of_range("CHAIN dim=1 ring=gf2\nC 99 1\n");
    CHECK_THROWS_AS(read_chain(out_of_range, k), ParseError);
}

TEST_CASE("polynomial round trip")
{
    GF2PolyJ g(2, 2);
    g.add({x, y});
    g.add({x, xy});
    g.add({y, xy});
    const auto tg = to_text(g);
    CHECK(tg == "POLY ring=gf2 n=2 side=J deg=2\nT 1 0,1 1,0\nT 1 0,1 1,1\nT 1 1,0 1,1\n");
    CHECK(std::get<GF2PolyJ>(poly_from(tg)) == g);
    CHECK(to_text(poly_from(tg)) == tg);

    ExtPolyJStar phi(2, 2);
    phi.add({int_vec({1, 0}), int_vec({0, 1})}, Integer(1));
    phi.add({int_vec({1, 0}), int_vec({-1, -1})}, Integer(-1));
    phi.add({int_vec({0, 1}), int_vec({-1, -1})}, Integer(1));
    const auto tp = to_text(phi);
    CHECK(std::get<ExtPolyJStar>(poly_from(tp)) == phi);
    CHECK(to_text(poly_from(tp)) == tp);

    // Coefficient omitted: defaults to 1, and the monomial is canonicalized.
    const auto p = poly_from("POLY ring=z n=2 side=J deg=2\nT 1,0 0,1\n");
    ExtPolyJ expect(2, 2);
    expect.add({int_vec({0, 1}), int_vec({1, 0})}, Integer(-1));
    CHECK(std::get<ExtPolyJ>(p) == expect);

    const auto zero = poly_from("POLY ring=gf2 n=3 side=J* deg=3\n");
    CHECK(std::get<GF2PolyJStar>(zero).is_zero());
    CHECK(to_text(zero) == "POLY ring=gf2 n=3 side=J* deg=3\n");
}

TEST_CASE("polynomial parse errors")
{
    CHECK_THROWS_AS(poly_from("POLY ring=gf2 n=2 side=K deg=2\n"), ParseError);
    CHECK_THROWS_AS(poly_from("POLY ring=gf2 n=2 side=J deg=2\nT 1 0,1\n"), ParseError);
    CHECK_THROWS_AS(poly_from("POLY ring=gf2 n=2 side=J deg=2\nT 0,1,1 1,0\n"), ParseError);
    CHECK_THROWS_AS(poly_from("POLY ring=gf2 n=2 side=J deg=2\nT 0,2 1,0\n"), ParseError);
    CHECK_THROWS_AS(poly_from("POLY ring=z n=2 side=J deg=1\nT abc 1,0\n"), ParseError);
    CHECK_THROWS_AS(poly_from("POLY n=2 side=J deg=1\n"), ParseError);
}

TEST_CASE("polytope and pair round trip")
{
    const auto tri = simplex_polytope(2);
    const auto tt = to_text(tri);
    CHECK(tt == "POLYTOPE n=2 facets=3\nVX 0 1\nVX 0 2\nVX 1 2\n");
    const auto pt = pair_from(tt);
    CHECK(pt.polytope == tri);
    CHECK_FALSE(pt.z2.has_value());
    CHECK_FALSE(pt.unitary.has_value());

    const SmallCoverPair rp2{tri, {x, y, xy}};
    const auto ts = to_text(rp2);
    const auto ps = pair_from(ts);
    REQUIRE(ps.z2.has_value());
    CHECK(ps.z2->lambda == rp2.lambda);
    CHECK(to_text(*ps.z2) == ts);

    QuasitoricPair cp2{tri, {int_vec({1, 0}), int_vec({0, 1}), int_vec({-1, -1})}, -1};
    const auto tq = to_text(cp2);
    CHECK(tq.find("orient=-1") != std::string::npos);
    const auto pq = pair_from(tq);
    REQUIRE(pq.unitary.has_value());
    CHECK(pq.unitary->orientation == -1);
    CHECK(pair_equivalent(*pq.unitary, cp2));
    CHECK(to_text(*pq.unitary) == tq);

    // Vertex lines keep their order, since vertex ids are positions; facet ids
    // within a line are sorted.
    const auto shuffled = pair_from("POLYTOPE n=2 facets=3 ring=gf2\nVX 2 1\nVX 0 1\nVX 0 2\nCOL 0 1,0\nCOL 1 0,1\nCOL 2 1,1\n");
    REQUIRE(shuffled.z2.has_value());
    CHECK(shuffled.polytope.vertices == std::vector<FacetSet>{{1, 2}, {0, 1}, {0, 2}});
    CHECK(pair_equivalent(*shuffled.z2, rp2));
}

TEST_CASE("pair parse errors")
{
    CHECK_THROWS_AS(pair_from("POLYTOPE n=2 facets=3 ring=gf2\nVX 0 1\nCOL 0 1,0\n"), ParseError);
    CHECK_THROWS_AS(pair_from("POLYTOPE n=2 facets=3 ring=gf2\nVX 0 1\nCOL 0 1,0\nCOL 0 1,0\nCOL 2 1,1\n"),
                    ParseError);
    CHECK_THROWS_AS(pair_from("POLYTOPE n=2 facets=3\nVX 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(pair_from("POLYTOPE n=2 facets=3 orient=2\nVX 0 1\n"), ParseError);
    CHECK_THROWS_AS(pair_from("POLYTOPE n=2\n"), ParseError);
}

TEST_CASE("report round trip")
{
    GF2PolyJ single(2, 2);
    single.add({x, y});
    const auto rt = report_text(is_realizable_z2(single), std::nullopt);
    const auto text = to_text(rt);
    CHECK(text.find("FAITHFUL true\nREALIZABLE false\nRESIDUAL\nPOLY ring=gf2 n=2 side=J* deg=1\n") == 0);
    std::istringstream in(text);
    const auto back = read_report(in);
    CHECK(back.faithful);
    CHECK_FALSE(back.realizable);
    REQUIRE(back.residual.has_value());
    CHECK(to_text(back) == text);

    ExtPolyJ cp1(1, 1);
    cp1.add({int_vec({1})}, Integer(1));
    cp1.add({int_vec({-1})}, Integer(-1));
    const auto ut = to_text(report_text(is_realizable_unitary(cp1), std::vector<Integer>{Integer(-1)}));
    CHECK(ut.find("BOUND 1\n") != std::string::npos);
    CHECK(ut.find("COORDS -1\n") != std::string::npos);
    std::istringstream uin(ut);
    CHECK(to_text(read_report(uin)) == ut);

    std::istringstream bad("FAITHFUL maybe\n");
    CHECK_THROWS_AS(read_report(bad), ParseError);
}
