#pragma once

// Line-oriented text formats. Writers are canonical: reading a written object
// and writing it again reproduces the same bytes. Readers skip blank lines and
// lines starting with '#', and throw ParseError naming the offending line.
//
//   COMPLEX ring=<gf2|z> n=<n> [bound=<B>]
//   V <id> <c1,...,cn>              ids dense from 0, vectors strictly increasing
//   S <id> <id> ...                 maximal simplices; faces are implied
//
//   CHAIN dim=<m> ring=<gf2|z>
//   C <simplex-id> <coeff>
//
//   POLY ring=<gf2|z> n=<n> side=<J|J*> deg=<m>
//   T [<coeff>] <v1> ... <vm>       the coefficient defaults to 1
//
//   POLYTOPE n=<n> facets=<m> [ring=<gf2|z>] [orient=<1|-1>]
//   VX <f1> ... <fn>
//   COL <facet-id> <c1,...,cn>      pairs only, one per facet
//
//   FAITHFUL <true|false>
//   REALIZABLE <true|false>
//   BOUND <B>                       Z only, when a complex was built
//   RESIDUAL                        followed by the POLY block of d(g*)
//   COORDS <c1> <c2> ...

#include <sstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toribord/bordism.hpp"
#include "toribord/chain_homology.hpp"
#include "toribord/rep_algebra.hpp"
#include "toribord/toric_models.hpp"
#include "toribord/universal_complex.hpp"

namespace toribord {

using AnyPoly = std::variant<GF2PolyJ, GF2PolyJStar, ExtPolyJ, ExtPolyJStar>;

void write_complex(std::ostream& out, const SimplicialComplex& k);
SimplicialComplex read_complex(std::istream& in);

void write_chain(std::ostream& out, const Chain& c);
Chain read_chain(std::istream& in, const ComplexPtr& k);

void write_poly(std::ostream& out, const AnyPoly& p);
AnyPoly read_poly(std::istream& in);

struct PairFile {
    SimplePolytope polytope;
    std::optional<SmallCoverPair> z2;
    std::optional<QuasitoricPair> unitary;
};

void write_polytope(std::ostream& out, const SimplePolytope& p);
void write_pair(std::ostream& out, const SmallCoverPair& pair);
void write_pair(std::ostream& out, const QuasitoricPair& pair);
/// Without ring= in the header only the polytope is filled in. Pairs are not
/// validated here.
PairFile read_pair(std::istream& in);

struct ReportText {
    bool faithful = false;
    bool realizable = false;
    std::optional<long> bound;
    std::optional<AnyPoly> residual;
    std::optional<std::vector<Integer>> coords;
};

ReportText report_text(const Z2Report& r, std::optional<std::vector<Integer>> coords = std::nullopt);
ReportText report_text(const UnitaryReport& r, std::optional<std::vector<Integer>> coords = std::nullopt);

void write_report(std::ostream& out, const ReportText& r);
ReportText read_report(std::istream& in);

template <typename T>
std::string to_text(const T& x)
{
    std::ostringstream out;
    if constexpr (std::is_same_v<T, SimplicialComplex>)
        write_complex(out, x);
    else if constexpr (std::is_same_v<T, Chain>)
        write_chain(out, x);
    else if constexpr (std::is_same_v<T, SimplePolytope>)
        write_polytope(out, x);
    else if constexpr (std::is_same_v<T, SmallCoverPair> || std::is_same_v<T, QuasitoricPair>)
        write_pair(out, x);
    else if constexpr (std::is_same_v<T, ReportText>)
        write_report(out, x);
    else
        write_poly(out, AnyPoly(x));
    return out.str();
}

} // namespace toribord
