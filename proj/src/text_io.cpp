#include "toribord/text_io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace toribord {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> read_lines(std::istream& in)
{
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        ++number;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        std::istringstream words(text);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
        if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void bad(const Line& line, const std::string& why)
{
    throw ParseError("line " + std::to_string(line.number) + ": " + why);
}

long parse_long(const Line& line, const std::string& s)
{
    long value = 0;
    const char* first = s.data() + (s.size() > 1 && s[0] == '+' ? 1 : 0);
    auto [end, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size()) bad(line, "expected an integer, got '" + s + "'");
    return value;
}

Integer parse_integer(const Line& line, const std::string& s)
{
    try {
        const IntVec v = parse_int_vec(s);
        if (v.size() != 1) bad(line, "expected an integer, got '" + s + "'");
        return v(0);
    } catch (const ParseError&) {
        bad(line, "expected an integer, got '" + s + "'");
    }
}

bool parse_bool(const Line& line, const std::string& s)
{
    if (s == "true") return true;
    if (s == "false") return false;
    bad(line, "expected true or false, got '" + s + "'");
}

Ring parse_ring(const Line& line, const std::string& s)
{
    if (s == "gf2") return Ring::GF2;
    if (s == "z") return Ring::Z;
    bad(line, "unknown ring '" + s + "'");
}

// key=value fields after the keyword; every key must be in `allowed`.
std::map<std::string, std::string> parse_header(const Line& line, const std::string& keyword,
                                                const std::set<std::string>& allowed)
{
    if (line.tokens[0] != keyword) bad(line, "expected " + keyword + " header");
    std::map<std::string, std::string> fields;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i];
        const auto eq = t.find('=');
        if (eq == std::string::npos) bad(line, "expected key=value, got '" + t + "'");
        const std::string key = t.substr(0, eq);
        if (!allowed.count(key)) bad(line, "unknown header key '" + key + "'");
        if (!fields.emplace(key, t.substr(eq + 1)).second) bad(line, "repeated header key '" + key + "'");
    }
    return fields;
}

const std::string& required(const Line& line, const std::map<std::string, std::string>& fields, const std::string& key)
{
    auto it = fields.find(key);
    if (it == fields.end()) bad(line, "missing header key '" + key + "'");
    return it->second;
}

IntVec parse_z_vector(const Line& line, const std::string& s, int n)
{
    IntVec v;
    try {
        v = parse_int_vec(s);
    } catch (const ParseError&) {
        bad(line, "bad vector '" + s + "'");
    }
    if (v.size() != n) bad(line, "vector '" + s + "' does not have " + std::to_string(n) + " entries");
    return v;
}

GF2Vec parse_gf2_vector(const Line& line, const std::string& s, int n)
{
    const IntVec v = parse_z_vector(line, s, n);
    GF2Vec out(static_cast<std::size_t>(n));
    for (Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0 && v(i) != 1) bad(line, "GF(2) vector '" + s + "' has an entry other than 0 or 1");
        out.set(static_cast<std::size_t>(i), v(i) == 1);
    }
    return out;
}

int parse_positive(const Line& line, const std::string& s, const std::string& what)
{
    const long v = parse_long(line, s);
    if (v < 1 || v > 1'000'000) bad(line, what + " must be a positive integer");
    return static_cast<int>(v);
}

// Polynomial block starting at lines[pos]; advances pos past the T lines.
AnyPoly parse_poly(const std::vector<Line>& lines, std::size_t& pos)
{
    if (pos >= lines.size()) throw ParseError("missing POLY header");
    const Line& head = lines[pos++];
    const auto fields = parse_header(head, "POLY", {"ring", "n", "side", "deg"});
    const Ring ring = parse_ring(head, required(head, fields, "ring"));
    const int n = parse_positive(head, required(head, fields, "n"), "n");
    const std::string& side = required(head, fields, "side");
    if (side != "J" && side != "J*") bad(head, "side must be J or J*");
    const long deg = parse_long(head, required(head, fields, "deg"));
    if (deg < 0 || deg > 1000) bad(head, "deg must lie in [0, 1000]");

    auto fill = [&](auto poly) -> AnyPoly {
        for (; pos < lines.size() && lines[pos].tokens[0] == "T"; ++pos) {
            const Line& line = lines[pos];
            const std::size_t args = line.tokens.size() - 1;
            const bool has_coeff = args == static_cast<std::size_t>(deg) + 1;
            if (!has_coeff && args != static_cast<std::size_t>(deg))
                bad(line, "term needs " + std::to_string(deg) + " vectors");
            const Integer coeff = has_coeff ? parse_integer(line, line.tokens[1]) : Integer(1);
            const std::size_t first = has_coeff ? 2 : 1;
            try {
                if constexpr (std::is_same_v<decltype(poly), GF2PolyJ> || std::is_same_v<decltype(poly), GF2PolyJStar>) {
                    GF2Monomial m;
                    for (std::size_t i = first; i < line.tokens.size(); ++i)
                        m.push_back(parse_gf2_vector(line, line.tokens[i], n));
                    if (coeff % 2 != 0) poly.add(std::move(m));
                } else {
                    ExtMonomial m;
                    for (std::size_t i = first; i < line.tokens.size(); ++i)
                        m.push_back(parse_z_vector(line, line.tokens[i], n));
                    poly.add(std::move(m), coeff);
                }
            } catch (const DimensionMismatch& e) {
                bad(line, e.what());
            }
        }
        return poly;
    };
    const int d = static_cast<int>(deg);
    if (ring == Ring::GF2) return side == "J" ? fill(GF2PolyJ(n, d)) : fill(GF2PolyJStar(n, d));
    return side == "J" ? fill(ExtPolyJ(n, d)) : fill(ExtPolyJStar(n, d));
}

void require_end(const std::vector<Line>& lines, std::size_t pos)
{
    if (pos < lines.size()) bad(lines[pos], "unexpected '" + lines[pos].tokens[0] + "' line");
}

std::string vector_text(const GF2Vec& v) { return to_string(v); }
std::string vector_text(const IntVec& v) { return to_string(v); }

template <typename Vec>
void write_vertices(std::ostream& out, const std::vector<Vec>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) out << "V " << i << ' ' << vector_text(vertices[i]) << '\n';
}

} // namespace

// ------------------------------------------------------------------ complex

void write_complex(std::ostream& out, const SimplicialComplex& k)
{
    out << "COMPLEX ring=" << ring_name(k.ring()) << " n=" << k.n();
    if (k.bound()) out << " bound=" << *k.bound();
    out << '\n';
    if (k.ring() == Ring::GF2)
        write_vertices(out, k.gf2_vertices());
    else
        write_vertices(out, k.z_vertices());
    // A simplex is maximal when it is not a face of a simplex one dimension up.
    for (int m = 0; m <= k.dimension(); ++m) {
        std::vector<bool> covered(k.count(m), false);
        if (m < k.dimension()) {
            std::vector<VertexId> face(static_cast<std::size_t>(m) + 1);
            for (std::size_t id = 0; id < k.count(m + 1); ++id) {
                const auto s = k.simplex(m + 1, id);
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) face[w++] = s[i];
                    covered[*k.find_simplex(face)] = true;
                }
            }
        }
        for (std::size_t id = 0; id < k.count(m); ++id) {
            if (covered[id]) continue;
            out << 'S';
            for (auto v : k.simplex(m, id)) out << ' ' << v;
            out << '\n';
        }
    }
}

SimplicialComplex read_complex(std::istream& in)
{
    const auto lines = read_lines(in);
    if (lines.empty()) throw ParseError("empty complex file");
    const Line& head = lines[0];
    const auto fields = parse_header(head, "COMPLEX", {"ring", "n", "bound"});
    const Ring ring = parse_ring(head, required(head, fields, "ring"));
    const int n = parse_positive(head, required(head, fields, "n"), "n");
    std::optional<long> bound;
    if (auto it = fields.find("bound"); it != fields.end()) {
        if (ring == Ring::GF2) bad(head, "bound applies to ring=z only");
        bound = parse_long(head, it->second);
        if (*bound < 1) bad(head, "bound must be positive");
    }
    std::vector<GF2Vec> gf2_vertices;
    std::vector<IntVec> z_vertices;
    std::vector<std::vector<VertexId>> facets;
    std::size_t pos = 1;
    for (; pos < lines.size() && lines[pos].tokens[0] == "V"; ++pos) {
        const Line& line = lines[pos];
        if (line.tokens.size() != 3) bad(line, "expected 'V <id> <vector>'");
        if (parse_long(line, line.tokens[1]) != static_cast<long>(pos - 1))
            bad(line, "vertex ids must be dense from 0 and in order");
        if (ring == Ring::GF2)
            gf2_vertices.push_back(parse_gf2_vector(line, line.tokens[2], n));
        else
            z_vertices.push_back(parse_z_vector(line, line.tokens[2], n));
    }
    const long num_vertices = static_cast<long>(pos - 1);
    for (; pos < lines.size(); ++pos) {
        const Line& line = lines[pos];
        if (line.tokens[0] != "S") bad(line, "unexpected '" + line.tokens[0] + "' line");
        std::vector<VertexId> s;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            const long id = parse_long(line, line.tokens[i]);
            if (id < 0 || id >= num_vertices) bad(line, "vertex id " + line.tokens[i] + " out of range");
            if (!s.empty() && static_cast<long>(s.back()) >= id) bad(line, "simplex vertex ids must be strictly increasing");
            s.push_back(static_cast<VertexId>(id));
        }
        if (s.empty()) bad(line, "empty simplex");
        facets.push_back(std::move(s));
    }
    if (ring == Ring::GF2) return SimplicialComplex::from_gf2(n, std::move(gf2_vertices), facets);
    return SimplicialComplex::from_z(n, std::move(z_vertices), facets, bound);
}

// -------------------------------------------------------------------- chain

void write_chain(std::ostream& out, const Chain& c)
{
    out << "CHAIN dim=" << c.dim() << " ring=" << ring_name(c.ring()) << '\n';
    for (const auto& [id, coeff] : c.coeffs()) out << "C " << id << ' ' << coeff << '\n';
}

Chain read_chain(std::istream& in, const ComplexPtr& k)
{
    const auto lines = read_lines(in);
    if (lines.empty()) throw ParseError("empty chain file");
    const Line& head = lines[0];
    const auto fields = parse_header(head, "CHAIN", {"dim", "ring"});
    const long dim = parse_long(head, required(head, fields, "dim"));
    if (dim < -1 || dim > 1000) bad(head, "dim out of range");
    Chain c(k, static_cast<int>(dim), parse_ring(head, required(head, fields, "ring")));
    for (std::size_t pos = 1; pos < lines.size(); ++pos) {
        const Line& line = lines[pos];
        if (line.tokens[0] != "C" || line.tokens.size() != 3) bad(line, "expected 'C <simplex-id> <coeff>'");
        const long id = parse_long(line, line.tokens[1]);
        if (id < 0 || static_cast<std::size_t>(id) >= k->count(c.dim())) bad(line, "simplex id out of range");
        c.add(static_cast<std::size_t>(id), parse_integer(line, line.tokens[2]));
    }
    return c;
}

// --------------------------------------------------------------- polynomial

void write_poly(std::ostream& out, const AnyPoly& p)
{
    std::visit(
        [&](const auto& poly) {
            using P = std::decay_t<decltype(poly)>;
            constexpr bool gf2 = std::is_same_v<P, GF2PolyJ> || std::is_same_v<P, GF2PolyJStar>;
            out << "POLY ring=" << (gf2 ? "gf2" : "z") << " n=" << poly.n() << " side=" << side_name(P::side)
                << " deg=" << poly.degree() << '\n';
            if constexpr (gf2) {
                for (const auto& m : poly.monomials()) {
                    out << "T 1";
                    for (const auto& v : m) out << ' ' << to_string(v);
                    out << '\n';
                }
            } else {
                for (const auto& [m, c] : poly.terms()) {
                    out << "T " << c;
                    for (const auto& v : m) out << ' ' << to_string(v);
                    out << '\n';
                }
            }
        },
        p);
}

AnyPoly read_poly(std::istream& in)
{
    const auto lines = read_lines(in);
    std::size_t pos = 0;
    AnyPoly p = parse_poly(lines, pos);
    require_end(lines, pos);
    return p;
}

// ----------------------------------------------------------------- polytope

namespace {

void write_polytope_body(std::ostream& out, const SimplePolytope& p)
{
    for (const auto& v : p.vertices) {
        out << "VX";
        for (auto f : v) out << ' ' << f;
        out << '\n';
    }
}

} // namespace

void write_polytope(std::ostream& out, const SimplePolytope& p)
{
    out << "POLYTOPE n=" << p.n << " facets=" << p.num_facets << '\n';
    write_polytope_body(out, p);
}

void write_pair(std::ostream& out, const SmallCoverPair& pair)
{
    out << "POLYTOPE n=" << pair.polytope.n << " facets=" << pair.polytope.num_facets << " ring=gf2\n";
    write_polytope_body(out, pair.polytope);
    for (std::size_t f = 0; f < pair.lambda.size(); ++f) out << "COL " << f << ' ' << to_string(pair.lambda[f]) << '\n';
}

void write_pair(std::ostream& out, const QuasitoricPair& pair)
{
    out << "POLYTOPE n=" << pair.polytope.n << " facets=" << pair.polytope.num_facets << " ring=z";
    if (pair.orientation != 1) out << " orient=" << pair.orientation;
    out << '\n';
    write_polytope_body(out, pair.polytope);
    for (std::size_t f = 0; f < pair.lambda.size(); ++f) out << "COL " << f << ' ' << to_string(pair.lambda[f]) << '\n';
}

PairFile read_pair(std::istream& in)
{
    const auto lines = read_lines(in);
    if (lines.empty()) throw ParseError("empty polytope file");
    const Line& head = lines[0];
    const auto fields = parse_header(head, "POLYTOPE", {"n", "facets", "ring", "orient"});
    PairFile file;
    auto& p = file.polytope;
    p.n = parse_positive(head, required(head, fields, "n"), "n");
    p.num_facets = parse_positive(head, required(head, fields, "facets"), "facets");
    std::optional<Ring> ring;
    if (auto it = fields.find("ring"); it != fields.end()) ring = parse_ring(head, it->second);
    int orientation = 1;
    if (auto it = fields.find("orient"); it != fields.end()) {
        if (ring != Ring::Z) bad(head, "orient applies to ring=z only");
        const long o = parse_long(head, it->second);
        if (o != 1 && o != -1) bad(head, "orient must be 1 or -1");
        orientation = static_cast<int>(o);
    }

    std::size_t pos = 1;
    for (; pos < lines.size() && lines[pos].tokens[0] == "VX"; ++pos) {
        const Line& line = lines[pos];
        if (line.tokens.size() != static_cast<std::size_t>(p.n) + 1)
            bad(line, "expected " + std::to_string(p.n) + " facet ids");
        FacetSet f;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            const long id = parse_long(line, line.tokens[i]);
            if (id < 0 || id >= p.num_facets) bad(line, "facet id " + line.tokens[i] + " out of range");
            f.push_back(static_cast<FacetId>(id));
        }
        std::sort(f.begin(), f.end());
        p.vertices.push_back(std::move(f));
    }
    if (!ring) {
        require_end(lines, pos);
        return file;
    }

    std::vector<std::optional<std::string>> cols(static_cast<std::size_t>(p.num_facets));
    std::vector<std::size_t> col_line(cols.size());
    for (; pos < lines.size(); ++pos) {
        const Line& line = lines[pos];
        if (line.tokens[0] != "COL" || line.tokens.size() != 3) bad(line, "expected 'COL <facet-id> <vector>'");
        const long id = parse_long(line, line.tokens[1]);
        if (id < 0 || id >= p.num_facets) bad(line, "facet id " + line.tokens[1] + " out of range");
        if (cols[id]) bad(line, "facet " + line.tokens[1] + " has two columns");
        cols[id] = line.tokens[2];
        col_line[id] = pos;
    }
    for (std::size_t f = 0; f < cols.size(); ++f)
        if (!cols[f]) throw ParseError("facet " + std::to_string(f) + " has no COL line");

    if (*ring == Ring::GF2) {
        SmallCoverPair pair{p, {}};
        for (std::size_t f = 0; f < cols.size(); ++f) pair.lambda.push_back(parse_gf2_vector(lines[col_line[f]], *cols[f], p.n));
        file.z2 = std::move(pair);
    } else {
        QuasitoricPair pair{p, {}, orientation};
        for (std::size_t f = 0; f < cols.size(); ++f) pair.lambda.push_back(parse_z_vector(lines[col_line[f]], *cols[f], p.n));
        file.unitary = std::move(pair);
    }
    return file;
}

// ------------------------------------------------------------------- report

ReportText report_text(const Z2Report& r, std::optional<std::vector<Integer>> coords)
{
    ReportText t;
    t.faithful = r.faithful;
    t.realizable = r.realizable;
    if (r.residual) t.residual = AnyPoly(*r.residual);
    t.coords = std::move(coords);
    return t;
}

ReportText report_text(const UnitaryReport& r, std::optional<std::vector<Integer>> coords)
{
    ReportText t;
    t.faithful = r.faithful;
    t.realizable = r.realizable;
    t.bound = r.bound;
    if (r.residual) t.residual = AnyPoly(*r.residual);
    t.coords = std::move(coords);
    return t;
}

void write_report(std::ostream& out, const ReportText& r)
{
    out << "FAITHFUL " << (r.faithful ? "true" : "false") << '\n';
    out << "REALIZABLE " << (r.realizable ? "true" : "false") << '\n';
    if (r.bound) out << "BOUND " << *r.bound << '\n';
    if (r.residual) {
        out << "RESIDUAL\n";
        write_poly(out, *r.residual);
    }
    if (r.coords) {
        out << "COORDS";
        for (const auto& c : *r.coords) out << ' ' << c;
        out << '\n';
    }
}

ReportText read_report(std::istream& in)
{
    const auto lines = read_lines(in);
    ReportText r;
    std::size_t pos = 0;
    auto expect = [&](const std::string& keyword) -> const Line& {
        if (pos >= lines.size()) throw ParseError("missing " + keyword + " line");
        const Line& line = lines[pos++];
        if (line.tokens[0] != keyword || line.tokens.size() != 2) bad(line, "expected '" + keyword + " <value>'");
        return line;
    };
    const Line& f = expect("FAITHFUL");
    r.faithful = parse_bool(f, f.tokens[1]);
    const Line& z = expect("REALIZABLE");
    r.realizable = parse_bool(z, z.tokens[1]);
    if (pos < lines.size() && lines[pos].tokens[0] == "BOUND") {
        const Line& b = expect("BOUND");
        r.bound = parse_long(b, b.tokens[1]);
    }
    if (pos < lines.size() && lines[pos].tokens[0] == "RESIDUAL") {
        if (lines[pos].tokens.size() != 1) bad(lines[pos], "RESIDUAL takes no arguments");
        ++pos;
        r.residual = parse_poly(lines, pos);
    }
    if (pos < lines.size() && lines[pos].tokens[0] == "COORDS") {
        const Line& line = lines[pos++];
        std::vector<Integer> coords;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) coords.push_back(parse_integer(line, line.tokens[i]));
        r.coords = std::move(coords);
    }
    require_end(lines, pos);
    return r;
}

} // namespace toribord
