// Command-line front end: complex, homology, an, check, pair.
// Exit codes: 0 success, 1 domain or input error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toribord/bordism.hpp"
#include "toribord/text_io.hpp"

namespace {

using namespace toribord;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

// Writes to `path`, or to stdout when it is empty.
template <typename Writer>
void emit(const std::string& path, Writer&& write)
{
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write(out);
}

// Progress for long eliminations, on stderr, only for large matrices.
ProgressFn stderr_progress(const std::string& label)
{
    return [label, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
        if (total < 20000) return;
        const std::size_t pct = total ? done * 100 / total : 100;
        if (pct == last && done != total) return;
        last = pct;
        std::cerr << '\r' << label << ": " << pct << "%" << (done == total ? "\n" : "") << std::flush;
    };
}

PairFile read_pair_path(const std::string& path)
{
    auto in = open_input(path);
    return read_pair(in);
}

// ---------------------------------------------------------------- commands

struct ComplexArgs {
    std::string ring;
    int n = 0;
    std::optional<long> bound;
    std::string out;
};

void run_complex(const ComplexArgs& a)
{
    std::optional<SimplicialComplex> k;
    if (a.ring == "gf2") {
        if (a.bound) throw UsageError("--bound applies to --ring z only");
        k = build_universal_z2(a.n);
    } else {
        if (!a.bound) throw UsageError("--ring z needs --bound");
        if (*a.bound < 1) throw UsageError("--bound must be positive");
        k = build_universal_z_truncated(a.n, *a.bound);
    }
    if (!a.out.empty()) emit(a.out, [&](std::ostream& o) { write_complex(o, *k); });
    const auto f = f_vector(*k);
    for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f[i];
    std::cout << '\n';
}

void run_homology(const std::string& path, int dim)
{
    if (dim < 0) throw UsageError("--dim must be nonnegative");
    auto in = open_input(path);
    const SimplicialComplex k = read_complex(in);
    std::cout << reduced_homology(k, dim, k.ring(), stderr_progress("elimination")).to_string() << '\n';
}

void run_check(const std::string& path, std::optional<long> bound)
{
    auto in = open_input(path);
    const AnyPoly poly = read_poly(in);
    if (std::holds_alternative<GF2PolyJ>(poly)) {
        if (bound) throw UsageError("--bound applies to ring z only");
        const auto& g = std::get<GF2PolyJ>(poly);
        const auto report = is_realizable_z2(g, {.complex = nullptr, .certificate = false, .bound = std::nullopt});
        std::optional<std::vector<Integer>> coords;
        if (report.realizable) {
            const auto k = std::make_shared<const SimplicialComplex>(build_universal_z2(g.n()));
            coords = class_coordinates(g, k);
        }
        write_report(std::cout, report_text(report, coords));
    } else if (std::holds_alternative<ExtPolyJ>(poly)) {
        if (bound && *bound < 1) throw UsageError("--bound must be positive");
        const auto& g = std::get<ExtPolyJ>(poly);
        auto report = is_realizable_unitary(g, {.complex = nullptr, .certificate = false, .bound = std::nullopt});
        std::optional<std::vector<Integer>> coords;
        if (report.realizable) {
            const long b = bound.value_or(minimal_bound(*report.dual));
            const auto k = std::make_shared<const SimplicialComplex>(build_universal_z_truncated(g.n(), b));
            report.bound = b;
            coords = class_coordinates(g, k);
        }
        write_report(std::cout, report_text(report, coords));
    } else {
        throw ParseError("check expects fixed point data (side=J)");
    }
}

void run_pair_validate(const std::string& path)
{
    const PairFile file = read_pair_path(path);
    PolytopeCheck check;
    if (file.z2)
        check = validate_pair(*file.z2);
    else if (file.unitary)
        check = validate_pair(*file.unitary);
    else
        check = validate_polytope(file.polytope);
    if (!check) throw InvalidPair(check.diagnostic);
    std::cout << "valid\n";
    if (file.unitary) {
        std::cout << "SIGNS";
        for (const auto& s : vertex_signs(*file.unitary)) std::cout << ' ' << s.sign;
        std::cout << '\n';
    }
}

void require_pair(const PairFile& file)
{
    if (!file.z2 && !file.unitary) throw ParseError("polytope file has no ring= and no columns");
}

void run_pair_polynomial(const std::string& path, const std::string& out)
{
    const PairFile file = read_pair_path(path);
    require_pair(file);
    const AnyPoly p = file.z2 ? AnyPoly(fixed_point_data_z2(*file.z2)) : AnyPoly(fixed_point_data_unitary(*file.unitary));
    emit(out, [&](std::ostream& o) { write_poly(o, p); });
}

AnyPoly pair_phi(const PairFile& file)
{
    if (file.z2) {
        auto phi = coloring_polynomial_z2(*file.z2);
        if (!d_gf2(phi).is_zero()) throw InvalidResult("d of the coloring polynomial is nonzero");
        return phi;
    }
    auto phi = phi_quasitoric(*file.unitary);
    if (!d_z(phi).is_zero()) throw InvalidResult("d of phi is nonzero");
    return phi;
}

void run_pair_phi(const std::string& path, const std::string& out)
{
    const PairFile file = read_pair_path(path);
    require_pair(file);
    const AnyPoly phi = pair_phi(file);
    emit(out, [&](std::ostream& o) {
        write_poly(o, phi);
        o << "# d=0 verified\n";
    });
}

void run_pair_dual(const std::string& path, const std::string& out)
{
    const PairFile file = read_pair_path(path);
    require_pair(file);
    const AnyPoly phi = pair_phi(file);
    const AnyPoly dual = file.z2 ? AnyPoly(dualize_gf2(fixed_point_data_z2(*file.z2)))
                                 : AnyPoly(dualize_z(fixed_point_data_unitary(*file.unitary)));
    if (!(dual == phi)) throw InvalidResult("dual of the fixed point data differs from phi");
    emit(out, [&](std::ostream& o) {
        write_poly(o, dual);
        o << "# dual of the fixed point data equals phi\n";
    });
}

void run_pair_connectsum(const std::string& path1, const std::string& path2, std::size_t v1, std::size_t v2,
                         const std::string& out)
{
    const PairFile a = read_pair_path(path1);
    const PairFile b = read_pair_path(path2);
    require_pair(a);
    require_pair(b);
    if (a.z2 && b.z2) {
        const auto sum = connect_sum(*a.z2, v1, *b.z2, v2);
        emit(out, [&](std::ostream& o) {
            write_pair(o, sum);
            o << "# phi additivity verified\n";
        });
    } else if (a.unitary && b.unitary) {
        const auto sum = connect_sum(*a.unitary, v1, *b.unitary, v2);
        emit(out, [&](std::ostream& o) {
            write_pair(o, sum);
            o << "# phi additivity verified\n";
        });
    } else {
        throw NoMatching("pairs are over different rings");
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"toribord: universal complexes, bordism of torus manifolds, characteristic pairs"};
    app.require_subcommand(1);

    ComplexArgs complex_args;
    auto* complex = app.add_subcommand("complex", "build X(Z_2^n) or truncated X(Z^n) and print its f-vector");
    complex->add_option("--ring", complex_args.ring)->required()->check(CLI::IsMember({"gf2", "z"}));
    complex->add_option("--n", complex_args.n)->required()->check(CLI::Range(1, 64));
    complex->add_option("--bound", complex_args.bound);
    complex->add_option("--out", complex_args.out, "write the complex to this file");

    std::string complex_path;
    int dim = 0;
    auto* homology = app.add_subcommand("homology", "reduced homology of a complex file");
    homology->add_option("--complex", complex_path)->required();
    homology->add_option("--dim", dim)->required();

    int an_n = 0;
    auto* an = app.add_subcommand("an", "evaluate the closed form A_n");
    an->add_option("--n", an_n)->required()->check(CLI::Range(1, 100000));

    std::string poly_path;
    std::optional<long> check_bound;
    auto* check = app.add_subcommand("check", "realizability report for fixed point data");
    check->add_option("--poly", poly_path)->required();
    check->add_option("--bound", check_bound);

    auto* pair = app.add_subcommand("pair", "operations on characteristic pairs");
    pair->require_subcommand(1);
    std::string pair_path, pair_path2, pair_out;
    std::size_t v1 = 0, v2 = 0;
    auto* validate = pair->add_subcommand("validate", "check a polytope or pair file");
    validate->add_option("file", pair_path)->required();
    auto* polynomial = pair->add_subcommand("polynomial", "fixed point data of the pair (side J)");
    polynomial->add_option("file", pair_path)->required();
    polynomial->add_option("--out", pair_out);
    auto* phi = pair->add_subcommand("phi", "coloring polynomial / signed vertex sum (side J*), with d checked");
    phi->add_option("file", pair_path)->required();
    phi->add_option("--out", pair_out);
    auto* dual = pair->add_subcommand("dual", "dual of the fixed point data, checked against phi");
    dual->add_option("file", pair_path)->required();
    dual->add_option("--out", pair_out);
    auto* connectsum = pair->add_subcommand("connectsum", "connected sum of two pairs at the given vertices");
    connectsum->add_option("file1", pair_path)->required();
    connectsum->add_option("file2", pair_path2)->required();
    connectsum->add_option("--v1", v1)->required();
    connectsum->add_option("--v2", v2)->required();
    connectsum->add_option("--out", pair_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (complex->parsed())
            run_complex(complex_args);
        else if (homology->parsed())
            run_homology(complex_path, dim);
        else if (an->parsed())
            std::cout << a_n(an_n) << '\n';
        else if (check->parsed())
            run_check(poly_path, check_bound);
        else if (validate->parsed())
            run_pair_validate(pair_path);
        else if (polynomial->parsed())
            run_pair_polynomial(pair_path, pair_out);
        else if (phi->parsed())
            run_pair_phi(pair_path, pair_out);
        else if (dual->parsed())
            run_pair_dual(pair_path, pair_out);
        else if (connectsum->parsed())
            run_pair_connectsum(pair_path, pair_path2, v1, v2, pair_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const toribord::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 1;
    }
    return 0;
}
