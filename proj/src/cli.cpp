#include "operadkit/cli.hpp"

#include "operadkit/cobar.hpp"
#include "operadkit/json_io.hpp"
#include "operadkit/rewriting.hpp"
#include "operadkit/transfer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace operadkit {

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kContract = 3 };

// Largest arity accepted by the enumeration verbs; keeps every command at
// interactive speed.
constexpr int kMaxEnumArity = 12;
constexpr int kMaxD2Arity = 9;

bool load_preset(const std::string& name, QuadraticPresentation& p,
                 std::ostream& err)
{
    try {
        p = preset(name);
        return true;
    }
    catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return false;
    }
}

bool read_file(const std::string& path, std::string& text, std::ostream& err)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

int run_dims(const std::string& name, int n, std::ostream& out,
             std::ostream& err)
{
    if (n < 1 || n > kMaxEnumArity) {
        err << "N must be in [1, " << kMaxEnumArity << "]\n";
        return kContract;
    }
    QuadraticPresentation p;
    if (!load_preset(name, p, err))
        return kBadInput;
    const RewriteSystem rs = orient(p);
    for (int arity = 1; arity <= n; ++arity)
        out << (arity > 1 ? " " : "") << count_normal_forms(rs, arity);
    out << "\n";
    return kOk;
}

int run_dual(const std::string& name, std::ostream& out, std::ostream& err)
{
    QuadraticPresentation p;
    if (!load_preset(name, p, err))
        return kBadInput;
    out << presentation_to_text(koszul_dual(p));
    return kOk;
}

int run_confluence(const std::string& name, std::ostream& out,
                   std::ostream& err)
{
    QuadraticPresentation p;
    if (!load_preset(name, p, err))
        return kBadInput;
    const RewriteSystem rs = orient(p);
    const ConfluenceReport report = confluence_report(rs);
    out << render_report(report, rs.gens());
    return report.pass ? kOk : kCheckFailed;
}

int run_differential(int i, int j, std::ostream& out, std::ostream& err)
{
    if (i < 0 || j < 0 || i + j < 1 || i + j + 1 > kMaxEnumArity) {
        err << "indices must be nonnegative with 1 <= i+j <= "
            << kMaxEnumArity - 1 << "\n";
        return kContract;
    }
    out << render_differential(cobar_differential({i, j})) << "\n";
    return kOk;
}

int run_d2check(int n, std::ostream& out, std::ostream& err)
{
    if (n < 2 || n > kMaxD2Arity) {
        err << "N must be in [2, " << kMaxD2Arity << "]\n";
        return kContract;
    }
    const CheckResult res = d_squared_check(n);
    if (res.ok) {
        out << "pass: d² vanishes on every generator of arity <= " << n
            << "\n";
        return kOk;
    }
    out << "fail: " << res.witness << "\n";
    return kCheckFailed;
}

int run_transfer(const std::string& algebra_path, int weight,
                 const std::string& out_path, std::ostream& out,
                 std::ostream& err)
{
    std::string text;
    if (!read_file(algebra_path, text, err))
        return kBadInput;
    DgAs2Algebra alg;
    try {
        alg = parse_algebra(text);
    }
    catch (const JsonError& e) {
        err << algebra_path << ": " << e.what() << "\n";
        return kBadInput;
    }
    if (const std::string witness = check_dg_as2(alg); !witness.empty()) {
        err << algebra_path << ": " << witness << "\n";
        return kContract;
    }
    if (weight < 1 || weight > kTransferMaxWeight) {
        err << "weight must be in [1, " << kTransferMaxWeight << "]\n";
        return kContract;
    }
    const DeformationRetract r = build_retract(alg.complex);
    const TransferredStructure t = transfer(alg, r, weight);
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << structure_to_json(t))) {
        err << "cannot write " << out_path << "\n";
        return kBadInput;
    }
    out << "wrote transferred structure (homology dim " << total_dim(t.small)
        << ", max weight " << t.max_weight << ") to " << out_path << "\n";
    return kOk;
}

int run_verify(const std::string& structure_path,
               const std::string& complex_path, std::ostream& out,
               std::ostream& err)
{
    std::string text;
    if (!read_file(structure_path, text, err))
        return kBadInput;
    TransferredStructure t;
    try {
        t = parse_structure(text);
    }
    catch (const JsonError& e) {
        err << structure_path << ": " << e.what() << "\n";
        return kBadInput;
    }
    if (!read_file(complex_path, text, err))
        return kBadInput;
    DgAs2Algebra source;
    try {
        source = parse_algebra(text);
    }
    catch (const JsonError& e) {
        err << complex_path << ": " << e.what() << "\n";
        return kBadInput;
    }
    try {
        validate_complex(t.small);
        validate_complex(source.complex);
    }
    catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kContract;
    }
    // The structure lives on its own complex; the --complex file must be
    // either that complex itself or a complex/algebra it retracts onto.
    if (source.complex != t.small
        && build_retract(source.complex).small != t.small) {
        err << complex_path
            << ": complex does not match the structure's complex\n";
        return kContract;
    }
    if (t.max_weight < 1) {
        err << structure_path << ": structure lists no operations\n";
        return kContract;
    }
    const VerifyResult res =
        verify_infinity_relations(t, t.small, t.max_weight + 1);
    if (res.ok) {
        out << "pass: infinity relations hold through arity "
            << t.max_weight + 1 << "\n";
        return kOk;
    }
    out << "fail: " << res.witness << "\n";
    return kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"rewriting, Koszul duality, cobar differentials, and"
                 " homotopy transfer for two-product operads",
                 "operadkit"};
    app.require_subcommand(1);

    std::string preset_name;
    int dims_n = 0;
    auto* dims = app.add_subcommand(
        "dims", "normal-form counts per arity for a preset");
    dims->add_option("preset", preset_name, "two_as or as_2")->required();
    dims->add_option("N", dims_n, "largest arity")->required();

    auto* dual = app.add_subcommand(
        "dual", "generators and relators of the Koszul dual of a preset");
    dual->add_option("preset", preset_name, "two_as or as_2")->required();

    auto* confluence = app.add_subcommand(
        "confluence", "reduce every critical monomial along all first steps");
    confluence->add_option("preset", preset_name, "two_as or as_2")
        ->required();

    int diff_i = 0;
    int diff_j = 0;
    auto* differential = app.add_subcommand(
        "differential", "print the cobar differential of m[i,j]");
    differential->add_option("i", diff_i, "first index")->required();
    differential->add_option("j", diff_j, "second index")->required();

    int d2_n = 0;
    auto* d2check = app.add_subcommand(
        "d2check", "check d² = 0 on all generators of arity <= N");
    d2check->add_option("N", d2_n, "largest arity")->required();

    std::string algebra_path;
    std::string out_path;
    int weight = 4;
    auto* transfer = app.add_subcommand(
        "transfer", "transfer an algebra file onto its homology");
    transfer->add_option("--algebra", algebra_path, "input algebra JSON")
        ->required();
    transfer->add_option("--weight", weight,
                         "largest operation weight (default 4)");
    transfer->add_option("--out", out_path, "output structure JSON")
        ->required();

    std::string structure_path;
    std::string complex_path;
    auto* verify = app.add_subcommand(
        "verify", "check the infinity relations of a structure file");
    verify->add_option("--structure", structure_path, "structure JSON")
        ->required();
    verify->add_option("--complex", complex_path,
                       "the complex or algebra it came from")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    }
    catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kBadInput;
    }

    if (dims->parsed())
        return run_dims(preset_name, dims_n, out, err);
    if (dual->parsed())
        return run_dual(preset_name, out, err);
    if (confluence->parsed())
        return run_confluence(preset_name, out, err);
    if (differential->parsed())
        return run_differential(diff_i, diff_j, out, err);
    if (d2check->parsed())
        return run_d2check(d2_n, out, err);
    if (transfer->parsed())
        return run_transfer(algebra_path, weight, out_path, out, err);
    if (verify->parsed())
        return run_verify(structure_path, complex_path, out, err);
    err << app.help();
    return kBadInput;
}

}  // namespace operadkit
