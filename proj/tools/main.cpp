#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lascoux/io.hpp"
#include "lascoux/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_lascoux(const std::string& alpha_text, int n, bool beta_zero) {
    lascoux::WeakComposition alpha = lascoux::parse_composition(alpha_text);
    if (n == 0) n = alpha.n();
    lascoux::LPolynomial p = beta_zero ? lascoux::key_polynomial(alpha, n) : lascoux::lascoux_polynomial(alpha, n);
    std::cout << lascoux::format_polynomial(p) << "\n";
    return kExitOk;
}

int run_expand(const std::string& alpha_text, const std::string& w_text, int n, bool no_verify,
               bool json) {
    lascoux::WeakComposition alpha = lascoux::parse_composition(alpha_text);
    lascoux::Permutation w = lascoux::parse_permutation(w_text);
    if (n == 0) n = alpha.n();
    lascoux::ExpansionResult r = lascoux::expand_product(alpha, w, n, nullptr, !no_verify);
    std::cout << (json ? lascoux::format_expansion_json(r) + "\n" : lascoux::format_expansion(r));
    return kExitOk;
}

int run_insert(const std::string& file, const std::string& cell_text, int alpha) {
    lascoux::IncreasingTableau p = lascoux::parse_increasing_tableau(read_file(file));
    auto parts = lascoux::parse_composition(cell_text).entries();
    if (parts.size() != 2) throw std::invalid_argument("--cell expects r,c");
    lascoux::ReverseInsertResult res = lascoux::reverse_insert(p, {parts[0], parts[1]}, alpha);
    std::cout << "m = " << res.m << "\n";
    std::cout << "trace:";
    for (size_t i = 0; i < res.trace.size(); ++i)
        std::cout << (i ? ", " : " ") << lascoux::insert_case_name(res.trace[i]);
    std::cout << "\n" << lascoux::format_increasing_tableau(res.tableau) << "\n";
    return kExitOk;
}

int run_psi(const std::string& file) {
    lascoux::TableauPair pair = lascoux::parse_pair_file(read_file(file));
    lascoux::CompatiblePair out = lascoux::psi(pair);
    std::cout << "(" << lascoux::format_word(out.a) << ", " << lascoux::format_word(out.i) << ")\n";
    return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed, long long trials) {
    lascoux::verify::Report report;
    if (suite == "setops") report = lascoux::verify::verify_setops(seed, trials);
    else if (suite == "leftkey") report = lascoux::verify::verify_leftkey(seed, trials);
    else if (suite == "insertion") report = lascoux::verify::verify_insertion(seed, trials);
    else if (suite == "expansion") report = lascoux::verify::verify_expansion(seed, trials);
    else if (suite == "all") report = lascoux::verify::verify_all(seed, trials);
    else throw CLI::ValidationError("--suite", "unknown suite: " + suite);

    for (const auto& r : report) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checks << " checks)";
        if (!r.note.empty()) std::cout << "  -- " << r.note;
        std::cout << "\n";
    }
    return lascoux::verify::all_passed(report) ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Lascoux and stable Grothendieck polynomials"};
    app.require_subcommand(1);

    std::string alpha_text, w_text, file, cell_text, suite = "all";
    int n = 0, alpha_flag = 0;
    bool beta_zero = false, no_verify = false, json = false;
    std::uint64_t seed = 1;
    long long trials = 10000;

    auto* cmd_lascoux = app.add_subcommand("lascoux", "Print a Lascoux or key polynomial");
    cmd_lascoux->add_option("--alpha", alpha_text, "weak composition, e.g. 0,2,1")->required();
    cmd_lascoux->add_option("--n", n, "number of variables (default: length of alpha)");
    cmd_lascoux->add_flag("--beta0", beta_zero, "set beta = 0 (key polynomial)");

    auto* cmd_expand = app.add_subcommand("expand", "Expand L_alpha * G_w(x_1..x_n) into Lascoux polynomials");
    cmd_expand->add_option("--alpha", alpha_text, "weak composition")->required();
    cmd_expand->add_option("--w", w_text, "permutation in one-line notation")->required();
    cmd_expand->add_option("--n", n, "number of variables (default: length of alpha)");
    cmd_expand->add_flag("--no-verify", no_verify, "skip the certified identity check");
    cmd_expand->add_flag("--json", json, "emit the expansion as JSON");

    auto* cmd_insert = app.add_subcommand("insert", "Reverse row insertion on a tableau file");
    cmd_insert->add_option("file", file, "increasing tableau file")->required();
    cmd_insert->add_option("--cell", cell_text, "outer cell r,c")->required();
    cmd_insert->add_option("--alpha", alpha_flag, "0 keeps the cell, 1 removes it")
        ->check(CLI::Range(0, 1));

    auto* cmd_psi = app.add_subcommand("psi", "Apply the insertion bijection to a (P, Q) pair file");
    cmd_psi->add_option("file", file, "pair file: increasing tableau, blank line, RSVT")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Run the property suites");
    cmd_verify->add_option("--suite", suite, "setops | leftkey | insertion | expansion | all");
    cmd_verify->add_option("--seed", seed, "PRNG seed");
    cmd_verify->add_option("--trials", trials, "random trials per property (0: fixtures only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_lascoux->parsed()) return run_lascoux(alpha_text, n, beta_zero);
        if (cmd_expand->parsed()) return run_expand(alpha_text, w_text, n, no_verify, json);
        if (cmd_insert->parsed()) return run_insert(file, cell_text, alpha_flag);
        if (cmd_psi->parsed()) return run_psi(file);
        if (cmd_verify->parsed()) return run_verify(suite, seed, trials);
    } catch (const lascoux::IdentityError& e) {
        std::cerr << "identity check failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const lascoux::BasisError& e) {
        std::cerr << "basis expansion: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
