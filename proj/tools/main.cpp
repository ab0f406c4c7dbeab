#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jcd/decompose.hpp"
#include "jcd/io.hpp"
#include "jcd/matrix_functions.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 parse or format problem,
// 3 violated mathematical precondition.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw jcd::parse_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw jcd::parse_error("cannot write output file '" + path + "'");
}

struct Options {
    std::string input;
    std::string output;
    std::string annihilator_file;
    long long exponent = 0;
    bool emit_intermediates = false;
};

int run_decompose(const Options& opt) {
    jcd::SquareMatrix u = jcd::parse_matrix(read_file(opt.input));
    std::optional<jcd::Polynomial> annihilator;
    if (!opt.annihilator_file.empty())
        annihilator = jcd::parse_polynomial(read_file(opt.annihilator_file));

    // Run the quotient-ring iteration once and reuse it for both the
    // decomposition and the optional intermediates block.
    jcd::Polynomial p = annihilator ? *annihilator : jcd::char_poly(u);
    jcd::Decomposition dec = jcd::jordan_chevalley(u, p);
    jcd::VerificationReport report = jcd::verify_decomposition(u, dec);

    std::string doc;
    if (opt.emit_intermediates) {
        jcd::QuotientRun run = jcd::newton_quotient(p.monic());
        doc = jcd::format_document(u, dec, report, &run);
    } else {
        doc = jcd::format_document(u, dec, report);
    }
    write_output(opt.output, doc);
    return report.pass() ? kExitOk : kExitVerifyFailed;
}

int run_poly(const Options& opt) {
    jcd::SquareMatrix u = jcd::parse_matrix(read_file(opt.input));
    jcd::Polynomial p;
    if (!opt.annihilator_file.empty()) {
        p = jcd::parse_polynomial(read_file(opt.annihilator_file));
        if (p.is_constant() || !jcd::eval_at(p, u).is_zero())
            throw jcd::invalid_annihilator_error(
                "polynomial does not annihilate the matrix");
    } else {
        p = jcd::char_poly(u);
    }
    jcd::QuotientRun run = jcd::newton_quotient(p);
    std::string out;
    out += "p = " + jcd::format_polynomial(run.annihilator) + "\n";
    out += "p_tilde = " + jcd::format_polynomial(run.p_tilde) + "\n";
    out += "p_bar = " + jcd::format_polynomial(run.p_bar) + "\n";
    out += "q = " + jcd::format_polynomial(run.q) + "\n";
    out += "multiplicity = " + std::to_string(run.multiplicity) + "\n";
    out += "iteration_bound = " + std::to_string(jcd::iteration_bound(run.multiplicity)) +
           "\n";
    write_output(opt.output, out);
    return kExitOk;
}

int run_verify(const Options& opt) {
    jcd::Document doc = jcd::parse_document(read_file(opt.input));
    jcd::SquareMatrix u = doc.u ? *doc.u : doc.dec.d + doc.dec.n;
    jcd::VerificationReport report = jcd::verify_decomposition(u, doc.dec);
    write_output(opt.output, jcd::format_report(report));
    return report.pass() ? kExitOk : kExitVerifyFailed;
}

int run_power(const Options& opt) {
    jcd::SquareMatrix u = jcd::parse_matrix(read_file(opt.input));
    write_output(opt.output, jcd::format_matrix(jcd::matrix_power(u, opt.exponent)) + "\n");
    return kExitOk;
}

int run_multiplicative(const Options& opt) {
    jcd::SquareMatrix u = jcd::parse_matrix(read_file(opt.input));
    auto [d, v] = jcd::multiplicative(u);
    std::string out = "d = " + jcd::format_matrix(d) + "\n" +
                      "v = " + jcd::format_matrix(v) + "\n";
    write_output(opt.output, out);
    return kExitOk;
}

int run_exp_nilpotent(const Options& opt) {
    jcd::SquareMatrix n = jcd::parse_matrix(read_file(opt.input));
    write_output(opt.output, jcd::format_poly_matrix(jcd::exp_nilpotent_factor(n)) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jordan-Chevalley decomposition of rational matrices"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* sub, bool with_output = true) {
        sub->add_option("--input", opt.input, "input file")->required();
        if (with_output)
            sub->add_option("--output", opt.output, "output file (default: stdout)");
    };

    CLI::App* decompose = app.add_subcommand(
        "decompose", "compute U = D + N for a rational square matrix");
    add_io(decompose);
    decompose->add_option("--annihilator", opt.annihilator_file,
                          "polynomial file with a known annihilator of U "
                          "(default: characteristic polynomial)");
    decompose->add_flag("--emit-intermediates", opt.emit_intermediates,
                        "also record q and every Newton iterate h_k");

    CLI::App* poly = app.add_subcommand(
        "poly", "print the annihilator split: p, p_tilde, p_bar, q, multiplicity, bound");
    add_io(poly);
    poly->add_option("--annihilator", opt.annihilator_file,
                     "polynomial file with a known annihilator of U "
                     "(default: characteristic polynomial)");

    CLI::App* verify = app.add_subcommand(
        "verify", "re-check a decomposition document; exit 1 if any check fails");
    add_io(verify);

    CLI::App* power = app.add_subcommand(
        "power", "raise a matrix to a nonnegative integer power via its decomposition");
    add_io(power);
    power->add_option("--exponent", opt.exponent, "nonnegative exponent")->required();

    CLI::App* mult = app.add_subcommand(
        "multiplicative", "compute U = D * V with V unipotent (U must be invertible)");
    add_io(mult);

    CLI::App* expn = app.add_subcommand(
        "exp-nilpotent", "print exp(t N) for a nilpotent matrix N as a polynomial in t");
    add_io(expn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (decompose->parsed())
            return run_decompose(opt);
        if (poly->parsed())
            return run_poly(opt);
        if (verify->parsed())
            return run_verify(opt);
        if (power->parsed())
            return run_power(opt);
        if (mult->parsed())
            return run_multiplicative(opt);
        if (expn->parsed())
            return run_exp_nilpotent(opt);
    } catch (const jcd::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const jcd::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitOk;
}
