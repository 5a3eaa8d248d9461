// Command-line surface: recomputed tables, verification against the
// published values, Petersson norms, theta coefficients, and the
// functional-equation diagnostics.

#include "f12/assemble.hpp"
#include "f12/holproj.hpp"
#include "f12/numeric.hpp"
#include "f12/report.hpp"
#include "f12/reference_tables.hpp"
#include "f12/theta_e8.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>

using namespace f12;
namespace ref = f12::reference;

namespace {

int run_tables(const std::string &name, const std::string &format, bool timings) {
    if (name == "all") {
        ReportDocument doc = build_full_report(timings);
        if (format == "json") {
            std::cout << render_report_json(doc);
        } else {
            for (const auto &t : doc.tables) std::cout << render_text(t) << "\n";
            std::cout << render_diagnostics_text(doc.diagnostics);
        }
        return 0;
    }
    ReportTable t = build_table(name);
    if (format == "text")
        std::cout << render_text(t);
    else if (format == "csv")
        std::cout << render_csv(t);
    else
        std::cout << render_json(t);
    return 0;
}

struct VerifyOutcome {
    int checked{0};
    int mismatched{0};
};

void verify_report(const std::string &name, const std::string &detail, bool ok,
                   VerifyOutcome &out) {
    ++out.checked;
    if (!ok) ++out.mismatched;
    std::cout << (ok ? "ok   " : "MISMATCH ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
}

VerifyOutcome verify_table(const std::string &name, double tolerance) {
    VerifyOutcome out;
    auto points = kCriticalPoints;
    if (name == "coeffs-c") {
        for (long s : points) {
            CoefficientSet set = c_coefficients(ProjectionContext(s));
            const auto &row = ref::c_table[static_cast<size_t>(ref::point_index(s))];
            const PiMonomial *vals[6] = {&set.c0_prime, &set.c0_double_prime,
                                         &set.c[0], &set.c[1], &set.c[2], &set.c[3]};
            const char *labels[6] = {"C0'", "C0''", "C1", "C2", "C3", "C4"};
            for (int i = 0; i < 6; ++i) {
                Rational want = rational_from_string(row[static_cast<size_t>(i)]);
                bool ok = vals[i]->coeff == want;
                verify_report("coeffs-c s=" + std::to_string(s) + " " + labels[i],
                              ok ? "" : to_string(vals[i]->coeff) + " vs published " + to_string(want),
                              ok, out);
            }
        }
    } else if (name == "coeffs-a") {
        for (long s : points) {
            auto a = a_coefficients(ProjectionContext(s));
            const auto &row = ref::a_table[static_cast<size_t>(ref::point_index(s))];
            for (int i = 0; i < 4; ++i) {
                Rational want = rational_from_string(row[static_cast<size_t>(i)]);
                bool ok = a[static_cast<size_t>(i)].coeff == want;
                verify_report("coeffs-a s=" + std::to_string(s) + " A" + std::to_string(i + 1),
                              ok ? "" : to_string(a[static_cast<size_t>(i)].coeff) + " vs published " +
                                            to_string(want),
                              ok, out);
            }
        }
    } else if (name == "coeffs-k") {
        for (long s : points) {
            auto k = k_coefficients(ProjectionContext(s));
            const auto &row = ref::k_table[static_cast<size_t>(ref::point_index(s))];
            for (int i = 0; i < 2; ++i) {
                Rational want = rational_from_string(row[static_cast<size_t>(i)]);
                bool ok = k[static_cast<size_t>(i)].coeff == want;
                verify_report("coeffs-k s=" + std::to_string(s) + " K" + std::to_string(i + 1),
                              ok ? "" : to_string(k[static_cast<size_t>(i)].coeff) + " vs published " +
                                            to_string(want),
                              ok, out);
            }
        }
    } else if (name == "sym2") {
        for (long s : points) {
            PiMonomial v = sym_square_value(s);
            const auto &row = ref::sym_square_rows[static_cast<size_t>(ref::point_index(s))];
            bool ok = v.coeff == rational_from_string(row.rational) && v.half_exp == 2 * row.pi_power;
            verify_report("sym2 s=" + std::to_string(s), ok ? "" : v.str(), ok, out);
        }
    } else if (name == "product") {
        for (long s : points) {
            PiMonomial v = g20_pair_value(s);
            const auto &row = ref::g20_product_rows[static_cast<size_t>(ref::point_index(s))];
            bool ok = v.coeff == rational_from_string(row.rational) && v.half_exp == 2 * row.pi_power;
            verify_report("product s=" + std::to_string(s), ok ? "" : v.str(), ok, out);
        }
    } else if (name == "main") {
        for (long s : points) {
            CriticalRow row = main_table_row(s);
            const auto &pub = ref::main_rows[static_cast<size_t>(ref::point_index(s))];
            bool exact_ok = row.exact.coeff == ref::main_row_rational(pub) &&
                            row.pi_power == pub.pi_power;
            verify_report("main s=" + std::to_string(s) + " exact",
                          exact_ok ? "" : row.exact.str(), exact_ok, out);
            MainProduct p = main_numeric_product(s, sym_square_value(s));
            double rel = std::fabs(static_cast<double>((row.numeric - p.value.value) /
                                                       p.value.value));
            double tol = tolerance > 0
                             ? tolerance
                             : (p.value.error > 1e-7L * fabsl(p.value.value) ? 1e-5 : 1e-6);
            bool num_ok = rel <= tol;
            char buf[128];
            snprintf(buf, sizeof(buf), "row %.9Lg vs independent %.9Lg (rel %.3g, tol %.1g)",
                     row.numeric, p.value.value, rel, tol);
            verify_report("main s=" + std::to_string(s) + " numeric", buf, num_ok, out);
        }
    } else {
        throw CLI::ValidationError("unknown table '" + name + "'");
    }
    return out;
}

int run_norms(const std::string &form, long l) {
    auto print_norm = [](long k, long l_arg) {
        NumericValue v = petersson_norm(k, l_arg);
        std::cout << "<f" << k << ", f" << k << "> (l=" << l_arg << ") = ";
        char buf[64];
        snprintf(buf, sizeof(buf), "%.18Le", v.value);
        std::cout << buf << "  (error bound ";
        snprintf(buf, sizeof(buf), "%.3Le", v.error);
        std::cout << buf << ")\n";
    };
    if (form == "delta") {
        print_norm(12, l > 0 ? l : 8);
    } else if (form == "g20") {
        if (l > 0)
            print_norm(20, l);
        else
            for (long choice : {12L, 14L, 16L}) print_norm(20, choice);
    } else {
        throw CLI::ValidationError("--form must be delta or g20");
    }
    return 0;
}

GramTarget parse_gram(const std::string &spec) {
    GramTarget t;
    int row = 0, col = 0;
    std::string token;
    auto flush = [&](bool end_row) {
        if (token.empty()) throw CLI::ValidationError("bad gram entry");
        if (row > 2 || col > 2) throw CLI::ValidationError("gram needs 3x3 entries");
        t.gram[static_cast<size_t>(row)][static_cast<size_t>(col)] = std::stoi(token);
        token.clear();
        if (end_row) {
            ++row;
            col = 0;
        } else {
            ++col;
        }
    };
    for (char c : spec) {
        if (c == ',')
            flush(false);
        else if (c == ';')
            flush(true);
        else if (!isspace(static_cast<unsigned char>(c)))
            token.push_back(c);
    }
    flush(true);
    if (row != 3) throw CLI::ValidationError("gram needs 3 rows");
    return t;
}

int run_theta(const std::string &gram_spec, int threads, double budget) {
    GramTarget t = parse_gram(gram_spec);
    ThetaOptions opts;
    opts.threads = threads;
    opts.budget_seconds = budget;
    Rational raw = fourier_coefficient(t, opts);
    Rational base = fourier_coefficient(minimal_gram_target(), opts);
    std::cout << "raw " << to_string(raw) << "\n";
    std::cout << "normalized " << to_string(Rational(raw / base)) << "\n";
    return 0;
}

int run_diag_fe(const std::string &format) {
    std::vector<ReportDiagnostic> diags = fe_diagnostics();
    if (format == "json")
        std::cout << render_diagnostics_json(diags);
    else
        std::cout << render_diagnostics_text(diags);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"critical values of the standard L-function of the Miyawaki lift F12"};
    app.require_subcommand(1);

    auto *tables = app.add_subcommand("tables", "print a recomputed table");
    std::string table_name;
    std::string format = "text";
    bool timings = false;
    tables->add_option("name", table_name, "main|sym2|product|coeffs-c|coeffs-a|coeffs-k|all")
        ->required();
    tables->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    tables->add_flag("--timings", timings, "include wall-clock metadata (breaks determinism)");

    auto *verify = app.add_subcommand("verify", "compare against the published tables");
    bool verify_all = false;
    std::string verify_table_name;
    double tolerance = 0;
    verify->add_flag("--all", verify_all);
    verify->add_option("--table", verify_table_name);
    verify->add_option("--tolerance", tolerance, "numeric tolerance (exact tables ignore it)");

    auto *norms = app.add_subcommand("norms", "Petersson norms via Rankin's theorem");
    std::string form = "g20";
    long l_choice = 0;
    norms->add_option("--form", form, "delta|g20");
    norms->add_option("--l", l_choice, "second critical argument");

    auto *theta = app.add_subcommand("theta", "theta-series Fourier coefficient");
    std::string gram_spec;
    int threads = 0;
    double budget = 0;
    theta->add_option("--gram", gram_spec, "integer Gram matrix (2N), e.g. \"2,0,0;0,2,0;0,0,2\"")
        ->required();
    theta->add_option("--threads", threads);
    theta->add_option("--budget", budget, "wall-clock budget in seconds");

    auto *diag = app.add_subcommand("diag", "diagnostics");
    std::string diag_what;
    std::string diag_format = "text";
    diag->add_option("what", diag_what, "fe")->required();
    diag->add_option("--format", diag_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tables->parsed()) return run_tables(table_name, format, timings);
        if (verify->parsed()) {
            VerifyOutcome total;
            std::vector<std::string> names;
            if (!verify_table_name.empty())
                names = {verify_table_name};
            else
                names = {"coeffs-c", "coeffs-a", "coeffs-k", "sym2", "product", "main"};
            for (const auto &n : names) {
                VerifyOutcome o = verify_table(n, tolerance);
                total.checked += o.checked;
                total.mismatched += o.mismatched;
            }
            std::cout << total.checked << " comparisons, " << total.mismatched << " mismatches\n";
            return total.mismatched == 0 ? 0 : 1;
        }
        if (norms->parsed()) return run_norms(form, l_choice);
        if (theta->parsed()) return run_theta(gram_spec, threads, budget);
        if (diag->parsed()) {
            if (diag_what != "fe") throw CLI::ValidationError("unknown diagnostic");
            return run_diag_fe(diag_format);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
