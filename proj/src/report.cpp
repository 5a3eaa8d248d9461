#include "f12/report.hpp"

#include "f12/holproj.hpp"
#include "f12/reference_tables.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace f12 {

namespace {

using nlohmann::json;

std::string format_ld(long double v) {
    char buf[48];
    snprintf(buf, sizeof(buf), "%.15Lg", v);
    return buf;
}

ReportRow coefficient_row(long s, const std::vector<std::string> &labels,
                          const std::vector<PiMonomial> &values) {
    ReportRow row;
    row.s = s;
    long h = 0;
    for (const auto &v : values)
        if (!v.is_zero()) h = v.half_exp;
    row.pi_power_half = h;
    for (size_t i = 0; i < values.size(); ++i) row.entries.push_back({labels[i], values[i].coeff});
    return row;
}

ReportRow value_row(long s, const PiMonomial &v, long double numeric_value, bool with_numeric,
                    std::vector<std::string> flags = {}) {
    ReportRow row;
    row.s = s;
    row.entries.push_back({"value", v.coeff});
    row.pi_power_half = v.half_exp;
    if (v.coeff != 0) row.factored = factor_rational(v.coeff);
    if (with_numeric) row.numeric = numeric_value;
    row.flags = std::move(flags);
    return row;
}

}  // namespace

ReportTable build_table(const std::string &name) {
    ReportTable t;
    t.name = name;
    if (name == "coeffs-c") {
        t.columns = {"C0'", "C0''", "C1", "C2", "C3", "C4"};
        for (long s : kCriticalPoints) {
            CoefficientSet set = c_coefficients(ProjectionContext(s));
            t.rows.push_back(coefficient_row(
                s, t.columns,
                {set.c0_prime, set.c0_double_prime, set.c[0], set.c[1], set.c[2], set.c[3]}));
        }
    } else if (name == "coeffs-a") {
        t.columns = {"A1", "A2", "A3", "A4"};
        for (long s : kCriticalPoints) {
            auto a = a_coefficients(ProjectionContext(s));
            t.rows.push_back(coefficient_row(s, t.columns, {a[0], a[1], a[2], a[3]}));
        }
    } else if (name == "coeffs-k") {
        t.columns = {"K1", "K2", "K3", "K4"};
        for (long s : kCriticalPoints) {
            auto k = k_coefficients(ProjectionContext(s));
            t.rows.push_back(coefficient_row(s, t.columns, {k[0], k[1], k[2], k[3]}));
        }
    } else if (name == "sym2") {
        t.columns = {"value"};
        for (long s : kCriticalPoints)
            t.rows.push_back(value_row(s, sym_square_value(s), 0.0L, false));
    } else if (name == "product") {
        t.columns = {"value"};
        for (long s : kCriticalPoints)
            t.rows.push_back(value_row(s, g20_pair_value(s), 0.0L, false));
    } else if (name == "main") {
        t.columns = {"value"};
        for (const CriticalRow &row : main_table()) {
            t.rows.push_back(value_row(row.s, row.exact, row.numeric, true, row.flags));
        }
    } else {
        throw std::invalid_argument("build_table: unknown table '" + name + "'");
    }
    return t;
}

std::vector<ReportDiagnostic> fe_diagnostics() {
    std::vector<ReportDiagnostic> out;
    auto emit = [&out](const std::vector<FePairCertificate> &certs, const std::string &source) {
        for (const auto &c : certs) {
            ReportDiagnostic d;
            d.name = c.name + " [" + source + "]";
            d.expected = "1";
            d.actual = c.pi_balanced ? to_string(c.ratio) : c.note;
            d.verdict = (c.pi_balanced && c.ratio == 1) ? "pass" : "mismatch";
            out.push_back(std::move(d));
        }
    };
    emit(sym_square_fe_pairs(ValueSource::Pipeline), "pipeline");
    emit(sym_square_fe_pairs(ValueSource::Published), "published");
    emit(g20_fe_pairs(ValueSource::Pipeline), "pipeline");
    emit(g20_fe_pairs(ValueSource::Published), "published");
    emit(standard_fe_pairs(ValueSource::Pipeline), "pipeline");
    emit(standard_fe_pairs(ValueSource::Published), "published");
    for (const auto &[s, implied] : g20_fe_implied_left(ValueSource::Published)) {
        out.push_back({"g20-product-fe-implied s=" + std::to_string(s) + " [published right member]",
                       "", implied.str(), "info"});
    }
    for (long s : g20_product_positivity_violations(ValueSource::Published)) {
        out.push_back({"g20-product-positivity s=" + std::to_string(s) + " [published]",
                       "positive", "negative", "mismatch"});
    }
    for (long s : g20_product_positivity_violations(ValueSource::Pipeline)) {
        out.push_back({"g20-product-positivity s=" + std::to_string(s) + " [pipeline]",
                       "positive", "negative", "mismatch"});
    }
    return out;
}

ReportDocument build_full_report(bool with_timings) {
    ReportDocument doc;
    auto t0 = std::chrono::steady_clock::now();
    for (const char *name : {"coeffs-c", "coeffs-a", "coeffs-k", "sym2", "product", "main"})
        doc.tables.push_back(build_table(name));
    doc.diagnostics = fe_diagnostics();
    doc.metadata = {{"qexp_precision", "128"},
                    {"float_substrate", "long double (64-bit mantissa)"},
                    {"sym2_terms", "1e4 (1e5 at argument 14)"}};
    if (with_timings) {
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char t[32];
        snprintf(t, sizeof(t), "%.3f", dt);
        doc.metadata.emplace_back("runtime_seconds", t);
    }
    return doc;
}

std::string render_report_json(const ReportDocument &doc) {
    json j;
    j["tables"] = json::array();
    for (const auto &t : doc.tables) j["tables"].push_back(json::parse(render_json(t)));
    j["diagnostics"] = json::parse(render_diagnostics_json(doc.diagnostics));
    json meta = json::object();
    for (const auto &[k, v] : doc.metadata) meta[k] = v;
    j["metadata"] = meta;
    return j.dump(2) + "\n";
}

std::string render_text(const ReportTable &table) {
    std::ostringstream os;
    os << "# table " << table.name << "\n";
    for (const auto &row : table.rows) {
        os << "s=" << row.s;
        for (const auto &e : row.entries) os << "  " << e.label << "=" << to_string(e.value);
        os << "  pi^";
        if (row.pi_power_half % 2 == 0)
            os << row.pi_power_half / 2;
        else
            os << "(" << row.pi_power_half << "/2)";
        if (row.factored) os << "  factored=" << row.factored->str();
        if (row.numeric) os << "  numeric=" << format_ld(*row.numeric);
        for (const auto &f : row.flags) os << "  [" << f << "]";
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const ReportTable &table) {
    std::ostringstream os;
    os << "s";
    for (const auto &c : table.columns) os << "," << c;
    os << ",pi_power_half,factored,numeric,flags\n";
    for (const auto &row : table.rows) {
        os << row.s;
        for (const auto &e : row.entries) os << "," << to_string(e.value);
        os << "," << row.pi_power_half << ",";
        if (row.factored) os << "\"" << row.factored->str() << "\"";
        os << ",";
        if (row.numeric) os << format_ld(*row.numeric);
        os << ",\"";
        for (size_t i = 0; i < row.flags.size(); ++i) os << (i ? ";" : "") << row.flags[i];
        os << "\"\n";
    }
    return os.str();
}

std::string render_json(const ReportTable &table) {
    json jt;
    jt["name"] = table.name;
    jt["rows"] = json::array();
    for (const auto &row : table.rows) {
        json jr;
        jr["s"] = row.s;
        if (row.entries.size() == 1 && row.entries[0].label == "value") {
            jr["rational"] = {{"num", row.entries[0].value.get_num().get_str()},
                              {"den", row.entries[0].value.get_den().get_str()}};
        } else {
            json vals = json::object();
            for (const auto &e : row.entries) vals[e.label] = to_string(e.value);
            jr["values"] = vals;
        }
        if (row.pi_power_half % 2 == 0)
            jr["pi_power"] = row.pi_power_half / 2;
        else
            jr["pi_power_half"] = row.pi_power_half;
        if (row.factored) {
            json f = json::array();
            for (const auto &[p, e] : row.factored->factors)
                f.push_back({p.get_str(), e});
            jr["factored"] = f;
            jr["sign"] = row.factored->sign;
        }
        if (row.numeric) jr["numeric"] = static_cast<double>(*row.numeric);
        jr["flags"] = row.flags;
        jt["rows"].push_back(jr);
    }
    return jt.dump(2) + "\n";
}

std::string render_diagnostics_text(const std::vector<ReportDiagnostic> &diags) {
    std::ostringstream os;
    for (const auto &d : diags) {
        os << (d.verdict == "pass" ? "PASS " : d.verdict == "info" ? "INFO " : "CERT ") << d.name
           << ": ";
        if (!d.expected.empty()) os << "expected " << d.expected << ", ";
        os << "actual " << d.actual << "\n";
    }
    return os.str();
}

std::string render_diagnostics_json(const std::vector<ReportDiagnostic> &diags) {
    json arr = json::array();
    for (const auto &d : diags)
        arr.push_back({{"name", d.name},
                       {"expected", d.expected},
                       {"actual", d.actual},
                       {"verdict", d.verdict}});
    return arr.dump(2) + "\n";
}

}  // namespace f12
