#pragma once

// Table and diagnostic document assembly for the CLI: every exact value is
// carried both as a num/den string and in factored form, and the JSON
// rendering round-trips losslessly.

#include "f12/assemble.hpp"
#include "f12/factor.hpp"
#include "f12/pi_monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f12 {

struct ReportEntry {
    std::string label;
    Rational value;
};

struct ReportRow {
    long s{0};
    std::vector<ReportEntry> entries;
    long pi_power_half{0};  // shared pi exponent in half units
    std::optional<Factorization> factored;  // single-value tables only
    std::optional<long double> numeric;
    std::vector<std::string> flags;
};

struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<ReportRow> rows;
};

struct ReportDiagnostic {
    std::string name;
    std::string expected;
    std::string actual;
    std::string verdict;  // "pass" | "mismatch" | "info"
};

struct ReportDocument {
    std::vector<ReportTable> tables;
    std::vector<ReportDiagnostic> diagnostics;
    std::vector<std::pair<std::string, std::string>> metadata;
};

// Pipeline tables by name: main, sym2, product, coeffs-c, coeffs-a, coeffs-k.
ReportTable build_table(const std::string &name);

// Every table plus the diagnostics and the run configuration, as one
// document; with_timings adds wall-clock entries (off keeps the output
// byte-deterministic).
ReportDocument build_full_report(bool with_timings = false);
std::string render_report_json(const ReportDocument &doc);

// The three functional-equation certificate families, for both the
// pipeline values and the published ones.
std::vector<ReportDiagnostic> fe_diagnostics();

std::string render_text(const ReportTable &table);
std::string render_csv(const ReportTable &table);
std::string render_json(const ReportTable &table);
std::string render_diagnostics_text(const std::vector<ReportDiagnostic> &diags);
std::string render_diagnostics_json(const std::vector<ReportDiagnostic> &diags);

}  // namespace f12
