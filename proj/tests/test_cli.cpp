// End-to-end checks of the command-line binary (path in argv[1]).

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string &cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE *pipe = popen(full.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int failures = 0;

void expect(bool ok, const std::string &what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

}  // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-f12st>\n";
        return 2;
    }
    std::string bin = argv[1];

    RunResult table = run(bin + " tables main --format json");
    expect(table.exit_code == 0, "tables main exits 0");
    auto doc = nlohmann::json::parse(table.out, nullptr, false);
    expect(!doc.is_discarded(), "tables main emits JSON");
    expect(doc["rows"].size() == 10, "ten main rows");
    bool found = false;
    for (const auto &row : doc["rows"]) {
        if (row["s"] != -4) continue;
        found = true;
        expect(row["pi_power"] == 18, "s=-4 pi power");
        bool has_2_24 = false, has_392033 = false;
        for (const auto &f : row["factored"]) {
            if (f[0] == "2" && f[1] == 24) has_2_24 = true;
            if (f[0] == "392033" && f[1] == 1) has_392033 = true;
        }
        expect(has_2_24 && has_392033, "s=-4 factorization 2^24 * 392033 / ...");
        double numeric = row["numeric"];
        expect(std::abs(numeric - 728.260808) < 1e-4, "s=-4 numeric column");
    }
    expect(found, "s=-4 row present");

    // determinism
    RunResult again = run(bin + " tables main --format json");
    expect(again.out == table.out, "byte-identical reruns");

    // lossless round-trip: sign * prod p^e over the factored form rebuilds
    // exactly the num/den strings
    for (const auto &row : doc["rows"]) {
        long double num = std::stold(row["rational"]["num"].get<std::string>());
        long double den = std::stold(row["rational"]["den"].get<std::string>());
        long double rebuilt = row["sign"].get<int>();
        for (const auto &f : row["factored"]) {
            long double p = std::stold(f[0].get<std::string>());
            rebuilt *= powl(p, static_cast<long double>(f[1].get<int>()));
        }
        expect(std::fabs(static_cast<double>(rebuilt - num / den)) <=
                   1e-15 * std::fabs(static_cast<double>(num / den)),
               "factored form rebuilds the rational");
    }

    RunResult csv = run(bin + " tables coeffs-k --format csv");
    expect(csv.exit_code == 0, "coeffs-k csv exits 0");
    expect(csv.out.find("K1") != std::string::npos, "csv header");

    RunResult vk = run(bin + " verify --table coeffs-k");
    expect(vk.exit_code == 0, "verify coeffs-k exits 0 (all entries match print)");

    RunResult vmain = run(bin + " verify --table main");
    expect(vmain.exit_code == 1, "verify main exits 1 (numeric adjudication fails rows)");
    expect(vmain.out.find("MISMATCH") != std::string::npos, "verify main reports mismatches");

    RunResult usage = run(bin + " tables");
    expect(usage.exit_code == 2, "missing argument is a usage error");
    RunResult unknown = run(bin + " frobnicate");
    expect(unknown.exit_code == 2, "unknown subcommand is a usage error");

    RunResult theta = run(bin + " theta --gram \"2,0,0;0,2,0;0,0,2\"");
    expect(theta.exit_code == 0, "theta exits 0");
    expect(theta.out.find("normalized 164") != std::string::npos, "identity class normalizes to 164");

    RunResult fe = run(bin + " diag fe");
    expect(fe.exit_code == 0, "diag fe exits 0");
    expect(fe.out.find("98243/68070") != std::string::npos, "(0,1) certificate present");
    expect(fe.out.find("positivity") != std::string::npos, "positivity certificate present");

    RunResult norms = run(bin + " norms --form g20");
    expect(norms.exit_code == 0, "norms exits 0");
    expect(norms.out.find("8.2655415316597") != std::string::npos, "g20 norm digits");

    if (failures) {
        std::cerr << failures << " CLI checks failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
