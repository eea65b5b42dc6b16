/*
   Copyright 2026 The cyclobez authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cyclobez/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclobez/arith.hpp"
#include "cyclobez/bezout.hpp"
#include "cyclobez/certificate_io.hpp"
#include "cyclobez/check.hpp"
#include "cyclobez/cyclotomic.hpp"
#include "cyclobez/selftest.hpp"

namespace cyclobez::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

bool check_index(std::uint64_t n, std::ostream& err) {
    if (n == 0) {
        err << "error: index must be >= 1\n";
        return false;
    }
    if (n > factorization_bound()) {
        err << "error: index " << n << " exceeds the configured bound " << factorization_bound()
            << "\n";
        return false;
    }
    return true;
}

struct PhiArgs {
    std::uint64_t n = 0;
    std::string method = "inductive";
    std::string format = "text";
};

int cmd_phi(const PhiArgs& a, std::ostream& out, std::ostream& err) {
    if (!check_index(a.n, err)) return kUsageError;

    IntPoly p;
    if (a.method == "moebius")
        p = phi_moebius(a.n);
    else if (a.method == "radical")
        p = phi_radical(a.n);
    else
        p = phi(a.n);

    if (a.format == "text") {
        out << to_string(p) << "\n";
    } else if (a.format == "coeffs") {
        const auto& cs = p.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? " " : "") << cs[i].get_str();
        out << "\n";
    } else {
        nlohmann::ordered_json j;
        j["n"] = a.n;
        j["coeffs"] = nlohmann::ordered_json::array();
        for (const mpz_class& c : p.coeffs()) j["coeffs"].push_back(c.get_str());
        out << j.dump() << "\n";
    }
    return kOk;
}

struct PairArgs {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
};

bool check_pair(const PairArgs& a, std::ostream& err) {
    if (!check_index(a.m, err) || !check_index(a.n, err)) return false;
    if (a.m == a.n) {
        err << "error: indices must differ\n";
        return false;
    }
    return true;
}

int cmd_k(const PairArgs& a, std::ostream& out, std::ostream& err) {
    if (!check_pair(a, err)) return kUsageError;
    const PairClass c = classify_pair(a.m, a.n);
    switch (c.kind) {
        case PairKind::neither_divides:
            out << "non-divisor k=1\n";
            break;
        case PairKind::divisor_not_prime_power:
            out << "divisor quotient=" << c.quotient << " k=1\n";
            break;
        case PairKind::divisor_prime_power:
            out << "divisor quotient=" << c.quotient << "=" << c.power.prime << "^"
                << c.power.exponent << " k=" << c.power.prime << "\n";
            break;
    }
    return kOk;
}

struct CertArgs {
    PairArgs pair;
    std::string method = "auto";
    std::string out_path;
};

int cmd_cert(const CertArgs& a, std::ostream& out, std::ostream& err) {
    if (!check_pair(a.pair, err)) return kUsageError;
    const std::uint64_t m = std::max(a.pair.m, a.pair.n);
    const std::uint64_t n = std::min(a.pair.m, a.pair.n);
    if (a.method == "constructive" && m % n != 0) {
        err << "error: the constructive method requires one index to divide the other\n";
        return kUsageError;
    }

    Certificate c;
    if (a.method == "constructive")
        c = certificate_constructive(m, n);
    else if (a.method == "lattice")
        c = certificate_lattice(m, n);
    else
        c = certificate(m, n);
    internal_check(verify(c), "emitted certificate fails verification");

    const std::string doc = render_certificate(c);
    if (a.out_path.empty()) {
        out << doc;
    } else {
        std::ofstream f(a.out_path, std::ios::binary);
        f << doc;
        f.flush();
        if (!f) {
            err << "error: cannot write file: " << a.out_path << "\n";
            return kUsageError;
        }
    }
    return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    Certificate c;
    try {
        c = load_certificate(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    if (!verify(c)) {
        out << "FAIL\n";
        return kVerificationFailure;
    }
    out << "OK k=" << c.k.get_str() << "\n";
    return kOk;
}

int cmd_selftest(std::uint64_t max, std::ostream& out, std::ostream& err) {
    if (max > factorization_bound()) {
        err << "error: --max exceeds the configured bound " << factorization_bound() << "\n";
        return kUsageError;
    }
    const auto results = selftest::run_all(max);
    std::uint64_t failures = 0;
    for (const auto& r : results) {
        out << r.name << ": " << r.checks << " checks, " << r.failures << " failures\n";
        if (!r.passed()) out << "  first failure: " << r.first_failure << "\n";
        failures += r.failures;
    }
    out << "selftest: " << (failures == 0 ? "PASS" : "FAIL") << "\n";
    return failures == 0 ? kOk : kVerificationFailure;
}

int cmd_table(std::uint64_t max, std::ostream& out, std::ostream& err) {
    if (!check_index(max, err)) return kUsageError;
    out << "m,n,class,k\n";
    for (std::uint64_t m = 2; m <= max; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            const PairClass c = classify_pair(m, n);
            const char* cls = "non-divisor";
            if (c.kind == PairKind::divisor_not_prime_power) cls = "divisor-composite";
            if (c.kind == PairKind::divisor_prime_power) cls = "divisor-prime-power";
            out << m << "," << n << "," << cls << "," << minimal_k(m, n) << "\n";
        }
    }
    return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Bezout constants for pairs of cyclotomic polynomials", "cyclobez"};
    app.require_subcommand(1);

    PhiArgs phi_args;
    auto* phi_cmd = app.add_subcommand("phi", "Print the n-th cyclotomic polynomial");
    phi_cmd->add_option("n", phi_args.n, "index")->required();
    phi_cmd->add_option("--method", phi_args.method, "construction algorithm")
        ->check(CLI::IsMember({"inductive", "moebius", "radical"}));
    phi_cmd->add_option("--format", phi_args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "coeffs"}));

    PairArgs k_args;
    auto* k_cmd = app.add_subcommand("k", "Classify a pair and print its minimal constant");
    k_cmd->add_option("m", k_args.m, "first index")->required();
    k_cmd->add_option("n", k_args.n, "second index")->required();

    CertArgs cert_args;
    auto* cert_cmd = app.add_subcommand("cert", "Emit a Bezout certificate document");
    cert_cmd->add_option("m", cert_args.pair.m, "first index")->required();
    cert_cmd->add_option("n", cert_args.pair.n, "second index")->required();
    cert_cmd->add_option("--method", cert_args.method, "construction route")
        ->check(CLI::IsMember({"auto", "constructive", "lattice"}));
    cert_cmd->add_option("--out", cert_args.out_path, "write the document here instead of stdout");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate document");
    verify_cmd->add_option("path", verify_path, "document file")->required();

    std::uint64_t selftest_max = 30;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the identity sweeps");
    selftest_cmd->add_option("--max", selftest_max, "sweep bound (default 30)");

    std::uint64_t table_max = 0;
    auto* table_cmd = app.add_subcommand("table", "CSV of class and k for all pairs up to max");
    table_cmd->add_option("max", table_max, "largest index")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (phi_cmd->parsed()) return cmd_phi(phi_args, out, err);
        if (k_cmd->parsed()) return cmd_k(k_args, out, err);
        if (cert_cmd->parsed()) return cmd_cert(cert_args, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify_path, out, err);
        if (selftest_cmd->parsed()) return cmd_selftest(selftest_max, out, err);
        if (table_cmd->parsed()) return cmd_table(table_max, out, err);
        err << "error: no command\n";
        return kUsageError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace cyclobez::cli
