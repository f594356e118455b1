// Command-line front end. Links the shared library through the C API only;
// all JSON handling happens behind that boundary. Machine-readable report on
// stdout, one human summary line on stderr, exit code = qmr_status.

#include "qmring/qmring.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(QMR_ERR_PARSE);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct SessionGuard {
    qmr_session* s = qmr_session_new();
    ~SessionGuard() { qmr_session_free(s); }
};

struct ModuleGuard {
    qmr_module* m = nullptr;
    ~ModuleGuard() { qmr_module_free(m); }
};

int finish(qmr_session* s, const std::string& command, qmr_status status, char* report,
           const std::string& out_path) {
    if (report) {
        std::cout << report;
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << command << ": error: cannot write " << out_path << "\n";
                qmr_string_free(report);
                return QMR_ERR_INTERNAL;
            }
            out << report;
        }
        qmr_string_free(report);
    }
    if (status == QMR_OK) {
        std::cerr << command << ": ok\n";
    } else {
        const char* msg = qmr_last_error(s);
        std::cerr << command << ": error (" << status << ")"
                  << ((msg && *msg) ? ": " : "") << (msg ? msg : "") << "\n";
    }
    return static_cast<int>(status);
}

qmr_status load_module(qmr_session* s, const std::string& path, ModuleGuard& guard) {
    return qmr_module_parse(s, read_file(path).c_str(), &guard.m);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic modules over group rings: forms, transvections, "
                 "factorization certificates, hyperbolic pairs, stability bounds"};
    app.require_subcommand(1);

    std::string input_path, module_path, transvection_path, cert_path, out_path,
        context_path, group_path;
    long k = 1, degree = 4, max_depth = 8, node_budget = 1 << 20, modulus = 0;
    unsigned long seed = 1;
    long samples = 64;

    auto* validate = app.add_subcommand("validate", "parse and check an artifact");
    validate->add_option("--input", input_path)->required();

    auto* hyperbolic = app.add_subcommand("hyperbolic", "build H(A^k)");
    hyperbolic->add_option("--context", context_path)->required();
    hyperbolic->add_option("--k", k)->required();
    hyperbolic->add_option("--out", out_path);

    auto* apply = app.add_subcommand("apply", "apply a transvection to a vector");
    apply->add_option("--module", module_path)->required();
    apply->add_option("--transvection", transvection_path)->required();
    apply->add_option("--input", input_path)->required();
    apply->add_option("--out", out_path);

    auto* verify_iso = app.add_subcommand("verify-isometry",
                                          "check form and mu preservation");
    verify_iso->add_option("--module", module_path)->required();
    verify_iso->add_option("--transvection", transvection_path)->required();
    verify_iso->add_option("--seed", seed);
    verify_iso->add_option("--samples", samples);

    auto* factorize = app.add_subcommand("factorize",
                                         "factor a stabilized transvection");
    factorize->add_option("--input", input_path)->required();
    factorize->add_option("--out", out_path);

    auto* verify_cert = app.add_subcommand("verify-cert",
                                           "verify a factorization certificate");
    verify_cert->add_option("--input", input_path)->required();
    verify_cert->add_option("--cert", cert_path)->required();

    auto* complete = app.add_subcommand("complete-pair",
                                        "complete an isotropic vector to a hyperbolic pair");
    complete->add_option("--module", module_path)->required();
    complete->add_option("--input", input_path)->required();
    complete->add_option("--out", out_path);

    auto* transport = app.add_subcommand("transport",
                                         "search a generator word between hyperbolic pairs");
    transport->add_option("--input", input_path)->required();
    transport->add_option("--max-depth", max_depth);
    transport->add_option("--node-budget", node_budget);
    transport->add_option("--modulus", modulus);
    transport->add_option("--out", out_path);

    auto* bound = app.add_subcommand("bound", "stability bound for a fundamental group");
    bound->add_option("--group", group_path)->required();

    auto* invariants = app.add_subcommand("invariants",
                                          "orbit-sum generators of the invariant ring R");
    invariants->add_option("--input", input_path)->required();
    invariants->add_option("--degree", degree);
    invariants->add_option("--out", out_path);

    auto* norms = app.add_subcommand("norms", "generators of the norm subring R0");
    norms->add_option("--input", input_path)->required();
    norms->add_option("--cert", cert_path);
    norms->add_option("--degree", degree);
    norms->add_option("--out", out_path);

    auto* verify_fg = app.add_subcommand("verify-fg",
                                         "bounded finite-generation certificate");
    verify_fg->add_option("--input", input_path)->required();

    CLI11_PARSE(app, argc, argv);

    SessionGuard session;
    qmr_session* s = session.s;
    char* report = nullptr;

    if (validate->parsed()) {
        qmr_status st = qmr_validate(s, read_file(input_path).c_str(), &report);
        return finish(s, "validate", st, report, "");
    }

    if (hyperbolic->parsed()) {
        ModuleGuard m;
        qmr_status st = qmr_module_hyperbolic(s, read_file(context_path).c_str(), k, &m.m);
        if (st == QMR_OK) st = qmr_module_to_json(s, m.m, &report);
        return finish(s, "hyperbolic", st, report, out_path);
    }

    if (apply->parsed()) {
        ModuleGuard m;
        qmr_status st = load_module(s, module_path, m);
        if (st == QMR_OK)
            st = qmr_apply_transvection(s, m.m, read_file(transvection_path).c_str(),
                                        read_file(input_path).c_str(), &report);
        return finish(s, "apply", st, report, out_path);
    }

    if (verify_iso->parsed()) {
        ModuleGuard m;
        qmr_status st = load_module(s, module_path, m);
        if (st == QMR_OK)
            st = qmr_verify_isometry(s, m.m, read_file(transvection_path).c_str(), seed,
                                     samples, &report);
        return finish(s, "verify-isometry", st, report, "");
    }

    if (factorize->parsed()) {
        qmr_status st = qmr_factorize(s, read_file(input_path).c_str(), &report);
        return finish(s, "factorize", st, report, out_path);
    }

    if (verify_cert->parsed()) {
        qmr_status st = qmr_verify_certificate(s, read_file(input_path).c_str(),
                                               read_file(cert_path).c_str(), &report);
        return finish(s, "verify-cert", st, report, "");
    }

    if (complete->parsed()) {
        ModuleGuard m;
        qmr_status st = load_module(s, module_path, m);
        if (st == QMR_OK)
            st = qmr_complete_pair(s, m.m, read_file(input_path).c_str(), &report);
        return finish(s, "complete-pair", st, report, out_path);
    }

    if (transport->parsed()) {
        qmr_status st = qmr_transport(s, read_file(input_path).c_str(), max_depth,
                                      node_budget, modulus, &report);
        return finish(s, "transport", st, report, out_path);
    }

    if (bound->parsed()) {
        qmr_status st = qmr_stability_bound(s, read_file(group_path).c_str(), &report);
        return finish(s, "bound", st, report, "");
    }

    if (invariants->parsed()) {
        qmr_status st =
            qmr_invariant_generators(s, read_file(input_path).c_str(), degree, &report);
        return finish(s, "invariants", st, report, out_path);
    }

    if (norms->parsed()) {
        std::string rc;
        if (!cert_path.empty()) rc = read_file(cert_path);
        qmr_status st = qmr_norm_generators(s, read_file(input_path).c_str(),
                                            cert_path.empty() ? nullptr : rc.c_str(),
                                            degree, &report);
        return finish(s, "norms", st, report, out_path);
    }

    if (verify_fg->parsed()) {
        qmr_status st = qmr_verify_fg(s, read_file(input_path).c_str(), &report);
        return finish(s, "verify-fg", st, report, "");
    }

    return QMR_ERR_INTERNAL;
}
