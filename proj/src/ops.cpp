#include "qmring/ops.hpp"

namespace qmr::ops {

namespace {

// Structural check of a ring element encoding when no group is available:
// [[coeff, element], ...] with integer-or-string coefficients.
void check_ring_shape(const Json& j) {
    if (!j.is_array()) throw ParseError("ring element must be an array of terms");
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw ParseError("ring element terms are [coefficient, element] pairs");
        (void)int_from_json(t[0]);
        if (!t[1].is_number_integer() && !t[1].is_number_unsigned() && !t[1].is_array() &&
            !t[1].is_string())
            throw ParseError("ring element term has no recognizable group element");
    }
}

void check_vector_shape(const Json& j) {
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
        throw ParseError("vector must be an object with a coords array");
    for (const auto& c : j.at("coords")) check_ring_shape(c);
}

} // namespace

Json validate(const std::string& artifact_json) {
    Json j = parse_text(artifact_json);
    Json report;
    std::string kind;
    std::string depth = "full";
    if (!j.is_object() && !j.is_array())
        throw ParseError("artifact must be a JSON object or array");

    if (j.is_array()) {
        // A bare array is a ring element or a generator word.
        if (!j.empty() && j[0].is_object() && j[0].contains("family")) {
            kind = "generator_word";
            for (const auto& w : j) {
                check_vector_shape(w.at("u"));
                check_vector_shape(w.at("v"));
                check_ring_shape(w.at("a"));
            }
        } else {
            kind = "ring_element";
            check_ring_shape(j);
        }
        depth = "structural";
    } else if (j.contains("gram")) {
        kind = "module";
        (void)module_from_json(j);
    } else if (j.contains("n") && j.contains("G") && j.contains("action")) {
        kind = "virtually_abelian_input";
        (void)va_input_from_json(j);
    } else if (j.contains("kind")) {
        kind = "group";
        (void)group_from_json(j);
    } else if (j.contains("target") && (j.contains("v0") || j.contains("v1"))) {
        kind = "factorization_input";
        (void)factorization_input_from_json(j);
    } else if (j.contains("ring_generators")) {
        kind = "fg_input";
        (void)fg_input_from_json(j);
    } else if (j.contains("ring") && j.contains("generators")) {
        kind = "generators_certificate";
        (void)generators_certificate_from_json(j);
    } else if (j.contains("p_rank") && j.contains("modulus")) {
        kind = "transport_problem";
        (void)transport_problem_from_json(j);
    } else if (j.contains("factors")) {
        kind = "factorization_certificate";
        for (const auto& f : j.at("factors")) {
            check_vector_shape(f.at("u"));
            check_vector_shape(f.at("v"));
            check_vector_shape(f.at("witness"));
        }
        depth = "structural";
    } else if (j.contains("group") && !j.contains("ring_generators") &&
               !j.contains("generators")) {
        kind = "context";
        (void)context_from_json(j);
    } else if (j.contains("u") && j.contains("v") && j.contains("a")) {
        kind = "transvection";
        check_vector_shape(j.at("u"));
        check_vector_shape(j.at("v"));
        check_ring_shape(j.at("a"));
        depth = "structural";
    } else if (j.contains("p") && j.contains("q")) {
        kind = "hyperbolic_pair";
        check_vector_shape(j.at("p"));
        check_vector_shape(j.at("q"));
        depth = "structural";
    } else if (j.contains("coords")) {
        kind = "vector";
        check_vector_shape(j);
        depth = "structural";
    } else if (j.contains("d") && j.contains("summands")) {
        kind = "stability_bound";
    } else if (j.contains("pass")) {
        kind = "report";
    } else if (j.contains("outcome")) {
        kind = "transport_result";
    } else {
        throw ParseError("unrecognized artifact shape");
    }
    report["artifact"] = kind;
    report["valid"] = true;
    report["checks"] = depth;
    return report;
}

QuadraticModule hyperbolic_module(const std::string& context_json, long k) {
    if (k < 0) throw PreconditionError("hyperbolic.k", "k must be nonnegative");
    FormContext ctx = context_from_json(parse_text(context_json));
    return QuadraticModule::hyperbolic(ctx, static_cast<std::size_t>(k));
}

Json apply_transvection(const QuadraticModule& m, const std::string& transvection_json,
                        const std::string& vector_json) {
    ModulePtr mp = std::make_shared<QuadraticModule>(m);
    Transvection t = transvection_from_json(parse_text(transvection_json), mp);
    ModuleVector x = vector_from_json(parse_text(vector_json), m);
    return vector_to_json(t.apply(x));
}

OpOutcome verify_isometry_op(const QuadraticModule& m, const std::string& transvection_json,
                             unsigned long seed, int samples) {
    ModulePtr mp = std::make_shared<QuadraticModule>(m);
    Transvection t = transvection_from_json(parse_text(transvection_json), mp);
    IsometryReport r = verify_isometry(t, samples, seed);
    OpOutcome out;
    out.ok = r.pass;
    out.report["pass"] = r.pass;
    out.report["samples"] = samples;
    if (!r.pass) {
        out.report["failure"] = r.failure;
        out.report["counterexample"] = r.counterexample;
    }
    return out;
}

Json factorize_op(const std::string& input_json) {
    FactorizationInput input = factorization_input_from_json(parse_text(input_json));
    FactorizationCertificate cert = factorize(input);
    return certificate_to_json(cert);
}

OpOutcome verify_certificate_op(const std::string& input_json,
                                const std::string& certificate_json) {
    FactorizationInput input = factorization_input_from_json(parse_text(input_json));
    FactorizationCertificate cert =
        certificate_from_json(parse_text(certificate_json), input);
    CertificateReport r = verify_certificate(input, cert);
    OpOutcome out;
    out.ok = r.pass;
    out.report["pass"] = r.pass;
    out.report["factors"] = cert.factors.size();
    if (!r.pass) {
        out.report["first_discrepancy"] = r.first_discrepancy;
        out.report["failing_factor"] = r.failing_factor;
    }
    return out;
}

Json complete_pair_op(const QuadraticModule& m, const std::string& request_json) {
    Json j = parse_text(request_json);
    if (!j.is_object() || !j.contains("p") || !j.contains("witness"))
        throw ParseError("complete-pair input must carry 'p' and 'witness' vectors");
    ModuleVector p = vector_from_json(j.at("p"), m);
    ModuleVector y = vector_from_json(j.at("witness"), m);
    return pair_to_json(complete_pair(m, p, y));
}

OpOutcome transport_op(const std::string& problem_json, long max_depth, long node_budget,
                       long modulus_override) {
    Json j = parse_text(problem_json);
    if (modulus_override > 0 && j.is_object()) j["modulus"] = modulus_override;
    TransportProblem problem = transport_problem_from_json(j);
    TransportResult r =
        transport(problem.pm, problem.source, problem.target, max_depth, node_budget,
                  problem.bounds);
    OpOutcome out;
    switch (r.outcome) {
    case TransportOutcome::Found: out.report["outcome"] = "found"; break;
    case TransportOutcome::Exhausted:
        out.report["outcome"] = "exhausted";
        out.exhausted = true;
        out.ok = false;
        break;
    case TransportOutcome::BudgetExceeded:
        out.report["outcome"] = "budget_exceeded";
        out.exhausted = true;
        out.ok = false;
        break;
    }
    out.report["depth"] = r.depth;
    out.report["nodes_visited"] = r.nodes_visited;
    if (!r.warning.empty()) out.report["warning"] = r.warning;
    if (r.outcome == TransportOutcome::Found) out.report["word"] = word_to_json(r.word);
    return out;
}

Json stability_bound_op(const std::string& group_json) {
    Json j = parse_text(group_json);
    StabilityBound b{};
    if (j.is_object() && j.contains("kind")) {
        b = stability_bound(group_from_json(j));
    } else if (j.is_object() && j.contains("n") && j.contains("G")) {
        VirtuallyAbelianInput input = va_input_from_json(j);
        b = stability_bound_for_rank(static_cast<long>(input.n));
    } else {
        throw ParseError("bound expects a group description or a virtually abelian input");
    }
    Json out;
    out["n"] = b.n;
    out["d"] = b.d;
    out["summands"] = b.summands;
    return out;
}

Json invariants_op(const std::string& va_json, long degree_bound) {
    VirtuallyAbelianInput input = va_input_from_json(parse_text(va_json));
    return generators_certificate_to_json(invariant_generators(input, degree_bound));
}

Json norms_op(const std::string& va_json, const std::string& r_cert_json_or_empty,
              long degree_bound) {
    VirtuallyAbelianInput input = va_input_from_json(parse_text(va_json));
    GeneratorsCertificate cert_r =
        r_cert_json_or_empty.empty()
            ? invariant_generators(input, degree_bound)
            : generators_certificate_from_json(parse_text(r_cert_json_or_empty));
    return generators_certificate_to_json(norm_generators(input, cert_r, degree_bound));
}

OpOutcome verify_fg_op(const std::string& input_json) {
    FgInput input = fg_input_from_json(parse_text(input_json));
    FgReport r = verify_fg_module(input);
    OpOutcome out;
    out.ok = r.pass;
    out.report = fg_report_to_json(r);
    return out;
}

} // namespace qmr::ops
