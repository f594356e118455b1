#pragma once

#include "qmring/json_io.hpp"

namespace qmr::ops {

// Shared operation glue between the C API and the test drivers: parse the
// request, run the core operation, serialize the report. Hard failures
// propagate as the qmr exception types; soft outcomes (failed verification,
// exhausted search) are encoded in the returned report and `ok`.

struct OpOutcome {
    bool ok = true;        // false: embedded verification failed
    bool exhausted = false; // transport only
    Json report;
};

Json validate(const std::string& artifact_json);

QuadraticModule hyperbolic_module(const std::string& context_json, long k);

Json apply_transvection(const QuadraticModule& m, const std::string& transvection_json,
                        const std::string& vector_json);

OpOutcome verify_isometry_op(const QuadraticModule& m, const std::string& transvection_json,
                             unsigned long seed, int samples);

Json factorize_op(const std::string& input_json);

OpOutcome verify_certificate_op(const std::string& input_json,
                                const std::string& certificate_json);

// request_json = {"p": vector, "witness": vector}
Json complete_pair_op(const QuadraticModule& m, const std::string& request_json);

// modulus_override > 0 replaces the modulus in the problem file.
OpOutcome transport_op(const std::string& problem_json, long max_depth, long node_budget,
                       long modulus_override = 0);

Json stability_bound_op(const std::string& group_json);

Json invariants_op(const std::string& va_json, long degree_bound);

Json norms_op(const std::string& va_json, const std::string& r_cert_json_or_empty,
              long degree_bound);

OpOutcome verify_fg_op(const std::string& input_json);

} // namespace qmr::ops
