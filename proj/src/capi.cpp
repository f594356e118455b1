#include "qmring/qmring.h"

#include "qmring/ops.hpp"

#include <cstring>
#include <string>

struct qmr_session {
    std::string error;
};

struct qmr_module {
    qmr::QuadraticModule value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

char* dup_json(const qmr::Json& j) { return dup_string(j.dump(2) + "\n"); }

qmr_status record(qmr_session* s, qmr_status code, const std::string& message) {
    if (s) s->error = message;
    return code;
}

// Runs `fn`, translating the exception taxonomy into status codes.
template <typename Fn>
qmr_status guarded(qmr_session* s, Fn&& fn) {
    if (!s) return QMR_ERR_INTERNAL;
    s->error.clear();
    try {
        return fn();
    } catch (const qmr::ParseError& e) {
        return record(s, QMR_ERR_PARSE, e.what());
    } catch (const qmr::PreconditionError& e) {
        return record(s, QMR_ERR_PRECONDITION, e.what());
    } catch (const qmr::ExhaustedError& e) {
        return record(s, QMR_ERR_EXHAUSTED, e.what());
    } catch (const qmr::VerifyError& e) {
        return record(s, QMR_ERR_VERIFY, e.what());
    } catch (const std::exception& e) {
        return record(s, QMR_ERR_INTERNAL, e.what());
    }
}

qmr_status require_args(qmr_session* s, bool ok) {
    if (!ok) return record(s, QMR_ERR_INTERNAL, "null argument");
    return QMR_OK;
}

} // namespace

extern "C" {

qmr_session* qmr_session_new(void) { return new qmr_session(); }

void qmr_session_free(qmr_session* s) { delete s; }

const char* qmr_last_error(const qmr_session* s) { return s ? s->error.c_str() : ""; }

const char* qmr_version(void) { return "qmring 1.0.0"; }

void qmr_string_free(char* s) { delete[] s; }

qmr_status qmr_module_parse(qmr_session* s, const char* module_json, qmr_module** out) {
    if (require_args(s, module_json && out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto m = qmr::module_from_json(qmr::parse_text(module_json));
        *out = new qmr_module{std::move(m)};
        return QMR_OK;
    });
}

qmr_status qmr_module_hyperbolic(qmr_session* s, const char* context_json, long k,
                                 qmr_module** out) {
    if (require_args(s, context_json && out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *out = new qmr_module{qmr::ops::hyperbolic_module(context_json, k)};
        return QMR_OK;
    });
}

qmr_status qmr_module_orthogonal_sum(qmr_session* s, const qmr_module* a,
                                     const qmr_module* b, qmr_module** out) {
    if (require_args(s, a && b && out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *out = new qmr_module{qmr::orthogonal_sum(a->value, b->value)};
        return QMR_OK;
    });
}

qmr_status qmr_module_to_json(qmr_session* s, const qmr_module* m, char** json_out) {
    if (require_args(s, m && json_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *json_out = dup_json(qmr::module_to_json(m->value));
        return QMR_OK;
    });
}

long qmr_module_rank(const qmr_module* m) {
    return m ? static_cast<long>(m->value.rank()) : -1;
}

void qmr_module_free(qmr_module* m) { delete m; }

qmr_status qmr_inner(qmr_session* s, const qmr_module* m, const char* x_json,
                     const char* y_json, char** ring_element_out) {
    if (require_args(s, m && x_json && y_json && ring_element_out) != QMR_OK)
        return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto x = qmr::vector_from_json(qmr::parse_text(x_json), m->value);
        auto y = qmr::vector_from_json(qmr::parse_text(y_json), m->value);
        *ring_element_out = dup_json(qmr::ring_to_json(qmr::inner(m->value, x, y)));
        return QMR_OK;
    });
}

qmr_status qmr_mu(qmr_session* s, const qmr_module* m, const char* x_json,
                  char** ring_element_out) {
    if (require_args(s, m && x_json && ring_element_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto x = qmr::vector_from_json(qmr::parse_text(x_json), m->value);
        *ring_element_out = dup_json(qmr::ring_to_json(qmr::mu(m->value, x)));
        return QMR_OK;
    });
}

qmr_status qmr_apply_transvection(qmr_session* s, const qmr_module* m,
                                  const char* transvection_json, const char* vector_json,
                                  char** vector_out) {
    if (require_args(s, m && transvection_json && vector_json && vector_out) != QMR_OK)
        return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *vector_out =
            dup_json(qmr::ops::apply_transvection(m->value, transvection_json, vector_json));
        return QMR_OK;
    });
}

qmr_status qmr_verify_isometry(qmr_session* s, const qmr_module* m,
                               const char* transvection_json, unsigned long seed,
                               long samples, char** report_out) {
    if (require_args(s, m && transvection_json && report_out) != QMR_OK)
        return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto out = qmr::ops::verify_isometry_op(m->value, transvection_json, seed,
                                                static_cast<int>(samples));
        *report_out = dup_json(out.report);
        if (!out.ok) return record(s, QMR_ERR_VERIFY, "isometry verification failed");
        return QMR_OK;
    });
}

qmr_status qmr_complete_pair(qmr_session* s, const qmr_module* m, const char* request_json,
                             char** pair_out) {
    if (require_args(s, m && request_json && pair_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *pair_out = dup_json(qmr::ops::complete_pair_op(m->value, request_json));
        return QMR_OK;
    });
}

qmr_status qmr_validate(qmr_session* s, const char* artifact_json, char** report_out) {
    if (require_args(s, artifact_json && report_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *report_out = dup_json(qmr::ops::validate(artifact_json));
        return QMR_OK;
    });
}

qmr_status qmr_factorize(qmr_session* s, const char* input_json, char** certificate_out) {
    if (require_args(s, input_json && certificate_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *certificate_out = dup_json(qmr::ops::factorize_op(input_json));
        return QMR_OK;
    });
}

qmr_status qmr_verify_certificate(qmr_session* s, const char* input_json,
                                  const char* certificate_json, char** report_out) {
    if (require_args(s, input_json && certificate_json && report_out) != QMR_OK)
        return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto out = qmr::ops::verify_certificate_op(input_json, certificate_json);
        *report_out = dup_json(out.report);
        if (!out.ok) return record(s, QMR_ERR_VERIFY, "certificate verification failed");
        return QMR_OK;
    });
}

qmr_status qmr_transport(qmr_session* s, const char* problem_json, long max_depth,
                         long node_budget, long modulus_override, char** report_out) {
    if (require_args(s, problem_json && report_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto out =
            qmr::ops::transport_op(problem_json, max_depth, node_budget, modulus_override);
        *report_out = dup_json(out.report);
        if (out.exhausted) return record(s, QMR_ERR_EXHAUSTED, "transport search exhausted");
        return QMR_OK;
    });
}

qmr_status qmr_stability_bound(qmr_session* s, const char* group_json, char** report_out) {
    if (require_args(s, group_json && report_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *report_out = dup_json(qmr::ops::stability_bound_op(group_json));
        return QMR_OK;
    });
}

qmr_status qmr_invariant_generators(qmr_session* s, const char* input_json,
                                    long degree_bound, char** certificate_out) {
    if (require_args(s, input_json && certificate_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        *certificate_out = dup_json(qmr::ops::invariants_op(input_json, degree_bound));
        return QMR_OK;
    });
}

qmr_status qmr_norm_generators(qmr_session* s, const char* input_json,
                               const char* r_certificate_json, long degree_bound,
                               char** certificate_out) {
    if (require_args(s, input_json && certificate_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        std::string rc = r_certificate_json ? r_certificate_json : "";
        *certificate_out = dup_json(qmr::ops::norms_op(input_json, rc, degree_bound));
        return QMR_OK;
    });
}

qmr_status qmr_verify_fg(qmr_session* s, const char* input_json, char** report_out) {
    if (require_args(s, input_json && report_out) != QMR_OK) return QMR_ERR_INTERNAL;
    return guarded(s, [&] {
        auto out = qmr::ops::verify_fg_op(input_json);
        *report_out = dup_json(out.report);
        if (!out.ok) return record(s, QMR_ERR_VERIFY, "finite generation check failed");
        return QMR_OK;
    });
}

} // extern "C"
