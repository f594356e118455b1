#pragma once

#include "qmring/bounds.hpp"
#include "qmring/factorization.hpp"
#include "qmring/pairs.hpp"
#include "qmring/transvection.hpp"

#include <json.hpp>

#include <string>

namespace qmr {

// Insertion-ordered JSON everywhere so identical inputs give byte-identical
// reports.
using Json = nlohmann::ordered_json;

// Parse failures (malformed JSON, missing/ill-typed fields) throw ParseError;
// semantic violations inside the constructed values throw PreconditionError.
Json parse_text(const std::string& text);

Int int_from_json(const Json& j);
Json int_to_json(const Int& n); // decimal string when it exceeds 64 bits

GroupDescription group_from_json(const Json& j);
Json group_to_json(const GroupDescription& g);

GroupElement element_from_json(const Json& j, const GroupDescription& g);
Json element_to_json(const GroupElement& e, const GroupDescription& g);

RingElement ring_from_json(const Json& j, const GroupPtr& g);
Json ring_to_json(const RingElement& x);

FormContext context_from_json(const Json& j);
Json context_to_json(const FormContext& ctx);

QuadraticModule module_from_json(const Json& j);
Json module_to_json(const QuadraticModule& m);

ModuleVector vector_from_json(const Json& j, const QuadraticModule& m);
ModuleVector vector_from_json(const Json& j, const GroupPtr& g, std::size_t rank);
Json vector_to_json(const ModuleVector& v);

Transvection transvection_from_json(const Json& j, const ModulePtr& m);
Json transvection_to_json(const Transvection& t);

HyperbolicPair pair_from_json(const Json& j, const QuadraticModule& m);
Json pair_to_json(const HyperbolicPair& p);

FactorizationInput factorization_input_from_json(const Json& j);
Json factorization_input_to_json(const FactorizationInput& input);

FactorizationCertificate certificate_from_json(const Json& j, const FactorizationInput& in);
Json certificate_to_json(const FactorizationCertificate& cert);

struct TransportProblem {
    PairModule pm;
    HyperbolicPair source;
    HyperbolicPair target;
    EnumerationBounds bounds;
};

TransportProblem transport_problem_from_json(const Json& j);
Json word_to_json(const std::vector<LabeledTransvection>& word);
std::vector<LabeledTransvection> word_from_json(const Json& j, const QuadraticModule& m);

VirtuallyAbelianInput va_input_from_json(const Json& j);
GeneratorsCertificate generators_certificate_from_json(const Json& j);
Json generators_certificate_to_json(const GeneratorsCertificate& cert);

FgInput fg_input_from_json(const Json& j);
Json fg_report_to_json(const FgReport& report);

} // namespace qmr
