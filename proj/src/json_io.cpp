#include "qmring/json_io.hpp"

#include <cctype>

namespace qmr {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object())
        throw ParseError(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end())
        throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

long small_int(const Json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

} // namespace

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Int int_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.empty()) throw ParseError("empty integer string");
        if (s[0] == '+') s.erase(0, 1); // mpz rejects a leading plus
        std::size_t pos = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (pos == s.size()) throw ParseError("malformed integer string");
        for (std::size_t i = pos; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("malformed integer string: " + s);
        return int_from_string(s);
    }
    throw ParseError("integers must be JSON integers or decimal strings");
}

Json int_to_json(const Int& n) {
    if (fits_int64(n)) return Json(to_int64(n));
    return Json(int_to_string(n));
}

GroupDescription group_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "finite") {
        const Json& jt = field(j, "table");
        if (!jt.is_array()) throw ParseError("finite group table must be an array");
        std::vector<std::vector<std::uint32_t>> table;
        for (const auto& row : jt) {
            if (!row.is_array()) throw ParseError("table rows must be arrays");
            std::vector<std::uint32_t> r;
            for (const auto& e : row) r.push_back(static_cast<std::uint32_t>(small_int(e, "table entry")));
            table.push_back(std::move(r));
        }
        std::vector<int> omega;
        for (const auto& s : field(j, "omega"))
            omega.push_back(static_cast<int>(small_int(s, "omega entry")));
        return GroupDescription::finite(std::move(table), std::move(omega));
    }
    if (kind == "free_abelian") {
        long rank = small_int(field(j, "rank"), "rank");
        if (rank < 0) throw ParseError("rank must be nonnegative");
        std::vector<int> omega;
        for (const auto& s : field(j, "omega"))
            omega.push_back(static_cast<int>(small_int(s, "omega entry")));
        return GroupDescription::free_abelian(static_cast<std::size_t>(rank), std::move(omega));
    }
    if (kind == "infinite_dihedral") {
        const Json& om = field(j, "omega");
        int oa = static_cast<int>(small_int(field(om, "a"), "omega.a"));
        int ob = static_cast<int>(small_int(field(om, "b"), "omega.b"));
        return GroupDescription::infinite_dihedral(oa, ob);
    }
    throw ParseError("unknown group kind: " + kind);
}

Json group_to_json(const GroupDescription& g) {
    Json j;
    switch (g.kind()) {
    case GroupKind::Finite: {
        j["kind"] = "finite";
        Json table = Json::array();
        for (const auto& row : g.table()) {
            Json r = Json::array();
            for (auto e : row) r.push_back(e);
            table.push_back(std::move(r));
        }
        j["table"] = std::move(table);
        Json omega = Json::array();
        for (std::uint32_t i = 0; i < g.size(); ++i)
            omega.push_back(g.omega(finite_element(i)));
        j["omega"] = std::move(omega);
        break;
    }
    case GroupKind::FreeAbelian: {
        j["kind"] = "free_abelian";
        j["rank"] = g.rank();
        Json omega = Json::array();
        for (std::size_t i = 0; i < g.rank(); ++i) {
            std::vector<std::int64_t> e(g.rank(), 0);
            e[i] = 1;
            omega.push_back(g.omega(abelian_element(e)));
        }
        j["omega"] = std::move(omega);
        break;
    }
    case GroupKind::InfiniteDihedral: {
        j["kind"] = "infinite_dihedral";
        j["omega"] = Json{{"a", g.omega(dihedral_element("a"))},
                          {"b", g.omega(dihedral_element("b"))}};
        break;
    }
    }
    return j;
}

GroupElement element_from_json(const Json& j, const GroupDescription& g) {
    switch (g.kind()) {
    case GroupKind::Finite: {
        if (!j.is_number_integer() && !j.is_number_unsigned())
            throw ParseError("finite group elements are encoded as indices");
        long idx = j.get<long>();
        if (idx < 0) throw ParseError("element index must be nonnegative");
        GroupElement e = finite_element(static_cast<std::uint32_t>(idx));
        g.require_valid(e);
        return e;
    }
    case GroupKind::FreeAbelian: {
        if (!j.is_array()) throw ParseError("free abelian elements are exponent arrays");
        std::vector<std::int64_t> exps;
        for (const auto& x : j) exps.push_back(small_int(x, "exponent"));
        GroupElement e = abelian_element(std::move(exps));
        g.require_valid(e);
        return e;
    }
    case GroupKind::InfiniteDihedral: {
        if (!j.is_string()) throw ParseError("dihedral elements are words over \"ab\"");
        GroupElement e = dihedral_element(j.get<std::string>());
        g.require_valid(e);
        return e;
    }
    }
    throw ParseError("unknown group kind");
}

Json element_to_json(const GroupElement& e, const GroupDescription& g) {
    switch (g.kind()) {
    case GroupKind::Finite:
        return Json(e.index);
    case GroupKind::FreeAbelian: {
        Json arr = Json::array();
        for (auto x : e.exponents) arr.push_back(x);
        return arr;
    }
    case GroupKind::InfiniteDihedral:
        return Json(e.word);
    }
    return Json();
}

RingElement ring_from_json(const Json& j, const GroupPtr& g) {
    if (!j.is_array()) throw ParseError("ring elements are arrays of [coefficient, element]");
    std::vector<RingElement::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw ParseError("ring element terms are [coefficient, element] pairs");
        Int c = int_from_json(t[0]);
        GroupElement e = element_from_json(t[1], *g);
        terms.push_back({std::move(e), std::move(c)});
    }
    return RingElement::from_terms(std::move(terms), g);
}

Json ring_to_json(const RingElement& x) {
    Json arr = Json::array();
    for (const auto& [g, c] : x.terms())
        arr.push_back(Json::array({int_to_json(c), element_to_json(g, *x.group())}));
    return arr;
}

FormContext context_from_json(const Json& j) {
    GroupPtr g = std::make_shared<GroupDescription>(group_from_json(field(j, "group")));
    if (j.contains("parameter")) {
        const std::string p = j.at("parameter").get<std::string>();
        if (p != "minimal")
            throw PreconditionError("context.parameter",
                                    "only the minimal form parameter is supported");
    }
    RingElement lambda =
        j.contains("lambda") ? ring_from_json(j.at("lambda"), g) : RingElement::one(g);
    return FormContext(std::move(g), std::move(lambda));
}

Json context_to_json(const FormContext& ctx) {
    Json j;
    j["group"] = group_to_json(*ctx.group());
    j["lambda"] = ring_to_json(ctx.lambda());
    j["parameter"] = "minimal";
    return j;
}

QuadraticModule module_from_json(const Json& j) {
    FormContext ctx = context_from_json(field(j, "context"));
    long rank = small_int(field(j, "rank"), "rank");
    if (rank < 0) throw ParseError("rank must be nonnegative");
    const Json& jg = field(j, "gram");
    if (!jg.is_array() || jg.size() != static_cast<std::size_t>(rank))
        throw ParseError("gram must be a rank x rank matrix");
    std::vector<std::vector<RingElement>> gram;
    for (const auto& row : jg) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
            throw ParseError("gram must be a rank x rank matrix");
        std::vector<RingElement> r;
        for (const auto& e : row) r.push_back(ring_from_json(e, ctx.group()));
        gram.push_back(std::move(r));
    }
    const Json& jm = field(j, "mu");
    if (!jm.is_array() || jm.size() != static_cast<std::size_t>(rank))
        throw ParseError("mu must list one value per basis vector");
    std::vector<RingElement> mu;
    for (const auto& e : jm) mu.push_back(ring_from_json(e, ctx.group()));
    std::optional<NonsingularityCertificate> cert;
    if (j.contains("certificate") && !j.at("certificate").is_null()) {
        const Json& jc = field(j.at("certificate"), "inverse_gram");
        if (!jc.is_array() || jc.size() != static_cast<std::size_t>(rank))
            throw ParseError("inverse_gram must be a rank x rank matrix");
        std::vector<std::vector<RingElement>> inv;
        for (const auto& row : jc) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
                throw ParseError("inverse_gram must be a rank x rank matrix");
            std::vector<RingElement> r;
            for (const auto& e : row) r.push_back(ring_from_json(e, ctx.group()));
            inv.push_back(std::move(r));
        }
        cert = NonsingularityCertificate{std::move(inv)};
    }
    return QuadraticModule(std::move(ctx), std::move(gram), std::move(mu), std::move(cert));
}

Json module_to_json(const QuadraticModule& m) {
    Json j;
    j["context"] = context_to_json(m.context());
    j["rank"] = m.rank();
    Json gram = Json::array();
    for (const auto& row : m.gram()) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(ring_to_json(e));
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);
    Json mu = Json::array();
    for (const auto& e : m.mu_basis()) mu.push_back(ring_to_json(e));
    j["mu"] = std::move(mu);
    if (m.certificate()) {
        Json inv = Json::array();
        for (const auto& row : m.certificate()->inverse_gram) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(ring_to_json(e));
            inv.push_back(std::move(r));
        }
        j["certificate"] = Json{{"inverse_gram", std::move(inv)}};
    }
    return j;
}

ModuleVector vector_from_json(const Json& j, const GroupPtr& g, std::size_t rank) {
    const Json& jc = field(j, "coords");
    if (!jc.is_array() || jc.size() != rank)
        throw ParseError("vector coords must match the module rank");
    ModuleVector v;
    for (const auto& e : jc) v.coords.push_back(ring_from_json(e, g));
    return v;
}

ModuleVector vector_from_json(const Json& j, const QuadraticModule& m) {
    return vector_from_json(j, m.group(), m.rank());
}

Json vector_to_json(const ModuleVector& v) {
    Json coords = Json::array();
    for (const auto& c : v.coords) coords.push_back(ring_to_json(c));
    return Json{{"coords", std::move(coords)}};
}

Transvection transvection_from_json(const Json& j, const ModulePtr& m) {
    ModuleVector u = vector_from_json(field(j, "u"), *m);
    RingElement a = ring_from_json(field(j, "a"), m->group());
    ModuleVector v = vector_from_json(field(j, "v"), *m);
    return Transvection::make(m, std::move(u), std::move(a), std::move(v));
}

Json transvection_to_json(const Transvection& t) {
    Json j;
    j["u"] = vector_to_json(t.u());
    j["a"] = ring_to_json(t.a());
    j["v"] = vector_to_json(t.v());
    return j;
}

HyperbolicPair pair_from_json(const Json& j, const QuadraticModule& m) {
    return HyperbolicPair{vector_from_json(field(j, "p"), m),
                          vector_from_json(field(j, "q"), m)};
}

Json pair_to_json(const HyperbolicPair& p) {
    return Json{{"p", vector_to_json(p.p)}, {"q", vector_to_json(p.q)}};
}

namespace {

QuadraticModule module_or_zero(const Json& j, const char* name, const FormContext& ctx) {
    if (!j.contains(name) || j.at(name).is_null())
        return QuadraticModule(ctx, {}, {});
    return module_from_json(j.at(name));
}

} // namespace

FactorizationInput factorization_input_from_json(const Json& j) {
    FormContext ctx = context_from_json(field(j, "context"));
    QuadraticModule v0 = module_or_zero(j, "v0", ctx);
    QuadraticModule v1 = module_or_zero(j, "v1", ctx);
    const Json& jt = field(j, "target");
    const std::size_t k = v0.rank() + v1.rank();
    ModuleVector p = vector_from_json(field(jt, "p"), ctx.group(), k + 2);
    RingElement a = ring_from_json(field(jt, "a"), ctx.group());
    ModuleVector v = vector_from_json(field(jt, "v"), ctx.group(), k);
    FactorizationInput input{std::move(ctx), std::move(v0), std::move(v1),
                             std::move(p), std::move(a), std::move(v)};
    input.validate();
    return input;
}

Json factorization_input_to_json(const FactorizationInput& input) {
    Json j;
    j["context"] = context_to_json(input.ctx);
    j["v0"] = module_to_json(input.V0);
    j["v1"] = module_to_json(input.V1);
    j["target"] = Json{{"p", vector_to_json(input.p)},
                       {"a", ring_to_json(input.a)},
                       {"v", vector_to_json(input.v)}};
    return j;
}

FactorizationCertificate certificate_from_json(const Json& j,
                                               const FactorizationInput& in) {
    FactorizationCertificate cert;
    cert.v_blocks = static_cast<std::size_t>(small_int(field(j, "v_blocks"), "v_blocks"));
    cert.p_factors_per_block = static_cast<std::size_t>(
        small_int(field(j, "p_factors_per_block"), "p_factors_per_block"));
    const Json& jf = field(j, "factors");
    if (!jf.is_array()) throw ParseError("factors must be an array");
    const std::size_t n = in.ambient_rank();
    for (const auto& f : jf) {
        FactorizationFactor factor;
        factor.u = vector_from_json(field(f, "u"), in.ctx.group(), n);
        factor.v = vector_from_json(field(f, "v"), in.ctx.group(), n);
        factor.witness = vector_from_json(field(f, "witness"), in.ctx.group(), n);
        cert.factors.push_back(std::move(factor));
    }
    return cert;
}

Json certificate_to_json(const FactorizationCertificate& cert) {
    Json j;
    j["v_blocks"] = cert.v_blocks;
    j["p_factors_per_block"] = cert.p_factors_per_block;
    Json factors = Json::array();
    for (const auto& f : cert.factors) {
        Json jf;
        jf["u"] = vector_to_json(f.u);
        jf["v"] = vector_to_json(f.v);
        jf["witness"] = vector_to_json(f.witness);
        factors.push_back(std::move(jf));
    }
    j["factors"] = std::move(factors);
    return j;
}

TransportProblem transport_problem_from_json(const Json& j) {
    PairModule pm{context_from_json(field(j, "context")), std::nullopt, 1, 0};
    TransportProblem problem{std::move(pm), {}, {}, {}};
    if (j.contains("v") && !j.at("v").is_null())
        problem.pm.V = module_from_json(j.at("v"));
    problem.pm.p_rank =
        static_cast<std::size_t>(small_int(field(j, "p_rank"), "p_rank"));
    problem.pm.modulus = small_int(field(j, "modulus"), "modulus");
    if (j.contains("bounds")) {
        const Json& b = j.at("bounds");
        if (b.contains("element_size"))
            problem.bounds.element_size = small_int(b.at("element_size"), "element_size");
        if (b.contains("height")) problem.bounds.height = small_int(b.at("height"), "height");
        if (b.contains("lambda_terms"))
            problem.bounds.lambda_terms = small_int(b.at("lambda_terms"), "lambda_terms");
    }
    QuadraticModule M = problem.pm.build();
    problem.source = pair_from_json(field(j, "source"), M);
    problem.target = pair_from_json(field(j, "target"), M);
    return problem;
}

Json word_to_json(const std::vector<LabeledTransvection>& word) {
    Json arr = Json::array();
    for (const auto& w : word) {
        Json jw;
        jw["family"] = family_name(w.family);
        jw["u"] = vector_to_json(w.u);
        jw["a"] = ring_to_json(w.a);
        jw["v"] = vector_to_json(w.v);
        arr.push_back(std::move(jw));
    }
    return arr;
}

std::vector<LabeledTransvection> word_from_json(const Json& j, const QuadraticModule& m) {
    if (!j.is_array()) throw ParseError("a generator word is an array");
    std::vector<LabeledTransvection> word;
    for (const auto& jw : j) {
        auto fam = family_from_name(field(jw, "family").get<std::string>());
        if (!fam) throw ParseError("unknown generator family");
        LabeledTransvection t{*fam, vector_from_json(field(jw, "u"), m),
                              ring_from_json(field(jw, "a"), m.group()),
                              vector_from_json(field(jw, "v"), m)};
        word.push_back(std::move(t));
    }
    return word;
}

VirtuallyAbelianInput va_input_from_json(const Json& j) {
    VirtuallyAbelianInput input{0,
                                group_from_json(field(j, "G")),
                                {},
                                {},
                                {}};
    long n = small_int(field(j, "n"), "n");
    if (n < 0) throw ParseError("n must be nonnegative");
    input.n = static_cast<std::size_t>(n);
    const Json& ja = field(j, "action");
    if (!ja.is_array()) throw ParseError("action must be an array of matrices");
    for (const auto& jm : ja) {
        std::vector<std::vector<long>> mat;
        if (!jm.is_array()) throw ParseError("action matrices must be arrays");
        for (const auto& jr : jm) {
            std::vector<long> row;
            if (!jr.is_array()) throw ParseError("action matrix rows must be arrays");
            for (const auto& e : jr) row.push_back(small_int(e, "action entry"));
            mat.push_back(std::move(row));
        }
        input.action.push_back(std::move(mat));
    }
    for (const auto& s : field(j, "omega_gamma"))
        input.omega_gamma.push_back(static_cast<int>(small_int(s, "omega_gamma entry")));
    if (j.contains("omega_g"))
        for (const auto& s : j.at("omega_g"))
            input.omega_g.push_back(static_cast<int>(small_int(s, "omega_g entry")));
    input.validate();
    return input;
}

GeneratorsCertificate generators_certificate_from_json(const Json& j) {
    GeneratorsCertificate cert;
    cert.ring = field(j, "ring").get<std::string>();
    cert.group = std::make_shared<GroupDescription>(group_from_json(field(j, "group")));
    cert.degree_bound = small_int(field(j, "degree_bound"), "degree_bound");
    for (const auto& g : field(j, "generators"))
        cert.generators.push_back(ring_from_json(g, cert.group));
    if (j.contains("trace"))
        for (const auto& t : j.at("trace")) cert.trace.push_back(t.get<std::string>());
    return cert;
}

Json generators_certificate_to_json(const GeneratorsCertificate& cert) {
    Json j;
    j["ring"] = cert.ring;
    j["group"] = group_to_json(*cert.group);
    j["degree_bound"] = cert.degree_bound;
    j["closure"] = cert.ring == "R"
                       ? "orbit sums of all monomials up to degree_bound; G-fixedness "
                         "verified by direct action"
                       : "norms of R generators, closed under products within "
                         "degree_bound; G-fixedness verified by direct action";
    Json gens = Json::array();
    for (const auto& g : cert.generators) gens.push_back(ring_to_json(g));
    j["generators"] = std::move(gens);
    Json trace = Json::array();
    for (const auto& t : cert.trace) trace.push_back(t);
    j["trace"] = std::move(trace);
    return j;
}

FgInput fg_input_from_json(const Json& j) {
    FgInput input{group_from_json(field(j, "group")), {}, {}, 0};
    GroupPtr g = std::make_shared<GroupDescription>(input.group);
    for (const auto& r : field(j, "ring_generators"))
        input.ring_generators.push_back(ring_from_json(r, g));
    for (const auto& c : field(j, "candidates"))
        input.candidates.push_back(ring_from_json(c, g));
    input.degree_bound = small_int(field(j, "degree_bound"), "degree_bound");
    return input;
}

Json fg_report_to_json(const FgReport& report) {
    Json j;
    j["pass"] = report.pass;
    j["degree_bound"] = report.degree_bound;
    Json per = Json::array();
    for (const auto& d : report.per_degree) {
        Json jd;
        jd["degree"] = d.degree;
        jd["checked"] = d.checked;
        Json fails = Json::array();
        for (const auto& f : d.failures) fails.push_back(f);
        jd["failures"] = std::move(fails);
        per.push_back(std::move(jd));
    }
    j["per_degree"] = std::move(per);
    return j;
}

} // namespace qmr
