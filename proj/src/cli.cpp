#include "mono/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mono/embeddings.hpp"
#include "mono/families.hpp"

namespace mono {

namespace {

using nlohmann::json;  // std::map backing: keys serialize sorted, so output
                       // is byte-stable for identical inputs

json poly_json(const Polynomial& f)
{
    json a = json::array();
    for (const Rat& c : f.coeffs()) a.push_back(c.get_str());
    return json{{"coeffs", a}, {"text", f.str()}};
}

json elem_json(const FieldElement& x)
{
    json a = json::array();
    for (const Rat& c : x.coords()) a.push_back(c.get_str());
    return a;
}

json module_json(const FullModule& m)
{
    json basis = json::array();
    for (int r = 0; r < m.rank(); r++) {
        json row = json::array();
        for (int c = 0; c < m.basis().cols; c++) row.push_back(m.basis().at(r, c).get_str());
        basis.push_back(row);
    }
    json field = json::array();
    for (const Rat& c : m.field().defining_poly().coeffs()) field.push_back(c.get_str());
    json s = json::array();
    for (const Int& p : m.base().S) s.push_back(p.get_str());
    return json{{"field", field}, {"denom", m.denom().get_str()}, {"basis", basis}, {"S", s}};
}

json mobius_json(const Mobius& m)
{
    return json::array({json::array({m.a.get_str(), m.b.get_str()}),
                        json::array({m.c.get_str(), m.d.get_str()})});
}

std::string mpf_str(const mpf_class& v)
{
    mp_exp_t exp;
    std::string digits = v.get_str(exp, 10, 40);
    std::ostringstream os;
    os << (v < 0 ? "-" : "") << "0." << (digits.empty() ? "0" : digits.substr(v < 0 ? 1 : 0))
       << "e" << exp;
    return os.str();
}

Polynomial parse_poly_arg(const std::string& s)
{
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    if (i < s.size() && s[i] == '[') {
        json a = json::parse(s);
        std::vector<Rat> c;
        for (const auto& v : a)
            c.push_back(v.is_string() ? rat_from_str(v.get<std::string>())
                                      : Rat(v.get<long>()));
        return Polynomial(std::move(c));
    }
    return parse_polynomial(s);
}

std::vector<Rat> parse_coords(const std::string& s)
{
    std::vector<Rat> c;
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    if (i < s.size() && s[i] == '[') {
        json a = json::parse(s);
        for (const auto& v : a)
            c.push_back(v.is_string() ? rat_from_str(v.get<std::string>()) : Rat(v.get<long>()));
        return c;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(rat_from_str(tok));
    return c;
}

BaseRing parse_base(const std::string& s)
{
    if (s.empty()) return BaseRing::integers();
    std::vector<Int> primes;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) primes.emplace_back(tok);
    return BaseRing::s_integers(std::move(primes));
}

unsigned default_prec()
{
    if (const char* env = std::getenv("MONO_DEFAULT_PREC")) {
        long v = std::atol(env);
        if (v >= 53) return static_cast<unsigned>(v);
    }
    return 256;
}

FieldElement element_from(const NumberField& K, const std::string& coords)
{
    return K.from_coords(parse_coords(coords));
}

json verdict_json(Verdict v)
{
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "inconclusive";
    }
}

void emit(std::ostream& out, const json& doc)
{
    out << doc.dump(2) << "\n";
}

int cmd_order(const std::string& poly, const std::string& elem, const std::string& sbase,
              std::ostream& out)
{
    Polynomial f = parse_poly_arg(poly);
    NumberField K(f);
    BaseRing base = parse_base(sbase);
    FieldElement alpha = elem.empty() ? K.theta() : element_from(K, elem);
    Order O = order_omega_basis(alpha, base);
    json doc{{"schema", 1},
             {"command", "order"},
             {"field", poly_json(f)},
             {"base", base.str()},
             {"elem", elem_json(alpha)},
             {"order", module_json(O.module())},
             {"discriminant", O.discriminant().get_str()}};
    json omega = json::array();
    for (const FieldElement& w : *O.omega_basis()) omega.push_back(elem_json(w));
    doc["omega_basis"] = omega;
    json table = json::array();
    for (const auto& row : O.structure_table()) {
        json jrow = json::array();
        for (const Int& v : row) jrow.push_back(v.get_str());
        table.push_back(jrow);
    }
    doc["table"] = table;
    if (K.degree() >= 3) {
        auto prim = is_primitive_order(O);
        doc["primitive"] = prim.primitive;
        if (!prim.primitive) {
            doc["primitivity_witness"] = json{{"a", prim.witness_a.get_str()},
                                              {"order", module_json(prim.witness_order->module())}};
        }
    }
    emit(out, doc);
    return 0;
}

int cmd_equiv(const std::string& poly, const std::string& a, const std::string& b,
              const std::string& sbase, std::ostream& out)
{
    Polynomial f = parse_poly_arg(poly);
    NumberField K(f);
    BaseRing base = parse_base(sbase);
    FieldElement alpha = element_from(K, a), beta = element_from(K, b);

    json doc{{"schema", 1}, {"command", "equiv"}, {"field", poly_json(f)}, {"base", base.str()},
             {"a", elem_json(alpha)}, {"b", elem_json(beta)}};
    auto q = gl2q_equivalent(alpha, beta);
    doc["gl2q"] = json{{"verdict", q ? "yes" : "no"}};
    if (q) doc["gl2q"]["witness"] = mobius_json(*q);
    auto rep = decide_gl2a(alpha, beta, base);
    doc["gl2a"] = json{{"verdict", verdict_json(rep.verdict)}};
    if (rep.witness) doc["gl2a"]["witness"] = mobius_json(*rep.witness);
    if (!rep.note.empty()) doc["gl2a"]["note"] = rep.note;
    doc["z_equiv"] = z_equivalent(alpha, beta);
    emit(out, doc);
    return 0;
}

int cmd_classify(const std::string& poly, const std::string& gens_file, const std::string& sbase,
                 std::ostream& out)
{
    Polynomial f = parse_poly_arg(poly);
    NumberField K(f);
    BaseRing base = parse_base(sbase);
    std::ifstream in(gens_file);
    if (!in) throw Error("cannot open generators file: " + gens_file);
    std::vector<FieldElement> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(element_from(K, line));
    }
    if (gens.empty()) throw Error("no generators in file");
    auto rep = classify(gens, base);
    json groups = json::array();
    for (const auto& g : rep.groups) {
        json jg{{"order", module_json(g.order_module)},
                {"discriminant", g.order_discriminant.get_str()},
                {"classes", g.classes}};
        if (!g.z_classes.empty()) jg["z_classes"] = g.z_classes;
        groups.push_back(jg);
    }
    emit(out, json{{"schema", 1},
                   {"command", "classify"},
                   {"field", poly_json(f)},
                   {"base", base.str()},
                   {"generators", static_cast<int>(gens.size())},
                   {"groups", groups},
                   {"monogenizations", rep.monogenization_count()}});
    return 0;
}

int cmd_cross(const std::string& poly, const std::string& a, const std::string& b, unsigned prec,
              double tol, double cert_tol, std::ostream& out)
{
    Polynomial f = parse_poly_arg(poly);
    NumberField K(f);
    FieldElement alpha = element_from(K, a), beta = element_from(K, b);
    EmbeddingSet E(K, prec);
    auto T = epsilon_table(alpha, beta, E);
    auto rep = check_identities(T, tol);
    auto cert = unit_certificate(T, cert_tol);

    json identities = json::array();
    for (const auto& fam : rep.families) {
        json jf{{"name", fam.name}, {"applicable", fam.applicable}, {"skipped", fam.skipped}};
        if (fam.applicable && !fam.skipped) jf["max_violation"] = fam.max_violation;
        if (!fam.note.empty()) jf["note"] = fam.note;
        identities.push_back(jf);
    }
    json eps = json::array();
    for (std::size_t i = 0; i < T.tuples.size(); i++) {
        const auto& t = T.tuples[i];
        eps.push_back(json{{"tuple", {t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1}},
                           {"re", mpf_str(T.eps[i].re)},
                           {"im", mpf_str(T.eps[i].im)}});
    }
    emit(out, json{{"schema", 1},
                   {"command", "cross"},
                   {"field", poly_json(f)},
                   {"a", elem_json(alpha)},
                   {"b", elem_json(beta)},
                   {"precision", prec},
                   {"tolerance", tol},
                   {"identities", identities},
                   {"identities_pass", rep.all_pass(tol)},
                   {"unit_certificate",
                    json{{"passed", cert.passed},
                         {"max_integer_distance", cert.max_integer_distance},
                         {"constant_term_distance", cert.constant_term_distance},
                         {"degree", cert.degree},
                         {"tolerance", cert_tol}}},
                   {"epsilon", eps}});
    return 0;
}

json thmc_json(const ThmCReport& rep)
{
    json doc{{"r", rep.r.get_str()},
             {"s", rep.s.get_str()},
             {"f", poly_json(rep.f)},
             {"outcome", rep.irreducible ? (rep.verified() ? "verified" : "failed") : "rejected"}};
    if (!rep.irreducible) {
        doc["factor"] = rep.factor ? rep.factor->str() : "";
        return doc;
    }
    doc["discriminant"] = poly_discriminant(rep.f).get_str();
    doc["checks"] = json{{"alpha_from_beta", rep.alpha_from_beta},
                         {"equal_rings", rep.equal_rings},
                         {"gl2q_inequivalent", rep.gl2q_inequivalent},
                         {"monogenizations", rep.monogenizations}};
    return doc;
}

int cmd_family_thmc(long r, long s, std::ostream& out)
{
    auto rep = theorem_c(Int(r), Int(s));
    json doc = thmc_json(rep);
    doc["schema"] = 1;
    doc["command"] = "family thmc";
    emit(out, doc);
    return 0;
}

int cmd_family_thmc_scan(long range, int jobs, std::ostream& out)
{
    auto scan = thmc_scan(range, jobs);
    // one JSON record per parameter point
    for (const auto& c : scan.cells) {
        json doc = thmc_json(c);
        doc["schema"] = 1;
        out << doc.dump() << "\n";
    }
    json summary{{"schema", 1},
                 {"command", "family thmc-scan"},
                 {"range", range},
                 {"verified", scan.verified_count},
                 {"rejected", scan.rejected_count}};
    out << summary.dump() << "\n";
    return 0;
}

int cmd_family_scale(const std::string& poly, long p, long q, long box, int jobs,
                     std::ostream& out)
{
    auto rep = scaled_order(parse_poly_arg(poly), Int(p), Int(q), box, jobs);
    json hits = json::array();
    for (const auto& h : rep.hits) hits.push_back(json::array({h.x, h.y, h.value}));
    json compatible = json::array();
    for (const auto& h : rep.compatible_hits) compatible.push_back(json::array({h.x, h.y, h.value}));
    json witnesses = json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back(json{{"hit", json::array({w.hit.x, w.hit.y, w.hit.value})},
                                 {"u", mobius_json(w.u)},
                                 {"beta", elem_json(w.beta)},
                                 {"f_beta", poly_json(w.f_beta)}});
    emit(out, json{{"schema", 1},
                   {"command", "family scale"},
                   {"f", poly_json(rep.f)},
                   {"p", rep.p.get_str()},
                   {"q", rep.q.get_str()},
                   {"f_xi", poly_json(rep.f_xi)},
                   {"content_f_xi", rep.content_f_xi.get_str()},
                   {"disc_f", rep.disc_f.get_str()},
                   {"disc_xi", rep.disc_xi.get_str()},
                   {"disc_identity", rep.disc_identity},
                   {"box_bound", rep.box_bound},
                   {"hits", hits},
                   {"compatible_hits", compatible},
                   {"monogenic_witnesses", witnesses},
                   {"evidence", rep.evidence_label}});
    return 0;
}

int cmd_hermite(const std::string& poly, const std::string& a, const std::string& b, long bound,
                std::ostream& out)
{
    Polynomial f = parse_poly_arg(poly);
    NumberField K(f);
    FieldElement alpha = element_from(K, a), beta = element_from(K, b);
    auto lambda = hermite_search(alpha, beta, bound);
    json doc{{"schema", 1},
             {"command", "hermite"},
             {"field", poly_json(f)},
             {"a", elem_json(alpha)},
             {"b", elem_json(beta)},
             {"bound", bound}};
    if (lambda) {
        doc["verdict"] = "yes";
        doc["lambda"] = elem_json(*lambda);
    } else {
        // bounded search: not a disproof
        doc["verdict"] = "none-found";
        doc["note"] = "bounded enumeration exhausted; not a disproof";
    }
    emit(out, doc);
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact arithmetic for invariant orders of algebraic numbers"};
    app.require_subcommand(1);

    std::string poly, elem, a, b, sbase, gens_file;
    long r = 0, s = 0, range = 3, p = 0, q = 0, box = 10000, bound = 10;
    unsigned prec = default_prec();
    double tol = 1e-8, cert_tol = 1e-6;
    int jobs = 0;

    auto* order_cmd = app.add_subcommand("order", "invariant order of an algebraic number");
    order_cmd->add_option("poly", poly)->required();
    order_cmd->add_option("--elem", elem);
    order_cmd->add_option("--S", sbase);

    auto* equiv_cmd = app.add_subcommand("equiv", "GL2 and Z equivalence of two generators");
    equiv_cmd->add_option("poly", poly)->required();
    equiv_cmd->add_option("--a", a)->required();
    equiv_cmd->add_option("--b", b)->required();
    equiv_cmd->add_option("--S", sbase);

    auto* classify_cmd = app.add_subcommand("classify", "partition generators into monogenizations");
    classify_cmd->add_option("poly", poly)->required();
    classify_cmd->add_option("--gens", gens_file)->required();
    classify_cmd->add_option("--S", sbase);

    auto* cross_cmd = app.add_subcommand("cross", "cross-ratio identities and unit certificate");
    cross_cmd->add_option("poly", poly)->required();
    cross_cmd->add_option("--a", a)->required();
    cross_cmd->add_option("--b", b)->required();
    cross_cmd->add_option("--prec", prec);
    cross_cmd->add_option("--tol", tol);
    cross_cmd->add_option("--cert-tol", cert_tol);

    auto* family_cmd = app.add_subcommand("family", "explicit families");
    family_cmd->require_subcommand(1);
    auto* thmc_cmd = family_cmd->add_subcommand("thmc", "quartic double monogenization");
    thmc_cmd->add_option("--r", r)->required();
    thmc_cmd->add_option("--s", s)->required();
    auto* thmc_scan_cmd = family_cmd->add_subcommand("thmc-scan", "scan the (r, s) grid");
    thmc_scan_cmd->add_option("--range", range);
    thmc_scan_cmd->add_option("--jobs", jobs);
    auto* scale_cmd = family_cmd->add_subcommand("scale", "scaled non-monogenic orders");
    scale_cmd->add_option("poly", poly)->required();
    scale_cmd->add_option("--p", p)->required();
    scale_cmd->add_option("--q", q)->required();
    scale_cmd->add_option("--box", box);
    scale_cmd->add_option("--jobs", jobs);

    auto* hermite_cmd = app.add_subcommand("hermite", "bounded Hermite-equivalence search");
    hermite_cmd->add_option("poly", poly)->required();
    hermite_cmd->add_option("--a", a)->required();
    hermite_cmd->add_option("--b", b)->required();
    hermite_cmd->add_option("--bound", bound);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*order_cmd) return cmd_order(poly, elem, sbase, out);
        if (*equiv_cmd) return cmd_equiv(poly, a, b, sbase, out);
        if (*classify_cmd) return cmd_classify(poly, gens_file, sbase, out);
        if (*cross_cmd) return cmd_cross(poly, a, b, prec, tol, cert_tol, out);
        if (*family_cmd) {
            if (*thmc_cmd) return cmd_family_thmc(r, s, out);
            if (*thmc_scan_cmd) return cmd_family_thmc_scan(range, jobs, out);
            if (*scale_cmd) return cmd_family_scale(poly, p, q, box, jobs, out);
        }
        if (*hermite_cmd) return cmd_hermite(poly, a, b, bound, out);
    } catch (const Error& e) {
        json doc{{"schema", 1}, {"error", e.what()}};
        if (!e.witness().empty()) doc["witness"] = e.witness();
        err << doc.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << json{{"schema", 1}, {"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}

}  // namespace mono
