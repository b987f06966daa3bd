#include "nilcoh/io.hpp"

#include <sstream>

namespace nilcoh {

namespace {

Json word_json(const std::vector<int>& word)
{
    Json j = Json::array();
    for (int i : word)
        j.push_back(i);
    return j;
}

Json gamma_order_json(const RootSystem& rs)
{
    Json j = Json::array();
    for (const Root& r : rs.positive_roots())
        j.push_back(to_json(r.coords));
    return j;
}

std::string semicolon_vector(const IntVector& v)
{
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

std::string tex_vector(const IntVector& v)
{
    return "(" + format_vector(v) + ")";
}

} // namespace

Json to_json(const IntVector& v)
{
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        j.push_back(v[i]);
    return j;
}

IntVector vector_from_json(const Json& j)
{
    return from_std(j.get<std::vector<int>>());
}

Json to_json(const FormalCharacter& chi)
{
    Json j = Json::array();
    for (const auto& [mu, m] : chi)
        j.push_back(Json::array({to_json(mu), m}));
    return j;
}

FormalCharacter character_from_json(const Json& j)
{
    FormalCharacter chi;
    for (const auto& term : j)
        chi.add(vector_from_json(term.at(0)), term.at(1).get<long long>());
    return chi;
}

Json to_json(const GradedCharacter& g)
{
    Json j = Json::array();
    for (std::size_t n = 0; n < g.size(); ++n)
        j.push_back({{"degree", n}, {"dimension", g[n].dimension()}, {"character", to_json(g[n])}});
    return j;
}

GradedCharacter graded_from_json(const Json& j)
{
    GradedCharacter g;
    for (const auto& entry : j) {
        const auto n = entry.at("degree").get<std::size_t>();
        if (g.size() <= n)
            g.resize(n + 1);
        g[n] = character_from_json(entry.at("character"));
    }
    return g;
}

Json to_json(const RootSystem& rs)
{
    Json cartan = Json::array();
    for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i)
        cartan.push_back(to_json(rs.cartan().row(i).transpose()));
    Json roots = Json::array();
    for (int k = 0; k < rs.num_positive(); ++k) {
        const Root& r = rs.positive_root(k);
        roots.push_back({{"index", k}, {"root_coords", to_json(r.coords)}, {"weight_coords", to_json(r.weight)},
            {"height", r.height}, {"norm", r.norm}, {"long", r.is_long}});
    }
    Json minuscule = Json::array();
    for (const auto& mu : rs.minuscule_weights())
        minuscule.push_back(to_json(mu));
    return {{"type", rs.label()}, {"rank", rs.rank()}, {"cartan", cartan}, {"coxeter_number", rs.coxeter_number()},
        {"connection_index", rs.connection_index()}, {"longest_word", word_json(rs.longest_word())},
        {"positive_roots", roots}, {"minuscule_weights", minuscule}, {"fingerprint", rs.fingerprint()}};
}

Json to_json(const KostantDecomposition& k, const WeylGroup& W)
{
    const RootSystem& rs = W.root_system();
    Json entries = Json::array();
    for (const auto& e : k.entries) {
        entries.push_back({{"w", W[e.w].name()}, {"word", word_json(W[e.w].word)}, {"degree", e.degree},
            {"highest_weight", to_json(e.highest_weight)}});
    }
    const GradedCharacter ch = k.character(rs);
    return {{"mode", k.mode.name()}, {"J", k.J}, {"lambda", to_json(k.lambda)}, {"top_degree", k.top_degree},
        {"entries", entries}, {"dims", poincare(ch)}, {"poincare", format_poincare(poincare(ch))},
        {"degrees", to_json(ch)}};
}

Json to_json(const BigradedCharacter& b)
{
    Json degrees = Json::array();
    for (std::size_t n = 0; n < b.degrees.size(); ++n) {
        Json slabs = Json::array();
        long long dim = 0;
        for (const Slab& s : b.degrees[n]) {
            slabs.push_back({{"i", s.i}, {"j", s.j}, {"dimension", s.character.dimension()},
                {"character", to_json(s.character)}});
            dim += s.character.dimension();
        }
        degrees.push_back({{"degree", n}, {"dimension", dim}, {"slabs", slabs}});
    }
    const GradedCharacter collapsed = b.collapse();
    return {{"mode", b.mode.name()}, {"J", b.J}, {"lambda", to_json(b.lambda)}, {"dims", poincare(collapsed)},
        {"poincare", format_poincare(poincare(collapsed))}, {"degrees", degrees}};
}

Json to_json(const Violation& v, const WeylGroup& W)
{
    Json names = Json::array();
    Json weights = Json::array();
    for (std::size_t w : v.elements)
        names.push_back(W[w].name());
    for (const auto& mu : v.weights)
        weights.push_back(to_json(mu));
    return {{"elements", v.elements}, {"names", names}, {"weights", weights}, {"sigma", to_json(v.sigma)},
        {"sigma_root_coords", to_json(W.root_system().to_root_coords(v.sigma).value_or(IntVector()))},
        {"modulus", v.modulus}};
}

Violation violation_from_json(const Json& j)
{
    Violation v;
    v.elements = j.at("elements").get<std::vector<std::size_t>>();
    for (const auto& mu : j.at("weights"))
        v.weights.push_back(vector_from_json(mu));
    v.sigma = vector_from_json(j.at("sigma"));
    v.modulus = j.at("modulus").get<long long>();
    return v;
}

Json certificate(const std::string& lemma, const RootSystem& rs, long long modulus, SigmaDomain domain,
    const std::vector<Violation>& violations, const WeylGroup& W, double elapsed_ms)
{
    Json vs = Json::array();
    for (const auto& v : violations)
        vs.push_back(to_json(v, W));
    return {{"lemma", lemma}, {"type", rs.label()}, {"modulus", modulus}, {"domain", to_string(domain)},
        {"violations", vs}, {"count", violations.size()}, {"exhaustive", true}, {"elapsed_ms", elapsed_ms},
        {"version", kVersion}, {"fingerprint", rs.fingerprint()}, {"gamma_order", gamma_order_json(rs)}};
}

Json to_json(const SuiteReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    Json anomalies = Json::array();
    for (const auto& mu : r.square_anomalies)
        anomalies.push_back(to_json(mu));
    return {{"type", r.type}, {"modulus", r.modulus}, {"pass", r.pass()}, {"checks", checks},
        {"square_anomalies", anomalies}, {"version", kVersion}};
}

std::vector<RingTableRow> ring_table(const NilRing& ring, int ell, bool unsafe)
{
    std::vector<RingTableRow> rows;
    for (std::size_t a : ring.reps()) {
        for (std::size_t b : ring.reps()) {
            const auto prod = ell == 1 ? ring.nil_product(a, b) : ring.quantum_nil_product(a, b, ell, unsafe);
            RingTableRow row{a, b, std::nullopt, 0, 0};
            if (prod) {
                row.w = prod->w;
                row.sign = prod->scalar.sign;
                row.zeta_exponent = prod->scalar.exponent;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

Json to_json(const std::vector<RingTableRow>& rows, const NilRing& ring)
{
    const WeylGroup& W = ring.weyl();
    Json table = Json::array();
    for (const auto& r : rows) {
        table.push_back({{"w", W[r.w1].name()}, {"w_prime", W[r.w2].name()},
            {"result", r.w ? Json(W[*r.w].name()) : Json(0)}, {"sign", r.sign}, {"zeta_exponent", r.zeta_exponent}});
    }
    return {{"longest_word", word_json(ring.root_system().longest_word())},
        {"gamma_order", gamma_order_json(ring.root_system())}, {"rows", table}};
}

std::string ring_table_csv(const std::vector<RingTableRow>& rows, const NilRing& ring)
{
    const WeylGroup& W = ring.weyl();
    const RootSystem& rs = ring.root_system();
    std::ostringstream os;
    os << "# w0_word=";
    for (int i : rs.longest_word())
        os << 's' << i + 1;
    os << "\n# gamma_order=";
    for (int k = 0; k < rs.num_positive(); ++k)
        os << (k ? " " : "") << '(' << format_vector(rs.positive_root(k).coords) << ')';
    os << "\nw,w_prime,result,sign,zeta_exponent\n";
    for (const auto& r : rows)
        os << W[r.w1].name() << ',' << W[r.w2].name() << ',' << (r.w ? W[*r.w].name() : "0") << ',' << r.sign << ','
           << r.zeta_exponent << '\n';
    return os.str();
}

std::string ring_table_tex(const std::vector<RingTableRow>& rows, const NilRing& ring)
{
    const WeylGroup& W = ring.weyl();
    std::ostringstream os;
    for (const auto& r : rows) {
        os << '$' << W[r.w1].name() << "$ & $" << W[r.w2].name() << "$ & ";
        if (r.w) {
            os << '$' << (r.sign < 0 ? "-" : "");
            if (r.zeta_exponent != 0)
                os << "\\zeta^{" << r.zeta_exponent << "}";
            os << W[*r.w].name() << '$';
        } else {
            os << "$0$";
        }
        os << " \\\\\n";
    }
    return os.str();
}

std::string graded_csv(const GradedCharacter& g)
{
    std::ostringstream os;
    os << "degree,weight,multiplicity\n";
    for (std::size_t n = 0; n < g.size(); ++n) {
        for (const auto& [mu, m] : g[n])
            os << n << ',' << semicolon_vector(mu) << ',' << m << '\n';
    }
    return os.str();
}

std::string graded_tex(const GradedCharacter& g)
{
    std::ostringstream os;
    for (std::size_t n = 0; n < g.size(); ++n) {
        for (const auto& [mu, m] : g[n])
            os << n << " & $" << tex_vector(mu) << "$ & " << m << " \\\\\n";
    }
    return os.str();
}

std::string sparse_triples(const Dense<long long>& m)
{
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0)
                os << i << ' ' << j << ' ' << m(i, j) << '\n';
        }
    }
    return os.str();
}

Json ext_certificate(const MinimalResolution& res, const std::optional<ExampleProduct>& example)
{
    const RestrictedAlgebra& A = res.algebra();
    Json j{{"type", A.root_system().label()}, {"p", A.p()}, {"J", A.J()}, {"dims", res.dims()},
        {"weights", to_json(res.character())}, {"computed", true}};
    if (example)
        j["example_product"] = {{"degree", example->degree}, {"weight", to_json(example->weight)},
            {"nonzero", example->nonzero}};
    j["version"] = kVersion;
    j["fingerprint"] = A.root_system().fingerprint();
    return j;
}

} // namespace nilcoh
