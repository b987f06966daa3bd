#include "nilcoh/io.hpp"
#include "nilcoh/koszul.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nilcoh;

namespace {

struct Config {
    std::string type;
    std::string mode;
    long long p = -1;
    long long ell = -1;
    std::string J;
    std::string lambda;
    int max_degree = -1;
    std::string format = "json";
    bool compact = false;
    unsigned threads = 0;
    unsigned long long budget = 0;
    bool unsafe_below_bound = false;
    std::string cache_dir;

    // subcommand specific
    std::string kind = "frobenius-kernel";
    std::string context = "base";
    std::string domain = "ZPhi";
    std::string monomial;
    std::string dump_matrices;
    bool check_square = false;
    std::string command;
};

std::vector<int> parse_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw PreconditionError("cannot parse " + what + " entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

class Session {
public:
    explicit Session(const Config& c)
        : cfg_(c)
    {
    }

    const RootSystem& rs()
    {
        if (!rs_) {
            if (cfg_.type.empty())
                throw PreconditionError("--type is required");
            rs_.emplace(RootSystem::build(cfg_.type));
        }
        return *rs_;
    }

    const WeylGroup& W()
    {
        if (!W_) {
            EnumerateOptions opts;
            opts.cache_dir = cache_dir();
            W_.emplace(WeylGroup::enumerate(rs(), opts));
        }
        return *W_;
    }

    std::filesystem::path cache_dir() const
    {
        if (!cfg_.cache_dir.empty())
            return cfg_.cache_dir;
        if (const char* env = std::getenv("NILCOH_CACHE"); env && *env)
            return env;
        return ".nilcoh-cache";
    }

    std::vector<int> J()
    {
        std::vector<int> J = parse_list(cfg_.J, "J");
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
        for (int i : J) {
            if (i < 0 || i >= rs().rank())
                throw PreconditionError("J index " + std::to_string(i) + " is not a simple root of " + rs().label());
        }
        return J;
    }

    IntVector lambda()
    {
        if (cfg_.lambda.empty())
            return IntVector::Zero(rs().rank());
        const IntVector v = from_std(parse_list(cfg_.lambda, "lambda"));
        if (v.size() != rs().rank())
            throw PreconditionError("lambda needs " + std::to_string(rs().rank()) + " fundamental coordinates");
        return v;
    }

    Mode mode() const
    {
        if (cfg_.p >= 0 && cfg_.ell >= 0)
            throw PreconditionError("give either --p or --ell, not both");
        Mode m = Mode::classical();
        if (cfg_.p >= 0)
            m = Mode::modular(cfg_.p);
        else if (cfg_.ell >= 0)
            m = Mode::quantum(cfg_.ell);
        if (!cfg_.mode.empty()) {
            const Mode::Kind k = parse_mode_kind(cfg_.mode);
            if (k != m.kind && !(k == Mode::Kind::classical))
                throw PreconditionError("--mode " + cfg_.mode + " needs " + (k == Mode::Kind::modular ? "--p" : "--ell"));
            if (k == Mode::Kind::classical)
                m = Mode::classical();
        }
        return m;
    }

    long long modulus() const
    {
        const Mode m = mode();
        if (m.kind == Mode::Kind::classical)
            throw PreconditionError("this command needs --p or --ell");
        return m.modulus;
    }

    long long prime() const
    {
        if (cfg_.p < 0)
            throw PreconditionError("this command needs --p");
        return cfg_.p;
    }

    int max_degree(int fallback) const { return cfg_.max_degree >= 0 ? cfg_.max_degree : fallback; }

    SearchOptions search_options() const
    {
        SearchOptions o;
        o.threads = cfg_.threads;
        if (cfg_.budget > 0)
            o.budget = cfg_.budget;
        return o;
    }

    const Config& config() const { return cfg_; }

private:
    const Config& cfg_;
    std::optional<RootSystem> rs_;
    std::optional<WeylGroup> W_;
};

Json config_json(const Config& c)
{
    Json j{{"command", c.command}, {"type", c.type}, {"format", c.format}};
    if (c.p >= 0)
        j["p"] = c.p;
    if (c.ell >= 0)
        j["ell"] = c.ell;
    if (!c.mode.empty())
        j["mode"] = c.mode;
    j["J"] = c.J;
    j["lambda"] = c.lambda;
    if (c.max_degree >= 0)
        j["max_degree"] = c.max_degree;
    j["threads"] = c.threads;
    if (c.budget > 0)
        j["budget"] = c.budget;
    j["unsafe_below_bound"] = c.unsafe_below_bound;
    return j;
}

/// Payload in the requested format; csv/tex/text fall back to the given renderings.
struct Output {
    Json json;
    std::string csv;
    std::string tex;
    std::string text;
};

void emit(const Config& c, const Output& out)
{
    const Json cfg = config_json(c);
    if (c.format == "json") {
        Json doc{{"config", cfg}, {"result", out.json}};
        std::cout << doc.dump(c.compact ? -1 : 2) << '\n';
        return;
    }
    const std::string* body = nullptr;
    std::string prefix;
    if (c.format == "csv") {
        body = &out.csv;
        prefix = "# ";
    } else if (c.format == "tex") {
        body = &out.tex;
        prefix = "% ";
    } else if (c.format == "text") {
        body = &out.text;
        prefix = "";
    } else {
        throw PreconditionError("unknown format '" + c.format + "'");
    }
    if (body->empty() && c.format != "text")
        throw PreconditionError("format " + c.format + " is not available for " + c.command);
    for (const auto& [k, v] : cfg.items())
        std::cout << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    if (c.format == "text" && body->empty())
        std::cout << out.json.dump(2) << '\n';
    else
        std::cout << *body;
}

std::string poincare_text(const GradedCharacter& g)
{
    return "poincare: " + format_poincare(poincare(g)) + "\n";
}

Output graded_output(const Json& j, const GradedCharacter& g)
{
    return {j, graded_csv(g), graded_tex(g), poincare_text(g)};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Output cmd_rootsys(Session& s)
{
    const RootSystem& rs = s.rs();
    std::ostringstream os;
    os << rs.label() << ": rank " << rs.rank() << ", h = " << rs.coxeter_number() << ", |Phi+| = "
       << rs.num_positive() << ", |X/ZPhi| = " << rs.connection_index() << '\n';
    for (int k = 0; k < rs.num_positive(); ++k)
        os << "gamma_" << k + 1 << " = (" << format_vector(rs.positive_root(k).coords) << ")\n";
    return {to_json(rs), "", "", os.str()};
}

Output cmd_weyl(Session& s)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const IntVector lambda = s.lambda();
    Json elements = Json::array();
    std::ostringstream csv;
    csv << "index,name,length,dot\n";
    for (std::size_t w = 0; w < W.size(); ++w) {
        Json inv = Json::array();
        for (int g : inversion_set(W[w], rs))
            inv.push_back(to_json(rs.positive_root(g).coords));
        const IntVector d = dot(W[w], lambda, rs);
        elements.push_back({{"index", w}, {"name", W[w].name()}, {"word", W[w].word}, {"length", W[w].length()},
            {"dot", to_json(d)}, {"inversion_set", inv}});
        csv << w << ',' << W[w].name() << ',' << W[w].length() << ',' << format_vector(d) << '\n';
    }
    Json j{{"size", W.size()}, {"length_polynomial", W.length_polynomial()},
        {"poincare", format_poincare(W.length_polynomial())}, {"from_cache", W.loaded_from_cache()},
        {"elements", elements}};
    if (!s.config().J.empty()) {
        Json reps = Json::array();
        for (std::size_t w : min_coset_reps(W, s.J()).reps)
            reps.push_back(W[w].name());
        j["coset_reps"] = reps;
    }
    return {j, csv.str(), "", "|W| = " + std::to_string(W.size()) + ", " + format_poincare(W.length_polynomial()) + "\n"};
}

Output cmd_alcove(Session& s)
{
    const RootSystem& rs = s.rs();
    const IntVector lambda = s.lambda();
    const long long p = s.modulus();
    Json j{{"lambda", to_json(lambda)}, {"modulus", p}, {"in_open_alcove", in_alcove(rs, lambda, p, false)},
        {"in_closed_alcove", in_alcove(rs, lambda, p, true)}};
    const auto J = s.J();
    j["J"] = J;
    j["j_dominant"] = j_dominant(rs, lambda, J);
    j["j_restricted"] = j_restricted(rs, lambda, J, p);
    return {j, "", "", ""};
}

Json profile_json(const GateResult& g)
{
    const auto& f = g.profile;
    return {{"context", to_string(g.context)}, {"pass", g.pass}, {"failed", g.failed}, {"odd", f.odd},
        {"gt_h", f.gt_h}, {"ge_hminus1", f.ge_hminus1}, {"gt_2hminus2", f.gt_2hminus2},
        {"coprime_base", f.coprime_base}, {"coprime_connection", f.coprime_connection}};
}

Output cmd_linkage(Session& s)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const IntVector lambda = s.lambda();
    const long long m = s.modulus();
    Json j{{"lambda", to_json(lambda)}, {"modulus", m}};
    const auto datum = weak_linkage(W, lambda, m);
    if (datum) {
        j["linked"] = true;
        j["w"] = W[datum->w].name();
        j["sigma"] = to_json(datum->sigma);
    } else {
        j["linked"] = false;
    }
    j["admissibility"] = profile_json(admissibility(rs, m, parse_gate_context(s.config().context)));
    std::string text = datum ? "lambda = " + W[datum->w].name() + " . 0 + " + std::to_string(m) + " * ("
            + format_vector(datum->sigma) + ")\n"
                             : "not weakly linked to 0\n";
    return {j, "", "", text};
}

Output cmd_kostant(Session& s)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const auto J = s.J();
    const IntVector lambda = s.lambda();
    const Mode mode = s.mode();
    const auto k = kostant_decomposition(W, lambda, J, mode);
    Json j = to_json(k, W);
    const GradedCharacter ch = k.character(rs);
    if (s.config().max_degree >= 0 && mode.kind != Mode::Kind::classical
        && in_alcove(rs, lambda, mode.modulus, false)) {
        j["frobenius_kernel"] = to_json(frobenius_kernel_character(W, lambda, J, mode, s.config().max_degree));
    }
    return graded_output(j, ch);
}

Output cmd_character(Session& s)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const auto J = s.J();
    const IntVector lambda = s.lambda();
    const std::string& kind = s.config().kind;
    if (kind == "levi") {
        const FormalCharacter chi = levi_simple_character(rs, lambda, J);
        return graded_output(Json{{"kind", kind}, {"dimension", chi.dimension()}, {"character", to_json(chi)}},
            GradedCharacter{chi});
    }
    if (kind == "frobenius-kernel") {
        const auto b = frobenius_kernel_character(W, lambda, J, s.mode(), s.max_degree(4));
        Json j = to_json(b);
        j["kind"] = kind;
        return graded_output(j, b.collapse());
    }
    if (kind == "parabolic") {
        const GradedCharacter g = parabolic_character(W, lambda, J, s.mode(), s.max_degree(4));
        return graded_output(Json{{"kind", kind}, {"dims", poincare(g)}, {"degrees", to_json(g)}}, g);
    }
    if (kind == "t1") {
        const GradedCharacter g = t1_invariants(W, lambda, s.prime());
        return graded_output(Json{{"kind", kind}, {"dims", poincare(g)}, {"degrees", to_json(g)}}, g);
    }
    throw PreconditionError("unknown character kind '" + kind + "'");
}

Output cmd_ring_table(Session& s)
{
    const WeylGroup& W = s.W();
    const NilRing ring(W, s.J());
    const int ell = s.config().ell >= 0 ? static_cast<int>(s.config().ell) : 1;
    if (s.config().p >= 0)
        throw PreconditionError("ring-table takes --ell for the quantum table and no modulus for the classical one");
    const auto rows = ring_table(ring, ell, s.config().unsafe_below_bound);
    Json j = to_json(rows, ring);
    j["J"] = ring.J();
    j["ell"] = ell;
    return {j, ring_table_csv(rows, ring), ring_table_tex(rows, ring), ring_table_csv(rows, ring)};
}

Output cmd_quantum(Session& s)
{
    const RootSystem& rs = s.rs();
    if (s.config().ell < 0)
        throw PreconditionError("quantum needs --ell");
    const long long ell = s.config().ell;
    Json gates = Json::array();
    for (auto ctx : {GateContext::base, GateContext::weight_separation, GateContext::kostant, GateContext::ring})
        gates.push_back(profile_json(admissibility(rs, ell, ctx)));
    Json j{{"ell", ell}, {"gates", gates}};
    std::string text;
    if (!s.config().monomial.empty()) {
        const auto mono = parse_list(s.config().monomial, "monomial");
        for (int g : mono) {
            if (g < 0 || g >= rs.num_positive())
                throw PreconditionError("monomial index " + std::to_string(g) + " is not a positive root");
        }
        const auto st = quantum_exterior_straighten(rs, mono, static_cast<int>(ell));
        if (st) {
            j["straightened"] = {{"scalar", st->scalar.to_string()}, {"sign", st->scalar.sign},
                {"zeta_exponent", st->scalar.exponent}, {"monomial", st->monomial}};
            text = st->scalar.to_string() + " * x" + Json(st->monomial).dump() + "\n";
        } else {
            j["straightened"] = 0;
            text = "0\n";
        }
    }
    return {j, "", "", text};
}

std::string file_tag(const IntVector& v)
{
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        s += (i ? "_" : "") + std::to_string(v[i]);
    return s;
}

Output cmd_oracle(Session& s)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const auto J = s.J();
    const FieldSpec field{s.config().p < 0 ? 0 : s.config().p};
    if (!field.rational() && !is_prime(field.p))
        throw PreconditionError("--p must be prime (or 0 for the rationals)");
    const CEComplex cx = CEComplex::build(rs, J);
    check_d_squared(cx);
    const GradedCharacter h = cohomology(cx, field);
    Json j{{"field", field.name()}, {"J", J}, {"dims", poincare(h)}, {"poincare", format_poincare(poincare(h))},
        {"degrees", to_json(h)}};
    const Mode km = field.rational() ? Mode::classical() : Mode::modular(field.p);
    if (field.rational() || field.p >= rs.coxeter_number() - 1) {
        const GradedCharacter k = kostant_decomposition(W, IntVector::Zero(rs.rank()), J, km).character(rs);
        j["agrees_with_kostant"] = k == h;
    }
    if (!s.config().dump_matrices.empty()) {
        const std::filesystem::path dir = s.config().dump_matrices;
        std::filesystem::create_directories(dir);
        std::size_t written = 0;
        for (const auto& b : cx.blocks()) {
            if (!cx.find_block(b.degree + 1, b.weight))
                continue;
            std::ofstream out(dir / ("d" + std::to_string(b.degree) + "_" + file_tag(b.weight) + ".txt"));
            out << sparse_triples(cx.block_matrix(b));
            ++written;
        }
        j["matrices_written"] = written;
    }
    return graded_output(j, h);
}

Output cmd_ext(Session& s)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const auto J = s.J();
    const long long p = s.prime();
    const int D = s.max_degree(4);
    const std::size_t budget = s.config().budget > 0 ? s.config().budget : RestrictedAlgebra::default_budget;
    const auto A = RestrictedAlgebra::build(rs, J, p, budget);
    const auto res = MinimalResolution::compute(A, D);
    if (!res.check_complex())
        throw InternalError("resolution differential does not square to zero");
    std::optional<ExampleProduct> example;
    Json squares = Json::array();
    if (s.config().check_square) {
        if (D < 4)
            throw PreconditionError("--check-square needs --max-degree >= 4");
        if (rs.rank() < 2)
            throw PreconditionError("--check-square needs rank >= 2");
        // z spans the weight space of (s_2 s_1) . 0.
        const IntVector zw = -*rs.to_root_coords(dot(W[W.from_word({1, 0})], IntVector::Zero(rs.rank()), rs));
        const auto gens = res.generators_of_weight(2, zw);
        if (gens.size() != 1)
            throw PreconditionError("the H^2 weight space of " + format_vector(-rs.to_weight(zw)) + " has dimension "
                + std::to_string(gens.size()) + ", not 1");
        ExtClass z{2, {{gens[0], 1}}};
        const ExtClass z2 = yoneda_product(res, z, z);
        example = ExampleProduct{4, -rs.to_weight(zw + zw), !z2.is_zero()};
        for (std::size_t g = 0; g < res.stage(2).size(); ++g) {
            const IntVector w = res.stage(2)[g].weight;
            if (res.generators_of_weight(2, w).size() != 1)
                continue;
            ExtClass x{2, {{g, 1}}};
            squares.push_back({{"weight", to_json(-rs.to_weight(w))}, {"square_nonzero", !yoneda_product(res, x, x).is_zero()}});
        }
    }
    Json j = ext_certificate(res, example);
    if (s.config().check_square)
        j["degree2_squares"] = squares;
    const GradedCharacter ch = res.character();
    std::string text = "dims: " + Json(res.dims()).dump() + "\n";
    if (example)
        text += std::string("z^2 ") + (example->nonzero ? "nonzero" : "zero") + "\n";
    return {j, graded_csv(ch), graded_tex(ch), text};
}

std::string violation_text(const std::vector<Violation>& vs, const WeylGroup& W)
{
    std::ostringstream os;
    os << vs.size() << " violation(s)\n";
    for (const auto& v : vs) {
        for (std::size_t k = 0; k < v.elements.size(); ++k)
            os << (k ? " " : "") << W[v.elements[k]].name();
        os << " sigma=(" << format_vector(v.sigma) << ")\n";
    }
    return os.str();
}

Output cmd_verify(Session& s, const std::string& which, int& status)
{
    const WeylGroup& W = s.W();
    const RootSystem& rs = s.rs();
    const auto t0 = std::chrono::steady_clock::now();
    if (which == "sum-dot") {
        const long long p = s.prime();
        const auto vs = search_sum_dot(W, p, s.search_options());
        return {certificate("sum-dot", rs, p, SigmaDomain::root_lattice, vs, W, elapsed_ms(t0)), "", "",
            violation_text(vs, W)};
    }
    if (which == "levi") {
        const long long p = s.prime();
        const auto vs = search_levi_weights(W, s.J(), p, s.search_options());
        Json j = certificate("levi-weights", rs, p, SigmaDomain::root_lattice, vs, W, elapsed_ms(t0));
        j["J"] = s.J();
        return {j, "", "", violation_text(vs, W)};
    }
    if (which == "dot-collisions") {
        const Mode mode = s.mode();
        const SigmaDomain domain = parse_sigma_domain(s.config().domain);
        const auto vs = search_dot_collisions(W, s.lambda(), mode, domain, s.search_options());
        Json j = certificate("dot-collisions", rs, mode.modulus, domain, vs, W, elapsed_ms(t0));
        j["lambda"] = to_json(s.lambda());
        j["mode"] = mode.name();
        return {j, "", "", violation_text(vs, W)};
    }
    if (which == "suite") {
        const auto report = consistency_suite(W, s.prime(), s.max_degree(4));
        Json j = to_json(report);
        j["elapsed_ms"] = elapsed_ms(t0);
        j["fingerprint"] = rs.fingerprint();
        std::ostringstream os;
        for (const auto& c : report.checks)
            os << c.name << ": " << to_string(c.status) << " (" << c.detail << ")\n";
        os << (report.pass() ? "PASS" : "FAIL") << '\n';
        if (!report.pass())
            status = 1;
        return {j, "", "", os.str()};
    }
    throw PreconditionError("unknown verify target '" + which + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of Frobenius kernels of unipotent and parabolic group schemes"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    Config cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--type", cfg.type, "Cartan type, e.g. A2, B2, G2")->required();
        sub->add_option("--format", cfg.format, "json, csv, tex or text")
            ->check(CLI::IsMember({"json", "csv", "tex", "text"}));
        sub->add_flag("--compact", cfg.compact, "single-line JSON");
        sub->add_option("--cache-dir", cfg.cache_dir, "Weyl enumeration cache (default $NILCOH_CACHE or ./.nilcoh-cache)");
    };
    auto modulus = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime p (modular mode)");
        sub->add_option("--ell", cfg.ell, "order l of the root of unity (quantum mode)");
        sub->add_option("--mode", cfg.mode, "classical, modular or quantum");
    };
    auto weights = [&](CLI::App* sub) {
        sub->add_option("--J", cfg.J, "comma-separated 0-based simple-root indices");
        sub->add_option("--lambda", cfg.lambda, "fundamental coordinates, e.g. 2,1");
    };

    std::vector<std::pair<std::string, CLI::App*>> subs;
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        subs.emplace_back(name, sub);
        return sub;
    };

    add("rootsys", "root system data");
    auto* weyl = add("weyl", "Weyl group, dot action, inversion sets and coset representatives");
    weights(weyl);
    auto* alcove = add("alcove", "alcove membership and J-restriction");
    weights(alcove);
    modulus(alcove);
    auto* linkage = add("linkage", "weak linkage to 0 and admissibility");
    weights(linkage);
    modulus(linkage);
    linkage->add_option("--context", cfg.context, "gate context: base, weight-separation, kostant, ring");
    auto* kostant = add("kostant", "Kostant decomposition of H^*(u_J, L(lambda))");
    weights(kostant);
    modulus(kostant);
    kostant->add_option("--max-degree", cfg.max_degree, "also report the Frobenius kernel character");
    auto* character = add("character", "Levi, Frobenius kernel, parabolic and T_1-invariant characters");
    weights(character);
    modulus(character);
    character->add_option("--kind", cfg.kind, "levi, frobenius-kernel, parabolic or t1");
    character->add_option("--max-degree", cfg.max_degree, "highest cohomological degree");
    auto* ring = add("ring-table", "multiplication table of the nil-cohomology ring");
    weights(ring);
    modulus(ring);
    ring->add_flag("--unsafe-below-bound", cfg.unsafe_below_bound, "skip the admissibility gate");
    auto* quantum = add("quantum", "admissibility profile and quantum exterior straightening");
    modulus(quantum);
    quantum->add_option("--monomial", cfg.monomial, "comma-separated gamma indices");
    auto* oracle = add("oracle-koszul", "brute-force Chevalley-Eilenberg cohomology");
    weights(oracle);
    modulus(oracle);
    oracle->add_option("--dump-matrices", cfg.dump_matrices, "directory for sparse differential blocks");
    auto* ext = add("ext", "restricted Ext via a minimal resolution");
    weights(ext);
    modulus(ext);
    ext->add_option("--max-degree", cfg.max_degree, "highest cohomological degree (default 4)");
    ext->add_option("--budget", cfg.budget, "maximal algebra dimension");
    ext->add_flag("--check-square", cfg.check_square, "square the H^2 class of weight (s_2 s_1) . 0");

    auto* verify = app.add_subcommand("verify", "exhaustive searches and the consistency suite");
    verify->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> targets;
    for (const std::string name : {"sum-dot", "levi", "dot-collisions", "suite"}) {
        CLI::App* t = verify->add_subcommand(name);
        common(t);
        weights(t);
        modulus(t);
        t->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
        t->add_option("--budget", cfg.budget, "maximal number of tuples scanned");
        if (name == "dot-collisions")
            t->add_option("--domain", cfg.domain, "sigma lattice: ZPhi or X");
        if (name == "suite")
            t->add_option("--max-degree", cfg.max_degree, "highest degree for Ext checks (default 4)");
        targets.emplace_back(name, t);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Session s(cfg);
        int status = 0;
        Output out;
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed())
                continue;
            cfg.command = name;
            if (name == "rootsys")
                out = cmd_rootsys(s);
            else if (name == "weyl")
                out = cmd_weyl(s);
            else if (name == "alcove")
                out = cmd_alcove(s);
            else if (name == "linkage")
                out = cmd_linkage(s);
            else if (name == "kostant")
                out = cmd_kostant(s);
            else if (name == "character")
                out = cmd_character(s);
            else if (name == "ring-table")
                out = cmd_ring_table(s);
            else if (name == "quantum")
                out = cmd_quantum(s);
            else if (name == "oracle-koszul")
                out = cmd_oracle(s);
            else if (name == "ext")
                out = cmd_ext(s);
        }
        for (const auto& [name, sub] : targets) {
            if (sub->parsed()) {
                cfg.command = "verify " + name;
                out = cmd_verify(s, name, status);
            }
        }
        emit(cfg, out);
        return status;
    } catch (const PreconditionError& e) {
        std::cerr << "nilcoh: precondition failed: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "nilcoh: internal error: " << e.what() << '\n';
        return 1;
    }
}
