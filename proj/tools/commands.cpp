#include "commands.hpp"

#include "racktwist/braided.hpp"
#include "racktwist/cocycle.hpp"
#include "racktwist/rack.hpp"
#include "racktwist/spincover.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace racktwist::cli {
namespace {

nlohmann::json witness_json(const CheckResult& r)
{
    if (r.ok())
        return nullptr;
    return {{"x", r.failure->index[0]}, {"y", r.failure->index[1]}, {"z", r.failure->index[2]}, {"what", r.failure->what}};
}

void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw UsageError(msg);
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("cannot parse " + path + ": " + e.what());
    }
}

std::optional<int> transposition_spec(const std::string& spec)
{
    if (spec.size() >= 2 && (spec[0] == 'X' || spec[0] == 'x')) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(spec.substr(1), &used);
            if (used == spec.size() - 1)
                return n;
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

struct ResolvedCocycle {
    RackCocycle q;
    std::optional<TranspositionRack> xn;
    std::string rack_id;
    std::string cocycle_id;
};

ResolvedCocycle resolve_cocycle(const RunConfig& cfg)
{
    const auto& cs = cfg.cocycle_spec;
    if (cs != "minus-one" && cs != "-1" && cs != "chi") {
        const nlohmann::json j = read_json_file(cs);
        std::filesystem::path base = std::filesystem::path(cs).parent_path();
        return {cocycle_from_json(j, base), std::nullopt, "file:" + std::filesystem::path(cs).filename().string(),
                "file:" + std::filesystem::path(cs).filename().string()};
    }

    std::optional<TranspositionRack> xn;
    RackPtr rack;
    std::string rack_id = cfg.rack_spec;
    if (auto n = transposition_spec(cfg.rack_spec)) {
        require(*n >= 2, "transposition rack needs n >= 2");
        xn = transposition_rack(*n);
        rack = xn->rack;
        rack_id = "X" + std::to_string(*n);
    } else {
        rack = std::make_shared<const FiniteRack>(rack_from_json(read_json_file(cfg.rack_spec)));
        rack_id = "file:" + std::filesystem::path(cfg.rack_spec).filename().string();
    }
    if (cs == "chi") {
        require(xn.has_value() && xn->n >= 3, "the chi cocycle needs a transposition rack X<n> with n >= 3");
        return {chi_cocycle(*xn), xn, rack_id, "chi"};
    }
    return {constant_cocycle(rack, 2, 1), xn, rack_id, "minus-one"};
}

/// Independent brute force over all 2^k sign gauges, straight from the
/// defining relation q2[x][y] = q[x][y] - g[x▷y] + g[y].
std::optional<bool> exhaustive_sign_gauge(const RackCocycle& q, const RackCocycle& q2)
{
    const auto& r = q.rack();
    const std::size_t k = r.size();
    if (q.order() != 2 || k > 16)
        return std::nullopt;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        auto g = [&](std::size_t x) { return (mask >> x) & 1u; };
        bool all = true;
        for (std::size_t x = 0; x < k && all; ++x)
            for (std::size_t y = 0; y < k && all; ++y)
                all = ((q(x, y) + g(y) + g(r.op(x, y))) & 1u) == q2(x, y);
        if (all)
            return true;
    }
    return false;
}

nlohmann::json presentation_json(const PresentationReport& p)
{
    return {{"ok", p.ok}, {"relations_checked", p.relations_checked}, {"first_failure", p.first_failure}};
}

HilbertOptions hilbert_options(const RunConfig& cfg, const ResolvedCocycle& rc)
{
    HilbertOptions opts;
    opts.mode = cfg.mode;
    opts.seed = cfg.seed;
    opts.symmetrizer.workers = cfg.workers;
    if (cfg.dim_cap)
        opts.symmetrizer.dimension_cap = *cfg.dim_cap;
    opts.rack_id = rc.rack_id;
    opts.cocycle_id = rc.cocycle_id;
    if (rc.xn)
        opts.closed_form = known_transposition_series(rc.xn->n);
    return opts;
}

} // namespace

CommandResult cmd_rack(const RunConfig& cfg)
{
    CommandResult res;
    std::optional<FiniteRack> rack;
    std::string id;
    if (!cfg.file.empty()) {
        rack = rack_from_json(read_json_file(cfg.file));
        id = cfg.file;
    } else {
        require(cfg.n >= 2, "rack: n must be >= 2");
        rack = *transposition_rack(cfg.n).rack;
        id = "X" + std::to_string(cfg.n);
    }
    const CheckResult axioms = check_rack_axioms(*rack);
    const bool indecomposable = is_indecomposable(*rack);
    res.report = {{"schema_version", kSchemaVersion},
                  {"rack", rack_to_json(*rack)},
                  {"axioms_ok", axioms.ok()},
                  {"violation", witness_json(axioms)},
                  {"indecomposable", indecomposable}};
    std::ostringstream os;
    os << "rack " << id << ": size " << rack->size() << ", axioms " << (axioms.ok() ? "ok" : "FAIL")
       << ", " << (indecomposable ? "indecomposable" : "decomposable");
    if (!axioms.ok())
        os << " (" << axioms.failure->what << ")";
    res.summary = os.str();
    res.exit_code = axioms.ok() ? kOk : kCheckFailed;
    return res;
}

CommandResult cmd_cocycle(const RunConfig& cfg)
{
    CommandResult res;
    RunConfig c = cfg;
    if (!cfg.file.empty())
        c.cocycle_spec = cfg.file;
    else if (c.rack_spec.empty() || c.rack_spec == "X4")
        c.rack_spec = "X" + std::to_string(cfg.n);
    const ResolvedCocycle rc = resolve_cocycle(c);
    const CheckResult cocycle = check_cocycle(rc.q);
    const bool braid = check_braid_equation(rc.q);
    res.report = {{"schema_version", kSchemaVersion},
                  {"rack", rc.rack_id},
                  {"cocycle_id", rc.cocycle_id},
                  {"cocycle", cocycle_to_json(rc.q)},
                  {"cocycle_ok", cocycle.ok()},
                  {"violation", witness_json(cocycle)},
                  {"braid_equation_ok", braid}};
    res.summary = "cocycle " + rc.cocycle_id + " on " + rc.rack_id + ": condition " + (cocycle.ok() ? "ok" : "FAIL") +
                  ", braid equation " + (braid ? "ok" : "FAIL");
    res.exit_code = cocycle.ok() && braid ? kOk : kCheckFailed;
    return res;
}

CommandResult cmd_cover(const RunConfig& cfg)
{
    require(cfg.n >= 4 && cfg.n <= kDefaultCoverCap,
            "cover: n must lie in [4, " + std::to_string(kDefaultCoverCap) + "]");
    CommandResult res;
    const PresentationReport pres = verify_presentation(cfg.n);
    const LemmaReport lemmas = verify_conjugation_lemmas(cfg.n, 0, cfg.seed);
    const MainTheoremReport main = verify_main_theorem(cfg.n);
    const TwistTable phi = phi_psi_restriction(transposition_rack(cfg.n));
    res.report = {{"schema_version", kSchemaVersion},
                  {"n", cfg.n},
                  {"presentation_ok", pres.ok},
                  {"lemma_general_ok", lemmas.general_ok},
                  {"main_theorem_ok", main.ok},
                  {"phi_restriction", twist_to_json(phi)}};
    const bool ok = pres.ok && lemmas.general_ok && main.ok;
    res.summary = "cover T_" + std::to_string(cfg.n) + ": presentation " + (pres.ok ? "ok" : "FAIL") +
                  ", conjugation lemma " + (lemmas.general_ok ? "ok" : "FAIL") + ", main theorem " +
                  (main.ok ? "ok" : "FAIL");
    res.exit_code = ok ? kOk : kCheckFailed;
    return res;
}

CommandResult cmd_verify_twist(const RunConfig& cfg)
{
    require(cfg.n >= 4 && cfg.n <= kDefaultCoverCap,
            "twist-verify: n must lie in [4, " + std::to_string(kDefaultCoverCap) +
                "] (X_3 is handled by the cohomology subcommand)");
    CommandResult res;
    const TranspositionRack xn = transposition_rack(cfg.n);
    const TwistTable phi = phi_psi_restriction(xn);
    const CheckResult condition = check_twist_condition(phi);
    const MainTheoremReport main = verify_main_theorem(cfg.n);

    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& e : main.log)
        pairs.push_back({e.sigma, e.tau, e.phi_sigma_tau, e.phi_conj_sigma, e.chi, e.ok});
    res.report = {{"schema_version", kSchemaVersion},
                  {"n", cfg.n},
                  {"pairs_verified", main.pairs_checked},
                  {"twist_condition_ok", condition.ok()},
                  {"main_theorem_ok", main.ok},
                  {"twist_equals_minus_one", main.twist_equals_minus_one},
                  {"first_failure", main.first_failure.empty() ? nlohmann::json(nullptr) : nlohmann::json(main.first_failure)},
                  {"pair_log_columns", {"sigma", "tau", "phi(sigma,tau)", "phi(sigma|>tau,sigma)", "chi", "ok"}},
                  {"pair_log", std::move(pairs)}};
    const bool ok = condition.ok() && main.ok;
    std::ostringstream os;
    os << "twist-verify n=" << cfg.n << ": " << main.pairs_checked << " pairs, twist condition "
       << (condition.ok() ? "ok" : "FAIL") << ", chi^phi == -1 " << (main.ok ? "ok" : "FAIL");
    if (!main.first_failure.empty())
        os << " (first failure: " << main.first_failure << ")";
    res.summary = os.str();
    res.exit_code = ok ? kOk : kCheckFailed;
    return res;
}

CommandResult cmd_cohomology(const RunConfig& cfg)
{
    require(cfg.n >= 3, "cohomology: n must be >= 3");
    CommandResult res;
    const TranspositionRack xn = transposition_rack(cfg.n);
    const RackCocycle minus_one = constant_cocycle(xn.rack, 2, 1);
    const RackCocycle chi = chi_cocycle(xn);
    const auto gauge = find_gauge(minus_one, chi);
    const bool round_trip = gauge && gauge_transform(minus_one, *gauge) == chi;
    const auto exhaustive = exhaustive_sign_gauge(minus_one, chi);

    res.report = {{"schema_version", kSchemaVersion},
                  {"n", cfg.n},
                  {"cohomologous", gauge.has_value()},
                  {"gauge", gauge ? nlohmann::json(gauge->values()) : nlohmann::json(nullptr)},
                  {"round_trip_ok", gauge ? nlohmann::json(round_trip) : nlohmann::json(nullptr)},
                  {"exhaustive_cohomologous", exhaustive ? nlohmann::json(*exhaustive) : nlohmann::json(nullptr)}};
    bool ok = !gauge || round_trip;
    if (exhaustive)
        ok = ok && *exhaustive == gauge.has_value();
    if (cfg.n == 3)
        ok = ok && gauge.has_value();
    res.summary = "cohomology X_" + std::to_string(cfg.n) + ": -1 and chi are " +
                  (gauge ? "cohomologous" : "not cohomologous") +
                  (exhaustive ? std::string(" (exhaustive search agrees: ") + (*exhaustive == gauge.has_value() ? "yes" : "NO") + ")"
                              : std::string(" (exhaustive search skipped)"));
    res.exit_code = ok ? kOk : kCheckFailed;
    return res;
}

CommandResult cmd_hilbert(const RunConfig& cfg)
{
    require(cfg.max_degree >= 0, "hilbert: max degree must be >= 0");
    CommandResult res;
    const ResolvedCocycle rc = resolve_cocycle(cfg);
    const HilbertOptions opts = hilbert_options(cfg, rc);

    std::ostringstream os;
    bool ok = true;
    if (cfg.compare_twist) {
        require(rc.xn.has_value() && rc.xn->n >= 3, "--compare-twist needs a transposition rack X<n>, n >= 3");
        const TwistTable phi = phi_psi_restriction(*rc.xn);
        const TwistSeriesComparison cmp = compare_twist_series(rc.q, phi, cfg.max_degree, opts);
        res.report = cmp.original.to_json();
        res.report["twist_comparison"] = {{"twisted", cmp.twisted.to_json()},
                                          {"equal", cmp.equal},
                                          {"all_equal", cmp.all_equal()}};
        ok = cmp.all_equal();
        if (cmp.original.closed_form)
            ok = ok && cmp.original.closed_form->all_match();
        os << "hilbert " << rc.rack_id << "/" << rc.cocycle_id << ": ranks";
        for (auto r : cmp.original.ranks())
            os << ' ' << r;
        os << "; twisted ranks";
        for (auto r : cmp.twisted.ranks())
            os << ' ' << r;
        os << (cmp.all_equal() ? " (equal)" : " (DIFFER)");
    } else {
        const HilbertReport report = graded_dims(rc.q, cfg.max_degree, opts);
        res.report = report.to_json();
        if (report.closed_form)
            ok = report.closed_form->all_match();
        os << "hilbert " << rc.rack_id << "/" << rc.cocycle_id << ": ranks";
        for (auto r : report.ranks())
            os << ' ' << r;
    }
    if (res.report.contains("closed_form"))
        os << (res.report["closed_form"]["all_match"].get<bool>() ? "; closed form matches" : "; closed form MISMATCH");
    res.summary = os.str();
    res.exit_code = ok ? kOk : kCheckFailed;
    return res;
}

CommandResult cmd_selfcheck(const RunConfig& cfg)
{
    require(cfg.n_max >= 2 && cfg.n_max <= kDefaultCoverCap,
            "selfcheck: n_max must lie in [2, " + std::to_string(kDefaultCoverCap) + "]");
    CommandResult res;
    nlohmann::json checks = nlohmann::json::array();
    bool all_ok = true;
    std::string first_failed;
    auto record = [&](const std::string& name, bool ok, nlohmann::json detail) {
        checks.push_back({{"name", name}, {"ok", ok}, {"detail", std::move(detail)}});
        if (!ok && all_ok) {
            all_ok = false;
            first_failed = name;
        }
    };

    GeneratorFactory gens = generator_t;
    if (cfg.inject_fault) {
        // unnormalized e_i - e_{i+1}: squares to 2
        gens = [](int n, int i) {
            const CliffordElement v = CliffordElement::basis_vector(n, i) - CliffordElement::basis_vector(n, i + 1);
            return SpinElement(v, Permutation::adjacent(n, i));
        };
    }
    for (int n = 2; n <= cfg.n_max; ++n) {
        const PresentationReport p = verify_presentation(n, gens);
        record("presentation n=" + std::to_string(n), p.ok, presentation_json(p));
    }
    for (int n = 4; n <= cfg.n_max; ++n) {
        const MainTheoremReport m = verify_main_theorem(n);
        record("main theorem n=" + std::to_string(n), m.ok,
               {{"pairs", m.pairs_checked}, {"twist_equals_minus_one", m.twist_equals_minus_one},
                {"first_failure", m.first_failure}});
    }
    for (int n = 4; n <= std::min(cfg.n_max, 6); ++n) {
        const LemmaReport l = verify_conjugation_lemmas(n, 1000, cfg.seed + static_cast<std::uint64_t>(n));
        record("conjugation lemmas n=" + std::to_string(n), l.ok(),
               {{"general_cases", l.general_cases}, {"proposition_cases", l.proposition_cases},
                {"first_failure", l.first_failure}});
    }
    for (int n = 2; n <= std::min(cfg.n_max, 5); ++n) {
        const GroupCocycleBit phi(n);
        const CheckResult c = phi.verify_group_cocycle();
        record("group cocycle S_" + std::to_string(n), c.ok(),
               {{"triples", phi.triples_checked()}, {"witness", witness_json(c)}});
    }
    for (int n = 3; n <= std::min(cfg.n_max, 6); ++n) {
        const TranspositionRack xn = transposition_rack(n);
        for (const auto& [name, q] : {std::pair{std::string("minus-one"), constant_cocycle(xn.rack, 2, 1)},
                                      std::pair{std::string("chi"), chi_cocycle(xn)}}) {
            const bool ok = check_rack_axioms(*xn.rack).ok() && check_cocycle(q).ok() && check_braid_equation(q);
            record("braid equation X_" + std::to_string(n) + " " + name, ok, nullptr);
        }
    }
    {
        std::mt19937_64 rng(cfg.seed);
        const TranspositionRack x3 = transposition_rack(3);
        const RackCocycle chi = chi_cocycle(x3);
        const int top = std::min(cfg.n_max, 6);
        std::size_t tested = 0;
        bool ok = true;
        for (int n = 2; n <= top; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<int> one_line(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    one_line[static_cast<std::size_t>(i)] = i + 1;
                std::shuffle(one_line.begin(), one_line.end(), rng);
                const Permutation sigma(one_line);
                auto pick = [&](int d) { return std::uniform_int_distribution<int>(0, d - 1)(rng); };
                const BraidWord other(n, random_reduced_word(sigma, pick));
                ok = ok && rho(matsumoto_word(sigma), chi, n) == rho(other, chi, n);
                ++tested;
            }
        }
        record("matsumoto word independence", ok, {{"permutations", tested}});
    }

    res.report = {{"schema_version", kSchemaVersion},
                  {"n_max", cfg.n_max},
                  {"seed", cfg.seed},
                  {"all_ok", all_ok},
                  {"checks", std::move(checks)}};
    res.summary = all_ok ? "selfcheck: all " + std::to_string(res.report["checks"].size()) + " checks passed"
                         : "selfcheck: FAILED at " + first_failed;
    res.exit_code = all_ok ? kOk : kCheckFailed;
    return res;
}

CommandResult dispatch(const RunConfig& cfg)
{
    try {
        if (cfg.subcommand == "rack")
            return cmd_rack(cfg);
        if (cfg.subcommand == "cocycle")
            return cmd_cocycle(cfg);
        if (cfg.subcommand == "cover")
            return cmd_cover(cfg);
        if (cfg.subcommand == "twist-verify")
            return cmd_verify_twist(cfg);
        if (cfg.subcommand == "cohomology")
            return cmd_cohomology(cfg);
        if (cfg.subcommand == "hilbert")
            return cmd_hilbert(cfg);
        if (cfg.subcommand == "selfcheck")
            return cmd_selfcheck(cfg);
        throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
    } catch (const ResourceError& e) {
        return {kResource, {{"schema_version", kSchemaVersion}, {"error", e.what()}}, std::string("resource cap exceeded: ") + e.what()};
    } catch (const InvalidArgument& e) {
        return {kUsage, {{"schema_version", kSchemaVersion}, {"error", e.what()}}, std::string("usage error: ") + e.what()};
    } catch (const MismatchError& e) {
        return {kUsage, {{"schema_version", kSchemaVersion}, {"error", e.what()}}, std::string("usage error: ") + e.what()};
    } catch (const InternalError& e) {
        return {kCheckFailed, {{"schema_version", kSchemaVersion}, {"error", e.what()}}, std::string("self-check failure: ") + e.what()};
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"racktwist: racks, cocycles, twisting and Nichols algebra ranks"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string mode = "modular";
    std::optional<std::size_t> dim_cap;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Write the JSON report here ('-' for stdout)"); };

    auto* rack = app.add_subcommand("rack", "Build X_n (or load a rack JSON file) and check the rack axioms");
    rack->add_option("--n", cfg.n, "Transposition rack X_n");
    rack->add_option("--file", cfg.file, "Rack JSON file");
    add_out(rack);

    auto* cocycle = app.add_subcommand("cocycle", "Check a rack 2-cocycle and its braid equation");
    cocycle->add_option("--n", cfg.n, "Transposition rack X_n");
    cocycle->add_option("--kind", cfg.cocycle_spec, "minus-one | chi")->check(CLI::IsMember({"minus-one", "-1", "chi"}));
    cocycle->add_option("--file", cfg.file, "Cocycle JSON file");
    add_out(cocycle);

    auto* cover = app.add_subcommand("cover", "Verify the double cover T_n and export the restricted twist table");
    cover->add_option("--n", cfg.n, "Degree n")->required();
    add_out(cover);

    auto* tv = app.add_subcommand("twist-verify", "Verify that chi twisted by phi_psi equals -1 on X_n");
    tv->add_option("--n", cfg.n, "Degree n (>= 4)")->required();
    add_out(tv);

    auto* coh = app.add_subcommand("cohomology", "Decide whether -1 and chi are cohomologous on X_n");
    coh->add_option("--n", cfg.n, "Degree n (>= 3)")->required();
    add_out(coh);

    auto* hil = app.add_subcommand("hilbert", "Ranks of the quantum symmetrizers Q_0..Q_d");
    hil->add_option("--rack", cfg.rack_spec, "X<n> or a rack JSON file");
    hil->add_option("--cocycle", cfg.cocycle_spec, "minus-one | chi | cocycle JSON file");
    hil->add_option("--max-degree", cfg.max_degree, "Largest degree");
    hil->add_option("--mode", mode, "exact | modular")->check(CLI::IsMember({"exact", "modular"}));
    hil->add_option("--seed", cfg.seed, "Seed for prime selection");
    hil->add_flag("--compare-twist", cfg.compare_twist, "Also rank the twist by phi_psi and compare");
    add_out(hil);

    auto* self = app.add_subcommand("selfcheck", "Run the aggregated verification suite");
    self->add_option("--n-max", cfg.n_max, "Largest n");
    self->add_option("--seed", cfg.seed, "Seed for random words and permutations");
    self->add_flag("--inject-fault", cfg.inject_fault, "Use corrupted generators (negative control)")->group("");
    add_out(self);

    for (auto* sub : {rack, cocycle, cover, tv, coh, hil, self}) {
        sub->add_option("--dim-cap", dim_cap, "Tensor dimension cap (overrides RACKTWIST_DIM_CAP)");
        sub->add_option("--workers", cfg.workers, "Worker threads for symmetrizer assembly");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.dim_cap = dim_cap;
    try {
        cfg.mode = rank_mode_from_string(mode);
    } catch (const InvalidArgument& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }

    const CommandResult res = dispatch(cfg);
    (res.exit_code == kOk ? std::cout : std::cerr) << res.summary << '\n';
    if (!cfg.out.empty()) {
        const std::string text = res.report.dump(2) + "\n";
        if (cfg.out == "-") {
            std::cout << text;
        } else {
            std::ofstream out(cfg.out, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << cfg.out << '\n';
                return kUsage;
            }
            out << text;
        }
    }
    return res.exit_code;
}

} // namespace racktwist::cli
