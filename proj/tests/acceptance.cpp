// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the path of
// the racktwist executable (used for the determinism criterion).

#include "racktwist/braided.hpp"
#include "racktwist/cocycle.hpp"
#include "racktwist/hilbert.hpp"
#include "racktwist/spincover.hpp"

#include "oracles.hpp"
#include "random_racks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace racktwist;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > limit_seconds) {
        out.ok = false;
        out.detail = "over the time limit of " + std::to_string(limit_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << timing << ")";
    if (!out.ok) {
        std::cout << " -- " << out.detail;
        ++failures;
    }
    std::cout << std::endl;
}

std::string ranks_text(const std::vector<std::size_t>& r)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < r.size(); ++i)
        os << (i ? " " : "") << r[i];
    return os.str();
}

HilbertOptions modular_options()
{
    HilbertOptions o;
    o.mode = RankMode::modular;
    o.seed = 1;
    o.symmetrizer.dimension_cap = 1'000'000;
    o.symmetrizer.workers = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

Outcome check_series(int n, int max_degree, const std::vector<std::size_t>& expected, int exact_up_to)
{
    Outcome out;
    const auto xn = transposition_rack(n);
    const auto poly = expand_closed_form(known_transposition_series(n));
    for (int d = 1; d <= max_degree; ++d)
        out.require(poly.coefficient(static_cast<std::size_t>(d)) == expected[static_cast<std::size_t>(d - 1)],
                    "closed-form coefficient mismatch at degree " + std::to_string(d));
    for (const auto& [name, q] : {std::pair{std::string("-1"), constant_cocycle(xn.rack, 2, 1)},
                                  std::pair{std::string("chi"), chi_cocycle(xn)}}) {
        HilbertOptions o = modular_options();
        o.closed_form = known_transposition_series(n);
        const auto report = graded_dims(q, max_degree, o);
        const auto ranks = report.ranks();
        for (int d = 1; d <= max_degree; ++d)
            out.require(ranks[static_cast<std::size_t>(d)] == expected[static_cast<std::size_t>(d - 1)],
                        name + ": ranks " + ranks_text(ranks));
        out.require(report.closed_form && report.closed_form->all_match(), name + ": closed form comparison failed");
        HilbertOptions ex = o;
        ex.mode = RankMode::exact;
        const auto exact = graded_dims(q, exact_up_to, ex);
        for (int d = 0; d <= exact_up_to; ++d)
            out.require(exact.ranks()[static_cast<std::size_t>(d)] == ranks[static_cast<std::size_t>(d)],
                        name + ": exact rank differs at degree " + std::to_string(d));
    }
    return out;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "cover presentation holds for 2 <= n <= 9", 10, [] {
        Outcome out;
        for (int n = 2; n <= 9; ++n) {
            const auto rep = verify_presentation(n);
            out.require(rep.ok, "n=" + std::to_string(n) + ": " + rep.first_failure);
        }
        return out;
    });

    criterion(2, "chi twisted by phi_psi is -1 on X_n, 4 <= n <= 9", 60, [] {
        Outcome out;
        for (int n = 4; n <= 9; ++n) {
            const auto rep = verify_main_theorem(n);
            const std::size_t k = static_cast<std::size_t>(n * (n - 1) / 2);
            out.require(rep.ok && rep.twist_equals_minus_one, "n=" + std::to_string(n) + ": " + rep.first_failure);
            out.require(rep.pairs_checked == k * k, "n=" + std::to_string(n) + ": wrong pair count");
        }
        return out;
    });

    criterion(3, "group cocycle identity on S_4 and S_5", 300, [] {
        Outcome out;
        for (int n : {4, 5}) {
            const GroupCocycleBit phi(n);
            out.require(phi.verify_group_cocycle().ok(), "S_" + std::to_string(n) + " fails");
            const std::size_t g = phi.elements().size();
            out.require(phi.triples_checked() == g * g * g, "triple count");
        }
        out.require(GroupCocycleBit(4).triples_checked() == 13824, "S_4 triple count");
        out.require(GroupCocycleBit(5).triples_checked() == 1728000, "S_5 triple count");
        return out;
    });

    criterion(4, "conjugation lemmas (exhaustive n <= 7, 1000 random words each)", 600, [] {
        Outcome out;
        for (int n = 2; n <= 7; ++n) {
            const auto rep = verify_conjugation_lemmas(n, 1000, 1000 + static_cast<std::uint64_t>(n), 20);
            out.require(rep.ok(), "n=" + std::to_string(n) + ": " + rep.first_failure);
            out.require(rep.general_cases == static_cast<std::size_t>((n - 1) * n * (n - 1)), "general case count");
            out.require(rep.proposition_cases >= 1000, "random word count");
        }
        return out;
    });

    criterion(5, "X_4 graded dimensions 6 19 42 71 96 for -1 and chi", 600,
              [] { return check_series(4, 5, {6, 19, 42, 71, 96}, 3); });

    criterion(6, "X_5 graded dimensions 10 55 220 711 for -1 and chi", 1800,
              [] { return check_series(5, 4, {10, 55, 220, 711}, 2); });

    criterion(7, "twisting by phi_psi preserves graded dimensions on X_4 and X_5", 1800, [] {
        Outcome out;
        for (auto [n, top] : {std::pair{4, 5}, std::pair{5, 4}}) {
            const auto xn = transposition_rack(n);
            const auto phi = phi_psi_restriction(xn);
            for (const auto& q : {constant_cocycle(xn.rack, 2, 1), chi_cocycle(xn)}) {
                const auto cmp = compare_twist_series(q, phi, top, modular_options());
                out.require(cmp.all_equal(), "X_" + std::to_string(n) + ": " + ranks_text(cmp.original.ranks()) +
                                                 " vs " + ranks_text(cmp.twisted.ranks()));
            }
            // the twist of chi is the constant -1 itself
            out.require(twist(chi_cocycle(xn), phi) == constant_cocycle(xn.rack, 2, 1), "twist(chi) != -1");
        }
        return out;
    });

    criterion(8, "-1 and chi are cohomologous on X_3", 10, [] {
        Outcome out;
        const auto x3 = transposition_rack(3);
        const auto minus_one = constant_cocycle(x3.rack, 2, 1);
        const auto chi = chi_cocycle(x3);
        const auto gamma = find_gauge(minus_one, chi);
        out.require(gamma.has_value(), "no gauge found");
        if (gamma)
            out.require(gauge_transform(minus_one, *gamma) == chi, "round trip fails");
        std::size_t solutions = 0;
        oracle::enumerate_gauges(3, 2, [&](const std::vector<std::uint32_t>& g) {
            bool all = true;
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 3; ++y)
                    all = all && (minus_one(x, y) + g[y] + g[x3.rack->op(x, y)]) % 2 == chi(x, y);
            solutions += all;
            return false;
        });
        out.require(solutions > 0, "exhaustive search finds no gauge");
        return out;
    });

    criterion(9, "braid equation, braid relations, Matsumoto lift and symmetrizer oracle", 600, [] {
        Outcome out;
        std::mt19937_64 rng(909);
        for (int i = 0; i < 100; ++i) {
            const auto cr = testing_support::random_conjugation_rack(rng, 8);
            const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 5);
            const auto q = testing_support::random_cocycle(rng, cr.rack, m);
            out.require(check_cocycle(q).ok(), "random cocycle fails the cocycle condition");
            out.require(check_braid_equation(q), "random cocycle fails the braid equation");
        }
        for (int n = 3; n <= 6; ++n) {
            const auto xn = transposition_rack(n);
            for (const auto& q : {constant_cocycle(xn.rack, 2, 1), chi_cocycle(xn)})
                out.require(check_braid_equation(q), "X_" + std::to_string(n) + " braid equation");
        }

        const auto x3 = transposition_rack(3);
        const auto chi = chi_cocycle(x3);
        for (int strands = 3; strands <= 6; ++strands) {
            for (int i = 1; i + 1 < strands; ++i)
                out.require(rho(BraidWord(strands, {i, i + 1, i}), chi, strands) ==
                                rho(BraidWord(strands, {i + 1, i, i + 1}), chi, strands),
                            "sigma_i sigma_{i+1} sigma_i relation");
            for (int i = 1; i < strands; ++i)
                for (int j = i + 2; j < strands; ++j)
                    out.require(rho(BraidWord(strands, {i, j}), chi, strands) ==
                                    rho(BraidWord(strands, {j, i}), chi, strands),
                                "far commutation relation");
        }

        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + trial % 6;
            std::vector<int> one_line(static_cast<std::size_t>(n));
            std::iota(one_line.begin(), one_line.end(), 1);
            std::shuffle(one_line.begin(), one_line.end(), rng);
            const Permutation sigma(one_line);
            auto pick = [&](int d) { return static_cast<int>(rng() % static_cast<std::uint64_t>(d)); };
            const BraidWord other(n, random_reduced_word(sigma, pick));
            out.require(rho(matsumoto_word(sigma), chi, n) == rho(other, chi, n),
                        "Matsumoto lift depends on the word for " + sigma.to_string());
        }

        SymmetrizerOptions so;
        so.dimension_cap = 1'000'000;
        for (const auto& q : {constant_cocycle(x3.rack, 2, 1), chi}) {
            std::vector<std::vector<int>> op(3, std::vector<int>(3)), e(3, std::vector<int>(3));
            for (std::size_t x = 0; x < 3; ++x)
                for (std::size_t y = 0; y < 3; ++y) {
                    op[x][y] = static_cast<int>(x3.rack->op(x, y));
                    e[x][y] = static_cast<int>(q(x, y));
                }
            for (int d = 1; d <= 4; ++d) {
                const auto sym = symmetrizer(q, d, so);
                const auto dense = oracle::dense_symmetrizer(op, e, d);
                for (std::size_t c = 0; c < sym.dim(); ++c)
                    for (std::size_t r = 0; r < sym.dim(); ++r)
                        out.require(sym.coefficient(r, c) == dense[r][c],
                                    "symmetrizer differs from the oracle at degree " + std::to_string(d));
            }
        }
        return out;
    });

    criterion(10, "selfcheck and hilbert reports are byte-identical across runs", 600, [&] {
        Outcome out;
        if (cli.empty()) {
            out.require(false, "no CLI path given");
            return out;
        }
        const auto dir = std::filesystem::temp_directory_path() /
                         ("racktwist_acceptance_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(dir);
        auto run = [&](const std::string& args, const std::string& name) {
            const auto path = dir / name;
            const std::string cmd = "\"" + cli + "\" " + args + " --out \"" + path.string() + "\" > /dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            out.require(status == 0, "command failed: " + args);
            return slurp(path);
        };
        const std::string self = "selfcheck --n-max 6 --seed 7";
        const std::string hil = "hilbert --rack X4 --cocycle chi --max-degree 4 --seed 7 --compare-twist";
        const auto s1 = run(self, "self1.json"), s2 = run(self + " --workers 1", "self2.json");
        const auto h1 = run(hil, "hil1.json"), h2 = run(hil + " --workers 1", "hil2.json");
        out.require(!s1.empty() && s1 == s2, "selfcheck reports differ");
        out.require(!h1.empty() && h1 == h2, "hilbert reports differ");
        std::filesystem::remove_all(dir);
        return out;
    });

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
              << std::endl;
    return failures ? 1 : 0;
}
