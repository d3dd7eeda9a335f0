// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "domk/canonical.hpp"
#include "domk/catalog.hpp"
#include "domk/colouring.hpp"
#include "domk/constructions.hpp"
#include "domk/lifting.hpp"
#include "domk/subdivision.hpp"
#include "instances.hpp"
#include "lift_trials.hpp"
#include "oracles.hpp"

using namespace domk;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_s) {
        o.pass = false;
        o.detail += "; exceeded time limit of " + std::to_string(static_cast<int>(limit_s)) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("%s [%2d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string count(const char* label, long n) { return std::string(label) + "=" + std::to_string(n); }

// Shared between the sweep criteria.
struct Sweep {
    long graphs = 0;
    long five_chromatic = 0;
    long uncovered = 0;
    std::vector<std::pair<Graph, DominatingModel>> models;
    std::vector<std::pair<Graph, DominatingModel>> five_chromatic_models;
};

Sweep run_sweep() {
    Sweep s;
    for (const auto& g : graph_catalog(7)) {
        ++s.graphs;
        std::optional<DominatingModel> m;
        if (g.order() >= 5) m = find_dominating_model(g, 5, {}, SearchMode::singleton_reduced);
        if (m) s.models.emplace_back(g, *m);
        if (chromatic_number(g) >= 5) {
            ++s.five_chromatic;
            if (!m) ++s.uncovered;
            else s.five_chromatic_models.emplace_back(g, *m);
        }
    }
    return s;
}

}  // namespace

int main() {
    criterion(1, "K5 splits", 60, [] {
        auto all = enumerate_k5_splits();
        std::set<std::string> forms;
        for (const auto& g : all) forms.insert(canonical_form(g));
        bool k5 = false, hat = false, pet = false;
        for (const auto& g : all) {
            k5 = k5 || is_isomorphic(g, complete(5));
            hat = hat || is_isomorphic(g, k5_hat());
            pet = pet || (g.order() == 10 && is_isomorphic(g, petersen()));
        }
        Outcome o;
        o.pass = all.size() == 22 && forms.size() == 22 && k5 && hat && pet;
        o.detail = count("splits", static_cast<long>(all.size())) + " " +
                   count("classes", static_cast<long>(forms.size())) + " K5=" + (k5 ? "yes" : "no") +
                   " K5hat=" + (hat ? "yes" : "no") + " Petersen=" + (pet ? "yes" : "no");
        return o;
    });

    criterion(2, "K55 minus matching", 60, [] {
        auto g = k55_minus_matching();
        DominatingModel minor;
        for (Vertex i = 0; i < 5; ++i) minor.branch_sets.push_back(VertexSet{i, static_cast<Vertex>(5 + (i + 1) % 5)});
        const bool standard = verify_standard_model(g, minor).empty();
        const bool reduced = !find_dominating_model(g, 5, {}, SearchMode::singleton_reduced);
        const bool general = !find_dominating_model(g, 5);
        Outcome o;
        o.pass = standard && reduced && general;
        o.detail = std::string("K5 minor verified=") + (standard ? "yes" : "no") +
                   " dominating model (singleton-reduced)=" + (reduced ? "none" : "found") +
                   " dominating model (general)=" + (general ? "none" : "found");
        return o;
    });

    Sweep sweep;
    criterion(3, "sweep of all graphs on at most 7 vertices", 1800, [&] {
        sweep = run_sweep();
        Outcome o;
        o.pass = sweep.uncovered == 0 && sweep.graphs == 1252;
        o.detail = count("graphs", sweep.graphs) + " " + count("chi>=5", sweep.five_chromatic) + " " +
                   count("with_model", static_cast<long>(sweep.models.size())) + " " +
                   count("chi>=5_without_model", sweep.uncovered);
        return o;
    });

    criterion(4, "K5 / K5hat extraction", 1800, [&] {
        long ok = 0, k5 = 0, hat = 0;
        for (const auto& [g, m] : sweep.five_chromatic_models) {
            auto ex = extract_k5_or_k5hat(g, m);
            const bool named = ex.embedding.pattern_name == "K5" || ex.embedding.pattern_name == "K5hat";
            const bool dichotomy = (ex.embedding.pattern_name == "K5") == (ex.middle_length() == 0);
            if (named && dichotomy && verify_subdivision(g, ex.embedding).empty()) ++ok;
            (ex.embedding.pattern_name == "K5" ? k5 : hat) += 1;
        }
        Outcome o;
        const long total = static_cast<long>(sweep.five_chromatic_models.size());
        o.pass = total == sweep.five_chromatic && ok == total && total > 0;
        o.detail = count("verified", ok) + "/" + std::to_string(total) + " " + count("K5", k5) + " " +
                   count("K5hat", hat);
        return o;
    });

    criterion(5, "1-subdivisions of K4, K5, K6", 300, [] {
        Outcome o;
        for (Vertex n : {4, 5, 6}) {
            const bool none = !find_dominating_model(one_subdivision(complete(n)), 4);
            o.pass = o.pass && none;
            o.detail += "K" + std::to_string(n) + ":" + (none ? "none " : "found ");
        }
        return o;
    });

    criterion(6, "random cubic graphs", 600, [] {
        std::mt19937_64 rng(20261016);
        long tested = 0, with_model = 0;
        while (tested < 100) {
            const Vertex n = static_cast<Vertex>(10 + 2 * (rng() % 4));
            auto g = random_cubic(n, rng);
            if (!is_connected(g)) continue;
            ++tested;
            with_model += find_dominating_model(g, 5).has_value();
        }
        return Outcome{with_model == 0, count("graphs", tested) + " " + count("with_model", with_model)};
    });

    criterion(7, "dominating K4 constructor", 600, [] {
        std::mt19937_64 rng(7);
        long verified = 0, small = 0, small_agree = 0;
        for (int trial = 0; trial < 500; ++trial) {
            auto [g, l] = instances::random_instance(rng, 20);
            bool ok = false;
            try {
                auto m = dominating_k4_constructor(g, l);
                ok = verify_dominating_model(g, m).empty();
                for (Vertex v : l.vertices) ok = ok && m.set(1).contains(v);
            } catch (const std::exception&) {
                ok = false;
            }
            verified += ok;
            if (g.order() <= 7) {
                ++small;
                small_agree += ok == oracle::has_model(g, 4, oracle::Notion::dominating, l.vertices, true);
            }
        }
        long cat = 0, cat_agree = 0;
        for (const auto& g : graph_catalog(7))
            for (const auto& l : instances::admissible_cliques(g)) {
                ++cat;
                bool ok = false;
                try {
                    auto m = dominating_k4_constructor(g, l);
                    ok = verify_dominating_model(g, m).empty();
                    for (Vertex v : l.vertices) ok = ok && m.set(1).contains(v);
                } catch (const std::exception&) {
                    ok = false;
                }
                cat_agree += ok == oracle::has_model(g, 4, oracle::Notion::dominating, l.vertices, true);
            }
        Outcome o;
        o.pass = verified == 500 && small_agree == small && cat_agree == cat;
        o.detail = count("random_verified", verified) + "/500 " + count("oracle_agree_random_n<=7", small_agree) +
                   "/" + std::to_string(small) + " " + count("oracle_agree_catalog_n<=7", cat_agree) + "/" +
                   std::to_string(cat);
        return o;
    });

    criterion(8, "lifting round trips", 300, [] {
        Outcome o;
        const char* names[] = {"contract_first", "contract_second", "restrict", "extend"};
        int idx = 0;
        for (auto kind : {LiftKind::contract_first, LiftKind::contract_second, LiftKind::restrict, LiftKind::extend}) {
            auto tally = trials::run_lift_trials(kind, 300, 5000 + static_cast<std::uint64_t>(idx));
            o.pass = o.pass && tally.failed == 0 && tally.passed == 300;
            o.detail += std::string(names[idx++]) + ":" + std::to_string(tally.passed) + "/300 ";
            if (tally.failed) o.detail += "(" + tally.first_failure + ") ";
        }
        return o;
    });

    criterion(9, "normalisation chain", 1800, [&] {
        long ok = 0;
        for (const auto& [g, m] : sweep.models) {
            auto s = singleton_normalize(g, m);
            auto c = induced_cycle_normalize(g, s);
            VertexSet cyc = c.set(3);
            cyc |= c.set(4);
            cyc |= c.set(5);
            ok += verify_dominating_model(g, s).empty() && verify_dominating_model(g, c).empty() &&
                  c.set(4).size() == 1 && c.set(5).size() == 1 && is_induced_cycle(g, cyc);
        }
        const long total = static_cast<long>(sweep.models.size());
        return Outcome{total > 0 && ok == total, count("normalised", ok) + "/" + std::to_string(total)};
    });

    criterion(10, "solver oracles", 900, [] {
        long colour_cases = 0, colour_agree = 0, model_cases = 0, model_agree = 0;
        for (const auto& g : oracle::atlas(6)) {
            for (int k = 1; k <= 4; ++k) {
                ++colour_cases;
                auto c = k_colour(g, k);
                const bool ok = c ? verify_colouring(g, *c).empty() : true;
                colour_agree += ok && c.has_value() == oracle::k_colourable(g, k);
            }
            for (int t : {3, 4}) {
                ++model_cases;
                auto m = find_dominating_model(g, t);
                const bool ok = m ? verify_dominating_model(g, *m).empty() : true;
                model_agree += ok && m.has_value() == oracle::has_model(g, t, oracle::Notion::dominating);
            }
        }
        Outcome o;
        o.pass = colour_agree == colour_cases && model_agree == model_cases;
        o.detail = count("k_colour_agree", colour_agree) + "/" + std::to_string(colour_cases) + " " +
                   count("model_agree", model_agree) + "/" + std::to_string(model_cases);
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
