// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gleafkit/compository.hpp"
#include "gleafkit/delta.hpp"
#include "gleafkit/gleaf.hpp"
#include "gleafkit/metric.hpp"
#include "gleafkit/nerve.hpp"
#include "gleafkit/probability.hpp"
#include "gleafkit/relational.hpp"
#include "gleafkit/spans.hpp"
#include "gleafkit/topology.hpp"

using namespace gleafkit;
using Clock = std::chrono::steady_clock;

namespace {

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

bool g_all_pass = true;

void report(int id, const std::string& label, bool pass, long long ms) {
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                ms);
    std::fflush(stdout);
    g_all_pass = g_all_pass && pass;
}

// ---------------------------------------------------------------- fixtures

FinCategory chain_poset(int n) {
    std::vector<std::string> elems;
    for (int i = 0; i < n; ++i) elems.push_back("c" + std::to_string(i));
    return poset_category(elems, [](int x, int y) { return x <= y; });
}

FinCategory diamond_poset() {
    return poset_category({"bot", "a", "b", "top"}, [](int x, int y) {
        return x == y || x == 0 || y == 3;
    });
}

FinCategory z2_monoid() { return monoid_category({"e", "g"}, {{0, 1}, {1, 0}}, 0); }

std::vector<FinCategory> small_categories() {
    return {free_arrow_category(), chain_poset(3), chain_poset(4), diamond_poset(), z2_monoid()};
}

// Per-axiom failure/sample tallies accumulated across every suite run.
struct Tally {
    std::map<std::string, long long> fails, samples;
    void add(const std::vector<AxiomReport>& reports) {
        for (const auto& r : reports) {
            fails[r.axiom] += static_cast<long long>(r.failures.size());
            samples[r.axiom] += r.samples;
        }
    }
    bool clean(const std::set<std::string>& axioms) const {
        for (const auto& a : axioms) {
            auto s = samples.find(a);
            if (s == samples.end() || s->second == 0) return false;
            auto f = fails.find(a);
            if (f != fails.end() && f->second != 0) return false;
        }
        return true;
    }
};

// ------------------------------------------------- criterion 1: identities

bool simplicial_identities(int max_n) {
    bool ok = true;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            for (int j = 0; j < k; ++j)
                ok = ok && compose(face(k, n), face(j, n - 1)) ==
                               compose(face(j, n), face(k - 1, n - 1));
    for (int n = 0; n <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= k; ++j)
                ok = ok && compose(degeneracy(j, n), degeneracy(k + 1, n + 1)) ==
                               compose(degeneracy(k, n), degeneracy(j, n + 1));
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k <= n - 1; ++k)
            for (int j = 0; j <= n; ++j) {
                auto mixed = compose(degeneracy(k, n - 1), face(j, n));
                if (j < k)
                    ok = ok && mixed == compose(face(j, n - 1), degeneracy(k - 1, n - 2));
                else if (j == k || j == k + 1)
                    ok = ok && mixed == identity_map(n - 1);
                else
                    ok = ok && mixed == compose(face(j - 1, n - 1), degeneracy(k, n - 2));
            }
    return ok;
}

// ----------------------------------- criterion 9 helper: brute-force oracle

// Independent check of the extension oracle: try every assignment of the
// unspecified distances, drawing candidate values from sums over simple paths
// of specified entries (plus infinity). If any extension exists at all, the
// pointwise-largest one takes exactly such values, so this search is complete;
// validity of each candidate table is checked directly from the axioms.
bool brute_force_extension(const PartialMetric& P) {
    const int n = P.n;
    auto lookup = [&](int x, int y) -> std::optional<ExtRat> {
        if (P.at(x, y).has_value()) return P.at(x, y);
        if (P.symmetric && P.at(y, x).has_value()) return P.at(y, x);
        return std::nullopt;
    };
    std::vector<std::pair<int, int>> missing;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!lookup(x, y).has_value()) missing.push_back({x, y});

    auto candidates = [&](int s, int t) {
        std::set<ExtRat> out{ExtRat::infinity()};
        std::vector<char> used(static_cast<size_t>(n), 0);
        std::function<void(int, ExtRat)> dfs = [&](int v, ExtRat acc) {
            if (v == t) {
                out.insert(acc);
                return;
            }
            used[static_cast<size_t>(v)] = 1;
            for (int w = 0; w < n; ++w)
                if (!used[static_cast<size_t>(w)] && lookup(v, w).has_value())
                    dfs(w, acc + *lookup(v, w));
            used[static_cast<size_t>(v)] = 0;
        };
        dfs(s, ExtRat(Rat(0)));
        return std::vector<ExtRat>(out.begin(), out.end());
    };

    std::vector<std::vector<ExtRat>> cand;
    for (auto [x, y] : missing) cand.push_back(candidates(x, y));

    FiniteMetric M(n, true, std::vector<ExtRat>(static_cast<size_t>(n * n), ExtRat(Rat(0))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && lookup(x, y).has_value()) M.set(x, y, *lookup(x, y));

    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == missing.size()) return metric_valid(M);
        for (const auto& v : cand[i]) {
            M.set(missing[i].first, missing[i].second, v);
            M.set(missing[i].second, missing[i].first, v);
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

bool validate_extension_oracle() {
    const std::vector<Rat> grid{Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(3)};
    Rng rng(97);
    int agree = 0, feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);  // 3..5 points
        PartialMetric P;
        P.n = n;
        P.symmetric = true;
        P.d.assign(static_cast<size_t>(n * n), std::nullopt);
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) pairs.push_back({x, y});
        int missing_budget = 4;
        for (auto [x, y] : pairs) {
            bool specify = (rng() % 10) < 7 || missing_budget == 0;
            if (!specify) {
                --missing_budget;
                continue;
            }
            P.set(x, y, ExtRat(grid[rng() % grid.size()]));
        }
        bool oracle = extension_exists(P);
        bool brute = brute_force_extension(P);
        if (oracle == brute) ++agree;
        (oracle ? feasible : infeasible) += 1;
    }
    // the oracle must match brute force everywhere, and the sample must have
    // actually exercised both verdicts
    return agree == 120 && feasible > 0 && infeasible > 0;
}

}  // namespace

int main() {
    auto t_total = Clock::now();

    // 1. simplicial identities, exhaustive generator pairs n <= 6
    {
        auto t0 = Clock::now();
        bool ok = simplicial_identities(6);
        long long ms = ms_since(t0);
        report(1, "simplicial identities, all generator pairs n <= 6", ok && ms < 1000, ms);
    }

    // 2 + 3. compository axiom suites and derived laws (one shared run).
    // Core axioms are checked separately from the derived laws so the two
    // criteria get independent verdicts.
    const std::set<std::string> core_axioms{"functoriality",   "identity",
                                            "degeneracy_compat", "face_compat",
                                            "source_target",   "composition_valid"};
    const std::set<std::string> derived_axioms{"higher_identity", "back_and_forth", "two_step",
                                               "st_comp", "associativity"};
    Tally tally;
    long long suites_ms = 0;
    {
        auto t0 = Clock::now();
        {
            SuiteConfig cfg;
            cfg.max_dim = 3;
            cfg.functoriality_map_cap = 3;
            for (const auto& C : small_categories()) {
                NerveInstance inst(C);
                CompositorySuite<NerveInstance> suite(inst, "nerve", cfg);
                tally.add(suite.run_all());
            }
        }
        {
            // spans over the diamond lattice: full suite with inputs of
            // dimension <= 2 (composites reach dimension 4), plus the
            // single-composition axioms exhaustively at dimension <= 3
            auto L = diamond_lattice();
            SpanInstance inst(L);
            SuiteConfig cfg;
            cfg.max_dim = 2;
            cfg.functoriality_map_cap = 3;
            CompositorySuite<SpanInstance> suite(inst, "spans", cfg);
            tally.add(suite.run_all());

            cfg.max_dim = 3;
            CompositorySuite<SpanInstance> deep(inst, "spans_d3", cfg);
            std::vector<AxiomReport> extra;
            extra.push_back(deep.run_functoriality());
            extra.push_back(deep.run_identity());
            extra.push_back(deep.run_higher_identity());
            extra.push_back(deep.run_pair_axiom(
                "source_target", [&](AxiomReport& r, const NSpan& A, int k, const NSpan& B) {
                    ++r.samples;
                    if (!check_source_target(inst, A, k, B))
                        r.failures.push_back({{"k", k}});
                }));
            extra.push_back(deep.run_pair_axiom(
                "composition_valid", [&](AxiomReport& r, const NSpan& A, int k, const NSpan& B) {
                    ++r.samples;
                    if (!inst.valid(inst.compose(A, k, B))) r.failures.push_back({{"k", k}});
                }));
            tally.add(extra);
        }
        {
            MetricInstance inst(true);
            SuiteConfig cfg;
            cfg.max_dim = 4;
            cfg.samples = 500;
            cfg.seed = 11;
            cfg.functoriality_map_cap = 3;
            CompositorySuite<MetricInstance> suite(inst, "metric", cfg);
            tally.add(suite.run_all());
        }
        {
            DistInstance inst(2);
            SuiteConfig cfg;
            cfg.max_dim = 3;
            cfg.samples = 500;
            cfg.seed = 12;
            cfg.functoriality_map_cap = 3;
            CompositorySuite<DistInstance> suite(inst, "probability", cfg);
            tally.add(suite.run_all());
        }
        suites_ms = ms_since(t0);
        report(2, "compository axioms: nerve/spans exhaustive, metric/probability 500 seeded",
               tally.clean(core_axioms) && suites_ms < 60000, suites_ms);
        report(3, "derived composition laws on the same coverage", tally.clean(derived_axioms),
               suites_ms);
    }

    // 4. middle-range face equation discriminates nerves from metrics
    {
        auto t0 = Clock::now();
        bool nerve_holds = true;
        SuiteConfig cfg;
        cfg.max_dim = 3;
        for (const auto& C : small_categories()) {
            NerveInstance inst(C);
            CompositorySuite<NerveInstance> suite(inst, "nerve", cfg);
            auto r = suite.run_middle_face(/*expect_hold=*/true);
            nerve_holds = nerve_holds && r.failures.empty() && r.samples > 0;
        }
        MetricInstance mi(true);
        SuiteConfig mcfg;
        mcfg.max_dim = 4;
        mcfg.samples = 1000;
        mcfg.seed = 1;
        CompositorySuite<MetricInstance> msuite(mi, "metric", mcfg);
        auto mr = msuite.run_middle_face(/*expect_hold=*/false);
        bool metric_violates = mr.failures.size() == 1 && mr.failures[0].at("witness") == true;
        report(4, "middle-range face law: holds on all nerve cases, metric witness found",
               nerve_holds && metric_violates, ms_since(t0));
    }

    // 5. Segal uniqueness on small categories, path lengths <= 3
    {
        auto t0 = Clock::now();
        bool ok = true;
        long long cases = 0;
        for (const auto& C : small_categories()) {
            NerveInstance inst(C);
            for (int m = 0; m <= 3 && ok; ++m)
                for (const auto& A : inst.enumerate(m))
                    for (int n = 0; n <= 3; ++n)
                        for (int k = 0; k <= std::min(m, n); ++k)
                            for (const auto& B :
                                 inst.extensions(inst.act(A, target_incl(k, m)), n)) {
                                ++cases;
                                ok = ok && segal_unique(C, A, k, B);
                            }
        }
        report(5, "Segal uniqueness, exhaustive small categories, path lengths <= 3",
               ok && cases > 0, ms_since(t0));
    }

    // 6. the diamond-lattice horn has no filler, not even ignoring one face
    {
        auto t0 = Clock::now();
        auto D = diamond_lattice();
        auto horn = diamond_horn(D);
        const NSpan &A = horn.at(0), &B = horn.at(1), &C = horn.at(3);
        bool is_horn = span_act(A, face(0, 2)) == span_act(B, face(0, 2)) &&
                       span_act(B, face(2, 2)) == span_act(C, face(1, 2)) &&
                       span_act(C, face(0, 2)) == span_act(A, face(2, 2)) &&
                       span_valid(D, A) && span_valid(D, B) && span_valid(D, C);
        bool no_full = !horn_filler_search(D, 3, horn).has_value();
        bool no_partial = !horn_filler_search(D, 3, {{0, A}, {1, B}}).has_value();
        long long ms = ms_since(t0);
        report(6, "diamond span horn: exhaustive search finds no filler (even without face 3)",
               is_horn && no_full && no_partial && ms < 5000, ms);
    }

    // 7. gleaf axiom suites across all four direct instances
    {
        auto t0 = Clock::now();
        bool ok = true;
        auto clean = [&](auto& suite) {
            for (auto& r : suite.run_all()) ok = ok && r.failures.empty() && r.samples > 0;
        };
        {
            GleafSuiteConfig cfg;
            cfg.max_size = 6;
            cfg.naturality_max_size = 3;
            cfg.samples = 48;
            cfg.pool = 8;
            cfg.seed = 21;
            cfg.max_checks = 30000;
            MetricGleaf G(true);
            GleafSuite<MetricGleaf> suite(G, "metric", cfg);
            clean(suite);
        }
        {
            GleafSuiteConfig cfg;
            cfg.max_size = 5;
            cfg.naturality_max_size = 3;
            cfg.samples = 48;
            cfg.pool = 6;
            cfg.seed = 22;
            cfg.max_checks = 20000;
            ProbGleaf G(3);
            GleafSuite<ProbGleaf> suite(G, "probability", cfg);
            clean(suite);
        }
        {
            GleafSuiteConfig cfg;
            cfg.max_size = 3;
            cfg.naturality_max_size = 3;
            cfg.pool_cap = 48;
            cfg.seed = 23;
            cfg.max_checks = 30000;
            RelGleaf G2(2);
            GleafSuite<RelGleaf> s2(G2, "relational", cfg);
            clean(s2);
            cfg.samples = 48;
            cfg.pool = 8;
            RelGleaf G3(3);
            GleafSuite<RelGleaf> s3(G3, "relational_d3", cfg);
            clean(s3);
        }
        {
            GleafSuiteConfig cfg;
            cfg.max_size = 4;
            cfg.naturality_max_size = 3;
            cfg.pool_cap = 48;
            cfg.seed = 24;
            cfg.max_checks = 40000;
            TopGleaf G;
            GleafSuite<TopGleaf> suite(G, "topology", cfg);
            clean(suite);
        }
        report(7, "gleaf axioms: metric, probability, relational, topology instances",
               ok, ms_since(t0));
    }

    // 8. the equivalence round trip: gluing over the simplex category is
    // composition, and composition makes a lawful simplex-category gleaf
    {
        auto t0 = Clock::now();
        bool ok = true;
        Rng rng(31);
        {
            MetricInstance mi(true);
            MetricDeltaGleaf G(true);
            for (int trial = 0; trial < 200; ++trial) {
                int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
                int k = static_cast<int>(rng() % static_cast<unsigned>(std::min(m, n) + 1));
                auto A = mi.random_simplex(m, rng);
                auto B = mi.random_extension(mi.act(A, target_incl(k, m)), n, rng);
                DeltaGleafAsCompository<MetricDeltaGleaf> back(G);
                ok = ok && G.glue(A, B, m + n - k) == metric_compose(A, k, B) &&
                     back.compose(A, k, B) == metric_compose(A, k, B);
            }
        }
        {
            DistInstance di(2);
            ProbDeltaGleaf G(2);
            for (int trial = 0; trial < 200; ++trial) {
                int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
                int k = static_cast<int>(rng() % static_cast<unsigned>(std::min(m, n) + 1));
                auto A = di.random_simplex(m, rng);
                auto B = di.random_extension(di.act(A, target_incl(k, m)), n, rng);
                DeltaGleafAsCompository<ProbDeltaGleaf> back(G);
                ok = ok && G.glue(A, B, m + n - k) == dist_compose(A, k, B) &&
                     back.compose(A, k, B) == dist_compose(A, k, B);
            }
        }
        auto clean = [&](auto& suite) {
            for (auto& r : suite.run_all()) ok = ok && r.failures.empty() && r.samples > 0;
        };
        {
            SuiteConfig cfg;
            cfg.max_dim = 3;
            auto C = diamond_poset();
            NerveInstance inst(C);
            CompositoryAsDeltaGleaf<NerveInstance> G(inst);
            DeltaGleafSuite<CompositoryAsDeltaGleaf<NerveInstance>> suite(G, "nerve", cfg);
            clean(suite);
        }
        {
            SuiteConfig cfg;
            cfg.max_dim = 2;
            auto L = diamond_lattice();
            SpanInstance inst(L);
            CompositoryAsDeltaGleaf<SpanInstance> G(inst);
            DeltaGleafSuite<CompositoryAsDeltaGleaf<SpanInstance>> suite(G, "spans", cfg);
            clean(suite);
        }
        report(8, "round trip: glue == compose (200 pairs each) and adapter gleaf suites pass",
               ok, ms_since(t0));
    }

    // 9. counterexample battery with independent certification
    {
        auto t0 = Clock::now();
        bool oracle_valid = validate_extension_oracle();
        auto horn = find_unfillable_horn(6, 42);
        bool horn_faces = metric_valid(horn.face0) && metric_valid(horn.face1) &&
                          metric_valid(horn.face3);
        auto data = horn.assembled();
        bool horn_unfillable = !extension_exists(data) && !brute_force_extension(data);

        auto pieces = contradictory_triple();
        bool prob_ok = pieces.size() == 3;
        Relation join = dist_support(pieces[0].dist, pieces[0].vars);
        for (size_t i = 1; i < pieces.size(); ++i)
            join = join_unchecked(join, dist_support(pieces[i].dist, pieces[i].vars));
        prob_ok = prob_ok && join.tuples().empty() &&
                  deterministic_joint_exists(pieces) == Feasibility::No;

        auto tpieces = triangle_pieces();
        const auto& all3 = enumerate_topologies(3);
        int matching = 0;
        for (const auto& tau : all3) {
            bool fits = true;
            for (const auto& p : tpieces) fits = fits && top_restrict(tau, p.subset) == p.tau;
            if (fits) ++matching;
        }
        bool top_ok = all3.size() == 29 && matching == 0 &&
                      !common_extension_exists(tpieces, 3);

        report(9,
               "counterexamples: metric horn (oracle brute-force-validated), probability "
               "triple, topology triple",
               oracle_valid && horn_faces && horn_unfillable && prob_ok && top_ok, ms_since(t0));
    }

    // 10. exact arithmetic end to end, and total wall time
    {
        auto t0 = Clock::now();
        bool ok = true;
        Rng rng(77);
        DistInstance di(3);
        for (int trial = 0; trial < 200; ++trial) {
            auto mother = di.random_simplex(3, rng);  // 4 variables
            auto A = dist_pull(mother, {0, 1, 2});
            auto B = dist_pull(mother, {1, 2, 3});
            auto g = dist_glue(A, {0, 1, 2}, B, {1, 2, 3}, 4);
            Rat total(0);
            for (const auto& v : g.w) total += v;
            ok = ok && total == Rat(1) && dist_valid(g);
        }
        long long total_ms = ms_since(t_total);
        report(10, "exact arithmetic: 200 glued distributions sum to exactly 1; total < 2 min",
               ok && total_ms < 120000, ms_since(t0));
    }

    long long total_ms = ms_since(t_total);
    std::printf("%s (%lld ms total)\n", g_all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED",
                total_ms);
    return g_all_pass ? 0 : 1;
}
