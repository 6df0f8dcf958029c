#include <doctest.h>

#include "gleafkit/gleaf.hpp"
#include "gleafkit/nerve.hpp"
#include "gleafkit/spans.hpp"

using namespace gleafkit;

namespace {

template <class Suite>
void expect_all_green(Suite& suite) {
    for (auto& r : suite.run_all()) {
        INFO(r.axiom << ": " << r.failures.dump());
        CHECK(r.failures.empty());
        CHECK(r.samples > 0);
    }
}

}  // namespace

TEST_CASE("subset helpers") {
    CHECK(mask_to_vec(0b101u, 3) == std::vector<int>{0, 2});
    CHECK(vec_intersect({0, 1, 3}, {1, 2, 3}) == std::vector<int>{1, 3});
    CHECK(vec_subset({1, 3}, {0, 1, 3}));
    CHECK_FALSE(vec_subset({2}, {0, 1, 3}));
    CHECK(local_positions({0, 2, 3}, {2, 3}) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(local_positions({0, 2}, {1}), std::domain_error);
}

TEST_CASE("relational glue is the natural join") {
    RelGleaf G(2);
    RelSection sA{2, {{0, 1}, {1, 0}}};
    RelSection sB{2, {{1, 1}, {0, 0}}};
    auto g = G.glue(sA, {0, 1}, sB, {1, 2}, 3);
    CHECK(g == RelSection{3, {{0, 1, 1}, {1, 0, 0}}});
    CHECK(G.pull(g, {0, 1}) == sA);
    CHECK(G.pull(g, {1, 2}) == sB);

    // disjoint legs: the glue is the product
    RelSection one{1, {{0}, {1}}};
    auto prod = G.glue(one, {0}, one, {1}, 2);
    CHECK(prod.tuples.size() == 4);

    // mismatched projections on the intersection are rejected
    RelSection sC{2, {{0, 0}}};
    CHECK_THROWS_AS(G.glue(sA, {0, 1}, sC, {1, 2}, 3), std::domain_error);
    // non-surjective legs rejected
    CHECK_THROWS_AS(G.glue(sA, {0, 1}, sB, {0, 1}, 3), std::domain_error);
}

TEST_CASE("gleaf suite: metric instance, symmetric and not") {
    GleafSuiteConfig cfg;
    cfg.max_size = 4;
    cfg.naturality_max_size = 3;
    cfg.samples = 64;
    cfg.pool = 10;
    cfg.seed = 5;
    cfg.max_checks = 20000;
    {
        MetricGleaf G(true);
        GleafSuite<MetricGleaf> suite(G, "metric", cfg);
        expect_all_green(suite);
    }
    {
        MetricGleaf G(false);
        cfg.seed = 6;
        GleafSuite<MetricGleaf> suite(G, "metric_nonsym", cfg);
        expect_all_green(suite);
    }
}

TEST_CASE("gleaf suite: probability instance") {
    GleafSuiteConfig cfg;
    cfg.max_size = 4;
    cfg.naturality_max_size = 3;
    cfg.samples = 64;
    cfg.pool = 8;
    cfg.seed = 7;
    cfg.max_checks = 15000;
    ProbGleaf G(3);
    GleafSuite<ProbGleaf> suite(G, "probability", cfg);
    expect_all_green(suite);
}

TEST_CASE("gleaf suite: relational instance over the subset lattice") {
    GleafSuiteConfig cfg;
    cfg.max_size = 3;
    cfg.naturality_max_size = 3;
    cfg.pool_cap = 48;
    cfg.seed = 3;
    cfg.max_checks = 30000;
    {
        RelGleaf G(2);  // fully enumerable through three attributes
        GleafSuite<RelGleaf> suite(G, "relational", cfg);
        expect_all_green(suite);
    }
    {
        RelGleaf G(3);  // enumerable up to two attributes, sampled at three
        cfg.samples = 64;
        cfg.pool = 10;
        GleafSuite<RelGleaf> suite(G, "relational_d3", cfg);
        expect_all_green(suite);
    }
}

TEST_CASE("gleaf suite: topology instance, exhaustive carriers") {
    GleafSuiteConfig cfg;
    cfg.max_size = 4;
    cfg.naturality_max_size = 3;
    cfg.pool_cap = 48;
    cfg.max_checks = 60000;
    TopGleaf G;
    GleafSuite<TopGleaf> suite(G, "topology", cfg);
    expect_all_green(suite);
}

TEST_CASE("simplex-category glue agrees with composition: metric and probability") {
    Rng rng(31);
    {
        MetricInstance mi(true);
        MetricDeltaGleaf G(true);
        for (int trial = 0; trial < 60; ++trial) {
            int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
            int k = static_cast<int>(rng() % static_cast<unsigned>(std::min(m, n) + 1));
            auto A = mi.random_simplex(m, rng);
            auto B = mi.random_extension(mi.act(A, target_incl(k, m)), n, rng);
            CHECK(G.glue(A, B, m + n - k) == metric_compose(A, k, B));
            DeltaGleafAsCompository<MetricDeltaGleaf> back(G);
            CHECK(back.compose(A, k, B) == metric_compose(A, k, B));
        }
    }
    {
        DistInstance di(2);
        ProbDeltaGleaf G(2);
        for (int trial = 0; trial < 60; ++trial) {
            int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4);
            int k = static_cast<int>(rng() % static_cast<unsigned>(std::min(m, n) + 1));
            auto A = di.random_simplex(m, rng);
            auto B = di.random_extension(di.act(A, target_incl(k, m)), n, rng);
            CHECK(G.glue(A, B, m + n - k) == dist_compose(A, k, B));
            DeltaGleafAsCompository<ProbDeltaGleaf> back(G);
            CHECK(back.compose(A, k, B) == dist_compose(A, k, B));
        }
    }
}

TEST_CASE("round trip through both adapters reproduces nerve composition") {
    auto C = poset_category({"bot", "a", "b", "top"}, [](int x, int y) {
        return x == y || x == 0 || y == 3;
    });
    NerveInstance inst(C);
    CompositoryAsDeltaGleaf<NerveInstance> as_gleaf(inst);
    DeltaGleafAsCompository<CompositoryAsDeltaGleaf<NerveInstance>> back(as_gleaf);
    for (int m = 0; m <= 3; ++m)
        for (const auto& A : inst.enumerate(m))
            for (int n = 0; n <= 3; ++n)
                for (int k = 0; k <= std::min(m, n); ++k)
                    for (const auto& B :
                         inst.extensions(inst.act(A, target_incl(k, m)), n)) {
                        auto expect = inst.compose(A, k, B);
                        CHECK(back.compose(A, k, B) == expect);
                        CHECK(as_gleaf.glue(A, B, m + n - k) == expect);
                    }
}

TEST_CASE("simplex-category gleaf suite: nerve and spans via the adapter") {
    SuiteConfig cfg;
    cfg.max_dim = 3;
    {
        auto C = poset_category({"bot", "a", "b", "top"}, [](int x, int y) {
            return x == y || x == 0 || y == 3;
        });
        NerveInstance inst(C);
        CompositoryAsDeltaGleaf<NerveInstance> G(inst);
        DeltaGleafSuite<CompositoryAsDeltaGleaf<NerveInstance>> suite(G, "nerve", cfg);
        expect_all_green(suite);
    }
    {
        // spans over the diamond: 1764 simplices in dimension 3, so the
        // exhaustive pairing is run one dimension lower
        cfg.max_dim = 2;
        auto L = diamond_lattice();
        SpanInstance inst(L);
        CompositoryAsDeltaGleaf<SpanInstance> G(inst);
        DeltaGleafSuite<CompositoryAsDeltaGleaf<SpanInstance>> suite(G, "spans", cfg);
        expect_all_green(suite);
    }
}

TEST_CASE("simplex-category gleaf suite: metric and probability direct instances") {
    SuiteConfig cfg;
    cfg.max_dim = 3;
    cfg.samples = 90;
    cfg.seed = 13;
    {
        MetricDeltaGleaf G(true);
        DeltaGleafSuite<MetricDeltaGleaf> suite(G, "metric_delta", cfg);
        expect_all_green(suite);
    }
    {
        ProbDeltaGleaf G(2);
        DeltaGleafSuite<ProbDeltaGleaf> suite(G, "probability_delta", cfg);
        expect_all_green(suite);
    }
}

TEST_CASE("bicovering-system axioms hold for the standard systems") {
    std::string why;
    CHECK(check_finset_bicovering_system(finset_standard_cover, 4, &why));
    CHECK(check_delta_bicovering_system(delta_standard_cover, 5, &why));

    // removing the maximal bicoverings breaks the system
    auto no_max_fs = [](unsigned A, unsigned B, unsigned C) {
        return finset_standard_cover(A, B, C) && A != C;
    };
    CHECK_FALSE(check_finset_bicovering_system(no_max_fs, 3, &why));
    CHECK(why == "maximal bicovering missing");

    auto no_max_delta = [](int m, int n, int j) {
        return delta_standard_cover(m, n, j) && m < j;
    };
    CHECK_FALSE(check_delta_bicovering_system(no_max_delta, 4, &why));
    CHECK(why == "maximal bicovering missing");

    // demanding the legs to overlap is not stable under pullbacks: a function
    // can miss the overlap while its preimages still cover
    auto overlap_required = [](unsigned A, unsigned B, unsigned C) {
        return finset_standard_cover(A, B, C) && ((A & B) != 0 || A == 0 || B == 0);
    };
    CHECK_FALSE(check_finset_bicovering_system(overlap_required, 3, &why));
}

TEST_CASE("morphism validity is surjectivity on the overlap") {
    CHECK(check_finset_morphism_characterization(3));
    CHECK(check_delta_morphism_characterization(3));

    // spot checks of the simplex-category morphism test
    CHECK(is_delta_bicovering_morphism(2, 1, 2, 1, 1, 1, degeneracy(0, 1)));
    CHECK_FALSE(is_delta_bicovering_morphism(1, 1, 2, 1, 1, 1, degeneracy(0, 1)));
    CHECK(is_delta_bicovering_morphism(0, 1, 1, 1, 1, 2, face(0, 2)));
}
