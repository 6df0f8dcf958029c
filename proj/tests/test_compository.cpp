#include <doctest.h>

#include "gleafkit/compository.hpp"
#include "gleafkit/nerve.hpp"
#include "gleafkit/probability.hpp"

using namespace gleafkit;

namespace {

// A deliberately broken instance: composition multiplies the two tables but
// forgets to divide by the shared marginal, so positive-overlap composites
// are not even normalized.
class BrokenDistInstance {
  public:
    using Simplex = Dist;

    int dim(const Simplex& P) const { return inner_.dim(P); }
    Simplex act(const Simplex& P, const MonotoneMap& f) const { return inner_.act(P, f); }
    Simplex compose(const Simplex& P, int k, const Simplex& Q) const {
        int m = dim(P), n = dim(Q);
        Dist out = Dist::zeros(m + n - k + 1, P.noutcomes);
        for (size_t i = 0; i < out.w.size(); ++i) {
            auto t = out.tuple_of(i);
            std::vector<int> tp(t.begin(), t.begin() + m + 1);
            std::vector<int> tq(t.begin() + m - k, t.end());
            out.w[i] = P.at(tp) * Q.at(tq);
        }
        return out;
    }
    bool valid(const Simplex& P) const { return inner_.valid(P); }
    nlohmann::json to_json(const Simplex& P) const { return inner_.to_json(P); }
    bool exhaustive() const { return false; }
    Simplex random_simplex(int n, Rng& rng) const { return inner_.random_simplex(n, rng); }
    Simplex random_extension(const Simplex& f, int n, Rng& rng) const {
        return inner_.random_extension(f, n, rng);
    }

  private:
    DistInstance inner_{2};
};

FinCategory chain3() {
    return poset_category({"x", "y", "z"}, [](int a, int b) { return a <= b; });
}

}  // namespace

TEST_CASE("k-composability detection") {
    auto C = chain3();
    NerveInstance inst(C);
    auto edges = inst.enumerate(1);
    // x->y and y->z share the middle object, x->y and x->z do not
    NervePath xy, yz, xz;
    for (const auto& e : edges) {
        auto j = inst.to_json(e);
        std::string s = j.dump();
        if (s.find("\"x\"") != std::string::npos && s.find("\"y\"") != std::string::npos)
            xy = e;
        if (s.find("\"y\"") != std::string::npos && s.find("\"z\"") != std::string::npos)
            yz = e;
        if (s.find("\"x\"") != std::string::npos && s.find("\"z\"") != std::string::npos &&
            s.find("\"y\"") == std::string::npos)
            xz = e;
    }
    CHECK(is_k_composable(inst, xy, 0, yz));
    CHECK_FALSE(is_k_composable(inst, yz, 0, xy));
    CHECK_THROWS_AS(is_k_composable(inst, xy, 2, yz), std::domain_error);
}

TEST_CASE("free-standing law checks agree on a nerve example") {
    auto C = chain3();
    NerveInstance inst(C);
    for (int m = 0; m <= 3; ++m)
        for (const auto& A : inst.enumerate(m))
            for (int k = 0; k <= m; ++k) {
                CHECK(check_identity_axiom(inst, A, k));
                CHECK(check_higher_identity(inst, A, k));
            }
}

TEST_CASE("harness sanity: a broken instance produces failure records") {
    BrokenDistInstance broken;
    SuiteConfig cfg;
    cfg.max_dim = 2;
    cfg.samples = 60;
    cfg.seed = 4;
    CompositorySuite<BrokenDistInstance> suite(broken, "broken", cfg);
    long long failures = 0;
    for (auto& r : suite.run_all()) failures += static_cast<long long>(r.failures.size());
    CHECK(failures > 0);

    // the failure records carry enough context to replay the case
    auto rep = suite.run_pair_axiom(
        "source_target", [&](AxiomReport& r, const Dist& A, int k, const Dist& B) {
            ++r.samples;
            if (!check_source_target(broken, A, k, B))
                r.failures.push_back({{"A", broken.to_json(A)}, {"k", k}});
        });
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures.at(0).contains("A"));
    CHECK(rep.failures.at(0).contains("k"));
}

TEST_CASE("axiom report serialization") {
    AxiomReport r{"inst", "law", 7, nlohmann::json::array()};
    CHECK(r.ok());
    auto j = r.to_json();
    CHECK(j.at("instance") == "inst");
    CHECK(j.at("axiom") == "law");
    CHECK(j.at("samples") == 7);
    r.failures.push_back({{"k", 1}});
    CHECK_FALSE(r.ok());
}

TEST_CASE("middle-face check rejects out-of-range indices") {
    auto C = chain3();
    NerveInstance inst(C);
    auto A = inst.enumerate(1).at(0);
    CHECK_THROWS_AS(check_middle_face(inst, A, 0, A, 0), std::domain_error);
}
