#include <doctest.h>

#include "gleafkit/delta.hpp"

using namespace gleafkit;

namespace {
constexpr int kMaxDim = 6;
}

TEST_CASE("face maps skip exactly one value") {
    auto f = face(2, 4);  // [3] -> [4] skipping 2
    CHECK(f.dom == 3);
    CHECK(f.cod == 4);
    CHECK(f.values == std::vector<int>{0, 1, 3, 4});
    CHECK_THROWS_AS(face(5, 4), std::domain_error);
    CHECK_THROWS_AS(face(0, 0), std::domain_error);
}

TEST_CASE("degeneracy maps repeat exactly one value") {
    auto d = degeneracy(1, 3);  // [4] -> [3] collapsing 1,2
    CHECK(d.dom == 4);
    CHECK(d.cod == 3);
    CHECK(d.values == std::vector<int>{0, 1, 1, 2, 3});
    CHECK_THROWS_AS(degeneracy(4, 3), std::domain_error);
}

TEST_CASE("inclusions pick initial and terminal segments") {
    CHECK(source_incl(2, 5).values == std::vector<int>{0, 1, 2});
    CHECK(target_incl(2, 5).values == std::vector<int>{3, 4, 5});
    CHECK(source_incl(0, 0) == identity_map(0));
    CHECK(target_incl(3, 3) == identity_map(3));
}

TEST_CASE("simplicial identity: faces commute") {
    // d_k d_j = d_j d_{k-1} as maps into [n], for j < k
    for (int n = 2; n <= kMaxDim; ++n)
        for (int k = 1; k <= n; ++k)
            for (int j = 0; j < k; ++j)
                CHECK(compose(face(k, n), face(j, n - 1)) ==
                      compose(face(j, n), face(k - 1, n - 1)));
}

TEST_CASE("simplicial identity: degeneracies commute") {
    // s_k s_j = s_j s_{k+1} as maps out of [n+2], for j <= k
    for (int n = 0; n <= kMaxDim; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= k; ++j)
                CHECK(compose(degeneracy(j, n), degeneracy(k + 1, n + 1)) ==
                      compose(degeneracy(k, n), degeneracy(j, n + 1)));
}

TEST_CASE("simplicial identity: mixed face and degeneracy") {
    for (int n = 1; n <= kMaxDim; ++n)
        for (int k = 0; k <= n - 1; ++k)
            for (int j = 0; j <= n; ++j) {
                auto mixed = compose(degeneracy(k, n - 1), face(j, n));
                if (j < k) {
                    CHECK(mixed == compose(face(j, n - 1), degeneracy(k - 1, n - 2)));
                } else if (j == k || j == k + 1) {
                    CHECK(mixed == identity_map(n - 1));
                } else {
                    CHECK(mixed == compose(face(j - 1, n - 1), degeneracy(k, n - 2)));
                }
            }
}

TEST_CASE("inclusions factor through iterated faces") {
    // s_k = d_n d_{n-1} ... d_{k+1} and t_k = d_0^{n-k}
    for (int n = 0; n <= kMaxDim; ++n)
        for (int k = 0; k <= n; ++k) {
            MonotoneMap s = identity_map(k);
            MonotoneMap t = identity_map(k);
            for (int i = k + 1; i <= n; ++i) {
                s = compose(face(i, i), s);
                t = compose(face(0, i), t);
            }
            CHECK(s == source_incl(k, n));
            CHECK(t == target_incl(k, n));
        }
}

TEST_CASE("composition of monotone maps is associative with identities") {
    for (const auto& f : all_monotone_maps(2, 3))
        for (const auto& g : all_monotone_maps(3, 2)) {
            CHECK(compose(identity_map(2), g) == g);
            CHECK(compose(g, identity_map(3)) == g);
            for (const auto& h : all_monotone_maps(2, 4))
                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        }
}

TEST_CASE("all_monotone_maps counts binomial(m+n+1, m+1)") {
    CHECK(all_monotone_maps(0, 0).size() == 1);
    CHECK(all_monotone_maps(1, 1).size() == 3);
    CHECK(all_monotone_maps(2, 2).size() == 10);
    CHECK(all_monotone_maps(3, 2).size() == 15);
    CHECK(all_monotone_maps(2, 3).size() == 20);
}

TEST_CASE("monotone map json round trip") {
    auto f = face(1, 3);
    auto j = monotone_map_to_json(f);
    CHECK(monotone_map_from_json(j) == f);
    CHECK(j.at("dom") == 2);
    CHECK(j.at("cod") == 3);
}

TEST_CASE("invalid maps are rejected") {
    CHECK_THROWS_AS(MonotoneMap(1, 1, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(MonotoneMap(1, 1, {0, 2}), std::domain_error);
    CHECK_THROWS_AS(MonotoneMap(1, 1, {0}), std::domain_error);
    CHECK_THROWS_AS(compose(face(0, 2), face(0, 2)), std::domain_error);
}
