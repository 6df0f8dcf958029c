#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <json.hpp>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gleafkit/delta.hpp"

namespace gleafkit {

// A compository instance Inst provides:
//   using Simplex = ...;                       value type with operator==
//   int dim(const Simplex&) const;
//   Simplex act(const Simplex&, const MonotoneMap&) const;   // right action
//   Simplex compose(const Simplex& A, int k, const Simplex& B) const;
//   bool valid(const Simplex&) const;          // structural invariants
//   nlohmann::json to_json(const Simplex&) const;
//   bool exhaustive() const;
// and, depending on exhaustive():
//   std::vector<Simplex> enumerate(int n) const;
//   std::vector<Simplex> extensions(const Simplex& face, int n) const;
//     // all n-simplices B with act(B, s_{dim face}) == face
//   Simplex random_simplex(int n, std::mt19937_64&) const;
//   Simplex random_extension(const Simplex& face, int n, std::mt19937_64&) const;

using Rng = std::mt19937_64;

template <class Inst>
bool is_k_composable(const Inst& C, const typename Inst::Simplex& A, int k,
                     const typename Inst::Simplex& B) {
    int m = C.dim(A), n = C.dim(B);
    if (k < 0 || k > m || k > n) throw std::domain_error("is_k_composable: k out of range");
    return C.act(A, target_incl(k, m)) == C.act(B, source_incl(k, n));
}

template <class Inst>
bool check_identity_axiom(const Inst& C, const typename Inst::Simplex& A, int k) {
    int m = C.dim(A);
    auto E = C.act(A, source_incl(k, m));
    auto F = C.act(A, target_incl(k, m));
    return C.compose(E, k, A) == A && C.compose(A, k, F) == A;
}

template <class Inst>
bool check_back_and_forth(const Inst& C, const typename Inst::Simplex& A, int k,
                          const typename Inst::Simplex& B, int i, int j) {
    int m = C.dim(A), n = C.dim(B);
    auto AB = C.compose(A, k, B);
    int N = m + n - k;
    bool first = C.compose(C.act(AB, source_incl(m + i, N)), k + i, B) == AB;
    bool second = C.compose(A, k + j, C.act(AB, target_incl(n + j, N))) == AB;
    return first && second;
}

// Compatibility with degeneracy maps; at overlap indices both applicable
// equations must hold.
template <class Inst>
bool check_degeneracy_compat(const Inst& C, const typename Inst::Simplex& A, int k,
                             const typename Inst::Simplex& B, int i) {
    int m = C.dim(A), n = C.dim(B);
    auto AB = C.compose(A, k, B);
    auto lhs = C.act(AB, degeneracy(i, m + n - k));
    bool ok = true;
    if (i <= m - k)
        ok = ok && lhs == C.compose(C.act(A, degeneracy(i, m)), k, B);
    if (i >= m)
        ok = ok && lhs == C.compose(A, k, C.act(B, degeneracy(i - m + k, n)));
    if (i >= m - k && i <= m)
        ok = ok && lhs == C.compose(C.act(A, degeneracy(i, m)), k + 1,
                                    C.act(B, degeneracy(i - m + k, n)));
    return ok;
}

template <class Inst>
bool check_face_compat(const Inst& C, const typename Inst::Simplex& A, int k,
                       const typename Inst::Simplex& B, int i) {
    int m = C.dim(A), n = C.dim(B);
    if (i >= m - k && i <= m)
        throw std::domain_error("check_face_compat: axiom says nothing for m-k <= i <= m");
    auto AB = C.compose(A, k, B);
    auto lhs = C.act(AB, face(i, m + n - k));
    if (i < m - k) return lhs == C.compose(C.act(A, face(i, m)), k, B);
    return lhs == C.compose(A, k, C.act(B, face(i - m + k, n)));
}

// The extra face equation on the common-face range m-k <= i <= m. Holds for
// nerves of categories and typically fails elsewhere.
template <class Inst>
bool check_middle_face(const Inst& C, const typename Inst::Simplex& A, int k,
                       const typename Inst::Simplex& B, int i) {
    int m = C.dim(A), n = C.dim(B);
    if (k < 1 || m < 1 || n < 1 || i < m - k || i > m)
        throw std::domain_error("check_middle_face: index out of range");
    auto AB = C.compose(A, k, B);
    auto lhs = C.act(AB, face(i, m + n - k));
    auto rhs = C.compose(C.act(A, face(i, m)), k - 1, C.act(B, face(i - m + k, n)));
    return lhs == rhs;
}

template <class Inst>
bool check_source_target(const Inst& C, const typename Inst::Simplex& A, int k,
                         const typename Inst::Simplex& B) {
    int m = C.dim(A), n = C.dim(B);
    auto AB = C.compose(A, k, B);
    int N = m + n - k;
    return C.act(AB, source_incl(m, N)) == A && C.act(AB, target_incl(n, N)) == B;
}

template <class Inst>
bool check_two_step(const Inst& C, const typename Inst::Simplex& A, int k,
                    const typename Inst::Simplex& B, int i, int j) {
    int m = C.dim(A), n = C.dim(B);
    auto AB = C.compose(A, k, B);
    auto Ati = C.act(A, target_incl(i, m));
    auto Bsj = C.act(B, source_incl(j, n));
    return C.compose(A, i, C.compose(Ati, k, B)) == AB &&
           C.compose(C.compose(A, k, Bsj), j, B) == AB;
}

template <class Inst>
bool check_st_comp(const Inst& C, const typename Inst::Simplex& A, int k,
                   const typename Inst::Simplex& B, int i, int j) {
    int m = C.dim(A), n = C.dim(B);
    auto AB = C.compose(A, k, B);
    int N = m + n - k;
    bool first = C.act(AB, source_incl(i, N)) ==
                 C.compose(A, k, C.act(B, source_incl(i - m + k, n)));
    bool second = C.act(AB, target_incl(j, N)) ==
                  C.compose(C.act(A, target_incl(j - n + k, m)), k, B);
    return first && second;
}

template <class Inst>
bool check_associativity(const Inst& C, const typename Inst::Simplex& A, int j,
                         const typename Inst::Simplex& B, int k,
                         const typename Inst::Simplex& Cc) {
    return C.compose(A, j, C.compose(B, k, Cc)) == C.compose(C.compose(A, j, B), k, Cc);
}

template <class Inst>
bool check_higher_identity(const Inst& C, const typename Inst::Simplex& A, int k) {
    int m = C.dim(A);
    auto F = C.act(A, target_incl(k, m));
    auto Fdeg = C.act(F, degeneracy(k, k));
    auto comp = C.compose(A, k, Fdeg);
    if (!(comp == C.act(A, degeneracy(m, m)))) return false;
    if (!(C.act(comp, face(m, m + 1)) == A)) return false;
    if (!(C.act(comp, face(m + 1, m + 1)) == A)) return false;
    auto E = C.act(A, source_incl(k, m));
    auto Edeg = C.act(E, degeneracy(0, k));
    return C.compose(Edeg, k, A) == C.act(A, degeneracy(0, m));
}

// ---------------------------------------------------------------------------
// Suite runner

struct AxiomReport {
    std::string instance;
    std::string axiom;
    long long samples = 0;
    nlohmann::json failures = nlohmann::json::array();

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const {
        return {{"instance", instance}, {"axiom", axiom}, {"samples", samples},
                {"failures", failures}};
    }
};

struct SuiteConfig {
    int max_dim = 4;
    int samples = 200;     // total sampled pairs per axiom (random instances)
    unsigned long long seed = 1;
    int functoriality_map_cap = 4;  // all maps with dom, cod up to this
};

template <class Inst>
class CompositorySuite {
  public:
    using Simplex = typename Inst::Simplex;

    CompositorySuite(const Inst& inst, std::string name, SuiteConfig cfg)
        : inst_(inst), name_(std::move(name)), cfg_(cfg) {}

    std::vector<AxiomReport> run_all() {
        std::vector<AxiomReport> out;
        out.push_back(run_functoriality());
        out.push_back(run_identity());
        out.push_back(run_higher_identity());
        out.push_back(run_pair_axiom("back_and_forth", [this](AxiomReport& r, const Simplex& A,
                                                              int k, const Simplex& B) {
            int m = inst_.dim(A), n = inst_.dim(B);
            for (int i = 0; i <= n - k; ++i)
                for (int j = 0; j <= m - k; ++j)
                    record(r, check_back_and_forth(inst_, A, k, B, i, j), A, k, B, i, j);
        }));
        out.push_back(run_pair_axiom("degeneracy_compat", [this](AxiomReport& r, const Simplex& A,
                                                                 int k, const Simplex& B) {
            int m = inst_.dim(A), n = inst_.dim(B);
            for (int i = 0; i <= m + n - k; ++i)
                record(r, check_degeneracy_compat(inst_, A, k, B, i), A, k, B, i, -1);
        }));
        out.push_back(run_pair_axiom("face_compat", [this](AxiomReport& r, const Simplex& A,
                                                           int k, const Simplex& B) {
            int m = inst_.dim(A), n = inst_.dim(B);
            for (int i = 0; i <= m + n - k; ++i) {
                if (i >= m - k && i <= m) continue;
                record(r, check_face_compat(inst_, A, k, B, i), A, k, B, i, -1);
            }
        }));
        out.push_back(run_pair_axiom("source_target", [this](AxiomReport& r, const Simplex& A,
                                                             int k, const Simplex& B) {
            record(r, check_source_target(inst_, A, k, B), A, k, B, -1, -1);
        }));
        out.push_back(run_pair_axiom("composition_valid", [this](AxiomReport& r, const Simplex& A,
                                                                 int k, const Simplex& B) {
            record(r, inst_.valid(inst_.compose(A, k, B)), A, k, B, -1, -1);
        }));
        out.push_back(run_pair_axiom("two_step", [this](AxiomReport& r, const Simplex& A, int k,
                                                        const Simplex& B) {
            int m = inst_.dim(A), n = inst_.dim(B);
            for (int i = k; i <= m; ++i)
                for (int j = k; j <= n; ++j)
                    record(r, check_two_step(inst_, A, k, B, i, j), A, k, B, i, j);
        }));
        out.push_back(run_pair_axiom("st_comp", [this](AxiomReport& r, const Simplex& A, int k,
                                                       const Simplex& B) {
            int m = inst_.dim(A), n = inst_.dim(B);
            for (int i = m; i <= m + n - k; ++i)
                for (int j = n; j <= m + n - k; ++j)
                    record(r, check_st_comp(inst_, A, k, B, i, j), A, k, B, i, j);
        }));
        out.push_back(run_associativity());
        return out;
    }

    AxiomReport run_functoriality() {
        AxiomReport r{name_, "functoriality", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0xf1f1f1f1ULL);
        int cap = cfg_.functoriality_map_cap;
        for (int n = 0; n <= cap; ++n) {
            auto sims = simplices_of_dim(n, rng);
            for (const auto& A : sims) {
                if (!(inst_.act(A, identity_map(n)) == A)) {
                    ++r.samples;
                    r.failures.push_back({{"case", "identity_action"}, {"A", inst_.to_json(A)}});
                    continue;
                }
                for (int b = 0; b <= cap; ++b)
                    for (const auto& g : all_monotone_maps(b, n))
                        for (int a = 0; a <= cap; ++a)
                            for (const auto& f : all_monotone_maps(a, b)) {
                                ++r.samples;
                                auto lhs = inst_.act(inst_.act(A, g), f);
                                auto rhs = inst_.act(A, compose(g, f));
                                if (!(lhs == rhs))
                                    r.failures.push_back({{"case", "functoriality"},
                                                          {"A", inst_.to_json(A)},
                                                          {"g", g.str()},
                                                          {"f", f.str()}});
                            }
            }
        }
        return r;
    }

    AxiomReport run_identity() {
        AxiomReport r{name_, "identity", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0x1d1d1d1dULL);
        for (int m = 0; m <= cfg_.max_dim; ++m)
            for (const auto& A : simplices_of_dim(m, rng))
                for (int k = 0; k <= m; ++k) {
                    ++r.samples;
                    if (!check_identity_axiom(inst_, A, k))
                        r.failures.push_back({{"A", inst_.to_json(A)}, {"k", k}});
                }
        return r;
    }

    AxiomReport run_higher_identity() {
        AxiomReport r{name_, "higher_identity", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0x41414141ULL);
        for (int m = 0; m <= cfg_.max_dim; ++m)
            for (const auto& A : simplices_of_dim(m, rng))
                for (int k = 0; k <= m; ++k) {
                    ++r.samples;
                    if (!check_higher_identity(inst_, A, k))
                        r.failures.push_back({{"A", inst_.to_json(A)}, {"k", k}});
                }
        return r;
    }

    template <class Fn>
    AxiomReport run_pair_axiom(const std::string& axiom, Fn&& body) {
        AxiomReport r{name_, axiom, 0, nlohmann::json::array()};
        for_each_pair([&](const Simplex& A, int k, const Simplex& B) { body(r, A, k, B); },
                      hash_name(axiom));
        return r;
    }

    AxiomReport run_associativity() {
        AxiomReport r{name_, "associativity", 0, nlohmann::json::array()};
        for_each_triple([&](const Simplex& A, int j, const Simplex& B, int k, const Simplex& Cc) {
            ++r.samples;
            if (!check_associativity(inst_, A, j, B, k, Cc))
                r.failures.push_back({{"A", inst_.to_json(A)},
                                      {"j", j},
                                      {"B", inst_.to_json(B)},
                                      {"k", k},
                                      {"C", inst_.to_json(Cc)}});
        });
        return r;
    }

    // Search for a violation of the middle-range face equation. Returns a
    // report whose single "failure" entry is the found witness (callers that
    // expect a violation treat an empty list as the failure).
    AxiomReport run_middle_face(bool expect_hold) {
        AxiomReport r{name_, expect_hold ? "middle_face_holds" : "middle_face_violation", 0,
                      nlohmann::json::array()};
        bool found = false;
        for_each_pair(
            [&](const Simplex& A, int k, const Simplex& B) {
                int m = inst_.dim(A), n = inst_.dim(B);
                if (k < 1 || m < 1 || n < 1) return;
                for (int i = m - k; i <= m; ++i) {
                    ++r.samples;
                    bool holds = check_middle_face(inst_, A, k, B, i);
                    if (expect_hold && !holds)
                        r.failures.push_back(
                            {{"A", inst_.to_json(A)}, {"k", k}, {"B", inst_.to_json(B)}, {"i", i}});
                    if (!expect_hold && !holds && !found) {
                        found = true;
                        r.failures.push_back({{"witness", true},
                                              {"A", inst_.to_json(A)},
                                              {"k", k},
                                              {"B", inst_.to_json(B)},
                                              {"i", i}});
                    }
                }
            },
            hash_name("middle_face"));
        return r;
    }

    // Iterate k-composable pairs: exhaustive for enumerable instances, seeded
    // samples otherwise.
    template <class Fn>
    void for_each_pair(Fn&& fn, unsigned long long salt = 0) {
        if constexpr (requires { inst_.enumerate(0); }) {
            if (inst_.exhaustive()) {
                for (int m = 0; m <= cfg_.max_dim; ++m)
                    for (const auto& A : inst_.enumerate(m))
                        for (int n = 0; n <= cfg_.max_dim; ++n)
                            for (int k = 0; k <= std::min(m, n); ++k) {
                                auto face = inst_.act(A, target_incl(k, m));
                                for (const auto& B : inst_.extensions(face, n)) fn(A, k, B);
                            }
                return;
            }
        }
        if constexpr (requires(Rng& r) { inst_.random_simplex(0, r); }) {
            Rng rng(cfg_.seed ^ salt);
            std::vector<std::tuple<int, int, int>> shapes;
            for (int m = 0; m <= cfg_.max_dim; ++m)
                for (int n = 0; n <= cfg_.max_dim; ++n)
                    for (int k = 0; k <= std::min(m, n); ++k) shapes.emplace_back(m, k, n);
            int produced = 0;
            while (produced < cfg_.samples) {
                for (auto [m, k, n] : shapes) {
                    if (produced >= cfg_.samples) break;
                    auto A = inst_.random_simplex(m, rng);
                    auto B = inst_.random_extension(inst_.act(A, target_incl(k, m)), n, rng);
                    fn(A, k, B);
                    ++produced;
                }
            }
        } else {
            throw std::logic_error("instance supports neither enumeration nor sampling");
        }
    }

    template <class Fn>
    void for_each_triple(Fn&& fn) {
        int cap = inst_.exhaustive() ? cfg_.max_dim : std::min(cfg_.max_dim, 3);
        if constexpr (requires { inst_.enumerate(0); }) {
            if (inst_.exhaustive()) {
                for (int l = 0; l <= cap; ++l)
                    for (const auto& A : inst_.enumerate(l))
                        for (int m = 0; m <= cap; ++m)
                            for (int j = 0; j <= std::min(l, m); ++j)
                                for (const auto& B :
                                     inst_.extensions(inst_.act(A, target_incl(j, l)), m))
                                    for (int n = 0; n <= cap; ++n)
                                        for (int k = 0; k <= std::min(m, n); ++k)
                                            for (const auto& Cc : inst_.extensions(
                                                     inst_.act(B, target_incl(k, m)), n))
                                                fn(A, j, B, k, Cc);
                return;
            }
        }
        if constexpr (requires(Rng& r) { inst_.random_simplex(0, r); }) {
            Rng rng(cfg_.seed ^ 0x77777333ULL);
            std::vector<std::array<int, 5>> shapes;
            for (int l = 0; l <= cap; ++l)
                for (int m = 0; m <= cap; ++m)
                    for (int j = 0; j <= std::min(l, m); ++j)
                        for (int n = 0; n <= cap; ++n)
                            for (int k = 0; k <= std::min(m, n); ++k)
                                shapes.push_back({l, j, m, k, n});
            int produced = 0;
            while (produced < cfg_.samples) {
                for (auto [l, j, m, k, n] : shapes) {
                    if (produced >= cfg_.samples) break;
                    auto A = inst_.random_simplex(l, rng);
                    auto B = inst_.random_extension(inst_.act(A, target_incl(j, l)), m, rng);
                    auto Cc = inst_.random_extension(inst_.act(B, target_incl(k, m)), n, rng);
                    fn(A, j, B, k, Cc);
                    ++produced;
                }
            }
        } else {
            throw std::logic_error("instance supports neither enumeration nor sampling");
        }
    }

  private:
    std::vector<Simplex> simplices_of_dim(int n, Rng& rng) {
        if constexpr (requires { inst_.enumerate(0); }) {
            if (inst_.exhaustive()) return inst_.enumerate(n);
        }
        std::vector<Simplex> out;
        if constexpr (requires(Rng& r) { inst_.random_simplex(0, r); }) {
            int count = std::max(1, cfg_.samples / (cfg_.max_dim + 1));
            for (int i = 0; i < count; ++i) out.push_back(inst_.random_simplex(n, rng));
        }
        return out;
    }

    void record(AxiomReport& r, bool ok, const Simplex& A, int k, const Simplex& B, int i, int j) {
        ++r.samples;
        if (ok) return;
        nlohmann::json f{{"A", inst_.to_json(A)}, {"k", k}, {"B", inst_.to_json(B)}};
        if (i >= 0) f["i"] = i;
        if (j >= 0) f["j"] = j;
        r.failures.push_back(std::move(f));
    }

    static unsigned long long hash_name(const std::string& s) {
        return std::hash<std::string>{}(s);
    }

    const Inst& inst_;
    std::string name_;
    SuiteConfig cfg_;
};

}  // namespace gleafkit
