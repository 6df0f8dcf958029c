#pragma once

#include <functional>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gleafkit/compository.hpp"
#include "gleafkit/delta.hpp"
#include "gleafkit/metric.hpp"
#include "gleafkit/probability.hpp"
#include "gleafkit/topology.hpp"

namespace gleafkit {

// ---------------------------------------------------------------------------
// Gleaves over finite sets.
//
// A finite-set gleaf instance Inst provides:
//   using Section = ...;                        value type with operator==
//   int carrier(const Section&) const;          size of the underlying set
//   bool valid(const Section&) const;
//   Section pull(const Section& s, const std::vector<int>& f) const;
//     // restriction along an arbitrary function f: {0..|f|-1} -> carrier(s)
//   Section glue(const Section& sA, const std::vector<int>& inclA,
//                const Section& sB, const std::vector<int>& inclB,
//                int size_C) const;              // throws on incompatibility
//   bool inclusions_only() const;
//     // true when the presheaf is only defined on subset inclusions (the
//     // attribute-lattice case); partial naturality then only uses those
//   bool exhaustive(int n) const;                // sections(n) is complete
//   std::vector<Section> sections(int n, std::mt19937_64&, int budget) const;
//   nlohmann::json to_json(const Section&) const;

// Subsets of {0..N-1} are passed around as strictly increasing index vectors,
// which double as the inclusion maps into the ambient carrier.
std::vector<int> mask_to_vec(unsigned mask, int N);
std::vector<int> vec_intersect(const std::vector<int>& a, const std::vector<int>& b);
bool vec_subset(const std::vector<int>& a, const std::vector<int>& b);
/// Local positions of the elements of `inside` within `sub` (inside must be a
/// subset of sub).
std::vector<int> local_positions(const std::vector<int>& sub, const std::vector<int>& inside);

struct GleafSuiteConfig {
    int max_size = 3;             // carrier cap for most axioms
    int naturality_max_size = 3;  // carrier cap for partial naturality (C and C')
    int samples = 200;            // per-axiom budget for sampled instances
    int pool = 16;                // sections per carrier for sampled instances
    int pool_cap = 64;            // evenly subsample larger exhaustive pools
    unsigned long long seed = 1;
    long long max_checks = 500000;  // hard per-axiom cap for exhaustive instances
};

template <class Inst>
class GleafSuite {
  public:
    using Section = typename Inst::Section;

    GleafSuite(const Inst& inst, std::string name, GleafSuiteConfig cfg)
        : inst_(inst), name_(std::move(name)), cfg_(cfg) {}

    std::vector<AxiomReport> run_all() {
        std::vector<AxiomReport> out;
        out.push_back(run_functoriality());
        auto both = run_glue_and_recover();
        out.push_back(both.first);
        out.push_back(both.second);
        out.push_back(run_identity());
        out.push_back(run_back_forth());
        out.push_back(run_partial_naturality());
        out.push_back(run_two_step());
        out.push_back(run_associativity());
        return out;
    }

    // Presheaf laws: pull along the identity is the identity, and pulling
    // along f then g equals pulling along f after g.
    AxiomReport run_functoriality() {
        AxiomReport r{name_, "functoriality", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0xf0f0f0f0ULL);
        for (int n = 1; n <= cfg_.max_size && r.samples < cfg_.max_checks; ++n) {
            std::vector<int> id(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
            for (const auto& s : pool(n, rng)) {
                ++r.samples;
                if (!(inst_.pull(s, id) == s))
                    r.failures.push_back({{"case", "identity"}, {"s", inst_.to_json(s)}});
                for (const auto& f : small_maps(n, rng))
                    for (const auto& g : small_maps(static_cast<int>(f.size()), rng)) {
                        if (r.samples >= cfg_.max_checks) return r;
                        std::vector<int> fg(g.size());
                        for (size_t i = 0; i < g.size(); ++i)
                            fg[i] = f[static_cast<size_t>(g[i])];
                        ++r.samples;
                        if (!(inst_.pull(inst_.pull(s, f), g) == inst_.pull(s, fg)))
                            r.failures.push_back({{"case", "composition"},
                                                  {"s", inst_.to_json(s)},
                                                  {"f", f},
                                                  {"g", g}});
                    }
            }
        }
        return r;
    }

    // Gluing any compatible pair yields a structurally valid section whose
    // restrictions to the two legs recover the inputs.
    std::pair<AxiomReport, AxiomReport> run_glue_and_recover() {
        AxiomReport rv{name_, "glue_valid", 0, nlohmann::json::array()};
        AxiomReport rr{name_, "recover", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0x9e9e9e9eULL);
        for (int N = 1; N <= cfg_.max_size; ++N) {
            unsigned full = (1u << N) - 1u;
            for (unsigned Am = 0; Am <= full; ++Am)
                for (unsigned Bm = 0; Bm <= full; ++Bm) {
                    if ((Am | Bm) != full) continue;
                    if (rv.samples >= cfg_.max_checks) return {rv, rr};
                    auto A = mask_to_vec(Am, N), B = mask_to_vec(Bm, N);
                    for_compatible_pairs(A, B, N, rng, [&](const Section& sA, const Section& sB) {
                        if (rv.samples >= cfg_.max_checks) return;
                        ++rv.samples;
                        ++rr.samples;
                        Section g = inst_.glue(sA, A, sB, B, N);
                        if (!(inst_.valid(g) && inst_.carrier(g) == N))
                            rv.failures.push_back(fail_pair(sA, A, sB, B));
                        if (!(inst_.pull(g, A) == sA && inst_.pull(g, B) == sB))
                            rr.failures.push_back(fail_pair(sA, A, sB, B));
                    });
                }
        }
        return {rv, rr};
    }

    // When one leg is the whole carrier, gluing is the projection onto it.
    AxiomReport run_identity() {
        AxiomReport r{name_, "identity", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0x1d1d1d1dULL);
        for (int N = 1; N <= cfg_.max_size; ++N) {
            unsigned full = (1u << N) - 1u;
            auto all = mask_to_vec(full, N);
            for (unsigned Sm = 0; Sm <= full; ++Sm) {
                if (r.samples >= cfg_.max_checks) return r;
                auto S = mask_to_vec(Sm, N);
                for (const auto& sC : pool(N, rng)) {
                    if (r.samples >= cfg_.max_checks) return r;
                    ++r.samples;
                    Section sS = inst_.pull(sC, S);
                    bool ok = inst_.glue(sC, all, sS, S, N) == sC &&
                              inst_.glue(sS, S, sC, all, N) == sC;
                    if (!ok) r.failures.push_back(fail_pair(sC, all, sS, S));
                }
            }
        }
        return r;
    }

    // Nested covers: with A' inside A and both (A',B) and (A,B) covering C,
    // regluing the restrictions of a glued section reproduces it (and
    // symmetrically for B' inside B).
    AxiomReport run_back_forth() {
        AxiomReport r{name_, "back_and_forth", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0xbfbfbfbfULL);
        for (int N = 1; N <= cfg_.max_size; ++N) {
            unsigned full = (1u << N) - 1u;
            for (unsigned Am = 0; Am <= full; ++Am)
                for (unsigned Bm = 0; Bm <= full; ++Bm) {
                    if ((Am | Bm) != full) continue;
                    if (r.samples >= cfg_.max_checks) return r;
                    auto A = mask_to_vec(Am, N), B = mask_to_vec(Bm, N);
                    for (unsigned Pm = 0; Pm <= full; ++Pm) {
                        if ((Pm & Am) != Pm) continue;  // primed leg inside A
                        if ((Pm | Bm) != full) continue;
                        if (r.samples >= cfg_.max_checks) return r;
                        auto P = mask_to_vec(Pm, N);
                        for_compatible_pairs(
                            P, B, N, rng, [&](const Section& sP, const Section& sB) {
                                if (r.samples >= cfg_.max_checks) return;
                                ++r.samples;
                                Section s = inst_.glue(sP, P, sB, B, N);
                                Section t =
                                    inst_.glue(inst_.pull(s, A), A, inst_.pull(s, B), B, N);
                                if (!(t == s)) r.failures.push_back(fail_pair(sP, P, sB, B));
                            });
                    }
                    // symmetric side: primed leg inside B
                    for (unsigned Qm = 0; Qm <= full; ++Qm) {
                        if ((Qm & Bm) != Qm) continue;
                        if ((Am | Qm) != full) continue;
                        if (r.samples >= cfg_.max_checks) return r;
                        auto Q = mask_to_vec(Qm, N);
                        for_compatible_pairs(
                            A, Q, N, rng, [&](const Section& sA, const Section& sQ) {
                                if (r.samples >= cfg_.max_checks) return;
                                ++r.samples;
                                Section s = inst_.glue(sA, A, sQ, Q, N);
                                Section t =
                                    inst_.glue(inst_.pull(s, A), A, inst_.pull(s, B), B, N);
                                if (!(t == s)) r.failures.push_back(fail_pair(sA, A, sQ, Q));
                            });
                    }
                }
        }
        return r;
    }

    // Restricting a glued section along a morphism of covers equals gluing
    // the restricted sections. For presheaves defined on all functions the
    // morphisms are maps q: C' -> C carrying A' into A, B' into B and mapping
    // the primed intersection onto the unprimed one; in the inclusions-only
    // case they are the lattice morphisms A' inside A with equal intersections.
    AxiomReport run_partial_naturality() {
        AxiomReport r{name_, "partial_naturality", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0x7a7a7a7aULL);
        if (inst_.inclusions_only()) {
            run_naturality_lattice(r, rng);
        } else {
            run_naturality_functions(r, rng);
        }
        return r;
    }

    // A section over A' can be glued with one over B by first gluing it with
    // the restriction of the latter to the overlap of A and B, and then
    // gluing the result with the original; symmetrically on the other leg.
    AxiomReport run_two_step() {
        AxiomReport r{name_, "two_step", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0x25252525ULL);
        for (int N = 1; N <= cfg_.max_size; ++N) {
            unsigned full = (1u << N) - 1u;
            for (unsigned Am = 0; Am <= full; ++Am)
                for (unsigned Bm = 0; Bm <= full; ++Bm) {
                    if ((Am | Bm) != full) continue;
                    if (r.samples >= cfg_.max_checks) return r;
                    auto A = mask_to_vec(Am, N), B = mask_to_vec(Bm, N);
                    auto AB = mask_to_vec(Am & Bm, N);
                    auto ABinA = local_positions(A, AB);
                    auto ABinB = local_positions(B, AB);
                    for (unsigned Pm = 0; Pm <= full; ++Pm) {
                        if ((Pm & Am) != Pm) continue;
                        if ((Pm | (Am & Bm)) != Am) continue;  // (A', A cap B) covers A
                        if (r.samples >= cfg_.max_checks) return r;
                        auto P = mask_to_vec(Pm, N);
                        auto PinA = local_positions(A, P);
                        for_compatible_pairs(
                            P, B, N, rng, [&](const Section& sP, const Section& sB) {
                                if (r.samples >= cfg_.max_checks) return;
                                ++r.samples;
                                Section mid = inst_.pull(sB, ABinB);
                                Section sA = inst_.glue(sP, PinA, mid, ABinA,
                                                        static_cast<int>(A.size()));
                                bool ok = inst_.glue(sP, P, sB, B, N) ==
                                          inst_.glue(sA, A, sB, B, N);
                                if (!ok) r.failures.push_back(fail_pair(sP, P, sB, B));
                            });
                    }
                    // mirrored nesting: (A cap B, B') covers B
                    for (unsigned Qm = 0; Qm <= full; ++Qm) {
                        if ((Qm & Bm) != Qm) continue;
                        if (((Am & Bm) | Qm) != Bm) continue;
                        if (r.samples >= cfg_.max_checks) return r;
                        auto Q = mask_to_vec(Qm, N);
                        auto QinB = local_positions(B, Q);
                        for_compatible_pairs(
                            A, Q, N, rng, [&](const Section& sA, const Section& sQ) {
                                if (r.samples >= cfg_.max_checks) return;
                                ++r.samples;
                                Section mid = inst_.pull(sA, ABinA);
                                Section sB = inst_.glue(mid, ABinB, sQ, QinB,
                                                        static_cast<int>(B.size()));
                                bool ok = inst_.glue(sA, A, sQ, Q, N) ==
                                          inst_.glue(sA, A, sB, B, N);
                                if (!ok) r.failures.push_back(fail_pair(sA, A, sQ, Q));
                            });
                    }
                }
        }
        return r;
    }

    // With A = A' together with the overlap and B = the overlap together with
    // B', the two ways of gluing a triple (section over A', section over the
    // overlap, section over B') agree.
    AxiomReport run_associativity() {
        AxiomReport r{name_, "associativity", 0, nlohmann::json::array()};
        Rng rng(cfg_.seed ^ 0xa5a5a5a5ULL);
        for (int N = 1; N <= cfg_.max_size; ++N) {
            unsigned full = (1u << N) - 1u;
            for (unsigned Am = 0; Am <= full; ++Am)
                for (unsigned Bm = 0; Bm <= full; ++Bm) {
                    if ((Am | Bm) != full) continue;
                    if (r.samples >= cfg_.max_checks) return r;
                    unsigned ABm = Am & Bm;
                    auto A = mask_to_vec(Am, N), B = mask_to_vec(Bm, N);
                    auto AB = mask_to_vec(ABm, N);
                    auto ABinA = local_positions(A, AB), ABinB = local_positions(B, AB);
                    for (unsigned Pm = 0; Pm <= full; ++Pm) {
                        if ((Pm & Am) != Pm || (Pm | ABm) != Am) continue;
                        if (r.samples >= cfg_.max_checks) return r;
                        auto P = mask_to_vec(Pm, N);
                        auto PinA = local_positions(A, P);
                        for (unsigned Qm = 0; Qm <= full; ++Qm) {
                            if ((Qm & Bm) != Qm || (ABm | Qm) != Bm) continue;
                            if (r.samples >= cfg_.max_checks) return r;
                            auto Q = mask_to_vec(Qm, N);
                            auto QinB = local_positions(B, Q);
                            for_compatible_triples(
                                P, AB, Q, N, rng,
                                [&](const Section& sP, const Section& mid, const Section& sQ) {
                                    if (r.samples >= cfg_.max_checks) return;
                                    ++r.samples;
                                    Section left = inst_.glue(
                                        inst_.glue(sP, PinA, mid, ABinA,
                                                   static_cast<int>(A.size())),
                                        A, sQ, Q, N);
                                    Section right = inst_.glue(
                                        sP, P,
                                        inst_.glue(mid, ABinB, sQ, QinB,
                                                   static_cast<int>(B.size())),
                                        B, N);
                                    if (!(left == right)) {
                                        r.failures.push_back(
                                            {{"sA'", inst_.to_json(sP)},
                                             {"mid", inst_.to_json(mid)},
                                             {"sB'", inst_.to_json(sQ)},
                                             {"A'", P},
                                             {"overlap", AB},
                                             {"B'", Q}});
                                    }
                                });
                        }
                    }
                }
        }
        return r;
    }

  private:
    const std::vector<Section>& pool(int n, Rng& rng) {
        auto it = pools_.find(n);
        if (it != pools_.end()) return it->second;
        std::vector<Section> v = inst_.sections(n, rng, cfg_.pool);
        if (static_cast<int>(v.size()) > cfg_.pool_cap) {
            std::vector<Section> sub;
            sub.reserve(static_cast<size_t>(cfg_.pool_cap));
            for (int i = 0; i < cfg_.pool_cap; ++i)
                sub.push_back(v[static_cast<size_t>(i) * v.size() /
                               static_cast<size_t>(cfg_.pool_cap)]);
            v = std::move(sub);
        }
        return pools_.emplace(n, std::move(v)).first->second;
    }

    // A few functions into {0..n-1} for functoriality checks.
    std::vector<std::vector<int>> small_maps(int n, Rng& rng) {
        std::vector<std::vector<int>> out;
        if (n == 0) return {{}};  // only the empty map targets an empty carrier
        for (int k = 0; k <= std::min(n + 1, 3); ++k) {
            std::vector<int> f(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                f[static_cast<size_t>(i)] = static_cast<int>(rng() % static_cast<unsigned>(n));
            out.push_back(std::move(f));
        }
        return out;
    }

    // Iterate compatible pairs of sections over the subsets A, B of {0..N-1}:
    // the full filtered product for enumerable carriers, restrictions of a
    // common random section otherwise.
    template <class Fn>
    void for_compatible_pairs(const std::vector<int>& A, const std::vector<int>& B, int N,
                              Rng& rng, Fn&& fn) {
        auto inter = vec_intersect(A, B);
        auto interInA = local_positions(A, inter), interInB = local_positions(B, inter);
        int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
        if (inst_.exhaustive(na) && inst_.exhaustive(nb)) {
            const auto& SA = pool(na, rng);
            const auto& SB = pool(nb, rng);
            std::vector<Section> pa, pb;
            pa.reserve(SA.size());
            pb.reserve(SB.size());
            for (const auto& s : SA) pa.push_back(inst_.pull(s, interInA));
            for (const auto& s : SB) pb.push_back(inst_.pull(s, interInB));
            for (size_t i = 0; i < SA.size(); ++i)
                for (size_t j = 0; j < SB.size(); ++j)
                    if (pa[i] == pb[j]) fn(SA[i], SB[j]);
        } else {
            int budget = std::max(1, cfg_.samples / 32);
            for (int t = 0; t < budget; ++t) {
                Section m = inst_.sections(N, rng, 1).at(0);
                fn(inst_.pull(m, A), inst_.pull(m, B));
            }
        }
    }

    template <class Fn>
    void for_compatible_triples(const std::vector<int>& P, const std::vector<int>& AB,
                                const std::vector<int>& Q, int N, Rng& rng, Fn&& fn) {
        auto iPA = vec_intersect(P, AB);
        auto iBQ = vec_intersect(AB, Q);
        auto iPA_inP = local_positions(P, iPA), iPA_inM = local_positions(AB, iPA);
        auto iBQ_inM = local_positions(AB, iBQ), iBQ_inQ = local_positions(Q, iBQ);
        int np = static_cast<int>(P.size()), nm = static_cast<int>(AB.size()),
            nq = static_cast<int>(Q.size());
        if (inst_.exhaustive(np) && inst_.exhaustive(nm) && inst_.exhaustive(nq)) {
            const auto& SP = pool(np, rng);
            const auto& SM = pool(nm, rng);
            const auto& SQ = pool(nq, rng);
            for (const auto& sm : SM) {
                auto left = inst_.pull(sm, iPA_inM);
                auto right = inst_.pull(sm, iBQ_inM);
                for (const auto& sp : SP) {
                    if (!(inst_.pull(sp, iPA_inP) == left)) continue;
                    for (const auto& sq : SQ)
                        if (inst_.pull(sq, iBQ_inQ) == right) fn(sp, sm, sq);
                }
            }
        } else {
            int budget = std::max(1, cfg_.samples / 32);
            for (int t = 0; t < budget; ++t) {
                Section m = inst_.sections(N, rng, 1).at(0);
                fn(inst_.pull(m, P), inst_.pull(m, AB), inst_.pull(m, Q));
            }
        }
    }

    void run_naturality_functions(AxiomReport& r, Rng& rng) {
        int cap = cfg_.naturality_max_size;
        for (int N = 1; N <= cap; ++N) {
            unsigned full = (1u << N) - 1u;
            for (int Np = 1; Np <= cap; ++Np) {
                unsigned fullp = (1u << Np) - 1u;
                long long nfuncs = 1;
                for (int i = 0; i < Np; ++i) nfuncs *= N;
                for (long long code = 0; code < nfuncs; ++code) {
                    std::vector<int> q(static_cast<size_t>(Np));
                    long long c = code;
                    for (int i = 0; i < Np; ++i) {
                        q[static_cast<size_t>(i)] = static_cast<int>(c % N);
                        c /= N;
                    }
                    for (unsigned Am = 0; Am <= full; ++Am)
                        for (unsigned Bm = 0; Bm <= full; ++Bm) {
                            if ((Am | Bm) != full) continue;
                            for (unsigned Apm = 0; Apm <= fullp; ++Apm)
                                for (unsigned Bpm = 0; Bpm <= fullp; ++Bpm) {
                                    if ((Apm | Bpm) != fullp) continue;
                                    if (r.samples >= cfg_.max_checks) return;
                                    check_naturality_config(r, rng, N, Am, Bm, Np, Apm, Bpm, q);
                                }
                        }
                }
            }
        }
    }

    void check_naturality_config(AxiomReport& r, Rng& rng, int N, unsigned Am, unsigned Bm,
                                 int Np, unsigned Apm, unsigned Bpm,
                                 const std::vector<int>& q) {
        auto A = mask_to_vec(Am, N), B = mask_to_vec(Bm, N);
        auto Ap = mask_to_vec(Apm, Np), Bp = mask_to_vec(Bpm, Np);
        // q must carry A' into A, B' into B and the primed intersection onto
        // the unprimed one
        for (int x : Ap)
            if (!((Am >> q[static_cast<size_t>(x)]) & 1u)) return;
        for (int x : Bp)
            if (!((Bm >> q[static_cast<size_t>(x)]) & 1u)) return;
        unsigned hit = 0;
        for (int x : vec_intersect(Ap, Bp)) hit |= (1u << q[static_cast<size_t>(x)]);
        if ((hit & (Am & Bm)) != (Am & Bm)) return;
        // local components of q on the two legs
        std::vector<int> posA(static_cast<size_t>(N), -1), posB(static_cast<size_t>(N), -1);
        for (size_t i = 0; i < A.size(); ++i) posA[static_cast<size_t>(A[i])] = static_cast<int>(i);
        for (size_t i = 0; i < B.size(); ++i) posB[static_cast<size_t>(B[i])] = static_cast<int>(i);
        std::vector<int> qa, qb;
        for (int x : Ap) qa.push_back(posA[static_cast<size_t>(q[static_cast<size_t>(x)])]);
        for (int x : Bp) qb.push_back(posB[static_cast<size_t>(q[static_cast<size_t>(x)])]);
        bool stop = false;
        for_compatible_pairs(A, B, N, rng, [&](const Section& sA, const Section& sB) {
            if (stop) return;
            stop = true;  // one pair per configuration keeps the budget balanced
            ++r.samples;
            Section lhs = inst_.pull(inst_.glue(sA, A, sB, B, N), q);
            Section rhs = inst_.glue(inst_.pull(sA, qa), Ap, inst_.pull(sB, qb), Bp, Np);
            if (!(lhs == rhs))
                r.failures.push_back({{"sA", inst_.to_json(sA)},
                                      {"sB", inst_.to_json(sB)},
                                      {"A", A},
                                      {"B", B},
                                      {"q", q}});
        });
    }

    // Lattice form: A' inside A with the same intersection with B; the
    // morphism is the inclusion of C' = A' union B into C.
    void run_naturality_lattice(AxiomReport& r, Rng& rng) {
        for (int N = 1; N <= cfg_.naturality_max_size; ++N) {
            unsigned full = (1u << N) - 1u;
            for (unsigned Am = 0; Am <= full; ++Am)
                for (unsigned Bm = 0; Bm <= full; ++Bm) {
                    if ((Am | Bm) != full) continue;
                    if (r.samples >= cfg_.max_checks) return;
                    auto A = mask_to_vec(Am, N), B = mask_to_vec(Bm, N);
                    for (unsigned Apm = 0; Apm <= full; ++Apm) {
                        if ((Apm & Am) != Apm) continue;
                        if ((Apm & Bm) != (Am & Bm)) continue;
                        unsigned Cpm = Apm | Bm;
                        auto Ap = mask_to_vec(Apm, N), Cp = mask_to_vec(Cpm, N);
                        auto ApInA = local_positions(A, Ap);
                        auto ApInCp = local_positions(Cp, Ap), BinCp = local_positions(Cp, B);
                        for_compatible_pairs(
                            A, B, N, rng, [&](const Section& sA, const Section& sB) {
                                if (r.samples >= cfg_.max_checks) return;
                                ++r.samples;
                                Section lhs =
                                    inst_.pull(inst_.glue(sA, A, sB, B, N), Cp);
                                Section rhs = inst_.glue(inst_.pull(sA, ApInA), ApInCp, sB,
                                                         BinCp, static_cast<int>(Cp.size()));
                                if (!(lhs == rhs))
                                    r.failures.push_back({{"sA", inst_.to_json(sA)},
                                                          {"sB", inst_.to_json(sB)},
                                                          {"A", A},
                                                          {"B", B},
                                                          {"A'", Ap}});
                            });
                    }
                }
        }
    }

    nlohmann::json fail_pair(const Section& sA, const std::vector<int>& A, const Section& sB,
                             const std::vector<int>& B) {
        return {{"sA", inst_.to_json(sA)}, {"A", A}, {"sB", inst_.to_json(sB)}, {"B", B}};
    }

    const Inst& inst_;
    std::string name_;
    GleafSuiteConfig cfg_;
    std::map<int, std::vector<Section>> pools_;
};

// ---------------------------------------------------------------------------
// Concrete finite-set gleaf instances

/// Pseudometrics over finite sets; gluing via shortest two-leg paths.
class MetricGleaf {
  public:
    using Section = FiniteMetric;

    explicit MetricGleaf(bool symmetric = true, long long grid = 12)
        : mi_(symmetric, grid), symmetric_(symmetric) {}

    int carrier(const Section& s) const { return s.n; }
    bool valid(const Section& s) const { return s.symmetric == symmetric_ && metric_valid(s); }
    Section pull(const Section& s, const std::vector<int>& f) const {
        return metric_restrict(s, f);
    }
    Section glue(const Section& sA, const std::vector<int>& inclA, const Section& sB,
                 const std::vector<int>& inclB, int size_C) const {
        return metric_glue(sA, inclA, sB, inclB, size_C);
    }
    bool inclusions_only() const { return false; }
    bool exhaustive(int) const { return false; }
    std::vector<Section> sections(int n, std::mt19937_64& rng, int budget) const;
    nlohmann::json to_json(const Section& s) const { return metric_to_json(s); }

  private:
    MetricInstance mi_;
    bool symmetric_;
};

/// Joint distributions over finite variable sets; gluing by conditional
/// independence over the shared variables.
class ProbGleaf {
  public:
    using Section = Dist;

    explicit ProbGleaf(int noutcomes = 2, long long grid = 6)
        : di_(noutcomes, grid), noutcomes_(noutcomes) {}

    int carrier(const Section& s) const { return s.nvars; }
    bool valid(const Section& s) const { return s.noutcomes == noutcomes_ && dist_valid(s); }
    Section pull(const Section& s, const std::vector<int>& f) const { return dist_pull(s, f); }
    Section glue(const Section& sA, const std::vector<int>& inclA, const Section& sB,
                 const std::vector<int>& inclB, int size_C) const {
        return dist_glue(sA, inclA, sB, inclB, size_C);
    }
    bool inclusions_only() const { return false; }
    bool exhaustive(int) const { return false; }
    std::vector<Section> sections(int n, std::mt19937_64& rng, int budget) const;
    nlohmann::json to_json(const Section& s) const { return dist_to_json(s); }

  private:
    DistInstance di_;
    int noutcomes_;
};

/// A relation over carrier {0..n-1} with a common finite attribute domain.
struct RelSection {
    int n = 0;
    std::set<std::vector<int>> tuples;

    friend bool operator==(const RelSection& a, const RelSection& b) {
        return a.n == b.n && a.tuples == b.tuples;
    }
};

/// Relations with natural join as gluing; the presheaf lives on the lattice
/// of attribute subsets, so restrictions are projections.
class RelGleaf {
  public:
    using Section = RelSection;

    explicit RelGleaf(int domain = 2) : domain_(domain) {}

    int carrier(const Section& s) const { return s.n; }
    bool valid(const Section& s) const;
    Section pull(const Section& s, const std::vector<int>& f) const;
    Section glue(const Section& sA, const std::vector<int>& inclA, const Section& sB,
                 const std::vector<int>& inclB, int size_C) const;
    bool inclusions_only() const { return true; }
    bool exhaustive(int n) const;
    std::vector<Section> sections(int n, std::mt19937_64& rng, int budget) const;
    nlohmann::json to_json(const Section& s) const;

  private:
    long long tuple_space(int n) const;
    int domain_;
};

/// Topologies with the intersection-conditioned gluing.
class TopGleaf {
  public:
    using Section = FinTopology;

    int carrier(const Section& s) const { return s.n; }
    bool valid(const Section& s) const { return top_valid(s); }
    Section pull(const Section& s, const std::vector<int>& f) const { return top_act(s, f); }
    Section glue(const Section& sA, const std::vector<int>& inclA, const Section& sB,
                 const std::vector<int>& inclB, int size_C) const {
        return top_glue(sA, inclA, sB, inclB, size_C);
    }
    bool inclusions_only() const { return false; }
    bool exhaustive(int n) const { return n <= 4; }
    std::vector<Section> sections(int n, std::mt19937_64&, int) const {
        return enumerate_topologies(n);
    }
    nlohmann::json to_json(const Section& s) const { return topology_to_json(s); }
};

// ---------------------------------------------------------------------------
// Gleaves over the simplex category and the compository correspondence.
//
// A simplex-category gleaf instance provides the compository sampling
// interface (dim/act/valid/to_json plus enumerate+extensions or
// random_simplex+random_extension) with glue(A, B, j) instead of compose:
// gluing a section over [m] with one over [n] along the bicovering
// (s_m: [m] -> [j], t_n: [n] -> [j]) with m + n >= j.

/// View a compository as a gleaf over the simplex category (one direction of
/// the equivalence between the two notions).
template <class C>
class CompositoryAsDeltaGleaf {
  public:
    using Section = typename C::Simplex;

    explicit CompositoryAsDeltaGleaf(const C& c) : c_(c) {}

    int dim(const Section& s) const { return c_.dim(s); }
    Section act(const Section& s, const MonotoneMap& f) const { return c_.act(s, f); }
    Section glue(const Section& A, const Section& B, int j) const {
        int k = c_.dim(A) + c_.dim(B) - j;
        if (k < 0) throw std::domain_error("glue: legs are not jointly surjective");
        return c_.compose(A, k, B);
    }
    bool valid(const Section& s) const { return c_.valid(s); }
    nlohmann::json to_json(const Section& s) const { return c_.to_json(s); }
    bool exhaustive() const { return c_.exhaustive(); }
    std::vector<Section> enumerate(int n) const
        requires requires(const C& c) { c.enumerate(0); }
    {
        return c_.enumerate(n);
    }
    std::vector<Section> extensions(const Section& f, int n) const
        requires requires(const C& c, const typename C::Simplex& s) { c.extensions(s, 0); }
    {
        return c_.extensions(f, n);
    }
    Section random_simplex(int n, Rng& rng) const
        requires requires(const C& c, Rng& r) { c.random_simplex(0, r); }
    {
        return c_.random_simplex(n, rng);
    }
    Section random_extension(const Section& f, int n, Rng& rng) const
        requires requires(const C& c, const typename C::Simplex& s, Rng& r) {
            c.random_extension(s, 0, r);
        }
    {
        return c_.random_extension(f, n, rng);
    }

  private:
    const C& c_;
};

/// View a simplex-category gleaf as a compository (the other direction).
template <class G>
class DeltaGleafAsCompository {
  public:
    using Simplex = typename G::Section;

    explicit DeltaGleafAsCompository(const G& g) : g_(g) {}

    int dim(const Simplex& s) const { return g_.dim(s); }
    Simplex act(const Simplex& s, const MonotoneMap& f) const { return g_.act(s, f); }
    Simplex compose(const Simplex& A, int k, const Simplex& B) const {
        return g_.glue(A, B, g_.dim(A) + g_.dim(B) - k);
    }
    bool valid(const Simplex& s) const { return g_.valid(s); }
    nlohmann::json to_json(const Simplex& s) const { return g_.to_json(s); }
    bool exhaustive() const { return g_.exhaustive(); }
    std::vector<Simplex> enumerate(int n) const
        requires requires(const G& g) { g.enumerate(0); }
    {
        return g_.enumerate(n);
    }
    std::vector<Simplex> extensions(const Simplex& f, int n) const
        requires requires(const G& g, const typename G::Section& s) { g.extensions(s, 0); }
    {
        return g_.extensions(f, n);
    }
    Simplex random_simplex(int n, Rng& rng) const
        requires requires(const G& g, Rng& r) { g.random_simplex(0, r); }
    {
        return g_.random_simplex(n, rng);
    }
    Simplex random_extension(const Simplex& f, int n, Rng& rng) const
        requires requires(const G& g, const typename G::Section& s, Rng& r) {
            g.random_extension(s, 0, r);
        }
    {
        return g_.random_extension(f, n, rng);
    }

  private:
    const G& g_;
};

/// Pseudometrics as a gleaf over the simplex category, defined directly from
/// the subset gluing along the two standard inclusions.
class MetricDeltaGleaf {
  public:
    using Section = FiniteMetric;

    explicit MetricDeltaGleaf(bool symmetric = true, long long grid = 12)
        : mi_(symmetric, grid) {}

    int dim(const Section& s) const { return mi_.dim(s); }
    Section act(const Section& s, const MonotoneMap& f) const { return mi_.act(s, f); }
    Section glue(const Section& A, const Section& B, int j) const;
    bool valid(const Section& s) const { return mi_.valid(s); }
    nlohmann::json to_json(const Section& s) const { return mi_.to_json(s); }
    bool exhaustive() const { return false; }
    Section random_simplex(int n, Rng& rng) const { return mi_.random_simplex(n, rng); }
    Section random_extension(const Section& f, int n, Rng& rng) const {
        return mi_.random_extension(f, n, rng);
    }

  private:
    MetricInstance mi_;
};

/// Joint distributions as a gleaf over the simplex category.
class ProbDeltaGleaf {
  public:
    using Section = Dist;

    explicit ProbDeltaGleaf(int noutcomes = 2, long long grid = 6) : di_(noutcomes, grid) {}

    int dim(const Section& s) const { return di_.dim(s); }
    Section act(const Section& s, const MonotoneMap& f) const { return di_.act(s, f); }
    Section glue(const Section& A, const Section& B, int j) const;
    bool valid(const Section& s) const { return di_.valid(s); }
    nlohmann::json to_json(const Section& s) const { return di_.to_json(s); }
    bool exhaustive() const { return false; }
    Section random_simplex(int n, Rng& rng) const { return di_.random_simplex(n, rng); }
    Section random_extension(const Section& f, int n, Rng& rng) const {
        return di_.random_extension(f, n, rng);
    }

  private:
    DistInstance di_;
};

/// Whether the square with shapes (m', n', j') above (m, n, j) and connecting
/// map q: [j'] -> [j] is a morphism of bicoverings: q carries the source leg
/// into the source leg and the target leg into the target leg, and maps the
/// primed overlap onto the unprimed one.
bool is_delta_bicovering_morphism(int mp, int np, int jp, int m, int n, int j,
                                  const MonotoneMap& q);

/// Gleaf-law suite for a simplex-category gleaf: the shared laws are run
/// through the compository view, and partial naturality is checked against
/// the degeneracy- and face-shaped generator morphisms.
template <class G>
class DeltaGleafSuite {
  public:
    using Section = typename G::Section;

    DeltaGleafSuite(const G& g, std::string name, SuiteConfig cfg)
        : g_(g), adapter_(g_), suite_(adapter_, name, cfg), name_(std::move(name)) {}
    DeltaGleafSuite(const DeltaGleafSuite&) = delete;

    std::vector<AxiomReport> run_all() {
        std::vector<AxiomReport> out;
        out.push_back(suite_.run_identity());
        out.push_back(suite_.run_pair_axiom(
            "recover", [this](AxiomReport& r, const Section& A, int k, const Section& B) {
                int m = g_.dim(A), n = g_.dim(B), j = m + n - k;
                ++r.samples;
                Section s = g_.glue(A, B, j);
                if (!(g_.act(s, source_incl(m, j)) == A && g_.act(s, target_incl(n, j)) == B))
                    r.failures.push_back({{"A", g_.to_json(A)}, {"B", g_.to_json(B)}, {"j", j}});
            }));
        out.push_back(suite_.run_pair_axiom(
            "back_and_forth", [this](AxiomReport& r, const Section& A, int k, const Section& B) {
                // the pair lives on a primed bicovering nested in every larger
                // source leg with the same target leg and apex
                int mp = g_.dim(A), n = g_.dim(B), j = mp + n - k;
                Section s = g_.glue(A, B, j);
                for (int m = std::max(mp, j - n); m <= j; ++m) {
                    ++r.samples;
                    Section t = g_.glue(g_.act(s, source_incl(m, j)),
                                        g_.act(s, target_incl(n, j)), j);
                    if (!(t == s))
                        r.failures.push_back(
                            {{"A", g_.to_json(A)}, {"B", g_.to_json(B)}, {"j", j}, {"m", m}});
                }
            }));
        out.push_back(run_generator_naturality());
        out.push_back(suite_.run_pair_axiom(
            "two_step", [this](AxiomReport& r, const Section& A, int k, const Section& B) {
                int m = g_.dim(A), n = g_.dim(B);
                for (int i = k; i <= m; ++i)
                    for (int jj = k; jj <= n; ++jj) {
                        ++r.samples;
                        if (!check_two_step(adapter_, A, k, B, i, jj))
                            r.failures.push_back({{"A", g_.to_json(A)},
                                                  {"B", g_.to_json(B)},
                                                  {"k", k},
                                                  {"i", i},
                                                  {"j", jj}});
                    }
            }));
        out.push_back(suite_.run_associativity());
        return out;
    }

    // Naturality against the generator morphisms: three degeneracy-shaped
    // squares and two face-shaped squares per applicable index.
    AxiomReport run_generator_naturality() {
        return suite_.run_pair_axiom(
            "generator_naturality",
            [this](AxiomReport& r, const Section& A, int k, const Section& B) {
                int m = g_.dim(A), n = g_.dim(B), j = m + n - k;
                Section s = g_.glue(A, B, j);
                // degeneracy-shaped: sources (m+1,n,j+1), (m,n+1,j+1),
                // (m+1,n+1,j+1), with q collapsing i and i+1 in [j+1]
                for (int i = 0; i <= j; ++i) {
                    MonotoneMap q = degeneracy(i, j);
                    if (is_delta_bicovering_morphism(m + 1, n, j + 1, m, n, j, q))
                        record(r, g_.act(s, q) ==
                                      g_.glue(g_.act(A, degeneracy(i, m)), B, j + 1),
                               A, B, "deg_source", i);
                    if (is_delta_bicovering_morphism(m, n + 1, j + 1, m, n, j, q))
                        record(r, g_.act(s, q) ==
                                      g_.glue(A, g_.act(B, degeneracy(i - j + n, n)), j + 1),
                               A, B, "deg_target", i);
                    if (is_delta_bicovering_morphism(m + 1, n + 1, j + 1, m, n, j, q))
                        record(r, g_.act(s, q) ==
                                      g_.glue(g_.act(A, degeneracy(i, m)),
                                              g_.act(B, degeneracy(i - j + n, n)), j + 1),
                               A, B, "deg_both", i);
                }
                // face-shaped: sources (m-1,n,j-1) and (m,n-1,j-1) with
                // q = the i-th face inclusion [j-1] -> [j]
                if (j >= 1)
                    for (int i = 0; i <= j; ++i) {
                        MonotoneMap q = face(i, j);
                        if (m >= 1 &&
                            is_delta_bicovering_morphism(m - 1, n, j - 1, m, n, j, q))
                            record(r, g_.act(s, q) ==
                                          g_.glue(g_.act(A, face(i, m)), B, j - 1),
                                   A, B, "face_source", i);
                        if (n >= 1 &&
                            is_delta_bicovering_morphism(m, n - 1, j - 1, m, n, j, q))
                            record(r, g_.act(s, q) ==
                                          g_.glue(A, g_.act(B, face(i - j + n, n)), j - 1),
                                   A, B, "face_target", i);
                    }
            });
    }

  private:
    void record(AxiomReport& r, bool ok, const Section& A, const Section& B,
                const char* which, int i) {
        ++r.samples;
        if (!ok)
            r.failures.push_back(
                {{"A", g_.to_json(A)}, {"B", g_.to_json(B)}, {"case", which}, {"i", i}});
    }

    const G& g_;
    DeltaGleafAsCompository<G> adapter_;
    CompositorySuite<DeltaGleafAsCompository<G>> suite_;
    std::string name_;
};

// ---------------------------------------------------------------------------
// Bicovering systems

/// A family of cospans of subsets: pred(Amask, Bmask, Cmask) says whether the
/// pair of inclusions A, B into the carrier C is a bicovering.
using FinSetCoverPred = std::function<bool(unsigned, unsigned, unsigned)>;

/// The standard system: injective legs that are jointly surjective.
bool finset_standard_cover(unsigned A, unsigned B, unsigned C);

/// Checks the bicovering-system axioms (maximal bicoverings, stability under
/// composition on both legs, stability under pullbacks along arbitrary
/// functions) for carriers up to max_size. Returns false with a reason on the
/// first violation.
bool check_finset_bicovering_system(const FinSetCoverPred& pred, int max_size,
                                    std::string* why = nullptr);

/// A family of shapes: pred(m, n, j) says whether (s_m, t_n) into [j] is a
/// bicovering.
using DeltaCoverPred = std::function<bool(int, int, int)>;

bool delta_standard_cover(int m, int n, int j);

bool check_delta_bicovering_system(const DeltaCoverPred& pred, int max_j,
                                   std::string* why = nullptr);

/// Exhaustively verifies at small sizes that a candidate square is a morphism
/// of bicoverings (the induced map on overlaps has a right inverse) exactly
/// when the connecting map is surjective on the overlap.
bool check_finset_morphism_characterization(int max_size);
bool check_delta_morphism_characterization(int max_j);

}  // namespace gleafkit
