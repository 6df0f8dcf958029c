#include "gleafkit/gleaf.hpp"

#include <algorithm>
#include <stdexcept>

namespace gleafkit {

std::vector<int> mask_to_vec(unsigned mask, int N) {
    std::vector<int> out;
    for (int i = 0; i < N; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

std::vector<int> vec_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool vec_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> local_positions(const std::vector<int>& sub, const std::vector<int>& inside) {
    std::vector<int> out;
    for (int x : inside) {
        auto it = std::lower_bound(sub.begin(), sub.end(), x);
        if (it == sub.end() || *it != x)
            throw std::domain_error("local_positions: element not in the subset");
        out.push_back(static_cast<int>(it - sub.begin()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite-set gleaf instances

std::vector<FiniteMetric> MetricGleaf::sections(int n, std::mt19937_64& rng, int budget) const {
    std::vector<FiniteMetric> out;
    for (int i = 0; i < budget; ++i) {
        if (n == 0)
            out.push_back(FiniteMetric(0, symmetric_, {}));
        else
            out.push_back(mi_.random_simplex(n - 1, rng));
    }
    return out;
}

std::vector<Dist> ProbGleaf::sections(int n, std::mt19937_64& rng, int budget) const {
    std::vector<Dist> out;
    for (int i = 0; i < budget; ++i) {
        if (n == 0)
            out.push_back(Dist(0, noutcomes_, {Rat(1)}));
        else
            out.push_back(di_.random_simplex(n - 1, rng));
    }
    return out;
}

long long RelGleaf::tuple_space(int n) const {
    long long t = 1;
    for (int i = 0; i < n; ++i) t *= domain_;
    return t;
}

bool RelGleaf::valid(const Section& s) const {
    if (s.n < 0) return false;
    for (const auto& t : s.tuples) {
        if (static_cast<int>(t.size()) != s.n) return false;
        for (int v : t)
            if (v < 0 || v >= domain_) return false;
    }
    return true;
}

RelSection RelGleaf::pull(const Section& s, const std::vector<int>& f) const {
    RelSection out;
    out.n = static_cast<int>(f.size());
    for (const auto& t : s.tuples) {
        std::vector<int> u(f.size());
        for (size_t i = 0; i < f.size(); ++i) u[i] = t.at(static_cast<size_t>(f[i]));
        out.tuples.insert(std::move(u));
    }
    return out;
}

RelSection RelGleaf::glue(const Section& sA, const std::vector<int>& inclA, const Section& sB,
                          const std::vector<int>& inclB, int size_C) const {
    if (static_cast<int>(inclA.size()) != sA.n || static_cast<int>(inclB.size()) != sB.n)
        throw std::domain_error("rel glue: inclusion length mismatch");
    std::vector<int> posA(static_cast<size_t>(size_C), -1), posB(static_cast<size_t>(size_C), -1);
    for (int i = 0; i < sA.n; ++i) {
        int c = inclA.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posA[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("rel glue: leg A not an injection into C");
        posA[static_cast<size_t>(c)] = i;
    }
    for (int i = 0; i < sB.n; ++i) {
        int c = inclB.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posB[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("rel glue: leg B not an injection into C");
        posB[static_cast<size_t>(c)] = i;
    }
    std::vector<int> interA, interB;
    for (int c = 0; c < size_C; ++c) {
        int a = posA[static_cast<size_t>(c)], b = posB[static_cast<size_t>(c)];
        if (a < 0 && b < 0) throw std::domain_error("rel glue: legs are not jointly surjective");
        if (a >= 0 && b >= 0) {
            interA.push_back(a);
            interB.push_back(b);
        }
    }
    if (!(pull(sA, interA) == pull(sB, interB)))
        throw std::domain_error("rel glue: projections to the intersection disagree");

    RelSection out;
    out.n = size_C;
    long long total = tuple_space(size_C);
    if (total > 1000000) throw std::domain_error("rel glue: carrier too large");
    std::vector<int> t(static_cast<size_t>(size_C), 0);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < size_C; ++i) {
            t[static_cast<size_t>(i)] = static_cast<int>(c % domain_);
            c /= domain_;
        }
        std::vector<int> ta(static_cast<size_t>(sA.n)), tb(static_cast<size_t>(sB.n));
        for (int i = 0; i < sA.n; ++i)
            ta[static_cast<size_t>(i)] = t[static_cast<size_t>(inclA[static_cast<size_t>(i)])];
        for (int i = 0; i < sB.n; ++i)
            tb[static_cast<size_t>(i)] = t[static_cast<size_t>(inclB[static_cast<size_t>(i)])];
        if (sA.tuples.count(ta) && sB.tuples.count(tb)) out.tuples.insert(t);
    }
    return out;
}

bool RelGleaf::exhaustive(int n) const { return tuple_space(n) <= 9; }

std::vector<RelSection> RelGleaf::sections(int n, std::mt19937_64& rng, int budget) const {
    long long ts = tuple_space(n);
    std::vector<std::vector<int>> space;
    {
        std::vector<int> t(static_cast<size_t>(n), 0);
        for (long long code = 0; code < ts; ++code) {
            long long c = code;
            for (int i = 0; i < n; ++i) {
                t[static_cast<size_t>(i)] = static_cast<int>(c % domain_);
                c /= domain_;
            }
            space.push_back(t);
        }
    }
    std::vector<RelSection> out;
    if (exhaustive(n)) {
        for (unsigned long long mask = 0; mask < (1ull << ts); ++mask) {
            RelSection s;
            s.n = n;
            for (long long i = 0; i < ts; ++i)
                if (mask & (1ull << i)) s.tuples.insert(space[static_cast<size_t>(i)]);
            out.push_back(std::move(s));
        }
    } else {
        for (int b = 0; b < budget; ++b) {
            RelSection s;
            s.n = n;
            for (long long i = 0; i < ts; ++i)
                if (rng() & 1ull) s.tuples.insert(space[static_cast<size_t>(i)]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

nlohmann::json RelGleaf::to_json(const Section& s) const {
    nlohmann::json tuples = nlohmann::json::array();
    for (const auto& t : s.tuples) tuples.push_back(t);
    return {{"n", s.n}, {"tuples", tuples}};
}

// ---------------------------------------------------------------------------
// Simplex-category gleaves

namespace {

std::pair<std::vector<int>, std::vector<int>> delta_cover_inclusions(int m, int n, int j) {
    if (m < 0 || n < 0 || m > j || n > j || m + n < j)
        throw std::domain_error("glue: the two legs do not cover [j]");
    std::vector<int> inclA, inclB;
    for (int i = 0; i <= m; ++i) inclA.push_back(i);
    for (int i = 0; i <= n; ++i) inclB.push_back(i + j - n);
    return {inclA, inclB};
}

}  // namespace

FiniteMetric MetricDeltaGleaf::glue(const Section& A, const Section& B, int j) const {
    auto [inclA, inclB] = delta_cover_inclusions(dim(A), dim(B), j);
    return metric_glue(A, inclA, B, inclB, j + 1);
}

Dist ProbDeltaGleaf::glue(const Section& A, const Section& B, int j) const {
    auto [inclA, inclB] = delta_cover_inclusions(dim(A), dim(B), j);
    return dist_glue(A, inclA, B, inclB, j + 1);
}

bool is_delta_bicovering_morphism(int mp, int np, int jp, int m, int n, int j,
                                  const MonotoneMap& q) {
    auto shape_ok = [](int a, int b, int c) {
        return a >= 0 && b >= 0 && a <= c && b <= c && a + b >= c;
    };
    if (!shape_ok(mp, np, jp) || !shape_ok(m, n, j)) return false;
    if (q.dom != jp || q.cod != j) return false;
    for (int v = 0; v <= mp; ++v)
        if (q(v) > m) return false;
    for (int v = jp - np; v <= jp; ++v)
        if (q(v) < j - n) return false;
    // the induced map on the overlaps must be surjective
    std::vector<bool> hit(static_cast<size_t>(m - (j - n) + 1), false);
    for (int v = jp - np; v <= mp; ++v) hit[static_cast<size_t>(q(v) - (j - n))] = true;
    for (bool h : hit)
        if (!h) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bicovering systems

bool finset_standard_cover(unsigned A, unsigned B, unsigned C) {
    return (A | B) == C && (A & ~C) == 0 && (B & ~C) == 0;
}

bool check_finset_bicovering_system(const FinSetCoverPred& pred, int max_size,
                                    std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    unsigned top = (max_size >= 32) ? ~0u : ((1u << max_size) - 1u);
    // every carrier covers itself with two full legs
    for (unsigned C = 0; C <= top; ++C)
        if (!pred(C, C, C)) return fail("maximal bicovering missing");
    // stability under composition on either leg
    for (unsigned C = 0; C <= top; ++C)
        for (unsigned A = C;; A = (A - 1) & C) {
            for (unsigned B = C;; B = (B - 1) & C) {
                if (pred(A, B, C)) {
                    for (unsigned Ap = A;; Ap = (Ap - 1) & A) {
                        if (pred(Ap, A & B, A) && !pred(Ap, B, C))
                            return fail("not stable under composition (source leg)");
                        if (Ap == 0) break;
                    }
                    for (unsigned Bp = B;; Bp = (Bp - 1) & B) {
                        if (pred(A & B, Bp, B) && !pred(A, Bp, C))
                            return fail("not stable under composition (target leg)");
                        if (Bp == 0) break;
                    }
                }
                if (B == 0) break;
            }
            if (A == 0) break;
        }
    // stability under pullback along arbitrary functions between carriers
    int cap = std::min(max_size, 3);
    for (int N = 1; N <= cap; ++N) {
        unsigned full = (1u << N) - 1u;
        for (int Np = 1; Np <= cap; ++Np) {
            long long nfuncs = 1;
            for (int i = 0; i < Np; ++i) nfuncs *= N;
            for (long long code = 0; code < nfuncs; ++code) {
                std::vector<int> f(static_cast<size_t>(Np));
                long long c = code;
                for (int i = 0; i < Np; ++i) {
                    f[static_cast<size_t>(i)] = static_cast<int>(c % N);
                    c /= N;
                }
                for (unsigned A = 0; A <= full; ++A)
                    for (unsigned B = 0; B <= full; ++B) {
                        if (!pred(A, B, full)) continue;
                        unsigned Ap = 0, Bp = 0;
                        for (int i = 0; i < Np; ++i) {
                            if (A & (1u << f[static_cast<size_t>(i)])) Ap |= (1u << i);
                            if (B & (1u << f[static_cast<size_t>(i)])) Bp |= (1u << i);
                        }
                        unsigned fullp = (1u << Np) - 1u;
                        if (!pred(Ap, Bp, fullp))
                            return fail("not stable under pullbacks");
                    }
            }
        }
    }
    return true;
}

bool delta_standard_cover(int m, int n, int j) {
    return m >= 0 && n >= 0 && m <= j && n <= j && m + n >= j;
}

bool check_delta_bicovering_system(const DeltaCoverPred& pred, int max_j, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    for (int j = 0; j <= max_j; ++j)
        if (!pred(j, j, j)) return fail("maximal bicovering missing");
    for (int j = 0; j <= max_j; ++j)
        for (int m = 0; m <= j; ++m)
            for (int n = j - m; n <= j; ++n) {
                if (!pred(m, n, j)) continue;
                int k = m + n - j;  // the overlap, i.e. the pullback shape
                for (int mp = 0; mp <= m; ++mp)
                    if (pred(mp, k, m) && !pred(mp, n, j))
                        return fail("not stable under composition (source leg)");
                for (int np = 0; np <= n; ++np)
                    if (pred(k, np, n) && !pred(m, np, j))
                        return fail("not stable under composition (target leg)");
                // pullback along any monotone map; the axiom only applies
                // when all pullbacks exist, which in the simplex category
                // requires nonempty preimages of both legs and a nonempty
                // preimage of the overlap (ordinals are nonempty)
                for (int jp = 0; jp <= max_j; ++jp)
                    for (const auto& f : all_monotone_maps(jp, j)) {
                        int mp = -1, lo = jp + 1;
                        for (int v = 0; v <= jp; ++v) {
                            if (f(v) <= m) mp = v;
                            if (f(v) >= j - n) lo = std::min(lo, v);
                        }
                        if (mp < 0 || lo > jp || lo > mp) continue;
                        int np = jp - lo;
                        if (!pred(mp, np, jp)) return fail("not stable under pullbacks");
                    }
            }
    return true;
}

bool check_finset_morphism_characterization(int max_size) {
    int cap = std::min(max_size, 3);
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
                for (unsigned A = 0; A <= full; ++A)
                    for (unsigned B = 0; B <= full; ++B) {
                        if ((A | B) != full) continue;
                        for (unsigned Ap = 0; Ap <= fullp; ++Ap)
                            for (unsigned Bp = 0; Bp <= fullp; ++Bp) {
                                if ((Ap | Bp) != fullp) continue;
                                bool legs = true;
                                for (int i = 0; i < Np && legs; ++i) {
                                    unsigned qi = 1u << q[static_cast<size_t>(i)];
                                    if ((Ap & (1u << i)) && !(A & qi)) legs = false;
                                    if ((Bp & (1u << i)) && !(B & qi)) legs = false;
                                }
                                if (!legs) continue;
                                // surjectivity of the induced map on overlaps
                                unsigned image = 0;
                                for (int i = 0; i < Np; ++i)
                                    if ((Ap & Bp) & (1u << i))
                                        image |= (1u << q[static_cast<size_t>(i)]);
                                bool surj = ((image & (A & B)) == (A & B));
                                // brute-force search for a right inverse
                                bool rinv = true;
                                for (int x = 0; x < N && rinv; ++x) {
                                    if (!((A & B) & (1u << x))) continue;
                                    bool found = false;
                                    for (int i = 0; i < Np && !found; ++i)
                                        if (((Ap & Bp) & (1u << i)) &&
                                            q[static_cast<size_t>(i)] == x)
                                            found = true;
                                    rinv = found;
                                }
                                if (surj != rinv) return false;
                            }
                    }
            }
        }
    }
    return true;
}

namespace {

// Is there a monotone r on [lo..hi] with values in [lop..hip] and q(r(x)) = x?
bool monotone_right_inverse_exists(const MonotoneMap& q, int lo, int hi, int lop, int hip) {
    if (lo > hi) return true;
    std::function<bool(int, int)> rec = [&](int x, int minval) {
        if (x > hi) return true;
        for (int v = minval; v <= hip; ++v)
            if (q(v) == x && rec(x + 1, v)) return true;
        return false;
    };
    return rec(lo, lop);
}

}  // namespace

bool check_delta_morphism_characterization(int max_j) {
    for (int j = 0; j <= max_j; ++j)
        for (int m = 0; m <= j; ++m)
            for (int n = j - m; n <= j; ++n)
                for (int jp = 0; jp <= max_j; ++jp)
                    for (int mp = 0; mp <= jp; ++mp)
                        for (int np = jp - mp; np <= jp; ++np)
                            for (const auto& q : all_monotone_maps(jp, j)) {
                                bool legs = true;
                                for (int v = 0; v <= mp && legs; ++v)
                                    if (q(v) > m) legs = false;
                                for (int v = jp - np; v <= jp && legs; ++v)
                                    if (q(v) < j - n) legs = false;
                                if (!legs) continue;
                                bool surj =
                                    is_delta_bicovering_morphism(mp, np, jp, m, n, j, q);
                                bool rinv = monotone_right_inverse_exists(q, j - n, m,
                                                                          jp - np, mp);
                                if (surj != rinv) return false;
                            }
    return true;
}

}  // namespace gleafkit
