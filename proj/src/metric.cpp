#include "gleafkit/metric.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gleafkit {

FiniteMetric::FiniteMetric(int n_, bool symmetric_, std::vector<ExtRat> d_)
    : n(n_), symmetric(symmetric_), d(std::move(d_)) {
    if (n < 0 || d.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::domain_error("FiniteMetric: entry count does not match point count");
}

bool metric_valid(const FiniteMetric& A) {
    for (int x = 0; x < A.n; ++x)
        if (!(A.at(x, x) == ExtRat(0))) return false;
    if (A.symmetric)
        for (int x = 0; x < A.n; ++x)
            for (int y = 0; y < A.n; ++y)
                if (!(A.at(x, y) == A.at(y, x))) return false;
    for (int x = 0; x < A.n; ++x)
        for (int y = 0; y < A.n; ++y)
            for (int z = 0; z < A.n; ++z)
                if (!(A.at(x, z) <= A.at(x, y) + A.at(y, z))) return false;
    return true;
}

FiniteMetric metric_restrict(const FiniteMetric& A, const std::vector<int>& idx) {
    int k = static_cast<int>(idx.size());
    FiniteMetric out(k, A.symmetric, std::vector<ExtRat>(static_cast<size_t>(k) * k, ExtRat(0)));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            out.set(x, y, A.at(idx.at(static_cast<size_t>(x)), idx.at(static_cast<size_t>(y))));
    return out;
}

FiniteMetric metric_act(const FiniteMetric& A, const MonotoneMap& f) {
    if (f.cod + 1 != A.n) throw std::domain_error("metric_act: dimension mismatch");
    return metric_restrict(A, f.values);
}

FiniteMetric metric_compose(const FiniteMetric& A, int k, const FiniteMetric& B) {
    int m = A.n - 1, n = B.n - 1;
    if (k < 0 || k > m || k > n) throw std::domain_error("metric_compose: k out of range");
    if (A.symmetric != B.symmetric)
        throw std::domain_error("metric_compose: mixed symmetry modes");
    if (!(metric_act(A, target_incl(k, m)) == metric_act(B, source_incl(k, n))))
        throw std::domain_error(
            "metric_compose: terminal face of A differs from initial face of B");
    int N = m + n - k;
    FiniteMetric out(N + 1, A.symmetric,
                     std::vector<ExtRat>(static_cast<size_t>(N + 1) * (N + 1), ExtRat(0)));
    auto bridge = [&](int x, int z) {  // x in A side, z in B side
        ExtRat best = ExtRat::infinity();
        for (int y = m - k; y <= m; ++y)
            best = min(best, A.at(x, y) + B.at(y - m + k, z - m + k));
        return best;
    };
    auto bridge_rev = [&](int x, int z) {  // x in B side, z in A side
        ExtRat best = ExtRat::infinity();
        for (int y = m - k; y <= m; ++y)
            best = min(best, B.at(x - m + k, y - m + k) + A.at(y, z));
        return best;
    };
    for (int x = 0; x <= N; ++x)
        for (int z = 0; z <= N; ++z) {
            if (x <= m && z <= m)
                out.set(x, z, A.at(x, z));
            else if (x >= m - k && z >= m - k)
                out.set(x, z, B.at(x - m + k, z - m + k));
            else if (x < m - k)
                out.set(x, z, bridge(x, z));
            else
                out.set(x, z, bridge_rev(x, z));
        }
    return out;
}

FiniteMetric metric_glue(const FiniteMetric& dA, const std::vector<int>& inclA,
                         const FiniteMetric& dB, const std::vector<int>& inclB, int size_C) {
    if (static_cast<int>(inclA.size()) != dA.n || static_cast<int>(inclB.size()) != dB.n)
        throw std::domain_error("metric_glue: inclusion length mismatch");
    if (dA.symmetric != dB.symmetric) throw std::domain_error("metric_glue: mixed symmetry modes");
    std::vector<int> posA(static_cast<size_t>(size_C), -1), posB(static_cast<size_t>(size_C), -1);
    for (int i = 0; i < dA.n; ++i) {
        int c = inclA.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posA[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("metric_glue: leg A not an injection into C");
        posA[static_cast<size_t>(c)] = i;
    }
    for (int i = 0; i < dB.n; ++i) {
        int c = inclB.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posB[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("metric_glue: leg B not an injection into C");
        posB[static_cast<size_t>(c)] = i;
    }
    std::vector<int> inter;  // C-indices in both images
    for (int c = 0; c < size_C; ++c) {
        if (posA[static_cast<size_t>(c)] < 0 && posB[static_cast<size_t>(c)] < 0)
            throw std::domain_error("metric_glue: legs are not jointly surjective");
        if (posA[static_cast<size_t>(c)] >= 0 && posB[static_cast<size_t>(c)] >= 0)
            inter.push_back(c);
    }
    for (int c : inter)
        for (int c2 : inter)
            if (!(dA.at(posA[static_cast<size_t>(c)], posA[static_cast<size_t>(c2)]) ==
                  dB.at(posB[static_cast<size_t>(c)], posB[static_cast<size_t>(c2)])))
                throw std::domain_error("metric_glue: restrictions disagree on the intersection");

    FiniteMetric out(size_C, dA.symmetric,
                     std::vector<ExtRat>(static_cast<size_t>(size_C) * size_C, ExtRat(0)));
    for (int x = 0; x < size_C; ++x)
        for (int z = 0; z < size_C; ++z) {
            int xa = posA[static_cast<size_t>(x)], xb = posB[static_cast<size_t>(x)];
            int za = posA[static_cast<size_t>(z)], zb = posB[static_cast<size_t>(z)];
            if (xa >= 0 && za >= 0) {
                out.set(x, z, dA.at(xa, za));
            } else if (xb >= 0 && zb >= 0) {
                out.set(x, z, dB.at(xb, zb));
            } else if (xa >= 0) {  // z only in B
                ExtRat best = ExtRat::infinity();
                for (int y : inter)
                    best = min(best, dA.at(xa, posA[static_cast<size_t>(y)]) +
                                         dB.at(posB[static_cast<size_t>(y)], zb));
                out.set(x, z, best);
            } else {  // x only in B, z only in A
                ExtRat best = ExtRat::infinity();
                for (int y : inter)
                    best = min(best, dB.at(xb, posB[static_cast<size_t>(y)]) +
                                         dA.at(posA[static_cast<size_t>(y)], za));
                out.set(x, z, best);
            }
        }
    return out;
}

FiniteMetric shortest_path_closure(const PartialMetric& P) {
    FiniteMetric out(P.n, P.symmetric,
                     std::vector<ExtRat>(static_cast<size_t>(P.n) * P.n, ExtRat::infinity()));
    for (int x = 0; x < P.n; ++x) out.set(x, x, ExtRat(0));
    for (int x = 0; x < P.n; ++x)
        for (int z = 0; z < P.n; ++z) {
            auto v = P.at(x, z);
            if (!v) continue;
            out.set(x, z, min(out.at(x, z), *v));
            if (P.symmetric) out.set(z, x, min(out.at(z, x), *v));
        }
    for (int y = 0; y < P.n; ++y)
        for (int x = 0; x < P.n; ++x)
            for (int z = 0; z < P.n; ++z)
                out.set(x, z, min(out.at(x, z), out.at(x, y) + out.at(y, z)));
    return out;
}

bool extension_exists(const PartialMetric& P) {
    auto closed = shortest_path_closure(P);
    for (int x = 0; x < P.n; ++x)
        for (int z = 0; z < P.n; ++z) {
            auto v = P.at(x, z);
            if (v && !(closed.at(x, z) == *v)) return false;
            if (v && P.symmetric && !(closed.at(z, x) == *v)) return false;
        }
    return true;
}

PartialMetric MetricHorn::assembled() const {
    // faces of a would-be 3-simplex: face0 = {1,2,3}, face1 = {0,2,3},
    // face3 = {0,1,2}, each with local points in global order
    const std::vector<std::pair<const FiniteMetric*, std::array<int, 3>>> faces = {
        {&face0, {1, 2, 3}}, {&face1, {0, 2, 3}}, {&face3, {0, 1, 2}}};
    PartialMetric P;
    P.n = 4;
    P.symmetric = face0.symmetric;
    P.d.assign(16, std::nullopt);
    for (const auto& [F, glob] : faces) {
        if (F->n != 3) throw std::domain_error("MetricHorn: faces must have three points");
        for (int x = 0; x < 3; ++x)
            for (int z = 0; z < 3; ++z) {
                int gx = glob[static_cast<size_t>(x)], gz = glob[static_cast<size_t>(z)];
                auto existing = P.at(gx, gz);
                if (existing && !(*existing == F->at(x, z)))
                    throw std::domain_error("MetricHorn: faces disagree on a shared edge");
                P.set(gx, gz, F->at(x, z));
            }
    }
    return P;
}

MetricHorn find_unfillable_horn(long long bound, unsigned long long seed) {
    if (bound < 3) throw std::domain_error("find_unfillable_horn: bound too small");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick(1, bound);
    auto triangle_ok = [](const ExtRat& a, const ExtRat& b, const ExtRat& c) {
        return a <= b + c && b <= a + c && c <= a + b;
    };
    for (long long iter = 0; iter < 1000000; ++iter) {
        ExtRat d01{Rat(pick(rng))}, d02{Rat(pick(rng))}, d03{Rat(pick(rng))};
        ExtRat d12{Rat(pick(rng))}, d13{Rat(pick(rng))}, d23{Rat(pick(rng))};
        // the three horn faces must themselves be metrics
        if (!triangle_ok(d12, d13, d23)) continue;  // face {1,2,3}
        if (!triangle_ok(d02, d03, d23)) continue;  // face {0,2,3}
        if (!triangle_ok(d01, d02, d12)) continue;  // face {0,1,2}
        auto sym3 = [](const ExtRat& a, const ExtRat& b, const ExtRat& c) {
            return FiniteMetric(3, true,
                                {ExtRat(0), a, b, a, ExtRat(0), c, b, c, ExtRat(0)});
        };
        MetricHorn horn{sym3(d12, d13, d23), sym3(d02, d03, d23), sym3(d01, d02, d12)};
        if (!extension_exists(horn.assembled())) return horn;
    }
    throw std::runtime_error("find_unfillable_horn: no witness found within iteration budget");
}

nlohmann::json metric_to_json(const FiniteMetric& A, const std::vector<std::string>& names) {
    std::vector<std::string> pts = names;
    if (pts.empty())
        for (int i = 0; i < A.n; ++i) pts.push_back(std::to_string(i));
    if (static_cast<int>(pts.size()) != A.n)
        throw std::domain_error("metric_to_json: name count mismatch");
    nlohmann::json dd = nlohmann::json::array();
    for (int x = 0; x < A.n; ++x)
        for (int y = 0; y < A.n; ++y) {
            if (x == y) continue;
            if (A.symmetric && y < x) continue;
            dd.push_back({pts[static_cast<size_t>(x)], pts[static_cast<size_t>(y)],
                          format_extrat(A.at(x, y))});
        }
    return {{"points", pts}, {"symmetric", A.symmetric}, {"d", dd}};
}

FiniteMetric metric_from_json(const nlohmann::json& j, std::vector<std::string>* names) {
    auto pts = j.at("points").get<std::vector<std::string>>();
    bool symmetric = j.at("symmetric").get<bool>();
    int n = static_cast<int>(pts.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[pts[static_cast<size_t>(i)]] = i;
    FiniteMetric out(n, symmetric,
                     std::vector<ExtRat>(static_cast<size_t>(n) * n, ExtRat::infinity()));
    for (int i = 0; i < n; ++i) out.set(i, i, ExtRat(0));
    for (const auto& e : j.at("d")) {
        int x = idx.at(e.at(0).get<std::string>());
        int y = idx.at(e.at(1).get<std::string>());
        ExtRat v = parse_extrat(e.at(2).get<std::string>());
        out.set(x, y, v);
        if (symmetric) out.set(y, x, v);
    }
    if (!metric_valid(out)) throw std::domain_error("metric json: not a metric");
    if (names) *names = pts;
    return out;
}

namespace {

Rat random_grid_rat(std::mt19937_64& rng, long long grid) {
    static const long long dens[] = {1, 2, 4};
    long long den = dens[rng() % 3];
    long long num = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(grid * den));
    return Rat(num, den);
}

}  // namespace

FiniteMetric MetricInstance::random_simplex(int n, std::mt19937_64& rng) const {
    int p = n + 1;
    PartialMetric P;
    P.n = p;
    P.symmetric = symmetric_;
    P.d.assign(static_cast<size_t>(p) * p, std::nullopt);
    for (int x = 0; x < p; ++x)
        for (int y = symmetric_ ? x + 1 : 0; y < p; ++y) {
            if (x == y) continue;
            P.set(x, y, ExtRat(random_grid_rat(rng, grid_)));
        }
    return shortest_path_closure(P);
}

FiniteMetric MetricInstance::random_extension(const Simplex& face, int n,
                                              std::mt19937_64& rng) const {
    int k = face.n - 1;
    if (n < k) throw std::domain_error("random_extension: target dimension below face");
    // new distances live in [M, 2M] for M at least the largest old distance,
    // so the shortest-path closure cannot disturb the old block
    Rat M(1);
    for (const auto& v : face.d) {
        if (v.is_inf) throw std::domain_error("random_extension: face has infinite distances");
        if (M < v.value) M = v.value;
    }
    int p = n + 1;
    PartialMetric P;
    P.n = p;
    P.symmetric = symmetric_;
    P.d.assign(static_cast<size_t>(p) * p, std::nullopt);
    for (int x = 0; x <= k; ++x)
        for (int y = 0; y <= k; ++y)
            if (x != y) P.set(x, y, face.at(x, y));
    for (int x = 0; x < p; ++x)
        for (int y = symmetric_ ? x + 1 : 0; y < p; ++y) {
            if (x == y || (x <= k && y <= k)) continue;
            long long t = static_cast<long long>(rng() % static_cast<unsigned long long>(grid_ + 1));
            P.set(x, y, ExtRat(M + M * Rat(t, grid_)));
        }
    auto out = shortest_path_closure(P);
    if (!(metric_act(out, source_incl(k, n)) == face))
        throw std::logic_error("random_extension: closure disturbed the prescribed face");
    return out;
}

}  // namespace gleafkit
