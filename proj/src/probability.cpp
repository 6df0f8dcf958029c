#include "gleafkit/probability.hpp"

#include <algorithm>
#include <numeric>

namespace gleafkit {

Dist::Dist(int nvars_, int noutcomes_, std::vector<Rat> w_)
    : nvars(nvars_), noutcomes(noutcomes_), w(std::move(w_)) {
    if (nvars < 0 || noutcomes < 1) throw std::domain_error("Dist: bad shape");
    if (w.size() != table_size()) throw std::domain_error("Dist: table size mismatch");
}

Dist Dist::zeros(int nvars_, int noutcomes_) {
    Dist out;
    out.nvars = nvars_;
    out.noutcomes = noutcomes_;
    if (nvars_ < 0 || noutcomes_ < 1) throw std::domain_error("Dist: bad shape");
    out.w.assign(out.table_size(), Rat(0));
    return out;
}

size_t Dist::table_size() const {
    size_t s = 1;
    for (int i = 0; i < nvars; ++i) s *= static_cast<size_t>(noutcomes);
    return s;
}

size_t Dist::index_of(const std::vector<int>& tuple) const {
    if (tuple.size() != static_cast<size_t>(nvars))
        throw std::domain_error("Dist: tuple arity mismatch");
    size_t idx = 0, stride = 1;
    for (int i = 0; i < nvars; ++i) {
        int a = tuple[static_cast<size_t>(i)];
        if (a < 0 || a >= noutcomes) throw std::domain_error("Dist: outcome out of range");
        idx += static_cast<size_t>(a) * stride;
        stride *= static_cast<size_t>(noutcomes);
    }
    return idx;
}

std::vector<int> Dist::tuple_of(size_t index) const {
    std::vector<int> t(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
        t[static_cast<size_t>(i)] = static_cast<int>(index % static_cast<size_t>(noutcomes));
        index /= static_cast<size_t>(noutcomes);
    }
    return t;
}

bool dist_valid(const Dist& P) {
    Rat total(0);
    for (const auto& v : P.w) {
        if (v < Rat(0)) return false;
        total += v;
    }
    return total == Rat(1);
}

Dist dist_pull(const Dist& P, const std::vector<int>& f) {
    for (int i : f)
        if (i < 0 || i >= P.nvars) throw std::domain_error("dist_pull: index out of range");
    Dist out = Dist::zeros(static_cast<int>(f.size()), P.noutcomes);
    for (size_t idx = 0; idx < P.w.size(); ++idx) {
        if (P.w[idx] == Rat(0)) continue;
        auto beta = P.tuple_of(idx);
        std::vector<int> alpha(f.size());
        for (size_t i = 0; i < f.size(); ++i) alpha[i] = beta[static_cast<size_t>(f[i])];
        out.w[out.index_of(alpha)] += P.w[idx];
    }
    return out;
}

Dist dist_act(const Dist& P, const MonotoneMap& f) {
    if (f.cod + 1 != P.nvars) throw std::domain_error("dist_act: dimension mismatch");
    return dist_pull(P, f.values);
}

Dist dist_compose(const Dist& P, int k, const Dist& Q) {
    int m = P.nvars - 1, n = Q.nvars - 1;
    if (k < 0 || k > m || k > n) throw std::domain_error("dist_compose: k out of range");
    if (P.noutcomes != Q.noutcomes) throw std::domain_error("dist_compose: outcome sets differ");
    Dist R = dist_act(P, target_incl(k, m));
    if (!(R == dist_act(Q, source_incl(k, n))))
        throw std::domain_error(
            "dist_compose: marginal of P on the overlap differs from that of Q");
    int N = m + n - k;
    Dist out = Dist::zeros(N + 1, P.noutcomes);
    for (size_t idx = 0; idx < out.w.size(); ++idx) {
        auto a = out.tuple_of(idx);
        std::vector<int> ap(a.begin(), a.begin() + m + 1);
        std::vector<int> aq(a.begin() + (m - k), a.end());
        std::vector<int> ar(a.begin() + (m - k), a.begin() + m + 1);
        const Rat& r = R.at(ar);
        if (r == Rat(0)) continue;  // composability forces the numerator to 0 too
        out.w[idx] = P.at(ap) * Q.at(aq) / r;
    }
    return out;
}

Dist dist_glue(const Dist& PA, const std::vector<int>& inclA, const Dist& PB,
               const std::vector<int>& inclB, int size_C) {
    if (static_cast<int>(inclA.size()) != PA.nvars ||
        static_cast<int>(inclB.size()) != PB.nvars)
        throw std::domain_error("dist_glue: inclusion length mismatch");
    if (PA.noutcomes != PB.noutcomes) throw std::domain_error("dist_glue: outcome sets differ");
    std::vector<int> posA(static_cast<size_t>(size_C), -1), posB(static_cast<size_t>(size_C), -1);
    for (int i = 0; i < PA.nvars; ++i) {
        int c = inclA.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posA[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("dist_glue: leg A not an injection into C");
        posA[static_cast<size_t>(c)] = i;
    }
    for (int i = 0; i < PB.nvars; ++i) {
        int c = inclB.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posB[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("dist_glue: leg B not an injection into C");
        posB[static_cast<size_t>(c)] = i;
    }
    std::vector<int> interA, interB;  // local positions of the intersection
    for (int c = 0; c < size_C; ++c) {
        int a = posA[static_cast<size_t>(c)], b = posB[static_cast<size_t>(c)];
        if (a < 0 && b < 0)
            throw std::domain_error("dist_glue: legs are not jointly surjective");
        if (a >= 0 && b >= 0) {
            interA.push_back(a);
            interB.push_back(b);
        }
    }
    Dist RInt = dist_pull(PA, interA);
    if (!(RInt == dist_pull(PB, interB)))
        throw std::domain_error("dist_glue: marginals disagree on the intersection");

    Dist out = Dist::zeros(size_C, PA.noutcomes);
    for (size_t idx = 0; idx < out.w.size(); ++idx) {
        auto gamma = out.tuple_of(idx);
        std::vector<int> a(static_cast<size_t>(PA.nvars)), b(static_cast<size_t>(PB.nvars)),
            r(interA.size());
        for (int c = 0; c < size_C; ++c) {
            if (posA[static_cast<size_t>(c)] >= 0)
                a[static_cast<size_t>(posA[static_cast<size_t>(c)])] =
                    gamma[static_cast<size_t>(c)];
            if (posB[static_cast<size_t>(c)] >= 0)
                b[static_cast<size_t>(posB[static_cast<size_t>(c)])] =
                    gamma[static_cast<size_t>(c)];
        }
        for (size_t i = 0; i < interA.size(); ++i)
            r[i] = a[static_cast<size_t>(interA[i])];
        const Rat& denom = RInt.at(r);
        if (denom == Rat(0)) continue;
        out.w[idx] = PA.at(a) * PB.at(b) / denom;
    }
    return out;
}

Relation dist_support(const Dist& P, const std::vector<std::string>& varnames) {
    if (varnames.size() != static_cast<size_t>(P.nvars))
        throw std::domain_error("dist_support: name count mismatch");
    Schema schema;
    std::vector<std::string> outcome_names;
    for (int a = 0; a < P.noutcomes; ++a) outcome_names.push_back(std::to_string(a));
    for (const auto& v : varnames) schema.attrs[v] = outcome_names;
    std::vector<std::vector<std::string>> tuples;
    for (size_t idx = 0; idx < P.w.size(); ++idx) {
        if (P.w[idx] == Rat(0)) continue;
        auto t = P.tuple_of(idx);
        std::vector<std::string> row;
        for (int a : t) row.push_back(std::to_string(a));
        tuples.push_back(std::move(row));
    }
    return Relation(schema, varnames, tuples);
}

Feasibility deterministic_joint_exists(const std::vector<MarginalPiece>& pieces) {
    if (pieces.empty()) return Feasibility::Yes;
    int O = pieces.front().dist.noutcomes;
    std::vector<std::string> all_vars;
    for (const auto& p : pieces) {
        if (p.dist.noutcomes != O)
            throw std::domain_error("deterministic_joint_exists: outcome sets differ");
        if (!dist_valid(p.dist))
            throw std::domain_error("deterministic_joint_exists: piece is not a distribution");
        all_vars.insert(all_vars.end(), p.vars.begin(), p.vars.end());
    }
    std::sort(all_vars.begin(), all_vars.end());
    all_vars.erase(std::unique(all_vars.begin(), all_vars.end()), all_vars.end());

    // any joint's support projects into every piece's support, so it lies
    // inside the classical join; emptiness is a non-existence certificate
    Relation join = dist_support(pieces.front().dist, pieces.front().vars);
    for (size_t i = 1; i < pieces.size(); ++i)
        join = join_unchecked(join, dist_support(pieces[i].dist, pieces[i].vars));
    if (join.empty()) return Feasibility::No;

    // try the uniform distribution on the join as a witness
    Dist uniform = Dist::zeros(static_cast<int>(all_vars.size()), O);
    Rat share(1, static_cast<long long>(join.tuples().size()));
    for (const auto& row : join.tuples()) {
        std::vector<int> tuple;
        for (const auto& cell : row) tuple.push_back(std::stoi(cell));
        // join attrs are sorted, matching all_vars
        uniform.w[uniform.index_of(tuple)] = share;
    }
    for (const auto& p : pieces) {
        std::vector<int> f;
        for (const auto& v : p.vars) {
            auto it = std::find(all_vars.begin(), all_vars.end(), v);
            f.push_back(static_cast<int>(it - all_vars.begin()));
        }
        if (!(dist_pull(uniform, f) == p.dist)) return Feasibility::Unknown;
    }
    return Feasibility::Yes;
}

std::vector<MarginalPiece> contradictory_triple() {
    auto corr = Dist(2, 2, {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)});
    auto anti = Dist(2, 2, {Rat(0), Rat(1, 2), Rat(1, 2), Rat(0)});
    return {{{"A", "B"}, corr}, {{"B", "C"}, corr}, {{"A", "C"}, anti}};
}

nlohmann::json dist_to_json(const Dist& P, const std::vector<std::string>& varnames,
                            const std::vector<std::string>& outcomes) {
    std::vector<std::string> vars = varnames, outs = outcomes;
    if (vars.empty())
        for (int i = 0; i < P.nvars; ++i) vars.push_back("x" + std::to_string(i));
    if (outs.empty())
        for (int a = 0; a < P.noutcomes; ++a) outs.push_back(std::to_string(a));
    if (vars.size() != static_cast<size_t>(P.nvars) ||
        outs.size() != static_cast<size_t>(P.noutcomes))
        throw std::domain_error("dist_to_json: name count mismatch");
    nlohmann::json w = nlohmann::json::object();
    for (size_t idx = 0; idx < P.w.size(); ++idx) {
        if (P.w[idx] == Rat(0)) continue;
        auto t = P.tuple_of(idx);
        std::string key;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) key += ",";
            key += outs[static_cast<size_t>(t[i])];
        }
        w[key] = format_rat(P.w[idx]);
    }
    return {{"vars", vars}, {"outcomes", outs}, {"w", w}};
}

Dist dist_from_json(const nlohmann::json& j, std::vector<std::string>* varnames,
                    std::vector<std::string>* outcomes) {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    auto outs = j.at("outcomes").get<std::vector<std::string>>();
    Dist out = Dist::zeros(static_cast<int>(vars.size()), static_cast<int>(outs.size()));
    auto outcome_index = [&](const std::string& s) {
        auto it = std::find(outs.begin(), outs.end(), s);
        if (it == outs.end()) throw std::domain_error("dist json: unknown outcome " + s);
        return static_cast<int>(it - outs.begin());
    };
    for (const auto& [key, val] : j.at("w").items()) {
        std::vector<int> tuple;
        std::string cell;
        for (char c : key + ",") {
            if (c == ',') {
                tuple.push_back(outcome_index(cell));
                cell.clear();
            } else {
                cell += c;
            }
        }
        out.w[out.index_of(tuple)] = parse_rat(val.get<std::string>());
    }
    if (!dist_valid(out)) throw std::domain_error("dist json: not a probability distribution");
    if (varnames) *varnames = vars;
    if (outcomes) *outcomes = outs;
    return out;
}

Dist DistInstance::random_simplex(int n, std::mt19937_64& rng) const {
    Dist out = Dist::zeros(n + 1, noutcomes_);
    long long total = 0;
    std::vector<long long> raw(out.w.size());
    while (total == 0)
        for (size_t i = 0; i < raw.size(); ++i) {
            raw[i] = static_cast<long long>(rng() % static_cast<unsigned long long>(grid_ + 1));
            total += raw[i];
        }
    for (size_t i = 0; i < raw.size(); ++i) out.w[i] = Rat(raw[i], total);
    return out;
}

Dist DistInstance::random_extension(const Simplex& face, int n, std::mt19937_64& rng) const {
    int k = face.nvars - 1;
    if (n < k) throw std::domain_error("random_extension: target dimension below face");
    if (face.noutcomes != noutcomes_)
        throw std::domain_error("random_extension: outcome set mismatch");
    int extra = n - k;
    Dist out = Dist::zeros(n + 1, noutcomes_);
    size_t cond_size = 1;
    for (int i = 0; i < extra; ++i) cond_size *= static_cast<size_t>(noutcomes_);
    // attach a fresh random conditional distribution of the new variables to
    // every assignment of the old ones; the old marginal is untouched
    for (size_t base = 0; base < face.w.size(); ++base) {
        std::vector<long long> raw(cond_size);
        long long total = 0;
        while (total == 0)
            for (size_t i = 0; i < raw.size(); ++i) {
                raw[i] =
                    static_cast<long long>(rng() % static_cast<unsigned long long>(grid_ + 1));
                total += raw[i];
            }
        for (size_t ext = 0; ext < cond_size; ++ext)
            out.w[base + ext * face.w.size()] = face.w[base] * Rat(raw[ext], total);
    }
    return out;
}

}  // namespace gleafkit
