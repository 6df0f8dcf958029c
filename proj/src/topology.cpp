#include "gleafkit/topology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gleafkit {

FinTopology::FinTopology(int n_, std::set<std::uint32_t> opens_)
    : n(n_), opens(std::move(opens_)) {
    if (n < 0 || n > 30) throw std::domain_error("FinTopology: carrier size out of range");
    for (std::uint32_t U : opens)
        if ((U & ~full()) != 0)
            throw std::domain_error("FinTopology: open set outside the carrier");
}

bool top_valid(const FinTopology& tau) {
    if (!tau.opens.count(0u) || !tau.opens.count(tau.full())) return false;
    for (std::uint32_t U : tau.opens)
        for (std::uint32_t V : tau.opens)
            if (!tau.opens.count(U | V) || !tau.opens.count(U & V)) return false;
    return true;
}

FinTopology discrete_topology(int n) {
    std::set<std::uint32_t> opens;
    for (std::uint32_t U = 0; U < (1u << n); ++U) opens.insert(U);
    return FinTopology(n, std::move(opens));
}

FinTopology indiscrete_topology(int n) {
    FinTopology tau(n, {0u});
    tau.opens.insert(tau.full());
    return tau;
}

FinTopology top_act(const FinTopology& tau, const std::vector<int>& f) {
    for (int x : f)
        if (x < 0 || x >= tau.n) throw std::domain_error("top_act: point out of range");
    FinTopology out(static_cast<int>(f.size()), {});
    for (std::uint32_t U : tau.opens) {
        std::uint32_t pre = 0;
        for (size_t i = 0; i < f.size(); ++i)
            if (U & (1u << f[i])) pre |= (1u << i);
        out.opens.insert(pre);
    }
    return out;
}

FinTopology top_restrict(const FinTopology& tau, const std::vector<int>& subset) {
    for (size_t i = 0; i + 1 < subset.size(); ++i)
        if (subset[i] >= subset[i + 1])
            throw std::domain_error("top_restrict: subset must be strictly increasing");
    return top_act(tau, subset);
}

FinTopology top_glue(const FinTopology& tauA, const std::vector<int>& inclA,
                     const FinTopology& tauB, const std::vector<int>& inclB, int size_C) {
    if (static_cast<int>(inclA.size()) != tauA.n || static_cast<int>(inclB.size()) != tauB.n)
        throw std::domain_error("top_glue: inclusion length mismatch");
    std::vector<int> posA(static_cast<size_t>(size_C), -1), posB(static_cast<size_t>(size_C), -1);
    for (int i = 0; i < tauA.n; ++i) {
        int c = inclA.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posA[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("top_glue: leg A not an injection into C");
        posA[static_cast<size_t>(c)] = i;
    }
    for (int i = 0; i < tauB.n; ++i) {
        int c = inclB.at(static_cast<size_t>(i));
        if (c < 0 || c >= size_C || posB[static_cast<size_t>(c)] >= 0)
            throw std::domain_error("top_glue: leg B not an injection into C");
        posB[static_cast<size_t>(c)] = i;
    }
    std::vector<int> interA, interB;
    for (int c = 0; c < size_C; ++c) {
        int a = posA[static_cast<size_t>(c)], b = posB[static_cast<size_t>(c)];
        if (a < 0 && b < 0)
            throw std::domain_error("top_glue: legs are not jointly surjective");
        if (a >= 0 && b >= 0) {
            interA.push_back(a);
            interB.push_back(b);
        }
    }
    if (!(top_act(tauA, interA) == top_act(tauB, interB)))
        throw std::domain_error("top_glue: subspace topologies on the intersection disagree");

    FinTopology out(size_C, {});
    for (std::uint32_t U = 0; U < (1u << size_C); ++U) {
        std::uint32_t UA = 0, UB = 0;
        for (int c = 0; c < size_C; ++c)
            if (U & (1u << c)) {
                if (posA[static_cast<size_t>(c)] >= 0)
                    UA |= (1u << posA[static_cast<size_t>(c)]);
                if (posB[static_cast<size_t>(c)] >= 0)
                    UB |= (1u << posB[static_cast<size_t>(c)]);
            }
        if (tauA.opens.count(UA) && tauB.opens.count(UB)) out.opens.insert(U);
    }
    return out;
}

const std::vector<FinTopology>& enumerate_topologies(int n) {
    static std::map<int, std::vector<FinTopology>> cache;
    if (n < 0 || n > 4)
        throw std::domain_error("enumerate_topologies: supported for carriers of size <= 4");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // a family of subsets of {0..n-1} is a word over the 2^n possible opens;
    // filter the 2^(2^n) families down to the topologies
    std::vector<FinTopology> out;
    std::uint32_t nsubsets = 1u << n;
    std::uint64_t nfamilies = 1ull << nsubsets;
    for (std::uint64_t fam = 0; fam < nfamilies; ++fam) {
        std::uint32_t empty_and_full = (1u) | (1u << (nsubsets - 1));
        if ((fam & empty_and_full) != empty_and_full) continue;
        std::vector<std::uint32_t> members;
        for (std::uint32_t U = 0; U < nsubsets; ++U)
            if (fam & (1ull << U)) members.push_back(U);
        bool closed = true;
        for (size_t i = 0; i < members.size() && closed; ++i)
            for (size_t j = i + 1; j < members.size() && closed; ++j)
                closed = (fam >> (members[i] | members[j]) & 1ull) &&
                         (fam >> (members[i] & members[j]) & 1ull);
        if (!closed) continue;
        out.push_back(
            FinTopology(n, std::set<std::uint32_t>(members.begin(), members.end())));
    }
    return cache.emplace(n, std::move(out)).first->second;
}

bool common_extension_exists(const std::vector<TopologyPiece>& pieces, int size_C) {
    for (const FinTopology& tau : enumerate_topologies(size_C)) {
        bool ok = true;
        for (const auto& p : pieces)
            if (!(top_restrict(tau, p.subset) == p.tau)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

std::vector<TopologyPiece> triangle_pieces() {
    return {{{0, 1}, indiscrete_topology(2)},
            {{1, 2}, indiscrete_topology(2)},
            {{0, 2}, discrete_topology(2)}};
}

nlohmann::json topology_to_json(const FinTopology& tau,
                                const std::vector<std::string>& points) {
    std::vector<std::string> pts = points;
    if (pts.empty())
        for (int i = 0; i < tau.n; ++i) pts.push_back("p" + std::to_string(i));
    if (pts.size() != static_cast<size_t>(tau.n))
        throw std::domain_error("topology_to_json: point name count mismatch");
    nlohmann::json opens = nlohmann::json::array();
    for (std::uint32_t U : tau.opens) {
        nlohmann::json open = nlohmann::json::array();
        for (int i = 0; i < tau.n; ++i)
            if (U & (1u << i)) open.push_back(pts[static_cast<size_t>(i)]);
        opens.push_back(std::move(open));
    }
    return {{"carrier", pts}, {"opens", opens}};
}

FinTopology topology_from_json(const nlohmann::json& j, std::vector<std::string>* points) {
    auto pts = j.at("carrier").get<std::vector<std::string>>();
    FinTopology tau(static_cast<int>(pts.size()), {});
    for (const auto& open : j.at("opens")) {
        std::uint32_t U = 0;
        for (const auto& name : open) {
            auto it = std::find(pts.begin(), pts.end(), name.get<std::string>());
            if (it == pts.end())
                throw std::domain_error("topology json: unknown point in open set");
            U |= (1u << (it - pts.begin()));
        }
        tau.opens.insert(U);
    }
    if (!top_valid(tau))
        throw std::domain_error("topology json: family of opens is not a topology");
    if (points) *points = pts;
    return tau;
}

}  // namespace gleafkit
