#pragma once

#include <cstdint>
#include <json.hpp>
#include <set>
#include <string>
#include <vector>

namespace gleafkit {

/// A topology on the finite carrier {0, ..., n-1}; opens are bitmask subsets
/// (bit i = point i), kept as a sorted set so equality is set equality.
struct FinTopology {
    int n = 0;
    std::set<std::uint32_t> opens{0u};

    FinTopology() = default;
    FinTopology(int n_, std::set<std::uint32_t> opens_);

    std::uint32_t full() const { return n == 0 ? 0u : ((1u << n) - 1u); }

    friend bool operator==(const FinTopology& a, const FinTopology& b) {
        return a.n == b.n && a.opens == b.opens;
    }
    friend bool operator<(const FinTopology& a, const FinTopology& b) {
        return a.n != b.n ? a.n < b.n : a.opens < b.opens;
    }
};

/// Contains the empty set and the carrier, and is closed under pairwise
/// union and intersection.
bool top_valid(const FinTopology& tau);

FinTopology discrete_topology(int n);
FinTopology indiscrete_topology(int n);

/// Pullback along an arbitrary function f: {0..|f|-1} -> carrier(tau);
/// opens become preimages. The result is automatically a topology.
FinTopology top_act(const FinTopology& tau, const std::vector<int>& f);

/// Subspace topology on the listed points (an inclusion pulled back).
FinTopology top_restrict(const FinTopology& tau, const std::vector<int>& subset);

/// Glue along inclusions with jointly surjective images: the result is
/// { U subset of C : U cap A open in tau_A and U cap B open in tau_B }.
/// Requires the subspace topologies on the intersection to agree.
FinTopology top_glue(const FinTopology& tauA, const std::vector<int>& inclA,
                     const FinTopology& tauB, const std::vector<int>& inclB, int size_C);

/// All topologies on an n-point carrier (n <= 4), computed by filtering
/// union/intersection-closed families and cached after the first call.
/// Counts: 1, 1, 4, 29, 355 for n = 0..4.
const std::vector<FinTopology>& enumerate_topologies(int n);

struct TopologyPiece {
    std::vector<int> subset;  // carrier points inside C, strictly increasing
    FinTopology tau;
};

/// Whether some topology on {0..size_C-1} restricts to every given piece
/// as its subspace topology. Decided by exhaustive enumeration (size_C <= 4).
bool common_extension_exists(const std::vector<TopologyPiece>& pieces, int size_C);

/// Three two-point pieces on the carrier {0,1,2} — the sets {0,1} and {1,2}
/// indiscrete, the set {0,2} discrete — whose subspace topologies agree
/// pairwise yet admit no common extension.
std::vector<TopologyPiece> triangle_pieces();

nlohmann::json topology_to_json(const FinTopology& tau,
                                const std::vector<std::string>& points = {});
FinTopology topology_from_json(const nlohmann::json& j,
                               std::vector<std::string>* points = nullptr);

}  // namespace gleafkit
