#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace gleafkit {

/// An order-preserving function [m] -> [n] of finite ordinals, stored as its
/// explicit value sequence. Carries all arrows of the simplex category,
/// including the face, degeneracy, and initial/terminal inclusion families.
struct MonotoneMap {
    int dom = 0;  // the m of [m]
    int cod = 0;  // the n of [n]
    std::vector<int> values;  // size m+1, weakly increasing, entries in 0..n

    MonotoneMap() : values{0} {}
    MonotoneMap(int dom_, int cod_, std::vector<int> values_);

    int operator()(int v) const { return values.at(static_cast<size_t>(v)); }

    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
        return a.dom == b.dom && a.cod == b.cod && a.values == b.values;
    }

    std::string str() const;
};

/// Identity on [n].
MonotoneMap identity_map(int n);

/// Face map: the injection [n-1] -> [n] skipping k.
MonotoneMap face(int k, int n);

/// Degeneracy map: the surjection [n+1] -> [n] collapsing k and k+1.
MonotoneMap degeneracy(int k, int n);

/// Initial inclusion [k] -> [n], v |-> v.
MonotoneMap source_incl(int k, int n);

/// Terminal inclusion [k] -> [n], v |-> v + n - k.
MonotoneMap target_incl(int k, int n);

/// compose(g, f) is "g after f": requires f.cod == g.dom.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// All monotone maps [m] -> [n].
std::vector<MonotoneMap> all_monotone_maps(int m, int n);

nlohmann::json monotone_map_to_json(const MonotoneMap& f);
MonotoneMap monotone_map_from_json(const nlohmann::json& j);

}  // namespace gleafkit
