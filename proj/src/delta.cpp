#include "gleafkit/delta.hpp"

namespace gleafkit {

MonotoneMap::MonotoneMap(int dom_, int cod_, std::vector<int> values_)
    : dom(dom_), cod(cod_), values(std::move(values_)) {
    if (dom < 0 || cod < 0) throw std::domain_error("MonotoneMap: negative ordinal");
    if (values.size() != static_cast<size_t>(dom) + 1)
        throw std::domain_error("MonotoneMap: value count does not match domain");
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > cod)
            throw std::domain_error("MonotoneMap: value out of range");
        if (i > 0 && values[i] < values[i - 1])
            throw std::domain_error("MonotoneMap: values not weakly increasing");
    }
}

std::string MonotoneMap::str() const {
    std::string s = "[" + std::to_string(dom) + "]->[" + std::to_string(cod) + "]:(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s + ")";
}

MonotoneMap identity_map(int n) {
    std::vector<int> v(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<size_t>(i)] = i;
    return MonotoneMap(n, n, std::move(v));
}

MonotoneMap face(int k, int n) {
    if (n < 1 || k < 0 || k > n) throw std::domain_error("face: need 0 <= k <= n, n >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i < k ? i : i + 1;
    return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap degeneracy(int k, int n) {
    if (k < 0 || k > n) throw std::domain_error("degeneracy: need 0 <= k <= n");
    std::vector<int> v(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n + 1; ++i) v[static_cast<size_t>(i)] = i <= k ? i : i - 1;
    return MonotoneMap(n + 1, n, std::move(v));
}

MonotoneMap source_incl(int k, int n) {
    if (k < 0 || k > n) throw std::domain_error("source_incl: need 0 <= k <= n");
    std::vector<int> v(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) v[static_cast<size_t>(i)] = i;
    return MonotoneMap(k, n, std::move(v));
}

MonotoneMap target_incl(int k, int n) {
    if (k < 0 || k > n) throw std::domain_error("target_incl: need 0 <= k <= n");
    std::vector<int> v(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) v[static_cast<size_t>(i)] = i + n - k;
    return MonotoneMap(k, n, std::move(v));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.cod != g.dom) throw std::domain_error("compose: codomain/domain mismatch");
    std::vector<int> v(f.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = g(f.values[i]);
    return MonotoneMap(f.dom, g.cod, std::move(v));
}

std::vector<MonotoneMap> all_monotone_maps(int m, int n) {
    std::vector<MonotoneMap> out;
    std::vector<int> v(static_cast<size_t>(m) + 1, 0);
    while (true) {
        out.emplace_back(m, n, v);
        // next weakly increasing sequence over 0..n
        int i = m;
        while (i >= 0 && v[static_cast<size_t>(i)] == n) --i;
        if (i < 0) break;
        int next = v[static_cast<size_t>(i)] + 1;
        for (int j = i; j <= m; ++j) v[static_cast<size_t>(j)] = next;
    }
    return out;
}

nlohmann::json monotone_map_to_json(const MonotoneMap& f) {
    return nlohmann::json{{"dom", f.dom}, {"cod", f.cod}, {"values", f.values}};
}

MonotoneMap monotone_map_from_json(const nlohmann::json& j) {
    return MonotoneMap(j.at("dom").get<int>(), j.at("cod").get<int>(),
                       j.at("values").get<std::vector<int>>());
}

}  // namespace gleafkit
