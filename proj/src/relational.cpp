#include "gleafkit/relational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gleafkit {

Relation::Relation(const Schema& schema, std::vector<std::string> attrs,
                   std::vector<std::vector<std::string>> tuples) {
    // canonicalize: sort attributes, permute tuple values accordingly
    std::vector<size_t> order(attrs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return attrs[a] < attrs[b]; });
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (attrs[order[i]] == attrs[order[i + 1]])
            throw std::domain_error("Relation: duplicate attribute " + attrs[order[i]]);
    for (size_t i : order) {
        auto it = schema.attrs.find(attrs[i]);
        if (it == schema.attrs.end())
            throw std::domain_error("Relation: attribute " + attrs[i] + " not in schema");
        attrs_.push_back(attrs[i]);
        domains_[attrs[i]] = it->second;
    }
    for (const auto& t : tuples) {
        if (t.size() != attrs.size())
            throw std::domain_error("Relation: tuple arity mismatch");
        std::vector<std::string> row;
        for (size_t i : order) {
            const auto& dom = domains_.at(attrs[i]);
            if (std::find(dom.begin(), dom.end(), t[i]) == dom.end())
                throw std::domain_error("Relation: value '" + t[i] +
                                        "' outside domain of " + attrs[i]);
            row.push_back(t[i]);
        }
        tuples_.insert(std::move(row));
    }
}

Relation project(const Relation& T, const std::vector<std::string>& attrs) {
    std::vector<size_t> pick;
    Relation out;
    std::vector<std::string> sorted = attrs;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& a : sorted) {
        auto it = std::find(T.attrs_.begin(), T.attrs_.end(), a);
        if (it == T.attrs_.end())
            throw std::domain_error("project: attribute " + a + " not in relation");
        pick.push_back(static_cast<size_t>(it - T.attrs_.begin()));
        out.attrs_.push_back(a);
        out.domains_[a] = T.domains_.at(a);
    }
    for (const auto& t : T.tuples_) {
        std::vector<std::string> row;
        for (size_t i : pick) row.push_back(t[i]);
        out.tuples_.insert(std::move(row));
    }
    return out;
}

Relation join_unchecked(const Relation& A, const Relation& B) {
    Relation out;
    std::vector<std::string> all = A.attrs_;
    all.insert(all.end(), B.attrs_.begin(), B.attrs_.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    out.attrs_ = all;
    for (const auto& a : all) {
        auto it = A.domains_.find(a);
        out.domains_[a] = it != A.domains_.end() ? it->second : B.domains_.at(a);
    }
    // positions of each union attribute inside A and B (-1 when absent)
    std::vector<int> inA(all.size(), -1), inB(all.size(), -1);
    for (size_t i = 0; i < all.size(); ++i) {
        auto ia = std::find(A.attrs_.begin(), A.attrs_.end(), all[i]);
        if (ia != A.attrs_.end()) inA[i] = static_cast<int>(ia - A.attrs_.begin());
        auto ib = std::find(B.attrs_.begin(), B.attrs_.end(), all[i]);
        if (ib != B.attrs_.end()) inB[i] = static_cast<int>(ib - B.attrs_.begin());
    }
    for (const auto& ta : A.tuples_)
        for (const auto& tb : B.tuples_) {
            std::vector<std::string> row(all.size());
            bool ok = true;
            for (size_t i = 0; i < all.size() && ok; ++i) {
                if (inA[i] >= 0 && inB[i] >= 0) {
                    if (ta[static_cast<size_t>(inA[i])] != tb[static_cast<size_t>(inB[i])])
                        ok = false;
                    else
                        row[i] = ta[static_cast<size_t>(inA[i])];
                } else if (inA[i] >= 0) {
                    row[i] = ta[static_cast<size_t>(inA[i])];
                } else {
                    row[i] = tb[static_cast<size_t>(inB[i])];
                }
            }
            if (ok) out.tuples_.insert(std::move(row));
        }
    return out;
}

Relation natural_join(const Relation& A, const Relation& B) {
    std::vector<std::string> shared;
    std::set_intersection(A.attrs().begin(), A.attrs().end(), B.attrs().begin(),
                          B.attrs().end(), std::back_inserter(shared));
    if (!(project(A, shared) == project(B, shared)))
        throw std::domain_error("natural_join: projections to shared attributes disagree");
    return join_unchecked(A, B);
}

nlohmann::json relation_to_json(const Relation& T) {
    nlohmann::json attrs = nlohmann::json::object();
    for (const auto& [a, dom] : T.domains()) attrs[a] = dom;
    nlohmann::json tuples = nlohmann::json::array();
    for (const auto& t : T.tuples()) {
        nlohmann::json row = nlohmann::json::object();
        for (size_t i = 0; i < T.attrs().size(); ++i) row[T.attrs()[i]] = t[i];
        tuples.push_back(std::move(row));
    }
    return {{"attrs", attrs}, {"tuples", tuples}};
}

Relation relation_from_json(const nlohmann::json& j) {
    Schema schema;
    std::vector<std::string> attrs;
    for (const auto& [a, dom] : j.at("attrs").items()) {
        schema.attrs[a] = dom.get<std::vector<std::string>>();
        attrs.push_back(a);
    }
    std::sort(attrs.begin(), attrs.end());
    std::vector<std::vector<std::string>> tuples;
    for (const auto& row : j.at("tuples")) {
        std::vector<std::string> t;
        for (const auto& a : attrs) t.push_back(row.at(a).get<std::string>());
        tuples.push_back(std::move(t));
    }
    return Relation(schema, attrs, tuples);
}

Relation relation_from_csv(const Schema& schema, const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::domain_error("csv: missing header");
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cell;
        std::istringstream ls(s);
        while (std::getline(ls, cell, ',')) out.push_back(cell);
        if (!s.empty() && s.back() == ',') out.push_back("");
        return out;
    };
    auto attrs = split(line);
    std::vector<std::vector<std::string>> tuples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto row = split(line);
        if (row.size() != attrs.size()) throw std::domain_error("csv: ragged row");
        tuples.push_back(std::move(row));
    }
    return Relation(schema, attrs, tuples);
}

}  // namespace gleafkit
