#pragma once

#include <json.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gleafkit {

/// Attribute universe: each attribute name carries its finite value domain.
struct Schema {
    std::map<std::string, std::vector<std::string>> attrs;
};

/// A relation over a subset of the schema's attributes. Attributes are kept
/// sorted and tuples store values in that order, so equality is plain set
/// equality.
class Relation {
  public:
    Relation() = default;
    /// Validates that attrs are unique and every tuple is well-typed.
    Relation(const Schema& schema, std::vector<std::string> attrs,
             std::vector<std::vector<std::string>> tuples);

    const std::vector<std::string>& attrs() const { return attrs_; }
    const std::set<std::vector<std::string>>& tuples() const { return tuples_; }
    const std::map<std::string, std::vector<std::string>>& domains() const { return domains_; }
    bool empty() const { return tuples_.empty(); }

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.attrs_ == b.attrs_ && a.tuples_ == b.tuples_;
    }

  private:
    std::vector<std::string> attrs_;  // sorted
    std::map<std::string, std::vector<std::string>> domains_;
    std::set<std::vector<std::string>> tuples_;

    friend Relation project(const Relation&, const std::vector<std::string>&);
    friend Relation join_unchecked(const Relation&, const Relation&);
};

/// Restriction of every tuple to the given attributes (which must be a subset
/// of the relation's).
Relation project(const Relation& T, const std::vector<std::string>& attrs);

/// Classical natural join: all tuples over the union schema restricting into
/// both relations. Total, no precondition.
Relation join_unchecked(const Relation& A, const Relation& B);

/// The gleaf gluing: natural join, defined only when the two projections to
/// the shared attributes coincide; throws otherwise.
Relation natural_join(const Relation& A, const Relation& B);

nlohmann::json relation_to_json(const Relation& T);
Relation relation_from_json(const nlohmann::json& j);

/// Parse CSV text (first line = attribute names) against the given schema.
Relation relation_from_csv(const Schema& schema, const std::string& csv);

}  // namespace gleafkit
