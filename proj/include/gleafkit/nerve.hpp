#pragma once

#include <array>
#include <functional>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "gleafkit/delta.hpp"

namespace gleafkit {

/// A finite category given by an explicit composition table. Associativity,
/// identity neutrality, and totality of composition on composable pairs are
/// validated at construction, so every instance in circulation is lawful.
class FinCategory {
  public:
    struct Mor {
        std::string id;
        std::string src;
        std::string tgt;
    };

    FinCategory(std::vector<std::string> objects, std::vector<Mor> morphisms,
                std::map<std::string, std::string> identities,  // object id -> morphism id
                std::vector<std::array<std::string, 3>> comp);  // {g, f, g∘f}

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
    const std::string& object_name(int o) const { return objects_.at(static_cast<size_t>(o)); }
    const Mor& morphism(int m) const { return morphisms_.at(static_cast<size_t>(m)); }
    int object_index(const std::string& id) const;
    int morphism_index(const std::string& id) const;
    int src(int m) const;
    int tgt(int m) const;
    int identity(int obj) const { return identity_of_.at(static_cast<size_t>(obj)); }
    /// g after f; requires tgt(f) == src(g).
    int compose_mor(int g, int f) const;
    /// All morphism indices with the given source object.
    std::vector<int> out_morphisms(int obj) const;

    nlohmann::json to_json() const;
    static FinCategory from_json(const nlohmann::json& j);

  private:
    std::vector<std::string> objects_;
    std::vector<Mor> morphisms_;
    std::map<std::string, int> obj_index_;
    std::map<std::string, int> mor_index_;
    std::vector<int> identity_of_;
    std::vector<std::vector<int>> comp_;  // comp_[g][f], -1 when not composable

    void validate() const;
};

/// An n-simplex of the nerve: n composable arrows with their n+1 objects,
/// stored as indices into the ambient category.
struct NervePath {
    std::vector<int> objects;  // size n+1
    std::vector<int> arrows;   // size n; arrows[i] goes objects[i] -> objects[i+1]

    int length() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const NervePath& a, const NervePath& b) {
        return a.objects == b.objects && a.arrows == b.arrows;
    }
};

NervePath nerve_act(const FinCategory& C, const NervePath& P, const MonotoneMap& f);
NervePath nerve_compose(const FinCategory& C, const NervePath& A, int k, const NervePath& B);

/// All n-simplices of the nerve.
std::vector<NervePath> nerve_enumerate(const FinCategory& C, int n);

/// True iff exactly one (m+n-k)-simplex has initial m-face A and terminal
/// n-face B, and that simplex is nerve_compose(A, k, B). Checked by exhaustive
/// enumeration.
bool segal_unique(const FinCategory& C, const NervePath& A, int k, const NervePath& B);

nlohmann::json nerve_path_to_json(const FinCategory& C, const NervePath& P);
NervePath nerve_path_from_json(const FinCategory& C, const nlohmann::json& j);

/// The category of a finite preorder: a unique arrow x -> y whenever leq(x,y).
FinCategory poset_category(const std::vector<std::string>& elements,
                           const std::function<bool(int, int)>& leq);

/// A finite monoid as a one-object category; table[a][b] = a∘b.
FinCategory monoid_category(const std::vector<std::string>& elements,
                            const std::vector<std::vector<int>>& table, int unit);

/// The free category on a single arrow a -> b.
FinCategory free_arrow_category();

/// Compository-instance adapter over a fixed finite category.
class NerveInstance {
  public:
    using Simplex = NervePath;

    explicit NerveInstance(const FinCategory& C) : C_(&C) {}

    int dim(const Simplex& P) const { return P.length(); }
    Simplex act(const Simplex& P, const MonotoneMap& f) const { return nerve_act(*C_, P, f); }
    Simplex compose(const Simplex& A, int k, const Simplex& B) const {
        return nerve_compose(*C_, A, k, B);
    }
    bool valid(const Simplex& P) const;
    nlohmann::json to_json(const Simplex& P) const { return nerve_path_to_json(*C_, P); }
    bool exhaustive() const { return true; }
    std::vector<Simplex> enumerate(int n) const { return nerve_enumerate(*C_, n); }
    /// All n-simplices whose initial face equals the given path.
    std::vector<Simplex> extensions(const Simplex& face, int n) const;

    const FinCategory& category() const { return *C_; }

  private:
    const FinCategory* C_;
};

}  // namespace gleafkit
