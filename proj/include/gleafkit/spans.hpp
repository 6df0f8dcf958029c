#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gleafkit/delta.hpp"
#include "gleafkit/nerve.hpp"

namespace gleafkit {

/// A finite lattice presented by its order relation. Element x is below y
/// exactly when the category has an arrow x -> y; meets (greatest lower
/// bounds) are computed and their existence validated at construction, which
/// is what makes pullbacks strictly unique here.
class FinLattice {
  public:
    FinLattice(std::vector<std::string> elements,
               std::vector<std::pair<std::string, std::string>> leq_pairs);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::string& name(int i) const { return elements_.at(static_cast<size_t>(i)); }
    int index(const std::string& id) const;
    bool leq(int a, int b) const {
        return leq_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b));
    }
    int meet(int a, int b) const {
        return meet_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b));
    }

    /// The lattice viewed as a poset category (for the nerve embedding).
    FinCategory as_category() const;

    nlohmann::json to_json() const;
    static FinLattice from_json(const nlohmann::json& j);

  private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<int>> meet_;
};

/// An n-span: a monotone map from the intervals (v,w), 0 <= v <= w <= n,
/// ordered by reverse containment, into a lattice. Entries are lattice
/// element indices.
struct NSpan {
    int n = 0;
    std::vector<int> val;  // position (v,w) at index w*(w+1)/2 + v

    NSpan() : val{0} {}
    NSpan(int n_, std::vector<int> val_);

    int at(int v, int w) const { return val.at(static_cast<size_t>(w * (w + 1) / 2 + v)); }
    void set(int v, int w, int x) { val.at(static_cast<size_t>(w * (w + 1) / 2 + v)) = x; }

    friend bool operator==(const NSpan& a, const NSpan& b) { return a.n == b.n && a.val == b.val; }
};

/// Functor monotonicity: val(v,w) <= val(v',w') whenever (v',w') is a
/// subinterval of (v,w).
bool span_valid(const FinLattice& L, const NSpan& A);

NSpan span_act(const NSpan& A, const MonotoneMap& f);
NSpan span_compose(const FinLattice& L, const NSpan& A, int k, const NSpan& B);

/// All n-spans, optionally with some positions pinned to given values.
std::vector<NSpan> span_enumerate(const FinLattice& L, int n,
                                  const std::map<std::pair<int, int>, int>& fixed = {});

/// Embed a monotone path in the lattice's poset category as an n-span:
/// val(v,w) = path object at v, or at n-w when `bar` is set.
NSpan nerve_to_spans(const FinLattice& L, const NervePath& P, bool bar = false);

/// Exhaustive search for a dim-simplex whose i-th faces match the given ones.
std::optional<NSpan> horn_filler_search(const FinLattice& L, int dim,
                                        const std::map<int, NSpan>& faces);

nlohmann::json span_to_json(const FinLattice& L, const NSpan& A);
NSpan span_from_json(const FinLattice& L, const nlohmann::json& j);

/// The four-element diamond used throughout: top below alpha, beta; everything
/// below bot. (The order is arrow existence in the span-apex direction, so
/// "top" is the least element.)
FinLattice diamond_lattice();

/// The horn (A, B, C) witnessing that spans over the diamond admit no filler:
/// keys 0, 1, 3 are the faces of a would-be 3-simplex.
std::map<int, NSpan> diamond_horn(const FinLattice& L);

/// Compository-instance adapter over a fixed finite lattice.
class SpanInstance {
  public:
    using Simplex = NSpan;

    explicit SpanInstance(const FinLattice& L) : L_(&L) {}

    int dim(const Simplex& A) const { return A.n; }
    Simplex act(const Simplex& A, const MonotoneMap& f) const { return span_act(A, f); }
    Simplex compose(const Simplex& A, int k, const Simplex& B) const {
        return span_compose(*L_, A, k, B);
    }
    bool valid(const Simplex& A) const { return span_valid(*L_, A); }
    nlohmann::json to_json(const Simplex& A) const { return span_to_json(*L_, A); }
    bool exhaustive() const { return true; }
    std::vector<Simplex> enumerate(int n) const { return span_enumerate(*L_, n); }
    std::vector<Simplex> extensions(const Simplex& face, int n) const;

    const FinLattice& lattice() const { return *L_; }

  private:
    const FinLattice* L_;
};

}  // namespace gleafkit
