#pragma once

#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "gleafkit/delta.hpp"
#include "gleafkit/rational.hpp"
#include "gleafkit/relational.hpp"

namespace gleafkit {

/// A joint distribution of `nvars` variables over a common finite outcome set
/// of size `noutcomes`, stored as a dense table of exact rational weights.
/// Tuple (a_0,...,a_{v-1}) sits at index sum a_i * noutcomes^i.
struct Dist {
    int nvars = 0;
    int noutcomes = 2;
    std::vector<Rat> w;

    Dist() : w{Rat(1)} {}
    Dist(int nvars_, int noutcomes_, std::vector<Rat> w_);
    /// All-zero table of the right size (not yet a distribution).
    static Dist zeros(int nvars_, int noutcomes_);

    size_t table_size() const;
    const Rat& at(const std::vector<int>& tuple) const { return w.at(index_of(tuple)); }
    void set(const std::vector<int>& tuple, const Rat& v) { w.at(index_of(tuple)) = v; }
    size_t index_of(const std::vector<int>& tuple) const;
    std::vector<int> tuple_of(size_t index) const;

    friend bool operator==(const Dist& a, const Dist& b) {
        return a.nvars == b.nvars && a.noutcomes == b.noutcomes && a.w == b.w;
    }
};

/// Weights nonnegative and summing to exactly 1.
bool dist_valid(const Dist& P);

/// Pullback along an arbitrary index function f: result variable i reads
/// P-variable f[i]; weights of P-tuples are summed over the fibers. Covers
/// marginals (f omits variables) and duplications (f repeats them).
Dist dist_pull(const Dist& P, const std::vector<int>& f);

/// Simplicial action: dist_pull along f.values; P must have f.cod+1 variables.
Dist dist_act(const Dist& P, const MonotoneMap& f);

/// The P_O composition: (P o_k Q)(a) = P(a_0..a_m) Q(a_{m-k}..a_{m+n-k}) / R,
/// where R is the shared marginal on the overlapping k+1 variables; 0/0 = 0.
Dist dist_compose(const Dist& P, int k, const Dist& Q);

/// Glue along inclusions into C = {0..size_C-1}: inclA/inclB give the C-index
/// of each local variable. Marginals on the intersection must agree exactly.
Dist dist_glue(const Dist& PA, const std::vector<int>& inclA, const Dist& PB,
               const std::vector<int>& inclB, int size_C);

/// The support of a distribution with named variables, as a relation whose
/// attribute domains are "0".."noutcomes-1".
Relation dist_support(const Dist& P, const std::vector<std::string>& varnames);

enum class Feasibility { No, Yes, Unknown };

/// A marginal table of the would-be joint: named variables plus their
/// distribution.
struct MarginalPiece {
    std::vector<std::string> vars;
    Dist dist;
};

/// Certificate-based test for the marginal problem: an empty natural join of
/// the supports proves no joint exists; Yes is claimed only when the uniform
/// distribution on the join reproduces every given marginal.
Feasibility deterministic_joint_exists(const std::vector<MarginalPiece>& pieces);

/// The correlation / correlation / anticorrelation triple on binary outcomes.
std::vector<MarginalPiece> contradictory_triple();

nlohmann::json dist_to_json(const Dist& P, const std::vector<std::string>& varnames = {},
                            const std::vector<std::string>& outcomes = {});
Dist dist_from_json(const nlohmann::json& j, std::vector<std::string>* varnames = nullptr,
                    std::vector<std::string>* outcomes = nullptr);

/// Compository-instance adapter for P_O (sampled: simplices carry rational
/// tables).
class DistInstance {
  public:
    using Simplex = Dist;

    explicit DistInstance(int noutcomes = 2, long long grid = 6)
        : noutcomes_(noutcomes), grid_(grid) {}

    int dim(const Simplex& P) const { return P.nvars - 1; }
    Simplex act(const Simplex& P, const MonotoneMap& f) const { return dist_act(P, f); }
    Simplex compose(const Simplex& P, int k, const Simplex& Q) const {
        return dist_compose(P, k, Q);
    }
    bool valid(const Simplex& P) const { return P.noutcomes == noutcomes_ && dist_valid(P); }
    nlohmann::json to_json(const Simplex& P) const { return dist_to_json(P); }
    bool exhaustive() const { return false; }
    Simplex random_simplex(int n, std::mt19937_64& rng) const;
    /// Extends the given distribution on the first k+1 variables to n+1
    /// variables by attaching a random conditional for the new ones.
    Simplex random_extension(const Simplex& face, int n, std::mt19937_64& rng) const;

  private:
    int noutcomes_;
    long long grid_;
};

}  // namespace gleafkit
