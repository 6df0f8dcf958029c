#pragma once

#include <json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gleafkit/delta.hpp"
#include "gleafkit/rational.hpp"

namespace gleafkit {

/// A pseudometric on n points: zero diagonal and triangle inequality, with
/// symmetry optional and distances in the nonnegative rationals extended by
/// infinity. Point names live outside; indices 0..n-1 are the points.
struct FiniteMetric {
    int n = 0;
    bool symmetric = true;
    std::vector<ExtRat> d;  // n*n row-major

    FiniteMetric() = default;
    FiniteMetric(int n_, bool symmetric_, std::vector<ExtRat> d_);

    const ExtRat& at(int x, int y) const { return d.at(static_cast<size_t>(x * n + y)); }
    void set(int x, int y, const ExtRat& v) { d.at(static_cast<size_t>(x * n + y)) = v; }

    friend bool operator==(const FiniteMetric& a, const FiniteMetric& b) {
        return a.n == b.n && a.symmetric == b.symmetric && a.d == b.d;
    }
};

/// Zero diagonal, triangle inequality, symmetry when flagged.
bool metric_valid(const FiniteMetric& A);

/// Pullback along an arbitrary reindexing idx: result(x,y) = A(idx[x], idx[y]).
FiniteMetric metric_restrict(const FiniteMetric& A, const std::vector<int>& idx);

/// Simplicial action: (Af)(x,y) = A(f(x), f(y)); A is a metric on [f.cod],
/// i.e. on f.cod+1 points.
FiniteMetric metric_act(const FiniteMetric& A, const MonotoneMap& f);

/// The M1 composition: keep A and B, fill the missing distances with shortest
/// two-leg paths through the shared k+1 points.
FiniteMetric metric_compose(const FiniteMetric& A, int k, const FiniteMetric& B);

/// Glue along inclusions into C = {0..size_C-1}: inclA/inclB list the C-index
/// of each local point. Legs must be injective and jointly surjective, and the
/// two metrics must agree exactly on the intersection. Cross distances are
/// infima of two-leg paths through the intersection; infinity when disjoint.
FiniteMetric metric_glue(const FiniteMetric& dA, const std::vector<int>& inclA,
                         const FiniteMetric& dB, const std::vector<int>& inclB, int size_C);

/// A partially specified distance table; unspecified pairs are free.
struct PartialMetric {
    int n = 0;
    bool symmetric = true;
    std::vector<std::optional<ExtRat>> d;  // n*n row-major, diagonal implicit 0

    const std::optional<ExtRat>& at(int x, int y) const {
        return d.at(static_cast<size_t>(x * n + y));
    }
    void set(int x, int y, const ExtRat& v) { d.at(static_cast<size_t>(x * n + y)) = v; }
};

/// All-pairs shortest-path closure of the specified entries (missing = no
/// direct edge). The closure is the pointwise-largest metric lying below the
/// given upper bounds.
FiniteMetric shortest_path_closure(const PartialMetric& P);

/// True iff some metric extends the partial data exactly: equivalent to the
/// closure reproducing every specified value.
bool extension_exists(const PartialMetric& P);

/// A would-be 3-simplex presented by its 0th, 1st, and 3rd faces (an inner
/// horn): three 2-simplex metrics agreeing on shared edges.
struct MetricHorn {
    FiniteMetric face0, face1, face3;
    /// All six distances of the 4-point space, as forced by the three faces.
    PartialMetric assembled() const;
};

/// Seeded search over a small rational grid for a horn with no filler,
/// certified via extension_exists on the assembled data.
MetricHorn find_unfillable_horn(long long bound, unsigned long long seed);

nlohmann::json metric_to_json(const FiniteMetric& A,
                              const std::vector<std::string>& names = {});
FiniteMetric metric_from_json(const nlohmann::json& j, std::vector<std::string>* names = nullptr);

/// Compository-instance adapter for M1 (sampled, not enumerable: simplices
/// carry rational data).
class MetricInstance {
  public:
    using Simplex = FiniteMetric;

    explicit MetricInstance(bool symmetric = true, long long grid = 12)
        : symmetric_(symmetric), grid_(grid) {}

    int dim(const Simplex& A) const { return A.n - 1; }
    Simplex act(const Simplex& A, const MonotoneMap& f) const { return metric_act(A, f); }
    Simplex compose(const Simplex& A, int k, const Simplex& B) const {
        return metric_compose(A, k, B);
    }
    bool valid(const Simplex& A) const { return A.symmetric == symmetric_ && metric_valid(A); }
    nlohmann::json to_json(const Simplex& A) const { return metric_to_json(A); }
    bool exhaustive() const { return false; }
    Simplex random_simplex(int n, std::mt19937_64& rng) const;
    /// A random (n+1)-point metric whose initial face is the given one.
    Simplex random_extension(const Simplex& face, int n, std::mt19937_64& rng) const;

  private:
    bool symmetric_;
    long long grid_;
};

}  // namespace gleafkit
