#pragma once

// Finite (truncated) chain and cochain complexes, bicomplexes and homology.

#include "homcyc/error.hpp"
#include "homcyc/linalg.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homcyc {

enum class Grading { Homological, Cohomological };

/// Degrees base .. base + dims.size() - 1.
///
/// maps[k] joins degree base+k and base+k+1. Homologically it is the
/// boundary C_{base+k+1} -> C_{base+k} (dims[k] x dims[k+1]); cohomologically
/// the coboundary C^{base+k} -> C^{base+k+1} (dims[k+1] x dims[k]).
///
/// `closed_below` / `closed_above` say whether the complex is genuinely zero
/// past its lowest / highest stored degree. Homology at an open end is
/// refused.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(Grading grading, int base_degree, std::vector<std::size_t> dims, std::vector<Matrix> maps,
                 bool closed_below = true, bool closed_above = false);

    Grading grading() const { return grading_; }
    int min_degree() const { return base_; }
    int max_degree() const { return base_ + static_cast<int>(dims_.size()) - 1; }
    bool closed_below() const { return closed_below_; }
    bool closed_above() const { return closed_above_; }
    bool has_degree(int n) const { return n >= min_degree() && n <= max_degree(); }
    std::size_t dim(int n) const;

    /// The differential leaving degree n (zero matrix past the stored range).
    Matrix outgoing(int n) const;
    /// The differential arriving in degree n.
    Matrix incoming(int n) const;
    /// True when homology at n is determined by the stored data.
    bool exact_at(int n) const;

    /// Throws InvariantError if some composite of consecutive maps is nonzero.
    void verify() const;

private:
    // Map between degree n and the next degree in the direction of the grading.
    const Matrix* between(int lower) const;

    Grading grading_ = Grading::Homological;
    int base_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
    bool closed_below_ = true;
    bool closed_above_ = false;
};

struct DegreeHomology {
    int degree = 0;
    std::size_t chain_dim = 0;
    std::size_t cycles_dim = 0;
    std::size_t boundaries_dim = 0;
    std::size_t betti = 0;
    // Filled only when representatives are requested.
    std::optional<Subspace> cycles;
    std::optional<Subspace> boundaries;
    std::vector<Vector> representatives;
};

struct HomologyOptions {
    bool representatives = false;
    bool check_square_zero = true;
};

DegreeHomology homology_at(const ChainComplex& c, int n, const HomologyOptions& opts = {});
/// Degrees lo..hi, computed in parallel (HOMCYC_THREADS caps the workers).
std::vector<DegreeHomology> homology(const ChainComplex& c, int lo, int hi, const HomologyOptions& opts = {});

/// Per-degree results of one (co)homology computation.
struct HomologyReport {
    std::string theory;  // "HH", "HC", "HP", "HH-co", ..
    std::string algebra;
    std::string method;
    Grading grading = Grading::Homological;
    std::map<std::string, long> parameters;
    std::vector<DegreeHomology> degrees;
    // Names of the chain coordinates, per degree (same order as `degrees`).
    std::vector<std::vector<std::string>> chain_labels;
    std::vector<std::string> notes;

    std::vector<std::size_t> betti() const;
    const DegreeHomology& at(int n) const;
};

/// Coordinates of the class of a cycle in the representative basis.
/// Throws DegreeError if `h` was computed without representatives and
/// PreconditionError if v is not a cycle.
Vector homology_coordinates(const DegreeHomology& h, std::span<const Scalar> v);

/// Matrix of the map induced on homology by the chain map component f
/// (target chains x source chains) in representative bases.
Matrix induced_on_homology(const Matrix& f, const DegreeHomology& source, const DegreeHomology& target);

/// The complex restricted to subspaces S_n (one per stored degree, in the
/// order of degrees) in the coordinates of their RREF bases. Throws
/// NotASubspaceError unless d(S_n) lies in S_{n-1} (resp. S_{n+1}).
ChainComplex sub_complex(const ChainComplex& c, const std::vector<Subspace>& subs);
/// The quotient complex C_n / S_n on the canonical quotient coordinates
/// (Subspace::quotient_coordinates). Same stability requirement.
ChainComplex quotient_complex(const ChainComplex& c, const std::vector<Subspace>& subs);

/// Cells (p, q). Homologically the vertical map goes (p,q) -> (p,q-1) and
/// the horizontal one (p,q) -> (p-1,q); cohomologically (p,q+1) and (p+1,q).
/// Squares are expected to anticommute, so the total differential is v + h.
class Bicomplex {
public:
    explicit Bicomplex(Grading grading) : grading_(grading) {}

    Grading grading() const { return grading_; }
    void add_cell(int p, int q, std::size_t dim);
    void set_vertical(int p, int q, Matrix m);
    void set_horizontal(int p, int q, Matrix m);

    bool has_cell(int p, int q) const { return cells_.count({p, q}) != 0; }
    std::size_t dim(int p, int q) const;
    const std::map<std::pair<int, int>, std::size_t>& cells() const { return cells_; }
    const Matrix* vertical(int p, int q) const;
    const Matrix* horizontal(int p, int q) const;

    /// v^2 = 0, h^2 = 0 and vh + hv = 0 wherever all cells are present.
    void verify() const;

private:
    Grading grading_;
    std::map<std::pair<int, int>, std::size_t> cells_;
    std::map<std::pair<int, int>, Matrix> vertical_;
    std::map<std::pair<int, int>, Matrix> horizontal_;
};

/// Direct-sum total complex in degrees lo..hi. Components of the
/// differential that land outside the stored cells are dropped. Summands of
/// Tot_n are ordered by increasing p.
ChainComplex total_complex(const Bicomplex& b, int lo, int hi, bool closed_below, bool closed_above);

/// Position of the (p, n-p) summand inside Tot_n, or nullopt.
std::optional<std::size_t> total_offset(const Bicomplex& b, int n, int p);

/// Number of worker threads: HOMCYC_THREADS if set, else the hardware count.
std::size_t worker_count();
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace homcyc
