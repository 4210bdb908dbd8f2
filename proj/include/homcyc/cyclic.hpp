#pragma once

// Cyclic and periodic cyclic (co)homology.

#include "homcyc/hochschild.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcyc {

/// C(A) / im(Id - t) in degrees 0..max_degree+1.
ChainComplex build_lambda_complex(const HomAlgebra& a, int max_degree);
/// ker(Id - t) inside C(A, A*) in degrees 0..max_degree+1.
ChainComplex build_lambda_cocomplex(const HomAlgebra& a, int max_degree);

/// Columns b (p even) and -b' (p odd), rows Id - t (from odd p) and N (from
/// even p). Cells (p, q) with p in [p_lo, p_hi], q >= 0, p + q in
/// [n_lo, n_hi].
Bicomplex cyclic_bicomplex(const HomAlgebra& a, int p_lo, int p_hi, int n_lo, int n_hi);
/// The transposed picture on cochains of C(A, A*).
Bicomplex cocyclic_bicomplex(const HomAlgebra& a, int p_lo, int p_hi, int n_lo, int n_hi);

HomologyReport cyclic_homology_lambda(const HomAlgebra& a, int max_degree, bool representatives = false);
/// columns = index of the last column kept, at least max_degree + 1.
HomologyReport cyclic_homology_bicomplex(const HomAlgebra& a, int max_degree, int columns, bool representatives = false);
HomologyReport cyclic_cohomology_lambda(const HomAlgebra& a, int max_degree, bool representatives = false);
HomologyReport cyclic_cohomology_bicomplex(const HomAlgebra& a, int max_degree, int columns,
                                           bool representatives = false);

enum class CyclicMethod { Lambda, Bicomplex, Both };

struct CyclicReport {
    std::string algebra;
    Grading grading = Grading::Homological;
    int max_degree = 0;
    int columns = 0;
    std::optional<HomologyReport> lambda;
    std::optional<HomologyReport> bicomplex;
    std::vector<bool> agree;  // per degree, when both were run

    bool all_agree() const;
};

CyclicReport cyclic_homology(const HomAlgebra& a, int max_degree, CyclicMethod method, int columns = -1,
                             bool representatives = false);
CyclicReport cyclic_cohomology(const HomAlgebra& a, int max_degree, CyclicMethod method, int columns = -1,
                               bool representatives = false);

/// Two runs of the two-sided bicomplex, columns [-P, P] and [-P-1, P+1].
/// Homologically the columns p < -P are cut off as a quotient, which
/// approximates the product total complex; cohomologically they are dropped
/// as a subcomplex of the direct-sum total complex.
struct PeriodicReport {
    std::string algebra;
    Grading grading = Grading::Homological;
    int window = 0;
    HomologyReport run;
    HomologyReport wider;
    std::vector<bool> stabilized;
    // Values on stabilized degrees, by parity; nullopt if no stabilized
    // degree of that parity exists.
    std::optional<std::size_t> even;
    std::optional<std::size_t> odd;
    bool parity_consistent = true;
};

/// window >= max_degree + 1; -1 picks max_degree + 1.
PeriodicReport periodic_homology(const HomAlgebra& a, int max_degree, int window = -1);
PeriodicReport periodic_cohomology(const HomAlgebra& a, int max_degree, int window = -1);

/// Outcome of the (b, B) construction, B = (Id - t) s N with
/// s(a_0 .. a_n) = 1 (x) a_0 .. a_n.
struct BBReport {
    std::string algebra;
    int max_degree = 0;
    std::vector<int> b_squared_failures;     // degrees n with B_{n+1} B_n != 0
    std::vector<int> anticommute_failures;   // degrees n with bB + Bb != 0 on C_n
    std::optional<HomologyReport> homology;  // only when both identities hold
    std::optional<std::vector<bool>> agrees_with_bicomplex;

    bool identities_hold() const { return b_squared_failures.empty() && anticommute_failures.empty(); }
};

/// Connes' operator C_n -> C_{n+1}. Needs a unit.
Matrix connes_B(const HomAlgebra& a, int n);
/// Throws PreconditionError if A has no unit.
BBReport connes_bB_bicomplex(const HomAlgebra& a, int max_degree);

enum class Theory { HH, HC };

struct InducedMap {
    Matrix chain_map;      // degree n component f (x) .. (x) f
    bool commutes = true;  // with b in degrees n and n+1 (and with t for HC)
    Matrix on_homology;    // target betti x source betti
    std::size_t source_betti = 0;
    std::size_t target_betti = 0;
};

/// Throws ValidationError if f is not a morphism and InvariantError if the
/// tensor power fails to be a chain map.
InducedMap induced_map_on_homology(const AlgebraMorphism& f, Theory theory, int n);

struct XiMap {
    HomAlgebra twisted;     // A_alpha
    Matrix on_cochains;     // C^n(A, A*) -> C^n(A_alpha, A_alpha*)
    bool commutes = true;   // with the coboundaries into degree n+1
    bool preserves_cyclic = true;
    Matrix on_cyclic_cohomology;  // HC^n(A) -> HC^n(A_alpha) in representative bases
};

/// phi -> phi o alpha^(x)(n+1). Needs alpha = Id on `assoc` and an
/// idempotent algebra endomorphism `endo`.
XiMap xi_map(const HomAlgebra& assoc, const Matrix& endo, int n);

}  // namespace homcyc
