#pragma once

// Traces, cyclic cocycles and the cocycles of twisted derivations.

#include "homcyc/algebra.hpp"

#include <cstddef>
#include <vector>

namespace homcyc {

/// A functional on A^(x)(degree+1), coordinates in the dual tensor basis.
/// Identified with a cochain in C^degree(A, A*).
struct Functional {
    int degree = 0;
    Vector coords;
};

/// phi with phi(e_i e_j) = phi(e_j e_i) for all i, j.
Subspace trace_space(const HomAlgebra& a);

struct CocycleCheck {
    // Indices of basis tensors of degree n+1 where b phi does not vanish,
    // and of degree n where (Id - t) phi does not vanish.
    std::vector<std::size_t> coboundary_residuals;
    std::vector<std::size_t> cyclicity_residuals;

    bool closed() const { return coboundary_residuals.empty(); }
    bool cyclic() const { return cyclicity_residuals.empty(); }
    bool ok() const { return closed() && cyclic(); }
};

CocycleCheck is_cyclic_cocycle(const HomAlgebra& a, const Functional& phi);

/// rho(ab) = rho(a) b + a rho(b), alpha rho = rho, rho alpha = rho.
/// Column c of rho holds rho(e_c).
CheckResult check_twisted_derivation(const HomAlgebra& a, const Matrix& rho);

/// All rho passing check_twisted_derivation, as vectors of entries rho(r, c)
/// at index r * d + c.
Subspace twisted_derivations(const HomAlgebra& a);
Matrix derivation_from_coordinates(std::span<const Scalar> v, std::size_t d);

/// phi(a, b) = tr(a rho(b)). Throws PreconditionError naming the failed
/// hypotheses (derivation, trace, tr o rho = 0); the result is checked with
/// is_cyclic_cocycle and an InvariantError is raised if that fails.
Functional derivation_cocycle(const HomAlgebra& a, const Matrix& rho, std::span<const Scalar> trace);

}  // namespace homcyc
