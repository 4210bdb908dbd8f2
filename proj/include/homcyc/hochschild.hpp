#pragma once

// Hochschild chain and cochain operators on tensor bases.
//
// Chains C_n(A, V) = V (x) A^(x)n. Cochains C^n(A, W) = Hom(A^(x)n, W),
// coordinate (w, i_1..i_n) = coefficient of f_w in phi(e_i1 (x) .. (x) e_in).
// Both use the index w * d^n + sum_k i_k d^(n-k).

#include "homcyc/coefficients.hpp"
#include "homcyc/complexes.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homcyc {

/// m * d^n, throwing ShapeError on overflow.
std::size_t tensor_dim(std::size_t m, std::size_t d, int n);
/// (w, i_1, .., i_n) for a tensor index.
std::vector<std::size_t> tensor_digits(std::size_t index, std::size_t m, std::size_t d, int n);
std::size_t tensor_index(const std::vector<std::size_t>& digits, std::size_t m, std::size_t d);
/// "f1⊗e2⊗e1"; `coefficient` names the first slot.
std::string tensor_label(std::size_t index, const std::vector<std::string>& coefficient,
                         const std::vector<std::string>& algebra, int n);

// Chains. Degree n -> n-1; 0 <= i <= n, n >= 1.
Matrix face_map(const Bimodule& v, int n, int i);
Matrix hochschild_b(const Bimodule& v, int n);

// Regular coefficients, C_n(A) = A^(x)(n+1).
Matrix hochschild_b(const HomAlgebra& a, int n);
Matrix b_prime(const HomAlgebra& a, int n);
Matrix cyclic_t(const HomAlgebra& a, int n);
Matrix norm_N(const HomAlgebra& a, int n);
Matrix homotopy_theta(const HomAlgebra& a, int n);

/// Degrees 0..max_degree+1, so homology is exact up to max_degree.
/// Throws PreconditionError if V fails validate_homology_coefficients.
ChainComplex build_hochschild_homology_complex(const Bimodule& v, int max_degree);

// Cochains. Degree n -> n+1; 0 <= i <= n+1.
Matrix coface_map(const DualBimodule& w, int n, int i);
Matrix hochschild_coboundary(const DualBimodule& w, int n);

// Regular dual coefficients W = A*, so C^n(A, A*) is the dual of C_n(A).
Matrix cochain_t(const HomAlgebra& a, int n);
Matrix cochain_N(const HomAlgebra& a, int n);
/// Alternating sum of the cofaces 0..n.
Matrix cochain_b_prime(const HomAlgebra& a, int n);

ChainComplex build_hochschild_cohomology_complex(const DualBimodule& w, int max_degree);

HomologyReport hochschild_homology(const Bimodule& v, int max_degree, bool representatives = false);
HomologyReport hochschild_cohomology(const DualBimodule& w, int max_degree, bool representatives = false);

/// f (x) .. (x) f, k factors (k = 0 gives the 1x1 identity).
Matrix tensor_power(const Matrix& f, int k);

}  // namespace homcyc
