#pragma once

// Exact dense linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homcyc {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Scalar parse_scalar(std::string_view text);
/// Canonical "p/q" form; the denominator is omitted when it is 1.
std::string format_scalar(const Scalar& value);

bool is_zero(std::span<const Scalar> v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    Vector apply(std::span<const Scalar> v) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Block placement; used when assembling total complexes.
    void add_block(std::size_t row0, std::size_t col0, const Matrix& block);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. Elimination runs fraction-free on primitive
/// integer rows; only the final normalisation divides.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n held as the nonzero rows of an RREF matrix.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim);

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace row_space(const Matrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Columns that are not pivots; they index the canonical quotient basis.
    std::vector<std::size_t> free_columns() const;

    /// v minus its component along the pivot columns (the canonical coset
    /// representative of v modulo this subspace).
    Vector reduce(std::span<const Scalar> v) const;
    bool contains(std::span<const Scalar> v) const;
    /// Coordinates in basis(); empty optional if v is not in the subspace.
    std::optional<Vector> coordinates(std::span<const Scalar> v) const;
    /// Coordinates of v + S in the quotient Q^n / S, indexed by free_columns().
    Vector quotient_coordinates(std::span<const Scalar> v) const;

    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

/// dim(super) - dim(sub); throws NotASubspaceError unless sub is contained in super.
std::size_t quotient_dim(const Subspace& sub, const Subspace& super);

/// Common null space of the functionals given as rows of `constraints`.
Subspace solve_homogeneous(const Matrix& constraints);
Subspace solve_homogeneous(const std::vector<Vector>& constraints, std::size_t dim);

struct AffineSolution {
    Vector particular;
    Subspace homogeneous;
};

/// All x with m x = rhs, or nullopt if the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> rhs);

}  // namespace homcyc
