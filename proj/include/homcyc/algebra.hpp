#pragma once

// Multiplicative Hom-associative algebras given by structure constants.

#include "homcyc/error.hpp"
#include "homcyc/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homcyc {

/// One failed instance of an identity, evaluated on basis elements.
struct Violation {
    std::string identity;
    std::vector<std::size_t> basis;
    Vector lhs;
    Vector rhs;
};

struct CheckResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void merge(CheckResult other);
    /// Compares two vectors and records a violation when they differ.
    void expect_equal(std::string identity, std::vector<std::size_t> basis, Vector lhs, Vector rhs);
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<Violation> violations)
        : Error(what), violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Raw, unvalidated algebra data.
///
/// `mul[(i * d + j) * d + k]` is the coefficient of e_k in e_i e_j (i is the
/// left factor). Column j of `alpha` holds alpha(e_j).
struct AlgebraData {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Scalar> mul;
    Matrix alpha;

    std::size_t dim() const { return basis.size(); }
};

/// Throws ShapeError unless the tensors match the basis length.
void check_shape(const AlgebraData& data);

struct ValidationReport;

/// A validated multiplicative Hom-associative algebra. Immutable.
class HomAlgebra {
public:
    const AlgebraData& data() const { return data_; }
    const std::string& name() const { return data_.name; }
    std::size_t dim() const { return data_.dim(); }
    const std::vector<std::string>& basis_names() const { return data_.basis; }
    const Matrix& alpha() const { return data_.alpha; }

    const Scalar& mu(std::size_t i, std::size_t j, std::size_t k) const {
        return data_.mul[(i * dim() + j) * dim() + k];
    }
    Vector basis_product(std::size_t i, std::size_t j) const;
    Vector product(std::span<const Scalar> x, std::span<const Scalar> y) const;
    Vector twist(std::span<const Scalar> x) const { return data_.alpha.apply(x); }
    Vector unit_vector(std::size_t i) const;

    /// Matrices of a -> x a and a -> a x.
    Matrix left_multiplication(std::span<const Scalar> x) const;
    Matrix right_multiplication(std::span<const Scalar> x) const;

    bool alpha_is_identity() const;
    bool alpha_is_idempotent() const;
    bool is_commutative() const;

private:
    explicit HomAlgebra(AlgebraData data) : data_(std::move(data)) {}
    friend ValidationReport validate(AlgebraData candidate);

    AlgebraData data_;
};

struct ValidationReport {
    bool hom_associative = false;
    bool multiplicative = false;
    std::optional<Vector> unit;
    CheckResult result;
    std::optional<HomAlgebra> algebra;

    bool valid() const { return algebra.has_value(); }
};

CheckResult check_hom_associativity(const AlgebraData& data);
CheckResult check_multiplicativity(const AlgebraData& data);

/// Checks Hom-associativity and multiplicativity on all basis triples and
/// pairs. Axiom failures are reported, not thrown; bad shapes throw.
/// A unital result is additionally checked to have an idempotent twist.
ValidationReport validate(AlgebraData candidate);

/// validate(), throwing ValidationError on any violation.
HomAlgebra make_algebra(AlgebraData candidate);

struct AlgebraMorphism {
    HomAlgebra source;
    HomAlgebra target;
    Matrix map;  // target.dim() x source.dim()
};

/// f(xy) = f(x) f(y) and f(alpha_src(x)) = alpha_tgt(f(x)) on basis elements.
CheckResult validate_morphism(const AlgebraMorphism& f);

/// The algebra with product endo o mu and twist endo. `assoc` must have the
/// identity twist and `endo` must be an algebra endomorphism of it.
HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& endo, std::string name = {});

/// Basis expansion of the two-sided unit, if any.
std::optional<Vector> find_unit(const HomAlgebra& a);

/// Empty result iff alpha(x) y = x alpha(y) = alpha(xy) on basis pairs.
CheckResult is_centroid_element(const HomAlgebra& a);

/// Restriction of product and twist to a subspace closed under both.
/// Throws NotASubspaceError if the subspace is not a subalgebra.
AlgebraData restrict_to(const HomAlgebra& a, const Subspace& sub, std::string name);

struct UnitalDecomposition {
    HomAlgebra associative_part;  // A x, twist = identity
    HomAlgebra complement;        // A (1 - x), twist = zero
    Vector idempotent;            // x = alpha(1)
    Matrix change_of_basis;       // columns: basis of A x, then of A (1 - x)
};

UnitalDecomposition unital_decompose(const HomAlgebra& a);

struct IdempotentTwistDecomposition {
    HomAlgebra null_part;   // ker(alpha), zero product
    HomAlgebra image_part;  // im(alpha), associative
    Matrix change_of_basis;
};

IdempotentTwistDecomposition idempotent_twist_decompose(const HomAlgebra& a);

struct Unitalization {
    HomAlgebra algebra;  // basis: "1", "alpha", then the basis of A
    Matrix embedding;
};

/// Unital hull over the quotient k[alpha]/(alpha^2 - alpha). Needs a
/// centroid, idempotent twist.
Unitalization unitalize(const HomAlgebra& a);

HomAlgebra direct_sum(const HomAlgebra& a, const HomAlgebra& b, std::string name = {});

/// Human-readable linear combination, e.g. "e1 - e2".
std::string combination_label(std::span<const Scalar> v, const std::vector<std::string>& names);

}  // namespace homcyc
