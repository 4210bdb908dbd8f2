#pragma once

// Coefficient systems over a Hom-associative algebra.

#include "homcyc/algebra.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace homcyc {

/// Action tensors of a coefficient space V of dimension m over an algebra
/// of dimension d.
///
/// `left[(a * m + v) * m + w]`  = coefficient of f_w in e_a . f_v
/// `right[(v * d + a) * m + w]` = coefficient of f_w in f_v . e_a
/// Column v of `beta` holds beta(f_v).
struct ModuleData {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Scalar> left;
    std::vector<Scalar> right;
    Matrix beta;

    std::size_t dim() const { return basis.size(); }
};

void check_shape(const HomAlgebra& algebra, const ModuleData& data);

/// Shared evaluation of module actions.
class ModuleActions {
public:
    ModuleActions(HomAlgebra algebra, ModuleData data);

    const HomAlgebra& algebra() const { return algebra_; }
    const ModuleData& data() const { return data_; }
    std::size_t dim() const { return data_.dim(); }
    const Matrix& beta() const { return data_.beta; }

    const Scalar& left_coeff(std::size_t a, std::size_t v, std::size_t w) const {
        return data_.left[(a * dim() + v) * dim() + w];
    }
    const Scalar& right_coeff(std::size_t v, std::size_t a, std::size_t w) const {
        return data_.right[(v * algebra_.dim() + a) * dim() + w];
    }

    Vector act_left(std::span<const Scalar> a, std::span<const Scalar> v) const;
    Vector act_right(std::span<const Scalar> v, std::span<const Scalar> a) const;
    Vector apply_beta(std::span<const Scalar> v) const { return data_.beta.apply(v); }
    Vector unit_vector(std::size_t i) const;

private:
    HomAlgebra algebra_;
    ModuleData data_;
};

/// Left module, right module and bimodule compatibility on basis triples.
CheckResult check_bimodule_axioms(const HomAlgebra& algebra, const ModuleData& data);
/// The dual-module variants of the same three families.
CheckResult check_dual_bimodule_axioms(const HomAlgebra& algebra, const ModuleData& data);

/// A validated bimodule (V, beta).
class Bimodule : public ModuleActions {
public:
    /// Throws ValidationError if an axiom fails.
    Bimodule(HomAlgebra algebra, ModuleData data);
};

/// A validated dual bimodule.
class DualBimodule : public ModuleActions {
public:
    DualBimodule(HomAlgebra algebra, ModuleData data);
};

/// A over itself, actions = product, beta = alpha.
Bimodule regular_bimodule(const HomAlgebra& a);

/// beta(v a) = beta(v) alpha(a) and beta(a v) = alpha(a) beta(v): the extra
/// hypotheses the Hochschild chain complex needs.
CheckResult validate_homology_coefficients(const Bimodule& v);

/// V* with (a.f)(v) = f(v.a), (f.a)(v) = f(a.v), beta*(f) = f o beta.
DualBimodule dualize_bimodule(const Bimodule& v);

struct ACirc {
    Subspace functionals;  // inside A*, in the dual basis
    Bimodule bimodule;     // on the coordinates of `functionals`
};

/// The subspace of f in A* with f(x alpha(y)) = f(alpha(xy)) = f(alpha(x) y),
/// with (a.f)(b) = f(b alpha(a)), (f.a)(b) = f(alpha(a) b), beta = Id.
ACirc a_circ(const HomAlgebra& a);

/// A* with the coregular actions (a.f)(b) = f(ba), (f.a)(b) = f(ab) and
/// beta = alpha^T. Refuses (PreconditionError) unless alpha is in the centroid.
Bimodule coregular_dual(const HomAlgebra& a);

}  // namespace homcyc
