#include "homcyc/coefficients.hpp"

namespace homcyc {

void check_shape(const HomAlgebra& algebra, const ModuleData& data) {
    const std::size_t d = algebra.dim();
    const std::size_t m = data.dim();
    if (data.left.size() != d * m * m)
        throw ShapeError("left action tensor must have " + std::to_string(d * m * m) + " entries");
    if (data.right.size() != m * d * m)
        throw ShapeError("right action tensor must have " + std::to_string(m * d * m) + " entries");
    if (data.beta.rows() != m || data.beta.cols() != m)
        throw ShapeError("beta must be " + std::to_string(m) + "x" + std::to_string(m));
}

ModuleActions::ModuleActions(HomAlgebra algebra, ModuleData data)
    : algebra_(std::move(algebra)), data_(std::move(data)) {
    check_shape(algebra_, data_);
}

Vector ModuleActions::act_left(std::span<const Scalar> a, std::span<const Scalar> v) const {
    const std::size_t m = dim();
    Vector out(m);
    Scalar coeff, tmp;
    for (std::size_t i = 0; i < algebra_.dim(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(v[j]) == 0)
                continue;
            coeff = a[i] * v[j];
            for (std::size_t w = 0; w < m; ++w) {
                const Scalar& c = left_coeff(i, j, w);
                if (sgn(c) == 0)
                    continue;
                tmp = coeff * c;
                out[w] += tmp;
            }
        }
    }
    return out;
}

Vector ModuleActions::act_right(std::span<const Scalar> v, std::span<const Scalar> a) const {
    const std::size_t m = dim();
    Vector out(m);
    Scalar coeff, tmp;
    for (std::size_t j = 0; j < m; ++j) {
        if (sgn(v[j]) == 0)
            continue;
        for (std::size_t i = 0; i < algebra_.dim(); ++i) {
            if (sgn(a[i]) == 0)
                continue;
            coeff = v[j] * a[i];
            for (std::size_t w = 0; w < m; ++w) {
                const Scalar& c = right_coeff(j, i, w);
                if (sgn(c) == 0)
                    continue;
                tmp = coeff * c;
                out[w] += tmp;
            }
        }
    }
    return out;
}

Vector ModuleActions::unit_vector(std::size_t i) const {
    Vector v(dim());
    v[i] = 1;
    return v;
}

namespace {

// Runs `body(a, b, v, A, M)` over all basis triples with fresh unit vectors.
template <typename Body>
void for_each_triple(const HomAlgebra& alg, const ModuleActions& mod, Body&& body) {
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t b = 0; b < alg.dim(); ++b)
            for (std::size_t v = 0; v < mod.dim(); ++v)
                body(a, b, v, alg.unit_vector(a), alg.unit_vector(b), mod.unit_vector(v));
}

}  // namespace

CheckResult check_bimodule_axioms(const HomAlgebra& algebra, const ModuleData& data) {
    ModuleActions mod(algebra, data);
    CheckResult out;
    for_each_triple(algebra, mod, [&](std::size_t ia, std::size_t ib, std::size_t iv, const Vector& a,
                                      const Vector& b, const Vector& v) {
        out.expect_equal("left-module", {ia, ib, iv}, mod.act_left(algebra.product(a, b), mod.apply_beta(v)),
                         mod.act_left(algebra.twist(a), mod.act_left(b, v)));
        out.expect_equal("right-module", {ia, ib, iv}, mod.act_right(mod.apply_beta(v), algebra.product(a, b)),
                         mod.act_right(mod.act_right(v, a), algebra.twist(b)));
        out.expect_equal("bimodule-compatibility", {ia, ib, iv},
                         mod.act_left(algebra.twist(a), mod.act_right(v, b)),
                         mod.act_right(mod.act_left(a, v), algebra.twist(b)));
    });
    return out;
}

CheckResult check_dual_bimodule_axioms(const HomAlgebra& algebra, const ModuleData& data) {
    ModuleActions mod(algebra, data);
    CheckResult out;
    for_each_triple(algebra, mod, [&](std::size_t ia, std::size_t ib, std::size_t iv, const Vector& a,
                                      const Vector& b, const Vector& v) {
        out.expect_equal("dual-left-module", {ia, ib, iv}, mod.act_left(a, mod.act_left(algebra.twist(b), v)),
                         mod.apply_beta(mod.act_left(algebra.product(a, b), v)));
        out.expect_equal("dual-right-module", {ia, ib, iv}, mod.act_right(mod.act_right(v, algebra.twist(a)), b),
                         mod.apply_beta(mod.act_right(v, algebra.product(a, b))));
        out.expect_equal("bimodule-compatibility", {ia, ib, iv},
                         mod.act_left(algebra.twist(a), mod.act_right(v, b)),
                         mod.act_right(mod.act_left(a, v), algebra.twist(b)));
    });
    return out;
}

Bimodule::Bimodule(HomAlgebra algebra, ModuleData data) : ModuleActions(std::move(algebra), std::move(data)) {
    CheckResult r = check_bimodule_axioms(this->algebra(), this->data());
    if (!r.ok())
        throw ValidationError("'" + this->data().name + "' is not a bimodule", std::move(r.violations));
}

DualBimodule::DualBimodule(HomAlgebra algebra, ModuleData data) : ModuleActions(std::move(algebra), std::move(data)) {
    CheckResult r = check_dual_bimodule_axioms(this->algebra(), this->data());
    if (!r.ok())
        throw ValidationError("'" + this->data().name + "' is not a dual bimodule", std::move(r.violations));
}

Bimodule regular_bimodule(const HomAlgebra& a) {
    const std::size_t d = a.dim();
    ModuleData data;
    data.name = a.name();
    data.basis = a.basis_names();
    data.left.resize(d * d * d);
    data.right.resize(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                data.left[(i * d + j) * d + k] = data.right[(i * d + j) * d + k] = a.mu(i, j, k);
    data.beta = a.alpha();
    try {
        return Bimodule(a, std::move(data));
    } catch (const ValidationError& e) {
        throw InvariantError(std::string("regular bimodule of a validated algebra failed: ") + e.what());
    }
}

CheckResult validate_homology_coefficients(const Bimodule& v) {
    const auto& alg = v.algebra();
    CheckResult out;
    for (std::size_t a = 0; a < alg.dim(); ++a)
        for (std::size_t i = 0; i < v.dim(); ++i) {
            Vector ea = alg.unit_vector(a);
            Vector fi = v.unit_vector(i);
            out.expect_equal("beta-right", {i, a}, v.apply_beta(v.act_right(fi, ea)),
                             v.act_right(v.apply_beta(fi), alg.twist(ea)));
            out.expect_equal("beta-left", {a, i}, v.apply_beta(v.act_left(ea, fi)),
                             v.act_left(alg.twist(ea), v.apply_beta(fi)));
        }
    return out;
}

DualBimodule dualize_bimodule(const Bimodule& v) {
    const std::size_t d = v.algebra().dim();
    const std::size_t m = v.dim();
    ModuleData data;
    data.name = v.data().name + "*";
    for (const auto& b : v.data().basis)
        data.basis.push_back(b + "*");
    data.left.resize(d * m * m);
    data.right.resize(m * d * m);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t w = 0; w < m; ++w)
            for (std::size_t u = 0; u < m; ++u) {
                // (e_a . f_w)(f_u) = f_w(f_u . e_a);  (f_w . e_a)(f_u) = f_w(e_a . f_u)
                data.left[(a * m + w) * m + u] = v.right_coeff(u, a, w);
                data.right[(w * d + a) * m + u] = v.left_coeff(a, u, w);
            }
    data.beta = v.beta().transpose();
    try {
        return DualBimodule(v.algebra(), std::move(data));
    } catch (const ValidationError& e) {
        throw InvariantError(std::string("dual of a bimodule is not a dual bimodule: ") + e.what());
    }
}

ACirc a_circ(const HomAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<Vector> constraints;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector ex = a.unit_vector(x);
            Vector ey = a.unit_vector(y);
            Vector axy = a.twist(a.basis_product(x, y));
            Vector c1 = a.product(ex, a.twist(ey));
            Vector c2 = a.product(a.twist(ex), ey);
            for (std::size_t k = 0; k < d; ++k) {
                c1[k] -= axy[k];
                c2[k] -= axy[k];
            }
            if (!is_zero(c1))
                constraints.push_back(std::move(c1));
            if (!is_zero(c2))
                constraints.push_back(std::move(c2));
        }
    Subspace space = solve_homogeneous(constraints, d);
    const std::size_t m = space.dim();

    std::vector<std::string> dual_names;
    for (const auto& b : a.basis_names())
        dual_names.push_back(b + "*");
    ModuleData data;
    data.name = a.name() + "°";
    data.left.resize(d * m * m);
    data.right.resize(m * d * m);
    data.beta = Matrix::identity(m);
    for (std::size_t i = 0; i < m; ++i)
        data.basis.push_back(combination_label(space.basis().row(i), dual_names));

    for (std::size_t i = 0; i < m; ++i) {
        Vector f = space.basis_vector(i);
        for (std::size_t ia = 0; ia < d; ++ia) {
            Vector twisted = a.twist(a.unit_vector(ia));
            Vector left(d), right(d);
            for (std::size_t b = 0; b < d; ++b) {
                Vector eb = a.unit_vector(b);
                Vector p = a.product(eb, twisted);   // b alpha(a)
                Vector q = a.product(twisted, eb);   // alpha(a) b
                for (std::size_t w = 0; w < d; ++w) {
                    left[b] += f[w] * p[w];
                    right[b] += f[w] * q[w];
                }
            }
            auto lc = space.coordinates(left);
            auto rc = space.coordinates(right);
            if (!lc || !rc)
                throw InvariantError("A° of '" + a.name() + "' is not stable under the twisted actions");
            for (std::size_t j = 0; j < m; ++j) {
                data.left[(ia * m + i) * m + j] = (*lc)[j];
                data.right[(i * d + ia) * m + j] = (*rc)[j];
            }
        }
    }
    try {
        Bimodule bimodule(a, std::move(data));
        return {std::move(space), std::move(bimodule)};
    } catch (const ValidationError& e) {
        throw InvariantError(std::string("A° fails the bimodule axioms: ") + e.what());
    }
}

Bimodule coregular_dual(const HomAlgebra& a) {
    if (!is_centroid_element(a).ok())
        throw PreconditionError("twist of '" + a.name() + "' is not in the centroid; A* is not a bimodule");
    const std::size_t d = a.dim();
    ModuleData data;
    data.name = a.name() + "*";
    for (const auto& b : a.basis_names())
        data.basis.push_back(b + "*");
    data.left.resize(d * d * d);
    data.right.resize(d * d * d);
    for (std::size_t ia = 0; ia < d; ++ia)
        for (std::size_t w = 0; w < d; ++w)
            for (std::size_t v = 0; v < d; ++v) {
                // (e_a . f_w)(e_v) = f_w(e_v e_a);  (f_w . e_a)(e_v) = f_w(e_a e_v)
                data.left[(ia * d + w) * d + v] = a.mu(v, ia, w);
                data.right[(w * d + ia) * d + v] = a.mu(ia, v, w);
            }
    data.beta = a.alpha().transpose();
    try {
        return Bimodule(a, std::move(data));
    } catch (const ValidationError& e) {
        throw InvariantError(std::string("coregular dual fails the bimodule axioms: ") + e.what());
    }
}

}  // namespace homcyc
