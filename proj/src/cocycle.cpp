#include "homcyc/cocycle.hpp"

#include "homcyc/hochschild.hpp"

namespace homcyc {

Subspace trace_space(const HomAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector r = a.basis_product(i, j);
            Vector s = a.basis_product(j, i);
            for (std::size_t k = 0; k < d; ++k)
                r[k] -= s[k];
            if (!is_zero(r))
                rows.push_back(std::move(r));
        }
    return solve_homogeneous(rows, d);
}

CocycleCheck is_cyclic_cocycle(const HomAlgebra& a, const Functional& phi) {
    if (phi.degree < 0)
        throw DegreeError("negative functional degree");
    const std::size_t d = a.dim();
    if (phi.coords.size() != tensor_dim(d, d, phi.degree))
        throw ShapeError("functional of degree " + std::to_string(phi.degree) + " needs " +
                         std::to_string(tensor_dim(d, d, phi.degree)) + " coordinates");
    CocycleCheck out;
    DualBimodule w = dualize_bimodule(regular_bimodule(a));
    Vector bphi = hochschild_coboundary(w, phi.degree).apply(phi.coords);
    for (std::size_t i = 0; i < bphi.size(); ++i)
        if (sgn(bphi[i]) != 0)
            out.coboundary_residuals.push_back(i);
    Vector tphi = cochain_t(a, phi.degree).apply(phi.coords);
    for (std::size_t i = 0; i < tphi.size(); ++i)
        if (tphi[i] != phi.coords[i])
            out.cyclicity_residuals.push_back(i);
    return out;
}

CheckResult check_twisted_derivation(const HomAlgebra& a, const Matrix& rho) {
    const std::size_t d = a.dim();
    if (rho.rows() != d || rho.cols() != d)
        throw ShapeError("rho must be " + std::to_string(d) + "x" + std::to_string(d));
    CheckResult out;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector ei = a.unit_vector(i);
            Vector ej = a.unit_vector(j);
            Vector rhs = a.product(rho.apply(ei), ej);
            Vector right = a.product(ei, rho.apply(ej));
            for (std::size_t k = 0; k < d; ++k)
                rhs[k] += right[k];
            out.expect_equal("leibniz", {i, j}, rho.apply(a.basis_product(i, j)), std::move(rhs));
        }
    for (std::size_t c = 0; c < d; ++c) {
        Vector rc = rho.column(c);
        out.expect_equal("alpha-rho", {c}, a.twist(rc), rc);
        out.expect_equal("rho-alpha", {c}, rho.apply(a.twist(a.unit_vector(c))), rc);
    }
    return out;
}

Subspace twisted_derivations(const HomAlgebra& a) {
    const std::size_t d = a.dim();
    auto at = [d](std::size_t r, std::size_t c) { return r * d + c; };
    std::vector<Vector> rows;
    auto push = [&](Vector row) {
        if (!is_zero(row))
            rows.push_back(std::move(row));
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t r = 0; r < d; ++r) {
                Vector row(d * d);
                for (std::size_t k = 0; k < d; ++k)
                    row[at(r, k)] += a.mu(i, j, k);
                for (std::size_t s = 0; s < d; ++s) {
                    row[at(s, i)] -= a.mu(s, j, r);
                    row[at(s, j)] -= a.mu(i, s, r);
                }
                push(std::move(row));
            }
    const Matrix& alpha = a.alpha();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Vector left(d * d), right(d * d);
            for (std::size_t s = 0; s < d; ++s) {
                left[at(s, c)] += alpha(r, s);
                right[at(r, s)] += alpha(s, c);
            }
            left[at(r, c)] -= 1;
            right[at(r, c)] -= 1;
            push(std::move(left));
            push(std::move(right));
        }
    return solve_homogeneous(rows, d * d);
}

Matrix derivation_from_coordinates(std::span<const Scalar> v, std::size_t d) {
    if (v.size() != d * d)
        throw ShapeError("expected " + std::to_string(d * d) + " coordinates");
    Matrix rho(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            rho(r, c) = v[r * d + c];
    return rho;
}

Functional derivation_cocycle(const HomAlgebra& a, const Matrix& rho, std::span<const Scalar> trace) {
    const std::size_t d = a.dim();
    if (trace.size() != d)
        throw ShapeError("trace must have " + std::to_string(d) + " coordinates");
    std::vector<std::string> failed;
    CheckResult der = check_twisted_derivation(a, rho);
    if (!der.ok())
        failed.push_back("rho is not a twisted derivation (" + der.violations.front().identity + ")");
    if (!trace_space(a).contains(trace))
        failed.push_back("tr is not a trace");
    for (std::size_t c = 0; c < d; ++c) {
        Scalar value;
        for (std::size_t k = 0; k < d; ++k)
            value += trace[k] * rho(k, c);
        if (sgn(value) != 0) {
            failed.push_back("tr(rho(" + a.basis_names()[c] + ")) = " + format_scalar(value) + " != 0");
            break;
        }
    }
    if (!failed.empty()) {
        std::string msg = "derivation cocycle hypotheses fail:";
        for (const auto& f : failed)
            msg += " " + f + ";";
        msg.pop_back();
        throw PreconditionError(msg);
    }

    Functional phi{1, Vector(d * d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector v = a.product(a.unit_vector(i), rho.column(j));
            for (std::size_t k = 0; k < d; ++k)
                phi.coords[i * d + j] += trace[k] * v[k];
        }
    CocycleCheck check = is_cyclic_cocycle(a, phi);
    if (!check.ok())
        throw InvariantError("tr(a rho(b)) is not a cyclic 1-cocycle on '" + a.name() + "'");
    return phi;
}

}  // namespace homcyc
