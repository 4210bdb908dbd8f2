#include "homcyc/hochschild.hpp"

#include <limits>

namespace homcyc {

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

Sparse sparse(std::span<const Scalar> v) {
    Sparse out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            out.emplace_back(i, v[i]);
    return out;
}

Sparse sparse_column(const Matrix& m, std::size_t c) {
    Sparse out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, c)) != 0)
            out.emplace_back(r, m(r, c));
    return out;
}

// Adds scale * (factors[0] (x) factors[1] (x) ..) into column `col` of out.
// factors[0] lives in dimension m, the rest in dimension d.
void add_tensor(Matrix& out, std::size_t col, const std::vector<const Sparse*>& factors, std::size_t d,
                const Scalar& scale) {
    struct Frame {
        std::size_t index;
        Scalar coeff;
    };
    std::vector<Frame> stack{{0, scale}};
    std::vector<Frame> next;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        next.clear();
        for (const auto& f : stack)
            for (const auto& [i, c] : *factors[k])
                next.push_back({k == 0 ? i : f.index * d + i, f.coeff * c});
        std::swap(stack, next);
        if (stack.empty())
            return;
    }
    for (const auto& f : stack)
        out(f.index, col) += f.coeff;
}

}  // namespace

std::size_t tensor_dim(std::size_t m, std::size_t d, int n) {
    if (n < 0)
        throw DegreeError("negative tensor degree");
    std::size_t out = m;
    for (int k = 0; k < n; ++k) {
        if (d != 0 && out > std::numeric_limits<std::size_t>::max() / d)
            throw ShapeError("tensor space too large");
        out *= d;
    }
    return out;
}

std::vector<std::size_t> tensor_digits(std::size_t index, std::size_t m, std::size_t d, int n) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n) + 1);
    for (int k = n; k >= 1; --k) {
        digits[static_cast<std::size_t>(k)] = index % d;
        index /= d;
    }
    if (index >= m)
        throw ShapeError("tensor index out of range");
    digits[0] = index;
    return digits;
}

std::size_t tensor_index(const std::vector<std::size_t>& digits, std::size_t m, std::size_t d) {
    if (digits.empty() || digits[0] >= m)
        throw ShapeError("bad coefficient digit");
    std::size_t index = digits[0];
    for (std::size_t k = 1; k < digits.size(); ++k)
        index = index * d + digits[k];
    return index;
}

std::string tensor_label(std::size_t index, const std::vector<std::string>& coefficient,
                         const std::vector<std::string>& algebra, int n) {
    auto digits = tensor_digits(index, coefficient.size(), algebra.size(), n);
    std::string out = coefficient[digits[0]];
    for (std::size_t k = 1; k < digits.size(); ++k)
        out += "⊗" + algebra[digits[k]];
    return out;
}

Matrix face_map(const Bimodule& v, int n, int i) {
    if (n < 1 || i < 0 || i > n)
        throw DegreeError("face index " + std::to_string(i) + " out of range for degree " + std::to_string(n));
    const HomAlgebra& a = v.algebra();
    const std::size_t d = a.dim();
    const std::size_t m = v.dim();
    Matrix out(tensor_dim(m, d, n - 1), tensor_dim(m, d, n));

    std::vector<Sparse> alpha_cols(d);
    for (std::size_t j = 0; j < d; ++j)
        alpha_cols[j] = sparse_column(a.alpha(), j);
    std::vector<Sparse> beta_cols(m);
    for (std::size_t j = 0; j < m; ++j)
        beta_cols[j] = sparse_column(v.beta(), j);
    std::vector<Sparse> products(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            products[x * d + y] = sparse(a.basis_product(x, y));

    const Scalar one = 1;
    std::vector<const Sparse*> factors;
    for (std::size_t col = 0; col < out.cols(); ++col) {
        auto digits = tensor_digits(col, m, d, n);
        factors.clear();
        Sparse head;
        if (i == 0) {
            head = sparse(v.act_right(v.unit_vector(digits[0]), a.unit_vector(digits[1])));
            factors.push_back(&head);
            for (int k = 2; k <= n; ++k)
                factors.push_back(&alpha_cols[digits[static_cast<std::size_t>(k)]]);
        } else if (i == n) {
            head = sparse(v.act_left(a.unit_vector(digits[static_cast<std::size_t>(n)]), v.unit_vector(digits[0])));
            factors.push_back(&head);
            for (int k = 1; k < n; ++k)
                factors.push_back(&alpha_cols[digits[static_cast<std::size_t>(k)]]);
        } else {
            factors.push_back(&beta_cols[digits[0]]);
            for (int k = 1; k <= n; ++k) {
                if (k == i) {
                    factors.push_back(&products[digits[static_cast<std::size_t>(k)] * d +
                                                digits[static_cast<std::size_t>(k) + 1]]);
                    ++k;
                } else {
                    factors.push_back(&alpha_cols[digits[static_cast<std::size_t>(k)]]);
                }
            }
        }
        add_tensor(out, col, factors, d, one);
    }
    return out;
}

Matrix hochschild_b(const Bimodule& v, int n) {
    if (n < 1)
        throw DegreeError("b is defined from degree 1");
    Matrix out(tensor_dim(v.dim(), v.algebra().dim(), n - 1), tensor_dim(v.dim(), v.algebra().dim(), n));
    for (int i = 0; i <= n; ++i) {
        Matrix f = face_map(v, n, i);
        if (i % 2 == 0)
            out += f;
        else
            out -= f;
    }
    return out;
}

Matrix hochschild_b(const HomAlgebra& a, int n) {
    return hochschild_b(regular_bimodule(a), n);
}

Matrix b_prime(const HomAlgebra& a, int n) {
    if (n < 1)
        throw DegreeError("b' is defined from degree 1");
    Bimodule reg = regular_bimodule(a);
    Matrix out(tensor_dim(a.dim(), a.dim(), n - 1), tensor_dim(a.dim(), a.dim(), n));
    for (int i = 0; i < n; ++i) {
        Matrix f = face_map(reg, n, i);
        if (i % 2 == 0)
            out += f;
        else
            out -= f;
    }
    return out;
}

Matrix cyclic_t(const HomAlgebra& a, int n) {
    const std::size_t d = a.dim();
    const std::size_t size = tensor_dim(d, d, n);
    const Scalar sign = n % 2 == 0 ? 1 : -1;
    Matrix out(size, size);
    for (std::size_t col = 0; col < size; ++col) {
        auto digits = tensor_digits(col, d, d, n);
        std::vector<std::size_t> rotated(digits.size());
        rotated[0] = digits.back();
        for (std::size_t k = 1; k < digits.size(); ++k)
            rotated[k] = digits[k - 1];
        out(tensor_index(rotated, d, d), col) = sign;
    }
    return out;
}

Matrix norm_N(const HomAlgebra& a, int n) {
    Matrix t = cyclic_t(a, n);
    Matrix power = Matrix::identity(t.rows());
    Matrix out = power;
    for (int k = 1; k <= n; ++k) {
        power = t * power;
        out += power;
    }
    return out;
}

// sum_k (1 - k) t^k = N - sum_k k t^k
Matrix homotopy_theta(const HomAlgebra& a, int n) {
    Matrix t = cyclic_t(a, n);
    Matrix power = Matrix::identity(t.rows());
    Matrix out = power;
    for (int k = 1; k <= n; ++k) {
        power = t * power;
        if (k != 1)
            out += power * Scalar(1 - k);
    }
    return out;
}

ChainComplex build_hochschild_homology_complex(const Bimodule& v, int max_degree) {
    if (max_degree < 0)
        throw DegreeError("max degree must be non-negative");
    CheckResult ok = validate_homology_coefficients(v);
    if (!ok.ok())
        throw PreconditionError("coefficients '" + v.data().name + "' do not commute beta with the actions (" +
                                ok.violations.front().identity + ")");
    const int top = max_degree + 1;
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n)
        dims.push_back(tensor_dim(v.dim(), v.algebra().dim(), n));
    std::vector<Matrix> maps(static_cast<std::size_t>(top));
    parallel_for(maps.size(), [&](std::size_t k) { maps[k] = hochschild_b(v, static_cast<int>(k) + 1); });
    return ChainComplex(Grading::Homological, 0, std::move(dims), std::move(maps), true, false);
}

Matrix coface_map(const DualBimodule& w, int n, int i) {
    if (n < 0 || i < 0 || i > n + 1)
        throw DegreeError("coface index " + std::to_string(i) + " out of range for degree " + std::to_string(n));
    const HomAlgebra& a = w.algebra();
    const std::size_t d = a.dim();
    const std::size_t m = w.dim();
    const std::size_t dn = tensor_dim(1, d, n);
    Matrix out(tensor_dim(m, d, n + 1), tensor_dim(m, d, n));

    std::vector<Sparse> alpha_cols(d);
    for (std::size_t j = 0; j < d; ++j)
        alpha_cols[j] = sparse_column(a.alpha(), j);
    std::vector<Sparse> products(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            products[x * d + y] = sparse(a.basis_product(x, y));

    // Expansion of the argument of phi as a combination of basis tensors J,
    // then the action on the value f_w -> sum_w' c(w', w) f_w'.
    Matrix expansion(dn, 1);
    std::vector<const Sparse*> factors;
    const Sparse unit{{0, Scalar(1)}};
    for (std::size_t arg = 0; arg < tensor_dim(1, d, n + 1); ++arg) {
        auto digits = tensor_digits(arg, 1, d, n + 1);  // digits[1..n+1]
        factors.assign(1, &unit);
        int k = 1;
        if (i == 0)
            k = 2;
        for (; k <= n + 1; ++k) {
            if (i == n + 1 && k == n + 1)
                break;
            if (i >= 1 && i <= n && k == i) {
                factors.push_back(&products[digits[static_cast<std::size_t>(k)] * d +
                                            digits[static_cast<std::size_t>(k) + 1]]);
                ++k;
                continue;
            }
            factors.push_back(&alpha_cols[digits[static_cast<std::size_t>(k)]]);
        }
        expansion = Matrix(dn, 1);
        add_tensor(expansion, 0, factors, d, Scalar(1));

        for (std::size_t ws = 0; ws < m; ++ws)
            for (std::size_t wt = 0; wt < m; ++wt) {
                Scalar c;
                if (i == 0)
                    c = w.left_coeff(digits[1], ws, wt);
                else if (i == n + 1)
                    c = w.right_coeff(ws, digits[static_cast<std::size_t>(n) + 1], wt);
                else
                    c = w.beta()(wt, ws);
                if (sgn(c) == 0)
                    continue;
                for (std::size_t j = 0; j < dn; ++j)
                    if (sgn(expansion(j, 0)) != 0)
                        out(wt * tensor_dim(1, d, n + 1) + arg, ws * dn + j) += c * expansion(j, 0);
            }
    }
    return out;
}

Matrix hochschild_coboundary(const DualBimodule& w, int n) {
    const std::size_t d = w.algebra().dim();
    Matrix out(tensor_dim(w.dim(), d, n + 1), tensor_dim(w.dim(), d, n));
    for (int i = 0; i <= n + 1; ++i) {
        Matrix f = coface_map(w, n, i);
        if (i % 2 == 0)
            out += f;
        else
            out -= f;
    }
    return out;
}

Matrix cochain_t(const HomAlgebra& a, int n) {
    // (t phi)(a_0, .., a_n) = (-1)^n phi(a_n, a_0, .., a_{n-1})
    const std::size_t d = a.dim();
    const std::size_t size = tensor_dim(d, d, n);
    const Scalar sign = n % 2 == 0 ? 1 : -1;
    Matrix out(size, size);
    for (std::size_t row = 0; row < size; ++row) {
        auto digits = tensor_digits(row, d, d, n);
        std::vector<std::size_t> rotated(digits.size());
        rotated[0] = digits.back();
        for (std::size_t k = 1; k < digits.size(); ++k)
            rotated[k] = digits[k - 1];
        out(row, tensor_index(rotated, d, d)) = sign;
    }
    return out;
}

Matrix cochain_N(const HomAlgebra& a, int n) {
    Matrix t = cochain_t(a, n);
    Matrix power = Matrix::identity(t.rows());
    Matrix out = power;
    for (int k = 1; k <= n; ++k) {
        power = t * power;
        out += power;
    }
    return out;
}

Matrix cochain_b_prime(const HomAlgebra& a, int n) {
    DualBimodule w = dualize_bimodule(regular_bimodule(a));
    const std::size_t d = a.dim();
    Matrix out(tensor_dim(d, d, n + 1), tensor_dim(d, d, n));
    for (int i = 0; i <= n; ++i) {
        Matrix f = coface_map(w, n, i);
        if (i % 2 == 0)
            out += f;
        else
            out -= f;
    }
    return out;
}

ChainComplex build_hochschild_cohomology_complex(const DualBimodule& w, int max_degree) {
    if (max_degree < 0)
        throw DegreeError("max degree must be non-negative");
    const int top = max_degree + 1;
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n)
        dims.push_back(tensor_dim(w.dim(), w.algebra().dim(), n));
    std::vector<Matrix> maps(static_cast<std::size_t>(top));
    parallel_for(maps.size(), [&](std::size_t k) { maps[k] = hochschild_coboundary(w, static_cast<int>(k)); });
    return ChainComplex(Grading::Cohomological, 0, std::move(dims), std::move(maps), true, false);
}

namespace {

std::vector<std::vector<std::string>> labels_for(const ModuleActions& v, int max_degree) {
    std::vector<std::vector<std::string>> out;
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<std::string> names;
        std::size_t size = tensor_dim(v.dim(), v.algebra().dim(), n);
        for (std::size_t i = 0; i < size; ++i)
            names.push_back(tensor_label(i, v.data().basis, v.algebra().basis_names(), n));
        out.push_back(std::move(names));
    }
    return out;
}

}  // namespace

HomologyReport hochschild_homology(const Bimodule& v, int max_degree, bool representatives) {
    ChainComplex c = build_hochschild_homology_complex(v, max_degree);
    HomologyReport r;
    r.theory = "HH";
    r.algebra = v.algebra().name();
    r.method = "hochschild";
    r.grading = Grading::Homological;
    r.parameters["max_degree"] = max_degree;
    r.degrees = homology(c, 0, max_degree, {representatives, true});
    if (representatives)
        r.chain_labels = labels_for(v, max_degree);
    if (v.data().name != v.algebra().name())
        r.notes.push_back("coefficients: " + v.data().name);
    return r;
}

HomologyReport hochschild_cohomology(const DualBimodule& w, int max_degree, bool representatives) {
    ChainComplex c = build_hochschild_cohomology_complex(w, max_degree);
    HomologyReport r;
    r.theory = "HH-co";
    r.algebra = w.algebra().name();
    r.method = "hochschild";
    r.grading = Grading::Cohomological;
    r.parameters["max_degree"] = max_degree;
    r.degrees = homology(c, 0, max_degree, {representatives, true});
    if (representatives)
        r.chain_labels = labels_for(w, max_degree);
    r.notes.push_back("coefficients: " + w.data().name);
    return r;
}

Matrix tensor_power(const Matrix& f, int k) {
    if (k < 0)
        throw DegreeError("negative tensor power");
    Matrix out = Matrix::identity(1);
    for (int step = 0; step < k; ++step) {
        Matrix next(out.rows() * f.rows(), out.cols() * f.cols());
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c) {
                if (sgn(out(r, c)) == 0)
                    continue;
                for (std::size_t i = 0; i < f.rows(); ++i)
                    for (std::size_t j = 0; j < f.cols(); ++j)
                        if (sgn(f(i, j)) != 0)
                            next(r * f.rows() + i, c * f.cols() + j) = out(r, c) * f(i, j);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace homcyc
