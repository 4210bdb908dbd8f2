#include "homcyc/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace homcyc {

void CheckResult::merge(CheckResult other) {
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
}

void CheckResult::expect_equal(std::string identity, std::vector<std::size_t> basis, Vector lhs, Vector rhs) {
    if (lhs != rhs)
        violations.push_back({std::move(identity), std::move(basis), std::move(lhs), std::move(rhs)});
}

void check_shape(const AlgebraData& data) {
    const std::size_t d = data.dim();
    if (data.mul.size() != d * d * d)
        throw ShapeError("structure constants must have " + std::to_string(d * d * d) + " entries for dimension " +
                         std::to_string(d) + ", got " + std::to_string(data.mul.size()));
    if (data.alpha.rows() != d || data.alpha.cols() != d)
        throw ShapeError("twist must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
}

namespace {

// Raw-data helpers shared by validation and the operations below.
struct Ops {
    const AlgebraData& data;

    std::size_t dim() const { return data.dim(); }

    Vector basis_product(std::size_t i, std::size_t j) const {
        const std::size_t d = dim();
        auto first = data.mul.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d);
        return Vector(first, first + static_cast<std::ptrdiff_t>(d));
    }

    Vector product(std::span<const Scalar> x, std::span<const Scalar> y) const {
        const std::size_t d = dim();
        Vector out(d);
        Scalar coeff, tmp;
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(x[i]) == 0)
                continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (sgn(y[j]) == 0)
                    continue;
                coeff = x[i] * y[j];
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& m = data.mul[(i * d + j) * d + k];
                    if (sgn(m) == 0)
                        continue;
                    tmp = coeff * m;
                    out[k] += tmp;
                }
            }
        }
        return out;
    }

    Vector twist(std::span<const Scalar> x) const { return data.alpha.apply(x); }

    Vector unit(std::size_t i) const {
        Vector v(dim());
        v[i] = 1;
        return v;
    }
};

Vector scaled_sum(const Vector& a, const Scalar& s, const Vector& b) {
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += s * b[i];
    return out;
}

}  // namespace

Vector HomAlgebra::basis_product(std::size_t i, std::size_t j) const {
    return Ops{data_}.basis_product(i, j);
}

Vector HomAlgebra::product(std::span<const Scalar> x, std::span<const Scalar> y) const {
    return Ops{data_}.product(x, y);
}

Vector HomAlgebra::unit_vector(std::size_t i) const {
    return Ops{data_}.unit(i);
}

Matrix HomAlgebra::left_multiplication(std::span<const Scalar> x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j)
        cols.push_back(product(x, unit_vector(j)));
    return Matrix::from_columns(cols, dim());
}

Matrix HomAlgebra::right_multiplication(std::span<const Scalar> x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim(); ++j)
        cols.push_back(product(unit_vector(j), x));
    return Matrix::from_columns(cols, dim());
}

bool HomAlgebra::alpha_is_identity() const {
    return alpha() == Matrix::identity(dim());
}

bool HomAlgebra::alpha_is_idempotent() const {
    return alpha() * alpha() == alpha();
}

bool HomAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (basis_product(i, j) != basis_product(j, i))
                return false;
    return true;
}

CheckResult check_hom_associativity(const AlgebraData& data) {
    check_shape(data);
    Ops ops{data};
    CheckResult out;
    const std::size_t d = data.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
                Vector lhs = ops.product(ops.twist(ops.unit(a)), ops.basis_product(b, c));
                Vector rhs = ops.product(ops.basis_product(a, b), ops.twist(ops.unit(c)));
                out.expect_equal("hom-associativity", {a, b, c}, std::move(lhs), std::move(rhs));
            }
    return out;
}

CheckResult check_multiplicativity(const AlgebraData& data) {
    check_shape(data);
    Ops ops{data};
    CheckResult out;
    const std::size_t d = data.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            out.expect_equal("multiplicativity", {a, b}, ops.twist(ops.basis_product(a, b)),
                             ops.product(ops.twist(ops.unit(a)), ops.twist(ops.unit(b))));
    return out;
}

ValidationReport validate(AlgebraData candidate) {
    check_shape(candidate);
    ValidationReport report;
    CheckResult assoc = check_hom_associativity(candidate);
    CheckResult mult = check_multiplicativity(candidate);
    report.hom_associative = assoc.ok();
    report.multiplicative = mult.ok();
    report.result.merge(std::move(assoc));
    report.result.merge(std::move(mult));
    if (!report.result.ok())
        return report;
    HomAlgebra algebra(std::move(candidate));
    report.unit = find_unit(algebra);
    if (report.unit && !algebra.alpha_is_idempotent())
        throw InvariantError("unital multiplicative algebra '" + algebra.name() + "' has a non-idempotent twist");
    report.algebra = std::move(algebra);
    return report;
}

HomAlgebra make_algebra(AlgebraData candidate) {
    std::string name = candidate.name;
    ValidationReport report = validate(std::move(candidate));
    if (!report.valid()) {
        const std::size_t count = report.result.violations.size();
        throw ValidationError("algebra '" + name + "' fails " + std::to_string(count) + " axiom instance(s)",
                              std::move(report.result.violations));
    }
    return std::move(*report.algebra);
}

CheckResult validate_morphism(const AlgebraMorphism& f) {
    const auto& src = f.source;
    const auto& tgt = f.target;
    if (f.map.rows() != tgt.dim() || f.map.cols() != src.dim())
        throw ShapeError("morphism matrix must be " + std::to_string(tgt.dim()) + "x" + std::to_string(src.dim()));
    CheckResult out;
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            out.expect_equal("morphism-product", {i, j}, f.map.apply(src.basis_product(i, j)),
                             tgt.product(f.map.column(i), f.map.column(j)));
    for (std::size_t i = 0; i < src.dim(); ++i)
        out.expect_equal("morphism-twist", {i}, f.map.apply(src.twist(src.unit_vector(i))),
                         tgt.twist(f.map.column(i)));
    return out;
}

HomAlgebra yau_twist(const HomAlgebra& assoc, const Matrix& endo, std::string name) {
    const std::size_t d = assoc.dim();
    if (!assoc.alpha_is_identity())
        throw PreconditionError("twisting requires an associative input (identity twist)");
    if (endo.rows() != d || endo.cols() != d)
        throw ShapeError("endomorphism must be " + std::to_string(d) + "x" + std::to_string(d));
    CheckResult hom;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            hom.expect_equal("algebra-map", {i, j}, endo.apply(assoc.basis_product(i, j)),
                             assoc.product(endo.column(i), endo.column(j)));
    if (!hom.ok())
        throw ValidationError("endomorphism is not an algebra map", std::move(hom.violations));

    AlgebraData data;
    data.name = name.empty() ? assoc.name() + "_twisted" : std::move(name);
    data.basis = assoc.basis_names();
    data.mul.resize(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector p = endo.apply(assoc.basis_product(i, j));
            std::copy(p.begin(), p.end(), data.mul.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
        }
    data.alpha = endo;
    ValidationReport report = validate(std::move(data));
    if (!report.valid())
        throw InvariantError("twisted algebra fails validation");
    return std::move(*report.algebra);
}

std::optional<Vector> find_unit(const HomAlgebra& a) {
    const std::size_t d = a.dim();
    if (d == 0)
        return Vector{};
    // Rows (side, j, l): coefficient of e_l in u e_j (side 0) or e_j u (side 1).
    Matrix system(2 * d * d, d);
    Vector rhs(2 * d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) {
            const std::size_t left_row = j * d + l;
            const std::size_t right_row = d * d + j * d + l;
            for (std::size_t k = 0; k < d; ++k) {
                system(left_row, k) = a.mu(k, j, l);
                system(right_row, k) = a.mu(j, k, l);
            }
            if (j == l)
                rhs[left_row] = rhs[right_row] = 1;
        }
    auto solution = solve_affine(system, rhs);
    if (!solution)
        return std::nullopt;
    if (solution->homogeneous.dim() != 0)
        throw InvariantError("unit equations of '" + a.name() + "' have a " +
                             std::to_string(solution->homogeneous.dim() + 1) + "-dimensional solution set");
    return solution->particular;
}

CheckResult is_centroid_element(const HomAlgebra& a) {
    CheckResult out;
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
            Vector axy = a.twist(a.basis_product(x, y));
            out.expect_equal("centroid-left", {x, y}, a.product(a.twist(a.unit_vector(x)), a.unit_vector(y)), axy);
            out.expect_equal("centroid-right", {x, y}, a.product(a.unit_vector(x), a.twist(a.unit_vector(y))), axy);
        }
    return out;
}

std::string combination_label(std::span<const Scalar> v, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0)
            continue;
        Scalar mag = abs(v[i]);
        if (first)
            os << (sgn(v[i]) < 0 ? "-" : "");
        else
            os << (sgn(v[i]) < 0 ? " - " : " + ");
        if (mag != 1)
            os << format_scalar(mag) << "*";
        os << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

AlgebraData restrict_to(const HomAlgebra& a, const Subspace& sub, std::string name) {
    if (sub.ambient_dim() != a.dim())
        throw ShapeError("subspace lives in the wrong ambient space");
    const std::size_t m = sub.dim();
    AlgebraData data;
    data.name = std::move(name);
    data.mul.resize(m * m * m);
    data.alpha = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        data.basis.push_back(combination_label(sub.basis().row(i), a.basis_names()));
    for (std::size_t i = 0; i < m; ++i) {
        Vector bi = sub.basis_vector(i);
        auto twisted = sub.coordinates(a.twist(bi));
        if (!twisted)
            throw NotASubspaceError("subspace is not stable under the twist");
        for (std::size_t k = 0; k < m; ++k)
            data.alpha(k, i) = (*twisted)[k];
        for (std::size_t j = 0; j < m; ++j) {
            auto coords = sub.coordinates(a.product(bi, sub.basis_vector(j)));
            if (!coords)
                throw NotASubspaceError("subspace is not closed under the product");
            std::copy(coords->begin(), coords->end(), data.mul.begin() + static_cast<std::ptrdiff_t>((i * m + j) * m));
        }
    }
    return data;
}

namespace {

Matrix concat_bases(const Subspace& first, const Subspace& second, std::size_t ambient) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < first.dim(); ++i)
        cols.push_back(first.basis_vector(i));
    for (std::size_t i = 0; i < second.dim(); ++i)
        cols.push_back(second.basis_vector(i));
    return Matrix::from_columns(cols, ambient);
}

}  // namespace

UnitalDecomposition unital_decompose(const HomAlgebra& a) {
    auto unit = find_unit(a);
    if (!unit)
        throw PreconditionError("algebra '" + a.name() + "' is not unital");
    const std::size_t d = a.dim();
    Vector x = a.twist(*unit);
    if (a.product(x, x) != x)
        throw InvariantError("alpha(1) is not idempotent in '" + a.name() + "'");
    for (std::size_t j = 0; j < d; ++j)
        if (a.product(x, a.unit_vector(j)) != a.product(a.unit_vector(j), x))
            throw InvariantError("alpha(1) is not central in '" + a.name() + "'");
    Vector y = scaled_sum(*unit, Scalar(-1), x);

    Subspace first = image(a.left_multiplication(x));
    Subspace second = image(a.left_multiplication(y));
    Matrix change = concat_bases(first, second, d);
    if (rank(change) != d)
        throw InvariantError("A x and A (1 - x) do not span '" + a.name() + "' directly");

    AlgebraData first_data = restrict_to(a, first, a.name() + "_1");
    AlgebraData second_data = restrict_to(a, second, a.name() + "_2");
    if (first_data.alpha != Matrix::identity(first.dim()))
        throw InvariantError("twist does not restrict to the identity on A x");
    if (!second_data.alpha.is_zero())
        throw InvariantError("twist does not vanish on A (1 - x)");
    HomAlgebra assoc_part = make_algebra(std::move(first_data));
    HomAlgebra rest = make_algebra(std::move(second_data));
    return {std::move(assoc_part), std::move(rest), std::move(x), std::move(change)};
}

IdempotentTwistDecomposition idempotent_twist_decompose(const HomAlgebra& a) {
    if (!a.alpha_is_idempotent())
        throw PreconditionError("twist of '" + a.name() + "' is not idempotent");
    const std::size_t d = a.dim();
    Subspace null_space = kernel(a.alpha());
    Subspace image_space = image(a.alpha());
    for (std::size_t i = 0; i < null_space.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector k = null_space.basis_vector(i);
            if (!is_zero(a.product(k, a.unit_vector(j))) || !is_zero(a.product(a.unit_vector(j), k)))
                throw PreconditionError("ker(alpha) is not annihilated by the product; not a twisted algebra");
        }
    AlgebraData null_data = restrict_to(a, null_space, a.name() + "_ker");
    AlgebraData image_data = restrict_to(a, image_space, a.name() + "_im");
    if (image_data.alpha != Matrix::identity(image_space.dim()))
        throw InvariantError("twist does not restrict to the identity on its image");
    Matrix change = concat_bases(null_space, image_space, d);
    return {make_algebra(std::move(null_data)), make_algebra(std::move(image_data)), std::move(change)};
}

Unitalization unitalize(const HomAlgebra& a) {
    if (!is_centroid_element(a).ok())
        throw PreconditionError("twist of '" + a.name() + "' is not in the centroid");
    if (!a.alpha_is_idempotent())
        throw PreconditionError("twist of '" + a.name() + "' is not idempotent; the hull would not be multiplicative");
    const std::size_t d = a.dim();
    const std::size_t n = d + 2;
    AlgebraData data;
    data.name = a.name() + "_unitalized";
    data.basis = {"1", "alpha"};
    for (const auto& b : a.basis_names())
        data.basis.push_back(b);
    data.mul.resize(n * n * n);
    data.alpha = Matrix(n, n);
    auto set = [&](std::size_t i, std::size_t j, const Vector& value) {
        std::copy(value.begin(), value.end(), data.mul.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    };
    auto lift = [&](const Vector& v) {
        Vector out(n);
        std::copy(v.begin(), v.end(), out.begin() + 2);
        return out;
    };
    Vector one(n), alpha_elem(n);
    one[0] = 1;
    alpha_elem[1] = 1;
    // k[alpha]/(alpha^2 - alpha): 1 is the unit, alpha is idempotent.
    set(0, 0, one);
    set(0, 1, alpha_elem);
    set(1, 0, alpha_elem);
    set(1, 1, alpha_elem);
    for (std::size_t j = 0; j < d; ++j) {
        Vector ej = lift(a.unit_vector(j));
        Vector twisted = lift(a.twist(a.unit_vector(j)));
        set(0, j + 2, ej);
        set(j + 2, 0, ej);
        set(1, j + 2, twisted);
        set(j + 2, 1, twisted);
        for (std::size_t k = 0; k < d; ++k)
            set(j + 2, k + 2, lift(a.basis_product(j, k)));
    }
    data.alpha(1, 0) = 1;  // beta(1) = alpha
    data.alpha(1, 1) = 1;  // beta(alpha) = alpha^2 = alpha
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            data.alpha(i + 2, j + 2) = a.alpha()(i, j);

    ValidationReport report = validate(std::move(data));
    if (!report.valid())
        throw InvariantError("unital hull of '" + a.name() + "' fails validation (" +
                             report.result.violations.front().identity + ")");
    if (report.unit != one)
        throw InvariantError("unital hull of '" + a.name() + "' does not have 1 as its unit");
    Matrix embedding(n, d);
    for (std::size_t j = 0; j < d; ++j)
        embedding(j + 2, j) = 1;
    Unitalization out{std::move(*report.algebra), std::move(embedding)};
    CheckResult embedded = validate_morphism({a, out.algebra, out.embedding});
    if (!embedded.ok())
        throw InvariantError("embedding into the unital hull is not a morphism");
    return out;
}

HomAlgebra direct_sum(const HomAlgebra& a, const HomAlgebra& b, std::string name) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t n = da + db;
    AlgebraData data;
    data.name = name.empty() ? a.name() + "+" + b.name() : std::move(name);
    std::set<std::string> left(a.basis_names().begin(), a.basis_names().end());
    const bool clash = std::any_of(b.basis_names().begin(), b.basis_names().end(),
                                   [&](const std::string& s) { return left.count(s) != 0; });
    for (const auto& s : a.basis_names())
        data.basis.push_back(clash ? s + "@1" : s);
    for (const auto& s : b.basis_names())
        data.basis.push_back(clash ? s + "@2" : s);
    data.mul.resize(n * n * n);
    data.alpha = Matrix(n, n);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t k = 0; k < da; ++k)
                data.mul[(i * n + j) * n + k] = a.mu(i, j, k);
            data.alpha(i, j) = a.alpha()(i, j);
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            for (std::size_t k = 0; k < db; ++k)
                data.mul[((da + i) * n + (da + j)) * n + (da + k)] = b.mu(i, j, k);
            data.alpha(da + i, da + j) = b.alpha()(i, j);
        }
    ValidationReport report = validate(std::move(data));
    if (!report.valid())
        throw InvariantError("direct sum fails validation");
    return std::move(*report.algebra);
}

}  // namespace homcyc
