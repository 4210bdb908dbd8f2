#include "corpus.hpp"

#include <doctest.h>

using namespace homcyc;
using testing::load;

namespace {

// Dense Kronecker product of vectors, first factor most significant.
Vector kron(const std::vector<Vector>& parts) {
    Vector out{Scalar(1)};
    for (const auto& p : parts) {
        Vector next(out.size() * p.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                next[i * p.size() + j] = out[i] * p[j];
        out = std::move(next);
    }
    return out;
}

std::vector<std::size_t> digits_of(std::size_t idx, std::size_t d, int count) {
    std::vector<std::size_t> out(static_cast<std::size_t>(count));
    for (int k = count - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = idx % d;
        idx /= d;
    }
    return out;
}

// b on A^(x)(n+1) straight from the face formulas
Matrix naive_b(const HomAlgebra& a, int n, bool prime) {
    const std::size_t d = a.dim();
    std::size_t rows = 1, cols = 1;
    for (int k = 0; k < n; ++k)
        rows *= d;
    cols = rows * d;
    Matrix out(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        auto x = digits_of(c, d, n + 1);
        auto e = [&](std::size_t k) { return a.unit_vector(x[k]); };
        int last = prime ? n - 1 : n;
        for (int i = 0; i <= last; ++i) {
            std::vector<Vector> parts;
            if (i == n) {
                parts.push_back(a.product(e(static_cast<std::size_t>(n)), e(0)));
                for (int k = 1; k < n; ++k)
                    parts.push_back(a.twist(e(static_cast<std::size_t>(k))));
            } else {
                for (int k = 0; k <= n; ++k) {
                    auto uk = static_cast<std::size_t>(k);
                    if (k == i) {
                        parts.push_back(a.product(e(uk), e(uk + 1)));
                        ++k;
                    } else {
                        parts.push_back(a.twist(e(uk)));
                    }
                }
            }
            Vector v = kron(parts);
            for (std::size_t r = 0; r < rows; ++r)
                out(r, c) += i % 2 == 0 ? v[r] : -v[r];
        }
    }
    return out;
}

Matrix literal_theta(const HomAlgebra& a, int n) {
    Matrix t = cyclic_t(a, n);
    Matrix power = Matrix::identity(t.rows());
    Matrix out = power;
    for (int k = 1; k <= n; ++k) {
        power = t * power;
        out += power * Scalar(k);
    }
    return out;
}

}  // namespace

TEST_CASE("tensor indexing round-trips") {
    for (std::size_t idx = 0; idx < 2 * 27; ++idx)
        CHECK(tensor_index(tensor_digits(idx, 2, 3, 3), 2, 3) == idx);
    CHECK(tensor_dim(2, 3, 3) == 54);
    CHECK_THROWS_AS(tensor_dim(2, 1u << 31, 4), ShapeError);
    CHECK(tensor_label(5, {"e1", "e2"}, {"e1", "e2"}, 2) == "e2⊗e1⊗e2");
}

TEST_CASE("b and b' match the face formulas") {
    for (const auto& a : testing::corpus()) {
        CAPTURE(a.name());
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(n);
            CHECK(hochschild_b(a, n) == naive_b(a, n, false));
            CHECK(b_prime(a, n) == naive_b(a, n, true));
        }
    }
}

TEST_CASE("presimplicial and pre-cosimplicial relations") {
    for (const auto& a : testing::small_corpus()) {
        CAPTURE(a.name());
        Bimodule v = regular_bimodule(a);
        DualBimodule w = dualize_bimodule(v);
        for (int n = 2; n <= 5; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    CAPTURE(n);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(face_map(v, n - 1, i) * face_map(v, n, j) == face_map(v, n - 1, j - 1) * face_map(v, n, i));
                    CHECK(coface_map(w, n - 1, j) * coface_map(w, n - 2, i) ==
                          coface_map(w, n - 1, i) * coface_map(w, n - 2, j - 1));
                }
    }
}

TEST_CASE("cofaces are transposed faces") {
    for (const auto& a : testing::corpus()) {
        CAPTURE(a.name());
        Bimodule v = regular_bimodule(a);
        DualBimodule w = dualize_bimodule(v);
        for (int n = 0; n <= 2; ++n) {
            for (int i = 0; i <= n + 1; ++i)
                CHECK(coface_map(w, n, i) == face_map(v, n + 1, i).transpose());
            CHECK(hochschild_coboundary(w, n) == hochschild_b(a, n + 1).transpose());
            CHECK(cochain_t(a, n) == cyclic_t(a, n).transpose());
            CHECK(cochain_N(a, n) == norm_N(a, n).transpose());
            if (n >= 1)
                CHECK(cochain_b_prime(a, n) == b_prime(a, n + 1).transpose());
        }
    }
}

TEST_CASE("b^2 = 0, b'^2 = 0 and the cyclic identities") {
    for (const auto& a : testing::small_corpus()) {
        CAPTURE(a.name());
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(n);
            const std::size_t size = cyclic_t(a, n).rows();
            Matrix id = Matrix::identity(size);
            Matrix id_lower = Matrix::identity(cyclic_t(a, n - 1).rows());
            if (n >= 2) {
                CHECK((hochschild_b(a, n - 1) * hochschild_b(a, n)).is_zero());
                CHECK((b_prime(a, n - 1) * b_prime(a, n)).is_zero());
            }
            CHECK((id_lower - cyclic_t(a, n - 1)) * b_prime(a, n) == hochschild_b(a, n) * (id - cyclic_t(a, n)));
            CHECK(norm_N(a, n - 1) * hochschild_b(a, n) == b_prime(a, n) * norm_N(a, n));
            CHECK(((id - cyclic_t(a, n)) * norm_N(a, n)).is_zero());
            CHECK((norm_N(a, n) * (id - cyclic_t(a, n))).is_zero());
            CHECK(norm_N(a, n) + homotopy_theta(a, n) * (id - cyclic_t(a, n)) == id * Scalar(n + 1));
        }
    }
}

TEST_CASE("first face against the last one under t") {
    for (const auto& a : testing::small_corpus()) {
        CAPTURE(a.name());
        Bimodule v = regular_bimodule(a);
        for (int n = 1; n <= 5; ++n) {
            Matrix lhs = face_map(v, n, 0) * cyclic_t(a, n);
            Matrix rhs = face_map(v, n, n) * Scalar(n % 2 == 0 ? 1 : -1);
            CHECK(lhs == rhs);
            for (int i = 1; i <= n; ++i)
                CHECK(face_map(v, n, i) * cyclic_t(a, n) == cyclic_t(a, n - 1) * face_map(v, n, i - 1) * Scalar(-1));
        }
    }
}

TEST_CASE("t generates a cyclic group of order n + 1") {
    HomAlgebra a = load("idempotent_2d");
    for (int n = 0; n <= 4; ++n) {
        Matrix t = cyclic_t(a, n);
        Matrix p = Matrix::identity(t.rows());
        for (int k = 0; k <= n; ++k)
            p = t * p;
        CHECK(p == Matrix::identity(t.rows()));
    }
}

TEST_CASE("literal homotopy weights fail the homotopy identity") {
    HomAlgebra a = load("k1_plus_k2");
    Matrix id = Matrix::identity(cyclic_t(a, 1).rows());
    CHECK(norm_N(a, 1) + literal_theta(a, 1) * (id - cyclic_t(a, 1)) != id * Scalar(2));
    CHECK(norm_N(a, 1) + homotopy_theta(a, 1) * (id - cyclic_t(a, 1)) == id * Scalar(2));
}

TEST_CASE("Hochschild homology values") {
    CHECK(hochschild_homology(regular_bimodule(load("idempotent_2d")), 1).at(1).betti == 1);
    auto k2 = hochschild_homology(regular_bimodule(load("k2")), 6).betti();
    CHECK(k2 == std::vector<std::size_t>(7, 1));
    // classical: HH_n(k[x]/x^2) = k for n >= 1 over Q
    auto dual = hochschild_homology(regular_bimodule(load("dual_numbers")), 4).betti();
    CHECK(dual == std::vector<std::size_t>{2, 1, 1, 1, 1});
    auto kxk = hochschild_homology(regular_bimodule(load("kxk")), 3).betti();
    CHECK(kxk == std::vector<std::size_t>{2, 0, 0, 0});
}

TEST_CASE("a twist that breaks the module axioms is refused") {
    HomAlgebra a = load("kxk");
    ModuleData m = regular_bimodule(a).data();
    m.beta = Matrix(2, 2);
    m.beta(0, 0) = 1;
    CHECK_THROWS_AS(Bimodule(a, m), ValidationError);
}

TEST_CASE("tensor powers") {
    Matrix f = testing::mat({{0, 1}, {1, 0}});
    CHECK(tensor_power(f, 0) == Matrix::identity(1));
    CHECK(tensor_power(f, 2) * tensor_power(f, 2) == Matrix::identity(4));
}
