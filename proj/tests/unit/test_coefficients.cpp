#include "corpus.hpp"

#include <doctest.h>

using namespace homcyc;
using testing::load;

namespace {

// f(x alpha(y)) = f(alpha(xy)) = f(alpha(x) y) as rows over the basis pairs
std::size_t a_circ_dim_oracle(const HomAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<Vector> rows;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector l = a.product(a.unit_vector(x), a.twist(a.unit_vector(y)));
            Vector m = a.twist(a.basis_product(x, y));
            Vector r = a.product(a.twist(a.unit_vector(x)), a.unit_vector(y));
            Vector lm(d), mr(d);
            for (std::size_t k = 0; k < d; ++k) {
                lm[k] = l[k] - m[k];
                mr[k] = m[k] - r[k];
            }
            rows.push_back(lm);
            rows.push_back(mr);
        }
    return d - rank(Matrix::from_rows(rows, d));
}

}  // namespace

TEST_CASE("regular bimodule and its dual on the corpus") {
    for (const auto& a : testing::corpus()) {
        CAPTURE(a.name());
        Bimodule v = regular_bimodule(a);
        CHECK(validate_homology_coefficients(v).ok());
        DualBimodule w = dualize_bimodule(v);
        CHECK(w.dim() == a.dim());
        CHECK(check_dual_bimodule_axioms(a, w.data()).ok());
        CHECK(w.beta() == a.alpha().transpose());
    }
}

TEST_CASE("A circle") {
    for (const auto& a : testing::corpus()) {
        CAPTURE(a.name());
        ACirc c = a_circ(a);
        CHECK(c.functionals.dim() == a_circ_dim_oracle(a));
        CHECK(check_bimodule_axioms(a, c.bimodule.data()).ok());
        if (find_unit(a) || a.alpha_is_identity())
            CHECK(c.functionals.dim() == a.dim());
    }
}

TEST_CASE("coregular dual needs a centroid twist") {
    Bimodule v = coregular_dual(load("kx3"));
    CHECK(v.dim() == 3);
    CHECK_THROWS_AS(coregular_dual(load("kxk_swap")), PreconditionError);
}

TEST_CASE("bimodule axioms catch a bad action") {
    HomAlgebra a = load("kxk");
    ModuleData m = regular_bimodule(a).data();
    m.left[0] = 2;
    CHECK_FALSE(check_bimodule_axioms(a, m).ok());
    CHECK_THROWS_AS(Bimodule(a, m), ValidationError);
}
