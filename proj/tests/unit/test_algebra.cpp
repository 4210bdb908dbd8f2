#include "corpus.hpp"

#include <doctest.h>

using namespace homcyc;
using testing::load;
using testing::mat;
using testing::vec;

namespace {

// independent check of alpha(a)(bc) = (ab)alpha(c) on the basis
bool hom_associative(const AlgebraData& x) {
    const std::size_t d = x.dim();
    auto mul = [&](const Vector& u, const Vector& v) {
        Vector out(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    out[k] += u[i] * v[j] * x.mul[(i * d + j) * d + k];
        return out;
    };
    auto e = [&](std::size_t i) {
        Vector v(d);
        v[i] = 1;
        return v;
    };
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                if (mul(x.alpha.column(a), mul(e(b), e(c))) != mul(mul(e(a), e(b)), x.alpha.column(c)))
                    return false;
    return true;
}

AlgebraData example_data() { return io::read_algebra(std::string(HOMCYC_DATA_DIR) + "/idempotent_2d.json"); }

}  // namespace

TEST_CASE("corpus validates") {
    for (const auto& name : testing::corpus_names()) {
        CAPTURE(name);
        AlgebraData data = io::read_algebra(std::string(HOMCYC_DATA_DIR) + "/" + name + ".json");
        CHECK(hom_associative(data));
        ValidationReport r = validate(data);
        CHECK(r.valid());
        CHECK(r.hom_associative);
        CHECK(r.multiplicative);
    }
}

TEST_CASE("2-dim example: unit and idempotent twist") {
    HomAlgebra a = load("idempotent_2d");
    auto unit = find_unit(a);
    REQUIRE(unit);
    CHECK(*unit == vec({1, 0}));
    CHECK(a.alpha_is_idempotent());
    CHECK_FALSE(a.alpha_is_identity());
    CHECK(a.is_commutative());
}

TEST_CASE("broken twist is reported, not thrown") {
    AlgebraData data = example_data();
    data.alpha(1, 1) = 1;  // alpha(e2) = e2
    CHECK(hom_associative(data) == validate(data).hom_associative);
    ValidationReport r = validate(data);
    CHECK_FALSE(r.valid());
    CHECK_FALSE(r.result.violations.empty());
    CHECK_THROWS_AS(make_algebra(data), ValidationError);
}

TEST_CASE("non-multiplicative twist is rejected") {
    // zero product, alpha arbitrary: hom-associative but alpha(xy) = alpha(x)alpha(y) trivially;
    // use k with e.e = e and alpha = 2
    AlgebraData data{"k_scaled", {"e"}, {Scalar(1)}, mat({{2}})};
    ValidationReport r = validate(data);
    CHECK(r.hom_associative);
    CHECK_FALSE(r.multiplicative);
    CHECK_FALSE(r.valid());
}

TEST_CASE("shape errors throw") {
    AlgebraData data = example_data();
    data.mul.pop_back();
    CHECK_THROWS_AS(validate(data), ShapeError);
}

TEST_CASE("Yau twist of kxk by the swap") {
    HomAlgebra kxk = load("kxk");
    HomAlgebra twisted = yau_twist(kxk, mat({{0, 1}, {1, 0}}), "kxk_swap");
    CHECK(twisted.data().mul == load("kxk_swap").data().mul);
    CHECK(twisted.alpha() == load("kxk_swap").alpha());
    CHECK_THROWS_AS(yau_twist(kxk, mat({{1, 1}, {0, 1}})), ValidationError);
    CHECK_THROWS_AS(yau_twist(load("idempotent_2d"), Matrix::identity(2)), PreconditionError);
}

TEST_CASE("morphisms") {
    HomAlgebra kxk = load("kxk");
    CHECK(validate_morphism({kxk, kxk, mat({{0, 1}, {1, 0}})}).ok());
    CHECK_FALSE(validate_morphism({kxk, kxk, mat({{1, 1}, {0, 0}})}).ok());
}

TEST_CASE("unital decomposition of the 2-dim example") {
    HomAlgebra a = load("idempotent_2d");
    UnitalDecomposition u = unital_decompose(a);
    CHECK(u.idempotent == vec({1, -1}));
    CHECK(u.associative_part.dim() == 1);
    CHECK(u.associative_part.alpha_is_identity());
    CHECK(u.complement.dim() == 1);
    CHECK(u.complement.alpha().is_zero());
    CHECK(rank(u.change_of_basis) == 2);
}

TEST_CASE("idempotent twist decomposition") {
    HomAlgebra a = load("dual_numbers_twisted");
    IdempotentTwistDecomposition t = idempotent_twist_decompose(a);
    CHECK(t.null_part.dim() + t.image_part.dim() == a.dim());
    CHECK(t.image_part.alpha_is_identity());
    CHECK(rank(t.change_of_basis) == a.dim());
}

TEST_CASE("direct sum of k and k2 is k1_plus_k2") {
    HomAlgebra s = direct_sum(load("k"), load("k2"));
    HomAlgebra ref = load("k1_plus_k2");
    CHECK(s.data().mul == ref.data().mul);
    CHECK(s.alpha() == ref.alpha());
    CHECK(s.basis_names().size() == 2);
    CHECK(s.basis_names()[0] != s.basis_names()[1]);
}

TEST_CASE("unitalization") {
    HomAlgebra a = load("dual_numbers_twisted");
    Unitalization u = unitalize(a);
    CHECK(u.algebra.dim() == a.dim() + 2);
    CHECK(find_unit(u.algebra) == std::optional<Vector>(vec({1, 0, 0, 0})));
    CHECK_THROWS_AS(unitalize(load("kx3_twisted")), PreconditionError);
}

TEST_CASE("combination labels") {
    CHECK(combination_label(vec({1, -1}), {"e1", "e2"}) == "e1 - e2");
    CHECK(combination_label(vec({0, 0}), {"e1", "e2"}) == "0");
}
