#include "corpus.hpp"

#include <doctest.h>

#include <filesystem>

using namespace homcyc;
using testing::load;

TEST_CASE("algebra json round trip") {
    for (const auto& a : testing::corpus()) {
        CAPTURE(a.name());
        io::json j = io::algebra_to_json(a.data());
        AlgebraData back = io::algebra_from_json(j);
        CHECK(back.mul == a.data().mul);
        CHECK(back.alpha == a.alpha());
        CHECK(back.basis == a.basis_names());
        CHECK(io::dump(io::algebra_to_json(back)) == io::dump(j));
    }
}

TEST_CASE("file round trip through a Yau twist") {
    HomAlgebra t = yau_twist(load("kxk"), testing::mat({{0, 1}, {1, 0}}), "swap_twist");
    auto path = std::filesystem::temp_directory_path() / "homcyc_io_test.json";
    io::write_algebra(path.string(), t.data());
    CHECK(validate(io::read_algebra(path.string())).valid());
    std::filesystem::remove(path);
}

TEST_CASE("malformed algebra json") {
    io::json j = io::algebra_to_json(load("k").data());
    j["dim"] = 3;
    CHECK_THROWS_AS(io::algebra_from_json(j), io::FormatError);
    j = io::algebra_to_json(load("k").data());
    j["mul"][0][0][0] = "1/0";
    CHECK_THROWS(io::algebra_from_json(j));
    j = io::algebra_to_json(load("k").data());
    j.erase("alpha");
    CHECK_THROWS_AS(io::algebra_from_json(j), io::FormatError);
    CHECK_THROWS_AS(io::read_algebra("/nonexistent/file.json"), io::FormatError);
}

TEST_CASE("scalars in json") {
    CHECK(io::scalar_from_json(io::json(3)) == 3);
    CHECK(io::scalar_from_json(io::json("-3/6")) == Scalar(-1, 2));
    CHECK(io::scalar_to_json(Scalar(4, 2)) == io::json("2"));
}

TEST_CASE("reports serialise deterministically") {
    HomAlgebra a = load("idempotent_2d");
    HomologyReport r = hochschild_homology(regular_bimodule(a), 2, true);
    std::string once = io::dump(io::to_json(r));
    CHECK(once == io::dump(io::to_json(hochschild_homology(regular_bimodule(a), 2, true))));
    io::json j = io::to_json(r);
    CHECK(j["theory"] == "HH");
    CHECK(j["degrees"][1]["betti"] == 1);
    CHECK_FALSE(io::to_text(r).empty());
    CHECK_FALSE(io::to_text(cyclic_homology(a, 2, CyclicMethod::Both)).empty());
    CHECK(io::to_json(periodic_homology(load("k"), 2))["even"] == 1);
}

TEST_CASE("module json round trip") {
    HomAlgebra a = load("idempotent_2d");
    ModuleData m = regular_bimodule(a).data();
    ModuleData back = io::module_from_json(io::module_to_json(m), a.dim());
    CHECK(back.left == m.left);
    CHECK(back.right == m.right);
    CHECK(back.beta == m.beta);
}
