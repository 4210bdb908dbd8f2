#include "corpus.hpp"

#include <algorithm>
#include <filesystem>

using namespace homcyc;

namespace testing {

HomAlgebra load(const std::string& name) {
    return make_algebra(io::read_algebra(std::string(HOMCYC_DATA_DIR) + "/" + name + ".json"));
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(HOMCYC_DATA_DIR))
        if (entry.path().extension() == ".json")
            out.push_back(entry.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HomAlgebra> corpus() {
    std::vector<HomAlgebra> out;
    for (const auto& n : corpus_names())
        out.push_back(load(n));
    return out;
}

std::vector<HomAlgebra> small_corpus() {
    std::vector<HomAlgebra> out;
    for (auto& a : corpus())
        if (a.dim() <= 2)
            out.push_back(std::move(a));
    return out;
}

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> rs;
    std::size_t cols = 0;
    for (auto r : rows) {
        Vector v;
        for (long x : r)
            v.emplace_back(x);
        cols = v.size();
        rs.push_back(std::move(v));
    }
    return Matrix::from_rows(rs, cols);
}

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

}  // namespace testing
