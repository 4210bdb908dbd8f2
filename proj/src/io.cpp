#include "homcyc/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace homcyc::io {

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer())
        return Scalar(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const Error& e) {
            throw FormatError(e.what());
        }
    }
    throw FormatError("scalar must be an integer or a string like \"-3/2\", got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
    return format_scalar(s);
}

Vector vector_from_json(const json& j, std::size_t size) {
    if (!j.is_array() || j.size() != size)
        throw FormatError("expected an array of " + std::to_string(size) + " scalars, got " + j.dump());
    Vector out;
    for (const auto& x : j)
        out.push_back(scalar_from_json(x));
    return out;
}

json vector_to_json(std::span<const Scalar> v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(scalar_to_json(x));
    return out;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw FormatError("expected a matrix with " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = vector_from_json(j[r], cols);
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = row[c];
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(vector_to_json(m.row(r)));
    return out;
}

namespace {

std::vector<std::string> names_from_json(const json& j) {
    if (!j.is_array())
        throw FormatError("\"basis\" must be an array of names");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw FormatError("basis names must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

// nested[a][b][c] with extents (x, y, z) flattened in that order.
std::vector<Scalar> cube_from_json(const json& j, std::size_t x, std::size_t y, std::size_t z, const char* what) {
    if (!j.is_array() || j.size() != x)
        throw FormatError(std::string("\"") + what + "\" must have " + std::to_string(x) + " entries");
    std::vector<Scalar> out;
    out.reserve(x * y * z);
    for (const auto& slab : j) {
        if (!slab.is_array() || slab.size() != y)
            throw FormatError(std::string("\"") + what + "\" rows must have " + std::to_string(y) + " entries");
        for (const auto& v : slab) {
            Vector row = vector_from_json(v, z);
            out.insert(out.end(), row.begin(), row.end());
        }
    }
    return out;
}

json cube_to_json(const std::vector<Scalar>& flat, std::size_t x, std::size_t y, std::size_t z) {
    json out = json::array();
    for (std::size_t i = 0; i < x; ++i) {
        json slab = json::array();
        for (std::size_t j = 0; j < y; ++j)
            slab.push_back(vector_to_json(std::span<const Scalar>(flat).subspan((i * y + j) * z, z)));
        out.push_back(std::move(slab));
    }
    return out;
}

}  // namespace

AlgebraData algebra_from_json(const json& j) {
    AlgebraData a;
    a.name = j.is_object() && j.contains("name") ? j.at("name").get<std::string>() : "A";
    a.basis = names_from_json(field(j, "basis"));
    const std::size_t d = a.dim();
    if (d == 0)
        throw FormatError("an algebra needs at least one basis element");
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != d)
        throw FormatError("\"dim\" is " + j.at("dim").dump() + " but the basis has " + std::to_string(d) + " names");
    a.mul = cube_from_json(field(j, "mul"), d, d, d, "mul");
    a.alpha = matrix_from_json(field(j, "alpha"), d, d);
    return a;
}

json algebra_to_json(const AlgebraData& a) {
    const std::size_t d = a.dim();
    json out;
    out["name"] = a.name;
    out["dim"] = d;
    out["basis"] = a.basis;
    out["mul"] = cube_to_json(a.mul, d, d, d);
    out["alpha"] = matrix_to_json(a.alpha);
    return out;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

AlgebraData read_algebra(const std::string& path) {
    try {
        return algebra_from_json(read_json(path));
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_algebra(const std::string& path, const AlgebraData& a) {
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path);
    out << dump(algebra_to_json(a));
}

ModuleData module_from_json(const json& j, std::size_t algebra_dim) {
    ModuleData m;
    m.name = j.is_object() && j.contains("name") ? j.at("name").get<std::string>() : "V";
    m.basis = names_from_json(field(j, "basis"));
    const std::size_t dim = m.dim();
    m.left = cube_from_json(field(j, "left"), algebra_dim, dim, dim, "left");
    m.right = cube_from_json(field(j, "right"), dim, algebra_dim, dim, "right");
    m.beta = matrix_from_json(field(j, "beta"), dim, dim);
    return m;
}

json module_to_json(const ModuleData& m) {
    const std::size_t dim = m.dim();
    const std::size_t d = dim == 0 ? 0 : m.left.size() / (dim * dim);
    json out;
    out["name"] = m.name;
    out["basis"] = m.basis;
    out["left"] = cube_to_json(m.left, d, dim, dim);
    out["right"] = cube_to_json(m.right, dim, d, dim);
    out["beta"] = matrix_to_json(m.beta);
    return out;
}

json to_json(const CheckResult& r, const std::vector<std::string>& basis) {
    json out = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["identity"] = v.identity;
        json names = json::array();
        for (auto i : v.basis)
            names.push_back(i < basis.size() ? basis[i] : std::to_string(i));
        e["basis"] = names;
        e["lhs"] = vector_to_json(v.lhs);
        e["rhs"] = vector_to_json(v.rhs);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

const char* grading_name(Grading g) {
    return g == Grading::Homological ? "homological" : "cohomological";
}

std::string degree_symbol(const HomologyReport& r, int n) {
    return r.grading == Grading::Homological ? "_" + std::to_string(n) : "^" + std::to_string(n);
}

}  // namespace

json to_json(const HomologyReport& r) {
    json out;
    out["theory"] = r.theory;
    out["algebra"] = r.algebra;
    out["method"] = r.method;
    out["grading"] = grading_name(r.grading);
    out["parameters"] = json::object();
    for (const auto& [k, v] : r.parameters)
        out["parameters"][k] = v;
    out["betti"] = r.betti();
    out["notes"] = r.notes;
    json degrees = json::array();
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
        const auto& h = r.degrees[i];
        json e;
        e["degree"] = h.degree;
        e["chain_dim"] = h.chain_dim;
        e["cycles"] = h.cycles_dim;
        e["boundaries"] = h.boundaries_dim;
        e["betti"] = h.betti;
        if (h.cycles) {
            json reps = json::array();
            for (const auto& v : h.representatives) {
                json rep;
                rep["coords"] = vector_to_json(v);
                if (i < r.chain_labels.size())
                    rep["label"] = combination_label(v, r.chain_labels[i]);
                reps.push_back(std::move(rep));
            }
            e["representatives"] = std::move(reps);
        }
        degrees.push_back(std::move(e));
    }
    out["degrees"] = std::move(degrees);
    return out;
}

json to_json(const CyclicReport& r) {
    json out;
    out["algebra"] = r.algebra;
    out["grading"] = grading_name(r.grading);
    out["max_degree"] = r.max_degree;
    out["columns"] = r.columns;
    if (r.lambda)
        out["lambda"] = to_json(*r.lambda);
    if (r.bicomplex)
        out["bicomplex"] = to_json(*r.bicomplex);
    if (r.lambda && r.bicomplex) {
        out["agree"] = r.agree;
        out["all_agree"] = r.all_agree();
    }
    return out;
}

json to_json(const PeriodicReport& r) {
    json out;
    out["algebra"] = r.algebra;
    out["grading"] = grading_name(r.grading);
    out["window"] = r.window;
    out["run"] = to_json(r.run);
    out["wider"] = to_json(r.wider);
    out["stabilized"] = r.stabilized;
    out["even"] = r.even ? json(*r.even) : json(nullptr);
    out["odd"] = r.odd ? json(*r.odd) : json(nullptr);
    out["parity_consistent"] = r.parity_consistent;
    return out;
}

json to_json(const BBReport& r) {
    json out;
    out["algebra"] = r.algebra;
    out["max_degree"] = r.max_degree;
    out["B_squared_failures"] = r.b_squared_failures;
    out["anticommute_failures"] = r.anticommute_failures;
    out["identities_hold"] = r.identities_hold();
    if (r.homology)
        out["homology"] = to_json(*r.homology);
    if (r.agrees_with_bicomplex)
        out["agrees_with_bicomplex"] = *r.agrees_with_bicomplex;
    return out;
}

json to_json(const Functional& f, const HomAlgebra& a) {
    json out;
    out["degree"] = f.degree;
    out["coords"] = vector_to_json(f.coords);
    std::vector<std::string> dual;
    for (const auto& b : a.basis_names())
        dual.push_back(b + "*");
    json labels = json::array();
    for (std::size_t i = 0; i < f.coords.size(); ++i)
        labels.push_back(tensor_label(i, dual, dual, f.degree));
    out["basis"] = std::move(labels);
    return out;
}

std::string to_text(const HomologyReport& r) {
    std::ostringstream os;
    os << r.theory << " of " << r.algebra << " (" << r.method;
    for (const auto& [k, v] : r.parameters)
        os << ", " << k << "=" << v;
    os << ")\n";
    for (const auto& n : r.notes)
        os << "  " << n << "\n";
    os << "  " << std::setw(4) << "n" << std::setw(10) << "chains" << std::setw(10) << "cycles" << std::setw(12)
       << "boundaries" << std::setw(8) << "betti" << "\n";
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
        const auto& h = r.degrees[i];
        os << "  " << std::setw(4) << h.degree << std::setw(10) << h.chain_dim << std::setw(10) << h.cycles_dim
           << std::setw(12) << h.boundaries_dim << std::setw(8) << h.betti << "\n";
        if (h.cycles && !h.representatives.empty()) {
            for (const auto& v : h.representatives) {
                os << "        " << r.theory << degree_symbol(r, h.degree) << " class: ";
                if (i < r.chain_labels.size())
                    os << combination_label(v, r.chain_labels[i]);
                else
                    os << vector_to_json(v).dump();
                os << "\n";
            }
        }
    }
    return os.str();
}

std::string to_text(const CyclicReport& r) {
    std::ostringstream os;
    if (r.lambda)
        os << to_text(*r.lambda);
    if (r.bicomplex)
        os << to_text(*r.bicomplex);
    if (r.lambda && r.bicomplex) {
        os << "methods agree:";
        for (std::size_t n = 0; n < r.agree.size(); ++n)
            os << " " << n << (r.agree[n] ? ":yes" : ":NO");
        os << "\n";
    }
    return os.str();
}

std::string to_text(const PeriodicReport& r) {
    std::ostringstream os;
    os << r.run.theory << " of " << r.algebra << ", window " << r.window << " vs " << r.window + 1 << "\n";
    os << "  " << std::setw(4) << "n" << std::setw(8) << "P" << std::setw(8) << "P+1" << std::setw(12) << "stable"
       << "\n";
    for (std::size_t n = 0; n < r.stabilized.size(); ++n)
        os << "  " << std::setw(4) << n << std::setw(8) << r.run.degrees[n].betti << std::setw(8)
           << r.wider.degrees[n].betti << std::setw(12) << (r.stabilized[n] ? "yes" : "no") << "\n";
    os << "  even: " << (r.even ? std::to_string(*r.even) : "-") << ", odd: " << (r.odd ? std::to_string(*r.odd) : "-")
       << ", parity consistent: " << (r.parity_consistent ? "yes" : "no") << "\n";
    return os.str();
}

std::string to_text(const BBReport& r) {
    std::ostringstream os;
    os << "(b,B) of " << r.algebra << " up to degree " << r.max_degree << "\n";
    auto list = [](const std::vector<int>& v) {
        if (v.empty())
            return std::string("none");
        std::string s;
        for (int x : v)
            s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    os << "  B^2 != 0 in degrees: " << list(r.b_squared_failures) << "\n";
    os << "  bB + Bb != 0 in degrees: " << list(r.anticommute_failures) << "\n";
    if (r.homology)
        os << to_text(*r.homology);
    if (r.agrees_with_bicomplex) {
        os << "agrees with the cyclic bicomplex:";
        for (std::size_t n = 0; n < r.agrees_with_bicomplex->size(); ++n)
            os << " " << n << ((*r.agrees_with_bicomplex)[n] ? ":yes" : ":NO");
        os << "\n";
    }
    return os.str();
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace homcyc::io
