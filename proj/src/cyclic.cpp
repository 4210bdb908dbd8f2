#include "homcyc/cyclic.hpp"

#include <algorithm>

namespace homcyc {

namespace {

int parity(int p) {
    return ((p % 2) + 2) % 2;
}

Matrix id_minus(const Matrix& t) {
    return Matrix::identity(t.rows()) - t;
}

std::vector<Subspace> lambda_quotients(const HomAlgebra& a, int top) {
    std::vector<Subspace> subs(static_cast<std::size_t>(top) + 1);
    parallel_for(subs.size(), [&](std::size_t n) { subs[n] = image(id_minus(cyclic_t(a, static_cast<int>(n)))); });
    return subs;
}

std::vector<Subspace> lambda_invariants(const HomAlgebra& a, int top) {
    std::vector<Subspace> subs(static_cast<std::size_t>(top) + 1);
    parallel_for(subs.size(), [&](std::size_t n) { subs[n] = kernel(id_minus(cochain_t(a, static_cast<int>(n)))); });
    return subs;
}

std::vector<std::string> tensor_labels(const HomAlgebra& a, int n, bool dual) {
    std::vector<std::string> coeff = a.basis_names();
    if (dual)
        for (auto& c : coeff)
            c += "*";
    std::vector<std::string> out;
    std::size_t size = tensor_dim(a.dim(), a.dim(), n);
    for (std::size_t i = 0; i < size; ++i)
        out.push_back(tensor_label(i, coeff, a.basis_names(), n));
    return out;
}

// Cached operators per tensor degree.
struct Operators {
    const HomAlgebra& a;
    bool cochains;
    std::map<std::pair<char, int>, Matrix> cache;

    const Matrix& get(char kind, int q) {
        auto key = std::pair{kind, q};
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        Matrix m;
        switch (kind) {
        case 'b':
            m = cochains ? hochschild_coboundary(dualize_bimodule(regular_bimodule(a)), q) : hochschild_b(a, q);
            break;
        case 'p':
            m = cochains ? cochain_b_prime(a, q) : b_prime(a, q);
            break;
        case 't':
            m = id_minus(cochains ? cochain_t(a, q) : cyclic_t(a, q));
            break;
        default:
            m = cochains ? cochain_N(a, q) : norm_N(a, q);
            break;
        }
        return cache.emplace(key, std::move(m)).first->second;
    }
};

Bicomplex build_bicomplex(const HomAlgebra& a, Grading grading, int p_lo, int p_hi, int n_lo, int n_hi) {
    const bool homological = grading == Grading::Homological;
    Bicomplex b(grading);
    for (int p = p_lo; p <= p_hi; ++p)
        for (int q = std::max(0, n_lo - p); q <= n_hi - p; ++q)
            b.add_cell(p, q, tensor_dim(a.dim(), a.dim(), q));
    Operators ops{a, !homological, {}};
    const int s = homological ? -1 : 1;
    for (const auto& [cell, size] : b.cells()) {
        auto [p, q] = cell;
        if (b.has_cell(p, q + s)) {
            if (parity(p) == 0)
                b.set_vertical(p, q, ops.get('b', q));
            else
                b.set_vertical(p, q, ops.get('p', q) * Scalar(-1));
        }
        if (b.has_cell(p + s, q)) {
            // homologically from p: Id - t if p odd, N if p even;
            // cohomologically from p: Id - t if p even, N if p odd
            bool use_t = homological ? parity(p) == 1 : parity(p) == 0;
            b.set_horizontal(p, q, ops.get(use_t ? 't' : 'N', q));
        }
    }
    return b;
}

std::vector<std::vector<std::string>> total_labels(const HomAlgebra& a, const Bicomplex& b, int lo, int hi,
                                                   bool dual) {
    std::vector<std::vector<std::string>> out;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> names;
        std::vector<int> ps;
        for (const auto& [cell, size] : b.cells())
            if (cell.first + cell.second == n)
                ps.push_back(cell.first);
        std::sort(ps.begin(), ps.end());
        for (int p : ps) {
            std::string prefix = "(" + std::to_string(p) + "," + std::to_string(n - p) + ") ";
            for (auto& l : tensor_labels(a, n - p, dual))
                names.push_back(prefix + l);
        }
        out.push_back(std::move(names));
    }
    return out;
}

void check_columns(int max_degree, int columns) {
    if (max_degree < 0)
        throw DegreeError("max degree must be non-negative");
    if (columns < max_degree + 1)
        throw PreconditionError("need at least " + std::to_string(max_degree + 1) + " columns, got " +
                                std::to_string(columns));
}

}  // namespace

ChainComplex build_lambda_complex(const HomAlgebra& a, int max_degree) {
    ChainComplex c = build_hochschild_homology_complex(regular_bimodule(a), max_degree);
    try {
        return quotient_complex(c, lambda_quotients(a, max_degree + 1));
    } catch (const NotASubspaceError& e) {
        throw InvariantError(std::string("b does not preserve im(Id - t): ") + e.what());
    }
}

ChainComplex build_lambda_cocomplex(const HomAlgebra& a, int max_degree) {
    ChainComplex c = build_hochschild_cohomology_complex(dualize_bimodule(regular_bimodule(a)), max_degree);
    try {
        return sub_complex(c, lambda_invariants(a, max_degree + 1));
    } catch (const NotASubspaceError& e) {
        throw InvariantError(std::string("b does not preserve ker(Id - t): ") + e.what());
    }
}

Bicomplex cyclic_bicomplex(const HomAlgebra& a, int p_lo, int p_hi, int n_lo, int n_hi) {
    return build_bicomplex(a, Grading::Homological, p_lo, p_hi, n_lo, n_hi);
}

Bicomplex cocyclic_bicomplex(const HomAlgebra& a, int p_lo, int p_hi, int n_lo, int n_hi) {
    return build_bicomplex(a, Grading::Cohomological, p_lo, p_hi, n_lo, n_hi);
}

HomologyReport cyclic_homology_lambda(const HomAlgebra& a, int max_degree, bool representatives) {
    ChainComplex c = build_lambda_complex(a, max_degree);
    HomologyReport r;
    r.theory = "HC";
    r.algebra = a.name();
    r.method = "lambda";
    r.parameters["max_degree"] = max_degree;
    r.degrees = homology(c, 0, max_degree, {representatives, true});
    if (representatives) {
        auto subs = lambda_quotients(a, max_degree);
        for (int n = 0; n <= max_degree; ++n) {
            auto all = tensor_labels(a, n, false);
            std::vector<std::string> names;
            for (std::size_t f : subs[static_cast<std::size_t>(n)].free_columns())
                names.push_back("[" + all[f] + "]");
            r.chain_labels.push_back(std::move(names));
        }
    }
    return r;
}

HomologyReport cyclic_homology_bicomplex(const HomAlgebra& a, int max_degree, int columns, bool representatives) {
    check_columns(max_degree, columns);
    Bicomplex b = cyclic_bicomplex(a, 0, columns, 0, max_degree + 1);
    b.verify();
    ChainComplex c = total_complex(b, 0, max_degree + 1, true, false);
    HomologyReport r;
    r.theory = "HC";
    r.algebra = a.name();
    r.method = "bicomplex";
    r.parameters["max_degree"] = max_degree;
    r.parameters["columns"] = columns;
    r.degrees = homology(c, 0, max_degree, {representatives, true});
    if (representatives)
        r.chain_labels = total_labels(a, b, 0, max_degree, false);
    return r;
}

HomologyReport cyclic_cohomology_lambda(const HomAlgebra& a, int max_degree, bool representatives) {
    ChainComplex c = build_lambda_cocomplex(a, max_degree);
    HomologyReport r;
    r.theory = "HC-co";
    r.algebra = a.name();
    r.method = "lambda";
    r.grading = Grading::Cohomological;
    r.parameters["max_degree"] = max_degree;
    r.degrees = homology(c, 0, max_degree, {representatives, true});
    if (representatives) {
        auto subs = lambda_invariants(a, max_degree);
        for (int n = 0; n <= max_degree; ++n) {
            auto all = tensor_labels(a, n, true);
            const Subspace& s = subs[static_cast<std::size_t>(n)];
            std::vector<std::string> names;
            for (std::size_t i = 0; i < s.dim(); ++i)
                names.push_back(combination_label(s.basis().row(i), all));
            r.chain_labels.push_back(std::move(names));
        }
    }
    return r;
}

HomologyReport cyclic_cohomology_bicomplex(const HomAlgebra& a, int max_degree, int columns,
                                           bool representatives) {
    check_columns(max_degree, columns);
    Bicomplex b = cocyclic_bicomplex(a, 0, columns, 0, max_degree + 1);
    b.verify();
    ChainComplex c = total_complex(b, 0, max_degree + 1, true, false);
    HomologyReport r;
    r.theory = "HC-co";
    r.algebra = a.name();
    r.method = "bicomplex";
    r.grading = Grading::Cohomological;
    r.parameters["max_degree"] = max_degree;
    r.parameters["columns"] = columns;
    r.degrees = homology(c, 0, max_degree, {representatives, true});
    if (representatives)
        r.chain_labels = total_labels(a, b, 0, max_degree, true);
    return r;
}

bool CyclicReport::all_agree() const {
    return std::all_of(agree.begin(), agree.end(), [](bool x) { return x; });
}

namespace {

CyclicReport run_cyclic(const HomAlgebra& a, int max_degree, CyclicMethod method, int columns, bool reps,
                        bool cohomology) {
    CyclicReport out;
    out.algebra = a.name();
    out.grading = cohomology ? Grading::Cohomological : Grading::Homological;
    out.max_degree = max_degree;
    out.columns = columns < 0 ? max_degree + 1 : columns;
    if (method != CyclicMethod::Bicomplex)
        out.lambda = cohomology ? cyclic_cohomology_lambda(a, max_degree, reps)
                                : cyclic_homology_lambda(a, max_degree, reps);
    if (method != CyclicMethod::Lambda)
        out.bicomplex = cohomology ? cyclic_cohomology_bicomplex(a, max_degree, out.columns, reps)
                                   : cyclic_homology_bicomplex(a, max_degree, out.columns, reps);
    if (out.lambda && out.bicomplex) {
        auto x = out.lambda->betti();
        auto y = out.bicomplex->betti();
        for (std::size_t i = 0; i < x.size(); ++i)
            out.agree.push_back(x[i] == y[i]);
    }
    return out;
}

}  // namespace

CyclicReport cyclic_homology(const HomAlgebra& a, int max_degree, CyclicMethod method, int columns,
                             bool representatives) {
    return run_cyclic(a, max_degree, method, columns, representatives, false);
}

CyclicReport cyclic_cohomology(const HomAlgebra& a, int max_degree, CyclicMethod method, int columns,
                               bool representatives) {
    return run_cyclic(a, max_degree, method, columns, representatives, true);
}

namespace {

constexpr std::size_t kPeriodicCellLimit = 4096;

HomologyReport periodic_run(const HomAlgebra& a, int max_degree, int window, Grading grading) {
    Bicomplex b = grading == Grading::Homological ? cyclic_bicomplex(a, -window, window, -1, max_degree + 1)
                                                  : cocyclic_bicomplex(a, -window, window, -1, max_degree + 1);
    b.verify();
    ChainComplex c = total_complex(b, -1, max_degree + 1, false, false);
    HomologyReport r;
    r.theory = grading == Grading::Homological ? "HP" : "HP-co";
    r.algebra = a.name();
    r.method = "bicomplex";
    r.grading = grading;
    r.parameters["max_degree"] = max_degree;
    r.parameters["window"] = window;
    r.degrees = homology(c, 0, max_degree, {false, true});
    return r;
}

PeriodicReport run_periodic(const HomAlgebra& a, int max_degree, int window, Grading grading) {
    if (max_degree < 0)
        throw DegreeError("max degree must be non-negative");
    if (window < 0)
        window = max_degree + 1;
    if (window < max_degree + 1)
        throw PreconditionError("window must be at least " + std::to_string(max_degree + 1));
    // The wider run reaches row q = max_degree + window + 2.
    const int top_row = max_degree + window + 2;
    bool too_large = false;
    try {
        too_large = tensor_dim(1, a.dim(), top_row + 1) > kPeriodicCellLimit;
    } catch (const ShapeError&) {
        too_large = true;
    }
    if (too_large)
        throw PreconditionError("periodic window too large for '" + a.name() + "': cells of dimension " +
                                std::to_string(a.dim()) + "^" + std::to_string(top_row + 1) + " exceed " +
                                std::to_string(kPeriodicCellLimit));
    PeriodicReport out;
    out.algebra = a.name();
    out.grading = grading;
    out.window = window;
    out.run = periodic_run(a, max_degree, window, grading);
    out.wider = periodic_run(a, max_degree, window + 1, grading);
    auto x = out.run.betti();
    auto y = out.wider.betti();
    for (std::size_t n = 0; n < x.size(); ++n) {
        bool stable = x[n] == y[n];
        out.stabilized.push_back(stable);
        if (!stable)
            continue;
        auto& slot = n % 2 == 0 ? out.even : out.odd;
        if (!slot)
            slot = x[n];
        else if (*slot != x[n])
            out.parity_consistent = false;
    }
    return out;
}

}  // namespace

PeriodicReport periodic_homology(const HomAlgebra& a, int max_degree, int window) {
    return run_periodic(a, max_degree, window, Grading::Homological);
}

PeriodicReport periodic_cohomology(const HomAlgebra& a, int max_degree, int window) {
    return run_periodic(a, max_degree, window, Grading::Cohomological);
}

Matrix connes_B(const HomAlgebra& a, int n) {
    auto unit = find_unit(a);
    if (!unit)
        throw PreconditionError("'" + a.name() + "' has no unit; B is undefined");
    const std::size_t d = a.dim();
    const std::size_t src = tensor_dim(d, d, n);
    Matrix s(tensor_dim(d, d, n + 1), src);
    for (std::size_t col = 0; col < src; ++col)
        for (std::size_t k = 0; k < d; ++k)
            if (sgn((*unit)[k]) != 0)
                s(k * src + col, col) = (*unit)[k];
    return id_minus(cyclic_t(a, n + 1)) * (s * norm_N(a, n));
}

BBReport connes_bB_bicomplex(const HomAlgebra& a, int max_degree) {
    if (max_degree < 0)
        throw DegreeError("max degree must be non-negative");
    BBReport out;
    out.algebra = a.name();
    out.max_degree = max_degree;
    const int top = max_degree + 1;
    std::vector<Matrix> B(static_cast<std::size_t>(top) + 1);  // B[n] : C_n -> C_{n+1}
    std::vector<Matrix> b(static_cast<std::size_t>(top) + 2);  // b[n] : C_n -> C_{n-1}
    parallel_for(B.size(), [&](std::size_t n) { B[n] = connes_B(a, static_cast<int>(n)); });
    parallel_for(b.size(), [&](std::size_t n) {
        if (n >= 1)
            b[n] = hochschild_b(a, static_cast<int>(n));
    });
    for (int n = 0; n < top; ++n)
        if (!(B[static_cast<std::size_t>(n) + 1] * B[static_cast<std::size_t>(n)]).is_zero())
            out.b_squared_failures.push_back(n);
    for (int n = 0; n <= top; ++n) {
        auto un = static_cast<std::size_t>(n);
        Matrix sum = b[un + 1] * B[un];
        if (n >= 1)
            sum += B[un - 1] * b[un];
        if (!sum.is_zero())
            out.anticommute_failures.push_back(n);
    }
    if (!out.identities_hold())
        return out;

    // Tot_n = C_n + C_{n-2} + .., summands by increasing k in C_{n-2k}.
    const std::size_t d = a.dim();
    std::vector<std::size_t> dims;
    for (int n = 0; n <= top; ++n) {
        std::size_t sz = 0;
        for (int k = 0; 2 * k <= n; ++k)
            sz += tensor_dim(d, d, n - 2 * k);
        dims.push_back(sz);
    }
    std::vector<Matrix> maps;
    for (int n = 1; n <= top; ++n) {
        Matrix m(dims[static_cast<std::size_t>(n) - 1], dims[static_cast<std::size_t>(n)]);
        std::size_t col0 = 0;
        for (int k = 0; 2 * k <= n; ++k) {
            int deg = n - 2 * k;
            // offsets inside Tot_{n-1}: C_{n-1-2j} for j = 0, 1, ..
            auto offset = [&](int j) {
                std::size_t off = 0;
                for (int i = 0; i < j; ++i)
                    off += tensor_dim(d, d, n - 1 - 2 * i);
                return off;
            };
            if (deg >= 1)
                m.add_block(offset(k), col0, b[static_cast<std::size_t>(deg)]);
            if (k >= 1)
                m.add_block(offset(k - 1), col0, B[static_cast<std::size_t>(deg)]);
            col0 += tensor_dim(d, d, deg);
        }
        maps.push_back(std::move(m));
    }
    ChainComplex c(Grading::Homological, 0, std::move(dims), std::move(maps), true, false);
    c.verify();
    HomologyReport r;
    r.theory = "HC";
    r.algebra = a.name();
    r.method = "bB";
    r.parameters["max_degree"] = max_degree;
    r.degrees = homology(c, 0, max_degree, {false, true});
    HomologyReport reference = cyclic_homology_bicomplex(a, max_degree, max_degree + 1);
    std::vector<bool> agree;
    for (int n = 0; n <= max_degree; ++n)
        agree.push_back(r.at(n).betti == reference.at(n).betti);
    out.homology = std::move(r);
    out.agrees_with_bicomplex = std::move(agree);
    return out;
}

namespace {

// Matrix of x -> T.quotient_coordinates(F x) on the free columns of S.
Matrix on_quotients(const Matrix& f, const Subspace& s, const Subspace& t) {
    auto free = s.free_columns();
    Matrix out(t.ambient_dim() - t.dim(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        Vector c = t.quotient_coordinates(f.column(free[j]));
        for (std::size_t i = 0; i < c.size(); ++i)
            out(i, j) = c[i];
    }
    return out;
}

// Matrix of F restricted to S -> T in RREF-basis coordinates; nullopt if
// F(S) is not inside T.
std::optional<Matrix> on_subspaces(const Matrix& f, const Subspace& s, const Subspace& t) {
    Matrix out(t.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        auto c = t.coordinates(f.apply(s.basis().row(j)));
        if (!c)
            return std::nullopt;
        for (std::size_t i = 0; i < c->size(); ++i)
            out(i, j) = (*c)[i];
    }
    return out;
}

}  // namespace

InducedMap induced_map_on_homology(const AlgebraMorphism& f, Theory theory, int n) {
    if (n < 0)
        throw DegreeError("negative degree");
    CheckResult ok = validate_morphism(f);
    if (!ok.ok())
        throw ValidationError("not an algebra morphism", std::move(ok.violations));
    const HomAlgebra& src = f.source;
    const HomAlgebra& tgt = f.target;
    std::vector<Matrix> F;
    for (int k = 0; k <= n + 1; ++k)
        F.push_back(tensor_power(f.map, k + 1));

    InducedMap out;
    out.chain_map = F[static_cast<std::size_t>(n)];
    for (int k = 1; k <= n + 1; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (!(hochschild_b(tgt, k) * F[uk] == F[uk - 1] * hochschild_b(src, k)))
            out.commutes = false;
    }
    if (theory == Theory::HC)
        for (int k = 0; k <= n + 1; ++k) {
            auto uk = static_cast<std::size_t>(k);
            if (!(cyclic_t(tgt, k) * F[uk] == F[uk] * cyclic_t(src, k)))
                out.commutes = false;
        }
    if (!out.commutes)
        return out;

    if (theory == Theory::HH) {
        HomologyReport hs = hochschild_homology(regular_bimodule(src), n, true);
        HomologyReport ht = hochschild_homology(regular_bimodule(tgt), n, true);
        out.source_betti = hs.at(n).betti;
        out.target_betti = ht.at(n).betti;
        out.on_homology = induced_on_homology(out.chain_map, hs.at(n), ht.at(n));
        return out;
    }
    HomologyReport hs = cyclic_homology_lambda(src, n, true);
    HomologyReport ht = cyclic_homology_lambda(tgt, n, true);
    auto qs = lambda_quotients(src, n);
    auto qt = lambda_quotients(tgt, n);
    Matrix bar = on_quotients(out.chain_map, qs[static_cast<std::size_t>(n)], qt[static_cast<std::size_t>(n)]);
    out.source_betti = hs.at(n).betti;
    out.target_betti = ht.at(n).betti;
    out.on_homology = induced_on_homology(bar, hs.at(n), ht.at(n));
    return out;
}

XiMap xi_map(const HomAlgebra& assoc, const Matrix& endo, int n) {
    if (n < 0)
        throw DegreeError("negative degree");
    if (!assoc.alpha_is_identity())
        throw PreconditionError("xi needs an associative algebra (identity twist)");
    if (endo.rows() != assoc.dim() || endo.cols() != assoc.dim())
        throw ShapeError("endomorphism has the wrong shape");
    if (!(endo * endo == endo))
        throw PreconditionError("xi needs an idempotent endomorphism");
    HomAlgebra twisted = [&] {
        try {
            return yau_twist(assoc, endo, assoc.name() + "_alpha");
        } catch (const ValidationError& e) {
            throw PreconditionError(std::string("endomorphism is not an algebra map: ") + e.what());
        }
    }();

    std::vector<Matrix> xi;
    for (int k = 0; k <= n + 1; ++k)
        xi.push_back(tensor_power(endo, k + 1).transpose());
    XiMap out{twisted, xi[static_cast<std::size_t>(n)], true, true, Matrix()};

    DualBimodule ws = dualize_bimodule(regular_bimodule(assoc));
    DualBimodule wt = dualize_bimodule(regular_bimodule(twisted));
    for (int k = std::max(0, n - 1); k <= n; ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (!(hochschild_coboundary(wt, k) * xi[uk] == xi[uk + 1] * hochschild_coboundary(ws, k)))
            out.commutes = false;
    }
    auto ks = lambda_invariants(assoc, n);
    auto kt = lambda_invariants(twisted, n);
    auto restricted = on_subspaces(xi[static_cast<std::size_t>(n)], ks.back(), kt.back());
    for (int k = 0; k < n; ++k)
        if (!on_subspaces(xi[static_cast<std::size_t>(k)], ks[static_cast<std::size_t>(k)],
                          kt[static_cast<std::size_t>(k)]))
            out.preserves_cyclic = false;
    if (!restricted)
        out.preserves_cyclic = false;
    if (!out.commutes || !out.preserves_cyclic)
        return out;

    HomologyReport hs = cyclic_cohomology_lambda(assoc, n, true);
    HomologyReport ht = cyclic_cohomology_lambda(twisted, n, true);
    out.on_cyclic_cohomology = induced_on_homology(*restricted, hs.at(n), ht.at(n));
    return out;
}

}  // namespace homcyc
