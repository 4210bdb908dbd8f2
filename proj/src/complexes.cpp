#include "homcyc/complexes.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace homcyc {

ChainComplex::ChainComplex(Grading grading, int base_degree, std::vector<std::size_t> dims, std::vector<Matrix> maps,
                           bool closed_below, bool closed_above)
    : grading_(grading), base_(base_degree), dims_(std::move(dims)), maps_(std::move(maps)),
      closed_below_(closed_below), closed_above_(closed_above) {
    if (dims_.empty())
        throw ShapeError("a complex needs at least one degree");
    if (maps_.size() + 1 != dims_.size())
        throw ShapeError("expected " + std::to_string(dims_.size() - 1) + " differentials, got " +
                         std::to_string(maps_.size()));
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Matrix& m = maps_[k];
        const bool homological = grading_ == Grading::Homological;
        std::size_t want_rows = homological ? dims_[k] : dims_[k + 1];
        std::size_t want_cols = homological ? dims_[k + 1] : dims_[k];
        if (m.rows() != want_rows || m.cols() != want_cols)
            throw ShapeError("differential between degrees " + std::to_string(base_ + static_cast<int>(k)) +
                             " and " + std::to_string(base_ + static_cast<int>(k) + 1) + " has shape " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

std::size_t ChainComplex::dim(int n) const {
    if (!has_degree(n))
        return 0;
    return dims_[static_cast<std::size_t>(n - base_)];
}

const Matrix* ChainComplex::between(int lower) const {
    if (lower < base_ || lower + 1 > max_degree())
        return nullptr;
    return &maps_[static_cast<std::size_t>(lower - base_)];
}

Matrix ChainComplex::outgoing(int n) const {
    const Matrix* m = grading_ == Grading::Homological ? between(n - 1) : between(n);
    if (m)
        return *m;
    return Matrix(0, dim(n));
}

Matrix ChainComplex::incoming(int n) const {
    const Matrix* m = grading_ == Grading::Homological ? between(n) : between(n - 1);
    if (m)
        return *m;
    return Matrix(dim(n), 0);
}

bool ChainComplex::exact_at(int n) const {
    if (!has_degree(n))
        return false;
    return (n > min_degree() || closed_below_) && (n < max_degree() || closed_above_);
}

void ChainComplex::verify() const {
    for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
        Matrix composite =
            grading_ == Grading::Homological ? maps_[k] * maps_[k + 1] : maps_[k + 1] * maps_[k];
        if (!composite.is_zero())
            throw InvariantError("d o d != 0 around degree " + std::to_string(base_ + static_cast<int>(k) + 1));
    }
}

DegreeHomology homology_at(const ChainComplex& c, int n, const HomologyOptions& opts) {
    if (!c.exact_at(n))
        throw DegreeError("homology in degree " + std::to_string(n) + " is not determined by the truncation [" +
                          std::to_string(c.min_degree()) + ", " + std::to_string(c.max_degree()) + "]");
    Matrix out = c.outgoing(n);
    Matrix in = c.incoming(n);
    if (opts.check_square_zero && in.cols() > 0 && out.rows() > 0 && !(out * in).is_zero())
        throw InvariantError("d o d != 0 at degree " + std::to_string(n));

    DegreeHomology h;
    h.degree = n;
    h.chain_dim = c.dim(n);
    if (!opts.representatives) {
        std::size_t rank_out = rank(out);
        h.boundaries_dim = rank(in);
        h.cycles_dim = h.chain_dim - rank_out;
        h.betti = h.cycles_dim - h.boundaries_dim;
        return h;
    }
    Subspace cycles = kernel(out);
    Subspace boundaries = image(in);
    h.cycles_dim = cycles.dim();
    h.boundaries_dim = boundaries.dim();
    h.betti = h.cycles_dim - h.boundaries_dim;
    std::vector<Vector> reduced;
    for (std::size_t i = 0; i < cycles.dim(); ++i) {
        Vector r = boundaries.reduce(cycles.basis().row(i));
        if (!is_zero(r))
            reduced.push_back(std::move(r));
    }
    Subspace classes = Subspace::span(reduced, h.chain_dim);
    if (classes.dim() != h.betti)
        throw InvariantError("homology representatives do not match the Betti number in degree " +
                             std::to_string(n));
    for (std::size_t i = 0; i < classes.dim(); ++i)
        h.representatives.push_back(classes.basis_vector(i));
    h.cycles = std::move(cycles);
    h.boundaries = std::move(boundaries);
    return h;
}

std::vector<DegreeHomology> homology(const ChainComplex& c, int lo, int hi, const HomologyOptions& opts) {
    if (hi < lo)
        return {};
    std::vector<DegreeHomology> out(static_cast<std::size_t>(hi - lo + 1));
    parallel_for(out.size(), [&](std::size_t i) { out[i] = homology_at(c, lo + static_cast<int>(i), opts); });
    return out;
}

std::vector<std::size_t> HomologyReport::betti() const {
    std::vector<std::size_t> out;
    for (const auto& h : degrees)
        out.push_back(h.betti);
    return out;
}

const DegreeHomology& HomologyReport::at(int n) const {
    for (const auto& h : degrees)
        if (h.degree == n)
            return h;
    throw DegreeError(theory + " report has no degree " + std::to_string(n));
}

Vector homology_coordinates(const DegreeHomology& h, std::span<const Scalar> v) {
    if (!h.cycles || !h.boundaries)
        throw DegreeError("homology was computed without representatives");
    if (!h.cycles->contains(v))
        throw PreconditionError("vector is not a cycle in degree " + std::to_string(h.degree));
    Vector r = h.boundaries->reduce(v);
    Subspace classes = Subspace::span(h.representatives, h.chain_dim);
    auto coords = classes.coordinates(r);
    if (!coords)
        throw InvariantError("reduced cycle outside the span of the representatives");
    return *coords;
}

Matrix induced_on_homology(const Matrix& f, const DegreeHomology& source, const DegreeHomology& target) {
    if (f.cols() != source.chain_dim || f.rows() != target.chain_dim)
        throw ShapeError("chain map component does not fit the homology degrees");
    Matrix out(target.betti, source.betti);
    for (std::size_t j = 0; j < source.representatives.size(); ++j) {
        Vector image = f.apply(source.representatives[j]);
        Vector coords = homology_coordinates(target, image);
        for (std::size_t i = 0; i < coords.size(); ++i)
            out(i, j) = coords[i];
    }
    return out;
}

namespace {

// Degree pair (source, target) of maps[k].
std::pair<int, int> map_ends(const ChainComplex& c, std::size_t k) {
    int lower = c.min_degree() + static_cast<int>(k);
    return c.grading() == Grading::Homological ? std::pair{lower + 1, lower} : std::pair{lower, lower + 1};
}

std::vector<std::size_t> stored_dims(const ChainComplex& c, const std::vector<Subspace>& subs, bool quotient) {
    std::vector<std::size_t> dims;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        const Subspace& s = subs[static_cast<std::size_t>(n - c.min_degree())];
        if (s.ambient_dim() != c.dim(n))
            throw ShapeError("subspace in degree " + std::to_string(n) + " has the wrong ambient dimension");
        dims.push_back(quotient ? c.dim(n) - s.dim() : s.dim());
    }
    return dims;
}

void check_count(const ChainComplex& c, const std::vector<Subspace>& subs) {
    if (subs.size() != static_cast<std::size_t>(c.max_degree() - c.min_degree() + 1))
        throw ShapeError("need one subspace per stored degree");
}

}  // namespace

ChainComplex sub_complex(const ChainComplex& c, const std::vector<Subspace>& subs) {
    check_count(c, subs);
    auto dims = stored_dims(c, subs, false);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        auto [src, tgt] = map_ends(c, k);
        const Subspace& s = subs[static_cast<std::size_t>(src - c.min_degree())];
        const Subspace& t = subs[static_cast<std::size_t>(tgt - c.min_degree())];
        Matrix d = c.outgoing(src);
        Matrix m(t.dim(), s.dim());
        for (std::size_t j = 0; j < s.dim(); ++j) {
            auto coords = t.coordinates(d.apply(s.basis().row(j)));
            if (!coords)
                throw NotASubspaceError("differential leaves the subspace in degree " + std::to_string(src));
            for (std::size_t i = 0; i < t.dim(); ++i)
                m(i, j) = (*coords)[i];
        }
        maps.push_back(std::move(m));
    }
    return ChainComplex(c.grading(), c.min_degree(), std::move(dims), std::move(maps), c.closed_below(),
                        c.closed_above());
}

ChainComplex quotient_complex(const ChainComplex& c, const std::vector<Subspace>& subs) {
    check_count(c, subs);
    auto dims = stored_dims(c, subs, true);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        auto [src, tgt] = map_ends(c, k);
        const Subspace& s = subs[static_cast<std::size_t>(src - c.min_degree())];
        const Subspace& t = subs[static_cast<std::size_t>(tgt - c.min_degree())];
        Matrix d = c.outgoing(src);
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!t.contains(d.apply(s.basis().row(j))))
                throw NotASubspaceError("differential does not preserve the subspace in degree " +
                                        std::to_string(src));
        auto free = s.free_columns();
        Matrix m(c.dim(tgt) - t.dim(), free.size());
        for (std::size_t j = 0; j < free.size(); ++j) {
            Vector coords = t.quotient_coordinates(d.column(free[j]));
            for (std::size_t i = 0; i < coords.size(); ++i)
                m(i, j) = coords[i];
        }
        maps.push_back(std::move(m));
    }
    return ChainComplex(c.grading(), c.min_degree(), std::move(dims), std::move(maps), c.closed_below(),
                        c.closed_above());
}

void Bicomplex::add_cell(int p, int q, std::size_t dim) {
    cells_[{p, q}] = dim;
}

std::size_t Bicomplex::dim(int p, int q) const {
    auto it = cells_.find({p, q});
    return it == cells_.end() ? 0 : it->second;
}

namespace {

void check_map(const Bicomplex& b, int p, int q, int tp, int tq, const Matrix& m) {
    if (!b.has_cell(p, q) || !b.has_cell(tp, tq))
        throw ShapeError("map between missing cells (" + std::to_string(p) + "," + std::to_string(q) + ")");
    if (m.rows() != b.dim(tp, tq) || m.cols() != b.dim(p, q))
        throw ShapeError("map out of cell (" + std::to_string(p) + "," + std::to_string(q) + ") has wrong shape");
}

}  // namespace

void Bicomplex::set_vertical(int p, int q, Matrix m) {
    int step = grading_ == Grading::Homological ? -1 : 1;
    check_map(*this, p, q, p, q + step, m);
    vertical_[{p, q}] = std::move(m);
}

void Bicomplex::set_horizontal(int p, int q, Matrix m) {
    int step = grading_ == Grading::Homological ? -1 : 1;
    check_map(*this, p, q, p + step, q, m);
    horizontal_[{p, q}] = std::move(m);
}

const Matrix* Bicomplex::vertical(int p, int q) const {
    auto it = vertical_.find({p, q});
    return it == vertical_.end() ? nullptr : &it->second;
}

const Matrix* Bicomplex::horizontal(int p, int q) const {
    auto it = horizontal_.find({p, q});
    return it == horizontal_.end() ? nullptr : &it->second;
}

void Bicomplex::verify() const {
    const int s = grading_ == Grading::Homological ? -1 : 1;
    auto where = [](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
    for (const auto& [cell, size] : cells_) {
        auto [p, q] = cell;
        const Matrix* v = vertical(p, q);
        const Matrix* h = horizontal(p, q);
        if (v) {
            if (const Matrix* v2 = vertical(p, q + s); v2 && !((*v2) * (*v)).is_zero())
                throw InvariantError("vertical differential does not square to zero at " + where(p, q));
        }
        if (h) {
            if (const Matrix* h2 = horizontal(p + s, q); h2 && !((*h2) * (*h)).is_zero())
                throw InvariantError("horizontal differential does not square to zero at " + where(p, q));
        }
        if (v && h && has_cell(p + s, q + s)) {
            const Matrix* hv = horizontal(p, q + s);
            const Matrix* vh = vertical(p + s, q);
            Matrix sum(dim(p + s, q + s), size);
            if (hv)
                sum += (*hv) * (*v);
            if (vh)
                sum += (*vh) * (*h);
            if (!sum.is_zero())
                throw InvariantError("square at " + where(p, q) + " does not anticommute");
        }
    }
}

namespace {

std::vector<int> columns_in_degree(const Bicomplex& b, int n) {
    std::vector<int> ps;
    for (const auto& [cell, dim] : b.cells())
        if (cell.first + cell.second == n)
            ps.push_back(cell.first);
    std::sort(ps.begin(), ps.end());
    return ps;
}

std::size_t total_dim(const Bicomplex& b, int n) {
    std::size_t d = 0;
    for (int p : columns_in_degree(b, n))
        d += b.dim(p, n - p);
    return d;
}

}  // namespace

std::optional<std::size_t> total_offset(const Bicomplex& b, int n, int p) {
    std::size_t off = 0;
    for (int col : columns_in_degree(b, n)) {
        if (col == p)
            return off;
        off += b.dim(col, n - col);
    }
    return std::nullopt;
}

ChainComplex total_complex(const Bicomplex& b, int lo, int hi, bool closed_below, bool closed_above) {
    if (hi < lo)
        throw DegreeError("empty degree range for the total complex");
    const bool homological = b.grading() == Grading::Homological;
    const int s = homological ? -1 : 1;
    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(total_dim(b, n));
    std::vector<Matrix> maps;
    for (int lower = lo; lower < hi; ++lower) {
        int src = homological ? lower + 1 : lower;
        int tgt = src + s;
        Matrix d(total_dim(b, tgt), total_dim(b, src));
        for (int p : columns_in_degree(b, src)) {
            int q = src - p;
            std::size_t col0 = *total_offset(b, src, p);
            if (const Matrix* v = b.vertical(p, q))
                if (auto row0 = total_offset(b, tgt, p))
                    d.add_block(*row0, col0, *v);
            if (const Matrix* h = b.horizontal(p, q))
                if (auto row0 = total_offset(b, tgt, p + s))
                    d.add_block(*row0, col0, *h);
        }
        maps.push_back(std::move(d));
    }
    return ChainComplex(b.grading(), lo, std::move(dims), std::move(maps), closed_below, closed_above);
}

std::size_t worker_count() {
    if (const char* env = std::getenv("HOMCYC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < workers; ++t)
        threads.emplace_back(run);
    run();
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace homcyc
