#include "homcyc/linalg.hpp"

#include "homcyc/error.hpp"

#include <algorithm>
#include <utility>

namespace homcyc {

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    auto digits = [](std::string_view part) {
        return !part.empty() && std::all_of(part.begin(), part.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    std::string_view body = s;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    const auto slash = body.find('/');
    const bool ok = slash == std::string_view::npos ? digits(body)
                                                    : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    if (!ok)
        throw Error("malformed scalar \"" + s + "\"");
    Scalar value;
    if (value.set_str(s, 10) != 0)
        throw Error("malformed scalar \"" + s + "\"");
    if (value.get_den() == 0)
        throw Error("zero denominator in scalar \"" + s + "\"");
    value.canonicalize();
    return value;
}

std::string format_scalar(const Scalar& value) {
    Scalar v = value;
    v.canonicalize();
    return v.get_str();
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ShapeError("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw ShapeError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto span = row(r);
    return Vector(span.begin(), span.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0)
                t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return homcyc::is_zero(entries_);
}

std::size_t Matrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const Scalar& x) { return sgn(x) != 0; }));
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw ShapeError("matrix-vector shape mismatch");
    Vector out(rows_);
    Scalar tmp;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0)
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (sgn(a) == 0)
                continue;
            tmp = a * v[c];
            out[r] += tmp;
        }
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (sgn(other.entries_[i]) != 0)
            entries_[i] += other.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (sgn(other.entries_[i]) != 0)
            entries_[i] -= other.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : entries_)
        if (sgn(x) != 0)
            x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    std::vector<std::vector<std::size_t>> support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (sgn(b(k, j)) != 0)
                support[k].push_back(j);
    Matrix c(a.rows_, b.cols_);
    Scalar tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j : support[k]) {
                tmp = aik * b(k, j);
                c(i, j) += tmp;
            }
        }
    return c;
}

void Matrix::add_block(std::size_t row0, std::size_t col0, const Matrix& block) {
    if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
        throw ShapeError("block does not fit");
    for (std::size_t r = 0; r < block.rows_; ++r)
        for (std::size_t c = 0; c < block.cols_; ++c)
            if (sgn(block(r, c)) != 0)
                (*this)(row0 + r, col0 + c) += block(r, c);
}

namespace {

struct Entry {
    std::size_t col;
    mpz_class value;
};
using IntRow = std::vector<Entry>;  // sorted by column, no zeros

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& e : row)
            mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(std::span<const Scalar> row) {
    mpz_class common = 1;
    for (const auto& x : row)
        if (sgn(x) != 0)
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
    IntRow out;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) == 0)
            continue;
        Entry e{j, 0};
        mpz_divexact(e.value.get_mpz_t(), common.get_mpz_t(), row[j].get_den_mpz_t());
        e.value *= row[j].get_num();
        out.push_back(std::move(e));
    }
    make_primitive(out);
    return out;
}

const mpz_class* find(const IntRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::size_t c) { return e.col < c; });
    return it != row.end() && it->col == col ? &it->value : nullptr;
}

// target <- a * target - b * pivot with a, b chosen to cancel column c.
void cancel(IntRow& target, const IntRow& pivot, std::size_t c, IntRow& scratch) {
    const mpz_class& p = *find(pivot, c);
    const mpz_class& t = *find(target, c);
    mpz_class g, a, b;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), t.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t());
    if (sgn(a) < 0) {
        a = -a;
        b = -b;
    }
    const bool scaled = a != 1;
    scratch.clear();
    auto x = target.begin();
    auto y = pivot.begin();
    while (x != target.end() || y != pivot.end()) {
        if (y == pivot.end() || (x != target.end() && x->col < y->col)) {
            if (scaled)
                x->value *= a;
            scratch.push_back(std::move(*x));
            ++x;
        } else if (x == target.end() || y->col < x->col) {
            scratch.push_back({y->col, -b * y->value});
            ++y;
        } else {
            Entry e{x->col, 0};
            if (scaled)
                e.value = a * x->value;
            else
                e.value = std::move(x->value);
            mpz_submul(e.value.get_mpz_t(), b.get_mpz_t(), y->value.get_mpz_t());
            if (sgn(e.value) != 0)
                scratch.push_back(std::move(e));
            ++x;
            ++y;
        }
    }
    std::swap(target, scratch);
    if (scaled)
        make_primitive(target);
}

struct Elimination {
    std::vector<IntRow> rows;  // one per pivot, in pivot order
    std::vector<std::size_t> pivots;
};

// Sparse integer elimination on primitive rows. Rows are bucketed by their
// leading column; the shortest row of a bucket becomes the pivot. With
// `full` set, pivot columns are also cleared above each pivot.
Elimination eliminate(const Matrix& m, bool full) {
    std::vector<IntRow> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntRow row = integer_row(m.row(r));
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    std::vector<std::vector<std::size_t>> buckets(m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        buckets[rows[i].front().col].push_back(i);

    Elimination e;
    IntRow scratch;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto& bucket = buckets[c];
        if (bucket.empty())
            continue;
        std::size_t best = 0;
        for (std::size_t k = 1; k < bucket.size(); ++k)
            if (rows[bucket[k]].size() < rows[bucket[best]].size())
                best = k;
        const std::size_t pivot = bucket[best];
        for (std::size_t k = 0; k < bucket.size(); ++k) {
            if (k == best)
                continue;
            IntRow& target = rows[bucket[k]];
            cancel(target, rows[pivot], c, scratch);
            if (!target.empty())
                buckets[target.front().col].push_back(bucket[k]);
        }
        e.rows.push_back(std::move(rows[pivot]));
        e.pivots.push_back(c);
        bucket.clear();
        bucket.shrink_to_fit();
    }
    if (full)
        for (std::size_t i = e.rows.size(); i-- > 0;)
            for (std::size_t j = 0; j < i; ++j)
                if (find(e.rows[j], e.pivots[i]))
                    cancel(e.rows[j], e.rows[i], e.pivots[i], scratch);
    return e;
}

}  // namespace

Rref rref(const Matrix& m) {
    Elimination e = eliminate(m, true);
    Rref out{Matrix(m.rows(), m.cols()), e.pivots, e.pivots.size()};
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const mpz_class& p = *find(e.rows[r], e.pivots[r]);
        for (const auto& entry : e.rows[r]) {
            Scalar& x = out.reduced(r, entry.col);
            x = Scalar(entry.value, p);
            x.canonicalize();
        }
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() > m.cols())
        return eliminate(m.transpose(), false).pivots.size();
    return eliminate(m, false).pivots.size();
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    s.pivots_.resize(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) {
    Rref r = rref(m);
    Subspace s(m.cols());
    s.basis_ = Matrix(r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s.basis_(i, j) = r.reduced(i, j);
    s.pivots_ = std::move(r.pivots);
    return s;
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_)
        throw ShapeError("vector length does not match subspace ambient dimension");
    Vector out(v.begin(), v.end());
    Scalar factor, tmp;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        factor = out[pivots_[r]];
        if (sgn(factor) == 0)
            continue;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
            const Scalar& b = basis_(r, j);
            if (sgn(b) == 0)
                continue;
            tmp = factor * b;
            out[j] -= tmp;
        }
    }
    return out;
}

bool Subspace::contains(std::span<const Scalar> v) const {
    return is_zero(reduce(v));
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
    if (!contains(v))
        return std::nullopt;
    Vector coords(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r)
        coords[r] = v[pivots_[r]];
    return coords;
}

Vector Subspace::quotient_coordinates(std::span<const Scalar> v) const {
    Vector reduced = reduce(v);
    auto free = free_columns();
    Vector out(free.size());
    for (std::size_t i = 0; i < free.size(); ++i)
        out[i] = reduced[free[i]];
    return out;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Subspace kernel(const Matrix& m) {
    Rref r = rref(m);
    std::vector<Vector> vectors;
    std::size_t next = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (next < r.pivots.size() && r.pivots[next] == f) {
            ++next;
            continue;
        }
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            if (sgn(r.reduced(i, f)) != 0)
                v[r.pivots[i]] = -r.reduced(i, f);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(vectors, m.cols());
}

Subspace image(const Matrix& m) {
    return Subspace::row_space(m.transpose());
}

std::size_t quotient_dim(const Subspace& sub, const Subspace& super) {
    if (sub.ambient_dim() != super.ambient_dim())
        throw NotASubspaceError("ambient dimensions differ");
    for (std::size_t i = 0; i < sub.dim(); ++i)
        if (!super.contains(sub.basis().row(i)))
            throw NotASubspaceError("basis vector " + std::to_string(i) + " of the subspace is not contained");
    return super.dim() - sub.dim();
}

Subspace solve_homogeneous(const Matrix& constraints) {
    return kernel(constraints);
}

Subspace solve_homogeneous(const std::vector<Vector>& constraints, std::size_t dim) {
    if (constraints.empty())
        return Subspace::full(dim);
    return kernel(Matrix::from_rows(constraints, dim));
}

std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> rhs) {
    if (rhs.size() != m.rows())
        throw ShapeError("right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    Rref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        x[r.pivots[i]] = r.reduced(i, m.cols());
    return AffineSolution{std::move(x), kernel(m)};
}

}  // namespace homcyc
