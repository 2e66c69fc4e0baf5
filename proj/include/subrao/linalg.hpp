#ifndef SUBRAO_LINALG_HPP
#define SUBRAO_LINALG_HPP

// Dense exact linear algebra over any of the scalar fields in scalar.hpp.
//
// Convention: group actions in this library are right actions on row vectors,
// v -> v * M, so row i of an action matrix holds the image of basis vector i.
// Subspaces are stored as row bases. kernel() is the usual right kernel
// {x : M x = 0}; left_kernel() is {v : v M = 0}.

#include <subrao/errors.hpp>
#include <subrao/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subrao {

template <class K>
using Vector = std::vector<K>;

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const K& zero)
        : rows_(rows), cols_(cols), zero_(zero.constant(0)), data_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const K& like) {
        Matrix m(n, n, like);
        const K one = like.constant(1);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix from_rows(const std::vector<Vector<K>>& rows, std::size_t cols, const K& like) {
        Matrix m(rows.size(), cols, like);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("ragged row list");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const K& zero() const { return zero_; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const K> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<K> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    Vector<K> row_vector(std::size_t i) const { return Vector<K>(row(i).begin(), row(i).end()); }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != zero_.constant(i == j ? 1 : 0)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
        Matrix s(row_idx.size(), col_idx.size(), zero_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
        return s;
    }

    /// Rows of this followed by rows of other.
    Matrix stacked(const Matrix& other) const {
        if (other.cols_ != cols_) throw DimensionMismatch("stacked: column counts differ");
        Matrix s(rows_ + other.rows_, cols_, zero_);
        std::copy(data_.begin(), data_.end(), s.data_.begin());
        std::copy(other.data_.begin(), other.data_.end(), s.data_.begin() + data_.size());
        return s;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<K>()))> {
        using R = decltype(f(std::declval<K>()));
        R z = f(zero_);
        Matrix<R> out(rows_, cols_, z);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = c * x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const K& x = a(i, j);
                if (x.is_zero()) continue;
                for (std::size_t k = 0; k < b.cols_; ++k) {
                    const K& y = b(j, k);
                    if (!y.is_zero()) r(i, k) += x * y;
                }
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix pow(unsigned e) const {
        if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
        Matrix r = identity(rows_, zero_), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

private:
    void same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    K zero_{};
    std::vector<K> data_;
};

/// v * M for a row vector v.
template <class K>
Vector<K> row_times(std::span<const K> v, const Matrix<K>& m) {
    if (v.size() != m.rows()) throw DimensionMismatch("row_times: length differs from row count");
    Vector<K> out(m.cols(), m.zero());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        auto r = m.row(j);
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!r[k].is_zero()) out[k] += v[j] * r[k];
    }
    return out;
}

/// M * x for a column vector x.
template <class K>
Vector<K> times_column(const Matrix<K>& m, std::span<const K> x) {
    if (x.size() != m.cols()) throw DimensionMismatch("times_column: length differs from column count");
    Vector<K> out(m.rows(), m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero() && !m(i, j).is_zero()) out[i] += m(i, j) * x[j];
    return out;
}

template <class K>
Matrix<K> block_diagonal(const std::vector<Matrix<K>>& blocks, const K& like) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    Matrix<K> out(r, c, like);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

template <class K>
Matrix<K> kronecker(const Matrix<K>& a, const Matrix<K>& b) {
    Matrix<K> out(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

/// Reduced row echelon form with the pivot column list. Pivot rule: columns
/// left to right, first nonzero entry scanning rows top-down.
template <class K>
struct Echelon {
    Matrix<K> form;
    std::vector<std::size_t> pivots;
};

template <class K>
Echelon<K> reduced_echelon(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const K inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const K f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

/// Basis of the row space, as the nonzero rows of an echelon form.
template <class K>
Matrix<K> row_space_basis(const Matrix<K>& m) {
    auto e = reduced_echelon(m);
    std::vector<std::size_t> keep(e.pivots.size());
    std::iota(keep.begin(), keep.end(), 0);
    std::vector<std::size_t> all(m.cols());
    std::iota(all.begin(), all.end(), 0);
    return e.form.submatrix(keep, all);
}

namespace detail {

// Fraction-free echelon over F_p[s]: rows are scaled to polynomials, each
// elimination step is the gcd-reduced cross multiplication, and every updated
// row is divided by the gcd of its entries. Pivot: lowest degree entry in the
// column, ties broken top-down.
inline std::vector<std::vector<Poly>> polynomial_echelon(std::vector<std::vector<Poly>> rows, std::size_t cols,
                                                         std::uint32_t p) {
    auto make_primitive = [&](std::vector<Poly>& row) {
        Poly g(p);
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            g = g.is_zero() ? x.monic() : Poly::gcd(g, x);
            if (g.degree() == 0) return;
        }
        if (g.degree() > 0)
            for (auto& x : row)
                if (!x.is_zero()) x = Poly::exact_div(x, g);
    };
    std::size_t r = 0;
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = r; i < n; ++i) {
            if (rows[i][c].is_zero()) continue;
            if (piv == n || rows[i][c].degree() < rows[piv][c].degree()) piv = i;
            if (rows[piv][c].degree() == 0) break;
        }
        if (piv == n) continue;
        std::swap(rows[piv], rows[r]);
        const auto& pr = rows[r];
        for (std::size_t t = r + 1; t < n; ++t) {
            if (rows[t][c].is_zero()) continue;
            Poly a = pr[c], b = rows[t][c];
            if (a.degree() > 0 || b.degree() > 0) {
                Poly g = Poly::gcd(a, b);
                if (g.degree() > 0) {
                    a = Poly::exact_div(a, g);
                    b = Poly::exact_div(b, g);
                }
            }
            auto& tr = rows[t];
            tr[c] = Poly(p);
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (pr[j].is_zero()) {
                    if (!tr[j].is_zero()) tr[j] = a * tr[j];
                } else {
                    tr[j] = a * tr[j] - b * pr[j];
                }
            }
            make_primitive(tr);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace detail

/// Row-space basis over F_p(s) by fraction-free elimination (rows returned
/// with polynomial entries; not normalized).
inline Matrix<RationalFunction> row_space_basis(const Matrix<RationalFunction>& m) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix<RationalFunction>(0, m.cols(), m.zero());
    const std::uint32_t p = m.zero().modulus();
    std::vector<std::vector<Poly>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Poly l = Poly::constant(p, 1);
        for (const auto& x : m.row(i))
            if (!x.denominator().is_one()) {
                Poly g = Poly::gcd(l, x.denominator());
                l = Poly::exact_div(l, g) * x.denominator();
            }
        std::vector<Poly> row;
        row.reserve(m.cols());
        bool nonzero = false;
        for (const auto& x : m.row(i)) {
            if (x.is_zero()) {
                row.emplace_back(p);
                continue;
            }
            nonzero = true;
            row.push_back(x.numerator() * Poly::exact_div(l, x.denominator()));
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    auto ech = detail::polynomial_echelon(std::move(rows), m.cols(), p);
    Matrix<RationalFunction> out(ech.size(), m.cols(), m.zero());
    for (std::size_t i = 0; i < ech.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(ech[i][j]);
    return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return row_space_basis(m).rows();
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n, m.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.zero().constant(1);
    }
    auto e = reduced_echelon(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw DivisionByZero();
    std::vector<std::size_t> ri(n), ci(n);
    std::iota(ri.begin(), ri.end(), 0);
    std::iota(ci.begin(), ci.end(), n);
    return e.form.submatrix(ri, ci);
}

// ---------------------------------------------------------------------------
// Subspaces and quotients

template <class K>
class Subspace {
public:
    /// Throws std::invalid_argument if the rows of basis are dependent.
    Subspace(std::size_t ambient, Matrix<K> basis) : ambient_(ambient), basis_(std::move(basis)) {
        if (basis_.cols() != ambient_) throw DimensionMismatch("subspace basis has wrong length");
        if (rank(basis_) != basis_.rows()) throw std::invalid_argument("subspace basis is dependent");
    }
    /// Subspace spanned by the given rows; keeps the first independent ones in order.
    static Subspace span(const Matrix<K>& vectors) {
        std::vector<std::size_t> keep;
        Matrix<K> acc(0, vectors.cols(), vectors.zero());
        for (std::size_t i = 0; i < vectors.rows(); ++i) {
            std::size_t idx[] = {i};
            std::vector<std::size_t> all(vectors.cols());
            std::iota(all.begin(), all.end(), 0);
            Matrix<K> trial = acc.stacked(vectors.submatrix(idx, all));
            if (rank(trial) == trial.rows()) {
                acc = std::move(trial);
                keep.push_back(i);
            }
        }
        return Subspace(vectors.cols(), std::move(acc), Trusted{});
    }
    static Subspace zero(std::size_t ambient, const K& like) {
        return Subspace(ambient, Matrix<K>(0, ambient, like), Trusted{});
    }

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }
    const Matrix<K>& basis() const { return basis_; }

    bool contains(std::span<const K> v) const {
        Matrix<K> one(1, ambient_, basis_.zero());
        std::copy(v.begin(), v.end(), one.row(0).begin());
        return rank(basis_.stacked(one)) == dim();
    }

private:
    struct Trusted {};
    Subspace(std::size_t ambient, Matrix<K> basis, Trusted) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    Matrix<K> basis_;
};

/// Right kernel {x : m x = 0}, basis from the free columns of the reduced echelon form.
template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
    auto e = reduced_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector<K>> vecs;
    const K one = m.zero().constant(1);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector<K> v(n, m.zero());
        v[f] = one;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.form(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace<K>(n, Matrix<K>::from_rows(vecs, n, m.zero()));
}

/// Left kernel {v : v m = 0}.
template <class K>
Subspace<K> left_kernel(const Matrix<K>& m) {
    return kernel(m.transpose());
}

/// Solves m x = b; std::nullopt when b is outside the column space. Free
/// variables are set to zero.
template <class K>
std::optional<Vector<K>> solve(const Matrix<K>& m, std::span<const K> b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length");
    const std::size_t n = m.cols();
    Matrix<K> aug(m.rows(), n + 1, m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto e = reduced_echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    Vector<K> x(n, m.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.form(r, n);
    return x;
}

/// Quotient of K^ambient by a subspace S, with a complement spanned by
/// standard basis vectors chosen greedily in the given index order.
template <class K>
class QuotientSpace {
public:
    explicit QuotientSpace(const Subspace<K>& sub) : QuotientSpace(sub, identity_order(sub.ambient())) {}

    QuotientSpace(const Subspace<K>& sub, const std::vector<std::size_t>& extension_order)
        : ambient_(sub.ambient()), sub_(sub.basis()) {
        const K& z = sub_.zero();
        // Greedy extension: e_c joins the complement when independent of S + previous choices.
        Matrix<K> acc = row_space_basis(sub_);
        std::vector<bool> in_complement(ambient_, false);
        for (std::size_t c : extension_order) {
            if (complement_.size() + sub.dim() == ambient_) break;
            Matrix<K> e(1, ambient_, z);
            e(0, c) = z.constant(1);
            Matrix<K> trial = acc.stacked(e);
            if (rank(trial) == trial.rows()) {
                acc = row_space_basis(trial);
                complement_.push_back(c);
                in_complement[c] = true;
            }
        }
        if (complement_.size() + sub.dim() != ambient_) throw std::invalid_argument("extension order does not span");
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!in_complement[c]) others_.push_back(c);
        // v = lambda S + sum mu_j e_{c_j}:  lambda = v_N S_N^{-1},  mu = v_C - lambda S_C
        std::vector<std::size_t> all(sub.dim());
        std::iota(all.begin(), all.end(), 0);
        Matrix<K> s_n = sub_.submatrix(all, others_);
        Matrix<K> s_c = sub_.submatrix(all, complement_);
        Matrix<K> correction = inverse(s_n) * s_c;  // dim x |C|
        projection_ = Matrix<K>(ambient_, complement_.size(), z);
        for (std::size_t j = 0; j < complement_.size(); ++j) projection_(complement_[j], j) = z.constant(1);
        for (std::size_t a = 0; a < others_.size(); ++a)
            for (std::size_t j = 0; j < complement_.size(); ++j) projection_(others_[a], j) = -correction(a, j);
    }

    std::size_t dim() const { return complement_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<std::size_t>& complement() const { return complement_; }
    const Matrix<K>& subspace_basis() const { return sub_; }
    /// ambient x dim matrix sending v to its complement coordinates.
    const Matrix<K>& projection() const { return projection_; }

    Vector<K> project(std::span<const K> v) const { return row_times(v, projection_); }

    /// Coset representative of the j-th complement vector.
    Vector<K> lift(std::size_t j) const {
        Vector<K> v(ambient_, sub_.zero());
        v[complement_[j]] = sub_.zero().constant(1);
        return v;
    }

private:
    static std::vector<std::size_t> identity_order(std::size_t n) {
        std::vector<std::size_t> o(n);
        std::iota(o.begin(), o.end(), 0);
        return o;
    }

    std::size_t ambient_;
    Matrix<K> sub_;
    std::vector<std::size_t> complement_, others_;
    Matrix<K> projection_;
};

/// Matrix of the map induced by v -> v op on the quotient. Throws
/// SubspaceNotInvariant if op does not carry the subspace into itself.
template <class K>
Matrix<K> quotient_operator(const Matrix<K>& op, const QuotientSpace<K>& q) {
    if (op.rows() != q.ambient() || op.cols() != q.ambient()) throw DimensionMismatch("quotient_operator: shape");
    const Matrix<K> image_of_sub = q.subspace_basis() * op;
    if (!(image_of_sub * q.projection()).is_zero()) throw SubspaceNotInvariant();
    std::vector<std::size_t> all(op.cols());
    std::iota(all.begin(), all.end(), 0);
    return op.submatrix(q.complement(), all) * q.projection();
}

template <class K>
Matrix<K> quotient_operator(const Matrix<K>& op, const Subspace<K>& sub) {
    return quotient_operator(op, QuotientSpace<K>(sub));
}

}  // namespace subrao

#endif  // SUBRAO_LINALG_HPP
