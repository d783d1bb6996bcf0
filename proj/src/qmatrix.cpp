#include "octad/qmatrix.hpp"

#include <numeric>

namespace octad::geo {

std::vector<Int> primitive_vector(const std::vector<Rat>& v)
{
    Int lcm = 1;
    for (const auto& q : v) lcm = ::lcm(lcm, Int(q.get_den()));
    std::vector<Int> out;
    out.reserve(v.size());
    Int g = 0;
    for (const auto& q : v) {
        Int z = Int(q.get_num()) * (lcm / Int(q.get_den()));
        g = gcd(g, z);
        out.push_back(z);
    }
    if (g == 0) throw BadInput("zero vector has no primitive form");
    int lead = 0;
    for (const auto& z : out)
        if (z != 0) { lead = sgn(z); break; }
    if (lead < 0) g = -g;
    for (auto& z : out) z /= g;
    return out;
}

QMat QMat::identity(std::size_t n)
{
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::mul(const QMat& other) const
{
    QMat r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += x * other.at(k, j);
        }
    return r;
}

Rat QMat::trace() const
{
    Rat t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

std::vector<std::size_t> QMat::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rat inv = at(row, col);
        for (std::size_t j = 0; j < cols_; ++j) at(row, j) /= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rat f = at(r, col);
            for (std::size_t j = 0; j < cols_; ++j) at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMat::rank() const
{
    QMat copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rat>> QMat::kernel() const
{
    QMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat QMat::solve(const QMat& b) const
{
    if (rows_ != cols_ || b.rows() != rows_) throw BadInput("solve needs a square system");
    QMat aug(rows_, cols_ + b.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    auto pivots = aug.rref();
    if (pivots.size() < cols_ || pivots[cols_ - 1] != cols_ - 1)
        throw DegenerateInput("singular system");
    QMat x(cols_, b.cols());
    for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = aug.at(i, cols_ + j);
    return x;
}

std::vector<Rat> QMat::solve(const std::vector<Rat>& b) const
{
    QMat rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    QMat x = solve(rhs);
    std::vector<Rat> out(cols_);
    for (std::size_t i = 0; i < cols_; ++i) out[i] = x.at(i, 0);
    return out;
}

Rat QMat::det() const
{
    if (rows_ != cols_) throw BadInput("determinant of non-square matrix");
    QMat m = *this;
    Rat d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t p = col;
        while (p < rows_ && m.at(p, col) == 0) ++p;
        if (p == rows_) return Rat(0);
        if (p != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = m.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) / inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::vector<Rat> QMat::char_poly() const
{
    if (rows_ != cols_) throw BadInput("characteristic polynomial of non-square matrix");
    std::size_t n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1})/(k+1)
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    QMat m = *this;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) m = this->mul(m);
        c[n - k] = -m.trace() / Rat(static_cast<long>(k));
        if (k < n)
            for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k];
    }
    return c;
}

} // namespace octad::geo
