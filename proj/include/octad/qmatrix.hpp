#ifndef OCTAD_QMATRIX_HPP
#define OCTAD_QMATRIX_HPP

// Dense exact-rational matrices, sized for the small linear algebra of
// this project (kernels of evaluation matrices, graded-piece reductions).

#include <vector>

#include "octad/rational.hpp"

namespace octad::geo {

class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    static QMat identity(std::size_t n);
    QMat mul(const QMat& other) const;
    Rat trace() const;

    // In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Basis of the right kernel, one vector per non-pivot column, in
    // non-pivot column order (free variable set to 1).
    std::vector<std::vector<Rat>> kernel() const;

    // Solves A x = b for square invertible A; throws DegenerateInput otherwise.
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

    // X with A X = B; throws DegenerateInput when A is singular.
    QMat solve(const QMat& b) const;

    Rat det() const;

    // Characteristic polynomial coefficients c_0..c_n of det(tI - A),
    // c_n = 1 (Faddeev-LeVerrier).
    std::vector<Rat> char_poly() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

} // namespace octad::geo

#endif
