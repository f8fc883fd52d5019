#include "carnot/rational_matrix.hpp"

#include <stdexcept>

namespace carnot {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("QMatrix: negative shape");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0));
}

size_t QMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("QMatrix: index");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
}

namespace {

// Integer copy of the matrix with each row scaled by the lcm of its
// denominators. Row scaling preserves rank and singularity.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
    std::vector<std::vector<Integer>> rows(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (int j = 0; j < m.cols(); ++j) {
            Integer den = m.at(i, j).denominator();
            Integer g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale = scale / g * den;
        }
        auto& row = rows[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            row[static_cast<size_t>(j)] = x.numerator() * (scale / x.denominator());
        }
    }
    return rows;
}

}  // namespace

int QMatrix::rank() const {
    auto rows = integer_rows(*this);
    const int nr = rows_, nc = cols_;
    int rank = 0;
    Integer prev_pivot = 1;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        const Integer p = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int i = rank + 1; i < nr; ++i) {
            auto& ri = rows[static_cast<size_t>(i)];
            const auto& rp = rows[static_cast<size_t>(rank)];
            const Integer head = ri[static_cast<size_t>(col)];
            for (int j = col; j < nc; ++j) {
                // Bareiss update: exact division by the previous pivot.
                Integer t = ri[static_cast<size_t>(j)] * p - head * rp[static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                ri[static_cast<size_t>(j)] = t;
            }
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

QMatrix::Rref QMatrix::rref() const {
    QMatrix m = *this;
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivot_cols)};
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("QMatrix::solve: shape mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[static_cast<size_t>(i)];
    }
    const Rref r = aug.rref();
    for (int c : r.pivot_cols)
        if (c == cols_) return std::nullopt;  // pivot in the augmented column: inconsistent
    std::vector<Rational> x(static_cast<size_t>(cols_), Rational(0));
    for (size_t row = 0; row < r.pivot_cols.size(); ++row)
        x[static_cast<size_t>(r.pivot_cols[row])] = r.m.at(static_cast<int>(row), cols_);
    return x;
}

Rational QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix::determinant: not square");
    QMatrix m = *this;
    Rational det(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(col, col);
        const Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

}  // namespace carnot
