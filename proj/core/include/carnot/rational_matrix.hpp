#ifndef CARNOT_RATIONAL_MATRIX_HPP
#define CARNOT_RATIONAL_MATRIX_HPP

#include <map>
#include <optional>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

/// Dense matrix of rationals with exact elimination. Rank uses fraction-free
/// (Bareiss) elimination on an integer-scaled copy; solving uses exact
/// Gauss-Jordan. There is no tolerance anywhere.
class QMatrix {
public:
    QMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

    int rank() const;

    /// Reduced row echelon form; pivot_cols lists the pivot column of each
    /// pivot row in order.
    struct Rref;
    Rref rref() const;

    /// Solves A x = b exactly. Returns nullopt when inconsistent; free
    /// variables are set to zero.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    Rational determinant() const;

private:
    size_t index(int i, int j) const;

    int rows_, cols_;
    std::vector<Rational> a_;
};

struct QMatrix::Rref {
    QMatrix m;
    std::vector<int> pivot_cols;
};

/// Incremental echelon basis over sparse rational vectors with ordered keys.
/// insert() reduces the vector against the rows collected so far and keeps it
/// when it is independent. Used for exact span/rank bookkeeping where the
/// coordinates are (component, monomial) pairs rather than dense indices.
template <class Key>
class SparseEchelon {
public:
    using Vec = std::map<Key, Rational>;

    /// Returns true when v was independent of the current span (and added).
    bool insert(Vec v) {
        while (!v.empty()) {
            const Key lead = v.begin()->first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                const Rational inv = Rational(1) / v.begin()->second;
                for (auto& [k, c] : v) c *= inv;
                rows_.emplace(lead, std::move(v));
                return true;
            }
            const Rational factor = v.begin()->second;
            for (const auto& [k, c] : it->second) {
                auto [slot, inserted] = v.try_emplace(k, Rational(0));
                slot->second -= factor * c;
                if (slot->second.is_zero()) v.erase(slot);
            }
        }
        return false;
    }

    bool contains(Vec v) const {
        SparseEchelon copy = *this;
        return !copy.insert(std::move(v));
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<Key, Vec> rows_;
};

}  // namespace carnot

#endif
