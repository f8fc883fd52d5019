#ifndef CARNOT_MONOMIAL_HPP
#define CARNOT_MONOMIAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace carnot {

/// Power product x_1^{e_1} ... x_N^{e_N}, stored as its exponent vector.
/// Ordered graded-lexicographically (total degree first, then lex on the
/// exponent vector), which fixes the canonical term order everywhere.
class Monomial {
public:
    explicit Monomial(int dimension) : e_(check_dim(dimension), 0) {}

    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        check_dim(static_cast<int>(e_.size()));
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    /// x_j on R^n (j is 1-based).
    static Monomial variable(int n, int j) {
        Monomial m(n);
        m.e_.at(index(m, j)) = 1;
        return m;
    }

    int dimension() const { return static_cast<int>(e_.size()); }
    int exponent(int j) const { return e_.at(index(*this, j)); }  // 1-based
    const std::vector<int>& exponents() const { return e_; }

    int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const { return total_degree() == 0; }

    Monomial times(const Monomial& o) const {
        if (o.dimension() != dimension())
            throw std::invalid_argument("Monomial: dimension mismatch");
        Monomial m = *this;
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
        return m;
    }

    /// Multiplies by x_j^k (k may be negative if the result stays valid).
    Monomial shifted(int j, int k) const {
        Monomial m = *this;
        int& slot = m.e_.at(index(m, j));
        if (slot + k < 0) throw std::invalid_argument("Monomial: exponent would go negative");
        slot += k;
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }

    /// "1", "x3", "x1^2*x2"
    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    static int check_dim(int n) {
        if (n <= 0) throw std::invalid_argument("Monomial: dimension must be positive");
        return n;
    }
    static size_t index(const Monomial& m, int j) {
        if (j < 1 || j > m.dimension())
            throw std::out_of_range("Monomial: variable index out of range");
        return static_cast<size_t>(j - 1);
    }

    std::vector<int> e_;
};

/// Positive weight per coordinate; weighted degree of a monomial is
/// sum_i w_i e_i. Coordinates attached to layer i of a graded algebra
/// carry weight i.
class WeightVector {
public:
    explicit WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
        if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
        for (int x : w_)
            if (x <= 0) throw std::invalid_argument("WeightVector: weights must be positive");
    }

    static WeightVector uniform(int n) { return WeightVector(std::vector<int>(n, 1)); }

    int dimension() const { return static_cast<int>(w_.size()); }
    int weight(int j) const { return w_.at(static_cast<size_t>(j - 1)); }  // 1-based
    const std::vector<int>& weights() const { return w_; }

    long weighted_degree(const Monomial& m) const {
        if (m.dimension() != dimension())
            throw std::invalid_argument("WeightVector: dimension mismatch");
        long acc = 0;
        for (int j = 1; j <= dimension(); ++j)
            acc += static_cast<long>(weight(j)) * m.exponent(j);
        return acc;
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

private:
    std::vector<int> w_;
};

}  // namespace carnot

#endif
