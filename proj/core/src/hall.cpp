#include "carnot/hall.hpp"

#include <stdexcept>

namespace carnot {

HallBasis::HallBasis(int num_generators, int step) : d_(num_generators), r_(step) {
    if (d_ < 2) throw std::invalid_argument("HallBasis: need at least 2 generators");
    if (r_ < 1) throw std::invalid_argument("HallBasis: step must be >= 1");

    for (int g = 1; g <= d_; ++g) elems_.push_back({g, 1, g, 0, 0});

    for (int degree = 2; degree <= r_; ++degree) {
        const int existing = static_cast<int>(elems_.size());
        for (int e = 1; e <= existing; ++e) {
            for (int f = 1; f < e; ++f) {
                if (elems_[static_cast<size_t>(e - 1)].degree +
                        elems_[static_cast<size_t>(f - 1)].degree != degree)
                    continue;
                if (!hall_pair(e, f)) continue;
                elems_.push_back({static_cast<int>(elems_.size()) + 1, degree, 0, e, f});
            }
        }
    }
}

bool HallBasis::hall_pair(int e, int f) const {
    if (e <= f) return false;
    const HallElement& E = elems_[static_cast<size_t>(e - 1)];
    if (E.is_generator()) return true;
    // E = [G,K]: require F >= K in the Hall order.
    return f >= E.right;
}

const HallElement& HallBasis::element(int hall_index) const {
    if (hall_index < 1 || hall_index > size())
        throw std::out_of_range("HallBasis: index out of range");
    return elems_[static_cast<size_t>(hall_index - 1)];
}

std::vector<int> HallBasis::slice(int degree) const {
    std::vector<int> out;
    for (const auto& e : elems_)
        if (e.degree == degree) out.push_back(e.index);
    return out;
}

std::vector<int> HallBasis::layers() const {
    std::vector<int> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(e.degree);
    return out;
}

WeightVector HallBasis::weights() const { return WeightVector(layers()); }

std::string HallBasis::to_string(int hall_index) const {
    const HallElement& e = element(hall_index);
    if (e.is_generator()) return std::to_string(e.generator);
    return "[" + to_string(e.left) + "," + to_string(e.right) + "]";
}

std::string HallBasis::to_latex(int hall_index) const {
    const HallElement& e = element(hall_index);
    if (e.is_generator()) return "X_{" + std::to_string(e.generator) + "}";
    return "[" + to_latex(e.left) + "," + to_latex(e.right) + "]";
}

}  // namespace carnot
