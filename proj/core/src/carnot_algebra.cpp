#include "carnot/carnot_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace carnot {

namespace {

SparseVec negated(SparseVec v) {
    for (auto& t : v) t.c = -t.c;
    return v;
}

void add_scaled(SparseVec& acc, const SparseVec& v, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& t : v) {
        auto it = std::lower_bound(acc.begin(), acc.end(), t.k,
                                   [](const BracketTerm& a, int k) { return a.k < k; });
        if (it != acc.end() && it->k == t.k) {
            it->c += t.c * c;
            if (it->c.is_zero()) acc.erase(it);
        } else {
            acc.insert(it, {t.k, t.c * c});
        }
    }
}

std::string sparse_to_string(const SparseVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& t : v) {
        if (!s.empty()) s += " + ";
        s += t.c.to_string() + "*e" + std::to_string(t.k);
    }
    return s;
}

}  // namespace

CarnotAlgebra::CarnotAlgebra(std::vector<int> layers, std::map<std::pair<int, int>, SparseVec> table)
    : n_(static_cast<int>(layers.size())), layers_(std::move(layers)), table_(std::move(table)) {
    if (layers_.empty()) throw std::invalid_argument("CarnotAlgebra: empty layer assignment");
    r_ = 0;
    d_ = 0;
    for (int l : layers_) {
        if (l < 1) throw std::invalid_argument("CarnotAlgebra: layers are 1-based");
        r_ = std::max(r_, l);
        if (l == 1) ++d_;
    }
    for (auto& [ij, v] : table_) {
        if (ij.first < 1 || ij.second < 1 || ij.first >= ij.second || ij.second > n_)
            throw std::invalid_argument("CarnotAlgebra: table keys must satisfy 1 <= i < j <= n");
        for (auto& t : v) {
            if (t.k < 1 || t.k > n_) throw std::invalid_argument("CarnotAlgebra: bracket target out of range");
            if (t.c.is_zero()) throw std::invalid_argument("CarnotAlgebra: zero coefficient stored");
        }
        if (!std::is_sorted(v.begin(), v.end(),
                            [](const BracketTerm& a, const BracketTerm& b) { return a.k < b.k; }))
            throw std::invalid_argument("CarnotAlgebra: bracket terms must be sorted by index");
    }
}

int CarnotAlgebra::layer_of(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("CarnotAlgebra: basis index");
    return layers_[static_cast<size_t>(i - 1)];
}

SparseVec CarnotAlgebra::bracket(int i, int j) const {
    if (i == j) return {};
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return {};
    return flip ? negated(it->second) : it->second;
}

CarnotAlgebra structure_constants_from_frame(const Frame& frame, const std::vector<int>& layers) {
    const int nfields = frame.size();
    if (static_cast<int>(layers.size()) != nfields)
        throw std::invalid_argument("structure_constants_from_frame: layer count mismatch");

    // Flatten the frame once; every bracket is then a linear solve against
    // the same column space.
    std::vector<std::map<VectorField::FlatKey, Rational>> cols;
    std::set<VectorField::FlatKey> keys;
    for (int i = 1; i <= nfields; ++i) {
        cols.push_back(frame.field(i).flattened());
        for (const auto& [k, c] : cols.back()) keys.insert(k);
    }

    auto fill = [&](QMatrix& m, int col, const std::map<VectorField::FlatKey, Rational>& v) {
        int row = 0;
        for (const auto& key : keys) {
            auto it = v.find(key);
            if (it != v.end()) m.at(row, col) = it->second;
            ++row;
        }
    };

    QMatrix a(static_cast<int>(keys.size()), nfields);
    for (int c = 0; c < nfields; ++c) fill(a, c, cols[static_cast<size_t>(c)]);

    std::map<std::pair<int, int>, SparseVec> table;
    for (int i = 1; i <= nfields; ++i) {
        for (int j = i + 1; j <= nfields; ++j) {
            const VectorField b = lie_bracket(frame.field(i), frame.field(j));
            const auto flat = b.flattened();
            // Brackets may leave the key space entirely; that is already
            // inexpressible.
            for (const auto& [k, c] : flat)
                if (!keys.count(k)) throw FrameExpansionError(i, j, b.to_string());

            std::vector<Rational> rhs(keys.size(), Rational(0));
            {
                int row = 0;
                for (const auto& key : keys) {
                    auto it = flat.find(key);
                    if (it != flat.end()) rhs[static_cast<size_t>(row)] = it->second;
                    ++row;
                }
            }
            const auto x = a.solve(rhs);
            if (!x) {
                // Inconsistent: report the residual against the best
                // consistent candidate, which is the bracket itself here.
                throw FrameExpansionError(i, j, b.to_string());
            }
            SparseVec out;
            for (int k = 0; k < nfields; ++k)
                if (!(*x)[static_cast<size_t>(k)].is_zero()) out.push_back({k + 1, (*x)[static_cast<size_t>(k)]});
            // The solver guarantees A x = rhs exactly, so the residual is zero.
            if (!out.empty()) table.emplace(std::pair<int, int>(i, j), std::move(out));
        }
    }
    return CarnotAlgebra(layers, std::move(table));
}

VerificationReport verify_carnot_axioms(const CarnotAlgebra& alg) {
    VerificationReport report;
    const int n = alg.dimension();
    const int r = alg.step();

    // Layer compatibility: [L_a, L_b] lands in L_{a+b}, and vanishes beyond
    // step r.
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= n && ok; ++i) {
            for (int j = i + 1; j <= n && ok; ++j) {
                const int target = alg.layer_of(i) + alg.layer_of(j);
                for (const auto& t : alg.bracket(i, j)) {
                    if (target > r || alg.layer_of(t.k) != target) {
                        ok = false;
                        detail = "[e" + std::to_string(i) + ",e" + std::to_string(j) +
                                 "] hits e" + std::to_string(t.k) + " outside layer " +
                                 std::to_string(target);
                        break;
                    }
                }
            }
        }
        report.add("layer compatibility [L_i,L_j] in L_{i+j}", ok, detail);
    }

    // Jacobi identity on all triples.
    {
        bool ok = true;
        std::string detail;
        auto bracket_vec = [&](int i, const SparseVec& v) {
            SparseVec acc;
            for (const auto& t : v) add_scaled(acc, alg.bracket(i, t.k), t.c);
            return acc;
        };
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j)
                for (int k = j + 1; k <= n && ok; ++k) {
                    SparseVec acc = bracket_vec(i, alg.bracket(j, k));
                    add_scaled(acc, bracket_vec(j, alg.bracket(k, i)), Rational(1));
                    add_scaled(acc, bracket_vec(k, alg.bracket(i, j)), Rational(1));
                    if (!acc.empty()) {
                        ok = false;
                        detail = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ") violates Jacobi: " + sparse_to_string(acc);
                    }
                }
        report.add("Jacobi identity", ok, detail);
    }

    // Generation: L_{s+1} = [L_1, L_s] as a span equality over the rationals.
    for (int s = 1; s < r; ++s) {
        std::vector<int> gen, layer_s, layer_next;
        for (int i = 1; i <= n; ++i) {
            if (alg.layer_of(i) == 1) gen.push_back(i);
            if (alg.layer_of(i) == s) layer_s.push_back(i);
            if (alg.layer_of(i) == s + 1) layer_next.push_back(i);
        }
        QMatrix m(static_cast<int>(gen.size() * layer_s.size()), static_cast<int>(layer_next.size()));
        int row = 0;
        for (int g : gen) {
            for (int b : layer_s) {
                for (const auto& t : alg.bracket(g, b)) {
                    auto pos = std::find(layer_next.begin(), layer_next.end(), t.k);
                    if (pos != layer_next.end())
                        m.at(row, static_cast<int>(pos - layer_next.begin())) = t.c;
                }
                ++row;
            }
        }
        const int rank = m.rank();
        const bool ok = rank == static_cast<int>(layer_next.size());
        report.add("generation L_" + std::to_string(s + 1) + " = [L_1, L_" + std::to_string(s) + "]",
                   ok,
                   ok ? "" : "span rank " + std::to_string(rank) + " < dim " +
                                 std::to_string(layer_next.size()));
    }

    return report;
}

std::vector<int> growth_vector_at_point(const Frame& frame, const std::vector<int>& generators,
                                        const std::vector<Rational>& point) {
    for (int g : generators)
        if (g < 1 || g > frame.size())
            throw std::invalid_argument("growth_vector_at_point: generator index out of range");
    const int n = frame.dimension();

    std::vector<VectorField> layer;
    for (int g : generators) layer.push_back(frame.field(g));

    // Module-level span over constant coefficients; the flag stabilizes once
    // a whole layer adds nothing new here.
    SparseEchelon<VectorField::FlatKey> module_span;
    std::vector<VectorField> all_fields;
    for (const auto& f : layer)
        if (module_span.insert(f.flattened())) all_fields.push_back(f);

    auto pointwise_rank = [&]() {
        QMatrix m(n, static_cast<int>(all_fields.size()));
        for (int c = 0; c < static_cast<int>(all_fields.size()); ++c) {
            const auto v = all_fields[static_cast<size_t>(c)].evaluate(point);
            for (int i = 0; i < n; ++i) m.at(i, c) = v[static_cast<size_t>(i)];
        }
        return m.rank();
    };

    std::vector<int> ranks{pointwise_rank()};
    std::vector<VectorField> frontier = layer;
    for (int iter = 0; iter < 2 * n; ++iter) {
        std::vector<VectorField> next;
        bool grew = false;
        for (int g : generators) {
            for (const auto& f : frontier) {
                VectorField b = lie_bracket(frame.field(g), f);
                if (b.is_zero()) continue;
                if (module_span.insert(b.flattened())) {
                    all_fields.push_back(b);
                    next.push_back(std::move(b));
                    grew = true;
                }
            }
        }
        if (!grew) break;
        ranks.push_back(pointwise_rank());
        frontier = std::move(next);
        if (ranks.back() == n) break;
    }
    // Drop trailing repeats: the flag has stabilized pointwise.
    while (ranks.size() > 1 && ranks.back() == ranks[ranks.size() - 2]) ranks.pop_back();
    return ranks;
}

}  // namespace carnot
