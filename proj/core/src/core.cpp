#include "kschur/core.hpp"

#include <stdexcept>

namespace kschur {

namespace {

int count_small_hooks(const Partition& p, int k) {
    int n = 0;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (p.hook({i, j}) <= k) ++n;
    return n;
}

}  // namespace

Core::Core(int k, Partition shape) : k_(k), shape_(std::move(shape)) {
    if (k_ < 1) throw std::invalid_argument("k must be positive");
    if (!is_core(shape_, k_))
        throw std::invalid_argument("shape " + kschur::to_string(shape_) +
                                    " is not a " + std::to_string(k_ + 1) + "-core");
    degree_ = count_small_hooks(shape_, k_);
}

bool Core::is_core(const Partition& p, int k) {
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j)
            if (p.hook({i, j}) == k + 1) return false;
    return true;
}

std::vector<std::vector<int>> Core::residue_rows() const {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape_.rows(); ++i) {
        std::vector<int> row;
        row.reserve(shape_.part(i));
        for (int j = 1; j <= shape_.part(i); ++j) row.push_back(residue({i, j}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Partition Core::to_bounded() const {
    std::vector<int> parts;
    for (int i = 1; i <= shape_.rows(); ++i) {
        int n = 0;
        for (int j = 1; j <= shape_.part(i); ++j)
            if (shape_.hook({i, j}) <= k_) ++n;
        parts.push_back(n);
    }
    return Partition(std::move(parts));
}

Core Core::from_bounded(int k, const Partition& bounded) {
    if (bounded.rows() > 0 && bounded.part(1) > k)
        throw std::invalid_argument("partition is not k-bounded");
    // Hooks strictly decrease along a row, so the cells with hook <= k form a
    // suffix of each row. Build rows top-down: row i gets bounded_i cells plus
    // the unique left shift that puts exactly that many small hooks in it.
    int rows = bounded.rows();
    std::vector<int> parts(rows, 0);
    for (int i = rows; i >= 1; --i) {
        int target = bounded.part(i);
        bool placed = false;
        for (int shift = 0; !placed; ++shift) {
            parts[i - 1] = target + shift;
            if (i < rows && parts[i - 1] < parts[i]) continue;
            // count cells with hook <= k in row i given rows above
            Partition probe(std::vector<int>(parts.begin() + (i - 1), parts.end()));
            int small = 0;
            for (int j = 1; j <= probe.part(1); ++j)
                if (probe.hook({1, j}) <= k) ++small;
            if (small == target) placed = true;
            if (shift > k * (rows + 1))
                throw std::logic_error("from_bounded failed to converge");
        }
    }
    Core out(k, Partition(std::move(parts)));
    if (!(out.to_bounded() == bounded))
        throw std::logic_error("from_bounded round-trip mismatch");
    return out;
}

bool lex_less(const Core& a, const Core& b) { return lex_less(a.shape(), b.shape()); }

std::string to_string(const Core& c) { return to_string(c.shape()); }

}  // namespace kschur
