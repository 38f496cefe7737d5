#include "kschur/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kschur {

int residue_of(int content, int p) {
    int r = content % p;
    return r < 0 ? r + p : r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("row index must be >= 1");
    return i <= rows() ? parts_[i - 1] : 0;
}

int Partition::cell_count() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
}

bool Partition::has_cell(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.row <= rows() && c.col <= part(c.row);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

int Partition::arm(Cell c) const { return part(c.row) - c.col; }

int Partition::leg(Cell c) const {
    int n = 0;
    for (int i = c.row + 1; i <= rows() && part(i) >= c.col; ++i) ++n;
    return n;
}

int Partition::hook(Cell c) const {
    if (!has_cell(c)) throw std::invalid_argument("cell out of shape");
    return arm(c) + leg(c) + 1;
}

std::vector<Cell> Partition::addable_corners() const {
    std::vector<Cell> out;
    for (int i = 1; i <= rows() + 1; ++i) {
        int len = i <= rows() ? part(i) : 0;
        int above_cap = i == 1 ? len + 1 : part(i - 1);
        if (len < above_cap || i == 1) out.push_back({i, len + 1});
    }
    return out;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
    return out;
}

Partition Partition::with_cells(const std::vector<Cell>& add) const {
    int nrows = rows();
    for (const Cell& c : add) nrows = std::max(nrows, c.row);
    std::vector<int> parts(nrows, 0);
    for (int i = 1; i <= rows(); ++i) parts[i - 1] = part(i);
    for (const Cell& c : add) {
        if (c.col != parts[c.row - 1] + 1)
            throw std::invalid_argument("cell is not addable at its row end");
        parts[c.row - 1] = c.col;
    }
    return Partition(std::move(parts));
}

bool lex_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end());
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.cell_count() != b.cell_count()) return false;
    int rows = std::max(a.rows(), b.rows());
    int sa = 0, sb = 0;
    for (int i = 1; i <= rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < p.rows(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    os << ')';
    return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape: inner not contained in outer");
}

int SkewShape::cell_count() const {
    return outer_.cell_count() - inner_.cell_count();
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.rows(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
            out.push_back({i, j});
    return out;
}

bool SkewShape::contains(Cell c) const {
    return outer_.has_cell(c) && !inner_.has_cell(c);
}

bool SkewShape::is_horizontal_strip() const {
    for (int i = 1; i < outer_.rows(); ++i)
        if (outer_.part(i + 1) > inner_.part(i)) return false;
    return true;
}

}  // namespace kschur
