#pragma once

#include <compare>
#include <string>
#include <vector>

namespace kschur {

// Lattice cell in a Ferrers shape, French convention: row 1 is the bottom
// (longest) row, column 1 the leftmost column. Both indices are 1-based.
struct Cell {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// content mod p, normalized into 0..p-1.
int residue_of(int content, int p);

// Integer partition: weakly decreasing positive parts, stored without
// trailing zeros. The empty partition is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based part access; rows beyond the last have length 0.
    int part(int i) const;
    int cell_count() const;
    const std::vector<int>& parts() const { return parts_; }

    bool has_cell(Cell c) const;
    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    int arm(Cell c) const;
    int leg(Cell c) const;
    // arm + leg + 1; throws std::invalid_argument("cell out of shape").
    int hook(Cell c) const;

    // Cells outside the shape whose addition leaves a partition,
    // listed bottom row first.
    std::vector<Cell> addable_corners() const;

    // All cells, row by row from the bottom, left to right.
    std::vector<Cell> cells() const;

    Partition with_cells(const std::vector<Cell>& add) const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
};

// Lexicographic order on part sequences (missing parts count as 0).
bool lex_less(const Partition& a, const Partition& b);

// Dominance order for partitions of equal size: every prefix sum of a is >=
// the matching prefix sum of b.
bool dominates(const Partition& a, const Partition& b);

std::string to_string(const Partition& p);

// Skew shape outer/inner with inner contained in outer.
class SkewShape {
  public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int cell_count() const;
    std::vector<Cell> cells() const;
    bool contains(Cell c) const;
    // At most one cell per column.
    bool is_horizontal_strip() const;

  private:
    Partition outer_;
    Partition inner_;
};

}  // namespace kschur
