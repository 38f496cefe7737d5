#pragma once

#include <string>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

// A (k+1)-core: partition with no cell of hook-length k+1, together with the
// k it lives at. Residues and degree are always taken mod/at k+1.
class Core {
  public:
    Core(int k, Partition shape);

    int k() const { return k_; }
    int period() const { return k_ + 1; }
    const Partition& shape() const { return shape_; }

    // Number of cells with hook-length <= k. Equals the length of the
    // corresponding affine Grassmannian element.
    int degree() const { return degree_; }

    int residue(Cell c) const { return residue_of(c.content(), period()); }
    // Residues of every cell, rows bottom-up.
    std::vector<std::vector<int>> residue_rows() const;

    // The k-bounded partition whose i-th part counts the cells of row i with
    // hook-length <= k.
    Partition to_bounded() const;
    static Core from_bounded(int k, const Partition& bounded);

    static bool is_core(const Partition& p, int k);

    friend bool operator==(const Core& a, const Core& b) {
        return a.k_ == b.k_ && a.shape_ == b.shape_;
    }

  private:
    int k_;
    Partition shape_;
    int degree_;
};

bool lex_less(const Core& a, const Core& b);
std::string to_string(const Core& c);

struct CoreLexLess {
    bool operator()(const Core& a, const Core& b) const { return lex_less(a, b); }
};

}  // namespace kschur
