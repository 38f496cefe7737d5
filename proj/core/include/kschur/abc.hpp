#pragma once

#include <map>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/order.hpp"
#include "kschur/tpoly.hpp"

namespace kschur {

// One ribbon of an affine Bruhat counter-tableau, in final-grid coordinates
// (row 1 = bottommost row of the finished grid).
struct AbcRibbon {
    int letter = 0;
    int size = 0;
    std::vector<Cell> cells;
    Cell head;
    // content of the head in the coordinates of the strip that created it;
    // same-letter ribbons compare residues in this frame
    int mark = 0;
};

// Affine Bruhat counter-tableau of k-weight alpha: one bottom strong
// alpha_i-strip per letter i, chained so that step i runs from lambda^(i) up
// to (k + lambda^(i-1)_1, lambda^(i-1)). The canonical data is the chain of
// strips; the grid and ribbon tiling are derived from it.
struct Abc {
    int k = 0;
    std::vector<int> alpha;
    std::vector<Core> inner_chain;         // lambda^(0) .. lambda^(r)
    std::vector<BottomStrongStrip> steps;  // steps[i] belongs to letter i+1
    std::vector<std::vector<int>> grid;    // letters; 0 = inner cell; bottom row first
    std::vector<AbcRibbon> ribbons;

    const Core& inner() const { return inner_chain.back(); }
    bool standard() const;
};

struct SpinReport {
    int base = 0;
    int offsets = 0;
    int total = 0;
};

// All ABCs of k-weight alpha, ordered by (inner shape, inner chain).
std::vector<Abc> enumerate_abcs(int k, const std::vector<int>& alpha);

// Number of ABCs of the given inner shape and k-weight.
long long abc_count(int k, const Core& inner, const std::vector<int>& alpha);

// 2-ribbons grouped by the grid row of their head, west to east.
std::map<int, std::vector<AbcRibbon>> two_ribbons_by_row(const Abc& a);

// Row-indexed spin: sum of i over rows i holding a 2-ribbon that is not east
// of any 2-ribbon in row i+1. Defined for standard ABCs only.
int spin_base(const Abc& a);

// Ribbons of size > 1 with a lower same-letter, same-size ribbon whose head
// has the same residue.
int offsets(const Abc& a);

SpinReport spin_k(const Abc& a);

// Sum of t^{spin_k(A)} over standard ABCs with the given inner shape;
// n must equal the degree of the inner shape.
TPoly spin_generating_function(int k, const Core& inner, int n);

// Recomputes the lambda^(x) chain from the grid alone (cells of the top x
// step rows holding letters > x, empties counting as infinity).
std::vector<Core> inner_chain_from_grid(const Abc& a);

}  // namespace kschur
