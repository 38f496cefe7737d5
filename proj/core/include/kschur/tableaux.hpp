#pragma once

#include <vector>

#include "kschur/core.hpp"
#include "kschur/partition.hpp"
#include "kschur/tpoly.hpp"

namespace kschur {

// Column-strict tableau: rows weakly increase left to right, columns strictly
// increase bottom to top. rows are stored bottom row first.
struct ColumnStrictTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    std::vector<int> weight;  // weight[i] = number of cells with letter i+1
};

// k-tableau: column-strict filling of a core where the cells with letter i
// occupy exactly kweight[i-1] distinct k+1-residues.
struct KTableau {
    int k = 0;
    Core shape;
    std::vector<std::vector<int>> rows;
    std::vector<int> kweight;
};

// All column-strict tableaux of the given shape and weight, sorted by their
// column reading word.
std::vector<ColumnStrictTableau> enumerate_cst(const Partition& shape,
                                               const std::vector<int>& weight);

// All k-tableaux of the given core shape and k-weight; |alpha| must equal the
// degree of the shape. Sorted by column reading word.
std::vector<KTableau> enumerate_k_tableaux(const Core& shape,
                                           const std::vector<int>& alpha);
long long count_k_tableaux(const Core& shape, const std::vector<int>& alpha);

// Reading word: rows left to right, top row first.
std::vector<int> reading_word(const std::vector<std::vector<int>>& rows);

// Cocharge of a word of partition content: repeatedly extract standard
// subwords scanning right to left (wrapping cyclically); within a subword,
// letter 1 is labeled 0 and letter i+1 inherits letter i's label, plus one
// when it sits strictly left of letter i. Returns the sum of all labels.
int cocharge_word(const std::vector<int>& word);
int cocharge(const ColumnStrictTableau& t);
// charge = n(mu) - cocharge with n(mu) = sum (i-1) mu_i.
int charge(const ColumnStrictTableau& t);

// Kostka-Foulkes polynomial: cocharge generating function over the
// column-strict tableaux of shape lam and weight mu.
TPoly kostka_foulkes(const Partition& lam, const Partition& mu);

}  // namespace kschur
