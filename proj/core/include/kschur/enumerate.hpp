#pragma once

#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

// All partitions of n (optionally with parts <= max_part), in descending
// lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, int max_part);

// All compositions of n with parts in 1..max_part, in lexicographic order.
std::vector<std::vector<int>> compositions_of(int n, int max_part);

}  // namespace kschur
