#include "kschur/enumerate.hpp"

namespace kschur {

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

void compositions_rec(int n, int max_part, std::vector<int>& acc,
                      std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = 1; p <= std::min(n, max_part); ++p) {
        acc.push_back(p);
        compositions_rec(n - p, max_part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    if (n < 0 || max_part < 1) return out;
    std::vector<int> acc;
    partitions_rec(n, max_part, acc, out);
    return out;
}

std::vector<std::vector<int>> compositions_of(int n, int max_part) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    if (n < 0 || max_part < 1) return out;
    std::vector<int> acc;
    compositions_rec(n, max_part, acc, out);
    return out;
}

}  // namespace kschur
