#include "kschur/tableaux.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kschur {

namespace {

// Visits every nu with cur <= nu <= bound and nu/cur a horizontal strip.
// cur is taken by value: callers mutate the container it came from while the
// iteration is still walking rows.
template <typename Fn>
void for_each_horizontal_extension(const Partition cur, const Partition& bound,
                                   Fn&& fn) {
    int rows = bound.rows();
    std::vector<int> parts(rows, 0);
    auto dfs = [&](auto&& self, int row) -> void {
        if (row > rows) {
            std::vector<int> trimmed(parts.begin(), parts.end());
            fn(Partition(std::move(trimmed)));
            return;
        }
        int lo = cur.part(row);
        int hi = std::min(bound.part(row), row == 1 ? bound.part(1) : cur.part(row - 1));
        for (int v = lo; v <= hi; ++v) {
            parts[row - 1] = v;
            self(self, row + 1);
        }
    };
    dfs(dfs, 1);
}

std::vector<std::vector<int>> rows_from_chain(const std::vector<Partition>& chain) {
    const Partition& full = chain.back();
    std::vector<std::vector<int>> rows(full.rows());
    for (int i = 1; i <= full.rows(); ++i) rows[i - 1].assign(full.part(i), 0);
    for (std::size_t step = 1; step < chain.size(); ++step) {
        for (int i = 1; i <= chain[step].rows(); ++i)
            for (int j = chain[step - 1].part(i) + 1; j <= chain[step].part(i); ++j)
                rows[i - 1][j - 1] = static_cast<int>(step);
    }
    return rows;
}

std::vector<int> column_reading_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> word;
    std::size_t maxlen = 0;
    for (const auto& r : rows) maxlen = std::max(maxlen, r.size());
    for (std::size_t j = 0; j < maxlen; ++j)
        for (std::size_t i = rows.size(); i-- > 0;)
            if (j < rows[i].size()) word.push_back(rows[i][j]);
    return word;
}

template <typename T>
void sort_by_column_word(std::vector<T>& tableaux) {
    std::stable_sort(tableaux.begin(), tableaux.end(), [](const T& a, const T& b) {
        return column_reading_word(a.rows) < column_reading_word(b.rows);
    });
}

int distinct_residues_added(const Partition& prev, const Partition& next, int period) {
    std::set<int> res;
    for (int i = 1; i <= next.rows(); ++i)
        for (int j = prev.part(i) + 1; j <= next.part(i); ++j)
            res.insert(residue_of(j - i, period));
    return static_cast<int>(res.size());
}

void validate_composition(const std::vector<int>& alpha) {
    for (int a : alpha)
        if (a < 1) throw std::invalid_argument("composition parts must be positive");
}

}  // namespace

std::vector<ColumnStrictTableau> enumerate_cst(const Partition& shape,
                                               const std::vector<int>& weight) {
    validate_composition(weight);
    int total = 0;
    for (int w : weight) total += w;
    if (total != shape.cell_count())
        throw std::invalid_argument("weight size mismatch");

    std::vector<ColumnStrictTableau> out;
    std::vector<Partition> chain{Partition{}};
    auto dfs = [&](auto&& self, std::size_t letter) -> void {
        if (letter == weight.size()) {
            if (chain.back() == shape)
                out.push_back({shape, rows_from_chain(chain), weight});
            return;
        }
        for_each_horizontal_extension(chain.back(), shape, [&](Partition next) {
            if (next.cell_count() - chain.back().cell_count() != weight[letter])
                return;
            chain.push_back(std::move(next));
            self(self, letter + 1);
            chain.pop_back();
        });
    };
    dfs(dfs, 0);
    sort_by_column_word(out);
    return out;
}

std::vector<KTableau> enumerate_k_tableaux(const Core& shape,
                                           const std::vector<int>& alpha) {
    validate_composition(alpha);
    int total = 0;
    for (int a : alpha) total += a;
    if (total != shape.degree())
        throw std::invalid_argument("weight size mismatch");

    const int period = shape.period();
    std::vector<KTableau> out;
    std::vector<Partition> chain{Partition{}};
    auto dfs = [&](auto&& self, std::size_t letter) -> void {
        if (letter == alpha.size()) {
            if (chain.back() == shape.shape())
                out.push_back({shape.k(), shape, rows_from_chain(chain), alpha});
            return;
        }
        for_each_horizontal_extension(chain.back(), shape.shape(), [&](Partition next) {
            if (next == chain.back()) return;
            if (distinct_residues_added(chain.back(), next, period) != alpha[letter])
                return;
            chain.push_back(std::move(next));
            self(self, letter + 1);
            chain.pop_back();
        });
    };
    dfs(dfs, 0);
    sort_by_column_word(out);
    return out;
}

long long count_k_tableaux(const Core& shape, const std::vector<int>& alpha) {
    return static_cast<long long>(enumerate_k_tableaux(shape, alpha).size());
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> word;
    for (std::size_t i = rows.size(); i-- > 0;)
        for (int v : rows[i]) word.push_back(v);
    return word;
}

int cocharge_word(const std::vector<int>& word) {
    int maxletter = 0;
    for (int v : word) {
        if (v < 1) throw std::invalid_argument("letters must be positive");
        maxletter = std::max(maxletter, v);
    }
    std::vector<int> counts(maxletter, 0);
    for (int v : word) ++counts[v - 1];
    for (int i = 0; i + 1 < maxletter; ++i)
        if (counts[i] < counts[i + 1])
            throw std::invalid_argument("cocharge requires partition weight");

    const int n = static_cast<int>(word.size());
    std::vector<bool> used(n, false);
    int remaining = n;
    int total = 0;
    while (remaining > 0) {
        int pos = -1;
        for (int i = n - 1; i >= 0; --i)
            if (!used[i] && word[i] == 1) {
                pos = i;
                break;
            }
        if (pos < 0) throw std::logic_error("cocharge extraction lost a letter");
        used[pos] = true;
        --remaining;
        int label = 0;
        int prev = pos;
        for (int letter = 2; letter <= maxletter; ++letter) {
            int found = -1;
            for (int i = prev - 1; i >= 0; --i)
                if (!used[i] && word[i] == letter) {
                    found = i;
                    break;
                }
            if (found < 0) {
                for (int i = n - 1; i > prev; --i)
                    if (!used[i] && word[i] == letter) {
                        found = i;
                        break;
                    }
            }
            if (found < 0) break;
            if (found < prev) ++label;
            total += label;
            used[found] = true;
            --remaining;
            prev = found;
        }
    }
    return total;
}

int cocharge(const ColumnStrictTableau& t) { return cocharge_word(reading_word(t.rows)); }

int charge(const ColumnStrictTableau& t) {
    int n_mu = 0;
    for (std::size_t i = 0; i < t.weight.size(); ++i)
        n_mu += static_cast<int>(i) * t.weight[i];
    return n_mu - cocharge(t);
}

TPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
    if (lam.cell_count() != mu.cell_count())
        throw std::invalid_argument("kostka_foulkes: sizes differ");
    TPoly sum;
    for (const ColumnStrictTableau& t : enumerate_cst(lam, mu.parts()))
        sum += TPoly::t_power(cocharge(t));
    return sum;
}

}  // namespace kschur
