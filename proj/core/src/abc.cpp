#include "kschur/abc.hpp"

#include <algorithm>
#include <stdexcept>

namespace kschur {

namespace {

void validate_alpha(int k, const std::vector<int>& alpha) {
    if (alpha.empty()) throw std::invalid_argument("weight must be nonempty");
    for (int a : alpha)
        if (a < 1 || a > k)
            throw std::invalid_argument("weight parts must lie in 1..k");
}

// letter rows are appended at the bottom: step i's new row ends up as grid
// row r - i + 1 (bottom-up), and local row x of step i's strip frame is grid
// row r - i + x.
Abc assemble(int k, const std::vector<int>& alpha,
             std::vector<Core> inner_chain, std::vector<BottomStrongStrip> steps) {
    const int r = static_cast<int>(alpha.size());
    Abc abc{k, alpha, std::move(inner_chain), std::move(steps), {}, {}};

    abc.grid.assign(r, {});
    for (int i = 1; i <= r; ++i) {
        int width = k + abc.inner_chain[i - 1].shape().part(1);
        abc.grid[r - i].assign(width, 0);
    }
    for (int i = 1; i <= r; ++i) {
        const auto& chain = abc.steps[i - 1].chain;
        for (std::size_t step = 1; step < chain.size(); ++step) {
            auto comps = ribbon_components(
                SkewShape(chain[step].shape(), chain[step - 1].shape()), k);
            for (const Ribbon& comp : comps) {
                AbcRibbon ribbon;
                ribbon.letter = i;
                ribbon.size = comp.size();
                ribbon.mark = comp.head.content();
                for (const Cell& c : comp.cells) {
                    Cell mapped{r - i + c.row, c.col};
                    abc.grid.at(mapped.row - 1).at(mapped.col - 1) = i;
                    ribbon.cells.push_back(mapped);
                }
                ribbon.head = {r - i + comp.head.row, comp.head.col};
                abc.ribbons.push_back(std::move(ribbon));
            }
        }
    }
    if (abc.standard())
        for (const AbcRibbon& rib : abc.ribbons)
            if (rib.size > 2)
                throw std::logic_error("standard ABC grew a ribbon of size > 2");
    return abc;
}

// Enumerates ABCs; when inner_filter is set, only chains staying inside the
// filter shape are explored and only exact matches are emitted.
template <typename Fn>
void for_each_abc(int k, const std::vector<int>& alpha, const Core* inner_filter,
                  Fn&& fn) {
    validate_alpha(k, alpha);
    std::vector<Core> inner_chain{Core(k, Partition{})};
    std::vector<BottomStrongStrip> steps;
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == alpha.size()) {
            if (!inner_filter || inner_chain.back() == *inner_filter)
                fn(inner_chain, steps);
            return;
        }
        for (const Core& next : bottom_strong_set(inner_chain.back(), alpha[i])) {
            if (inner_filter && !inner_filter->shape().contains(next.shape()))
                continue;
            auto strip = bottom_strong_strip(inner_chain.back(), next, alpha[i]);
            if (!strip) throw std::logic_error("bottom strong set without certificate");
            inner_chain.push_back(next);
            steps.push_back(std::move(*strip));
            self(self, i + 1);
            inner_chain.pop_back();
            steps.pop_back();
        }
    };
    dfs(dfs, 0);
}

bool inner_chain_less(const Abc& a, const Abc& b) {
    if (!(a.inner() == b.inner())) return lex_less(a.inner(), b.inner());
    for (std::size_t i = 0; i < a.inner_chain.size(); ++i)
        if (!(a.inner_chain[i] == b.inner_chain[i]))
            return lex_less(a.inner_chain[i], b.inner_chain[i]);
    return false;
}

}  // namespace

bool Abc::standard() const {
    for (int a : alpha)
        if (a != 1) return false;
    return true;
}

std::vector<Abc> enumerate_abcs(int k, const std::vector<int>& alpha) {
    std::vector<Abc> out;
    for_each_abc(k, alpha, nullptr, [&](const auto& chain, const auto& steps) {
        out.push_back(assemble(k, alpha, chain, steps));
    });
    std::sort(out.begin(), out.end(), inner_chain_less);
    return out;
}

long long abc_count(int k, const Core& inner, const std::vector<int>& alpha) {
    validate_alpha(k, alpha);
    int total = 0;
    for (int a : alpha) total += a;
    if (total != inner.degree()) return 0;
    long long n = 0;
    for_each_abc(k, alpha, &inner, [&](const auto&, const auto&) { ++n; });
    return n;
}

std::map<int, std::vector<AbcRibbon>> two_ribbons_by_row(const Abc& a) {
    std::map<int, std::vector<AbcRibbon>> rows;
    for (const AbcRibbon& r : a.ribbons)
        if (r.size == 2) rows[r.head.row].push_back(r);
    for (auto& [row, ribbons] : rows)
        std::sort(ribbons.begin(), ribbons.end(),
                  [](const AbcRibbon& x, const AbcRibbon& y) {
                      return x.head.col < y.head.col;
                  });
    return rows;
}

int spin_base(const Abc& a) {
    if (!a.standard())
        throw std::invalid_argument("spin defined for standard ABCs only");
    auto by_row = two_ribbons_by_row(a);
    int spin = 0;
    for (const auto& [row, ribbons] : by_row) {
        auto above = by_row.find(row + 1);
        bool counted = false;
        if (above == by_row.end()) {
            counted = true;
        } else {
            // some 2-ribbon in this row is not east of any 2-ribbon above
            int west_here = ribbons.front().head.col;
            int west_above = above->second.front().head.col;
            counted = west_here <= west_above;
        }
        if (counted) spin += row;
    }
    return spin;
}

int offsets(const Abc& a) {
    const int period = a.k + 1;
    int n = 0;
    for (const AbcRibbon& r : a.ribbons) {
        if (r.size < 2) continue;
        for (const AbcRibbon& lower : a.ribbons) {
            if (lower.letter != r.letter || lower.size != r.size) continue;
            if (lower.head.row >= r.head.row) continue;
            if (residue_of(lower.mark, period) == residue_of(r.mark, period)) {
                ++n;
                break;
            }
        }
    }
    return n;
}

SpinReport spin_k(const Abc& a) {
    SpinReport report;
    report.base = spin_base(a);
    report.offsets = offsets(a);
    report.total = report.base + report.offsets;
    return report;
}

TPoly spin_generating_function(int k, const Core& inner, int n) {
    if (inner.degree() != n)
        throw std::invalid_argument("inner shape degree must equal n");
    std::vector<int> alpha(n, 1);
    TPoly sum;
    for_each_abc(k, alpha, &inner, [&](const auto& chain, const auto& steps) {
        Abc abc = assemble(k, alpha, chain, steps);
        sum += TPoly::t_power(spin_k(abc).total);
    });
    return sum;
}

std::vector<Core> inner_chain_from_grid(const Abc& a) {
    const int r = static_cast<int>(a.alpha.size());
    std::vector<Core> chain{Core(a.k, Partition{})};
    for (int x = 1; x <= r; ++x) {
        // rows of lambda^(x): step x's row first, then step x-1's, ...
        std::vector<int> parts;
        for (int step = x; step >= 1; --step) {
            const auto& row = a.grid[r - step];
            int len = 0;
            while (len < static_cast<int>(row.size()) &&
                   (row[len] == 0 || row[len] > x))
                ++len;
            parts.push_back(len);
        }
        chain.emplace_back(a.k, Partition(std::move(parts)));
    }
    return chain;
}

}  // namespace kschur
