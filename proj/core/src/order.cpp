#include "kschur/order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "kschur/parallel.hpp"

namespace kschur {

namespace {

// ---------------------------------------------------------------------------
// Bead (abacus) model. The bead set of a partition is {part(i) - i : i >= 1};
// rows past the last contribute -(rows+1), -(rows+2), .... A partition is a
// (k+1)-core exactly when the bead set is closed under subtracting k+1, so a
// core is determined by the top bead of each residue class mod k+1. A strong
// cover moves the top j beads of one class onto the next j free slots of
// another class; each moved bead is one ribbon of the cover, with head
// content equal to the bead's landing value.
// ---------------------------------------------------------------------------

long long beta_number(const Partition& p, int row) {
    return static_cast<long long>(p.part(row)) - row;
}

std::vector<long long> class_tops(const Partition& p, int period) {
    // virtual tail beads: every value <= -(rows+1)
    int rows = p.rows();
    std::vector<long long> tops(period);
    for (int r = 0; r < period; ++r) {
        long long v = -(rows + 1);
        long long rem = ((v % period) + period) % period;
        long long delta = (static_cast<long long>(r) - rem + period) % period;
        tops[r] = v + delta - (delta > 0 ? period : 0);
        // tops[r] is now the largest value = r mod period that is <= -(rows+1)
    }
    for (int i = 1; i <= rows; ++i) {
        long long b = beta_number(p, i);
        int r = static_cast<int>(((b % period) + period) % period);
        tops[r] = std::max(tops[r], b);
    }
    return tops;
}

Partition move_bead(const Partition& p, long long from, long long to) {
    int window = std::max<long long>(
        {static_cast<long long>(p.rows()), -from, -to, 1}) + 2;
    std::vector<long long> betas;
    betas.reserve(window);
    for (int i = 1; i <= window; ++i) betas.push_back(beta_number(p, i));
    auto it = std::find(betas.begin(), betas.end(), from);
    if (it == betas.end()) throw std::logic_error("move_bead: source is not a bead");
    if (std::find(betas.begin(), betas.end(), to) != betas.end())
        throw std::logic_error("move_bead: target is already a bead");
    *it = to;
    std::sort(betas.rbegin(), betas.rend());
    std::vector<int> parts;
    for (int i = 1; i <= window; ++i) {
        long long part = betas[i - 1] + i;
        if (part <= 0) break;
        parts.push_back(static_cast<int>(part));
    }
    return Partition(std::move(parts));
}

std::vector<std::vector<Cell>> connected_components(const std::vector<Cell>& cells) {
    std::set<Cell> todo(cells.begin(), cells.end());
    std::vector<std::vector<Cell>> comps;
    while (!todo.empty()) {
        std::vector<Cell> comp;
        std::vector<Cell> stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                           Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
                auto found = todo.find(n);
                if (found != todo.end()) {
                    todo.erase(found);
                    stack.push_back(n);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Ribbon make_ribbon(std::vector<Cell> cells) {
    std::set<Cell> in(cells.begin(), cells.end());
    std::set<int> contents;
    Cell head = cells.front();
    for (const Cell& c : cells) {
        if (in.count({c.row + 1, c.col}) && in.count({c.row, c.col + 1}) &&
            in.count({c.row + 1, c.col + 1}))
            throw std::runtime_error("not a strong-cover skew");
        if (!contents.insert(c.content()).second)
            throw std::runtime_error("not a strong-cover skew");
        if (c.content() > head.content()) head = c;
    }
    // a ribbon covers an interval of contents
    if (*contents.rbegin() - *contents.begin() + 1 != static_cast<int>(cells.size()))
        throw std::runtime_error("not a strong-cover skew");
    return Ribbon{std::move(cells), head};
}

std::vector<Cell> offsets_from_head(const Ribbon& r) {
    std::vector<Cell> out;
    out.reserve(r.cells.size());
    for (const Cell& c : r.cells)
        out.push_back({c.row - r.head.row, c.col - r.head.col});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Core> weak_covers_up(const Core& c) {
    std::map<int, std::vector<Cell>> by_residue;
    for (const Cell& corner : c.shape().addable_corners())
        by_residue[c.residue(corner)].push_back(corner);
    std::vector<Core> out;
    for (const auto& [res, corners] : by_residue)
        out.emplace_back(c.k(), c.shape().with_cells(corners));
    std::sort(out.begin(), out.end(),
              [](const Core& a, const Core& b) { return lex_less(a, b); });
    return out;
}

bool is_weak_cover(const Core& lo, const Core& hi) {
    if (lo.k() != hi.k()) return false;
    for (const Core& c : weak_covers_up(lo))
        if (c == hi) return true;
    return false;
}

bool is_strong_cover(const Core& lo, const Core& hi) {
    return lo.k() == hi.k() && hi.shape().contains(lo.shape()) &&
           hi.degree() == lo.degree() + 1;
}

std::vector<Ribbon> ribbon_components(const SkewShape& s, int k) {
    std::vector<Ribbon> ribbons;
    for (auto& comp : connected_components(s.cells()))
        ribbons.push_back(make_ribbon(std::move(comp)));
    if (ribbons.empty()) throw std::runtime_error("not a strong-cover skew");
    std::sort(ribbons.begin(), ribbons.end(), [](const Ribbon& a, const Ribbon& b) {
        return a.head.content() > b.head.content();
    });
    const Ribbon& first = ribbons.front();
    auto shape0 = offsets_from_head(first);
    int res0 = residue_of(first.head.content(), k + 1);
    for (const Ribbon& r : ribbons) {
        if (offsets_from_head(r) != shape0 ||
            residue_of(r.head.content(), k + 1) != res0)
            throw std::runtime_error("not a strong-cover skew");
    }
    return ribbons;
}

std::vector<MarkedCover> marked_covers_up(const Core& c) {
    const int period = c.period();
    const int deg = c.degree();
    const auto tops = class_tops(c.shape(), period);

    std::vector<MarkedCover> out;
    for (int to = 0; to < period; ++to) {
        for (int j = 1; tops[to] + static_cast<long long>(j) * period <= deg; ++j) {
            long long land_top = tops[to] + static_cast<long long>(j) * period;
            for (int from = 0; from < period; ++from) {
                if (from == to) continue;
                long long ribbon = land_top - tops[from];
                if (ribbon < 1) continue;
                Partition q = c.shape();
                for (int i = 0; i < j; ++i)
                    q = move_bead(q, tops[from] - static_cast<long long>(i) * period,
                                  land_top - static_cast<long long>(i) * period);
                if (!Core::is_core(q, c.k()))
                    throw std::logic_error("bead move left the core family");
                Core upper(c.k(), std::move(q));
                if (upper.degree() != deg + 1) continue;
                // cross-check the predicted ribbon tiling against the skew
                auto comps = ribbon_components(SkewShape(upper.shape(), c.shape()), c.k());
                if (static_cast<int>(comps.size()) != j ||
                    comps.front().size() != ribbon)
                    throw std::logic_error("cover skew does not match its bead move");
                for (int i = 0; i < j; ++i) {
                    long long head = land_top - static_cast<long long>(i) * period;
                    if (comps[i].head.content() != head)
                        throw std::logic_error("cover skew does not match its bead move");
                    out.push_back({c, upper, static_cast<int>(head)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const MarkedCover& a, const MarkedCover& b) {
        if (!(a.upper == b.upper)) return lex_less(a.upper, b.upper);
        return a.mark < b.mark;
    });
    return out;
}

std::vector<Core> strong_covers_up(const Core& c) {
    std::vector<Core> out;
    for (const MarkedCover& mc : marked_covers_up(c))
        if (out.empty() || !(out.back() == mc.upper)) out.push_back(mc.upper);
    return out;
}

std::optional<WeakStrip> weak_strip(const Core& lam, const Core& nu, int ell) {
    if (lam.k() != nu.k()) throw std::invalid_argument("weak_strip: mismatched k");
    if (ell < 0 || ell > lam.k())
        throw std::invalid_argument("weak_strip: ell out of range");
    if (ell == 0) {
        if (lam == nu) return WeakStrip{{lam}, 0, {}};
        return std::nullopt;
    }
    if (!nu.shape().contains(lam.shape())) return std::nullopt;
    if (nu.degree() != lam.degree() + ell) return std::nullopt;
    if (!SkewShape(nu.shape(), lam.shape()).is_horizontal_strip())
        return std::nullopt;

    std::vector<WeakStrip> found;
    WeakStrip acc{{lam}, ell, {}};
    auto dfs = [&](auto&& self, const Core& cur, int depth, int last_col) -> void {
        if (depth == ell) {
            if (cur == nu) found.push_back(acc);
            return;
        }
        for (const Core& up : weak_covers_up(cur)) {
            if (!nu.shape().contains(up.shape())) continue;
            int rightmost = 0;
            for (const Cell& cell : SkewShape(up.shape(), cur.shape()).cells())
                rightmost = std::max(rightmost, cell.col);
            if (rightmost <= last_col) continue;
            acc.chain.push_back(up);
            acc.rightmost_cols.push_back(rightmost);
            self(self, up, depth + 1, rightmost);
            acc.chain.pop_back();
            acc.rightmost_cols.pop_back();
        }
    };
    dfs(dfs, lam, 0, 0);
    if (found.size() > 1)
        throw std::logic_error("weak strip certificate is not unique");
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<Core> weak_strip_set(const Core& lam, int ell) {
    if (ell < 1 || ell > lam.k())
        throw std::invalid_argument("weak_strip_set: ell out of range");
    std::vector<Core> out;
    std::set<int> used_cols;
    auto dfs = [&](auto&& self, const Core& cur, int depth, int last_col) -> void {
        if (depth == ell) {
            out.push_back(cur);
            return;
        }
        for (const Core& up : weak_covers_up(cur)) {
            auto cells = SkewShape(up.shape(), cur.shape()).cells();
            bool fresh_cols = true;
            int rightmost = 0;
            for (const Cell& cell : cells) {
                if (used_cols.count(cell.col)) fresh_cols = false;
                rightmost = std::max(rightmost, cell.col);
            }
            if (!fresh_cols || rightmost <= last_col) continue;
            for (const Cell& cell : cells) used_cols.insert(cell.col);
            self(self, up, depth + 1, rightmost);
            for (const Cell& cell : cells) used_cols.erase(cell.col);
        }
    };
    dfs(dfs, lam, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const Core& a, const Core& b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<StrongStrip> strong_strips(const Core& lam, const Core& gam, int ell) {
    if (lam.k() != gam.k()) throw std::invalid_argument("strong_strips: mismatched k");
    if (ell < 0 || ell > lam.k())
        throw std::invalid_argument("strong_strips: ell out of range");
    std::vector<StrongStrip> out;
    if (ell == 0) {
        if (lam == gam) out.push_back({{lam}, {}});
        return out;
    }
    if (!gam.shape().contains(lam.shape())) return out;
    if (gam.degree() != lam.degree() + ell) return out;

    StrongStrip acc{{lam}, {}};
    auto dfs = [&](auto&& self, const Core& cur, int depth, long long last) -> void {
        if (depth == ell) {
            if (cur == gam) out.push_back(acc);
            return;
        }
        for (const MarkedCover& mc : marked_covers_up(cur)) {
            if (mc.mark <= last) continue;
            if (!gam.shape().contains(mc.upper.shape())) continue;
            acc.chain.push_back(mc.upper);
            acc.contents.push_back(mc.mark);
            self(self, mc.upper, depth + 1, mc.mark);
            acc.chain.pop_back();
            acc.contents.pop_back();
        }
    };
    dfs(dfs, lam, 0, std::numeric_limits<long long>::min());
    std::sort(out.begin(), out.end(), [](const StrongStrip& a, const StrongStrip& b) {
        if (a.contents != b.contents) return a.contents < b.contents;
        for (std::size_t i = 0; i < a.chain.size(); ++i)
            if (!(a.chain[i] == b.chain[i])) return lex_less(a.chain[i], b.chain[i]);
        return false;
    });
    return out;
}

Core bottom_strip_target(const Core& lam) {
    std::vector<int> parts;
    parts.push_back(lam.k() + lam.shape().part(1));
    for (int p : lam.shape().parts()) parts.push_back(p);
    Core target(lam.k(), Partition(std::move(parts)));
    if (target.degree() != lam.degree() + lam.k())
        throw std::logic_error("bottom strip target has unexpected degree");
    return target;
}

std::optional<BottomStrongStrip> bottom_strong_strip(const Core& lam,
                                                     const Core& nu, int ell) {
    if (lam.k() != nu.k())
        throw std::invalid_argument("bottom_strong_strip: mismatched k");
    if (ell < 1 || ell > lam.k())
        throw std::invalid_argument("bottom_strong_strip: ell out of range");
    Core target = bottom_strip_target(lam);
    int len = lam.k() - ell;
    if (!target.shape().contains(nu.shape())) return std::nullopt;
    if (nu.degree() != target.degree() - len) return std::nullopt;
    if (!SkewShape(target.shape(), nu.shape()).is_horizontal_strip())
        return std::nullopt;

    std::vector<std::vector<Core>> found;
    std::vector<Core> acc{nu};
    auto dfs = [&](auto&& self, const Core& cur, int depth) -> void {
        if (depth == len) {
            if (cur == target) found.push_back(acc);
            return;
        }
        for (const Core& up : strong_covers_up(cur)) {
            if (!target.shape().contains(up.shape())) continue;
            if (up.shape().part(1) <= cur.shape().part(1)) continue;
            acc.push_back(up);
            self(self, up, depth + 1);
            acc.pop_back();
        }
    };
    dfs(dfs, nu, 0);
    if (found.size() > 1)
        throw std::logic_error("bottom strong strip certificate is not unique");
    if (found.empty()) return std::nullopt;

    BottomStrongStrip strip{lam, found.front(), ell, {}};
    for (std::size_t i = 1; i < strip.chain.size(); ++i)
        strip.contents.push_back(strip.chain[i].shape().part(1) - 1);
    return strip;
}

std::vector<Core> bottom_strong_set(const Core& lam, int ell) {
    if (ell < 1 || ell > lam.k())
        throw std::invalid_argument("bottom_strong_set: ell out of range");
    Core target = bottom_strip_target(lam);
    const Partition& t = target.shape();

    std::vector<Core> out;
    std::vector<int> parts(t.rows(), 0);
    auto dfs = [&](auto&& self, int row) -> void {
        if (row > t.rows()) {
            Partition nu_shape(std::vector<int>(parts.begin(), parts.end()));
            if (!Core::is_core(nu_shape, lam.k())) return;
            Core nu(lam.k(), std::move(nu_shape));
            if (bottom_strong_strip(lam, nu, ell)) out.push_back(nu);
            return;
        }
        // horizontal strip complement: t_{row+1} <= nu_row <= t_row
        for (int v = t.part(row + 1); v <= t.part(row); ++v) {
            parts[row - 1] = v;
            self(self, row + 1);
        }
    };
    dfs(dfs, 1);
    std::sort(out.begin(), out.end(),
              [](const Core& a, const Core& b) { return lex_less(a, b); });
    return out;
}

std::vector<std::vector<Core>> cores_by_degree(int k, int max_degree) {
    std::vector<std::vector<Core>> levels(max_degree + 1);
    levels[0].push_back(Core(k, Partition{}));
    for (int d = 0; d < max_degree; ++d) {
        std::vector<Core> next;
        for (const Core& c : levels[d]) {
            for (const Core& up : weak_covers_up(c)) {
                if (up.degree() != d + 1)
                    throw std::logic_error("weak cover did not raise degree by one");
                next.push_back(up);
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const Core& a, const Core& b) { return lex_less(a, b); });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Core& a, const Core& b) { return a == b; }),
                   next.end());
        levels[d + 1] = std::move(next);
    }
    return levels;
}

std::vector<Core> cores_of_degree(int k, int n) {
    return cores_by_degree(k, n).at(n);
}

EquivalenceReport check_weak_strong_equivalence(int k, int max_degree, int jobs) {
    EquivalenceReport report;
    report.k = k;
    report.max_degree = max_degree;

    std::vector<std::pair<Core, int>> instances;
    for (const auto& level : cores_by_degree(k, max_degree))
        for (const Core& lam : level)
            for (int ell = 1; ell <= k; ++ell) instances.emplace_back(lam, ell);
    report.instances = static_cast<long long>(instances.size());

    std::vector<std::optional<EquivalenceCounterexample>> results(instances.size());
    parallel_for(static_cast<long long>(instances.size()), jobs, [&](long long i) {
        const auto& [lam, ell] = instances[static_cast<std::size_t>(i)];
        auto weak = weak_strip_set(lam, ell);
        auto bottom = bottom_strong_set(lam, ell);
        if (!(weak == bottom))
            results[static_cast<std::size_t>(i)] =
                EquivalenceCounterexample{lam, ell, weak, bottom};
    });
    for (auto& r : results)
        if (r) report.counterexamples.push_back(std::move(*r));
    return report;
}

}  // namespace kschur
