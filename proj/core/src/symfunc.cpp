#include "kschur/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "kschur/abc.hpp"
#include "kschur/enumerate.hpp"
#include "kschur/order.hpp"
#include "kschur/parallel.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

namespace {

// Number of distinct vectors alpha over the positions of mu whose nonzero
// entries are exactly the multiset of lam's parts, with alpha_i <= mu_i.
std::int64_t scatter_count(const Partition& lam, const Partition& mu) {
    std::map<int, int> remaining;
    for (int p : lam.parts()) ++remaining[p];
    std::int64_t count = 0;
    int placed_target = lam.rows();
    auto dfs = [&](auto&& self, int pos, int placed) -> void {
        if (pos > mu.rows()) {
            if (placed == placed_target) ++count;
            return;
        }
        self(self, pos + 1, placed);  // alpha_pos = 0
        for (auto& [value, cnt] : remaining) {
            if (cnt == 0 || value > mu.part(pos)) continue;
            --cnt;
            self(self, pos + 1, placed + 1);
            ++cnt;
        }
    };
    dfs(dfs, 1, 0);
    return count;
}

std::vector<std::int64_t> constant_row(const SymFunc& f,
                                       const std::vector<Partition>& mus) {
    std::vector<std::int64_t> row;
    row.reserve(mus.size());
    for (const Partition& mu : mus) {
        TPoly c = f.coeff(mu);
        if (c.degree() > 0)
            throw std::logic_error("expected a constant coefficient");
        row.push_back(c.at(0));
    }
    return row;
}

// Solves sum_j x_j * columns[j] == rhs exactly over ZZ[t] with an integer
// coefficient matrix, by fraction-free (Bareiss) elimination. Throws
// std::runtime_error(error) when there is no polynomial solution.
std::vector<TPoly> solve_integer_system(std::vector<std::vector<std::int64_t>> a,
                                        std::vector<TPoly> b, int cols,
                                        const std::string& error) {
    const int rows = static_cast<int>(a.size());
    if (rows < cols) throw std::logic_error("underdetermined system");
    std::int64_t prev = 1;
    for (int c = 0; c < cols; ++c) {
        int pivot = -1;
        for (int r = c; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("basis columns are dependent");
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (int r = c + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j)
                a[r][j] = (checked_mul(a[r][j], a[c][c]) -
                           checked_mul(a[r][c], a[c][j])) /
                          prev;
            b[r] = (b[r].times(a[c][c]) - b[c].times(a[r][c])).divided_exact(prev);
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    for (int r = cols; r < rows; ++r)
        if (!b[r].is_zero()) throw std::runtime_error(error);
    std::vector<TPoly> x(cols);
    for (int c = cols - 1; c >= 0; --c) {
        TPoly acc = b[c];
        for (int j = c + 1; j < cols; ++j) acc -= x[j].times(a[c][j]);
        try {
            x[c] = acc.divided_exact(a[c][c]);
        } catch (const std::runtime_error&) {
            throw std::runtime_error(error);
        }
    }
    return x;
}

CoreCoeffs solve_over_kschur(const KSchurBasis& basis, const SymFunc& target,
                             const std::string& error) {
    const int n = basis.matrix.degree;
    auto mus = partitions_of(n);
    std::vector<std::vector<std::int64_t>> a(
        mus.size(), std::vector<std::int64_t>(basis.matrix.index.size(), 0));
    std::vector<TPoly> b(mus.size());
    for (std::size_t r = 0; r < mus.size(); ++r) {
        for (std::size_t c = 0; c < basis.in_m.size(); ++c) {
            TPoly v = basis.in_m[c].coeff(mus[r]);
            if (v.degree() > 0)
                throw std::logic_error("k-Schur m-expansion is not t-free");
            a[r][c] = v.at(0);
        }
        b[r] = target.coeff(mus[r]);
    }
    auto x = solve_integer_system(std::move(a), std::move(b),
                                  static_cast<int>(basis.matrix.index.size()), error);
    CoreCoeffs out;
    for (std::size_t c = 0; c < basis.matrix.index.size(); ++c)
        out.emplace(basis.matrix.index[c], x[c]);
    return out;
}

}  // namespace

SymFunc::SymFunc(int degree, std::optional<int> k_truncated)
    : degree_(degree), k_truncated_(k_truncated) {
    if (degree_ < 0) throw std::invalid_argument("degree must be nonnegative");
}

SymFunc SymFunc::one() {
    SymFunc f(0);
    f.add_term(Partition{}, TPoly(1));
    return f;
}

TPoly SymFunc::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? TPoly{} : it->second;
}

void SymFunc::add_term(const Partition& mu, const TPoly& c) {
    if (mu.cell_count() != degree_)
        throw std::invalid_argument("term degree mismatch");
    if (k_truncated_ && mu.part(1) > *k_truncated_) return;
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.degree_ != degree_)
        throw std::invalid_argument("cannot add functions of different degree");
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
}

SymFunc SymFunc::scaled(const TPoly& c) const {
    SymFunc out(degree_, k_truncated_);
    for (const auto& [mu, v] : terms_) out.add_term(mu, v * c);
    return out;
}

SymFunc SymFunc::truncated(int k) const {
    SymFunc out(degree_, k);
    for (const auto& [mu, v] : terms_) out.add_term(mu, v);
    return out;
}

SymFunc evaluated_at_one(const SymFunc& f) {
    SymFunc out(f.degree(), f.k_truncated());
    for (const auto& [mu, c] : f.terms()) out.add_term(mu, TPoly(c.eval_at_one()));
    return out;
}

SymFunc mul_h(const SymFunc& f, int r) {
    if (r < 1) throw std::invalid_argument("mul_h: r must be positive");
    SymFunc out(f.degree() + r, f.k_truncated());
    for (const Partition& mu : partitions_of(f.degree() + r)) {
        if (f.k_truncated() && mu.part(1) > *f.k_truncated()) continue;
        TPoly acc;
        for (const auto& [lam, c] : f.terms()) {
            std::int64_t ways = scatter_count(lam, mu);
            if (ways) acc += c.times(ways);
        }
        out.add_term(mu, acc);
    }
    return out;
}

SymFunc h_expand(const Partition& mu) {
    SymFunc f = SymFunc::one();
    for (int p : mu.parts()) f = mul_h(f, p);
    return f;
}

SymFunc schur_expand(const Partition& lam) {
    SymFunc f(lam.cell_count());
    for (const Partition& mu : partitions_of(lam.cell_count())) {
        auto n = enumerate_cst(lam, mu.parts()).size();
        if (n) f.add_term(mu, TPoly(static_cast<std::int64_t>(n)));
    }
    return f;
}

SymFunc dual_kschur_expand(int k, const Core& lam, bool via_abc) {
    SymFunc f(lam.degree(), k);
    if (lam.degree() == 0) {
        f.add_term(Partition{}, TPoly(1));
        return f;
    }
    for (const Partition& mu : partitions_of(lam.degree(), k)) {
        std::int64_t n = via_abc ? abc_count(k, lam, mu.parts())
                                 : count_k_tableaux(lam, mu.parts());
        if (n) f.add_term(mu, TPoly(n));
    }
    return f;
}

KSchurBasis kschur_expand(int k, int degree) {
    KSchurBasis basis;
    basis.matrix.k = k;
    basis.matrix.degree = degree;
    basis.matrix.bounded = partitions_of(degree, k);

    basis.matrix.index.reserve(basis.matrix.bounded.size());
    for (const Partition& mu : basis.matrix.bounded)
        basis.matrix.index.push_back(Core::from_bounded(k, mu));

    const int n = static_cast<int>(basis.matrix.index.size());
    basis.matrix.entries.assign(n, std::vector<TPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis.matrix.entries[i][j] = TPoly(abc_count(
                k, basis.matrix.index[i], basis.matrix.bounded[j].parts()));

    for (int i = 0; i < n; ++i) {
        if (!(basis.matrix.entries[i][i] == TPoly(1)))
            throw std::runtime_error("transition matrix is not unitriangular");
        for (int j = 0; j < i; ++j)
            if (!basis.matrix.entries[i][j].is_zero())
                throw std::runtime_error("transition matrix is not unitriangular");
    }

    // h_{bounded[j]} = sum_i K[i][j] s_{index[i]}, so the s-to-h coefficients
    // are (K^T)^{-1}, computed by forward substitution (K^T is lower
    // unitriangular in this order).
    basis.in_h.assign(n, std::vector<std::int64_t>(n, 0));
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row) {
            std::int64_t acc = (row == col) ? 1 : 0;
            for (int l = 0; l < row; ++l)
                acc = checked_add(
                    acc, -checked_mul(basis.matrix.entries[l][row].at(0),
                                      basis.in_h[l][col]));
            basis.in_h[row][col] = acc;
        }
    }

    std::vector<SymFunc> h_in_m;
    h_in_m.reserve(n);
    for (const Partition& mu : basis.matrix.bounded) h_in_m.push_back(h_expand(mu));

    basis.in_m.reserve(n);
    for (int i = 0; i < n; ++i) {
        SymFunc f(degree);
        for (int j = 0; j < n; ++j)
            if (basis.in_h[i][j] != 0)
                f += h_in_m[j].scaled(TPoly(basis.in_h[i][j]));
        basis.in_m.push_back(std::move(f));
    }
    return basis;
}

std::vector<Core> weak_pieri_product(int k, const Core& lam, int ell) {
    if (lam.k() != k) throw std::invalid_argument("weak_pieri_product: mismatched k");
    auto weak = weak_strip_set(lam, ell);
    auto bottom = bottom_strong_set(lam, ell);
    if (!(weak == bottom))
        throw std::logic_error("weak and bottom strong strip sets disagree");
    if (weak.empty()) throw std::logic_error("weak Pieri product is empty");
    return weak;
}

DualPieriResult dual_strong_pieri_check(int k, const Core& lam, int ell) {
    DualPieriResult result{false, SymFunc(0), SymFunc(0)};
    result.lhs = mul_h(dual_kschur_expand(k, lam), ell);
    SymFunc rhs(lam.degree() + ell, k);
    for (const Core& gam : cores_of_degree(k, lam.degree() + ell)) {
        if (!gam.shape().contains(lam.shape())) continue;
        auto strips = strong_strips(lam, gam, ell);
        if (strips.empty()) continue;
        rhs += dual_kschur_expand(k, gam)
                   .scaled(TPoly(static_cast<std::int64_t>(strips.size())));
    }
    result.rhs = std::move(rhs);
    result.ok = result.lhs == result.rhs;
    return result;
}

DualPieriReport dual_strong_pieri_sweep(int k, int max_degree, int jobs) {
    DualPieriReport report;
    report.k = k;
    report.max_degree = max_degree;

    std::vector<std::pair<Core, int>> instances;
    for (const auto& level : cores_by_degree(k, max_degree))
        for (const Core& lam : level)
            for (int ell = 1; ell <= k && lam.degree() + ell <= max_degree; ++ell)
                instances.emplace_back(lam, ell);
    report.instances = static_cast<long long>(instances.size());

    std::vector<char> failed(instances.size(), 0);
    parallel_for(static_cast<long long>(instances.size()), jobs, [&](long long i) {
        const auto& [lam, ell] = instances[static_cast<std::size_t>(i)];
        if (!dual_strong_pieri_check(k, lam, ell).ok)
            failed[static_cast<std::size_t>(i)] = 1;
    });
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (failed[i])
            report.failures.push_back({instances[i].first, instances[i].second});
    return report;
}

SymFunc hall_littlewood_expand(const Partition& mu) {
    SymFunc f(mu.cell_count());
    for (const Partition& lam : partitions_of(mu.cell_count())) {
        TPoly kf = kostka_foulkes(lam, mu);
        if (!kf.is_zero()) f += schur_expand(lam).scaled(kf);
    }
    return f;
}

CoreCoeffs hl_in_kschur(int k, const Partition& mu) {
    KSchurBasis basis = kschur_expand(k, mu.cell_count());
    return solve_over_kschur(basis, hall_littlewood_expand(mu),
                             "HL not in k-Schur span");
}

std::map<Core, std::int64_t, CoreLexLess> hl_in_kschur_at_one(int k,
                                                              const Partition& mu) {
    KSchurBasis basis = kschur_expand(k, mu.cell_count());
    CoreCoeffs solved = solve_over_kschur(
        basis, evaluated_at_one(hall_littlewood_expand(mu)), "HL not in k-Schur span");
    std::map<Core, std::int64_t, CoreLexLess> out;
    for (const auto& [core, poly] : solved) {
        if (poly.degree() > 0)
            throw std::logic_error("t = 1 solve returned a nonconstant");
        out.emplace(core, poly.at(0));
    }
    return out;
}

ConjectureReport conjecture_explorer(int k, int n) {
    ConjectureReport report;
    report.k = k;
    report.n = n;

    KSchurBasis basis = kschur_expand(k, n);
    Partition ones(std::vector<int>(n, 1));
    SymFunc hl = hall_littlewood_expand(ones);

    std::optional<CoreCoeffs> poly;
    try {
        poly = solve_over_kschur(basis, hl, "HL not in k-Schur span");
    } catch (const std::runtime_error&) {
        poly = std::nullopt;
    }
    report.hl_poly_solvable = poly.has_value();

    CoreCoeffs at_one = solve_over_kschur(basis, evaluated_at_one(hl),
                                          "HL not in k-Schur span");

    std::vector<TPoly> spins;
    spins.reserve(basis.matrix.index.size());
    int max_spin = 0;
    for (const Core& lam : basis.matrix.index) {
        TPoly gf = spin_generating_function(k, lam, n);
        max_spin = std::max(max_spin, std::max(gf.degree(), 0));
        spins.push_back(std::move(gf));
    }
    report.max_spin = max_spin;

    report.t_one_all_ok = true;
    for (std::size_t i = 0; i < basis.matrix.index.size(); ++i) {
        ConjectureRow row{basis.matrix.index[i], spins[i], std::nullopt, 0,
                          false, std::nullopt, std::nullopt};
        row.hl_at_one = at_one.at(row.core).at(0);
        row.t_one_ok = row.spin_gf.eval_at_one() == row.hl_at_one;
        if (poly) {
            row.hl_coeff = poly->at(row.core);
            row.match_identity = (*row.hl_coeff == row.spin_gf);
            row.match_reversed = (*row.hl_coeff == row.spin_gf.reversed(max_spin));
        }
        if (!row.t_one_ok) report.t_one_all_ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace kschur
