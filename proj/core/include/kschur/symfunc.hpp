#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/partition.hpp"
#include "kschur/tpoly.hpp"

namespace kschur {

// Descending lexicographic order on partitions. Within a fixed size it
// refines dominance, most dominant first.
struct PartitionLexGreater {
    bool operator()(const Partition& a, const Partition& b) const {
        return lex_less(b, a);
    }
};

// Homogeneous symmetric function of one degree, written in the monomial
// basis with TPoly coefficients. When k_truncated is set the function lives
// in the quotient by the ideal spanned by m_mu with mu_1 > k, and no such
// term is ever stored.
class SymFunc {
  public:
    using TermMap = std::map<Partition, TPoly, PartitionLexGreater>;

    explicit SymFunc(int degree, std::optional<int> k_truncated = std::nullopt);
    static SymFunc one();

    int degree() const { return degree_; }
    std::optional<int> k_truncated() const { return k_truncated_; }
    const TermMap& terms() const { return terms_; }
    TPoly coeff(const Partition& mu) const;
    void add_term(const Partition& mu, const TPoly& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc scaled(const TPoly& c) const;
    SymFunc truncated(int k) const;

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

  private:
    int degree_;
    std::optional<int> k_truncated_;
    TermMap terms_;
};

// Coefficients evaluated at t = 1.
SymFunc evaluated_at_one(const SymFunc& f);

// Multiplication by the complete homogeneous h_r; the coefficient of m_mu in
// h_r * m_lam counts the distinct ways of scattering lam's parts under mu.
// Truncation of the input is preserved (multiply, then project).
SymFunc mul_h(const SymFunc& f, int r);

// h_mu in the monomial basis via iterated mul_h.
SymFunc h_expand(const Partition& mu);

// s_lam in the monomial basis; coefficients are Kostka numbers counted by
// column-strict tableaux.
SymFunc schur_expand(const Partition& lam);

// Dual k-Schur function of a core in the truncated monomial basis. The
// coefficient of m_mu counts k-tableaux of that shape and k-weight mu, or
// ABCs of that inner shape and k-weight mu when via_abc is set; the two
// agree.
SymFunc dual_kschur_expand(int k, const Core& lam, bool via_abc = false);

// h-to-k-Schur transition data at one degree. index holds the cores sorted
// by descending lex on their bounded images (most dominant first); bounded
// holds those images, which label the h's. entries[i][j] counts ABCs of
// inner shape index[i] and k-weight bounded[j]; the matrix is upper
// unitriangular in this order (checked, not assumed).
struct TransitionMatrix {
    int k = 0;
    int degree = 0;
    std::vector<Core> index;
    std::vector<Partition> bounded;
    std::vector<std::vector<TPoly>> entries;
};

struct KSchurBasis {
    TransitionMatrix matrix;
    // s^(k)_{index[i]} = sum_j in_h[i][j] * h_{bounded[j]}
    std::vector<std::vector<std::int64_t>> in_h;
    // the same functions pushed down to the monomial basis (not truncated)
    std::vector<SymFunc> in_m;
};

KSchurBasis kschur_expand(int k, int degree);

// The weak Pieri product h_ell * s^(k)_lam as a multiplicity-one list of
// cores. Computed from weak strips and from bottom strong strips; equality
// of the two constructions is asserted.
std::vector<Core> weak_pieri_product(int k, const Core& lam, int ell);

struct DualPieriResult {
    bool ok = false;
    SymFunc lhs;
    SymFunc rhs;
};

// Coefficient-wise comparison of h_ell * dual_kschur(lam) with
// sum_gamma (#strong ell-strips lam -> gamma) * dual_kschur(gamma), both in
// the truncated monomial basis.
DualPieriResult dual_strong_pieri_check(int k, const Core& lam, int ell);

struct DualPieriFailure {
    Core lam;
    int ell;
};

struct DualPieriReport {
    int k = 0;
    int max_degree = 0;
    long long instances = 0;
    std::vector<DualPieriFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Runs dual_strong_pieri_check over every core lam and 0 < ell <= k with
// degree(lam) + ell <= max_degree.
DualPieriReport dual_strong_pieri_sweep(int k, int max_degree, int jobs = 1);

// Hall-Littlewood function H_mu[X; 0, t] in the monomial basis, cocharge
// convention: sum over lam of kostka_foulkes(lam, mu) * s_lam.
SymFunc hall_littlewood_expand(const Partition& mu);

using CoreCoeffs = std::map<Core, TPoly, CoreLexLess>;

// Expresses H_mu[X; 0, t] over the degree-|mu| k-Schur basis by exact linear
// algebra (integer matrix, polynomial right-hand side). Throws
// std::runtime_error("HL not in k-Schur span") when no polynomial solution
// exists.
CoreCoeffs hl_in_kschur(int k, const Partition& mu);
// The same system with all coefficients evaluated at t = 1.
std::map<Core, std::int64_t, CoreLexLess> hl_in_kschur_at_one(int k,
                                                              const Partition& mu);

struct ConjectureRow {
    Core core;
    TPoly spin_gf;
    std::optional<TPoly> hl_coeff;  // present when the polynomial system solves
    std::int64_t hl_at_one = 0;
    bool t_one_ok = false;
    std::optional<bool> match_identity;
    std::optional<bool> match_reversed;
};

struct ConjectureReport {
    int k = 0;
    int n = 0;
    bool hl_poly_solvable = false;
    int max_spin = 0;
    std::vector<ConjectureRow> rows;
    bool t_one_all_ok = false;
};

// Compares hl_in_kschur(k, 1^n) per core against the spin generating
// function, under the identity normalization and under reversal by the
// maximal spin; the t = 1 specialization is checked exactly either way.
ConjectureReport conjecture_explorer(int k, int n);

}  // namespace kschur
