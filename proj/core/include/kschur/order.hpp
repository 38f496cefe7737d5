#pragma once

#include <optional>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// Skew shape that is rookwise connected and contains no 2x2 block. The head
// is the unique cell of maximal content (the southeasternmost cell).
struct Ribbon {
    std::vector<Cell> cells;  // sorted by (row, col)
    Cell head;

    int size() const { return static_cast<int>(cells.size()); }
};

// Strong cover lower <. upper together with the content of the head of one
// connected component of upper/lower.
struct MarkedCover {
    Core lower;
    Core upper;
    int mark;
};

// Saturated weak chain lam = chain[0] <. ... <. chain[ell] whose total skew
// is a horizontal strip with rightmost added cells moving left to right.
struct WeakStrip {
    std::vector<Core> chain;
    int ell = 0;
    // column of the rightmost cell added at each step
    std::vector<int> rightmost_cols;
};

// Saturated chain of marked strong covers with strictly increasing contents.
struct StrongStrip {
    std::vector<Core> chain;
    std::vector<int> contents;
};

// Saturated strong chain nu = chain[0] <. ... <. chain[k-ell] = (k+lam_1,lam)
// in which every cover adds the bottom rightmost cell of its upper core, and
// the total skew is a horizontal strip. contents records the content of the
// bottom rightmost cell of each upper core; it is strictly increasing.
struct BottomStrongStrip {
    Core lam;
    std::vector<Core> chain;
    int ell = 0;
    std::vector<int> contents;
};

// Weak order: add all addable corners of one fixed residue. Sorted lex.
std::vector<Core> weak_covers_up(const Core& c);
bool is_weak_cover(const Core& lo, const Core& hi);

// Strong (Bruhat) order: containment with degree going up by exactly one.
bool is_strong_cover(const Core& lo, const Core& hi);

// Connected components of a strong-cover skew, ordered by head content,
// largest first. Validates that each component is a ribbon, that the
// components are translates of each other and that their heads share a
// residue; throws std::runtime_error("not a strong-cover skew") otherwise.
std::vector<Ribbon> ribbon_components(const SkewShape& s, int k);

// All marked strong covers of c, sorted by (upper shape, mark).
std::vector<MarkedCover> marked_covers_up(const Core& c);
// The distinct upper cores of the strong covers of c, sorted lex.
std::vector<Core> strong_covers_up(const Core& c);

// The unique weak ell-strip certificate from lam to nu, if one exists.
// ell = 0 yields the trivial chain exactly when lam == nu.
std::optional<WeakStrip> weak_strip(const Core& lam, const Core& nu, int ell);

// All nu admitting a weak ell-strip over lam, sorted lex.
std::vector<Core> weak_strip_set(const Core& lam, int ell);

// All strong ell-strips from lam to gam.
std::vector<StrongStrip> strong_strips(const Core& lam, const Core& gam, int ell);

// The core (k + lam_1, lam) that bottom strong strips over lam end at.
Core bottom_strip_target(const Core& lam);

// The unique bottom strong ell-strip certificate from nu up to
// (k + lam_1, lam), if one exists.
std::optional<BottomStrongStrip> bottom_strong_strip(const Core& lam,
                                                     const Core& nu, int ell);

// All nu with a bottom strong ell-strip to (k + lam_1, lam), sorted lex.
std::vector<Core> bottom_strong_set(const Core& lam, int ell);

// All cores of degree <= max_degree, grouped by degree.
std::vector<std::vector<Core>> cores_by_degree(int k, int max_degree);
std::vector<Core> cores_of_degree(int k, int n);

struct EquivalenceCounterexample {
    Core lam;
    int ell;
    std::vector<Core> weak_set;
    std::vector<Core> bottom_set;
};

struct EquivalenceReport {
    int k = 0;
    int max_degree = 0;
    long long instances = 0;
    std::vector<EquivalenceCounterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

// Compares weak_strip_set with bottom_strong_set for every core of degree
// <= max_degree and every 0 < ell <= k.
EquivalenceReport check_weak_strong_equivalence(int k, int max_degree,
                                                int jobs = 1);

}  // namespace kschur
