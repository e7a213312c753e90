#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/plane.hpp"

namespace lrc {

enum class BlockOrigin { EvenConstruction, OddConstruction, Search, External };

/// A 4-arc with a fixed point order; the order feeds parity-check synthesis.
/// Constructed blocks keep their anchor cell u = (i, j).
struct ArcBlock {
    std::array<ProjPoint, 4> points;
    std::optional<std::pair<Fe, Fe>> anchor;
    BlockOrigin origin = BlockOrigin::External;
};

/// m >= 2 pairwise-disjoint 4-arcs whose pairwise unions are 8-arcs.
struct FourLocalArc {
    FieldPtr field;
    std::vector<ArcBlock> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int size() const { return 4 * block_count(); }
};

struct LocalArcReport {
    bool blocks_are_arcs = true;
    bool blocks_disjoint = true;
    bool unions_are_arcs = true;
    std::string witness;  // first violation, empty when valid

    bool pass() const { return blocks_are_arcs && blocks_disjoint && unions_are_arcs; }
};

/// Even-q construction (q = 2^r, r >= 3): one block per cell (i, j) of the
/// Cayley transversal, with points
///   (i, j), (i, j+w^{r-1}), (i+w^{r-1}, j), (i+w^{r-1}, j+w^{r-1})
/// embedded in that order. Yields q/2 blocks, total size 2q.
FourLocalArc build_even(const FieldPtr& f);

/// Odd-q construction (q >= 7): cells (a, b) of the cyclic transversal of
/// order (q-1)/2 map to (i, j) = (w^a, w^b); each block is
///   (i, j), (i, -j), (-i, j), (-i, -j)
/// embedded in that order. Yields (q-1)/2 blocks when q = 3 mod 4 and
/// (q-3)/2 blocks when q = 1 mod 4.
FourLocalArc build_odd(const FieldPtr& f);

/// Dispatches on the parity of q. Rejects unsupported orders (q < 7, and
/// q = 4 and q = 5, where the needed 8-arcs cannot exist).
FourLocalArc build_local_arc(const FieldPtr& f);

/// Checks the three defining conditions: every block a 4-arc, blocks pairwise
/// disjoint, and every pairwise union an 8-arc (all 56 triples per pair).
LocalArcReport validate_local_arc(const FourLocalArc& fla);

/// The constructed length 2q / 2q-2 / 2q-6 by residue class. Supported:
/// even prime powers q >= 8 and odd prime powers q >= 7.
int expected_size(uint32_t q);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<FourLocalArc> witness;
    uint64_t nodes = 0;
};

/// Backtracking search for a 4-local arc with exactly m blocks, exploring
/// canonical representatives only: points ascending inside each block, blocks
/// ascending by first point. Complete exhaustion is feasible for q <= 9;
/// larger q may exhaust the node budget, which is reported as inconclusive.
/// The witness, when one exists within budget, is the lexicographically least.
SearchOutcome exhaustive_search(const FieldPtr& f, int m, uint64_t budget);

}  // namespace lrc
