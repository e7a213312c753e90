#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

/// An order-n square with equal row and column label lists. Entries are
/// symbols: canonical field-element indices for field-based squares,
/// residues mod n for cyclic squares.
struct LatinSquare {
    std::vector<uint32_t> labels;
    std::vector<std::vector<uint32_t>> cells;

    int order() const { return static_cast<int>(labels.size()); }
    uint32_t at(int row, int col) const { return cells[row][col]; }
};

/// Cell positions (row, col) into a host square.
using Cell = std::pair<int, int>;
using CellSet = std::vector<Cell>;

struct CellSetReport {
    bool rows_distinct = true;
    bool cols_distinct = true;
    bool entries_distinct = true;
    int length = 0;
    std::string issue;  // empty when valid

    bool valid() const { return rows_distinct && cols_distinct && entries_distinct; }
};

/// Member k of the complete MOLS family over GF(q): entry (i,j) = w^{k-1}*i + j
/// with rows/columns labeled by all field elements in canonical index order.
/// k ranges over [1, q-1].
LatinSquare mols_member(const Field& f, uint32_t k);

enum class DegenerateKind {
    RowsConstant,     // every row constant, equal to its row label
    ColumnsConstant,  // every column constant, equal to its column label
};

/// The two degenerate q x q arrays extending the MOLS family (not Latin).
std::vector<std::vector<uint32_t>> mols_degenerate(const Field& f, DegenerateKind which);

bool is_latin(const LatinSquare& s);

/// True iff superimposing the two squares yields every ordered symbol pair
/// exactly once. Throws on order mismatch.
bool is_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Addition table of a subgroup of (GF(2^r), +) given by its ordered label
/// list. Labels must be closed under addition.
LatinSquare cayley_square(const Field& f, const std::vector<uint32_t>& labels);

/// Cyclic square of order n: entry (i,j) = (j - i + 1) mod n, symbols stored
/// as residues 0..n-1 (the 1..n display identifies n with residue 0).
LatinSquare cyclic_square(int n);

/// The explicit (partial) transversal of cyclic_square(n):
///   n odd:  { (i, 2i mod n) }, a full transversal;
///   n even: { (i, 2i) : i < n/2 } u { (i+1, (2i-n+1) mod n) : n/2 <= i <= n-2 },
///           length n-1.
/// Requires n >= 3.
CellSet cyclic_transversal(int n);

/// A full transversal of the Cayley square on the half subgroup
/// H = { elements with index < 2^{r-1} } of GF(2^r), r >= 3. Cells are
/// (h, T(h)) where T is multiplication by the class of x after identifying H
/// coefficientwise with GF(2^{r-1}) under its default modulus. T and id+T are
/// both invertible, so rows, columns and cell sums are distinct.
CellSet cayley_transversal(const Field& f);

/// Slices an orthogonal mate into its n disjoint transversals of `a`: one per
/// symbol of `b`, in ascending symbol order.
std::vector<CellSet> transversals_from_mate(const LatinSquare& a, const LatinSquare& b);

CellSetReport validate_cellset(const LatinSquare& s, const CellSet& cells);

/// Exhaustive backtracking search for a partial transversal of the given
/// length. Intended as a test oracle for squares of order <= 16; returns the
/// first solution in row-major cell order, or nullopt after full exhaustion.
std::optional<CellSet> find_transversal(const LatinSquare& s, int length);

/// Rows of space-separated symbols, one line per row.
std::string render(const LatinSquare& s);

}  // namespace lrc
