#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/arcs.hpp"
#include "lrc/plane.hpp"

namespace lrc {

/// Dense matrix over a finite field; entries are canonical element indices.
struct Matrix {
    FieldPtr field;
    std::vector<std::vector<uint32_t>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

/// Canonical parity-check matrix: the first `groups` rows are the disjoint
/// locality indicators (row g is 1 exactly on columns 4g..4g+3), and in each
/// group's lower block the first column is all-zero.
struct ParityCheckMatrix {
    FieldPtr field;
    int groups = 0;      // number of repair groups
    int lower_rows = 0;  // rows below the locality block
    std::vector<std::vector<uint32_t>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    Matrix matrix() const { return Matrix{field, rows}; }
};

struct LrcParams {
    int n = 0, k = 0, d = 0, r = 0;
    int groups = 0;      // l
    int lower_rows = 0;  // u = n - k - l
};

/// Recovers the three nonzero lower columns of a repair group from its
/// ordered 4-arc (P1, P2, P3, P4): dualize each point to a line, intersect
///   u0 = l1 ^ l3,  v0 = l1 ^ l2,  w0 = l2 ^ l3
/// by cross products, and rescale each so that P4 . x = 1. Then the lines
/// <u,v>, <v,w>, <w,u>, <u-v, v-w> dualize back to P1..P4. The output is
/// pinned by the P4-normalization, hence deterministic.
std::array<Fq3, 3> group_columns(const ArcBlock& block);

/// Assembles the canonical H: one locality row per block, lower block of
/// group g equal to [0 | u_g | v_g | w_g].
ParityCheckMatrix arc_to_parity(const FourLocalArc& fla);

int rank(const Matrix& m);

/// Basis of { v : M v = 0 }, one vector per free column of the RREF.
std::vector<std::vector<uint32_t>> null_space_basis(const Matrix& m);

struct DistanceResult {
    std::optional<int> distance;        // nullopt: every subset of size <= cap independent
    std::vector<int> witness_columns;   // a dependent set of size `distance`
};

/// Smallest w <= cap such that some w columns are linearly dependent,
/// established by exhausting all column subsets of sizes 1..w in
/// lexicographic order; the witness is the lexicographically least dependent
/// subset of that size. `threads` > 1 splits the scan by first column with a
/// deterministic least-witness reduction.
DistanceResult min_distance(const Matrix& m, int cap, int threads = 1);

/// Validates the canonical form (locality indicators + zero columns) and
/// returns the locality, i.e. repair-group size minus one: always 3 here.
int verify_locality(const ParityCheckMatrix& h);

/// (n - k - ceil(k/r) + 2) - d. Zero exactly for Singleton-optimal codes.
int singleton_defect(int n, int k, int d, int r);

/// 4 * floor((7q + 3 + sqrt(24q^3 + q^2 - 6q - 63)) / 24), with an exact
/// integer square root (no floating point).
uint64_t length_upper_bound(uint32_t q);

/// The four lines of a repair group, each stored by its normal vector read
/// as a projective point. For matrices produced by arc_to_parity the normals
/// are exactly the group's block points, in order. Keeps the field alive:
/// the normals borrow it.
struct LineQuadruple {
    FieldPtr field;
    std::array<ProjPoint, 4> normals;
};

LineQuadruple quadruple_of_group(const ParityCheckMatrix& h, int g);

/// Exact integer floor(sqrt(x)).
uint64_t isqrt(uint64_t x);

}  // namespace lrc
