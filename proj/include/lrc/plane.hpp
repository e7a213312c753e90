#pragma once

#include <array>
#include <span>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

/// A point (i, j) of AG(2,q) in the MOLS coordinate frame.
struct AffinePoint {
    Fe x, y;

    bool operator==(const AffinePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const AffinePoint& o) const { return !(*this == o); }
};

/// A vector of F_q^3, used both for homogeneous point coordinates and for
/// line normals.
using Fq3 = std::array<Fe, 3>;

Fe dot(const Fq3& a, const Fq3& b);
Fq3 cross(const Fq3& a, const Fq3& b);
Fe det3(const Fq3& a, const Fq3& b, const Fq3& c);
Fq3 sub3(const Fq3& a, const Fq3& b);
bool is_zero3(const Fq3& a);

/// A point of PG(2,q), stored in canonical form: the first nonzero
/// coordinate equals 1, so equality of points is equality of triples.
class ProjPoint {
  public:
    ProjPoint(Fe x0, Fe x1, Fe x2);
    explicit ProjPoint(const Fq3& v) : ProjPoint(v[0], v[1], v[2]) {}

    const Fe& operator[](int i) const { return c_[i]; }
    const Fq3& vec() const { return c_; }
    const Field* field() const { return c_[0].field; }

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;

  private:
    Fq3 c_;
};

inline constexpr int kSlopeInf = -1;

/// Line label (k, l): k = kSlopeInf for vertical lines x = l, k = 0 for
/// horizontal lines y = l, and k in [1, q-1] for M_k(i,j) = w^{k-1} i + j = l.
struct AffLine {
    int slope = 0;  // kSlopeInf or 0..q-1
    Fe intercept;

    bool operator==(const AffLine& o) const {
        return slope == o.slope && intercept == o.intercept;
    }
    bool operator!=(const AffLine& o) const { return !(*this == o); }
};

/// The q points satisfying the line's label equation.
std::vector<AffinePoint> line_points(const Field& f, const AffLine& line);

/// The unique line through two distinct affine points.
AffLine line_through(const AffinePoint& a, const AffinePoint& b);

/// (x, y) -> <(1, x, y)>.
ProjPoint embed(const AffinePoint& p);

/// True iff the three pairwise distinct points lie on a common line
/// (3x3 determinant test, valid for points at infinity too).
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// True iff no 3 of the pairwise distinct points are collinear.
bool is_arc(std::span<const ProjPoint> points);

/// The (q-1) x (q-1) slope-class matrix for odd q: rows and columns indexed
/// by F_q* in exponent order (row a <-> w^a); the entry is the class
/// m in {1, ..., (q-1)/2} with (w^a, w^b) on L(m, 0) or L(m + (q-1)/2, 0),
/// found by direct line membership.
struct SlopeMatrix {
    int half = 0;  // (q-1)/2
    std::vector<std::vector<int>> entries;

    int at(int a, int b) const { return entries[a][b]; }
    int order() const { return static_cast<int>(entries.size()); }
};

SlopeMatrix slope_matrix(const Field& f);

}  // namespace lrc
