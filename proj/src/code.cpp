#include "lrc/code.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

namespace lrc {

std::array<Fq3, 3> group_columns(const ArcBlock& block) {
    const auto& P = block.points;
    const Fq3 u0 = cross(P[0].vec(), P[2].vec());
    const Fq3 v0 = cross(P[0].vec(), P[1].vec());
    const Fq3 w0 = cross(P[1].vec(), P[2].vec());
    std::array<Fq3, 3> out = {u0, v0, w0};
    for (auto& col : out) {
        const Fe d = dot(P[3].vec(), col);
        if (d.is_zero())
            throw std::invalid_argument(
                "block is not a 4-arc: P4 lies on a side of the dual triangle");
        const Fe scale = inv(d);
        for (auto& c : col) c = c * scale;
    }
    return out;
}

ParityCheckMatrix arc_to_parity(const FourLocalArc& fla) {
    if (fla.block_count() < 2)
        throw std::invalid_argument("a 4-local arc consists of at least 2 blocks");
    const int m = fla.block_count();
    const int n = 4 * m;
    ParityCheckMatrix h;
    h.field = fla.field;
    h.groups = m;
    h.lower_rows = 3;
    h.rows.assign(m + 3, std::vector<uint32_t>(n, 0));
    for (int g = 0; g < m; ++g) {
        for (int t = 0; t < 4; ++t) h.rows[g][4 * g + t] = 1;
        const auto cols = group_columns(fla.blocks[g]);
        for (int t = 0; t < 3; ++t)
            for (int row = 0; row < 3; ++row) h.rows[m + row][4 * g + 1 + t] = cols[t][row].idx;
    }
    return h;
}

namespace {

// In-place elimination; returns rank. When `reduced` is set the result is the
// RREF and `pivot_cols` receives the pivot column of each nonzero row.
int eliminate(const Field& f, std::vector<std::vector<uint32_t>>& a, bool reduced,
              std::vector<int>* pivot_cols = nullptr) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int row = rank; row < rows; ++row)
            if (a[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        const uint32_t inv = f.inv_idx(a[rank][col]);
        for (int c = col; c < cols; ++c) a[rank][c] = f.mul_idx(a[rank][c], inv);
        const int first = reduced ? 0 : rank + 1;
        for (int row = first; row < rows; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            const uint32_t factor = a[row][col];
            for (int c = col; c < cols; ++c)
                a[row][c] = f.sub_idx(a[row][c], f.mul_idx(factor, a[rank][c]));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace

int rank(const Matrix& m) {
    auto work = m.rows;
    return eliminate(*m.field, work, false);
}

std::vector<std::vector<uint32_t>> null_space_basis(const Matrix& m) {
    const Field& f = *m.field;
    auto work = m.rows;
    std::vector<int> pivots;
    const int rk = eliminate(f, work, true, &pivots);
    const int n = m.col_count();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(n, 0);
        v[free] = 1;
        for (int row = 0; row < rk; ++row)
            v[pivots[row]] = f.neg_idx(work[row][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Incremental column-subset scan. Columns are inserted in ascending index
// order against a growing eliminated basis; since every smaller size has
// already been exhausted as independent, a reduction to zero can only occur
// at the final insertion of the target size.
class SubsetScanner {
  public:
    SubsetScanner(const Field& f, const std::vector<std::vector<uint32_t>>& cols, int w)
        : f_(f), cols_(cols), w_(w), height_(cols.empty() ? 0 : (int)cols[0].size()) {}

    // scan all subsets of size w_ whose first column index is `first`;
    // returns the lexicographically least dependent subset, if any
    std::optional<std::vector<int>> scan_from(int first) {
        chosen_.clear();
        basis_.clear();
        pivot_.clear();
        if (!insert(first)) {  // zero column: dependent singleton
            if (w_ == 1) return std::vector<int>{first};
            return std::nullopt;  // unreachable for w > 1: the w = 1 pass returned first
        }
        chosen_.push_back(first);
        if (w_ == 1) {
            pop();
            return std::nullopt;
        }
        auto hit = recurse(first + 1);
        pop();
        return hit;
    }

  private:
    std::optional<std::vector<int>> recurse(int start) {
        const int depth = static_cast<int>(chosen_.size());
        const int n = static_cast<int>(cols_.size());
        for (int c = start; c <= n - (w_ - depth); ++c) {
            if (depth + 1 == w_) {
                if (!dependent_probe(c)) continue;
                auto witness = chosen_;
                witness.push_back(c);
                return witness;
            }
            if (!insert(c)) {
                assert(false && "smaller dependent subset slipped through");
                continue;
            }
            chosen_.push_back(c);
            auto hit = recurse(c + 1);
            chosen_.pop_back();
            pop();
            if (hit) return hit;
        }
        return std::nullopt;
    }

    // reduce column c against the basis without inserting
    bool dependent_probe(int c) {
        reduce_into(c);
        for (int t = 0; t < height_; ++t)
            if (scratch_[t] != 0) return false;
        return true;
    }

    // reduce and insert as a new pivot; false if the column reduces to zero
    bool insert(int c) {
        reduce_into(c);
        int p = 0;
        while (p < height_ && scratch_[p] == 0) ++p;
        if (p == height_) return false;
        const uint32_t inv = f_.inv_idx(scratch_[p]);
        for (int t = p; t < height_; ++t) scratch_[t] = f_.mul_idx(scratch_[t], inv);
        basis_.push_back(scratch_);
        pivot_.push_back(p);
        return true;
    }

    void pop() {
        basis_.pop_back();
        pivot_.pop_back();
    }

    void reduce_into(int c) {
        scratch_ = cols_[c];
        for (size_t b = 0; b < basis_.size(); ++b) {
            const uint32_t factor = scratch_[pivot_[b]];
            if (factor == 0) continue;
            const auto& vec = basis_[b];
            for (int t = pivot_[b]; t < height_; ++t)
                scratch_[t] = f_.sub_idx(scratch_[t], f_.mul_idx(factor, vec[t]));
        }
    }

    const Field& f_;
    const std::vector<std::vector<uint32_t>>& cols_;
    const int w_;
    const int height_;
    std::vector<int> chosen_;
    std::vector<std::vector<uint32_t>> basis_;
    std::vector<int> pivot_;
    std::vector<uint32_t> scratch_;
};

}  // namespace

DistanceResult min_distance(const Matrix& m, int cap, int threads) {
    if (cap < 1) throw std::invalid_argument("distance cap must be at least 1");
    const int n = m.col_count();
    const Field& f = *m.field;
    std::vector<std::vector<uint32_t>> cols(n, std::vector<uint32_t>(m.row_count()));
    for (int r = 0; r < m.row_count(); ++r)
        for (int c = 0; c < n; ++c) cols[c][r] = m.rows[r][c];

    for (int w = 1; w <= std::min(cap, n); ++w) {
        std::optional<std::vector<int>> best;
        if (threads <= 1) {
            SubsetScanner scanner(f, cols, w);
            for (int first = 0; first + w <= n && !best; ++first) best = scanner.scan_from(first);
        } else {
            std::vector<std::optional<std::vector<int>>> results(n);
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(std::min(threads, n)));
            std::atomic<int> next{0};
            std::atomic<int> best_first{n};
            const int workers = std::min(threads, n);
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    SubsetScanner scanner(f, cols, w);
                    for (int first = next.fetch_add(1); first + w <= n;
                         first = next.fetch_add(1)) {
                        if (first > best_first.load()) continue;  // cannot beat an earlier stripe
                        results[first] = scanner.scan_from(first);
                        if (results[first]) {
                            int cur = best_first.load();
                            while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
                            }
                        }
                    }
                });
            for (auto& th : pool) th.join();
            for (int first = 0; first < n && !best; ++first)
                if (results[first]) best = results[first];
        }
        if (best) return {w, *best};
    }
    return {std::nullopt, {}};
}

int verify_locality(const ParityCheckMatrix& h) {
    const int n = h.col_count();
    if (h.groups < 1 || n != 4 * h.groups || h.row_count() != h.groups + h.lower_rows)
        throw std::invalid_argument("matrix is not in canonical parity-check form");
    for (int g = 0; g < h.groups; ++g)
        for (int c = 0; c < n; ++c) {
            const uint32_t want = (c >= 4 * g && c < 4 * g + 4) ? 1u : 0u;
            if (h.rows[g][c] != want)
                throw std::invalid_argument(
                    "matrix is not in canonical parity-check form: row " + std::to_string(g + 1) +
                    " is not the locality indicator of group " + std::to_string(g + 1));
        }
    for (int g = 0; g < h.groups; ++g)
        for (int row = h.groups; row < h.row_count(); ++row)
            if (h.rows[row][4 * g] != 0)
                throw std::invalid_argument(
                    "matrix is not in canonical parity-check form: lower block of group " +
                    std::to_string(g + 1) + " lacks the zero column");
    return 3;  // repair groups have size 4
}

int singleton_defect(int n, int k, int d, int r) {
    if (n < 1 || k < 1 || d < 1 || r < 1 || k > n)
        throw std::invalid_argument("parameters must be positive with k <= n");
    const int ceil_kr = (k + r - 1) / r;
    return (n - k - ceil_kr + 2) - d;
}

uint64_t isqrt(uint64_t x) {
    uint64_t lo = 0, hi = (uint64_t{1} << 32) - 1;  // mid^2 must not wrap
    while (lo < hi) {  // largest s with s^2 <= x
        const uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

uint64_t length_upper_bound(uint32_t q) {
    if (q < 2) throw std::invalid_argument("bound requires q >= 2 (negative radicand)");
    const uint64_t qq = q;
    const uint64_t radicand = 24 * qq * qq * qq + qq * qq - 6 * qq - 63;
    return 4 * ((7 * qq + 3 + isqrt(radicand)) / 24);
}

LineQuadruple quadruple_of_group(const ParityCheckMatrix& h, int g) {
    if (g < 0 || g >= h.groups) throw std::invalid_argument("group index out of range");
    if (h.lower_rows != 3) throw std::invalid_argument("three lower rows are required");
    const Field* f = h.field.get();
    auto col = [&](int t) {
        Fq3 v;
        for (int row = 0; row < 3; ++row) v[row] = Fe{f, h.rows[h.groups + row][4 * g + 1 + t]};
        return v;
    };
    const Fq3 u = col(0), v = col(1), w = col(2);
    if (is_zero3(u) || is_zero3(v) || is_zero3(w))
        throw std::invalid_argument("degenerate lower columns in group " + std::to_string(g + 1));
    const Fq3 n1 = cross(u, v), n2 = cross(v, w), n3 = cross(w, u);
    const Fq3 n4 = cross(sub3(u, v), sub3(v, w));
    if (is_zero3(n1) || is_zero3(n2) || is_zero3(n3) || is_zero3(n4))
        throw std::invalid_argument("degenerate lower columns in group " + std::to_string(g + 1));
    return {h.field, {ProjPoint(n1), ProjPoint(n2), ProjPoint(n3), ProjPoint(n4)}};
}

}  // namespace lrc
