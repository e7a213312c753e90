#include "lrc/latin.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace lrc {

LatinSquare mols_member(const Field& f, uint32_t k) {
    if (k < 1 || k > f.q() - 1)
        throw std::invalid_argument("MOLS index k must lie in [1, q-1]");
    const uint32_t q = f.q();
    const uint32_t slope = f.exp_idx(static_cast<int64_t>(k) - 1);
    LatinSquare s;
    s.labels.resize(q);
    for (uint32_t i = 0; i < q; ++i) s.labels[i] = i;
    s.cells.assign(q, std::vector<uint32_t>(q));
    for (uint32_t i = 0; i < q; ++i)
        for (uint32_t j = 0; j < q; ++j) s.cells[i][j] = f.add_idx(f.mul_idx(slope, i), j);
    return s;
}

std::vector<std::vector<uint32_t>> mols_degenerate(const Field& f, DegenerateKind which) {
    const uint32_t q = f.q();
    std::vector<std::vector<uint32_t>> a(q, std::vector<uint32_t>(q));
    for (uint32_t i = 0; i < q; ++i)
        for (uint32_t j = 0; j < q; ++j)
            a[i][j] = which == DegenerateKind::RowsConstant ? i : j;
    return a;
}

bool is_latin(const LatinSquare& s) {
    const int n = s.order();
    if (n == 0) return false;
    std::set<uint32_t> symbols;
    for (const auto& row : s.cells) {
        if (static_cast<int>(row.size()) != n) return false;
        symbols.insert(row.begin(), row.end());
    }
    if (static_cast<int>(symbols.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        std::set<uint32_t> row(s.cells[i].begin(), s.cells[i].end());
        if (static_cast<int>(row.size()) != n) return false;
        std::set<uint32_t> col;
        for (int j = 0; j < n; ++j) col.insert(s.cells[j][i]);
        if (static_cast<int>(col.size()) != n) return false;
    }
    return true;
}

bool is_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    const int n = a.order();
    if (n != b.order()) throw std::invalid_argument("orthogonality requires equal orders");
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairs.emplace_back(a.at(i, j), b.at(i, j));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

LatinSquare cayley_square(const Field& f, const std::vector<uint32_t>& labels) {
    if (f.p() != 2) throw std::invalid_argument("Cayley square requires characteristic 2");
    if (labels.empty()) throw std::invalid_argument("empty label set");
    std::unordered_set<uint32_t> members(labels.begin(), labels.end());
    if (members.size() != labels.size()) throw std::invalid_argument("duplicate labels");
    const int n = static_cast<int>(labels.size());
    LatinSquare s;
    s.labels = labels;
    s.cells.assign(n, std::vector<uint32_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const uint32_t sum = f.add_idx(labels[i], labels[j]);
            if (!members.count(sum))
                throw std::invalid_argument("labels are not closed under addition");
            s.cells[i][j] = sum;
        }
    return s;
}

LatinSquare cyclic_square(int n) {
    if (n < 1) throw std::invalid_argument("cyclic square order must be positive");
    LatinSquare s;
    s.labels.resize(n);
    for (int i = 0; i < n; ++i) s.labels[i] = i;
    s.cells.assign(n, std::vector<uint32_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.cells[i][j] = ((j - i + 1) % n + n) % n;
    return s;
}

CellSet cyclic_transversal(int n) {
    if (n < 3)
        throw std::invalid_argument(
            "cyclic transversal construction requires order >= 3 (order 2 has none)");
    CellSet cells;
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cells.emplace_back(i, 2 * i % n);
    } else {
        const int k = n / 2;
        for (int i = 0; i < k; ++i) cells.emplace_back(i, 2 * i);
        for (int i = k; i <= 2 * k - 2; ++i)
            cells.emplace_back(i + 1, ((2 * i - 2 * k + 1) % n + n) % n);
    }
    return cells;
}

CellSet cayley_transversal(const Field& f) {
    if (f.p() != 2) throw std::invalid_argument("Cayley transversal requires characteristic 2");
    if (f.r() < 3)
        throw std::invalid_argument(
            "Cayley transversal requires degree >= 3: the order-2 addition table has no transversal");
    const uint32_t half = f.q() / 2;
    const auto sub = Field::make(2, f.r() - 1);
    CellSet cells;
    cells.reserve(half);
    // H shares bit patterns with GF(2^{r-1}); T(h) = h * x there
    for (uint32_t h = 0; h < half; ++h) cells.emplace_back(h, sub->mul_idx(h, 2));
    return cells;
}

std::vector<CellSet> transversals_from_mate(const LatinSquare& a, const LatinSquare& b) {
    if (!is_orthogonal(a, b)) throw std::invalid_argument("squares are not orthogonal");
    const int n = a.order();
    std::set<uint32_t> symbols;
    for (const auto& row : b.cells) symbols.insert(row.begin(), row.end());
    std::vector<CellSet> out;
    for (uint32_t s : symbols) {
        CellSet cells;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b.at(i, j) == s) cells.emplace_back(i, j);
        out.push_back(std::move(cells));
    }
    return out;
}

CellSetReport validate_cellset(const LatinSquare& s, const CellSet& cells) {
    const int n = s.order();
    for (const auto& [i, j] : cells)
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::out_of_range("cell outside the square");
    CellSetReport rep;
    rep.length = static_cast<int>(cells.size());
    std::set<int> rows, cols;
    std::set<uint32_t> entries;
    for (const auto& [i, j] : cells) {
        if (!rows.insert(i).second) {
            rep.rows_distinct = false;
            if (rep.issue.empty()) rep.issue = "row " + std::to_string(i) + " repeated";
        }
        if (!cols.insert(j).second) {
            rep.cols_distinct = false;
            if (rep.issue.empty()) rep.issue = "column " + std::to_string(j) + " repeated";
        }
        if (!entries.insert(s.at(i, j)).second) {
            rep.entries_distinct = false;
            if (rep.issue.empty())
                rep.issue = "entry " + std::to_string(s.at(i, j)) + " repeated at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")";
        }
    }
    return rep;
}

namespace {

bool extend_transversal(const LatinSquare& s, int row, int placed, int length, CellSet& cells,
                        std::vector<bool>& col_used, std::set<uint32_t>& sym_used) {
    const int n = s.order();
    if (placed == length) return true;
    if (row == n || n - row < length - placed) return false;
    for (int j = 0; j < n; ++j) {
        if (col_used[j]) continue;
        const uint32_t sym = s.at(row, j);
        if (sym_used.count(sym)) continue;
        col_used[j] = true;
        sym_used.insert(sym);
        cells.emplace_back(row, j);
        if (extend_transversal(s, row + 1, placed + 1, length, cells, col_used, sym_used))
            return true;
        cells.pop_back();
        sym_used.erase(sym);
        col_used[j] = false;
    }
    // skip this row entirely (partial transversals need not touch every row)
    return extend_transversal(s, row + 1, placed, length, cells, col_used, sym_used);
}

}  // namespace

std::optional<CellSet> find_transversal(const LatinSquare& s, int length) {
    if (length < 0 || length > s.order())
        throw std::invalid_argument("requested transversal length out of range");
    CellSet cells;
    std::vector<bool> col_used(s.order(), false);
    std::set<uint32_t> sym_used;
    if (extend_transversal(s, 0, 0, length, cells, col_used, sym_used)) return cells;
    return std::nullopt;
}

std::string render(const LatinSquare& s) {
    std::ostringstream os;
    for (const auto& row : s.cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace lrc
