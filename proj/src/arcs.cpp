#include "lrc/arcs.hpp"

#include <algorithm>
#include <sstream>

#include "lrc/latin.hpp"

namespace lrc {

namespace {

ArcBlock make_block(const std::array<AffinePoint, 4>& pts, std::pair<Fe, Fe> anchor,
                    BlockOrigin origin) {
    return ArcBlock{{embed(pts[0]), embed(pts[1]), embed(pts[2]), embed(pts[3])}, anchor, origin};
}

std::string point_str(const ProjPoint& p) {
    std::ostringstream os;
    os << "(" << p[0].idx << "," << p[1].idx << "," << p[2].idx << ")";
    return os.str();
}

}  // namespace

FourLocalArc build_even(const FieldPtr& f) {
    if (f->p() != 2) throw std::invalid_argument("even construction requires characteristic 2");
    if (f->r() < 3)
        throw std::invalid_argument("even construction requires q >= 8 (no transversal below)");
    const Fe shift = pow(f->omega(), f->r() - 1);
    if (shift.idx < f->q() / 2)
        throw std::domain_error("w^{r-1} falls inside the half subgroup for this field");
    FourLocalArc fla;
    fla.field = f;
    for (const auto& [hi, hj] : cayley_transversal(*f)) {
        const Fe i = f->element(static_cast<uint32_t>(hi));
        const Fe j = f->element(static_cast<uint32_t>(hj));
        fla.blocks.push_back(make_block(
            {AffinePoint{i, j}, {i, j + shift}, {i + shift, j}, {i + shift, j + shift}},
            {i, j}, BlockOrigin::EvenConstruction));
    }
    return fla;
}

FourLocalArc build_odd(const FieldPtr& f) {
    const uint32_t q = f->q();
    if (q % 2 == 0) throw std::invalid_argument("odd construction requires odd q");
    if (q == 3 || q == 5)
        throw std::invalid_argument("q = " + std::to_string(q) +
                                    " yields fewer than 2 blocks; at least 2 are required");
    if (q < 7) throw std::invalid_argument("odd construction requires q >= 7");
    const int half = static_cast<int>((q - 1) / 2);
    FourLocalArc fla;
    fla.field = f;
    for (const auto& [a, b] : cyclic_transversal(half)) {
        const Fe i = f->element(f->exp_idx(a));
        const Fe j = f->element(f->exp_idx(b));
        fla.blocks.push_back(make_block({AffinePoint{i, j}, {i, -j}, {-i, j}, {-i, -j}}, {i, j},
                                        BlockOrigin::OddConstruction));
    }
    return fla;
}

FourLocalArc build_local_arc(const FieldPtr& f) {
    expected_size(f->q());  // reject unsupported orders with the documented message
    return f->q() % 2 == 0 ? build_even(f) : build_odd(f);
}

LocalArcReport validate_local_arc(const FourLocalArc& fla) {
    if (fla.block_count() < 2)
        throw std::invalid_argument("a 4-local arc consists of at least 2 blocks");
    LocalArcReport rep;
    auto note = [&rep](std::string w) {
        if (rep.witness.empty()) rep.witness = std::move(w);
    };

    const auto& blocks = fla.blocks;
    for (size_t g = 0; g < blocks.size(); ++g) {
        const auto& pts = blocks[g].points;
        bool dup = false;
        for (int s = 0; s < 4 && !dup; ++s)
            for (int t = s + 1; t < 4; ++t)
                if (pts[s] == pts[t]) {
                    dup = true;
                    break;
                }
        if (dup) {
            rep.blocks_are_arcs = false;
            note("block " + std::to_string(g + 1) + " has a repeated point");
        } else if (!is_arc(pts)) {
            rep.blocks_are_arcs = false;
            note("block " + std::to_string(g + 1) + " is not a 4-arc");
        }
    }

    for (size_t g = 0; g < blocks.size(); ++g)
        for (size_t h = g + 1; h < blocks.size(); ++h)
            for (const auto& p : blocks[g].points)
                for (const auto& r : blocks[h].points)
                    if (p == r) {
                        rep.blocks_disjoint = false;
                        note("blocks " + std::to_string(g + 1) + " and " + std::to_string(h + 1) +
                             " share point " + point_str(p));
                    }
    if (!rep.blocks_are_arcs || !rep.blocks_disjoint) {
        rep.unions_are_arcs = false;
        return rep;
    }

    for (size_t g = 0; g < blocks.size(); ++g)
        for (size_t h = g + 1; h < blocks.size(); ++h) {
            std::vector<ProjPoint> joint(blocks[g].points.begin(), blocks[g].points.end());
            joint.insert(joint.end(), blocks[h].points.begin(), blocks[h].points.end());
            for (size_t a = 0; a < 8 && rep.unions_are_arcs; ++a)
                for (size_t b = a + 1; b < 8 && rep.unions_are_arcs; ++b)
                    for (size_t c = b + 1; c < 8; ++c)
                        if (collinear(joint[a], joint[b], joint[c])) {
                            rep.unions_are_arcs = false;
                            note("blocks " + std::to_string(g + 1) + " and " +
                                 std::to_string(h + 1) + " admit the collinear triple " +
                                 point_str(joint[a]) + " " + point_str(joint[b]) + " " +
                                 point_str(joint[c]));
                            break;
                        }
            if (!rep.unions_are_arcs) return rep;
        }
    return rep;
}

int expected_size(uint32_t q) {
    uint32_t p = 0, r = 0;
    if (!prime_power(q, p, r))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (q % 2 == 0) {
        if (q < 8)
            throw std::invalid_argument(
                "q = " + std::to_string(q) +
                " is unsupported: PG(2,4) has no 8-arc (arcs have at most q+2 = 6 points) and "
                "the order-2 addition table has no transversal; the smallest even order is 8");
        return 2 * static_cast<int>(q);
    }
    if (q < 7)
        throw std::invalid_argument(
            "q = " + std::to_string(q) +
            " is unsupported: PG(2,5) has no 8-arc (arcs have at most q+1 = 6 points), so no "
            "family of at least 2 blocks exists; the smallest odd order is 7");
    return q % 4 == 3 ? 2 * static_cast<int>(q) - 2 : 2 * static_cast<int>(q) - 6;
}

namespace {

// Canonical point list of PG(2,q) in ascending (x0, x1, x2) index order:
// (0,0,1), then (0,1,m), then (1,x,y).
std::vector<ProjPoint> all_points(const Field& f) {
    std::vector<ProjPoint> pts;
    pts.reserve(f.q() * f.q() + f.q() + 1);
    pts.emplace_back(f.zero(), f.zero(), f.one());
    for (uint32_t m = 0; m < f.q(); ++m) pts.emplace_back(f.zero(), f.one(), f.element(m));
    for (uint32_t x = 0; x < f.q(); ++x)
        for (uint32_t y = 0; y < f.q(); ++y)
            pts.emplace_back(f.one(), f.element(x), f.element(y));
    return pts;
}

struct SearchState {
    const std::vector<ProjPoint>* pts = nullptr;
    int m = 0;
    uint64_t budget = 0;
    uint64_t nodes = 0;
    bool out_of_budget = false;

    // collinearity bitmask tables when the plane is small enough
    bool use_table = false;
    size_t words = 0;
    std::vector<uint64_t> table;  // [i*P + j] -> bitmask of points on line(i,j)

    std::vector<std::vector<int>> blocks;
    std::vector<bool> used;

    bool on_line(int a, int b, int c) const {
        if (use_table) return (table[(static_cast<size_t>(a) * pts->size() + b) * words + c / 64] >>
                               (c % 64)) & 1;
        return collinear((*pts)[a], (*pts)[b], (*pts)[c]);
    }

    bool candidate_ok(int cand) const {
        // triples must stay non-collinear within the current block and within
        // every (earlier block, current block) pair; triples spanning three
        // different blocks are unconstrained
        const auto& cur = blocks.back();
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = a + 1; b < cur.size(); ++b)
                if (on_line(cur[a], cur[b], cand)) return false;
        for (size_t g = 0; g + 1 < blocks.size(); ++g) {
            const auto& prev = blocks[g];
            for (size_t a = 0; a < prev.size(); ++a) {
                for (size_t b = a + 1; b < prev.size(); ++b)
                    if (on_line(prev[a], prev[b], cand)) return false;
                for (int c : cur)
                    if (on_line(prev[a], c, cand)) return false;
            }
        }
        return true;
    }

    bool extend() {
        if (static_cast<int>(blocks.size()) == m && blocks.back().size() == 4) return true;
        if (blocks.back().size() == 4) {
            blocks.emplace_back();
            const bool found = extend();
            if (!found) blocks.pop_back();
            return found;
        }
        const auto& cur = blocks.back();
        int start;
        if (!cur.empty())
            start = cur.back() + 1;
        else if (blocks.size() == 1)
            start = 0;
        else
            start = blocks[blocks.size() - 2].front() + 1;  // blocks ascend by first point
        const int total = static_cast<int>(pts->size());
        for (int cand = start; cand < total; ++cand) {
            if (used[cand]) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (!candidate_ok(cand)) continue;
            blocks.back().push_back(cand);
            used[cand] = true;
            if (extend()) return true;
            used[cand] = false;
            blocks.back().pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SearchOutcome exhaustive_search(const FieldPtr& f, int m, uint64_t budget) {
    if (m < 2) throw std::invalid_argument("a 4-local arc consists of at least 2 blocks");
    const auto pts = all_points(*f);
    const size_t P = pts.size();

    SearchState st;
    st.pts = &pts;
    st.m = m;
    st.budget = budget;
    if (P <= 300) {
        st.use_table = true;
        st.words = (P + 63) / 64;
        st.table.assign(P * P * st.words, 0);
        for (size_t i = 0; i < P; ++i)
            for (size_t j = 0; j < P; ++j) {
                if (i == j) continue;
                const Fq3 normal = cross(pts[i].vec(), pts[j].vec());
                for (size_t k = 0; k < P; ++k)
                    if (dot(normal, pts[k].vec()).is_zero())
                        st.table[(i * P + j) * st.words + k / 64] |= uint64_t{1} << (k % 64);
            }
    }
    st.blocks.emplace_back();
    st.used.assign(P, false);

    SearchOutcome out;
    const bool found = st.extend();
    out.nodes = st.nodes;
    if (found) {
        out.status = SearchStatus::Found;
        FourLocalArc fla;
        fla.field = f;
        for (const auto& blk : st.blocks) {
            ArcBlock b{{pts[blk[0]], pts[blk[1]], pts[blk[2]], pts[blk[3]]}, std::nullopt,
                       BlockOrigin::Search};
            fla.blocks.push_back(std::move(b));
        }
        out.witness = std::move(fla);
    } else {
        out.status = st.out_of_budget ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
    }
    return out;
}

}  // namespace lrc
