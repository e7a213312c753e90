#include "lrc/io.hpp"

#include <sstream>

namespace lrc {

namespace {

uint32_t checked_index(const Json& j, uint32_t q, const char* what) {
    if (!j.is_number_unsigned() || j.get<uint64_t>() >= q)
        throw std::runtime_error(std::string("invalid ") + what + " index");
    return j.get<uint32_t>();
}

ProjPoint point_from_json(const Field* f, const Json& j) {
    if (!j.is_array() || j.size() != 3) throw std::runtime_error("point must be a triple");
    return ProjPoint(Fe{f, checked_index(j[0], f->q(), "coordinate")},
                     Fe{f, checked_index(j[1], f->q(), "coordinate")},
                     Fe{f, checked_index(j[2], f->q(), "coordinate")});
}

FieldPtr default_field_for(uint32_t q) {
    uint32_t p = 0, r = 0;
    if (!prime_power(q, p, r)) throw std::runtime_error("q is not a prime power");
    return Field::make(p, r);
}

}  // namespace

Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"r", f.r()}, {"modulus", f.modulus()},
                {"primitive", f.primitive_index()}};
}

FieldPtr field_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("r") || !j.contains("modulus") ||
        !j.contains("primitive"))
        throw std::runtime_error("field object requires p, r, modulus, primitive");
    const auto modulus = j["modulus"].get<std::vector<uint32_t>>();
    return Field::make(j["p"].get<uint32_t>(), j["r"].get<uint32_t>(), modulus,
                       j["primitive"].get<uint32_t>());
}

Json arc_to_json(const FourLocalArc& fla) {
    Json blocks = Json::array();
    for (const auto& b : fla.blocks) {
        Json pts = Json::array();
        for (const auto& p : b.points) pts.push_back({p[0].idx, p[1].idx, p[2].idx});
        blocks.push_back(std::move(pts));
    }
    return Json{{"field", field_to_json(*fla.field)}, {"blocks", std::move(blocks)}};
}

FourLocalArc arc_from_json(const Json& j) {
    if (!j.contains("field") || !j.contains("blocks"))
        throw std::runtime_error("arc object requires field and blocks");
    FourLocalArc fla;
    fla.field = field_from_json(j["field"]);
    const Field* f = fla.field.get();
    for (const auto& blk : j["blocks"]) {
        if (!blk.is_array() || blk.size() != 4)
            throw std::runtime_error("each block consists of exactly 4 points");
        ArcBlock b{{point_from_json(f, blk[0]), point_from_json(f, blk[1]),
                    point_from_json(f, blk[2]), point_from_json(f, blk[3])},
                   std::nullopt, BlockOrigin::External};
        fla.blocks.push_back(std::move(b));
    }
    if (fla.blocks.empty()) throw std::runtime_error("arc file contains no blocks");
    return fla;
}

Json parity_to_json(const ParityCheckMatrix& h, const LrcParams& params) {
    Json upper = Json::array(), lower = Json::array();
    for (int row = 0; row < h.groups; ++row) upper.push_back(h.rows[row]);
    for (int row = h.groups; row < h.row_count(); ++row) lower.push_back(h.rows[row]);
    return Json{{"field", field_to_json(*h.field)},
                {"upper", std::move(upper)},
                {"lower", std::move(lower)},
                {"params",
                 Json{{"n", params.n}, {"k", params.k}, {"d", params.d}, {"r", params.r}}}};
}

ParityCheckMatrix parity_from_json(const Json& j) {
    if (!j.contains("field") || !j.contains("upper") || !j.contains("lower"))
        throw std::runtime_error("matrix object requires field, upper, lower");
    ParityCheckMatrix h;
    h.field = field_from_json(j["field"]);
    h.groups = static_cast<int>(j["upper"].size());
    h.lower_rows = static_cast<int>(j["lower"].size());
    if (h.groups < 1) throw std::runtime_error("matrix has no locality rows");
    size_t cols = 0;
    auto read_rows = [&](const Json& part) {
        for (const auto& row : part) {
            std::vector<uint32_t> r;
            for (const auto& e : row) r.push_back(checked_index(e, h.field->q(), "entry"));
            if (cols == 0) cols = r.size();
            if (r.size() != cols) throw std::runtime_error("ragged matrix rows");
            h.rows.push_back(std::move(r));
        }
    };
    read_rows(j["upper"]);
    read_rows(j["lower"]);
    if (cols == 0) throw std::runtime_error("matrix has no columns");
    return h;
}

std::string parity_to_text(const ParityCheckMatrix& h) {
    std::ostringstream os;
    os << "q=" << h.field->q() << " rows=" << h.row_count() << " cols=" << h.col_count()
       << " groups=" << h.groups << '\n';
    for (const auto& row : h.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// parses "key=<uint>" tokens in order
std::vector<uint32_t> header_values(const std::string& line, const std::vector<std::string>& keys) {
    std::istringstream is(line);
    std::vector<uint32_t> out;
    std::string tok;
    for (const auto& key : keys) {
        if (!(is >> tok) || tok.rfind(key + "=", 0) != 0)
            throw std::runtime_error("malformed header: expected " + key + "=...");
        out.push_back(static_cast<uint32_t>(std::stoul(tok.substr(key.size() + 1))));
    }
    return out;
}

}  // namespace

ParityCheckMatrix parity_from_text(const std::string& text, FieldPtr field) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("empty matrix file");
    const auto hv = header_values(header, {"q", "rows", "cols", "groups"});
    const uint32_t q = hv[0], rows = hv[1], cols = hv[2], groups = hv[3];
    if (groups < 1 || rows <= groups) throw std::runtime_error("malformed matrix header");
    ParityCheckMatrix h;
    h.field = field ? std::move(field) : default_field_for(q);
    if (h.field->q() != q) throw std::runtime_error("field order does not match the header");
    h.groups = static_cast<int>(groups);
    h.lower_rows = static_cast<int>(rows - groups);
    for (uint32_t rix = 0; rix < rows; ++rix) {
        std::vector<uint32_t> row(cols);
        for (uint32_t c = 0; c < cols; ++c) {
            if (!(is >> row[c]) || row[c] >= q) throw std::runtime_error("invalid matrix entry");
        }
        h.rows.push_back(std::move(row));
    }
    return h;
}

std::string arc_to_text(const FourLocalArc& fla) {
    std::ostringstream os;
    os << "q=" << fla.field->q() << " blocks=" << fla.block_count() << '\n';
    for (const auto& b : fla.blocks) {
        bool first = true;
        for (const auto& p : b.points)
            for (int t = 0; t < 3; ++t) {
                if (!first) os << ' ';
                os << p[t].idx;
                first = false;
            }
        os << '\n';
    }
    return os.str();
}

FourLocalArc arc_from_text(const std::string& text, FieldPtr field) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("empty arc file");
    const auto hv = header_values(header, {"q", "blocks"});
    const uint32_t q = hv[0], m = hv[1];
    if (m < 1) throw std::runtime_error("arc file contains no blocks");
    FourLocalArc fla;
    fla.field = field ? std::move(field) : default_field_for(q);
    if (fla.field->q() != q) throw std::runtime_error("field order does not match the header");
    const Field* f = fla.field.get();
    for (uint32_t g = 0; g < m; ++g) {
        std::array<Fq3, 4> raw;
        for (int t = 0; t < 4; ++t)
            for (int c = 0; c < 3; ++c) {
                uint32_t v;
                if (!(is >> v) || v >= q) throw std::runtime_error("invalid point coordinate");
                raw[t][c] = Fe{f, v};
            }
        ArcBlock b{{ProjPoint(raw[0]), ProjPoint(raw[1]), ProjPoint(raw[2]), ProjPoint(raw[3])},
                   std::nullopt, BlockOrigin::External};
        fla.blocks.push_back(std::move(b));
    }
    return fla;
}

std::string parity_to_csv(const ParityCheckMatrix& h) {
    std::ostringstream os;
    for (const auto& row : h.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

std::string arc_to_csv(const FourLocalArc& fla) {
    std::ostringstream os;
    os << "block,point,x0,x1,x2\n";
    for (int g = 0; g < fla.block_count(); ++g)
        for (int t = 0; t < 4; ++t) {
            const auto& p = fla.blocks[g].points[t];
            os << g + 1 << ',' << t + 1 << ',' << p[0].idx << ',' << p[1].idx << ',' << p[2].idx
               << '\n';
        }
    return os.str();
}

}  // namespace lrc
