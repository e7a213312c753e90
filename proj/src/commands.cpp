#include "lrc/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "lrc/io.hpp"

namespace lrc {

namespace {

constexpr int kDistanceCap = 6;

FieldPtr field_from_config(const RunConfig& cfg) {
    uint32_t p = 0, r = 0;
    if (!prime_power(cfg.q, p, r))
        throw std::invalid_argument("q = " + std::to_string(cfg.q) + " is not a prime power");
    if (cfg.modulus) return Field::make(p, r, *cfg.modulus, cfg.primitive);
    if (cfg.primitive) {
        const auto def = Field::make(p, r);
        return Field::make(p, r, def->modulus(), cfg.primitive);
    }
    return Field::make(p, r);
}

std::string format_ext(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return ".txt";
        case OutputFormat::Csv: return ".csv";
        default: return ".json";
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << content;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

std::string render_params(const LrcParams& p) {
    std::ostringstream os;
    os << "(" << p.n << ", " << p.k << ", " << p.d << ", " << p.r << ")";
    return os.str();
}

std::string arc_payload(const FourLocalArc& fla, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: return arc_to_text(fla);
        case OutputFormat::Csv: return arc_to_csv(fla);
        default: return arc_to_json(fla).dump(2) + "\n";
    }
}

std::string matrix_payload(const ParityCheckMatrix& h, const LrcParams& params,
                           OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text: return parity_to_text(h);
        case OutputFormat::Csv: return parity_to_csv(h);
        default: return parity_to_json(h, params).dump(2) + "\n";
    }
}

}  // namespace

CodeReport verify_code(const ParityCheckMatrix& h, int threads) {
    CodeReport rep;
    std::ostringstream detail;
    try {
        rep.params.r = verify_locality(h);
        rep.canonical = true;
    } catch (const std::exception& e) {
        rep.detail = e.what();
        return rep;
    }
    rep.params.n = h.col_count();
    rep.params.groups = h.groups;
    rep.params.k = rep.params.n - rank(h.matrix());
    rep.params.lower_rows = rep.params.n - rep.params.k - rep.params.groups;
    if (rep.params.k < 1) {
        rep.detail = "matrix has full column rank; the code is trivial";
        return rep;
    }

    const auto dist = min_distance(h.matrix(), kDistanceCap, threads);
    if (!dist.distance) {
        detail << "minimum distance exceeds the verification cap " << kDistanceCap
               << "; cannot confirm optimality";
        rep.detail = detail.str();
        return rep;
    }
    rep.distance_confirmed = true;
    rep.params.d = *dist.distance;
    rep.distance_witness = dist.witness_columns;
    rep.defect = singleton_defect(rep.params.n, rep.params.k, rep.params.d, rep.params.r);
    rep.pass = rep.defect == 0;
    if (!rep.pass) {
        detail << "Singleton defect is " << rep.defect << " (d = " << rep.params.d
               << " vs bound " << rep.params.d + rep.defect << ")";
        rep.detail = detail.str();
    }
    return rep;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FieldPtr field;
    FourLocalArc fla;
    try {
        expected_size(cfg.q);  // reject unsupported q with the documented message
        field = field_from_config(cfg);
        fla = build_local_arc(field);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    out << "field: " << field->name() << ", p=" << field->p() << " r=" << field->r()
        << " modulus=[";
    for (size_t t = 0; t < field->modulus().size(); ++t)
        out << (t ? "," : "") << field->modulus()[t];
    out << "] primitive=" << field->primitive_index() << "\n";
    out << "blocks: " << fla.block_count() << " (arc size " << fla.size() << ")\n";

    const auto arc_rep = validate_local_arc(fla);
    out << "arc conditions: " << (arc_rep.pass() ? "pass" : "FAIL " + arc_rep.witness) << "\n";
    if (!arc_rep.pass()) return kExitVerifyFailed;

    const auto h = arc_to_parity(fla);
    const auto code = verify_code(h, cfg.threads);
    if (!code.distance_confirmed) {
        err << "error: " << code.detail << "\n";
        return kExitVerifyFailed;
    }
    out << "parameters: (n, k, d, r) = " << render_params(code.params) << "\n";
    out << "locality: " << code.params.r << "\n";
    out << "singleton defect: " << code.defect << "\n";
    if (!code.pass) {
        err << "error: " << code.detail << "\n";
        return kExitVerifyFailed;
    }

    const std::string prefix = cfg.out.empty() ? "lrc-q" + std::to_string(cfg.q) : cfg.out;
    const std::string arc_path = prefix + ".arc" + format_ext(cfg.format);
    const std::string mat_path = prefix + ".H" + format_ext(cfg.format);
    try {
        write_file(arc_path, arc_payload(fla, cfg.format));
        write_file(mat_path, matrix_payload(h, code.params, cfg.format));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << "wrote " << arc_path << "\n";
    out << "wrote " << mat_path << "\n";
    return kExitOk;
}

namespace {

enum class PayloadKind { ArcJson, MatrixJson, ArcText, MatrixText, Unknown };

uint32_t header_q(const std::string& content) {
    const size_t t = content.find("q=");
    if (t == std::string::npos) throw std::runtime_error("missing q= in header");
    return static_cast<uint32_t>(std::stoul(content.substr(t + 2)));
}

PayloadKind detect_kind(const std::string& content) {
    size_t t = content.find_first_not_of(" \t\r\n");
    if (t == std::string::npos) return PayloadKind::Unknown;
    if (content[t] == '{') {
        const auto j = Json::parse(content, nullptr, false);
        if (j.is_discarded()) return PayloadKind::Unknown;
        if (j.contains("blocks")) return PayloadKind::ArcJson;
        if (j.contains("upper")) return PayloadKind::MatrixJson;
        return PayloadKind::Unknown;
    }
    if (content.compare(t, 2, "q=") == 0) {
        const std::string head = content.substr(t, content.find('\n', t) - t);
        if (head.find("groups=") != std::string::npos) return PayloadKind::MatrixText;
        if (head.find("blocks=") != std::string::npos) return PayloadKind::ArcText;
    }
    return PayloadKind::Unknown;
}

int verify_arc(const FourLocalArc& fla, std::ostream& out) {
    out << "input: 4-local arc over " << fla.field->name() << " with " << fla.block_count()
        << " blocks (size " << fla.size() << ")\n";
    const auto rep = validate_local_arc(fla);
    out << "blocks are 4-arcs: " << (rep.blocks_are_arcs ? "pass" : "FAIL") << "\n";
    out << "blocks pairwise disjoint: " << (rep.blocks_disjoint ? "pass" : "FAIL") << "\n";
    out << "pairwise unions are 8-arcs: " << (rep.unions_are_arcs ? "pass" : "FAIL") << "\n";
    if (!rep.pass()) {
        out << "witness: " << rep.witness << "\n";
        out << "verdict: FAIL\n";
        return kExitVerifyFailed;
    }
    out << "verdict: pass\n";
    return kExitOk;
}

int verify_matrix(const ParityCheckMatrix& h, int threads, std::ostream& out) {
    out << "input: parity-check matrix over " << h.field->name() << ", " << h.row_count() << "x"
        << h.col_count() << " with " << h.groups << " groups\n";
    const auto code = verify_code(h, threads);
    if (!code.canonical) {
        out << "canonical form: FAIL (" << code.detail << ")\n";
        out << "verdict: FAIL\n";
        return kExitVerifyFailed;
    }
    out << "canonical form: pass\n";
    out << "locality: " << code.params.r << "\n";
    out << "rank: " << code.params.n - code.params.k << " (k = " << code.params.k << ")\n";
    if (!code.distance_confirmed) {
        out << "minimum distance: > " << kDistanceCap << " (" << code.detail << ")\n";
        out << "verdict: FAIL\n";
        return kExitVerifyFailed;
    }
    out << "minimum distance: " << code.params.d << " (dependent columns:";
    for (int c : code.distance_witness) out << " " << c + 1;
    out << ")\n";
    out << "parameters: (n, k, d, r) = " << render_params(code.params) << "\n";
    out << "singleton defect: " << code.defect << "\n";
    out << "verdict: " << (code.pass ? "pass" : "FAIL") << "\n";
    return code.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string content;
    PayloadKind kind;
    FieldPtr override_field;
    try {
        content = read_file(cfg.in);
        kind = detect_kind(content);
        if (kind == PayloadKind::Unknown)
            throw std::runtime_error("unrecognized input format in " + cfg.in);
        if ((kind == PayloadKind::ArcText || kind == PayloadKind::MatrixText) &&
            (cfg.modulus || cfg.primitive)) {
            RunConfig fc = cfg;
            fc.q = header_q(content);
            override_field = field_from_config(fc);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        switch (kind) {
            case PayloadKind::ArcJson:
                return verify_arc(arc_from_json(Json::parse(content)), out);
            case PayloadKind::ArcText:
                return verify_arc(arc_from_text(content, override_field), out);
            case PayloadKind::MatrixJson:
                return verify_matrix(parity_from_json(Json::parse(content)), cfg.threads, out);
            default:
                return verify_matrix(parity_from_text(content, override_field), cfg.threads, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_params(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int n;
    try {
        n = expected_size(cfg.q);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const int m = n / 4;
    const int k = n - m - 3;
    out << "q: " << cfg.q << "\n";
    out << "branch: " << (cfg.q % 2 == 0 ? "even (n = 2q)"
                          : cfg.q % 4 == 3 ? "q = 3 mod 4 (n = 2q-2)"
                                           : "q = 1 mod 4 (n = 2q-6)")
        << "\n";
    out << "blocks: " << m << "\n";
    out << "predicted (n, k, d, r): (" << n << ", " << k << ", 6, 3)\n";
    out << "length upper bound: " << length_upper_bound(cfg.q) << "\n";
    return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FieldPtr field;
    try {
        if (cfg.blocks < 2) throw std::invalid_argument("--blocks must be at least 2");
        field = field_from_config(cfg);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (field->q() > 9)
        out << "note: q > 9; exhaustion may exceed the node budget (inconclusive)\n";

    const auto res = exhaustive_search(field, cfg.blocks, cfg.budget);
    out << "nodes explored: " << res.nodes << "\n";
    switch (res.status) {
        case SearchStatus::Found: {
            out << "witness found: " << cfg.blocks << " blocks over " << field->name() << "\n";
            const auto rep = validate_local_arc(*res.witness);
            out << "witness re-validated: " << (rep.pass() ? "pass" : "FAIL " + rep.witness)
                << "\n";
            out << arc_to_text(*res.witness);
            if (!cfg.out.empty()) {
                try {
                    write_file(cfg.out, arc_payload(*res.witness, cfg.format));
                    out << "wrote " << cfg.out << "\n";
                } catch (const std::exception& e) {
                    err << "error: " << e.what() << "\n";
                    return kExitUsage;
                }
            }
            return rep.pass() ? kExitOk : kExitVerifyFailed;
        }
        case SearchStatus::Exhausted:
            out << "nonexistence certified: no 4-local arc with " << cfg.blocks
                << " blocks exists in PG(2," << field->q() << ") (search space exhausted)\n";
            return kExitOk;
        default:
            out << "inconclusive: node budget " << cfg.budget << " exhausted\n";
            return kExitVerifyFailed;
    }
}

int cmd_export_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const std::string content = read_file(cfg.in);
        const auto kind = detect_kind(content);
        FourLocalArc fla;
        if (kind == PayloadKind::ArcJson)
            fla = arc_from_json(Json::parse(content));
        else if (kind == PayloadKind::ArcText)
            fla = arc_from_text(content);
        else
            throw std::runtime_error("export-matrix expects an arc file");
        const auto h = arc_to_parity(fla);
        const auto code = verify_code(h, cfg.threads);
        const std::string payload = matrix_payload(h, code.params, cfg.format);
        if (cfg.out.empty())
            out << payload;
        else {
            write_file(cfg.out, payload);
            out << "wrote " << cfg.out << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace lrc
