#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    uint32_t q = 0;
    std::optional<std::vector<uint32_t>> modulus;
    std::optional<uint32_t> primitive;
    std::string out;     // output path prefix (generate) or file (search/export)
    std::string in;      // input file (verify, export-matrix)
    OutputFormat format = OutputFormat::Json;
    uint64_t budget = 50'000'000;
    int blocks = 0;      // search target
    int threads = 1;
};

// Exit codes: 0 success, 1 verification failure (or inconclusive search),
// 2 usage/parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Builds the field and the 4-local arc for q, runs the full verifier suite
/// (arc conditions, rank, exhaustive distance, locality, bound defect),
/// prints (n, k, d, r), and writes the arc and matrix files.
int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Reads an arc or matrix file (JSON or text, detected by content) and
/// prints a structured pass/fail report with witnesses.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints predicted parameters and the length upper bound for q.
int cmd_params(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs the exhaustive block search; prints a witness, a nonexistence
/// certificate, or a budget notice.
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Reads an arc file and writes its parity-check matrix in the chosen format.
int cmd_export_matrix(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Shared by generate and verify: the full parameter workup of a canonical
/// parity-check matrix.
struct CodeReport {
    LrcParams params;
    int defect = 0;
    bool canonical = false;           // passed the canonical-form check
    bool distance_confirmed = false;  // min_distance found d <= cap
    std::vector<int> distance_witness;
    bool pass = false;
    std::string detail;
};

CodeReport verify_code(const ParityCheckMatrix& h, int threads);

}  // namespace lrc
