#pragma once

#include <string>

#include <json.hpp>

#include "lrc/arcs.hpp"
#include "lrc/code.hpp"

namespace lrc {

using Json = nlohmann::ordered_json;

// JSON forms. Field: { p, r, modulus: [c0..cr], primitive: index }.
// Arc: { field, blocks: [[[x0,x1,x2] x4] x m] } with canonical indices.
// Matrix: { field, upper: l x n, lower: u x n, params: {n,k,d,r} }.
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json arc_to_json(const FourLocalArc& fla);
FourLocalArc arc_from_json(const Json& j);

Json parity_to_json(const ParityCheckMatrix& h, const LrcParams& params);
ParityCheckMatrix parity_from_json(const Json& j);

// Text forms. Matrix: header "q=<q> rows=<l+u> cols=<n> groups=<l>", then one
// space-separated row of canonical indices per line. Arc: header
// "q=<q> blocks=<m>", then one block per line as 12 indices (4 point triples).
// Text carries only q; parsing uses the supplied field, or the default field
// of order q when none is given.
std::string parity_to_text(const ParityCheckMatrix& h);
ParityCheckMatrix parity_from_text(const std::string& text, FieldPtr field = nullptr);

std::string arc_to_text(const FourLocalArc& fla);
FourLocalArc arc_from_text(const std::string& text, FieldPtr field = nullptr);

// CSV export (one-way). Matrix: comma-separated rows. Arc: header
// "block,point,x0,x1,x2" followed by one row per point.
std::string parity_to_csv(const ParityCheckMatrix& h);
std::string arc_to_csv(const FourLocalArc& fla);

}  // namespace lrc
