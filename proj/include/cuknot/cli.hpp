#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cuknot/cu_invariant.hpp"
#include "cuknot/planar_diagram.hpp"

namespace cuknot::cli {

// One row of a knot table.
struct KnotRecord {
    std::string name;
    std::string pd;
    PlanarDiagram parsed;
};

struct CsvLoad {
    std::vector<KnotRecord> records;
    std::size_t skipped = 0;  // rows whose PD failed to parse or validate
};

// Load a UTF-8 CSV with header columns `name` and `pd_notation` (values
// may be quoted). Bad rows are reported to `diagnostics` and skipped.
// Throws parse_error when the file or a required column is missing.
CsvLoad load_csv(const std::string& path, std::ostream& diagnostics);

// Full per-knot report as surfaced by the CLI.
struct Report {
    std::string name;
    ClassifyReport body;
};

Report make_report(const std::string& name, const PlanarDiagram& d, int64_t p);

// Deterministic single-object JSON with keys: name, p, determinant,
// colorable, classes [{labels, cu}], cu_set, cu_set_mirror, goeritz,
// representative_k. All numbers are integers.
std::string emit_json(const Report& r);

// exit codes: 0 ok, 1 parse/usage error, 2 invalid diagram,
// 3 not p-colorable where a coloring is required
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotColorable = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuknot::cli
