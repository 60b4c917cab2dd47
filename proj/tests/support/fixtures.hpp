#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cuknot/cli.hpp"

namespace cuknot::testsupport {

inline const std::vector<cli::KnotRecord>& bundled_knots() {
    static const std::vector<cli::KnotRecord> records = [] {
        std::ostringstream diag;
        auto csv = cli::load_csv(std::string(CUKNOT_DATA_DIR) + "/knots.csv", diag);
        if (csv.skipped != 0)
            throw std::runtime_error("bundled table has bad rows: " + diag.str());
        return csv.records;
    }();
    return records;
}

inline const PlanarDiagram& bundled(const std::string& name) {
    for (const auto& rec : bundled_knots())
        if (rec.name == name) return rec.parsed;
    throw std::runtime_error("no bundled knot named " + name);
}

// deterministic RNG for the property suites
inline std::mt19937& rng() {
    static std::mt19937 gen(20250831);
    return gen;
}

inline int rand_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

}  // namespace cuknot::testsupport
