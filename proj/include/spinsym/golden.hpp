#pragma once

#include <string>
#include <vector>

#include "spinsym/table.hpp"

namespace spinsym {

// Published spin Green tables for n = 3..7, laid out as printed: one row per
// odd mu, one column per strict lambda, polynomials in factored text form.
struct GoldenYTable {
    int n = 0;
    std::vector<std::string> lambdas;
    struct Row {
        std::string mu;
        std::vector<std::string> cells;
    };
    std::vector<Row> rows;

    // Parsed into the canonical orientation (rows lambda, cols mu).
    YTable to_table() const;
};

const std::vector<GoldenYTable>& golden_y_tables();
const GoldenYTable& golden_y_table(int n);

}  // namespace spinsym
