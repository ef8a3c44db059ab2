#include "spinsym/golden.hpp"

#include <stdexcept>

namespace spinsym {

YTable GoldenYTable::to_table() const {
    YTable table;
    table.kind = "Y";
    table.n = n;
    for (const auto& l : lambdas) table.rows.push_back(Partition::parse(l));
    for (const auto& r : rows) table.cols.push_back(Partition::parse(r.mu));
    table.entries.assign(table.rows.size(), std::vector<TPoly>(table.cols.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) {
        if (rows[c].cells.size() != lambdas.size()) {
            throw std::logic_error("golden table n=" + std::to_string(n) + " has a ragged row");
        }
        for (std::size_t r = 0; r < lambdas.size(); ++r) {
            table.entries[r][c] = TPoly::parse(rows[c].cells[r]);
        }
    }
    return table;
}

const std::vector<GoldenYTable>& golden_y_tables() {
    static const std::vector<GoldenYTable> tables = {
        {3,
         {"3", "2,1"},
         {{"3", {"1", "2(t-1)"}},
          {"1,1,1", {"1", "2t+1"}}}},
        {4,
         {"4", "3,1"},
         {{"3,1", {"1", "2t-1"}},
          {"1,1,1,1", {"1", "2(t+1)"}}}},
        {5,
         {"5", "4,1", "3,2"},
         {{"5", {"1", "2(t-1)", "2(t-1)^2"}},
          {"3,1,1", {"1", "2t", "2t^2-1"}},
          {"1,1,1,1,1", {"1", "2t+3", "2(t^2+3t+1)"}}}},
        {6,
         {"6", "5,1", "4,2", "3,2,1"},
         {{"5,1", {"1", "2t-1", "2t(t-1)", "2(t-1)^2(2t^2+2t+1)"}},
          {"3,3", {"1", "2(t-1)", "2(t-1)^2", "4(t-1)(t^3-t^2+1)"}},
          {"3,1,1,1", {"1", "2t+1", "2t^2+2t-1", "4t^4+4t^3-2t^2-2t-1"}},
          {"1,1,1,1,1,1", {"1", "2(t+2)", "2t^2+8t+5", "2(2t^4+8t^3+14t^2+5t+1)"}}}},
        {7,
         {"7", "6,1", "5,2", "4,3", "4,2,1"},
         {{"7", {"1", "2(t-1)", "2(t-1)^2", "2(t-1)(t^2-t+1)", "4t^2(t-1)^2"}},
          {"5,1,1", {"1", "2t", "2t^2-1", "2t(t^2-1)", "2(t-1)(2t^3+2t^2-1)"}},
          {"3,3,1", {"1", "2t-1", "2t(t-1)", "2(t^3-t^2+1)", "2(t-1)(2t^3-t+1)"}},
          {"3,1,1,1,1", {"1", "2t+2", "2t(t+2)", "2t^3+4t-1", "2(t+1)(2t^3+2t^2-1)"}},
          {"1,1,1,1,1,1,1", {"1", "2t+5", "2t^2+10t+9", "2t^3+10t^2+18t+5", "4t^4+20t^3+46t^2+28t+7"}}}},
    };
    return tables;
}

const GoldenYTable& golden_y_table(int n) {
    for (const auto& t : golden_y_tables()) {
        if (t.n == n) return t;
    }
    throw std::out_of_range("no published table for n=" + std::to_string(n));
}

}  // namespace spinsym
