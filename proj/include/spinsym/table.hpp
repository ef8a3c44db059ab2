#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinsym/partition.hpp"
#include "spinsym/tpoly.hpp"

namespace spinsym {

// Dense table over (row partition, column partition), both axes in canonical
// decreasing-lexicographic order. entries[r][c] belongs to (rows[r], cols[c]).
template <typename Value>
struct Table {
    std::string kind;
    int n = 0;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<Value>> entries;

    const Value& at(const Partition& row, const Partition& col) const {
        return entries.at(index_of(rows, row)).at(index_of(cols, col));
    }

    friend bool operator==(const Table&, const Table&) = default;

private:
    static std::size_t index_of(const std::vector<Partition>& axis, const Partition& p) {
        for (std::size_t i = 0; i < axis.size(); ++i) {
            if (axis[i] == p) return i;
        }
        throw std::out_of_range("partition (" + p.to_string() + ") is not a table index");
    }
};

// L-table: rows lambda (Q-index), cols mu (G-index).
// Y-table: rows lambda (strict), cols mu (odd).
using PolyTable = Table<TPoly>;
using LTable = PolyTable;
using YTable = PolyTable;
// Spin characters zeta^lambda_mu: rows lambda (strict), cols mu (odd).
using SpinCharTable = Table<Rational>;

}  // namespace spinsym
