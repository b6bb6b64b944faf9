#pragma once

#include <optional>
#include <vector>

namespace modquot {

/// Published minimal-n thresholds, kept as reference data (not recomputed).
/// table1: minimal n making the n-pointed space of genus g general type
///         (4 <= g <= 22; every n works for g >= 23).
/// table2: minimal n for the full symmetric quotient (12 <= g <= 23,
///         valid up to n = g-1).
/// table3: minimal n for the difference variety, i.e. the quotient of the
///         2n-pointed space by the product of two symmetric groups of degree n
///         (10 <= g <= 23, valid up to n = g-2).
std::optional<int> table1_nmin(int g);
std::optional<int> table2_nmin(int g);
std::optional<int> table3_nmin(int g);

struct TableRow {
    int g;
    int nmin;
};

std::vector<TableRow> table1_rows();
std::vector<TableRow> table2_rows();
std::vector<TableRow> table3_rows();

}  // namespace modquot
