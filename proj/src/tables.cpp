#include "modquot/tables.hpp"

namespace modquot {

namespace {

const std::vector<TableRow> kTable1 = {
    {4, 16}, {5, 15}, {6, 16}, {7, 15}, {8, 14}, {9, 13}, {10, 11}, {11, 12}, {12, 11}, {13, 11},
    {14, 10}, {15, 10}, {16, 9}, {17, 9}, {18, 9}, {19, 7}, {20, 6}, {21, 4}, {22, 4},
};

const std::vector<TableRow> kTable2 = {
    {12, 10}, {13, 11}, {14, 10}, {15, 10}, {16, 9}, {17, 9},
    {18, 10}, {19, 7},  {20, 6},  {21, 4},  {22, 7}, {23, 1},
};

const std::vector<TableRow> kTable3 = {
    {10, 7}, {11, 8}, {12, 8}, {13, 7}, {14, 7}, {15, 7}, {16, 6},
    {17, 6}, {18, 7}, {19, 5}, {20, 4}, {21, 3}, {22, 5}, {23, 2},
};

std::optional<int> lookup(const std::vector<TableRow>& rows, int g) {
    for (const auto& r : rows)
        if (r.g == g) return r.nmin;
    return std::nullopt;
}

}  // namespace

std::optional<int> table1_nmin(int g) { return lookup(kTable1, g); }
std::optional<int> table2_nmin(int g) { return lookup(kTable2, g); }
std::optional<int> table3_nmin(int g) { return lookup(kTable3, g); }

std::vector<TableRow> table1_rows() { return kTable1; }
std::vector<TableRow> table2_rows() { return kTable2; }
std::vector<TableRow> table3_rows() { return kTable3; }

}  // namespace modquot
