#pragma once

#include <span>
#include <string>

namespace degseq {

/// One row of the shipped maximum-graphic-difference table: for sequences
/// of length n with mean in [(n-2)/4, (3n-2)/4], every even-sum sequence
/// with spread <= m is graphic, and `witness` is a non-graphic sequence
/// with spread m+1 in the shared text syntax.
struct TableRow {
    int n = 0;
    int m = 0;
    const char* witness = "";
};

/// The embedded table, rows n = 4..100 in order.
std::span<const TableRow> reference_table();

/// Row for a given n, or nullptr when out of range.
const TableRow* reference_row(int n);

/// The table rendered as CSV with header `n,m,witness` — byte-identical to
/// the copy shipped at data/max_graphic_differences.csv.
std::string reference_table_csv();

}  // namespace degseq
