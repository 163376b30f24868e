#include "degseq/table_data.hpp"

namespace degseq {

namespace {

// Maximum graphic differences m(n) with minimal non-graphic witnesses,
// n = 4..100. Witnesses are in the canonical text syntax (descending
// values); every row is re-validated by the verify-table machinery.
constexpr TableRow kTable[] = {
    {4, 1, "3^2,1^2"},
    {5, 1, "4^3,2^2"},
    {6, 2, "4^2,1^4"},
    {7, 2, "4^3,1^4"},
    {8, 3, "5^2,1^6"},
    {9, 3, "5^2,4,1^6"},
    {10, 3, "5^3,1^7"},
    {11, 4, "6^3,1^8"},
    {12, 4, "6^3,4,1^8"},
    {13, 4, "6^5,1^8"},
    {14, 5, "7^4,5,1^9"},
    {15, 5, "7^5,6,1^9"},
    {16, 6, "8^5,6,1^10"},
    {17, 6, "8^6,6,1^10"},
    {18, 7, "9^6,7,1^11"},
    {19, 7, "9^7,8,1^11"},
    {20, 7, "10^7,2^13"},
    {21, 8, "10^8,8,1^12"},
    {22, 8, "11^7,5,2^14"},
    {23, 9, "11^9,10,1^13"},
    {24, 9, "12^8,6,2^15"},
    {25, 10, "12^10,10,1^14"},
    {26, 10, "13^9,7,2^16"},
    {27, 11, "13^11,12,1^15"},
    {28, 11, "14^10,8,2^17"},
    {29, 11, "14^11,8,2^17"},
    {30, 12, "15^11,9,2^18"},
    {31, 12, "15^12,10,2^18"},
    {32, 12, "16^11,4,3^20"},
    {33, 13, "16^13,10,2^19"},
    {34, 13, "17^12,5,3^21"},
    {35, 14, "17^14,12,2^20"},
    {36, 14, "18^13,6,3^22"},
    {37, 15, "18^15,12,2^21"},
    {38, 15, "19^14,7,3^23"},
    {39, 16, "19^16,14,2^22"},
    {40, 16, "20^15,8,3^24"},
    {41, 16, "21^13,19,4^27"},
    {42, 17, "21^16,9,3^25"},
    {43, 17, "22^15,4^28"},
    {44, 18, "22^17,10,3^26"},
    {45, 18, "22^18,10,3^26"},
    {46, 18, "23^16,22,4^29"},
    {47, 19, "23^19,12,3^27"},
    {48, 19, "24^18,4^30"},
    {49, 20, "24^20,12,3^28"},
    {50, 20, "25^19,5,4^30"},
    {51, 21, "25^21,14,3^29"},
    {52, 21, "26^20,6,4^31"},
    {53, 22, "26^22,14,3^30"},
    {54, 22, "27^21,7,4^32"},
    {55, 22, "28^19,25,5^35"},
    {56, 23, "28^22,8,4^33"},
    {57, 23, "29^20,24,5^36"},
    {58, 24, "29^23,9,4^34"},
    {59, 24, "30^21,27,5^37"},
    {60, 25, "30^24,10,4^35"},
    {61, 25, "31^22,28,5^38"},
    {62, 25, "31^24,5^38"},
    {63, 26, "32^23,31,5^39"},
    {64, 26, "32^24,29,5^39"},
    {65, 27, "32^27,12,4^37"},
    {66, 27, "33^25,31,5^40"},
    {67, 28, "33^28,14,4^38"},
    {68, 28, "34^26,33,5^41"},
    {69, 28, "35^26,6^43"},
    {70, 29, "35^28,5^42"},
    {71, 29, "36^26,32,6^44"},
    {72, 30, "36^29,6,5^42"},
    {73, 30, "38^25,17,7^47"},
    {74, 31, "37^30,7,5^43"},
    {75, 31, "38^28,30,6^46"},
    {76, 32, "38^31,8,5^44"},
    {77, 32, "39^29,31,6^47"},
    {78, 32, "40^28,19,7^49"},
    {79, 33, "40^30,34,6^48"},
    {80, 33, "41^29,21,7^50"},
    {81, 34, "41^31,35,6^49"},
    {82, 34, "42^30,23,7^51"},
    {83, 35, "42^32,38,6^50"},
    {84, 35, "43^31,25,7^52"},
    {85, 35, "44^30,12,8^54"},
    {86, 36, "43^34,38,6^51"},
    {87, 36, "45^31,15,8^55"},
    {88, 37, "44^35,40,6^52"},
    {89, 37, "45^34,28,7^54"},
    {90, 38, "45^36,42,6^53"},
    {91, 38, "46^35,31,7^55"},
    {92, 38, "47^34,16,8^57"},
    {93, 39, "47^36,32,7^56"},
    {94, 39, "48^35,18,8^58"},
    {95, 40, "48^37,35,7^57"},
    {96, 40, "49^36,20,8^59"},
    {97, 40, "50^35,9^62"},
    {98, 41, "50^37,22,8^60"},
    {99, 41, "51^35,50,9^63"},
    {100, 42, "51^38,24,8^61"},
};

}  // namespace

std::span<const TableRow> reference_table() { return kTable; }

const TableRow* reference_row(int n) {
    if (n < 4 || n > 100) return nullptr;
    return &kTable[n - 4];
}

std::string reference_table_csv() {
    std::string csv = "n,m,witness\n";
    for (const auto& row : kTable) {
        csv += std::to_string(row.n);
        csv.push_back(',');
        csv += std::to_string(row.m);
        // Witness strings contain commas, so the field is always quoted.
        csv += ",\"";
        csv += row.witness;
        csv += "\"\n";
    }
    return csv;
}

}  // namespace degseq
