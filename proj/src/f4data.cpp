#include "hecke/f4data.hpp"

// Generated by tools/gen_f4_table.py; do not edit by hand.
namespace hecke::f4 {

const int class_count = 25;
const int type_count = 25;

const char* const class_words[] = {
    "", "0", "2", "01", "02", "12", "23", "012", "013", "023", "123", "0123", "1212", "01212", "12123", "012123", "01021232", "010210212", "121232123", "0102102123", "0121232123", "010210232123", "01021021232123", "0102102321021232", "010210212321021232102123"
};

const int class_sizes[] = {
    1, 12, 12, 32, 72, 36, 32, 96, 96, 96, 96, 96, 18, 72, 72, 144, 16, 12, 12, 32, 32, 12, 36, 16, 1
};

const char* const type_names[] = {
    "1_1", "1_2", "1_3", "1_4", "2_1", "2_2", "2_3", "2_4", "4_1", "4_2", "4_3", "4_4", "4_5", "6_1", "6_2", "8_1", "8_2", "8_3", "8_4", "9_1", "9_2", "9_3", "9_4", "12", "16"
};

const int type_dims[] = {
    1, 1, 1, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 6, 6, 8, 8, 8, 8, 9, 9, 9, 9, 12, 16
};

const long values[25][25] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, -1, 1, -1, -1, 1, -1, -1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1, -1, 1, 1},
    {1, -1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, 1},
    {1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, 1, 1},
    {2, 2, 0, 2, 0, 0, -1, 0, 0, -1, -1, -1, 2, 2, 0, 0, -1, 0, 2, -1, 2, 2, 0, -1, 2},
    {2, -2, 0, 2, 0, 0, -1, 0, 0, 1, 1, -1, 2, -2, 0, 0, -1, 0, -2, -1, 2, 2, 0, -1, 2},
    {2, 0, 2, -1, 0, 0, 2, -1, -1, 0, 0, -1, 2, 0, 2, 0, -1, 2, 0, 2, -1, 2, 0, -1, 2},
    {2, 0, -2, -1, 0, 0, 2, 1, 1, 0, 0, -1, 2, 0, -2, 0, -1, -2, 0, 2, -1, 2, 0, -1, 2},
    {4, 0, 0, -2, 0, 0, -2, 0, 0, 0, 0, 1, 4, 0, 0, 0, 1, 0, 0, -2, -2, 4, 0, 1, 4},
    {4, 2, 2, 1, 0, 2, 1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 2, -2, -2, -1, -1, 0, -2, -2, -4},
    {4, 2, -2, 1, 0, -2, 1, -1, 1, -1, 1, 0, 0, 0, 0, 0, 2, 2, -2, -1, -1, 0, 2, -2, -4},
    {4, -2, 2, 1, 0, -2, 1, 1, -1, 1, -1, 0, 0, 0, 0, 0, 2, -2, 2, -1, -1, 0, 2, -2, -4},
    {4, -2, -2, 1, 0, 2, 1, -1, 1, 1, -1, 0, 0, 0, 0, 0, 2, 2, 2, -1, -1, 0, -2, -2, -4},
    {6, 0, 0, 0, 2, -2, 0, 0, 0, 0, 0, -1, -2, 0, 0, 0, 3, 0, 0, 0, 0, 2, -2, 3, 6},
    {6, 0, 0, 0, -2, 2, 0, 0, 0, 0, 0, -1, -2, 0, 0, 0, 3, 0, 0, 0, 0, 2, 2, 3, 6},
    {8, 4, 0, 2, 0, 0, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, -2, 0, -4, 1, -2, 0, 0, 2, -8},
    {8, -4, 0, 2, 0, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, -2, 0, 4, 1, -2, 0, 0, 2, -8},
    {8, 0, 4, -1, 0, 0, 2, -1, 1, 0, 0, 0, 0, 0, 0, 0, -2, -4, 0, -2, 1, 0, 0, 2, -8},
    {8, 0, -4, -1, 0, 0, 2, 1, -1, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0, -2, 1, 0, 0, 2, -8},
    {9, 3, 3, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, 0, 3, 3, 0, 0, -3, 1, 0, 9},
    {9, 3, -3, 0, -1, -1, 0, 0, 0, 0, 0, 0, 1, -1, 1, 1, 0, -3, 3, 0, 0, -3, -1, 0, 9},
    {9, -3, 3, 0, -1, -1, 0, 0, 0, 0, 0, 0, 1, 1, -1, 1, 0, 3, -3, 0, 0, -3, -1, 0, 9},
    {9, -3, -3, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, -1, 0, -3, -3, 0, 0, -3, 1, 0, 9},
    {12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -4, 0, 0, 0, -3, 0, 0, 0, 0, 4, 0, -3, 12},
    {16, 0, 0, -2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 2, 0, 0, -2, -16},
};

}  // namespace hecke::f4
