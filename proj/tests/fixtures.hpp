#pragma once

// Shared test fixtures: the worked logarithm tables for k1 + k2 = 8 and
// their Z_16 doublings.

#include "splitterlab/logarithms.hpp"

namespace fixtures {

using splitterlab::LogTable;
using splitterlab::make_log_table;

// g : [-4,4]* -> Z_16, the direct KM logarithm of the first worked example.
inline LogTable table_g16() {
    return make_log_table(
        {{1, 0}, {-1, 8}, {2, 2}, {4, 4}, {-2, 10}, {-4, 12}, {3, 6}, {-3, 14}}, 16);
}

// The three bijective logarithms [-k1,k2]* -> Z_8 of the second worked
// example, in printed order.
inline LogTable table_f17() {
    return make_log_table(
        {{-1, 4}, {1, 0}, {2, 1}, {3, 6}, {4, 2}, {5, 3}, {6, 7}, {7, 5}}, 8);
}
inline LogTable table_f26() {
    return make_log_table(
        {{-2, 5}, {-1, 4}, {1, 0}, {2, 1}, {3, 6}, {4, 2}, {5, 3}, {6, 7}}, 8);
}
inline LogTable table_f35() {
    return make_log_table(
        {{-3, 7}, {-2, 5}, {-1, 4}, {1, 0}, {2, 1}, {3, 3}, {4, 2}, {5, 6}}, 8);
}

// Doubling a bijective table into Z_16 makes every value even, so the
// result is a direct KM logarithm (image = even residues, complement
// {0,1}).  This is the constructive step behind the k1 + k2 = 8 scans.
inline LogTable doubled(const LogTable& t) {
    return splitterlab::scaled_table(t, 2, 2 * t.k);
}

}  // namespace fixtures
