#pragma once

// Reference table of Pareto-optimal (p,q) hexagonal colorings: closed
// form, its value, colors N, and (p, q).

#include <cmath>
#include <vector>

namespace chroma::fixture {

struct ReferenceHexRow {
    const char* closed_form;
    double b;
    int n;
    int p;
    int q;
};

inline const std::vector<ReferenceHexRow>& reference_hex_table() {
    static const std::vector<ReferenceHexRow> rows{
        {"\\sqrt{7}/2", std::sqrt(7.0) / 2, 7, 1, 2},
        {"\\sqrt{3}", std::sqrt(3.0), 9, 0, 3},
        {"2", 2, 12, 2, 2},
        {"\\sqrt{19}/2", std::sqrt(19.0) / 2, 13, 1, 3},
        {"(3\\sqrt{3})/2", (3 * std::sqrt(3.0)) / 2, 16, 0, 4},
        {"\\sqrt{31}/2", std::sqrt(31.0) / 2, 19, 2, 3},
        {"\\sqrt{37}/2", std::sqrt(37.0) / 2, 21, 1, 4},
        {"2\\sqrt{3}", 2 * std::sqrt(3.0), 25, 0, 5},
        {"7/2", 7.0 / 2, 27, 3, 3},
        {"\\sqrt{13}", std::sqrt(13.0), 28, 2, 4},
        {"\\sqrt{61}/2", std::sqrt(61.0) / 2, 31, 1, 5},
        {"(5\\sqrt{3})/2", (5 * std::sqrt(3.0)) / 2, 36, 0, 6},
        {"\\sqrt{79}/2", std::sqrt(79.0) / 2, 39, 2, 5},
        {"\\sqrt{91}/2", std::sqrt(91.0) / 2, 43, 1, 6},
        {"5", 5, 48, 4, 4},
        {"3\\sqrt{3}", 3 * std::sqrt(3.0), 49, 0, 7},
        {"2\\sqrt{7}", 2 * std::sqrt(7.0), 52, 2, 6},
        {"\\sqrt{127}/2", std::sqrt(127.0) / 2, 57, 1, 7},
        {"\\sqrt{133}/2", std::sqrt(133.0) / 2, 61, 4, 5},
        {"\\sqrt{139}/2", std::sqrt(139.0) / 2, 63, 3, 6},
        {"(7\\sqrt{3})/2", (7 * std::sqrt(3.0)) / 2, 64, 0, 8},
        {"\\sqrt{151}/2", std::sqrt(151.0) / 2, 67, 2, 7},
        {"13/2", 13.0 / 2, 75, 5, 5},
        {"\\sqrt{43}", std::sqrt(43.0), 76, 4, 6},
        {"\\sqrt{181}/2", std::sqrt(181.0) / 2, 79, 3, 7},
        {"4\\sqrt{3}", 4 * std::sqrt(3.0), 81, 0, 9},
        {"7", 7, 84, 2, 8},
        {"\\sqrt{211}/2", std::sqrt(211.0) / 2, 91, 5, 6},
        {"\\sqrt{217}/2", std::sqrt(217.0) / 2, 93, 4, 7},
        {"\\sqrt{229}/2", std::sqrt(229.0) / 2, 97, 3, 8},
        {"(9\\sqrt{3})/2", (9 * std::sqrt(3.0)) / 2, 100, 0, 10},
        {"\\sqrt{247}/2", std::sqrt(247.0) / 2, 103, 2, 9},
        {"8", 8, 108, 6, 6},
        {"\\sqrt{259}/2", std::sqrt(259.0) / 2, 109, 5, 7},
        {"\\sqrt{271}/2", std::sqrt(271.0) / 2, 111, 1, 10},
        {"\\sqrt{283}/2", std::sqrt(283.0) / 2, 117, 3, 9},
        {"2\\sqrt{19}", 2 * std::sqrt(19.0), 124, 2, 10},
        {"\\sqrt{307}/2", std::sqrt(307.0) / 2, 127, 6, 7},
        {"\\sqrt{313}/2", std::sqrt(313.0) / 2, 129, 5, 8},
        {"(5\\sqrt{13})/2", (5 * std::sqrt(13.0)) / 2, 133, 4, 9},
        {"(7\\sqrt{7})/2", (7 * std::sqrt(7.0)) / 2, 139, 3, 10},
        {"19/2", 19.0 / 2, 147, 7, 7},
        {"\\sqrt{91}", std::sqrt(91.0), 148, 6, 8},
        {"\\sqrt{373}/2", std::sqrt(373.0) / 2, 151, 5, 9},
        {"\\sqrt{97}", std::sqrt(97.0), 156, 4, 10},
        {"\\sqrt{421}/2", std::sqrt(421.0) / 2, 169, 7, 8},
        {"\\sqrt{427}/2", std::sqrt(427.0) / 2, 171, 6, 9},
        {"\\sqrt{439}/2", std::sqrt(439.0) / 2, 175, 5, 10},
        {"11", 11, 192, 8, 8},
        {"\\sqrt{487}/2", std::sqrt(487.0) / 2, 193, 7, 9},
        {"2\\sqrt{31}", 2 * std::sqrt(31.0), 196, 6, 10},
        {"\\sqrt{553}/2", std::sqrt(553.0) / 2, 217, 8, 9},
        {"\\sqrt{559}/2", std::sqrt(559.0) / 2, 219, 7, 10},
        {"25/2", 25.0 / 2, 243, 9, 9},
        {"\\sqrt{157}", std::sqrt(157.0), 244, 8, 10},
        {"\\sqrt{703}/2", std::sqrt(703.0) / 2, 271, 9, 10},
        {"14", 14, 300, 10, 10},
    };
    return rows;
}

}  // namespace chroma::fixture
