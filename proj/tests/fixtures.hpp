#pragma once

#include <vector>

namespace chordal::testing {

// Connected chordal graphs on [n], n = 1..12.
inline const char* const kConnected[] = {
    "1",
    "1",
    "4",
    "35",
    "541",
    "13302",
    "489287",
    "25864897",
    "1910753782",
    "193328835393",
    "26404671468121",
    "4818917841228328",
};

// Connected counts by (n, omega) for omega = 2..n, n = 2..12.
inline const std::vector<std::vector<const char*>> kConnectedByOmega = {
    {"1"},
    {"3", "4"},
    {"16", "34", "35"},
    {"125", "480", "540", "541"},
    {"1296", "9831", "13136", "13301", "13302"},
    {"16807", "268093", "466683", "488873", "489286", "489287"},
    {"262144", "9185436", "22732032", "25736782", "25863916", "25864896", "25864897"},
    {"4782969", "379623492", "1437072780", "1873146621", "1910084529", "1910751531", "1910753781", "1910753782"},
    {"100000000", "18376225525", "112588153700", "181962472490", "192919501307", "193325509217", "193328830337",
     "193328835392", "193328835393"},
    {"2357947691", "1019282908941", "10535042533301", "22726623077466", "26158547399061", "26400465973728",
     "26404655450778", "26404671456933", "26404671468120", "26404671468121"},
    {"61917364224", "63707908718994", "1144261607209084", "3513611793935959", "4666697716137194",
     "4813890013657154", "4818876084111431", "4818917765689886", "4818917841203841", "4818917841228327",
     "4818917841228328"},
};

inline const char* const kConnected20 = "149881423568752945444616261913109046421";
inline const char* const kConnected30 =
    "1318363800739595427128835554231270770209426196402736248743162258824492158995254";

}  // namespace chordal::testing
