#include "f12/reference_tables.hpp"

#include <stdexcept>

namespace f12::reference {

long point_index(long s) {
    for (size_t i = 0; i < kPoints.size(); ++i)
        if (kPoints[i] == s) return static_cast<long>(i);
    throw std::invalid_argument("point_index: not a critical point: " + std::to_string(s));
}

const std::array<std::array<const char *, 6>, 10> c_table = {{
    // s = -8
    {"43867/7182", "0", "2", "131071/65536", "258280328/129140163", "17179738111/8589934592"},
    // s = -6
    {"35/2", "0", "2", "8191/4096", "3188648/1594323", "67100671/33554432"},
    // s = -4
    {"65/6", "0", "2", "511/256", "39368/19683", "261631/131072"},
    // s = -2
    {"11/3", "0", "2", "31/16", "488/243", "991/512"},
    // s = 0
    {"3/2", "0", "2", "1", "8/3", "1/2"},
    // s = 1
    {"0", "1/4", "2", "-2", "8", "-10"},
    // s = 3
    {"0", "1/480", "2", "-62", "488", "-2110"},
    // s = 5
    {"0", "31/1451520", "2", "-1022", "39368", "-525310"},
    // s = 7
    {"0", "5461/24908083200", "2", "-16382", "3188648", "-134234110"},
    // s = 9
    {"0", "3202291/1422749712384000", "2", "-262142", "258280328", "-34360000510"},
}};

const std::array<std::array<const char *, 4>, 10> a_table = {{
    {"88931/14364", "157008449/14364", "39586640915/3591", "24277850760593/14364"},
    {"71/1224", "8387/306", "447871/34", "131485894/153"},
    {"1/6528", "173/3672", "5103/544", "9380/17"},
    {"1/3144960", "1/8568", "23801/4455360", "11015/41769"},
    {"1/784143360", "23/49008960", "4997/196035840", "421/2042040"},
    {"1/5292967680", "53/1323241920", "27/5445440", "-23/33081048"},
    {"199/1270312243200", "49/5671036800", "2059/3207859200", "-10529/4962157200"},
    {"19/65330343936", "1277/285820254720", "8167/63515612160", "-6631/10508097600"},
    {"286703/400148356608000", "28267/10003708915200", "633/15247232000", "-8745697/6252318072000"},
    {"4803437/2134124568576000", "4737913/2134124568576000", "20552747/533531142144000",
     "-7037087527/2134124568576000"},
}};

const std::array<std::array<const char *, 2>, 10> k_table = {{
    {"-435883731901/495673344", "3045934023523439/1177224192"},
    {"-217211831/585169920", "100968174943/73146240"},
    {"-255571/1404407808", "156430715/175550976"},
    {"45173/1369297612800", "74862131/171162201600"},
    {"36097/56232488632320", "3748999/7029061079040"},
    {"23831/210871832371200", "876017/26358979046400"},
    {"4553/69773768064000", "-1256/105304870125"},
    {"424061/3881958732288000", "-1672/55749637125"},
    {"923549/3483809118720000", "-66896/850539335625"},
    {"8127882069959/9794709827950215168000", "-304138734083887/1224338728493776896000"},
}};

const long k_inverse_num[4][4] = {
    {8432992, 5928, 152, -13},
    {-311728736, 940056, 24104, 4229},
    {762432, -1368, 16, 3},
    {286144, 456, -16, -1},
};
const long k_inverse_den[4] = {22947840, 2868480, 2039808, 1105920};

const std::array<PiValue, 10> sym_square_rows = {{
    {-8, "9437184/35", 3},       // 2^20 * 9 / 35
    {-6, "-65536/9", 5},         // -2^16 / 9
    {-4, "8192/45", 7},          // 2^13 / 45
    {-2, "-16384/2205", 9},      // -2^14 / 2205
    {0, "16384/14175", 11},      // 2^14 / 14175
    {1, "8388608/39916800", 13},               // 2^23 / 11!
    {3, "268435456/87178291200", 17},          // 2^28 / 14!
    {5, "2147483648/62768369664000", 21},      // 2^31 / (3 * 16!)
    {7, "34359738368/96035605585920000", 25},  // 2^35 / (15 * 18!)
    {9, "2199023255552/596060992003276800000", 29},  // 2^41 / (245 * 20!)
}};

const std::array<PiValue, 10> g20_product_rows = {{
    {-8, "-479626345744384/1177605", 3},
    {-6, "38107606016/155601", 7},
    {-4, "802883584/1526175", 11},
    {-2, "1965682688/4426469775", 15},
    {0, "1479424/3447969525", 19},
    {1, "2323456/175846445775", 21},
    {3, "8388608/145073317764375", 25},
    {5, "16777216/34367988873684375", 29},
    {7, "2097152/436209089550609375", 33},
    {9, "63842269963/1305893808013068186412500", 37},
}};

const std::array<MainRow, 10> main_rows = {{
    {-8, -1, {{{2, 31}, {17, 1}, {11411, 1}, {1207259, 1}, {0, 0}}},
     {{{3, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {61, 1}, {0, 0}}}, 6, -903525.807173},
    {-6, -1, {{{2, 26}, {47, 1}, {791797, 1}, {0, 0}}},
     {{{3, 6}, {17, 1}, {113, 1}, {0, 0}}}, 12, -14105.832863},
    {-4, 1, {{{2, 24}, {392033, 1}, {0, 0}}},
     {{{3, 5}, {5, 3}, {7, 1}, {17, 1}, {19, 1}, {0, 0}}}, 18, 728.260808},
    {-2, -1, {{{2, 26}, {479903, 1}, {0, 0}}},
     {{{3, 8}, {5, 3}, {7, 3}, {13, 1}, {17, 1}, {157, 1}, {0, 0}}}, 24, -24.122802},
    {0, 1, {{{2, 22}, {5779, 1}, {0, 0}}},
     {{{3, 13}, {5, 4}, {7, 3}, {11, 1}, {13, 1}, {0, 0}}}, 30, 3.485667},
    {1, 1, {{{2, 25}, {2269, 1}, {0, 0}}},
     {{{3, 14}, {5, 4}, {7, 3}, {11, 2}, {13, 1}, {17, 1}, {0, 0}}}, 34, 1.901053},
    {3, 1, {{{2, 40}, {0, 0}}},
     {{{3, 16}, {5, 6}, {7, 4}, {11, 3}, {13, 2}, {17, 1}, {0, 0}}}, 42, 1.156624},
    {5, 1, {{{2, 40}, {0, 0}}},
     {{{3, 20}, {5, 8}, {7, 6}, {11, 1}, {13, 3}, {17, 1}, {0, 0}}}, 50, 1.029466},
    {7, 1, {{{2, 40}, {0, 0}}},
     {{{3, 23}, {5, 10}, {7, 6}, {11, 2}, {13, 2}, {17, 2}, {0, 0}}}, 58, 1.006025},
    {9, 1, {{{2, 21}, {9413, 1}, {6782351, 1}, {0, 0}}},
     {{{3, 23}, {5, 10}, {7, 8}, {11, 4}, {13, 4}, {17, 2}, {19, 1}, {61, 1}}}, 66, 1.000909},
}};

Rational main_row_rational(const MainRow &row) {
    Rational num(1), den(1);
    for (const auto &f : row.numerator) {
        if (f.prime == 0) break;
        num *= Rational(pow_integer(Integer(f.prime), static_cast<unsigned long>(f.exponent)));
    }
    for (const auto &f : row.denominator) {
        if (f.prime == 0) break;
        den *= Rational(pow_integer(Integer(f.prime), static_cast<unsigned long>(f.exponent)));
    }
    Rational r = num / den;
    return row.sign < 0 ? -r : r;
}

const char *delta_norm = "1.035362056205680432094820996804e-6";
const char *g20_norms[3] = {
    "8.265541531659702744699575969e-6",
    "8.265541531659703390644766954e-6",
    "8.265541531659703069998511729e-6",
};

const long g20_head[4] = {456, 50652, -316352, -2377410};
const long g20_a5_variant = 2377410;
const long h1_head[4] = {-512, -13092, 262144, 6546750};
const long h2_head[4] = {512, -53028, 262144, -5556930};

const std::array<GramClass, 6> f12_classes = {{
    {{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, 1},
    {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, 164},
    {{{6, 0, 1}, {0, 2, 1}, {1, 1, 2}}, 1328},
    {{{4, 0, 0}, {0, 2, 0}, {0, 0, 2}}, -1008},
    {{{4, 2, 2}, {2, 4, 2}, {2, 2, 4}}, -131776},
    {{{4, 0, 0}, {0, 4, 0}, {0, 0, 4}}, -6816512},
}};

}  // namespace f12::reference
