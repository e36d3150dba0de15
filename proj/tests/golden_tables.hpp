#pragma once

// Rows of the reference tables for q = 2 and q = 3, as printed. Entries
// with a '*' are printed as factorizations.

#include <cstdint>
#include <string>
#include <vector>

struct GoldenEntry {
  std::uint64_t index;
  std::string count;
};

struct GoldenRow {
  std::uint64_t q;
  unsigned n;
  std::vector<std::uint64_t> zeros;
  std::vector<GoldenEntry> entries;
};

inline const std::vector<GoldenRow> &golden_rows() {
  static const std::vector<GoldenRow> rows = {
      {2, 6, {1}, {{1, "0"}, {9, "9"}, {21, "42"}}},
      {2, 6, {1, 3}, {{1, "2"}, {3, "18"}, {7, "84"}, {9, "99"}, {21, "124194"}}},
      {2, 6, {1, 3, 5}, {{1, "6"}, {3, "36"}, {7, "168"}, {9, "1287"}, {21, "5468988"}}},
      {2, 8, {1}, {{1, "0"}, {17, "17"}, {85, "510"}}},
      {2, 8, {1, 3}, {{1, "2"}, {17, "357"}, {85, "220697910"}}},
      {2, 8, {1, 3, 5}, {{1, "6"}, {17, "190961"}, {51, "150417870"}, {85, "116749194390"}}},
      {2, 9, {1}, {{1, "0"}, {73, "146"}}},
      {2, 9, {1, 3}, {{1, "2"}, {73, "21900"}}},
      {2, 9, {1, 3, 5}, {{1, "6"}, {73, "3241784"}}},
      {2, 10, {1}, {{1, "0"}, {33, "33"}, {341, "12276"}}},
      {2, 10, {1, 3}, {{1, "2"}, {11, "66"}, {33, "1155"}, {341, "2820939318120"}}},
      {2, 10, {1, 3, 5}, {{1, "6"}, {11, "132"}, {33, "42735"}, {341, "34635492948736680"}}},
      {2, 12, {1}, {{1, "0"}, {65, "65"}, {273, "546"}, {585, "5910"}, {1365, "565721"}}},
      {2, 12, {1, 3}, {{1, "2"}, {65, "4485"}, {91, "1092"}, {195, "391950"}, {273, "299208"}, {455, "37897860"}, {585, "34614450"}, {1365, "276172787737667730"}}},
      {2, 12, {1, 3, 5}, {{1, "6"}, {13, "260"}, {65, "300495"}, {91, "73164"}, {117, "23400"}, {195, "26260650"}, {273, "169888806360"}, {455, "2539156620"}, {585, "207132845400"}, {819, "146601246105077400"}, {1365, "156237298018977998951310"}}},
      {2, 14, {1}, {{1, "0"}, {129, "129"}, {5461, "51409854"}}},
      {2, 14, {1, 3}, {{1, "2"}, {43, "258"}, {129, "16899"}, {5461, "209432100625503796112058"}}},
      {2, 14, {1, 3, 5}, {{1, "6"}, {43, "516"}, {129, "2247567"}, {5461, "10766874134934660085587731025396"}}},
      {2, 15, {1}, {{1, "0"}, {1057, "2114"}, {4681, "617892"}}},
      {2, 15, {1, 3}, {{1, "2"}, {1057, "4477452"}, {4681, "381792995232"}}},
      {2, 15, {1, 3, 5}, {{1, "6"}, {1057, "9474296888"}, {4681, "235907600998352976"}}},
      {2, 16, {1}, {{1, "0"}, {257, "257"}, {4369, "78642"}, {21845, "9370980720"}}},
      {2, 16, {1, 3}, {{1, "2"}, {257, "67077"}, {4369, "6225300720"}, {21845, "2*3*5*17*257*9632900474097094857135899"}}},
      {2, 16, {1, 3, 5}, {{1, "6"}, {257, "17373971"}, {4369, "58338292825807289442"}, {13107, "838758021781294495526312038290"}, {21845, "2*3*5*7*11*17*59*257*2062747*9632900474097094857135899"}}},
      {2, 18, {1}, {{1, "0"}, {513, "513"}, {4161, "8322"}, {37449, "195118125"}, {87381, "2^3*3*5^2*11*19*73*370091"}}},
      {2, 18, {1, 3}, {{1, "2"}, {171, "1026"}, {513, "264195"}, {1387, "16644"}, {4161, "69272328"}, {12483, "1624093999146"}, {29127, "28200771586760472"}, {37449, "38069459320434786"}, {87381, "2*3^2*5^3*7*19*23*73*911*106077265549*1237940881586443"}}},
      {2, 18, {1, 3, 5}, {{1, "6"}, {171, "2052"}, {513, "136588815"}, {1387, "33288"}, {4161, "576761402928"}, {12483, "13518958457429676"}, {29127, "234743222688194168928"}, {37449, "7428358488736862865257616"}, {87381, "2^2*3^2*5*7*19*73*2382323*2528261*25131697*143372569*5369043671723807"}}},
      {2, 20, {1}, {{1, "0"}, {1025, "1025"}, {33825, "1151070"}, {69905, "36070980"}, {349525, "5*7*41*43*39921132101"}}},
      {2, 20, {1, 3}, {{1, "2"}, {1025, "1054725"}, {11275, "1181101350"}, {33825, "1323796103850"}, {69905, "1301115742444320"}, {349525, "2*3^2*5^2*11*17*19^2*31*41*5113*4182209*188408588933*147641569892759"}}},
      {2, 20, {1, 3, 5}, {{1, "6"}, {205, "4100"}, {1025, "1083202575"}, {6765, "4600200"}, {11275, "1212991086450"}, {13981, "144283920"}, {33825, "1525150786425400200"}, {69905, "3205081938871577654256028295040"}, {209715, "2^3*3*5^2*11*31*37*41*43*908930777956680878604236175349273961"}, {349525, "2*3^2*5^2*11*31*41*89*126963961*795792305106258988205007754270563107304398999"}}},
      {3, 4, {1}, {{1, "0"}, {10, "10"}, {40, "200"}}},
      {3, 4, {1, 2}, {{1, "2"}, {5, "20"}, {10, "120"}, {20, "2400"}, {40, "42400"}}},
      {3, 4, {1, 2, 4}, {{1, "6"}, {5, "280"}, {10, "30240"}, {20, "508800"}, {40, "8988800"}}},
      {3, 6, {1}, {{1, "0"}, {28, "28"}, {91, "182"}, {364, "56630"}}},
      {3, 6, {1, 2}, {{1, "2"}, {14, "56"}, {28, "840"}, {91, "33852"}, {182, "10386376"}, {364, "3196762296"}}},
      {3, 6, {1, 2, 4}, {{1, "6"}, {7, "112"}, {14, "1680"}, {28, "25200"}, {91, "1917332872"}, {182, "588204415344"}, {364, "181039089892752"}}},
      {3, 8, {1}, {{1, "0"}, {82, "82"}, {820, "9020"}, {3280, "127893760"}}},
      {3, 8, {1, 2}, {{1, "2"}, {41, "164"}, {82, "6888"}, {410, "757680"}, {820, "82118080"}, {1640, "1164344791040"}, {3280, "16357978191728640"}}},
      {3, 8, {1, 2, 4}, {{1, "6"}, {41, "14104"}, {82, "578592"}, {205, "1515360"}, {410, "6960048480"}, {820, "10600942580628480"}, {1640, "148923033457497538560"}, {3280, "2092232259971634166824960"}}},
      {3, 9, {1}, {{1, "0"}, {757, "1514"}, {9841, "13721227572"}}},
      {3, 9, {1, 2}, {{1, "2"}, {757, "2298252"}, {9841, "188272127685375013488"}}},
      {3, 9, {1, 2, 4}, {{1, "6"}, {757, "3484156088"}, {9841, "2583324994856249282153532653376"}}},
      {3, 10, {1}, {{1, "0"}, {244, "244"}, {7381, "1225246"}, {29524, "2*3^2*17*61*136334867"}}},
      {3, 10, {1, 2}, {{1, "2"}, {122, "488"}, {244, "60024"}, {7381, "1501232661500"}, {14762, "3118042234365339160"}, {29524, "2^3*5^2*11^2*61*105542903*41566356211"}}},
      {3, 10, {1, 2, 4}, {{1, "6"}, {61, "976"}, {122, "120048"}, {244, "14765904"}, {7381, "3820376850953979715484712"}, {14762, "2^4*3^2*7*11^2*19*61*71*191*4139226000747340297"}, {29524, "2^4*11^2*19*61*10103*16361*239527*40363307*4596044119"}}},
      {3, 12, {1}, {{1, "0"}, {730, "730"}, {6643, "13286"}, {20440, "593480"}, {66430, "540023486"}, {265720, "2*3^3*8378452950363007"}}},
      {3, 12, {1, 2}, {{1, "2"}, {365, "1460"}, {730, "534360"}, {6643, "176570940"}, {10220, "433900320"}, {20440, "351798317920"}, {33215, "7175655536140"}, {66430, "291618191759043240"}, {132860, "2^5*3*5*7*13*73*76623988461520162739"}, {265720, "2^5*5*7*13*73*192588767759642498898919144667"}}},
      {3, 12, {1, 2, 4}, {{1, "6"}, {365, "1071640"}, {730, "391151520"}, {5110, "317615034240"}, {6643, "2346274703864"}, {10220, "257516368717440"}, {20440, "208789487298976640"}, {33215, "3875117882212049705960"}, {66430, "2^5*3*5*7*11*13*19*73*190845833*918851623*1129023677"}, {132860, "2^7*3^3*5^3*7*13*19*73*2027338364818403272678960130077589"}, {265720, "2^7*5^2*7*13*31*73*181757219444968838257*773223758237056637579813"}}},
      {3, 15, {1}, {{1, "0"}, {59293, "118586"}, {551881, "806850022"}, {7174453, "2*179*4561*357509*3559979471071921"}}},
      {3, 15, {1, 2}, {{1, "2"}, {59293, "14063113740"}, {551881, "651006961228800572"}, {7174453, "2^2*5*11^2*13*367*4561*101209*822407*100842919*9770548580137061374107091"}}},
      {3, 15, {1, 2, 4}, {{1, "6"}, {59293, "1667716532673464"}, {551881, "525264982291624814236813816"}, {7174453, "2^3*11^2*13*521*4561*9993125731*152373840083*4006805689324561*13019832459914677*3778337670974685409"}}},
  };
  return rows;
}

// Simplex rows whose printed entries at these indices count subspaces of a
// larger subfield twice. Values are the sizes of the subfield-lattice
// strata, computed outside this code base.
struct GoldenCorrection {
  std::uint64_t q;
  unsigned n;
  std::uint64_t index;
  std::string count;
};

inline const std::vector<GoldenCorrection> &golden_corrections() {
  static const std::vector<GoldenCorrection> rows = {
      {2, 12, 585, "5850"},
      {2, 12, 1365, "565110"},
      {2, 18, 37449, "195109290"},
      {2, 18, 87381, "3387887023878"},
      {2, 20, 33825, "1150050"},
      {2, 20, 349525, "2463333420220200"},
      {3, 6, 364, "56420"},
      {3, 10, 29524, "2544825401932"},
      {3, 12, 20440, "592760"},
      {3, 12, 66430, "540009470"},
      {3, 12, 265720, "452436458777921800"},
      {3, 15, 7174453, "2078153254879878944085892574"},
  };
  return rows;
}
