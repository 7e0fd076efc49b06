// Reference pair lists of the permutahedron diagonal, as ordered partitions.
#pragma once

#include <string>
#include <vector>

namespace operahedra::tables {

struct Entry {
  std::string left, right;
  bool blue;  // also in the image for the associahedron
};

inline const std::vector<Entry> dim1 = {{"1|2", "12", true}, {"12", "2|1", true}};

inline const std::vector<Entry> dim2 = {
    {"1|2|3", "123", true}, {"123", "3|2|1", true}, {"12|3", "2|13", true},  {"13|2", "3|12", false},
    {"2|13", "23|1", true}, {"1|23", "13|2", false}, {"12|3", "23|1", true}, {"1|23", "3|12", true},
};

inline const std::vector<Entry> dim3 = {
    {"1|2|3|4", "1234", true},   {"1234", "4|3|2|1", true},   {"12|3|4", "2|134", true},   {"134|2", "4|3|12", false},
    {"12|3|4", "23|14", true},   {"14|23", "4|3|12", false},  {"2|13|4", "23|14", true},   {"14|23", "4|13|2", false},
    {"13|2|4", "3|124", false},  {"124|3", "4|2|13", false},  {"1|23|4", "3|124", true},   {"124|3", "4|23|1", false},
    {"1|2|34", "124|3", false},  {"3|124", "34|2|1", true},   {"1|3|24", "134|2", false},  {"2|134", "24|3|1", false},
    {"1|23|4", "134|2", false},  {"2|134", "4|23|1", true},   {"2|3|14", "234|1", true},   {"1|234", "14|3|2", false},
    {"2|13|4", "234|1", true},   {"1|234", "4|13|2", false},  {"12|3|4", "234|1", true},   {"1|234", "4|3|12", true},
    {"1|24|3", "14|23", false},  {"23|14", "3|24|1", true},   {"1|2|34", "14|23", false},  {"23|14", "34|2|1", true},
    {"1|23|4", "13|24", false},  {"24|13", "4|23|1", false},  {"14|2|3", "4|123", false},  {"123|4", "3|2|14", true},
    {"1|24|3", "4|123", false},  {"123|4", "3|24|1", true},   {"1|2|34", "4|123", true},   {"123|4", "34|2|1", true},
    {"3|14|2", "34|12", false},  {"12|34", "2|14|3", false},  {"1|3|24", "34|12", true},   {"12|34", "24|3|1", false},
    {"13|4|2", "34|12", false},  {"12|34", "2|4|13", true},   {"1|23|4", "34|12", true},   {"12|34", "4|23|1", true},
    {"2|14|3", "24|13", false},  {"13|24", "3|14|2", false},  {"12|4|3", "24|13", false},  {"13|24", "3|4|12", false},
    {"1|2|34", "24|13", false},  {"13|24", "34|2|1", false},
};

// Pairs listed as exceptions to the tp <= bm description.
inline const std::vector<Entry> dim3_exceptions = {
    {"12|34", "2|4|13", true},  {"12|34", "24|3|1", false}, {"1|2|34", "24|13", false}, {"12|4|3", "24|13", false},
    {"13|24", "3|4|12", false}, {"13|24", "34|2|1", false}, {"1|3|24", "34|12", true},  {"13|4|2", "34|12", false},
};

inline const std::vector<long long> permutahedron_counts = {1, 2, 8, 50, 432, 4802, 65536};

}  // namespace operahedra::tables
