#pragma once

// Reference values produced by tests/oracle/oracle.py (Fraction arithmetic,
// generic determinant expansion) and frozen here.

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct CastelnuovoCase {
  int g, r, d;
  std::vector<int> alpha, beta;
  const char* value;
};

inline const std::vector<CastelnuovoCase> castelnuovo_cases = {
    {2, 1, 2, {0, 0}, {0, 0}, "1"},
    {0, 1, 1, {0, 0}, {0, 0}, "1"},
    {2, 1, 3, {0, 1}, {0, 1}, "2"},
    {4, 1, 4, {0, 1}, {0, 1}, "5"},
    {6, 1, 4, {0, 0}, {0, 0}, "5"},
    {4, 1, 4, {1, 2}, {0, 1}, "7/15"},
    {5, 1, 5, {0, 2}, {1, 1}, "3/2"},
    {3, 2, 5, {0, 0, 0}, {0, 0, 0}, "6"},
    {6, 2, 6, {0, 0, 1}, {0, 1, 1}, "5/12"},
    {0, 1, 2, {1, 1}, {1, 1}, "1/2"},
};

struct GenusData {
  int g, k;
  std::vector<std::pair<int, long>> T;
  std::vector<std::pair<std::pair<int, int>, long>> D;
  std::vector<std::pair<int, long>> S16;
  long n_top, m_top, ell, N4;  // n/m_{g-2,k,(0,1)}, ell_{g-2,k}, N_{g-4,k,(0,1),(0,1)}
};

inline const std::vector<GenusData> genus_data = {
    {6, 3, {{2, 144}, {3, 576}}, {{{2, 2}, 72}, {{2, 3}, 144}}, {{3, 192}}, 24, 264, 6, 2},
    {8,
     4,
     {{2, 540}, {3, 2880}, {4, 4176}},
     {{{2, 2}, 180}, {{2, 3}, 432}, {{2, 4}, 648}, {{2, 5}, 720}, {{3, 3}, 1152}, {{3, 4}, 2016}},
     {{4, 1188}, {5, 1680}},
     90,
     1530,
     20,
     5},
    {10,
     5,
     {{2, 2016}, {3, 12096}, {4, 23760}, {5, 28800}},
     {{{2, 2}, 504},
      {{2, 3}, 1296},
      {{2, 4}, 2160},
      {{2, 5}, 2880},
      {{2, 6}, 3240},
      {{2, 7}, 3024},
      {{3, 3}, 3456},
      {{3, 4}, 6048},
      {{3, 5}, 8640},
      {{3, 6}, 10800},
      {{4, 4}, 11232},
      {{4, 5}, 17280}},
     {{5, 6720}, {6, 9180}, {7, 10080}},
     336,
     7728,
     70,
     14},
};

inline const std::vector<std::pair<const char*, const char*>> closed_form_k4 = {
    {"k1^2", "65/288"},      {"d0^2", "-65/288"},     {"k2", "-3"},            {"d1^2", "-929/288"},
    {"ld0", "-31/12"},       {"ld1", "-307/12"},      {"ld2", "-475/12"},      {"om(2)", "-511/288"},
    {"om(3)", "-10879/288"}, {"om(4)", "-16639/288"}, {"om(5)", "-14911/288"}, {"om(6)", "-7135/288"},
    {"la(3)", "245/12"},     {"la(4)", "-199/12"},    {"la(5)", "-439/12"},    {"th(1)", "2"},
    {"th(2)", "-5"},         {"th(3)", "-11"},        {"d(0,0)", "1"},         {"d(0,1)", "511/144"},
    {"d(0,2)", "799/144"},   {"d(0,3)", "799/144"},   {"d(0,4)", "511/144"},   {"d(0,5)", "-65/144"},
    {"d(0,6)", "3563/720"},  {"d(0,7)", "235/144"},   {"d(1,1)", "23"},        {"d(1,2)", "3823/144"},
    {"d(1,3)", "4255/144"},  {"d(1,4)", "3679/144"},  {"d(1,5)", "2095/144"},  {"d(1,6)", "13931/720"},
    {"d(2,2)", "6415/144"},  {"d(2,3)", "7711/144"},  {"d(2,4)", "7711/144"},  {"d(2,5)", "6415/144"},
    {"d(3,3)", "10303/144"}, {"d(3,4)", "12031/144"},
};

inline const std::vector<std::pair<const char*, const char*>> closed_form_k5_sample = {
    {"k1^2", "19/48"},    {"k2", "-5"},          {"ld2", "-197/2"},    {"om(5)", "-10781/48"},
    {"la(7)", "-233/2"},  {"th(4)", "-50"},      {"d(0,0)", "2"},      {"d(0,8)", "1489/120"},
    {"d(0,9)", "31/8"},   {"d(1,8)", "5953/120"}, {"d(4,5)", "8621/24"}, {"d(1,1)", "52"},
};

}  // namespace oracle
