#pragma once

// Reference data transcribed from the published tables.

#include <cctype>
#include <string>
#include <vector>

namespace golden {

// Rows of the n = 4, 5, 6 decomposition table, cells separated by "&".
inline const std::vector<std::string> kTableRows = {
    "4 & 1 & 0 & - & - & 0  &- &- &0   &- & -&  &   [1,1] &   & 3",
    "4 & 2 & 0 & - & - & 0  &- &- &0   &- & -&   [2,1], [3,1] &  &   & 6",
    "4 & 3 & 0 & - & - & 1  &- &- &0   &- & -&  &   [3,1] & [(0,1),1]  & 10",
    "4 & 4 & 0 & - & - & 0  &- &- &1   &- & -&   [1,1], [2,1] &  & [(0,1),1]  & 14",
    "4 & 5 & 0 & - & - & 0  &- &- &0   &- & -&   [1,1] &   [1,1], [2,1], [3,1] & [(0,1),1]  & 18",
    "4 & 6 & 1 & - & - & 0  &- &- &0   &- & -&   [1,1], [2,1], [3,1] &   [2,1], [3,1] & [(0,1),1]  & 22",
    "4 & 7 & 0 & - & - & 0  &- &- &1   &- & -&   [3,1] &   [1,1], [2,1], [3,1] & [(0,1),2]  & 26",
    "4 & 8 & 1 & - & - & 0  &- &- &1   &- & -&   [1,1], [2,1], [3,1] &   [1,1], [2,1] & [(0,1),2]  & 30",
    "4 & 9 & 0 & - & - & 1  &- &- &0   &- & -&   [1,1], [2,1], [3,1] &   [1,2], [2,1], [3,1] & [(0,1),2]  & 34",
    "4 & 10 & 0 & - & - & 0  &- &- &1   &- & -&   [1,1], [2,2], [3,2] &   [1,1], [2,1], [3,1] & [(0,1),2]  & 38",
    "4 & 11 & 0 & - & - & 1  &- &- &1   &- & -&   [1,1], [2,1], [3,1] &   [1,1], [2,1], [3,2] & [(0,1),3]  & 42",
    "4 & 12 & 1 & - & - & 1  &- &- &1   &- & -&   [1,2], [2,2], [3,1] &   [1,1], [2,1], [3,1] & [(0,1),3]  & 46",
    "4 & 13 & 0 & - & - & 0  &- &- &1   &- & -&   [1,2], [2,1], [3,1] &   [1,2], [2,2], [3,2] & [(0,1),3]  & 50",
    "5 & 1 & 0 & - & - & 0  &- &- &0   &- & -&  &   [1,1], [2,1] &   & 6",
    "5 & 2 & 0 & - & - & 0  &- &- &0   &- & -&   [2,1], [3,1], [4,1] &  & [(0,2),1]  & 15",
    "5 & 3 & 0 & - & - & 1  &- &- &0   &- & -&   [3,1] &   [1,1], [3,1], [4,1] & [(0,1),1], [(0,2),1]  & 25",
    "5 & 4 & 0 & - & - & 0  &- &- &1   &- & -&   [1,1], [2,1], [3,1], [4,1] &   [4,1] & [(0,1),2], [(0,2),1]  & 35",
    "5 & 5 & 0 & - & - & 1  &- &- &1   &- & -&   [1,1], [2,1] &   [1,1], [2,1], [3,1], [4,1] & [(0,1),2], [(0,2),2]  & 45",
    "5 & 6 & 1 & - & - & 0  &- &- &0   &- & -&   [1,2], [2,2], [3,1], [4,1] &   [1,1], [2,1], [3,1], [4,1] & [(0,1),2], [(0,2),2]  & 55",
    "5 & 7 & 0 & - & - & 0  &- &- &1   &- & -&   [1,1], [2,1], [3,1], [4,1] &   [1,1], [2,2], [3,2], [4,2] & [(0,1),2], [(0,2),3]  & 65",
    "5 & 8 & 1 & - & - & 0  &- &- &1   &- & -&   [1,2], [2,1], [3,2], [4,2] &   [1,1], [2,1], [3,2], [4,1] & [(0,1),3], [(0,2),3]  & 75",
    "5 & 9 & 1 & - & - & 1  &- &- &1   &- & -&   [1,1], [2,1], [3,1], [4,2] &   [1,2], [2,2], [3,2], [4,2] & [(0,1),4], [(0,2),3]  & 85",
    "5 & 10 & 1 & - & - & 0  &- &- &2   &- & -&   [1,2], [2,2], [3,2], [4,2] &   [1,2], [2,2], [3,1], [4,1] & [(0,1),4], [(0,2),4]  & 95",
    "5 & 11 & 0 & - & - & 1  &- &- &1   &- & -&   [1,2], [2,2], [3,2], [4,2] &   [1,3], [2,3], [3,2], [4,2] & [(0,1),4], [(0,2),4]  & 105",
    "5 & 12 & 1 & - & - & 1  &- &- &1   &- & -&   [1,2], [2,3], [3,3], [4,3] &   [1,2], [2,2], [3,2], [4,2] & [(0,1),4], [(0,2),5]  & 115",
    "5 & 13 & 0 & - & - & 1  &- &- &2   &- & -&   [1,2], [2,2], [3,3], [4,2] &   [1,3], [2,2], [3,3], [4,3] & [(0,1),5], [(0,2),5]  & 125",
    "6 & 1 & 0 & 0 & 0 & 0 & 1 & 0 & 0 & 0 & 0 & &   [1,1] & [(1,2),1]  & 10",
    "6 & 2 & 0 & 0 & 0 & 0 & 0 & 1 & 1 & 0 & 0 &  [3,1], [5,1] &  & [(0,2),1], [(1,2),1], [(3,4),1]  & 27",
    "6 & 3 & 0 & 1 & 0 & 0 & 0 & 0 & 0 & 0 & 1 &  [3,1] &   [1,1], [3,1], [5,1] & [(0,1),1], [(0,2),1], [(1,2),1], [(3,4),2]  & 45",
    "6 & 4 & 0 & 0 & 1 & 1 & 0 & 0 & 1 & 0 & 1 &  [1,1], [3,1], [5,1] &   [1,1], [5,1] & [(0,1),2], [(0,2),2], [(1,2),1], [(3,4),2]  & 63",
    "6 & 5 & 0 & 1 & 1 & 0 & 0 & 1 & 0 & 1 & 0 &  [1,1], [3,1], [5,1] &   [1,1], [3,1], [5,2] & [(0,1),3], [(0,2),2], [(1,2),2], [(3,4),2]  & 81",
    "6 & 6 & 1 & 1 & 1 & 1 & 0 & 1 & 0 & 0 & 1 &  [1,2], [3,2], [5,1] &   [1,1], [3,1], [5,1] & [(0,1),3], [(0,2),3], [(1,2),3], [(3,4),2]  & 99",
    "6 & 7 & 0 & 0 & 1 & 1 & 1 & 1 & 0 & 1 & 1 &  [1,2], [3,1], [5,1] &   [1,2], [3,2], [5,2] & [(0,1),3], [(0,2),3], [(1,2),4], [(3,4),3]  & 117",
    "6 & 8 & 1 & 0 & 1 & 1 & 0 & 2 & 1 & 1 & 1 &  [1,2], [3,2], [5,2] &   [1,1], [3,2], [5,2] & [(0,1),3], [(0,2),4], [(1,2),4], [(3,4),4]  & 135",
    "6 & 9 & 1 & 1 & 1 & 0 & 1 & 1 & 0 & 1 & 2 &  [1,2], [3,2], [5,2] &   [1,2], [3,3], [5,2] & [(0,1),4], [(0,2),4], [(1,2),4], [(3,4),5]  & 153",
};

struct SeriesRow {
  int kappa;
  int lambda;
  const char* rho;
  const char* num;
  const char* den;
};

// Isotypic Hilbert series for n = 6, as printed (not necessarily reduced).
inline const std::vector<SeriesRow> kSeriesN6 = {
    {0, 0, "triv", "t^14 - t^13 + t^8 - t^7 + t^6 - t + 1", "t^13 - t^12 - t + 1"},
    {0, 0, "sgn", "t^11 - t^10 + t^9 - t^7 + t^5 - t^4 + t^3", "t^13 - t^12 - t + 1"},
    {0, 0, "stan", "t^4", "t^7 - t^6 - t + 1"},
    {2, 2, "triv", "t^12 - t^11 + t^10 - t^9 + t^6 - t^5 + t^4", "t^13 - t^12 - t + 1"},
    {2, 2, "sgn", "t^9 - t^8 + t^7 - t^2 + t", "t^13 - t^12 - t + 1"},
    {2, 2, "stan", "t^5 - t^3 + t^2", "t^7 - t^6 - t + 1"},
    {4, 4, "triv", "t^10 - t^9 + t^8 - t^5 + t^4 - t^3 + t^2", "t^13 - t^12 - t + 1"},
    {4, 4, "sgn", "t^13 - t^12 + t^7 - t^6 + t^5", "t^13 - t^12 - t + 1"},
    {4, 4, "stan", "t^6 - t^5 + t^3", "t^7 - t^6 - t + 1"},
    {1, 1, "triv", "t^12 - t^11 + t^10 + t^6 + t^4", "t^13 - t^12 - t + 1"},
    {1, 1, "sgn", "t^11 + t^9 - t^8 + t^7 + t^3 - t^2 + t", "t^13 - t^12 - t + 1"},
    {3, 3, "triv", "t^12 + t^8 - t^7 + t^6 + t^2", "t^13 - t^12 - t + 1"},
    {3, 3, "sgn", "t^11 - t^10 + t^9 + t^7 + t^5 - t^4 + t^3", "t^13 - t^12 - t + 1"},
    {5, 5, "triv", "t^10 + t^8 + t^4 - t^3 + t^2", "t^13 - t^12 - t + 1"},
    {5, 5, "sgn", "t^13 - t^12 + t^11 + t^7 - t^6 + t^5 + t^3", "t^13 - t^12 - t + 1"},
    {0, 1, "triv", "t^3", "t^5 - 2t^4 + t^3 + t^2 - 2t + 1"},
    {0, 2, "triv", "t^2", "t^3 - t^2 - t + 1"},
    {1, 2, "triv", "t^4 - t^2 + t", "t^5 - 2t^4 + t^3 + t^2 - 2t + 1"},
    {3, 4, "triv", "t^5 - t^4 + t^2", "t^5 - 2t^4 + t^3 + t^2 - 2t + 1"},
};

inline const char* kWeightedTotalN6 = "(t^3+8t^2+8t+1)/(t^2-2t+1)";
inline const std::vector<long> kWeightedTaylorN6 = {1,   10,  27,  45,  63,  81,  99,  117, 135, 153,
                                                    171, 189, 207, 225, 243, 261, 279, 297, 315, 333};

// Ascending integer coefficients of a polynomial written like "t^5 - 2t^4 + t + 1".
inline std::vector<long> parse_poly(const std::string& text) {
  std::vector<long> out;
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    long coeff = 1;
    bool has_digits = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coeff = std::stol(s.substr(start, pos - start));
      has_digits = true;
    }
    long degree = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        degree = std::stol(s.substr(start, pos - start));
      }
    } else if (!has_digits) {
      break;
    }
    if (static_cast<long>(out.size()) <= degree) out.resize(static_cast<std::size_t>(degree) + 1, 0);
    out[static_cast<std::size_t>(degree)] += sign * coeff;
  }
  return out;
}

}  // namespace golden
