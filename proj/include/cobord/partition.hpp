#pragma once

#include <string>
#include <vector>

namespace cobord {

// Finite integer sequences: partitions are weakly decreasing nonnegative,
// index vectors are arbitrary nonnegative sequences.
using IndexVec = std::vector<int>;

inline bool is_partition(const IndexVec& v)
{
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            return false;
        if (i + 1 < v.size() && v[i] < v[i + 1])
            return false;
    }
    return true;
}

inline int weight(const IndexVec& v)
{
    int s = 0;
    for (int x : v)
        s += x;
    return s;
}

inline int nonzero_length(const IndexVec& v)
{
    int l = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            l = static_cast<int>(i) + 1;
    return l;
}

// rho_n = (n, n-1, ..., 1)
inline IndexVec staircase(int n)
{
    IndexVec v;
    for (int i = n; i >= 1; --i)
        v.push_back(i);
    return v;
}

// (2q-1, 2q-3, ..., 3, 1)
inline IndexVec odd_staircase(int q)
{
    IndexVec v;
    for (int i = 2 * q - 1; i >= 1; i -= 2)
        v.push_back(i);
    return v;
}

inline IndexVec padded(IndexVec v, size_t len)
{
    v.resize(std::max(v.size(), len), 0);
    return v;
}

// All partitions fitting in the box rows x cols (inclusive), empty first.
std::vector<IndexVec> partitions_in_box(int rows, int cols);

// All exponent vectors of total degree <= d in k variables.
std::vector<IndexVec> monomials_up_to(int k, int d);

std::string index_to_string(const IndexVec& v);
IndexVec index_from_string(const std::string& text);

} // namespace cobord
