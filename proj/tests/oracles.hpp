// Brute-force reference implementations, kept independent of the library so
// that tests compare two separately written routes.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

#include "sgpart/checked.hpp"

namespace oracles {

using sgpart::Int;

// True iff k is a non-negative integer combination of gens, by plain
// recursion on the smallest summand.
inline bool can_represent(Int k, const std::vector<Int>& gens) {
    if (k == 0) return true;
    if (k < 0) return false;
    for (Int g : gens)
        if (g <= k && can_represent(k - g, gens)) return true;
    return false;
}

inline void collect_partitions(Int n, Int max_part, std::vector<Int>& prefix,
                               std::vector<std::vector<Int>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (Int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        collect_partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

// All partitions of n as weakly decreasing part lists, in decreasing
// lexicographic order.
inline std::vector<std::vector<Int>> all_partitions(Int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> prefix;
    collect_partitions(n, n, prefix, out);
    return out;
}

// Conjugate through the Young diagram itself: count cells column by column.
inline std::vector<Int> conjugate_by_grid(const std::vector<Int>& parts) {
    std::vector<Int> out;
    if (parts.empty()) return out;
    const Int width = *std::max_element(parts.begin(), parts.end());
    for (Int col = 1; col <= width; ++col) {
        Int cells = 0;
        for (Int p : parts)
            if (p >= col) ++cells;
        out.push_back(cells);
    }
    return out;
}

// The three family predicates, straight from their definitions.
inline bool flat_by_definition(const std::vector<Int>& parts, const std::vector<Int>& gens) {
    for (Int p : parts)
        if (!can_represent(p, gens)) return false;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if (!can_represent(std::abs(parts[a] - parts[b]), gens)) return false;
    return true;
}

inline bool mult_by_definition(const std::vector<Int>& parts, const std::vector<Int>& gens) {
    std::map<Int, Int> multiplicity;
    for (Int p : parts) ++multiplicity[p];
    for (const auto& [value, count] : multiplicity) {
        (void)value;
        if (!can_represent(count, gens)) return false;
    }
    return true;
}

inline bool div_by_definition(const std::vector<Int>& parts, const std::vector<Int>& gens) {
    for (Int p : parts) {
        bool divisible = false;
        for (Int g : gens)
            if (p % g == 0) divisible = true;
        if (!divisible) return false;
    }
    return true;
}

}  // namespace oracles
