#include "sgpart/partitions.hpp"

#include <algorithm>
#include <string>

namespace sgpart {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (Int p : parts_) {
        if (p < 1) throw InvalidInput("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.rbegin(), parts_.rend());
    for (Int p : parts_) sum_ = checked_add(sum_, p);
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const auto& parts = p.parts();
    // Column i of the Young diagram has one cell per part >= i+1.
    std::vector<Int> out(static_cast<std::size_t>(parts.front()), 0);
    for (Int part : parts) {
        for (Int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
    }
    return Partition(std::move(out));
}

bool is_flat(const Partition& p, const MembershipTable& table) {
    const auto& parts = p.parts();
    if (!parts.empty() && parts.front() > table.bound())
        throw BoundTooSmall("table bound " + std::to_string(table.bound()) +
                            " is below largest part " + std::to_string(parts.front()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!table.contains(parts[i])) return false;
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (!table.contains(parts[i] - parts[j])) return false;
        }
    }
    return true;
}

bool is_flat_adjacent(const Partition& p, const MembershipTable& table) {
    const auto& parts = p.parts();
    if (parts.empty()) return true;
    if (parts.front() > table.bound())
        throw BoundTooSmall("table bound " + std::to_string(table.bound()) +
                            " is below largest part " + std::to_string(parts.front()));
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!table.contains(parts[i] - parts[i + 1])) return false;
    }
    return table.contains(parts.back());
}

bool is_mult(const Partition& p, const MembershipTable& table) {
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!table.contains(static_cast<Int>(j - i))) return false;
        i = j;
    }
    return true;
}

bool is_div(const Partition& p, const GeneratorSet& gens) {
    for (Int part : p.parts()) {
        bool divisible = false;
        for (Int g : gens.gens()) {
            if (part % g == 0) {
                divisible = true;
                break;
            }
        }
        if (!divisible) return false;
    }
    return true;
}

namespace {

using EmitFn = std::function<void(std::span<const Int>)>;

// Parts are chosen largest-first, so emission is in decreasing
// lexicographic order for all three enumerators below.

// Flat family via the adjacent-difference characterization: each part must
// differ from its predecessor by a member, and the final part must itself be
// a member.  smin is the smallest positive member; every part is >= smin.
void enumerate_flat(const MembershipTable& table, Int smin, Int prev, Int remaining,
                    std::vector<Int>& buf, const EmitFn& emit) {
    const Int top = prev < 0 ? remaining : std::min(prev, remaining);
    for (Int v = top; v >= smin; --v) {
        if (prev >= 0 && !table.contains(prev - v)) continue;
        const Int rest = remaining - v;
        if (rest == 0) {
            if (table.contains(v)) {
                buf.push_back(v);
                emit(buf);
                buf.pop_back();
            }
        } else if (rest >= smin) {
            buf.push_back(v);
            enumerate_flat(table, smin, v, rest, buf, emit);
            buf.pop_back();
        }
    }
}

// Mult family by distinct part value: pick values strictly downward, each
// with a multiplicity that is a member.  A later value contributes at least
// 1 * smin, which gives the rest >= smin prune.
void enumerate_mult(const MembershipTable& table, Int smin, Int prev_value, Int remaining,
                    std::vector<Int>& buf, const EmitFn& emit) {
    for (Int v = std::min(prev_value - 1, remaining); v >= 1; --v) {
        for (Int mu = remaining / v; mu >= 1; --mu) {
            if (!table.contains(mu)) continue;
            const Int rest = remaining - mu * v;
            if (rest != 0 && (v == 1 || rest < smin)) continue;
            buf.insert(buf.end(), static_cast<std::size_t>(mu), v);
            if (rest == 0) {
                emit(buf);
            } else {
                enumerate_mult(table, smin, v, rest, buf, emit);
            }
            buf.resize(buf.size() - static_cast<std::size_t>(mu));
        }
    }
}

// Div family: ordinary partition recursion restricted to the ascending list
// of values divisible by some generator.
void enumerate_div(const std::vector<Int>& values, Int max_part, Int remaining,
                   std::vector<Int>& buf, const EmitFn& emit) {
    const Int cap = std::min(max_part, remaining);
    const Int vmin = values.front();
    auto it = std::upper_bound(values.begin(), values.end(), cap);
    while (it != values.begin()) {
        --it;
        const Int v = *it;
        const Int rest = remaining - v;
        if (rest != 0 && rest < vmin) continue;
        buf.push_back(v);
        if (rest == 0) {
            emit(buf);
        } else {
            enumerate_div(values, v, rest, buf, emit);
        }
        buf.pop_back();
    }
}

}  // namespace

void for_each_in_family(Int n, const GeneratorSet& gens, Family family, const EmitFn& emit) {
    if (n < 0) throw InvalidInput("partition size must be non-negative, got " + std::to_string(n));
    std::vector<Int> buf;
    if (n == 0) {
        emit(buf);
        return;
    }
    switch (family) {
        case Family::flat: {
            const MembershipTable table(gens, n);
            enumerate_flat(table, gens.min_gen(), -1, n, buf, emit);
            return;
        }
        case Family::mult: {
            const MembershipTable table(gens, n);
            enumerate_mult(table, gens.min_gen(), n + 1, n, buf, emit);
            return;
        }
        case Family::div: {
            std::vector<Int> values;
            for (Int v = 1; v <= n; ++v) {
                for (Int g : gens.gens()) {
                    if (v % g == 0) {
                        values.push_back(v);
                        break;
                    }
                }
            }
            if (!values.empty()) enumerate_div(values, n, n, buf, emit);
            return;
        }
    }
    throw InvalidInput("unknown family");
}

Int count_family(Int n, const GeneratorSet& gens, Family family) {
    Int count = 0;
    for_each_in_family(n, gens, family,
                       [&](std::span<const Int>) { count = checked_add(count, 1); });
    return count;
}

std::vector<Partition> family_partitions(Int n, const GeneratorSet& gens, Family family) {
    std::vector<Partition> out;
    for_each_in_family(n, gens, family, [&](std::span<const Int> parts) {
        out.emplace_back(std::vector<Int>(parts.begin(), parts.end()));
    });
    return out;
}

}  // namespace sgpart
