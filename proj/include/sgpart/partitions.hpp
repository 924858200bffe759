#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sgpart/checked.hpp"
#include "sgpart/semigroup.hpp"

namespace sgpart {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is the unique partition of 0.  Parts may be passed in any order; they are
// sorted on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<Int> parts_;
    Int sum_ = 0;
};

// Transpose of the Young diagram: part i of the result counts the parts of p
// that are >= i.
Partition conjugate(const Partition& p);

// Family "flat": every part and every pairwise difference of parts lies in
// the semigroup.  Throws BoundTooSmall if the table is shorter than the
// largest part.
bool is_flat(const Partition& p, const MembershipTable& table);

// The same family through the adjacent-difference characterization: each
// difference of neighbouring parts, and the smallest part, lies in the
// semigroup.  Agrees with is_flat because the member set is closed under
// addition.
bool is_flat_adjacent(const Partition& p, const MembershipTable& table);

// Family "mult": the multiplicity of every distinct part value lies in the
// semigroup.
bool is_mult(const Partition& p, const MembershipTable& table);

// Family "div": every part is divisible by at least one generator.
bool is_div(const Partition& p, const GeneratorSet& gens);

enum class Family { flat, mult, div };

// Visits every member of the chosen family of partitions of n, in decreasing
// lexicographic order of part lists.  Generation is pruned recursion over
// the family's structure, not a filter over all partitions.  The span passed
// to the callback is valid only during the call.
void for_each_in_family(Int n, const GeneratorSet& gens, Family family,
                        const std::function<void(std::span<const Int>)>& emit);

Int count_family(Int n, const GeneratorSet& gens, Family family);

std::vector<Partition> family_partitions(Int n, const GeneratorSet& gens, Family family);

}  // namespace sgpart
