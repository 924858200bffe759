#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgpart/checked.hpp"
#include "sgpart/errors.hpp"

namespace sgpart {

// Ordered generator list (a_1, ..., a_m) with its derived arithmetic data.
//
// Duplicates are dropped, keeping the first occurrence; the order of the
// survivors is preserved and significant, because the star condition reads
// the list in order.  ell(i) = lcm(gcd(a_1, ..., a_{i-1}), a_i) for i = 2..m.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Int> gens);

    const std::vector<Int>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    Int overall_gcd() const { return overall_gcd_; }

    // ells()[i-2] == ell(i), for i = 2..m.
    const std::vector<Int>& ells() const { return ells_; }
    Int ell(std::size_t i) const;

    Int min_gen() const;
    Int max_gen() const;

    // Generators that are a multiple of another generator.  They do not
    // change the semigroup; callers may want to warn about them.
    const std::vector<Int>& redundant() const { return redundant_; }

    bool operator==(const GeneratorSet&) const = default;

private:
    std::vector<Int> gens_;
    Int overall_gcd_ = 0;
    std::vector<Int> ells_;
    std::vector<Int> redundant_;
};

// Characteristic table of the semigroup on 0..bound, filled by the coin
// problem recurrence: member[k] iff k == 0 or member[k - a_i] for some i.
class MembershipTable {
public:
    MembershipTable(GeneratorSet gens, Int bound);

    Int bound() const { return bound_; }
    const GeneratorSet& gens() const { return gens_; }

    // True iff k is a non-negative integer combination of the generators.
    // Negative k is never a member; k > bound() throws BoundTooSmall.
    bool contains(Int k) const;

private:
    GeneratorSet gens_;
    Int bound_ = 0;
    std::vector<char> member_;
};

// Witness for one position of the star condition: the smallest j < i with
// lcm(a_j, a_i) == ell(i), if any such j exists.
struct StarWitness {
    Int i = 0;              // position being witnessed, 1-based, i >= 2
    std::optional<Int> j;   // witnessing earlier position, absent if none
    Int ell = 0;            // ell(i)
};

struct StarCertificate {
    bool holds = true;
    std::vector<StarWitness> witnesses;  // one entry per i = 2..m
    std::optional<Int> failing_index;    // first i without a witness
};

struct StarOrdering {
    GeneratorSet ordering;
    StarCertificate certificate;
};

// The canonical split k = x * a_m + y with y in the semigroup generated by
// a_1..a_{m-1} and 0 <= x < ell(m)/a_m.
struct AperyPair {
    Int x = 0;
    Int y = 0;
};

// Finite complement of the semigroup in {0, 1, 2, ...}, ascending.
// Requires overall gcd 1.
std::vector<Int> gaps(const GeneratorSet& gens);

// Largest gap.  Requires overall gcd 1 and that 1 is not a generator.
Int frobenius(const GeneratorSet& gens);

// Star condition: for every i >= 2 some single earlier generator a_j already
// realizes lcm(gcd(a_1..a_{i-1}), a_i) as lcm(a_j, a_i).  Vacuously true for
// one or two generators.
StarCertificate check_star(const GeneratorSet& gens);

// First permutation of the generators, in lexicographic order of the value
// sequence, whose star certificate holds; absent if no ordering passes.
std::optional<StarOrdering> check_star_any_ordering(const GeneratorSet& gens);

// Canonical decomposition k = x * a_m + y (see AperyPair).  Requires the
// star condition, at least two generators, and k in the semigroup.
AperyPair apery_decompose(const GeneratorSet& gens, Int k);

}  // namespace sgpart
