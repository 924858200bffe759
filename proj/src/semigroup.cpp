#include "sgpart/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgpart {

namespace {

// Hard cap on table sizes so absurd bounds fail with a clear message
// instead of an allocation failure.
constexpr Int kMaxTableBound = Int{1} << 30;

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Int> gens) {
    if (gens.empty()) throw InvalidInput("generator list must not be empty");
    gens_.reserve(gens.size());
    for (Int g : gens) {
        if (g < 1) throw InvalidInput("generators must be positive, got " + std::to_string(g));
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
    }
    for (Int g : gens_) overall_gcd_ = std::gcd(overall_gcd_, g);
    Int prefix_gcd = gens_.front();
    for (std::size_t i = 1; i < gens_.size(); ++i) {
        ells_.push_back(checked_lcm(prefix_gcd, gens_[i]));
        prefix_gcd = std::gcd(prefix_gcd, gens_[i]);
    }
    for (Int g : gens_) {
        for (Int other : gens_) {
            if (other != g && g % other == 0) {
                redundant_.push_back(g);
                break;
            }
        }
    }
}

Int GeneratorSet::ell(std::size_t i) const {
    if (i < 2 || i > gens_.size())
        throw InvalidInput("ell(i) needs 2 <= i <= m, got i=" + std::to_string(i));
    return ells_[i - 2];
}

Int GeneratorSet::min_gen() const { return *std::min_element(gens_.begin(), gens_.end()); }

Int GeneratorSet::max_gen() const { return *std::max_element(gens_.begin(), gens_.end()); }

MembershipTable::MembershipTable(GeneratorSet gens, Int bound)
    : gens_(std::move(gens)), bound_(bound) {
    if (bound < 0) throw InvalidInput("membership bound must be non-negative");
    if (bound > kMaxTableBound)
        throw InvalidInput("membership bound too large: " + std::to_string(bound));
    member_.assign(static_cast<std::size_t>(bound) + 1, 0);
    member_[0] = 1;
    const auto& a = gens_.gens();
    for (Int k = 1; k <= bound; ++k) {
        for (Int g : a) {
            if (g <= k && member_[static_cast<std::size_t>(k - g)]) {
                member_[static_cast<std::size_t>(k)] = 1;
                break;
            }
        }
    }
}

bool MembershipTable::contains(Int k) const {
    if (k < 0) return false;
    if (k > bound_)
        throw BoundTooSmall("membership table bound " + std::to_string(bound_) +
                            " is below queried value " + std::to_string(k));
    return member_[static_cast<std::size_t>(k)] != 0;
}

std::vector<Int> gaps(const GeneratorSet& gens) {
    if (gens.overall_gcd() != 1)
        throw NonCoprimeGenerators("overall gcd is " + std::to_string(gens.overall_gcd()) +
                                   ", so the complement is infinite");
    const Int a_min = gens.min_gen();
    const Int bound = checked_add(checked_mul(a_min, gens.max_gen()), gens.max_gen());
    const MembershipTable table(gens, bound);
    std::vector<Int> out;
    Int run = 0;  // consecutive members seen so far
    for (Int k = 0; k <= bound; ++k) {
        if (table.contains(k)) {
            // After a_min consecutive members everything beyond is a member.
            if (++run == a_min) return out;
        } else {
            run = 0;
            out.push_back(k);
        }
    }
    throw InternalInconsistency("gap scan did not stabilize below its bound");
}

Int frobenius(const GeneratorSet& gens) {
    if (gens.overall_gcd() != 1)
        throw NonCoprimeGenerators("overall gcd is " + std::to_string(gens.overall_gcd()) +
                                   ", so the complement is infinite");
    if (std::find(gens.gens().begin(), gens.gens().end(), Int{1}) != gens.gens().end())
        throw EmptyComplement("1 is a generator, so there are no gaps");
    return gaps(gens).back();
}

StarCertificate check_star(const GeneratorSet& gens) {
    StarCertificate cert;
    const auto& a = gens.gens();
    for (std::size_t i = 2; i <= a.size(); ++i) {
        StarWitness witness{static_cast<Int>(i), std::nullopt, gens.ell(i)};
        for (std::size_t j = 1; j < i; ++j) {
            if (checked_lcm(a[j - 1], a[i - 1]) == witness.ell) {
                witness.j = static_cast<Int>(j);
                break;
            }
        }
        if (!witness.j) {
            cert.holds = false;
            if (!cert.failing_index) cert.failing_index = static_cast<Int>(i);
        }
        cert.witnesses.push_back(witness);
    }
    return cert;
}

std::optional<StarOrdering> check_star_any_ordering(const GeneratorSet& gens) {
    std::vector<Int> values = gens.gens();
    std::sort(values.begin(), values.end());
    do {
        GeneratorSet ordered(values);
        StarCertificate cert = check_star(ordered);
        if (cert.holds) return StarOrdering{std::move(ordered), std::move(cert)};
    } while (std::next_permutation(values.begin(), values.end()));
    return std::nullopt;
}

AperyPair apery_decompose(const GeneratorSet& gens, Int k) {
    if (gens.size() < 2) throw InvalidInput("decomposition needs at least two generators");
    if (k < 0) throw InvalidInput("k must be non-negative, got " + std::to_string(k));
    const StarCertificate cert = check_star(gens);
    if (!cert.holds)
        throw StarViolated("star condition fails at i=" + std::to_string(*cert.failing_index));
    const MembershipTable table(gens, k);
    if (!table.contains(k)) throw NotInSemigroup(std::to_string(k) + " is not a member");

    // Peel one generator at a time off k to reach some representation,
    // counting how often the last generator is used.
    const auto& a = gens.gens();
    const Int last = a.back();
    Int x = 0;
    Int cur = k;
    while (cur > 0) {
        bool progressed = false;
        for (Int g : a) {
            if (g <= cur && table.contains(cur - g)) {
                if (g == last) ++x;
                cur -= g;
                progressed = true;
                break;
            }
        }
        if (!progressed) throw InternalInconsistency("membership table is not downward reachable");
    }

    // Trade ell_m/a_m copies of a_m for a single ell_m until the quotient is
    // in range.  ell_m is a multiple of an earlier generator (that is the
    // star condition), so y stays representable without a_m; uniqueness of
    // the split makes the result independent of the starting representation.
    const Int ell_m = gens.ell(gens.size());
    const Int step = ell_m / last;
    Int y = k - x * last;
    while (x >= step) {
        x -= step;
        y = checked_add(y, ell_m);
    }
    return {x, y};
}

}  // namespace sgpart
