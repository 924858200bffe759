#pragma once

#include <vector>

#include "sgpart/checked.hpp"
#include "sgpart/semigroup.hpp"

namespace sgpart {

// Formal power series in q with exact integer coefficients, kept modulo
// q^{N+1} for a fixed degree bound N.  All operations are exact on the
// retained window; coefficient overflow throws instead of wrapping.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Int degree_bound);  // the zero series
    static TruncatedSeries one(Int degree_bound);

    Int degree_bound() const { return static_cast<Int>(coeffs_.size()) - 1; }
    Int coeff(Int k) const;
    void set_coeff(Int k, Int value);
    const std::vector<Int>& coeffs() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a -= b;
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    bool operator==(const TruncatedSeries&) const = default;

    // Multiply in place by (1 - q^k), k >= 1.
    TruncatedSeries& mul_one_minus(Int k);
    // Multiply in place by the geometric series 1/(1 - q^k), k >= 1.
    TruncatedSeries& div_one_minus(Int k);

    // Multiplicative inverse modulo q^{N+1}; the constant term must be +-1.
    TruncatedSeries reciprocal() const;

private:
    std::vector<Int> coeffs_;
};

// Indicator series of the semigroup: coefficient k is 1 iff k is a member.
TruncatedSeries semigroup_series(const GeneratorSet& gens, Int degree_bound);

// The closed product form
//   prod_{i=2..m} (1 - q^{ell_i})  /  prod_{i=1..m} (1 - q^{a_i}),
// expanded exactly.  Requires the star condition (throws StarViolated
// otherwise), under which it equals semigroup_series.
TruncatedSeries product_form_series(const GeneratorSet& gens, Int degree_bound);

// Generating function of the mult family: the product over part values t of
// the semigroup series evaluated at q^t.  Defined for every generator list.
TruncatedSeries multiplicity_gf(const GeneratorSet& gens, Int degree_bound);

// Generating function of the div family: prod 1/(1 - q^k) over the k that
// are divisible by some generator.  Defined for every generator list.
TruncatedSeries divisibility_gf(const GeneratorSet& gens, Int degree_bound);

// The factors of the mult family's double product collected per exponent:
//   prod_{k>=1} (1 - q^k)^{e_k},   e_k = -#{i : a_i | k} + #{i>=2 : ell_i | k}.
// Under the star condition this equals both multiplicity_gf and
// divisibility_gf.
TruncatedSeries exponent_form_gf(const GeneratorSet& gens, Int degree_bound);

struct IndicatorSides {
    Int lhs = 0;  // 1 iff some generator divides k
    Int rhs = 0;  // #{i : a_i | k} - #{i>=2 : ell_i | k}
};

// Both sides of the divisor-indicator identity at k; they agree for every
// k >= 1 when the star condition holds.
IndicatorSides indicator_identity(const GeneratorSet& gens, Int k);

}  // namespace sgpart
