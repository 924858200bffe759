#include "sgpart/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sgpart {

namespace {

// Coefficient windows are dense; keep allocations sane.
constexpr Int kMaxDegreeBound = 10'000'000;

}  // namespace

TruncatedSeries::TruncatedSeries(Int degree_bound) {
    if (degree_bound < 0) throw InvalidInput("degree bound must be non-negative");
    if (degree_bound > kMaxDegreeBound)
        throw InvalidInput("degree bound too large: " + std::to_string(degree_bound));
    coeffs_.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(Int degree_bound) {
    TruncatedSeries s(degree_bound);
    s.coeffs_[0] = 1;
    return s;
}

Int TruncatedSeries::coeff(Int k) const {
    if (k < 0 || k > degree_bound())
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " outside degree bound " + std::to_string(degree_bound()));
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(Int k, Int value) {
    if (k < 0 || k > degree_bound())
        throw std::out_of_range("coefficient index " + std::to_string(k) +
                                " outside degree bound " + std::to_string(degree_bound()));
    coeffs_[static_cast<std::size_t>(k)] = value;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (degree_bound() != other.degree_bound())
        throw InvalidInput("degree bounds differ in series addition");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    if (degree_bound() != other.degree_bound())
        throw InvalidInput("degree bounds differ in series subtraction");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_sub(coeffs_[k], other.coeffs_[k]);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree_bound() != b.degree_bound())
        throw InvalidInput("degree bounds differ in series multiplication");
    TruncatedSeries out(a.degree_bound());
    const std::size_t size = out.coeffs_.size();
    for (std::size_t i = 0; i < size; ++i) {
        const Int ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; i + j < size; ++j) {
            const Int bj = b.coeffs_[j];
            if (bj == 0) continue;
            out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(ai, bj));
        }
    }
    return out;
}

TruncatedSeries& TruncatedSeries::mul_one_minus(Int k) {
    if (k < 1) throw InvalidInput("factor exponent must be positive");
    for (Int j = degree_bound(); j >= k; --j) {
        auto& c = coeffs_[static_cast<std::size_t>(j)];
        c = checked_sub(c, coeffs_[static_cast<std::size_t>(j - k)]);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::div_one_minus(Int k) {
    if (k < 1) throw InvalidInput("factor exponent must be positive");
    for (Int j = k; j <= degree_bound(); ++j) {
        auto& c = coeffs_[static_cast<std::size_t>(j)];
        c = checked_add(c, coeffs_[static_cast<std::size_t>(j - k)]);
    }
    return *this;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const Int c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw InvalidInput("reciprocal requires constant term 1 or -1, got " +
                           std::to_string(c0));
    TruncatedSeries out(degree_bound());
    out.coeffs_[0] = c0;  // inverse of +-1 is itself
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Int acc = 0;
        for (std::size_t j = 1; j <= n; ++j)
            acc = checked_add(acc, checked_mul(coeffs_[j], out.coeffs_[n - j]));
        out.coeffs_[n] = checked_mul(-c0, acc);
    }
    return out;
}

TruncatedSeries semigroup_series(const GeneratorSet& gens, Int degree_bound) {
    const MembershipTable table(gens, degree_bound);
    TruncatedSeries out(degree_bound);
    for (Int k = 0; k <= degree_bound; ++k) {
        if (table.contains(k)) out.set_coeff(k, 1);
    }
    return out;
}

TruncatedSeries product_form_series(const GeneratorSet& gens, Int degree_bound) {
    const StarCertificate cert = check_star(gens);
    if (!cert.holds)
        throw StarViolated("star condition fails at i=" + std::to_string(*cert.failing_index));
    TruncatedSeries out = TruncatedSeries::one(degree_bound);
    for (Int a : gens.gens()) out.div_one_minus(a);
    // Factors whose lowest nonconstant term lies beyond the bound are 1 on
    // the retained window; mul_one_minus handles them as a no-op.
    for (Int ell : gens.ells()) out.mul_one_minus(ell);
    return out;
}

TruncatedSeries multiplicity_gf(const GeneratorSet& gens, Int degree_bound) {
    const MembershipTable table(gens, degree_bound);
    TruncatedSeries acc = TruncatedSeries::one(degree_bound);
    const Int smin = gens.min_gen();
    // The factor for part value t is sum_{k member} q^{k t}; for
    // t > degree_bound/smin it is 1 on the window and can be skipped.
    for (Int t = 1; checked_mul(smin, t) <= degree_bound; ++t) {
        TruncatedSeries factor(degree_bound);
        for (Int k = 0; k * t <= degree_bound; ++k) {
            if (table.contains(k)) factor.set_coeff(k * t, 1);
        }
        acc = acc * factor;
    }
    return acc;
}

TruncatedSeries divisibility_gf(const GeneratorSet& gens, Int degree_bound) {
    TruncatedSeries out = TruncatedSeries::one(degree_bound);
    for (Int k = 1; k <= degree_bound; ++k) {
        for (Int a : gens.gens()) {
            if (k % a == 0) {
                out.div_one_minus(k);
                break;
            }
        }
    }
    return out;
}

TruncatedSeries exponent_form_gf(const GeneratorSet& gens, Int degree_bound) {
    TruncatedSeries out = TruncatedSeries::one(degree_bound);
    for (Int k = 1; k <= degree_bound; ++k) {
        Int e = 0;
        for (Int a : gens.gens())
            if (k % a == 0) --e;
        for (Int ell : gens.ells())
            if (k % ell == 0) ++e;
        for (; e < 0; ++e) out.div_one_minus(k);
        for (; e > 0; --e) out.mul_one_minus(k);
    }
    return out;
}

IndicatorSides indicator_identity(const GeneratorSet& gens, Int k) {
    if (k < 1) throw InvalidInput("k must be positive, got " + std::to_string(k));
    IndicatorSides sides;
    for (Int a : gens.gens()) {
        if (k % a == 0) {
            sides.lhs = 1;
            break;
        }
    }
    for (Int a : gens.gens())
        if (k % a == 0) ++sides.rhs;
    for (Int ell : gens.ells())
        if (k % ell == 0) --sides.rhs;
    return sides;
}

}  // namespace sgpart
