#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgpart/partitions.hpp"
#include "sgpart/semigroup.hpp"
#include "sgpart/series.hpp"

namespace sgpart {

struct IdentityRow {
    Int n = 0;
    Int count_flat = 0;
    Int count_mult = 0;
    Int count_div = 0;
    bool flat_eq_mult = false;
    bool flat_eq_div = false;
};

// Counts of the three families for one generator ordering, n = 0..nmax,
// plus the star certificate of the ordering as given.
struct IdentityReport {
    GeneratorSet gens;
    StarCertificate star;
    std::vector<IdentityRow> rows;
    std::optional<Int> first_div_discrepancy;  // first n with flat != div
};

// Counts every family along two routes -- direct enumeration and generating
// function coefficients -- and cross-checks them.  A route disagreement, or
// any flat/mult mismatch, throws InternalInconsistency: those equalities do
// not depend on the input, so a failure is a bug.
IdentityReport verify_identity(const GeneratorSet& gens, Int nmax);

struct SearchRecord {
    std::vector<Int> gens;
    bool star_any_ordering = false;
    bool identity_holds_to_nmax = false;
    std::optional<Int> first_discrepancy;  // first n with flat != div
};

struct SearchOptions {
    int m = 3;
    Int max_gen = 10;
    Int nmax = 30;
    unsigned jobs = 0;  // 0: one worker per hardware thread
};

// Strictly increasing tuples of size m over 2..max_gen with no entry
// dividing another and overall gcd 1, in lexicographic order.
std::vector<std::vector<Int>> search_tuples(int m, Int max_gen);

using SearchProgressFn = std::function<void(std::size_t completed, std::size_t total)>;

// Evaluates every tuple from search_tuples(): does any ordering satisfy the
// star condition, and do the flat and div counts agree for all n <= nmax?
// Tuples may be evaluated concurrently; records always come back in tuple
// order, so output is deterministic.
std::vector<SearchRecord> run_search(const SearchOptions& options,
                                     const SearchProgressFn& progress = {});

nlohmann::ordered_json to_json(const StarCertificate& cert);
nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const SearchRecord& record);

std::string render_human(const IdentityReport& report);
std::string render_human(const SearchRecord& record);  // one line, no newline
std::string render_search_summary(const std::vector<SearchRecord>& records);

}  // namespace sgpart
