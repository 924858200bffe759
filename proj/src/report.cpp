#include "sgpart/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace sgpart {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<Int>& values, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

}  // namespace

IdentityReport verify_identity(const GeneratorSet& gens, Int nmax) {
    if (nmax < 0) throw InvalidInput("nmax must be non-negative, got " + std::to_string(nmax));
    IdentityReport report{gens, check_star(gens), {}, std::nullopt};
    const TruncatedSeries mult_series = multiplicity_gf(gens, nmax);
    const TruncatedSeries div_series = divisibility_gf(gens, nmax);
    report.rows.reserve(static_cast<std::size_t>(nmax) + 1);
    for (Int n = 0; n <= nmax; ++n) {
        IdentityRow row;
        row.n = n;
        row.count_flat = count_family(n, gens, Family::flat);
        row.count_mult = count_family(n, gens, Family::mult);
        row.count_div = count_family(n, gens, Family::div);
        if (row.count_mult != mult_series.coeff(n))
            throw InternalInconsistency("mult count and series coefficient disagree at n=" +
                                        std::to_string(n));
        if (row.count_div != div_series.coeff(n))
            throw InternalInconsistency("div count and series coefficient disagree at n=" +
                                        std::to_string(n));
        row.flat_eq_mult = row.count_flat == row.count_mult;
        row.flat_eq_div = row.count_flat == row.count_div;
        if (!row.flat_eq_mult)
            throw InternalInconsistency(
                "flat and mult counts differ at n=" + std::to_string(n) +
                "; that equality holds for every generator list, so this is a bug");
        if (!row.flat_eq_div && report.star.holds)
            throw InternalInconsistency(
                "flat and div counts differ at n=" + std::to_string(n) +
                " although the star condition holds, so this is a bug");
        if (!row.flat_eq_div && !report.first_div_discrepancy) report.first_div_discrepancy = n;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<std::vector<Int>> search_tuples(int m, Int max_gen) {
    if (m < 3) throw InvalidInput("tuple size must be at least 3, got " + std::to_string(m));
    if (max_gen < 3) throw InvalidInput("max generator must be at least 3");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int low) -> void {
        if (static_cast<int>(cur.size()) == m) {
            Int g = 0;
            for (Int v : cur) g = std::gcd(g, v);
            if (g == 1) out.push_back(cur);
            return;
        }
        for (Int v = low; v <= max_gen; ++v) {
            bool divisible = false;
            for (Int u : cur) {
                if (v % u == 0) {
                    divisible = true;
                    break;
                }
            }
            if (divisible) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

namespace {

SearchRecord evaluate_tuple(const std::vector<Int>& tuple, Int nmax) {
    const GeneratorSet gens(tuple);
    const auto star = check_star_any_ordering(gens);
    if (star && !check_star(star->ordering).holds)
        throw InternalInconsistency("star certificate failed re-validation for {" +
                                    join(tuple, ",") + "}");
    const TruncatedSeries div_series = divisibility_gf(gens, nmax);
    std::optional<Int> first;
    for (Int n = 0; n <= nmax && !first; ++n) {
        if (count_family(n, gens, Family::flat) != div_series.coeff(n)) first = n;
    }
    return {tuple, star.has_value(), !first.has_value(), first};
}

}  // namespace

std::vector<SearchRecord> run_search(const SearchOptions& options, const SearchProgressFn& progress) {
    if (options.nmax < 0) throw InvalidInput("nmax must be non-negative");
    const auto tuples = search_tuples(options.m, options.max_gen);
    std::vector<SearchRecord> records(tuples.size());
    if (tuples.empty()) return records;

    unsigned jobs = options.jobs != 0 ? options.jobs
                                      : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, tuples.size()));

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= tuples.size()) return;
            try {
                records[idx] = evaluate_tuple(tuples[idx], options.nmax);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
            const std::size_t completed = done.fetch_add(1) + 1;
            if (progress) {
                const std::lock_guard<std::mutex> lock(progress_mutex);
                progress(completed, tuples.size());
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

ordered_json to_json(const StarCertificate& cert) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : cert.witnesses) {
        ordered_json jw;
        jw["i"] = w.i;
        if (w.j)
            jw["j"] = *w.j;
        else
            jw["j"] = nullptr;
        jw["ell"] = w.ell;
        witnesses.push_back(std::move(jw));
    }
    ordered_json j;
    j["holds"] = cert.holds;
    j["witnesses"] = std::move(witnesses);
    if (cert.failing_index)
        j["failing_index"] = *cert.failing_index;
    else
        j["failing_index"] = nullptr;
    return j;
}

ordered_json to_json(const IdentityReport& report) {
    ordered_json j;
    j["gens"] = report.gens.gens();
    j["star"] = to_json(report.star);
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["count_flat"] = row.count_flat;
        r["count_mult"] = row.count_mult;
        r["count_div"] = row.count_div;
        r["flat_eq_mult"] = row.flat_eq_mult;
        r["flat_eq_div"] = row.flat_eq_div;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (report.first_div_discrepancy)
        j["first_div_discrepancy"] = *report.first_div_discrepancy;
    else
        j["first_div_discrepancy"] = nullptr;
    return j;
}

ordered_json to_json(const SearchRecord& record) {
    ordered_json j;
    j["gens"] = record.gens;
    j["star_any_ordering"] = record.star_any_ordering;
    j["identity_holds_to_nmax"] = record.identity_holds_to_nmax;
    if (record.first_discrepancy)
        j["first_discrepancy"] = *record.first_discrepancy;
    else
        j["first_discrepancy"] = nullptr;
    return j;
}

std::string render_human(const IdentityReport& report) {
    std::ostringstream out;
    out << "gens: " << join(report.gens.gens(), ",") << "\n";
    if (!report.gens.redundant().empty())
        out << "note: redundant generators: " << join(report.gens.redundant(), ",") << "\n";
    if (report.star.holds)
        out << "star: holds\n";
    else
        out << "star: fails at i=" << *report.star.failing_index << "\n";
    for (const auto& w : report.star.witnesses) {
        out << "  i=" << w.i << ": ell=" << w.ell;
        if (w.j)
            out << " witness j=" << *w.j;
        else
            out << " no witness";
        out << "\n";
    }
    out << std::setw(6) << "n" << std::setw(10) << "flat" << std::setw(10) << "mult"
        << std::setw(10) << "div" << std::setw(11) << "flat=mult" << std::setw(10)
        << "flat=div" << "\n";
    for (const auto& row : report.rows) {
        out << std::setw(6) << row.n << std::setw(10) << row.count_flat << std::setw(10)
            << row.count_mult << std::setw(10) << row.count_div << std::setw(11)
            << (row.flat_eq_mult ? "yes" : "NO") << std::setw(10)
            << (row.flat_eq_div ? "yes" : "NO") << "\n";
    }
    if (report.first_div_discrepancy)
        out << "first_div_discrepancy: " << *report.first_div_discrepancy << "\n";
    else
        out << "first_div_discrepancy: none\n";
    return out.str();
}

std::string render_human(const SearchRecord& record) {
    std::ostringstream out;
    out << "{" << join(record.gens, ",") << "}"
        << "  star=" << (record.star_any_ordering ? "yes" : "no")
        << "  identity=" << (record.identity_holds_to_nmax ? "yes" : "no");
    if (record.first_discrepancy) out << "  first_discrepancy=" << *record.first_discrepancy;
    return out.str();
}

std::string render_search_summary(const std::vector<SearchRecord>& records) {
    std::size_t star_count = 0;
    std::size_t identity_count = 0;
    std::vector<const SearchRecord*> disagreements;
    for (const auto& record : records) {
        star_count += record.star_any_ordering ? 1 : 0;
        identity_count += record.identity_holds_to_nmax ? 1 : 0;
        if (record.star_any_ordering != record.identity_holds_to_nmax)
            disagreements.push_back(&record);
    }
    std::ostringstream out;
    out << "tuples: " << records.size() << "  star=yes: " << star_count
        << "  identity=yes: " << identity_count
        << "  star/identity disagreements: " << disagreements.size() << "\n";
    for (const SearchRecord* record : disagreements)
        out << "disagreement: " << render_human(*record) << "\n";
    return out.str();
}

}  // namespace sgpart
