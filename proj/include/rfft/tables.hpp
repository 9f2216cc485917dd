#pragma once

// Reproduction of the published FFT-split rate tables (LTE, DOCSIS and the split
// comparison) against the printed cell values, which ship embedded in the
// library as JSON. Printed cells are truncated, not rounded: rates to 3 decimals
// in Gbps and savings to 2 decimals in percent.

#include "rfft/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rfft
{
    enum class CellStatus
    {
        match,      // within tolerance of the printed value
        flagged,    // known misprint; the computed value is reported instead
        mismatch,   // unexplained difference
        stale_flag, // flagged as a misprint but actually matches
    };

    std::string to_string(CellStatus s);

    struct CellComparison
    {
        std::string id;      // e.g. "rho=0.1/CR=0.9/with"
        Rational exact;      // closed-form value
        Rational presented;  // what is compared with the printed cell
        std::string display; // exact value to 3 (rates) or 2 (percent) decimals
        std::string published;   // printed cell
        Rational delta;      // |presented - published|
        Rational tolerance;
        CellStatus status = CellStatus::match;
        std::string note; // misprint explanation for flagged cells
    };

    struct TableReport
    {
        std::string table_id; // "II", "III" or "IV"
        std::string title;
        std::vector<CellComparison> cells;

        std::size_t count(CellStatus s) const;
        /// No mismatches and no stale flags.
        bool passed() const;
        const CellComparison &cell(std::string_view id) const;
    };

    /// The embedded printed values.
    std::string_view published_tables_json();

    /// Compares every printed cell of the three tables with the closed-form model.
    std::vector<TableReport> reproduce_tables();

    struct PublishedCacheMemory
    {
        std::int64_t rs_bits = 0;
        std::int64_t pbch_bits = 0;
        std::int64_t sch_bits = 0;
        std::int64_t sib_bits = 0;
        std::int64_t docsis_pilot_bits = 0;
    };

    PublishedCacheMemory published_cache_memory();
} // namespace rfft
