#pragma once

// Fractions of the downstream frequency-domain grid that repeat (LTE RS, PBCH,
// PSS/SSS, SIB1/2; DOCSIS guard band and pilots) and so can be cached at the
// remote node, plus the cache memory each component needs.

#include "rfft/rate_model.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfft
{
    enum class Technology
    {
        lte,
        docsis,
    };

    std::string to_string(Technology t);

    struct LteGridParams
    {
        int subcarriers_per_rb = 12;
        int symbols_per_subframe = 14;
        int subframes_per_frame = 10;
        int rs_tones_per_rb_subframe = 8;
        int system_subcarriers = 1200;
        int pbch_rbs = 6;
        int pbch_symbols = 4;
        int sch_rbs = 6;
        int sch_symbols_per_frame = 4;
        int sib_rbs = 8;
        int sib_symbols = 14;
        int sib_period_frames = 2;

        static LteGridParams bandwidth_20mhz() { return {}; }
        static LteGridParams bandwidth_1_4mhz()
        {
            LteGridParams g;
            g.system_subcarriers = 72;
            return g;
        }

        int resource_blocks() const { return system_subcarriers / subcarriers_per_rb; }
        void validate() const;

        // Repeating resource elements per period, RS tones already removed where
        // the channel overlaps them.
        int pbch_elements() const;
        int sch_elements() const;
        int sib_elements() const;
    };

    /// rho == 0: nothing but broadcast content is sent, so the overhead ratio is
    /// unbounded and the fronthaul could be suspended entirely.
    class InfiniteOverhead : public std::domain_error
    {
    public:
        InfiniteOverhead() : std::domain_error("infinite overhead, transmissions fully suspendable") {}
    };

    Rational rs_overhead(const Rational &rho_l, const LteGridParams &g = {});
    Rational pbch_overhead(const Rational &rho_l, const LteGridParams &g = {});
    Rational sch_overhead(const Rational &rho_l, const LteGridParams &g = {});
    Rational sib_overhead(const Rational &rho_l, const LteGridParams &g = {});
    Rational lte_total_overhead(const Rational &rho_l, const LteGridParams &g = {});
    Rational docsis_pilot_overhead(const Rational &rho_c, const DocsisPhyProfile &p = {});

    /// Rounded-up overheads the published rate tables are built from.
    Rational lte_table_overhead();
    Rational docsis_table_overhead();

    struct CacheComponent
    {
        std::string name;
        Rational fraction;
        std::int64_t memory_bits = 0;
    };

    struct CacheProfile
    {
        Technology technology = Technology::lte;
        Rational overhead_fraction;
        std::int64_t memory_bits = 0;
        std::vector<CacheComponent> components;
    };

    /// Component breakdown at load rho; totals are the component sums.
    CacheProfile lte_cache_profile(const Rational &rho_l, const LteGridParams &g = {}, int bits_per_component = 10);
    CacheProfile docsis_cache_profile(const Rational &rho_c, const DocsisPhyProfile &p = {},
                                      int bits_per_component = 10);

    struct MemoryDiscrepancy
    {
        std::string component;
        std::int64_t computed_bits;
        std::int64_t published_bits;
        std::string note;
    };

    struct CacheMemoryReport
    {
        std::int64_t rs_bits = 0;
        std::int64_t pbch_bits = 0;
        std::int64_t sch_bits = 0;
        std::int64_t sib_bits = 0;
        std::int64_t docsis_pilot_bits = 0;
        std::vector<MemoryDiscrepancy> discrepancies;

        std::int64_t lte_total_bits() const { return rs_bits + pbch_bits + sch_bits + sib_bits; }
    };

    /// Memory for caching every repeating element with 2K bits per QAM symbol.
    CacheMemoryReport cache_memory(const LteGridParams &g = {}, const DocsisPhyProfile &p = {},
                                   int bits_per_component = 10);
} // namespace rfft
