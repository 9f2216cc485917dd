#include "rfft/caching_model.hpp"

namespace rfft
{
    namespace
    {
        void require_positive_load(const Rational &rho)
        {
            if (rho == 0)
            {
                throw InfiniteOverhead();
            }
            if (rho < 0)
            {
                throw std::invalid_argument("load must be positive");
            }
        }

        // Per-frame denominator shared by the PBCH/SCH/SIB ratios.
        Rational frame_elements(const Rational &rho, const LteGridParams &g, int frames)
        {
            return rho * g.system_subcarriers * g.symbols_per_subframe * g.subframes_per_frame * frames;
        }

        // SIB memory as printed next to the formula.
        constexpr std::int64_t published_sib_memory_bits = 5760;
    } // namespace

    std::string to_string(Technology t)
    {
        return t == Technology::lte ? "LTE" : "DOCSIS";
    }

    void LteGridParams::validate() const
    {
        const bool positive = subcarriers_per_rb > 0 && symbols_per_subframe > 0 && subframes_per_frame > 0 &&
                              rs_tones_per_rb_subframe > 0 && system_subcarriers > 0 && pbch_rbs > 0 &&
                              pbch_symbols > 0 && sch_rbs > 0 && sch_symbols_per_frame > 0 && sib_rbs > 0 &&
                              sib_symbols > 0 && sib_period_frames > 0;
        if (!positive)
        {
            throw std::invalid_argument("LTE grid parameters must all be positive");
        }
        if (system_subcarriers % subcarriers_per_rb != 0)
        {
            throw std::invalid_argument("LTE system subcarriers must be a whole number of resource blocks");
        }
    }

    int LteGridParams::pbch_elements() const
    {
        return pbch_rbs * subcarriers_per_rb * pbch_symbols - rs_tones_per_rb_subframe * pbch_rbs;
    }

    int LteGridParams::sch_elements() const
    {
        return sch_rbs * subcarriers_per_rb * sch_symbols_per_frame;
    }

    int LteGridParams::sib_elements() const
    {
        return sib_rbs * subcarriers_per_rb * sib_symbols - rs_tones_per_rb_subframe * sib_rbs;
    }

    Rational rs_overhead(const Rational &rho_l, const LteGridParams &g)
    {
        g.validate();
        require_positive_load(rho_l);
        return Rational(g.rs_tones_per_rb_subframe) / (rho_l * g.subcarriers_per_rb * g.symbols_per_subframe);
    }

    Rational pbch_overhead(const Rational &rho_l, const LteGridParams &g)
    {
        g.validate();
        require_positive_load(rho_l);
        return Rational(g.pbch_elements()) / frame_elements(rho_l, g, 1);
    }

    Rational sch_overhead(const Rational &rho_l, const LteGridParams &g)
    {
        g.validate();
        require_positive_load(rho_l);
        return Rational(g.sch_elements()) / frame_elements(rho_l, g, 1);
    }

    Rational sib_overhead(const Rational &rho_l, const LteGridParams &g)
    {
        g.validate();
        require_positive_load(rho_l);
        return Rational(g.sib_elements()) / frame_elements(rho_l, g, g.sib_period_frames);
    }

    Rational lte_total_overhead(const Rational &rho_l, const LteGridParams &g)
    {
        return rs_overhead(rho_l, g) + pbch_overhead(rho_l, g) + sch_overhead(rho_l, g) + sib_overhead(rho_l, g);
    }

    Rational docsis_pilot_overhead(const Rational &rho_c, const DocsisPhyProfile &p)
    {
        require_positive_load(rho_c);
        return Rational(p.guard_subcarriers + p.continuous_pilots + p.scattered_pilots) / (rho_c * p.total_subcarriers);
    }

    Rational lte_table_overhead()
    {
        return ratio(7, 100);
    }

    Rational docsis_table_overhead()
    {
        return ratio(3, 100);
    }

    CacheMemoryReport cache_memory(const LteGridParams &g, const DocsisPhyProfile &p, int bits_per_component)
    {
        g.validate();
        if (bits_per_component <= 0)
        {
            throw std::invalid_argument("cache_memory: bits per component must be positive");
        }
        const std::int64_t bits_per_symbol = 2 * static_cast<std::int64_t>(bits_per_component);

        CacheMemoryReport r;
        r.rs_bits = static_cast<std::int64_t>(g.rs_tones_per_rb_subframe) * g.resource_blocks() * bits_per_symbol;
        r.pbch_bits = g.pbch_elements() * bits_per_symbol;
        r.sch_bits = g.sch_elements() * bits_per_symbol;
        r.sib_bits = g.sib_elements() * bits_per_symbol;
        r.docsis_pilot_bits =
            static_cast<std::int64_t>(p.guard_subcarriers + p.continuous_pilots + p.scattered_pilots) * bits_per_symbol;

        const bool published_setting = bits_per_component == 10 && g.sib_elements() == 1280;
        if (published_setting && r.sib_bits != published_sib_memory_bits)
        {
            r.discrepancies.push_back(MemoryDiscrepancy{
                "sib", r.sib_bits, published_sib_memory_bits,
                "published value repeats the SCH figure; 1280 symbols x 20 bits = 25600"});
        }
        return r;
    }

    CacheProfile lte_cache_profile(const Rational &rho_l, const LteGridParams &g, int bits_per_component)
    {
        const CacheMemoryReport mem = cache_memory(g, DocsisPhyProfile{}, bits_per_component);
        CacheProfile profile;
        profile.technology = Technology::lte;
        profile.components = {
            {"rs", rs_overhead(rho_l, g), mem.rs_bits},
            {"pbch", pbch_overhead(rho_l, g), mem.pbch_bits},
            {"sch", sch_overhead(rho_l, g), mem.sch_bits},
            {"sib", sib_overhead(rho_l, g), mem.sib_bits},
        };
        for (const auto &c : profile.components)
        {
            profile.overhead_fraction += c.fraction;
            profile.memory_bits += c.memory_bits;
        }
        return profile;
    }

    CacheProfile docsis_cache_profile(const Rational &rho_c, const DocsisPhyProfile &p, int bits_per_component)
    {
        const CacheMemoryReport mem = cache_memory(LteGridParams{}, p, bits_per_component);
        CacheProfile profile;
        profile.technology = Technology::docsis;
        profile.components = {{"docsis_pilots", docsis_pilot_overhead(rho_c, p), mem.docsis_pilot_bits}};
        profile.overhead_fraction = profile.components.front().fraction;
        profile.memory_bits = profile.components.front().memory_bits;
        return profile;
    }
} // namespace rfft
