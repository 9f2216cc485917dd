#include "rfft/tables.hpp"

#include "rfft/rate_model.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>

namespace rfft
{
    namespace detail
    {
        extern const char *const published_tables_text;
    }

    namespace
    {
        using nlohmann::json;

        const Rational rate_tolerance = ratio(1, 1000);
        const Rational percent_tolerance = ratio(1, 100);

        Rational abs_diff(const Rational &a, const Rational &b) { return a > b ? Rational(a - b) : Rational(b - a); }

        class FlagSet
        {
        public:
            explicit FlagSet(const json &flags)
            {
                for (const auto &f : flags)
                {
                    notes_.emplace(f.at("cell").get<std::string>(), f.at("note").get<std::string>());
                }
            }

            const std::string *find(const std::string &id)
            {
                auto it = notes_.find(id);
                if (it == notes_.end())
                {
                    return nullptr;
                }
                used_.emplace(id, true);
                return &it->second;
            }

            void require_all_used(const std::string &table) const
            {
                for (const auto &[id, note] : notes_)
                {
                    if (!used_.count(id))
                    {
                        throw std::logic_error("table " + table + ": flag for unknown cell " + id);
                    }
                }
            }

        private:
            std::map<std::string, std::string> notes_;
            std::map<std::string, bool> used_;
        };

        void add_cell(TableReport &t, FlagSet &flags, std::string id, const Rational &exact, const Rational &presented,
                      const std::string &published, bool percent)
        {
            CellComparison c;
            c.id = std::move(id);
            c.exact = exact;
            c.presented = presented;
            c.display = format_decimal(exact, percent ? 2 : 3);
            c.published = published;
            c.delta = abs_diff(presented, parse_decimal(published));
            c.tolerance = percent ? percent_tolerance : rate_tolerance;
            const bool within = c.delta <= c.tolerance;
            if (const std::string *note = flags.find(c.id))
            {
                c.note = *note;
                c.status = within ? CellStatus::stale_flag : CellStatus::flagged;
            }
            else
            {
                c.status = within ? CellStatus::match : CellStatus::mismatch;
            }
            t.cells.push_back(std::move(c));
        }

        TableReport technology_table(const std::string &id, const json &def)
        {
            TableReport t;
            t.table_id = id;
            t.title = def.at("technology").get<std::string>() + " FFT-split rates";
            FlagSet flags(def.at("flags"));

            const int q = def.at("qam_bits").get<int>();
            const Rational overhead = parse_decimal(def.at("overhead_percent").get<std::string>()) / 100;
            std::vector<std::string> code_rates = def.at("code_rates").get<std::vector<std::string>>();
            const Bitrate capacity = Bitrate::gbps(Rational(1));

            for (const auto &row : def.at("rows"))
            {
                const std::string rho_text = row.at("rho").get<std::string>();
                const TrafficLoad load{parse_decimal(rho_text), capacity};
                const auto without = row.at("without").get<std::vector<std::string>>();
                const auto with = row.at("with").get<std::vector<std::string>>();
                for (std::size_t i = 0; i < code_rates.size(); ++i)
                {
                    const auto r = fft_split_total_rate(load, parse_decimal(code_rates[i]), q, 10, overhead);
                    const std::string prefix = "rho=" + rho_text + "/CR=" + code_rates[i];
                    add_cell(t, flags, prefix + "/without", r.total.in_gbps(), r.total.in_gbps(), without.at(i), false);
                    add_cell(t, flags, prefix + "/with", r.payload.in_gbps(), r.payload.in_gbps(), with.at(i), false);
                }
                const auto r = fft_split_total_rate(load, parse_decimal(code_rates.front()), q, 10, overhead);
                add_cell(t, flags, "rho=" + rho_text + "/savings", r.savings_percent(), r.savings_percent(),
                         row.at("savings").get<std::string>(), true);
            }
            flags.require_all_used(id);
            return t;
        }

        // Printed totals are the sum of the printed (truncated) components.
        void add_triplet(TableReport &t, FlagSet &flags, const std::string &prefix, const TechnologyRates &rates,
                         const std::vector<std::string> &published)
        {
            const Rational lte = rates.lte.in_gbps();
            const Rational docsis = rates.docsis.in_gbps();
            const Rational shown_total =
                quantize(lte, 3, Rounding::truncate) + quantize(docsis, 3, Rounding::truncate);
            add_cell(t, flags, prefix + "/LTE", lte, lte, published.at(0), false);
            add_cell(t, flags, prefix + "/DOCSIS", docsis, docsis, published.at(1), false);
            add_cell(t, flags, prefix + "/Total", rates.total().in_gbps(), shown_total, published.at(2), false);
        }

        TableReport comparison_table(const json &def)
        {
            TableReport t;
            t.table_id = "IV";
            t.title = "Fronthaul rates of the functional splits";
            FlagSet flags(def.at("flags"));

            LtePhyProfile lte;
            lte.code_rate = parse_decimal(def.at("code_rate").get<std::string>());
            DocsisPhyProfile docsis;
            docsis.code_rate = lte.code_rate;
            SplitComparisonOptions options;
            options.lte_scaleup = parse_decimal(def.at("lte_scaleup").get<std::string>());
            options.lte_baseband_rounding_step = Bitrate::mbps(Rational(10));

            std::vector<Rational> loads;
            std::vector<std::string> labels;
            for (const auto &row : def.at("rows"))
            {
                labels.push_back(row.at("rho").get<std::string>());
                loads.push_back(parse_decimal(labels.back()));
            }
            const auto rows = split_comparison_table(lte, docsis, loads, options);

            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                const auto &row = def.at("rows").at(i);
                const std::string prefix = "rho=" + labels[i];
                add_triplet(t, flags, prefix + "/with", rows[i].fft_cached, row.at("with").get<std::vector<std::string>>());
                add_triplet(t, flags, prefix + "/without", rows[i].fft_uncached,
                            row.at("without").get<std::vector<std::string>>());
            }
            if (!rows.empty())
            {
                // Load-independent columns.
                const auto bb = def.at("baseband").get<std::vector<std::string>>();
                const auto pb = def.at("passband").get<std::vector<std::string>>();
                const auto &r = rows.front();
                add_cell(t, flags, "baseband/LTE", r.baseband.lte.in_gbps(), r.baseband.lte.in_gbps(), bb.at(0), false);
                add_cell(t, flags, "baseband/DOCSIS", r.baseband.docsis.in_gbps(), r.baseband.docsis.in_gbps(), bb.at(1),
                         false);
                add_cell(t, flags, "baseband/Total", r.baseband.total().in_gbps(), r.baseband.total().in_gbps(),
                         bb.at(2), false);
                add_cell(t, flags, "passband/LTE", r.passband.lte.in_gbps(), r.passband.lte.in_gbps(), pb.at(0), false);
                add_cell(t, flags, "passband/DOCSIS", r.passband.docsis.in_gbps(), r.passband.docsis.in_gbps(),
                         pb.at(1), false);
                add_cell(t, flags, "passband/Total", r.passband.total().in_gbps(), r.passband.total().in_gbps(),
                         pb.at(2), false);
            }
            flags.require_all_used("IV");
            return t;
        }

        const json &document()
        {
            static const json doc = json::parse(published_tables_json());
            return doc;
        }
    } // namespace

    std::string to_string(CellStatus s)
    {
        switch (s)
        {
        case CellStatus::match:
            return "match";
        case CellStatus::flagged:
            return "flagged";
        case CellStatus::mismatch:
            return "mismatch";
        case CellStatus::stale_flag:
            return "stale_flag";
        }
        return "unknown";
    }

    std::size_t TableReport::count(CellStatus s) const
    {
        std::size_t n = 0;
        for (const auto &c : cells)
        {
            n += c.status == s ? 1 : 0;
        }
        return n;
    }

    bool TableReport::passed() const
    {
        return count(CellStatus::mismatch) == 0 && count(CellStatus::stale_flag) == 0;
    }

    const CellComparison &TableReport::cell(std::string_view id) const
    {
        for (const auto &c : cells)
        {
            if (c.id == id)
            {
                return c;
            }
        }
        throw std::out_of_range("table " + table_id + ": no cell " + std::string(id));
    }

    std::string_view published_tables_json() { return detail::published_tables_text; }

    std::vector<TableReport> reproduce_tables()
    {
        const json &tables = document().at("tables");
        return {technology_table("II", tables.at("II")), technology_table("III", tables.at("III")),
                comparison_table(tables.at("IV"))};
    }

    PublishedCacheMemory published_cache_memory()
    {
        const json &m = document().at("cache_memory_bits");
        PublishedCacheMemory p;
        p.rs_bits = m.at("rs").get<std::int64_t>();
        p.pbch_bits = m.at("pbch").get<std::int64_t>();
        p.sch_bits = m.at("sch").get<std::int64_t>();
        p.sib_bits = m.at("sib").at("printed").get<std::int64_t>();
        p.docsis_pilot_bits = m.at("docsis_pilots").get<std::int64_t>();
        return p;
    }
} // namespace rfft
