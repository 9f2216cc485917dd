// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Expected values are derived here from first principles, not from the library.

#include "rfft/caching_model.hpp"
#include "rfft/fft_scheduler.hpp"
#include "rfft/fronthaul_sim.hpp"
#include "rfft/rate_model.hpp"
#include "rfft/tables.hpp"
#include "rfft/traffic.hpp"

#include "json.hpp"
#include "support/stats_oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <tuple>

using namespace rfft;

namespace
{
    struct Check
    {
        bool ok = true;
        std::vector<std::string> lines;

        void expect(bool cond, const std::string &what)
        {
            ok = ok && cond;
            lines.push_back((cond ? "ok    " : "FAIL  ") + what);
        }
        void note(const std::string &what) { lines.push_back("note  " + what); }
    };

    struct Outcome
    {
        int id;
        std::string title;
        bool ok;
    };

    std::vector<Outcome> outcomes;

    void run_criterion(int id, const std::string &title, const std::function<void(Check &)> &body)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Check c;
        try
        {
            body(c);
        }
        catch (const std::exception &e)
        {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title
                  << fmt::format(" ({:.1f} s)", secs) << '\n';
        for (const auto &l : c.lines)
        {
            std::cout << "    " << l << '\n';
        }
        std::cout.flush();
        outcomes.push_back({id, title, c.ok});
    }

    std::string dec(const Rational &v, int places) { return format_decimal(v, places); }

    Rational abs_of(const Rational &v) { return v < 0 ? Rational(-v) : v; }

    unsigned worker_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

    const nlohmann::json &printed()
    {
        static const nlohmann::json doc = nlohmann::json::parse(published_tables_json());
        return doc.at("tables");
    }

    // I/Q rate of a 1 Gbps payload: rho / (CR q) * 2 * 10 bits, in Gbps.
    Rational fft_gbps(const Rational &rho, const Rational &cr, int q) { return rho * 20 / (cr * q); }

    // Printed rate cells are truncated to 3 decimals, savings to 2.
    bool close_rate(const Rational &computed, const std::string &published)
    {
        return abs_of(computed - parse_decimal(published)) <= ratio(1, 1000);
    }
    bool close_pct(const Rational &computed, const std::string &published)
    {
        return abs_of(computed - parse_decimal(published)) <= ratio(1, 100);
    }

    const TableReport &report(const std::vector<TableReport> &all, const std::string &id)
    {
        for (const auto &t : all)
        {
            if (t.table_id == id)
            {
                return t;
            }
        }
        throw std::runtime_error("no table " + id);
    }

    // Compares a rate table against the oracle and the library, returning the ids
    // of cells that differ from print.
    std::vector<std::string> check_rate_table(Check &c, const std::string &id, int q, const Rational &overhead)
    {
        const auto &def = printed().at(id);
        const auto all = reproduce_tables();
        const TableReport &lib = report(all, id);
        std::vector<std::string> off;
        int cells = 0;
        bool library_agrees = true;
        for (const auto &row : def.at("rows"))
        {
            const std::string rho_text = row.at("rho").get<std::string>();
            const Rational rho = parse_decimal(rho_text);
            const auto crs = def.at("code_rates").get<std::vector<std::string>>();
            for (std::size_t i = 0; i < crs.size(); ++i)
            {
                const Rational cr = parse_decimal(crs[i]);
                const Rational with = fft_gbps(rho, cr, q);
                const Rational without = with + overhead * fft_gbps(1, cr, q);
                const std::string prefix = "rho=" + rho_text + "/CR=" + crs[i];
                for (const auto &[suffix, value, published] :
                     {std::tuple{"/with", with, row.at("with").at(i).get<std::string>()},
                      std::tuple{"/without", without, row.at("without").at(i).get<std::string>()}})
                {
                    ++cells;
                    const auto &cell = lib.cell(prefix + suffix);
                    library_agrees = library_agrees && cell.exact == value;
                    if (!close_rate(value, published))
                    {
                        off.push_back(prefix + suffix + " computed " + dec(value, 3) + " printed " + published);
                    }
                }
            }
            const Rational with = fft_gbps(rho, parse_decimal(crs.front()), q);
            const Rational ovh = overhead * fft_gbps(1, parse_decimal(crs.front()), q);
            const Rational savings = ovh / (with + ovh) * 100;
            ++cells;
            library_agrees = library_agrees && lib.cell("rho=" + rho_text + "/savings").exact == savings;
            if (!close_pct(savings, row.at("savings").get<std::string>()))
            {
                off.push_back("rho=" + rho_text + "/savings computed " + dec(savings, 2) + " printed " +
                              row.at("savings").get<std::string>());
            }
        }
        c.expect(cells == 28, fmt::format("table {}: {} cells checked (24 rates, 4 savings)", id, cells));
        c.expect(library_agrees, "table " + id + ": library values equal the independent formula exactly");
        c.expect(lib.count(CellStatus::mismatch) == 0 && lib.count(CellStatus::stale_flag) == 0,
                 fmt::format("table {}: library report has {} match, {} flagged, {} mismatch, {} stale", id,
                             lib.count(CellStatus::match), lib.count(CellStatus::flagged),
                             lib.count(CellStatus::mismatch), lib.count(CellStatus::stale_flag)));
        return off;
    }

    // ---------------------------------------------------------------- criteria

    void criterion_1(Check &c)
    {
        const LtePhyProfile lte;
        const DocsisPhyProfile docsis;
        // 2 * carrier * 10 bits; oversampled complex sampling; 1200 x 2K / 66.7 us.
        c.expect(passband_rate(lte).bps == Rational(2) * 2'000'000'000 * 10, "LTE passband 40 Gbps");
        c.expect(passband_rate(docsis).bps == Rational(2) * 1'000'000'000 * 10, "DOCSIS passband 20 Gbps");
        c.expect(baseband_rate(lte).bps == Rational(2) * 30'720'000 * 2 * 10,
                 "LTE baseband " + format_gbps(baseband_rate(lte), 4) + " Gbps (1.2288)");
        c.expect(baseband_rate(docsis).bps == Rational(2) * 204'800'000 * 2 * 10,
                 "DOCSIS baseband " + format_gbps(baseband_rate(docsis), 3) + " Gbps (8.192)");
        const Rational fd_mbps = freq_domain_rate(lte).bps / 1'000'000;
        c.expect(fd_mbps == Rational(1200 * 20) / parse_decimal("66.7") && dec(fd_mbps, 1) == "359.8",
                 "frequency-domain " + dec(fd_mbps, 3) + " Mbps (359.8)");
        const auto all = reproduce_tables();
        const auto &iv = report(all, "IV");
        for (const char *id : {"baseband/LTE", "baseband/DOCSIS", "baseband/Total", "passband/LTE", "passband/DOCSIS",
                               "passband/Total"})
        {
            const auto &cell = iv.cell(id);
            c.expect(cell.status == CellStatus::match,
                     std::string("comparison table ") + id + " " + dec(cell.exact, 3) + " vs printed " + cell.published);
        }
        c.expect(iv.cell("baseband/LTE").exact == parse_decimal("1.23") * 15,
                 "comparison table LTE baseband scales the 10 Mbps-rounded 1.23 Gbps by 15");
    }

    void criterion_2(Check &c)
    {
        const auto off = check_rate_table(c, "II", 6, ratio(7, 100));
        c.expect(off.size() == 1 && off.front().rfind("rho=1/CR=0.9/with ", 0) == 0,
                 fmt::format("exactly one cell differs from print: {}", off.empty() ? "none" : off.front()));
        const auto all = reproduce_tables();
        const auto &cell = report(all, "II").cell("rho=1/CR=0.9/with");
        c.expect(cell.display == "3.704" && cell.status == CellStatus::flagged,
                 "rho=1 CR=0.9 with caching outputs " + cell.display + ", flags printed " + cell.published);
        const auto &sav = report(all, "II").cell("rho=1/savings");
        c.expect(sav.status == CellStatus::match && close_pct(sav.exact, "6.54"),
                 "rho=1 savings " + dec(sav.exact, 4) + " % matches printed 6.54");
    }

    void criterion_3(Check &c)
    {
        const auto off = check_rate_table(c, "III", 12, ratio(3, 100));
        c.expect(off.empty(), fmt::format("DOCSIS table: {} cells differ from print", off.size()));

        const auto &def = printed().at("IV");
        const auto all = reproduce_tables();
        const auto &iv = report(all, "IV");
        const Rational cr = parse_decimal(def.at("code_rate").get<std::string>());
        std::vector<std::string> differing;
        bool library_agrees = true;
        for (const auto &row : def.at("rows"))
        {
            const std::string rho_text = row.at("rho").get<std::string>();
            const Rational rho = parse_decimal(rho_text);
            const Rational lte_with = fft_gbps(rho, cr, 6);
            const Rational docsis_with = fft_gbps(rho, cr, 12);
            const Rational lte_without = lte_with + ratio(7, 100) * fft_gbps(1, cr, 6);
            const Rational docsis_without = docsis_with + ratio(3, 100) * fft_gbps(1, cr, 12);
            for (const auto &[col, lte, docsis] :
                 {std::tuple{"with", lte_with, docsis_with}, std::tuple{"without", lte_without, docsis_without}})
            {
                const auto cells = row.at(col).get<std::vector<std::string>>();
                const Rational total = quantize(lte, 3, Rounding::truncate) + quantize(docsis, 3, Rounding::truncate);
                const std::string prefix = "rho=" + rho_text + "/" + col;
                library_agrees = library_agrees && iv.cell(prefix + "/LTE").exact == lte &&
                                 iv.cell(prefix + "/DOCSIS").exact == docsis &&
                                 iv.cell(prefix + "/Total").presented == total;
                for (const auto &[name, value, published] : {std::tuple{"/LTE", lte, cells.at(0)},
                                                         std::tuple{"/DOCSIS", docsis, cells.at(1)},
                                                         std::tuple{"/Total", total, cells.at(2)}})
                {
                    if (!close_rate(value, published))
                    {
                        differing.push_back(prefix + name);
                        const auto &cell = iv.cell(prefix + name);
                        c.note(fmt::format("{} computed {} printed {}: library status {}", prefix + name,
                                           dec(value, 4), published, to_string(cell.status)));
                    }
                }
            }
        }
        c.expect(library_agrees, "comparison table: library values equal the independent formula");
        c.expect(iv.count(CellStatus::mismatch) == 0 && iv.count(CellStatus::stale_flag) == 0,
                 fmt::format("comparison table: {} match, {} flagged, 0 unexplained", iv.count(CellStatus::match),
                             iv.count(CellStatus::flagged)));

        const auto &with_lte = iv.cell("rho=1.00/with/LTE");
        const auto &with_total = iv.cell("rho=1.00/with/Total");
        c.expect(with_lte.status == CellStatus::flagged && with_lte.display == "3.704",
                 "rho=1 LTE with caching inherits the LTE-table flag (3.704 vs printed 3.333)");
        c.expect(with_total.status == CellStatus::flagged && close_rate(with_total.exact, "5.555") &&
                     with_total.exact == fft_gbps(1, cr, 6) + fft_gbps(1, cr, 12),
                 "rho=1 total with caching flagged: exact " + dec(with_total.exact, 4) +
                     " (5.555 within 0.001; truncated-cell sum " + dec(with_total.presented, 3) +
                     ") vs printed 5.184");

        // Beyond the expected flag, the printed rho=1 uncached LTE cell (3.926)
        // disagrees with the same parameters in the LTE table (3.962) and with the
        // formula (3.963); its total (5.833) carries the same digits.
        const std::vector<std::string> expected = {"rho=1.00/with/LTE", "rho=1.00/with/Total",
                                                   "rho=1.00/without/LTE", "rho=1.00/without/Total"};
        c.expect(differing == expected, fmt::format("cells differing from print: {}", differing.size()));
        const auto &lte_table = printed().at("II").at("rows").at(3).at("without").at(0).get<std::string>();
        const auto &without_lte = iv.cell("rho=1.00/without/LTE");
        c.expect(without_lte.status == CellStatus::flagged && close_rate(without_lte.exact, lte_table),
                 "rho=1 uncached LTE: printed " + without_lte.published + " contradicts the LTE table's " + lte_table +
                     " for the same parameters; computed " + without_lte.display);
        c.note("ADDITIONAL FLAGS: the uncached rho=1 LTE and Total cells are flagged as misprints on top of the");
        c.note("expected cached-LTE flag; the printed 3.926 is inconsistent with the rest of the published values");
    }

    void criterion_4(Check &c)
    {
        const Rational one(1);
        const auto g14 = LteGridParams::bandwidth_1_4mhz();
        struct Row
        {
            const char *name;
            Rational value;
            Rational oracle; // repeating elements / all elements per period
            const char *expected_pct;
        };
        const Row rows[] = {
            {"RS", rs_overhead(one), ratio(8, 12 * 14), "4.76"},
            {"PBCH", pbch_overhead(one), ratio(6 * 12 * 4 - 8 * 6, 1200 * 14 * 10), "0.142"},
            {"PBCH 1.4 MHz", pbch_overhead(one, g14), ratio(6 * 12 * 4 - 8 * 6, 72 * 14 * 10), "2.38"},
            {"SCH", sch_overhead(one), ratio(6 * 12 * 4, 1200 * 14 * 10), "0.171"},
            {"SCH 1.4 MHz", sch_overhead(one, g14), ratio(6 * 12 * 4, 72 * 14 * 10), "2.86"},
            {"SIB", sib_overhead(one), ratio(8 * 12 * 14 - 8 * 8, 1200 * 14 * 20), "0.381"},
            {"SIB 1.4 MHz", sib_overhead(one, g14), ratio(8 * 12 * 14 - 8 * 8, 72 * 14 * 20), "6.35"},
            {"DOCSIS pilots", docsis_pilot_overhead(one), ratio(80 + 88 + 60, 7680), "2.97"},
        };
        for (const auto &r : rows)
        {
            const Rational pct = r.value * 100;
            c.expect(r.value == r.oracle && close_pct(pct, r.expected_pct),
                     fmt::format("{} {} % (expected {} % within 0.01 pp)", r.name, dec(pct, 4), r.expected_pct));
        }

        RngStream rng(2024, 0);
        int exact = 0;
        for (int i = 0; i < 100; ++i)
        {
            const Rational rho = ratio(static_cast<std::int64_t>(rng.next_u64() % 1'000'000) + 1, 1'000'000);
            const bool ok = rs_overhead(rho) * rho == rs_overhead(one) && pbch_overhead(rho) * rho == pbch_overhead(one) &&
                            sch_overhead(rho) * rho == sch_overhead(one) && sib_overhead(rho) * rho == sib_overhead(one) &&
                            docsis_pilot_overhead(rho) * rho == docsis_pilot_overhead(one) &&
                            pbch_overhead(rho, g14) * rho == pbch_overhead(one, g14);
            exact += ok ? 1 : 0;
        }
        c.expect(exact == 100, fmt::format("overhead(rho) * rho == overhead(1) exactly for {}/100 random rho", exact));
        bool infinite = false;
        try
        {
            rs_overhead(Rational(0));
        }
        catch (const InfiniteOverhead &)
        {
            infinite = true;
        }
        c.expect(infinite, "rho = 0 reports an unbounded overhead");
    }

    void criterion_5(Check &c)
    {
        const auto m = cache_memory();
        // Repeating QAM symbols x 2 x 10 bits.
        c.expect(m.rs_bits == 8 * 100 * 20 && m.rs_bits == 16000, fmt::format("RS {} bits", m.rs_bits));
        c.expect(m.pbch_bits == (6 * 12 * 4 - 8 * 6) * 20 && m.pbch_bits == 4800, fmt::format("PBCH {} bits", m.pbch_bits));
        c.expect(m.sch_bits == 6 * 12 * 4 * 20 && m.sch_bits == 5760, fmt::format("SCH {} bits", m.sch_bits));
        c.expect(m.docsis_pilot_bits == (80 + 88 + 60) * 20 && m.docsis_pilot_bits == 4560,
                 fmt::format("DOCSIS pilots {} bits", m.docsis_pilot_bits));
        c.expect(m.sib_bits == (8 * 12 * 14 - 8 * 8) * 20 && m.sib_bits == 25600, fmt::format("SIB {} bits", m.sib_bits));
        const auto p = published_cache_memory();
        c.expect(p.rs_bits == m.rs_bits && p.pbch_bits == m.pbch_bits && p.sch_bits == m.sch_bits &&
                     p.docsis_pilot_bits == m.docsis_pilot_bits,
                 "RS, PBCH, SCH and pilot memory equal the printed values");
        const bool flagged = m.discrepancies.size() == 1 && m.discrepancies[0].component == "sib" &&
                             m.discrepancies[0].published_bits == 5760 && p.sib_bits == 5760;
        c.expect(flagged, "SIB discrepancy flagged against the printed 5760");
    }

    void criterion_6(Check &c)
    {
        RngStream rng(606, 0);
        auto draw = [&] {
            const auto tc = static_cast<std::int64_t>(2 + rng.next_u64() % 199);
            const auto tl = static_cast<std::int64_t>(2 + rng.next_u64() % 199);
            const auto cc = static_cast<std::int64_t>(1 + rng.next_u64() % static_cast<std::uint64_t>(tc));
            const auto cl = static_cast<std::int64_t>(1 + rng.next_u64() % static_cast<std::uint64_t>(tl));
            return std::vector<PeriodicTask>{{"cable", SimTime::from_ns(tc), SimTime::from_ns(cc)},
                                             {"lte", SimTime::from_ns(tl), SimTime::from_ns(cl)}};
        };

        int accepted = 0, clean = 0, repeating = 0;
        while (accepted < 1000)
        {
            const auto tasks = draw();
            if (!nonpreemptive_conditions(tasks[0], tasks[1]).schedulable())
            {
                continue;
            }
            ++accepted;
            const SimTime h = hyperperiod(tasks);
            const auto tl = edf_timeline(tasks, h * 2);
            clean += tl.misses.empty() ? 1 : 0;

            std::vector<const TimelineEntry *> first, second;
            for (const auto &e : tl.entries)
            {
                (e.release < h ? first : second).push_back(&e);
            }
            bool same = first.size() == second.size();
            for (std::size_t i = 0; same && i < first.size(); ++i)
            {
                same = first[i]->task == second[i]->task && second[i]->start - h == first[i]->start &&
                       second[i]->finish - h == first[i]->finish && second[i]->release - h == first[i]->release;
            }
            repeating += same ? 1 : 0;
        }
        c.expect(clean == 1000, fmt::format("{}/1000 schedulable sets have no miss over two hyperperiods", clean));
        c.expect(repeating == 1000, fmt::format("{}/1000 repeat the first hyperperiod in the second", repeating));

        int overloaded = 0, missed = 0;
        while (overloaded < 1000)
        {
            const auto tasks = draw();
            // Busy time over period, summed as integers.
            const auto t0 = tasks[0].period.ps(), t1 = tasks[1].period.ps();
            if (tasks[0].compute_time.ps() * t1 + tasks[1].compute_time.ps() * t0 <= t0 * t1)
            {
                continue;
            }
            ++overloaded;
            missed += edf_timeline(tasks, hyperperiod(tasks) * 2).misses.empty() ? 0 : 1;
        }
        c.expect(missed == 1000, fmt::format("{}/1000 sets with utilization > 1 miss a deadline", missed));

        const PeriodicTask cable{"cable", SimTime::from_us(40), SimTime::from_us(20)};
        const PeriodicTask lte{"lte", SimTime::from_ns(71'400), SimTime::from_us(10)};
        const std::vector<PeriodicTask> defaults{cable, lte};
        c.expect(nonpreemptive_schedulable_pair(cable, lte) &&
                     edf_timeline(defaults, hyperperiod(defaults) * 2).misses.empty(),
                 "default DOCSIS 40/20 us and LTE 71.4/10 us symbols share one FFT module");
    }

    void criterion_7(Check &c)
    {
        TrafficConfig poisson;
        poisson.rho = 0.2;
        auto gen = make_generator(poisson, RngStream(77, 1), 1e9 / 200, 0.8e9);
        std::vector<double> gaps;
        SimTime prev;
        for (int i = 0; i < 100'000; ++i)
        {
            const Arrival a = gen->next();
            gaps.push_back((a.time - prev).seconds());
            prev = a.time;
        }
        const double mean_gap = 472.0 * 8.0 / (0.2 * 1e9 / 200);
        const double d = oracle::ks_exponential(gaps, mean_gap);
        c.expect(d < oracle::ks_critical_1pct(gaps.size()),
                 fmt::format("H=0.5 interarrivals: KS D = {:.5f} < {:.5f} (1 % level, 1e5 samples)", d,
                             oracle::ks_critical_1pct(gaps.size())));

        // One source at rho = 0.1 of 1 Gbps, 5 ms bins over 2^20 bins.
        TrafficConfig lrd;
        lrd.hurst = 0.8;
        lrd.rho = 0.1;
        auto src = make_generator(lrd, RngStream(78, 1), 1e9, 1e9);
        const SimTime bin = SimTime::from_ms(5);
        std::vector<double> series(std::size_t{1} << 20, 0.0);
        for (Arrival a = src->next(); a.time.ps() / bin.ps() < static_cast<std::int64_t>(series.size()); a = src->next())
        {
            series[static_cast<std::size_t>(a.time.ps() / bin.ps())] += a.bytes;
        }
        const double h = oracle::hurst_aggregated_variance(series, 3);
        c.expect(h >= 0.72 && h <= 0.88,
                 fmt::format("H=0.8 source: aggregated-variance Hurst {:.3f} in [0.72, 0.88] "
                             "(16 ON/OFF sub-sources, 5 ms bins, {:.0f} s)",
                             h, bin.seconds() * static_cast<double>(series.size())));

        for (double hurst : {0.5, 0.8})
        {
            TrafficConfig t;
            t.hurst = hurst;
            t.rho = 0.2;
            const SimTime end = SimTime::from_seconds(600.0);
            double bytes = 0.0;
            for (int i = 0; i < 200; ++i)
            {
                auto g = make_generator(t, RngStream(79, static_cast<std::uint64_t>(i) + 1), 1e9 / 200, 0.8e9);
                for (Arrival a = g->next(); a.time < end; a = g->next())
                {
                    bytes += a.bytes;
                }
            }
            const double offered = 8.0 * bytes / end.seconds();
            const double err = offered / 0.2e9 - 1.0;
            c.expect(std::fabs(err) <= 0.01, fmt::format("H={} 200 sources over 600 s offer {:.4f} Gbps ({:+.3f} %)",
                                                         hurst, offered / 1e9, 100.0 * err));
        }
    }

    ScenarioConfig desk(RemoteNodeMode mode, double rho_c, double rho_b)
    {
        ScenarioConfig s;
        s.mode = mode;
        s.rho_c = rho_c;
        s.rho_b = rho_b;
        s.duration_s = 60.0;
        s.warmup_s = 10.0;
        s.num_cms = 200;
        s.seed = 1;
        return s;
    }

    double us(double s) { return s * 1e6; }

    void criterion_8(Check &c)
    {
        const unsigned threads = worker_threads();

        // (a)
        std::vector<ScenarioConfig> grid;
        for (double rho_b : {0.2, 0.5, 0.8})
        {
            grid.push_back(desk(RemoteNodeMode::rphy, 0.2, rho_b));
            grid.push_back(desk(RemoteNodeMode::rfft, 0.2, rho_b));
        }
        auto res = scenario_sweep(grid, threads);
        for (std::size_t i = 0; i < res.size(); i += 2)
        {
            const double rphy = res[i].docsis.mean_s();
            const double rfft = res[i + 1].docsis.mean_s();
            const double rel = (rfft - rphy) / rphy;
            c.expect(std::fabs(rel) <= 0.05,
                     fmt::format("(a) rho_B={}: DOCSIS R-FFT {:.2f} us vs R-PHY {:.2f} us ({:+.2f} %)",
                                 grid[i].rho_b, us(rfft), us(rphy), 100.0 * rel));
        }

        // (b)
        grid = {desk(RemoteNodeMode::rfft, 0.6, 0.93), desk(RemoteNodeMode::rphy, 0.6, 0.93),
                desk(RemoteNodeMode::rphy, 0.6, 0.97)};
        res = scenario_sweep(grid, threads);
        const char *labels[] = {"R-FFT rho_B=0.93", "R-PHY rho_B=0.93", "R-PHY rho_B=0.97"};
        const bool want[] = {true, false, true};
        for (std::size_t i = 0; i < res.size(); ++i)
        {
            c.expect(res[i].saturated == want[i],
                     fmt::format("(b) rho_C=0.6 {}: {} (queue growth {:.3g} bit/s)", labels[i],
                                 res[i].saturated ? "saturated" : "stable", res[i].fronthaul_growth_bps));
        }

        // (c)
        grid = {desk(RemoteNodeMode::rphy, 0.2, 0.2), desk(RemoteNodeMode::rphy, 0.2, 0.2)};
        grid[0].distance_km = 50.0;
        grid[1].distance_km = 10.0;
        res = scenario_sweep(grid, threads);
        const double diff = us(res[0].lte.mean_s() - res[1].lte.mean_s());
        // 40 km of fiber at 2e5 km/s.
        const double expected = 40.0 / 2.0e5 * 1e6;
        c.expect(std::fabs(diff - expected) <= 10.0,
                 fmt::format("(c) LTE delay 50 km minus 10 km = {:.2f} us ({:.0f} +- 10 us)", diff, expected));

        // (d) Pooled over seeds 1..16: a single run's DOCSIS delay moves with the
        // seed by more than the burstiness effect.
        grid.clear();
        const int seeds = 16;
        for (auto mode : {RemoteNodeMode::rphy, RemoteNodeMode::rfft})
        {
            for (double hurst : {0.5, 0.8})
            {
                for (int seed = 1; seed <= seeds; ++seed)
                {
                    ScenarioConfig s = desk(mode, 0.2, 0.5);
                    s.hurst = hurst;
                    s.seed = static_cast<std::uint64_t>(seed);
                    s.lte_traffic = LteTraffic::bursty;
                    grid.push_back(s);
                }
            }
        }
        res = scenario_sweep(grid, threads);
        c.note("(d) LTE traffic follows the scenario's arrival process (lte_traffic = bursty)");
        for (std::size_t m = 0; m < 2; ++m)
        {
            double sum[2][2] = {};
            int wins = 0;
            for (int k = 0; k < seeds; ++k)
            {
                const auto &lo = res[m * 2 * seeds + static_cast<std::size_t>(k)];
                const auto &hi = res[m * 2 * seeds + seeds + static_cast<std::size_t>(k)];
                sum[0][0] += lo.docsis.mean_s();
                sum[0][1] += lo.lte.mean_s();
                sum[1][0] += hi.docsis.mean_s();
                sum[1][1] += hi.lte.mean_s();
                wins += hi.docsis.mean_s() > lo.docsis.mean_s() ? 1 : 0;
            }
            const std::string mode = m == 0 ? "R-PHY" : "R-FFT";
            c.expect(sum[1][0] > sum[0][0],
                     fmt::format("(d) {} DOCSIS mean over {} seeds: H=0.8 {:.3f} us > H=0.5 {:.3f} us "
                                 "(higher in {}/{} seeds)",
                                 mode, seeds, us(sum[1][0] / seeds), us(sum[0][0] / seeds), wins, seeds));
            c.expect(sum[1][1] > sum[0][1], fmt::format("(d) {} LTE mean over {} seeds: H=0.8 {:.3f} us > H=0.5 {:.3f} us",
                                                        mode, seeds, us(sum[1][1] / seeds), us(sum[0][1] / seeds)));
        }
    }

    std::string scenario_output(const ScenarioConfig &cfg)
    {
        std::ostringstream packets;
        RunOptions opt;
        opt.packets_out = &packets;
        const auto r = run_scenario(cfg, opt);
        return csv_header() + csv_row(r) + packets.str();
    }

    void criterion_9(Check &c)
    {
        ScenarioConfig cfg = desk(RemoteNodeMode::rfft, 0.3, 0.6);
        cfg.hurst = 0.8;
        cfg.duration_s = 5.0;
        cfg.warmup_s = 1.0;
        cfg.seed = 99;
        const std::string a = scenario_output(cfg);
        const std::string b = scenario_output(cfg);
        c.expect(a == b, fmt::format("R-FFT H=0.8 rerun: {} bytes of summary + per-packet CSV identical", a.size()));

        cfg.mode = RemoteNodeMode::rphy;
        cfg.hurst = 0.5;
        cfg.lte_traffic = LteTraffic::bursty;
        const auto first = scenario_sweep({cfg, cfg}, 2);
        const std::string row = csv_row(first[0]);
        c.expect(row == csv_row(first[1]) && row == csv_row(run_scenario(cfg)),
                 "R-PHY rerun identical sequentially and across sweep threads");
        cfg.seed = 100;
        c.expect(csv_row(run_scenario(cfg)) != row, "a different seed changes the output");
    }
}

int main()
{
    std::cout << "R-FFT fronthaul acceptance suite\n";
    run_criterion(1, "analytical split rates", criterion_1);
    run_criterion(2, "LTE FFT-split rate table", criterion_2);
    run_criterion(3, "DOCSIS rate table and split comparison table", criterion_3);
    run_criterion(4, "caching overheads", criterion_4);
    run_criterion(5, "cache memory", criterion_5);
    run_criterion(6, "shared FFT scheduler", criterion_6);
    run_criterion(7, "traffic generators", criterion_7);
    run_criterion(8, "upstream simulation (60 s + 10 s warm-up, 200 CMs)", criterion_8);
    run_criterion(9, "deterministic replay", criterion_9);

    int failed = 0;
    for (const auto &o : outcomes)
    {
        failed += o.ok ? 0 : 1;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", outcomes.size() - static_cast<std::size_t>(failed),
                             outcomes.size());
    return failed == 0 ? 0 : 1;
}
