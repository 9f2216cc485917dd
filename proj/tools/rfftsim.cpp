// rfftsim: fronthaul rate tables, caching overheads, FFT sharing schedules and
// the upstream R-PHY / R-FFT delay simulator.

#include "rfft/caching_model.hpp"
#include "rfft/fft_scheduler.hpp"
#include "rfft/fronthaul_sim.hpp"
#include "rfft/rate_model.hpp"
#include "rfft/scenario.hpp"
#include "rfft/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    using namespace rfft;
    using nlohmann::json;

    // Where an output goes: the explicit path, else $RFFT_OUTPUT_DIR/<fallback>,
    // else stdout.
    class Output
    {
    public:
        Output(const std::string &path, const std::string &fallback_name)
        {
            std::string target = path;
            if (target.empty())
            {
                if (const char *dir = std::getenv("RFFT_OUTPUT_DIR"); dir && *dir)
                {
                    std::filesystem::create_directories(dir);
                    target = (std::filesystem::path(dir) / fallback_name).string();
                }
            }
            if (!target.empty())
            {
                file_.open(target, std::ios::binary);
                if (!file_)
                {
                    throw std::runtime_error("cannot open " + target + " for writing");
                }
            }
        }

        std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

    private:
        std::ofstream file_;
    };

    std::string bps(const Bitrate &r) { return format_decimal(r.bps, 3); }

    // rates ---------------------------------------------------------------

    struct RatesArgs
    {
        std::vector<std::string> rho{"0.01", "0.1", "0.2", "1"};
        std::vector<std::string> code_rate{"0.9", "0.7", "0.5"};
        std::string out;
    };

    int run_rates(const RatesArgs &a)
    {
        Output out(a.out, "rates.csv");
        std::ostream &os = out.stream();
        const LtePhyProfile lte;
        const DocsisPhyProfile docsis;
        os << "split,technology,rho,code_rate,qam_bits,rate_bps,savings_pct\n";
        os << "passband,LTE,,,," << bps(passband_rate(lte)) << ",\n";
        os << "passband,DOCSIS,,,," << bps(passband_rate(docsis)) << ",\n";
        os << "baseband,LTE,,,," << bps(baseband_rate(lte)) << ",\n";
        os << "baseband,DOCSIS,,,," << bps(baseband_rate(docsis)) << ",\n";
        os << "frequency_domain,LTE,,,," << bps(freq_domain_rate(lte)) << ",\n";

        struct Tech
        {
            const char *name;
            int qam_bits;
            Rational overhead;
        };
        const Tech techs[] = {{"LTE", lte.qam_bits, lte_table_overhead()},
                              {"DOCSIS", docsis.qam_bits, docsis_table_overhead()}};
        for (const Tech &t : techs)
        {
            for (const std::string &rho : a.rho)
            {
                for (const std::string &cr : a.code_rate)
                {
                    const auto r = fft_split_total_rate(TrafficLoad{parse_decimal(rho), Bitrate::gbps(1)},
                                                        parse_decimal(cr), t.qam_bits, 10, t.overhead);
                    const std::string savings = format_decimal(r.savings_percent(), 2);
                    os << "fft_cached," << t.name << ',' << rho << ',' << cr << ',' << t.qam_bits << ','
                       << bps(r.payload) << ",\n";
                    os << "fft_uncached," << t.name << ',' << rho << ',' << cr << ',' << t.qam_bits << ','
                       << bps(r.total) << ',' << savings << '\n';
                }
            }
        }
        return 0;
    }

    // caching -------------------------------------------------------------

    struct CachingArgs
    {
        std::string rho = "1";
        std::string technology = "all";
        std::string out;
    };

    int run_caching(const CachingArgs &a)
    {
        const Rational rho = parse_decimal(a.rho);
        std::vector<CacheProfile> profiles;
        if (a.technology == "lte" || a.technology == "all")
        {
            profiles.push_back(lte_cache_profile(rho));
        }
        if (a.technology == "docsis" || a.technology == "all")
        {
            profiles.push_back(docsis_cache_profile(rho));
        }
        if (profiles.empty())
        {
            throw std::invalid_argument("technology must be lte, docsis or all");
        }

        Output out(a.out, "caching.csv");
        std::ostream &os = out.stream();
        os << "technology,component,overhead_pct,memory_bits\n";
        for (const auto &p : profiles)
        {
            for (const auto &c : p.components)
            {
                os << to_string(p.technology) << ',' << c.name << ',' << format_decimal(c.fraction * 100, 4) << ','
                   << c.memory_bits << '\n';
            }
            os << to_string(p.technology) << ",total," << format_decimal(p.overhead_fraction * 100, 4) << ','
               << p.memory_bits << '\n';
        }
        for (const auto &d : cache_memory().discrepancies)
        {
            std::cerr << "note: " << d.component << " memory " << d.computed_bits << " bits (published "
                      << d.published_bits << "): " << d.note << '\n';
        }
        return 0;
    }

    // schedule ------------------------------------------------------------

    struct ScheduleArgs
    {
        std::string cable_period = "40us";
        std::string cable_compute = "20us";
        std::string lte_period = "71.4us";
        std::string lte_compute = "10us";
        std::string guard = "0us";
        int hyperperiods = 2;
        std::string out;
    };

    SimTime duration_arg(const std::string &text)
    {
        return SimTime::from_ps(std::llround(parse_quantity(text, "us") * 1e6));
    }

    int run_schedule(const ScheduleArgs &a)
    {
        const SimTime guard = duration_arg(a.guard);
        const std::vector<PeriodicTask> tasks = {
            {"DOCSIS", duration_arg(a.cable_period), duration_arg(a.cable_compute), guard, {}},
            {"LTE", duration_arg(a.lte_period), duration_arg(a.lte_compute), guard, {}},
        };
        for (const auto &t : tasks)
        {
            t.validate();
        }
        if (a.hyperperiods < 1)
        {
            throw std::invalid_argument("hyperperiods must be at least 1");
        }
        const SimTime hp = hyperperiod(tasks);
        const auto timeline = edf_timeline(tasks, hp * a.hyperperiods);
        const PairConditions cond = nonpreemptive_conditions(tasks[0], tasks[1]);

        Output out(a.out, "schedule.csv");
        std::ostream &os = out.stream();
        os << "# utilization " << format_decimal(utilization(tasks), 6) << '\n';
        os << "# hyperperiod_ps " << hp.ps() << '\n';
        os << "# preemptive_schedulable " << (preemptive_schedulable(tasks) ? "yes" : "no") << '\n';
        os << "# nonpreemptive_schedulable " << (cond.schedulable() ? "yes" : "no") << '\n';
        os << "# misses " << timeline.misses.size() << '\n';
        os << "task,job,release_ps,start_ps,finish_ps,deadline_ps,missed\n";
        for (const auto &e : timeline.entries)
        {
            os << e.task << ',' << e.job << ',' << e.release.ps() << ',' << e.start.ps() << ',' << e.finish.ps() << ','
               << e.deadline.ps() << ',' << (e.missed() ? 1 : 0) << '\n';
        }
        return 0;
    }

    // tables --------------------------------------------------------------

    struct TablesArgs
    {
        bool as_json = false;
        std::string out;
    };

    int run_tables(const TablesArgs &a)
    {
        const auto reports = reproduce_tables();
        bool ok = true;
        Output out(a.out, a.as_json ? "tables.json" : "tables.csv");
        std::ostream &os = out.stream();
        if (a.as_json)
        {
            json doc = json::array();
            for (const auto &r : reports)
            {
                json cells = json::array();
                for (const auto &c : r.cells)
                {
                    cells.push_back({{"cell", c.id},
                                     {"computed", c.display},
                                     {"published", c.published},
                                     {"delta", format_decimal(c.delta, 6)},
                                     {"status", to_string(c.status)},
                                     {"note", c.note}});
                }
                doc.push_back({{"table", r.table_id}, {"title", r.title}, {"passed", r.passed()}, {"cells", cells}});
                ok = ok && r.passed();
            }
            os << doc.dump(2) << '\n';
        }
        else
        {
            os << "table,cell,computed,published,delta,status,note\n";
            for (const auto &r : reports)
            {
                for (const auto &c : r.cells)
                {
                    os << r.table_id << ',' << c.id << ',' << c.display << ',' << c.published << ','
                       << format_decimal(c.delta, 6) << ',' << to_string(c.status) << ",\"" << c.note << "\"\n";
                }
                ok = ok && r.passed();
            }
        }
        for (const auto &r : reports)
        {
            std::cerr << "table " << r.table_id << ": " << r.count(CellStatus::match) << " match, "
                      << r.count(CellStatus::flagged) << " flagged, " << r.count(CellStatus::mismatch)
                      << " mismatch, " << r.count(CellStatus::stale_flag) << " stale flags\n";
        }
        return ok ? 0 : 1;
    }

    // simulate / sweep ----------------------------------------------------

    struct SimulateArgs
    {
        std::string config;
        std::map<std::string, std::string> overrides; // config key -> value
        std::string out;
        std::string packets_out;
        std::string trace_out;
        bool as_json = false;
    };

    json result_json(const ScenarioResult &r)
    {
        auto stats = [](const DelayStats &s) {
            const double mean = s.mean_s();
            return json{{"count", s.count},
                        {"mean_s", std::isnan(mean) ? json(nullptr) : json(mean)},
                        {"max_s", s.max.seconds()},
                        {"warmup_excluded_s", s.warmup_excluded_s},
                        {"measurement_duration_s", s.measurement_duration_s}};
        };
        json config = json::object();
        std::istringstream lines(serialize(r.config));
        for (std::string line; std::getline(lines, line);)
        {
            const auto eq = line.find(" = ");
            config[line.substr(0, eq)] = line.substr(eq + 3);
        }
        return json{{"config", config},
                    {"docsis", stats(r.docsis)},
                    {"lte", stats(r.lte)},
                    {"saturated", r.saturated},
                    {"fronthaul_growth_bps", r.fronthaul_growth_bps},
                    {"backlog_growth_bps", r.backlog_growth_bps},
                    {"cable_packets_generated", r.cable_packets_generated},
                    {"cable_packets_delivered", r.cable_packets_delivered},
                    {"events", r.events},
                    {"warnings", r.warnings}};
    }

    int run_simulate(const SimulateArgs &a)
    {
        ScenarioConfig cfg = a.config.empty() ? ScenarioConfig{} : parse_config(a.config);
        for (const auto &[key, value] : a.overrides)
        {
            apply_setting(cfg, key, value);
        }
        cfg.validate();

        if (!a.trace_out.empty())
        {
            std::ofstream trace(a.trace_out, std::ios::binary);
            if (!trace)
            {
                throw std::runtime_error("cannot open " + a.trace_out);
            }
            write_cm_traces(cfg, trace);
        }

        RunOptions options;
        std::ofstream packets;
        if (!a.packets_out.empty())
        {
            packets.open(a.packets_out, std::ios::binary);
            if (!packets)
            {
                throw std::runtime_error("cannot open " + a.packets_out);
            }
            packets << "cm_id,created_ps,delivered_ps\n";
            options.packets_out = &packets;
        }

        const ScenarioResult r = run_scenario(cfg, options);
        for (const auto &w : r.warnings)
        {
            std::cerr << "warning: " << w << '\n';
        }
        Output out(a.out, a.as_json ? "simulate.json" : "simulate.csv");
        if (a.as_json)
        {
            out.stream() << result_json(r).dump(2) << '\n';
        }
        else
        {
            out.stream() << csv_header() << '\n' << csv_row(r) << '\n';
        }
        return 0;
    }

    struct SweepArgs
    {
        std::string config;
        std::string out;
        unsigned threads = 1;
        bool as_json = false;
    };

    int run_sweep(const SweepArgs &a)
    {
        const auto grid = expand(parse_sweep(a.config));
        const auto results = scenario_sweep(grid, a.threads == 0 ? 1 : a.threads);
        Output out(a.out, a.as_json ? "sweep.json" : "sweep.csv");
        if (a.as_json)
        {
            json doc = json::array();
            for (const auto &r : results)
            {
                doc.push_back(result_json(r));
            }
            out.stream() << doc.dump(2) << '\n';
        }
        else
        {
            out.stream() << csv_header() << '\n';
            for (const auto &r : results)
            {
                out.stream() << csv_row(r) << '\n';
            }
        }
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Fronthaul split rates, I/Q caching and R-PHY / R-FFT upstream delay simulation"};
    app.require_subcommand(1);

    RatesArgs rates;
    auto *rates_cmd = app.add_subcommand("rates", "FFT-split, baseband and passband fronthaul rates (CSV)");
    rates_cmd->add_option("--rho", rates.rho, "Traffic loads")->delimiter(',');
    rates_cmd->add_option("--code-rate", rates.code_rate, "Code rates")->delimiter(',');
    rates_cmd->add_option("--out", rates.out, "Output CSV path");

    CachingArgs caching;
    auto *caching_cmd = app.add_subcommand("caching", "Cacheable overhead and cache memory per component (CSV)");
    caching_cmd->add_option("--rho", caching.rho, "Traffic load, 0 < rho <= 1");
    caching_cmd->add_option("--technology", caching.technology, "lte, docsis or all");
    caching_cmd->add_option("--out", caching.out, "Output CSV path");

    ScheduleArgs schedule;
    auto *schedule_cmd = app.add_subcommand("schedule", "Non-preemptive EDF timeline of the shared FFT module");
    schedule_cmd->add_option("--cable-period", schedule.cable_period, "DOCSIS symbol period (us unless suffixed)");
    schedule_cmd->add_option("--cable-compute", schedule.cable_compute, "DOCSIS FFT time");
    schedule_cmd->add_option("--lte-period", schedule.lte_period, "LTE symbol period");
    schedule_cmd->add_option("--lte-compute", schedule.lte_compute, "LTE FFT time");
    schedule_cmd->add_option("--guard", schedule.guard, "Guard time added to every job");
    schedule_cmd->add_option("--hyperperiods", schedule.hyperperiods, "Hyperperiods to simulate");
    schedule_cmd->add_option("--out", schedule.out, "Output CSV path");

    TablesArgs tables;
    auto *tables_cmd = app.add_subcommand("tables", "Regression of the published rate tables");
    tables_cmd->add_flag("--json", tables.as_json, "JSON instead of CSV");
    tables_cmd->add_option("--out", tables.out, "Output path");

    SimulateArgs simulate;
    auto *simulate_cmd = app.add_subcommand("simulate", "One upstream delay scenario");
    simulate_cmd->add_option("--config", simulate.config, "Scenario file (key = value)");
    const std::vector<std::pair<std::string, std::string>> scenario_flags = {
        {"--mode", "mode"},           {"--rho-c", "rho_c"},         {"--rho-b", "rho_b"},
        {"--hurst", "hurst"},         {"--distance-km", "distance_km"}, {"--duration-s", "duration_s"},
        {"--warmup-s", "warmup_s"},   {"--seed", "seed"},           {"--cms", "num_cms"},
        {"--batching", "batching"},   {"--lte-traffic", "lte_traffic"},
    };
    std::map<std::string, std::string> flag_values;
    for (const auto &[flag, key] : scenario_flags)
    {
        simulate_cmd->add_option(flag, flag_values[key], "Overrides " + key);
    }
    simulate_cmd->add_option("--out", simulate.out, "Output path");
    simulate_cmd->add_option("--packets-out", simulate.packets_out, "Per-packet DOCSIS delay CSV");
    simulate_cmd->add_option("--trace-out", simulate.trace_out, "Cable modem arrival trace CSV");
    simulate_cmd->add_flag("--json", simulate.as_json, "JSON instead of CSV");

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Scenario grid from a sweep file");
    sweep_cmd->add_option("--config", sweep.config, "Sweep file")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output path");
    sweep_cmd->add_option("--threads", sweep.threads, "Concurrent runs");
    sweep_cmd->add_flag("--json", sweep.as_json, "JSON instead of CSV");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*rates_cmd)
        {
            return run_rates(rates);
        }
        if (*caching_cmd)
        {
            return run_caching(caching);
        }
        if (*schedule_cmd)
        {
            return run_schedule(schedule);
        }
        if (*tables_cmd)
        {
            return run_tables(tables);
        }
        if (*simulate_cmd)
        {
            for (const auto &[flag, key] : scenario_flags)
            {
                if (simulate_cmd->count(flag) > 0)
                {
                    simulate.overrides[key] = flag_values[key];
                }
            }
            return run_simulate(simulate);
        }
        if (*sweep_cmd)
        {
            return run_sweep(sweep);
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
