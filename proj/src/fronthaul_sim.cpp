#include "rfft/fronthaul_sim.hpp"

#include "rfft/fft_scheduler.hpp"
#include "rfft/rate_model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

namespace rfft
{
    namespace
    {
        using i128 = __int128;

        Rational exact(double v)
        {
            char buf[64];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            return parse_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
        }

        struct Fraction
        {
            std::int64_t num;
            std::int64_t den;
        };

        Fraction as_fraction(const Rational &r)
        {
            return Fraction{to_int64(BigInt(boost::multiprecision::numerator(r))),
                            to_int64(BigInt(boost::multiprecision::denominator(r)))};
        }

        std::uint64_t ceil_scaled(std::uint64_t bytes, const Fraction &f)
        {
            const i128 n = static_cast<i128>(bytes) * f.num;
            return static_cast<std::uint64_t>((n + f.den - 1) / f.den);
        }

        TrafficConfig cable_traffic(const ScenarioConfig &cfg)
        {
            TrafficConfig t;
            t.hurst = cfg.hurst;
            t.rho = cfg.rho_c;
            t.mean_packet_bytes = cfg.mean_packet_bytes;
            t.num_subsources = cfg.num_subsources;
            t.onoff_mean_s = cfg.onoff_mean_s;
            t.peak_ratio = cfg.onoff_peak_ratio;
            t.size_mode = cfg.trimodal_sizes ? PacketSizeMode::trimodal : PacketSizeMode::fixed;
            return t;
        }

        CablePlantConfig plant_config(const ScenarioConfig &cfg)
        {
            CablePlantConfig p;
            p.capacity_bps = cfg.cable_gbps * 1e9;
            p.data_fraction = cfg.data_fraction;
            p.num_cms = cfg.num_cms;
            p.min_km = cfg.cm_min_km;
            p.max_km = cfg.cm_max_km;
            p.request_bytes = cfg.request_bytes;
            p.min_cycle = SimTime::from_seconds(cfg.min_cycle_s);
            return p;
        }

        std::int64_t fronthaul_bps(const ScenarioConfig &cfg)
        {
            return std::llround(cfg.fronthaul_gbps * 1e9);
        }

        std::vector<std::string> fft_warnings(const ScenarioConfig &cfg)
        {
            std::vector<std::string> out;
            const PeriodicTask cable{"DOCSIS", SimTime::from_seconds(cfg.cable_symbol_us * 1e-6),
                                     SimTime::from_seconds(cfg.tau_c_us * 1e-6)};
            const PeriodicTask lte{"LTE", SimTime::from_seconds(cfg.lte_symbol_us * 1e-6),
                                   SimTime::from_seconds(cfg.tau_l_us * 1e-6)};
            if (cable.compute_time > cable.period || lte.compute_time > lte.period ||
                !nonpreemptive_schedulable_pair(cable, lte))
            {
                out.push_back(fmt::format("shared FFT module: tau_c = {} us, tau_l = {} us cannot be interleaved "
                                          "without deadline misses (T_C = {} us, T_L = {} us)",
                                          cfg.tau_c_us, cfg.tau_l_us, cfg.cable_symbol_us, cfg.lte_symbol_us));
            }
            return out;
        }

        class ScenarioRun
        {
        public:
            ScenarioRun(const ScenarioConfig &cfg, const RunOptions &options)
                : cfg_(cfg), options_(options), fiber_(SimTime::from_seconds(cfg.distance_km / 2.0e5)),
                  warmup_(SimTime::from_seconds(cfg.warmup_s)), end_(SimTime::from_seconds(cfg.end_s())),
                  plant_(CablePlant::build(plant_config(cfg), cable_traffic(cfg), cfg.seed)),
                  mac_(plant_, sim_, fiber_), link_(fronthaul_bps(cfg), fiber_),
                  window_(SimTime::from_seconds(cfg.cable_symbol_us * 1e-6))
            {
                forwarding_.uepi_overhead = exact(cfg.uepi_overhead);
                forwarding_.iq_expansion =
                    iq_expansion_factor(exact(cfg.code_rate), cfg.qam_bits, cfg.bits_per_component);
                forwarding_.frame_bytes = cfg.frame_bytes;
                expansion_ = as_fraction(cfg.mode == RemoteNodeMode::rphy ? 1 + forwarding_.uepi_overhead
                                                                          : forwarding_.iq_expansion);

                result_.config = cfg;
                result_.docsis.stream = "DOCSIS";
                result_.lte.stream = "LTE";
                for (DelayStats *s : {&result_.docsis, &result_.lte})
                {
                    s->warmup_excluded_s = cfg.warmup_s;
                    s->measurement_duration_s = cfg.duration_s;
                }
                if (cfg.mode == RemoteNodeMode::rfft)
                {
                    result_.warnings = fft_warnings(cfg);
                }

                if (cfg.rho_b > 0.0)
                {
                    if (cfg.lte_traffic == LteTraffic::cbr)
                    {
                        link_.attach_lte(
                            std::make_unique<LteBasebandSource>(exact(cfg.rho_b), cfg.frame_bytes, fronthaul_bps(cfg)));
                    }
                    else
                    {
                        TrafficConfig t;
                        t.hurst = cfg.hurst;
                        t.rho = cfg.rho_b;
                        t.mean_packet_bytes = cfg.frame_bytes;
                        t.num_subsources = cfg.num_subsources;
                        t.onoff_mean_s = cfg.onoff_mean_s;
                        t.peak_ratio = cfg.onoff_peak_ratio;
            t.peak_ratio = cfg.onoff_peak_ratio;
                        const std::uint64_t stream = static_cast<std::uint64_t>(cfg.num_cms) + 1;
                        link_.attach_lte(make_generator(t, RngStream(cfg.seed, stream),
                                                        static_cast<double>(fronthaul_bps(cfg)),
                                                        std::numeric_limits<double>::infinity()));
                    }
                }
                link_.set_single_class(cfg.mode == RemoteNodeMode::rfft);
                link_.on_complete([this](const LinkItem &item, SimTime start, SimTime finish) {
                    on_link_complete(item, start, finish);
                });
            }

            ScenarioResult run()
            {
                if (options_.packets_out)
                {
                    *options_.packets_out << "cm_id,created_ps,delivered_ps\n";
                }
                mac_.start();
                const SimTime interval = SimTime::from_seconds(cfg_.sample_interval_s);
                if (interval <= end_)
                {
                    sim_.schedule(interval, ev_backlog_sample);
                }
                sim_.run_until(end_, [this](const Event &ev) { dispatch(ev); });
                link_.advance(end_);

                result_.events = sim_.dispatched();
                result_.link = link_.counters();
                result_.mac = mac_.counters();
                for (const auto &cm : plant_.cms)
                {
                    result_.cable_packets_generated += cm.generated_packets;
                }
                assess_saturation();
                return std::move(result_);
            }

        private:
            void dispatch(const Event &ev)
            {
                switch (ev.kind)
                {
                case ev_grant_issue:
                    mac_.on_grant_issue(static_cast<int>(ev.target));
                    break;
                case ev_packet_at_remote_node:
                    on_cable_arrival(ev, false);
                    break;
                case ev_request_at_remote_node:
                    on_cable_arrival(ev, true);
                    break;
                case ev_request_at_headend:
                    mac_.on_request_at_headend(ev.target, ev.payload[0]);
                    break;
                case ev_window_flush:
                    if (window_open_ && window_index_ == static_cast<std::int64_t>(ev.payload[0]))
                    {
                        flush_window();
                    }
                    break;
                case ev_backlog_sample:
                    sample();
                    break;
                default:
                    throw std::logic_error("unknown event kind " + std::to_string(ev.kind));
                }
            }

            void deliver_docsis(std::uint32_t cm, std::uint64_t created_ps, SimTime headend)
            {
                ++result_.cable_packets_delivered;
                const SimTime created = SimTime::from_ps(static_cast<std::int64_t>(created_ps));
                if (created >= warmup_ && headend <= end_)
                {
                    result_.docsis.add(headend - created);
                }
                if (options_.packets_out)
                {
                    *options_.packets_out << cm << ',' << created_ps << ',' << headend.ps() << '\n';
                }
            }

            void on_link_complete(const LinkItem &item, SimTime start, SimTime finish)
            {
                if (options_.link_observer)
                {
                    options_.link_observer(item, start, finish);
                }
                const SimTime delivered = finish + fiber_;
                if (item.kind == ItemKind::lte)
                {
                    if (item.arrival >= warmup_ && delivered <= end_)
                    {
                        result_.lte.add(delivered - item.arrival);
                    }
                }
                else if (item.kind == ItemKind::cable_data && cfg_.mode == RemoteNodeMode::rphy)
                {
                    deliver_docsis(static_cast<std::uint32_t>(item.tag), item.created_ps, delivered);
                }
            }

            // Enqueues `bytes` of forwarded data and returns the finish time of its
            // last datagram (SimTime::max() if not yet determined).
            SimTime enqueue_datagrams(SimTime at, std::uint64_t wire_bytes, Priority priority, ItemKind last_kind,
                                      std::uint64_t created_ps, std::uint64_t tag)
            {
                SimTime finish = SimTime::max();
                const std::uint64_t frame = cfg_.frame_bytes;
                for (std::uint64_t sent = 0; sent < wire_bytes; sent += frame)
                {
                    const auto bytes = static_cast<std::uint32_t>(std::min(frame, wire_bytes - sent));
                    const bool last = sent + frame >= wire_bytes;
                    finish = link_.enqueue(at, bytes, priority, last ? last_kind : ItemKind::cable_segment,
                                           created_ps, tag);
                }
                return finish;
            }

            void on_cable_arrival(const Event &ev, bool request)
            {
                const SimTime now = sim_.now();
                const std::uint32_t cm = ev.target;
                const std::uint64_t raw = ev.payload[1];

                if (cfg_.mode == RemoteNodeMode::rfft && cfg_.batching == RfftBatching::batched)
                {
                    const std::int64_t index = now.ps() / window_.ps();
                    if (window_open_ && index != window_index_)
                    {
                        flush_window();
                    }
                    if (!window_open_)
                    {
                        window_open_ = true;
                        window_index_ = index;
                        window_raw_ = 0;
                        window_entries_.clear();
                        sim_.schedule(window_ * (index + 1), ev_window_flush, 0,
                                      {static_cast<std::uint64_t>(index), 0, 0});
                    }
                    window_raw_ += raw;
                    window_entries_.push_back(
                        WindowEntry{request, cm, window_raw_, ev.payload[0]});
                    return;
                }

                const std::uint64_t wire = ceil_scaled(raw, expansion_);
                if (request)
                {
                    const Priority prio = cfg_.mode == RemoteNodeMode::rphy ? Priority::high : Priority::normal;
                    const SimTime finish = enqueue_datagrams(now, wire, prio, ItemKind::cable_request, 0, cm);
                    sim_.schedule(finish + fiber_, ev_request_at_headend, cm, {ev.payload[0], 0, 0});
                    return;
                }
                const SimTime finish =
                    enqueue_datagrams(now, wire, Priority::normal, ItemKind::cable_data, ev.payload[0], cm);
                if (cfg_.mode == RemoteNodeMode::rfft)
                {
                    deliver_docsis(cm, ev.payload[0], finish + fiber_);
                }
            }

            void flush_window()
            {
                const SimTime at = window_ * (window_index_ + 1);
                const std::uint64_t wire = ceil_scaled(window_raw_, expansion_);
                const std::uint64_t frame = cfg_.frame_bytes;
                std::vector<SimTime> finish;
                finish.reserve(static_cast<std::size_t>((wire + frame - 1) / frame));
                for (std::uint64_t sent = 0; sent < wire; sent += frame)
                {
                    const auto bytes = static_cast<std::uint32_t>(std::min(frame, wire - sent));
                    finish.push_back(link_.enqueue(at, bytes, Priority::normal, ItemKind::cable_batch, 0,
                                                   static_cast<std::uint64_t>(window_index_)));
                }
                for (const WindowEntry &e : window_entries_)
                {
                    const std::uint64_t last_byte = ceil_scaled(e.raw_end, expansion_);
                    const SimTime headend = finish[static_cast<std::size_t>((last_byte - 1) / frame)] + fiber_;
                    if (e.request)
                    {
                        sim_.schedule(headend, ev_request_at_headend, e.cm, {e.value, 0, 0});
                    }
                    else
                    {
                        deliver_docsis(e.cm, e.value, headend);
                    }
                }
                window_open_ = false;
                window_entries_.clear();
            }

            void sample()
            {
                const SimTime now = sim_.now();
                link_.advance(now);
                QueueSample s;
                s.time = now;
                s.fronthaul_bytes = link_.queued_bytes();
                s.cm_backlog_bytes = mac_.total_backlog_bytes(now);
                result_.samples.push_back(s);
                const SimTime next = now + SimTime::from_seconds(cfg_.sample_interval_s);
                if (next <= end_)
                {
                    sim_.schedule(next, ev_backlog_sample);
                }
            }

            void assess_saturation()
            {
                std::vector<double> t, fh, cm;
                const SimTime from = SimTime::from_ps(end_.ps() / 2);
                for (const auto &s : result_.samples)
                {
                    if (s.time >= from)
                    {
                        t.push_back(s.time.seconds());
                        fh.push_back(8.0 * static_cast<double>(s.fronthaul_bytes));
                        cm.push_back(8.0 * static_cast<double>(s.cm_backlog_bytes));
                    }
                }
                if (t.size() < 3)
                {
                    result_.warnings.push_back("run too short for saturation detection");
                    return;
                }
                result_.fronthaul_growth_bps = regression_slope(t, fh);
                result_.backlog_growth_bps = regression_slope(t, cm);
                result_.saturated =
                    result_.fronthaul_growth_bps > cfg_.saturation_threshold * static_cast<double>(fronthaul_bps(cfg_)) ||
                    result_.backlog_growth_bps > cfg_.saturation_threshold * cfg_.cable_gbps * 1e9;
            }

            struct WindowEntry
            {
                bool request;
                std::uint32_t cm;
                std::uint64_t raw_end; // cumulative raw bytes in the window up to this entry
                std::uint64_t value;   // created_ps for data, reported bytes for requests
            };

            const ScenarioConfig &cfg_;
            const RunOptions &options_;
            SimTime fiber_;
            SimTime warmup_;
            SimTime end_;
            Simulator sim_;
            CablePlant plant_;
            DppMac mac_;
            FronthaulLink link_;
            ForwardingParams forwarding_;
            Fraction expansion_{1, 1};
            SimTime window_;
            bool window_open_ = false;
            std::int64_t window_index_ = -1;
            std::uint64_t window_raw_ = 0;
            std::vector<WindowEntry> window_entries_;
            ScenarioResult result_;
        };
    } // namespace

    std::uint64_t forwarded_bytes(RemoteNodeMode mode, std::uint64_t bytes, const ForwardingParams &p)
    {
        const Rational factor = mode == RemoteNodeMode::rphy ? 1 + p.uepi_overhead : p.iq_expansion;
        return ceil_scaled(bytes, as_fraction(factor));
    }

    std::vector<std::uint32_t> forward_cable_upstream(RemoteNodeMode mode, std::uint64_t bytes,
                                                      const ForwardingParams &p)
    {
        if (p.frame_bytes == 0)
        {
            throw std::invalid_argument("forward_cable_upstream: frame size must be positive");
        }
        std::vector<std::uint32_t> out;
        const std::uint64_t wire = forwarded_bytes(mode, bytes, p);
        for (std::uint64_t sent = 0; sent < wire; sent += p.frame_bytes)
        {
            out.push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(p.frame_bytes, wire - sent)));
        }
        return out;
    }

    LteBasebandSource::LteBasebandSource(const Rational &rho_b, std::uint32_t frame_bytes, std::int64_t capacity_bps)
        : frame_bytes_(frame_bytes), rate_bps_(to_double(rho_b) * static_cast<double>(capacity_bps))
    {
        if (rho_b < 0 || rho_b > 1 || frame_bytes == 0 || capacity_bps <= 0)
        {
            throw std::invalid_argument("LTE baseband source: need 0 <= rho_b <= 1 and positive sizes");
        }
        if (rho_b > 0)
        {
            const Rational spacing =
                Rational(BigInt(frame_bytes) * 8 * SimTime::ps_per_second) / (rho_b * capacity_bps);
            try
            {
                const Fraction f = as_fraction(spacing);
                spacing_num_ = f.num;
                spacing_den_ = f.den;
            }
            catch (const std::exception &)
            {
                throw std::invalid_argument("LTE baseband source: rho_b has too many digits for exact spacing");
            }
        }
    }

    SimTime LteBasebandSource::arrival(std::uint64_t k) const
    {
        return SimTime::from_ps(static_cast<std::int64_t>(static_cast<i128>(k) * spacing_num_ / spacing_den_));
    }

    Arrival LteBasebandSource::next()
    {
        if (spacing_num_ == 0)
        {
            return Arrival{SimTime::max(), 0};
        }
        return Arrival{arrival(index_++), frame_bytes_};
    }

    double LinkCounters::mean_wait_s() const
    {
        if (served == 0)
        {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return static_cast<double>(wait_ps) / static_cast<double>(served) / static_cast<double>(SimTime::ps_per_second);
    }

    FronthaulLink::FronthaulLink(std::int64_t capacity_bps, SimTime propagation)
        : capacity_bps_(capacity_bps), propagation_(propagation)
    {
        if (capacity_bps <= 0)
        {
            throw std::invalid_argument("fronthaul capacity must be positive");
        }
    }

    void FronthaulLink::attach_lte(std::unique_ptr<ArrivalProcess> source)
    {
        lte_ = std::move(source);
        lte_next_ = lte_ ? lte_->next() : Arrival{SimTime::max(), 0};
    }

    SimTime FronthaulLink::service_time(std::uint64_t bytes) const
    {
        const i128 num = static_cast<i128>(bytes) * 8 * SimTime::ps_per_second;
        return SimTime::from_ps(static_cast<std::int64_t>((2 * num + capacity_bps_) / (2 * static_cast<i128>(capacity_bps_))));
    }

    void FronthaulLink::push(std::deque<LinkItem> &q, const LinkItem &item, Priority priority)
    {
        q.push_back(item);
        (priority == Priority::high ? high_bytes_ : normal_bytes_) += item.bytes;
        (priority == Priority::high ? high_work_ : normal_work_) += item.service;
        ++counters_.arrivals;
    }

    LinkItem FronthaulLink::pop(std::deque<LinkItem> &q, Priority priority)
    {
        LinkItem item = q.front();
        q.pop_front();
        if (priority == Priority::high)
        {
            high_bytes_ -= item.bytes;
            high_work_ = high_work_ - item.service;
        }
        else
        {
            normal_bytes_ -= item.bytes;
            normal_work_ = normal_work_ - item.service;
        }
        return item;
    }

    void FronthaulLink::pull_lte(SimTime before)
    {
        while (lte_next_.time < before)
        {
            LinkItem item;
            item.arrival = lte_next_.time;
            item.service = service_time(lte_next_.bytes);
            item.created_ps = static_cast<std::uint64_t>(lte_next_.time.ps());
            item.bytes = lte_next_.bytes;
            item.kind = ItemKind::lte;
            push(normal_, item, Priority::normal);
            lte_next_ = lte_->next();
        }
    }

    void FronthaulLink::advance(SimTime t)
    {
        pull_lte(t);
        while (!high_.empty() || !normal_.empty())
        {
            const SimTime head = std::min(high_.empty() ? SimTime::max() : high_.front().arrival,
                                          normal_.empty() ? SimTime::max() : normal_.front().arrival);
            const SimTime start = std::max(server_free_, head);
            if (start >= t)
            {
                break;
            }
            const bool high = !high_.empty() && high_.front().arrival <= start;
            const LinkItem item = high ? pop(high_, Priority::high) : pop(normal_, Priority::normal);
            const SimTime finish = start + item.service;
            server_free_ = finish;
            ++counters_.served;
            counters_.served_bytes += item.bytes;
            counters_.busy += item.service;
            counters_.wait_ps += static_cast<unsigned __int128>((start - item.arrival).ps());
            if (handler_)
            {
                handler_(item, start, finish);
            }
        }
    }

    SimTime FronthaulLink::enqueue(SimTime at, std::uint32_t bytes, Priority priority, ItemKind kind,
                                   std::uint64_t created_ps, std::uint64_t tag)
    {
        if (at < last_arrival_)
        {
            throw SchedulingError("fronthaul arrivals must come in time order");
        }
        last_arrival_ = at;
        advance(at);

        LinkItem item;
        item.arrival = at;
        item.service = service_time(bytes);
        item.created_ps = created_ps;
        item.tag = tag;
        item.bytes = bytes;
        item.kind = kind;

        SimTime finish = SimTime::max();
        const SimTime begin = std::max(server_free_, at);
        if (priority == Priority::high)
        {
            finish = begin + high_work_ + item.service;
            push(high_, item, priority);
        }
        else
        {
            if (single_class_ && high_.empty())
            {
                finish = begin + normal_work_ + item.service;
            }
            push(normal_, item, priority);
        }
        return finish;
    }

    void DelayStats::add(SimTime delay)
    {
        ++count;
        sum_ps += static_cast<unsigned __int128>(delay.ps());
        max = std::max(max, delay);
    }

    double DelayStats::mean_s() const
    {
        if (count == 0)
        {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return static_cast<double>(sum_ps) / static_cast<double>(count) / static_cast<double>(SimTime::ps_per_second);
    }

    double regression_slope(const std::vector<double> &t, const std::vector<double> &y)
    {
        if (t.size() != y.size() || t.size() < 2)
        {
            throw std::invalid_argument("regression_slope: need two or more paired samples");
        }
        const double n = static_cast<double>(t.size());
        double mt = 0.0, my = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
        {
            mt += t[i];
            my += y[i];
        }
        mt /= n;
        my /= n;
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
        {
            sxy += (t[i] - mt) * (y[i] - my);
            sxx += (t[i] - mt) * (t[i] - mt);
        }
        return sxx > 0.0 ? sxy / sxx : 0.0;
    }

    ScenarioResult run_scenario(const ScenarioConfig &cfg, const RunOptions &options)
    {
        cfg.validate();
        ScenarioRun run(cfg, options);
        return run.run();
    }

    std::vector<ScenarioResult> scenario_sweep(const std::vector<ScenarioConfig> &grid, unsigned threads)
    {
        if (grid.empty())
        {
            throw std::invalid_argument("scenario_sweep: empty grid");
        }
        for (const auto &c : grid)
        {
            c.validate();
        }
        std::vector<ScenarioResult> results(grid.size());
        std::vector<std::exception_ptr> errors(grid.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < grid.size(); i = next++)
            {
                try
                {
                    results[i] = run_scenario(grid[i]);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                }
            }
        };
        const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < n; ++i)
        {
            pool.emplace_back(worker);
        }
        worker();
        for (auto &t : pool)
        {
            t.join();
        }
        for (const auto &e : errors)
        {
            if (e)
            {
                std::rethrow_exception(e);
            }
        }
        return results;
    }

    void write_cm_traces(const ScenarioConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        const CablePlantConfig p = plant_config(cfg);
        const TrafficConfig t = cable_traffic(cfg);
        const SimTime end = SimTime::from_seconds(cfg.end_s());
        for (int i = 0; i < cfg.num_cms; ++i)
        {
            auto source = make_generator(t, RngStream(cfg.seed, static_cast<std::uint64_t>(i) + 1),
                                         p.capacity_bps / p.num_cms, p.data_fraction * p.capacity_bps);
            write_arrival_trace(out, static_cast<std::uint32_t>(i), *source, end, i == 0);
        }
    }

    std::string csv_header()
    {
        return "mode,rho_C,rho_B,H,d_km,seed,docsis_mean_s,lte_mean_s,saturated";
    }

    std::string csv_row(const ScenarioResult &r)
    {
        const ScenarioConfig &c = r.config;
        return fmt::format("{},{},{},{},{},{},{:.9e},{:.9e},{}", to_string(c.mode), c.rho_c, c.rho_b, c.hurst,
                           c.distance_km, c.seed, r.docsis.mean_s(), r.lte.mean_s(), r.saturated ? "true" : "false");
    }
} // namespace rfft
