#include "rfft/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace rfft
{
    namespace
    {
        constexpr double ps_per_s = static_cast<double>(SimTime::ps_per_second);
    }

    std::string to_string(PacketSizeMode m)
    {
        return m == PacketSizeMode::fixed ? "fixed" : "trimodal";
    }

    PacketSizeMode parse_packet_size_mode(const std::string &text)
    {
        if (text == "fixed")
        {
            return PacketSizeMode::fixed;
        }
        if (text == "trimodal")
        {
            return PacketSizeMode::trimodal;
        }
        throw TrafficConfigError("unknown packet size mode '" + text + "' (expected fixed or trimodal)");
    }

    void TrafficConfig::validate() const
    {
        if (!(hurst >= 0.5 && hurst < 1.0))
        {
            throw TrafficConfigError("hurst must lie in [0.5, 1)");
        }
        if (!(rho >= 0.0) || !std::isfinite(rho))
        {
            throw TrafficConfigError("traffic load must be >= 0");
        }
        if (mean_packet_bytes == 0)
        {
            throw TrafficConfigError("mean packet size must be positive");
        }
        if (size_mode == PacketSizeMode::trimodal && mean_packet_bytes != 472)
        {
            throw TrafficConfigError("the trimodal size mix has a fixed 472 B mean");
        }
        if (num_subsources < 1)
        {
            throw TrafficConfigError("num_subsources must be >= 1");
        }
        if (!(onoff_mean_s > 0.0))
        {
            throw TrafficConfigError("onoff_mean_s must be positive");
        }
        if (!(peak_ratio > 1.0))
        {
            throw TrafficConfigError("peak_ratio must exceed 1");
        }
    }

    std::uint32_t packet_size_sample(PacketSizeMode mode, std::uint32_t mean_bytes, RngStream &stream)
    {
        if (mode == PacketSizeMode::fixed)
        {
            return mean_bytes;
        }
        const double u = stream.uniform01();
        if (u < 0.6)
        {
            return 64;
        }
        return u < 0.8 ? 668 : 1500;
    }

    PoissonArrivals::PoissonArrivals(double rate_bps, std::uint32_t mean_bytes, PacketSizeMode mode,
                                     RngStream stream)
        : rate_bps_(rate_bps), mean_bytes_(mean_bytes), mode_(mode), rng_(stream)
    {
        mean_gap_ps_ = rate_bps > 0.0 ? 8.0 * mean_bytes * ps_per_s / rate_bps : 0.0;
    }

    Arrival PoissonArrivals::next()
    {
        if (rate_bps_ <= 0.0)
        {
            return Arrival{SimTime::max(), 0};
        }
        clock_ps_ += rng_.exponential(mean_gap_ps_);
        Arrival a;
        a.time = SimTime::from_ps(std::llround(clock_ps_));
        a.bytes = packet_size_sample(mode_, mean_bytes_, rng_);
        return a;
    }

    OnOffArrivals::OnOffArrivals(double rate_bps, const TrafficConfig &cfg, RngStream stream)
        : rate_bps_(rate_bps), cfg_(cfg)
    {
        const double alpha = cfg.pareto_shape();
        on_x_min_s_ = cfg.onoff_mean_s * (alpha - 1.0) / alpha;
        off_x_min_s_ = on_x_min_s_ * (cfg.peak_ratio - 1.0);
        peak_bytes_per_s_ = cfg.peak_ratio * rate_bps / 8.0 / cfg.num_subsources;

        subs_.reserve(static_cast<std::size_t>(cfg.num_subsources));
        for (int i = 0; i < cfg.num_subsources; ++i)
        {
            SubSource s{stream.substream(static_cast<std::uint64_t>(i))};
            s.on = s.rng.uniform01() < 1.0 / cfg.peak_ratio;
            s.period_end_s = period(s, s.on);
            s.next_bytes = packet_size_sample(cfg.size_mode, cfg.mean_packet_bytes, s.rng);
            subs_.push_back(std::move(s));
            advance(subs_.back());
        }
    }

    double OnOffArrivals::period(SubSource &s, bool on)
    {
        return s.rng.pareto(cfg_.pareto_shape(), on ? on_x_min_s_ : off_x_min_s_);
    }

    // Packets arrive as a Poisson stream at the peak rate while ON. A gap that
    // runs past the end of the ON period is dropped; the next ON period restarts it.
    void OnOffArrivals::advance(SubSource &s)
    {
        if (peak_bytes_per_s_ <= 0.0)
        {
            s.next_emit_s = std::numeric_limits<double>::infinity();
            return;
        }
        const double mean_gap_s = static_cast<double>(cfg_.mean_packet_bytes) / peak_bytes_per_s_;
        for (;;)
        {
            if (s.on)
            {
                const double gap = s.rng.exponential(mean_gap_s);
                if (s.clock_s + gap <= s.period_end_s)
                {
                    s.clock_s += gap;
                    s.next_emit_s = s.clock_s;
                    return;
                }
            }
            s.clock_s = s.period_end_s;
            s.on = !s.on;
            s.period_end_s = s.clock_s + period(s, s.on);
        }
    }

    Arrival OnOffArrivals::next()
    {
        if (peak_bytes_per_s_ <= 0.0)
        {
            return Arrival{SimTime::max(), 0};
        }
        auto it = std::min_element(subs_.begin(), subs_.end(), [](const SubSource &a, const SubSource &b) {
            return a.next_emit_s < b.next_emit_s;
        });
        Arrival a;
        a.time = SimTime::from_ps(std::llround(it->next_emit_s * ps_per_s));
        a.bytes = it->next_bytes;
        it->next_bytes = packet_size_sample(cfg_.size_mode, cfg_.mean_packet_bytes, it->rng);
        advance(*it);
        return a;
    }

    std::unique_ptr<ArrivalProcess> make_generator(const TrafficConfig &cfg, RngStream stream, double capacity_bps,
                                                   double line_rate_bps)
    {
        cfg.validate();
        if (!(capacity_bps >= 0.0))
        {
            throw TrafficConfigError("capacity must be >= 0");
        }
        const double rate = cfg.rho * capacity_bps;
        if (rate > line_rate_bps)
        {
            throw TrafficConfigError("offered rate " + std::to_string(rate) + " bit/s exceeds the access line rate " +
                                     std::to_string(line_rate_bps) + " bit/s");
        }
        if (cfg.poisson())
        {
            return std::make_unique<PoissonArrivals>(rate, cfg.mean_packet_bytes, cfg.size_mode, stream);
        }
        const double peak = cfg.peak_ratio * rate;
        if (peak > line_rate_bps)
        {
            throw TrafficConfigError("ON/OFF peak rate " + std::to_string(peak) +
                                     " bit/s exceeds the access line rate " + std::to_string(line_rate_bps) +
                                     " bit/s");
        }
        return std::make_unique<OnOffArrivals>(rate, cfg, stream);
    }

    void write_arrival_trace(std::ostream &out, std::uint32_t source_id, ArrivalProcess &process, SimTime until,
                             bool header)
    {
        if (header)
        {
            out << "source_id,time_ps,bytes\n";
        }
        for (Arrival a = process.next(); a.time < until; a = process.next())
        {
            out << source_id << ',' << a.time.ps() << ',' << a.bytes << '\n';
        }
    }
} // namespace rfft
