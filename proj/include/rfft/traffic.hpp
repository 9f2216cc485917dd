#pragma once

// Per-source packet arrival processes. H = 0.5 gives Poisson arrivals; H > 0.5
// superposes Pareto ON/OFF sub-sources (Poisson packets at the peak rate
// while ON) whose aggregate is long-range dependent with Hurst parameter H.

#include "rfft/des.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfft
{
    enum class PacketSizeMode
    {
        fixed,    // every packet has mean_packet_bytes
        trimodal, // 64/668/1500 B mix with the same 472 B mean
    };

    std::string to_string(PacketSizeMode m);
    PacketSizeMode parse_packet_size_mode(const std::string &text);

    class TrafficConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    struct TrafficConfig
    {
        double hurst = 0.5;
        double rho = 0.2;
        std::uint32_t mean_packet_bytes = 472;
        int num_subsources = 16;
        double onoff_mean_s = 0.02; // mean ON period of a sub-source
        // Peak over mean rate; each sub-source is ON 1 / peak_ratio of the time.
        double peak_ratio = 2.0;
        PacketSizeMode size_mode = PacketSizeMode::fixed;

        /// Throws TrafficConfigError on out-of-range fields.
        void validate() const;
        bool poisson() const { return hurst == 0.5; }
        /// Pareto shape of the ON/OFF periods, 3 - 2H.
        double pareto_shape() const { return 3.0 - 2.0 * hurst; }
    };

    struct Packet
    {
        std::uint64_t id = 0;
        std::uint32_t source_id = 0;
        std::uint32_t size_bytes = 0;
        SimTime created_at;
        SimTime enqueued_at;
        SimTime granted_at;
        SimTime delivered_at;
    };

    struct Arrival
    {
        SimTime time;
        std::uint32_t bytes = 0;
    };

    /// Open-loop arrival stream, consumed in time order.
    class ArrivalProcess
    {
    public:
        virtual ~ArrivalProcess() = default;
        virtual Arrival next() = 0;
        /// Long-run offered rate in bit/s.
        virtual double mean_rate_bps() const = 0;
    };

    /// Draws one packet size. The trimodal mix is 60 % 64 B, 20 % 668 B, 20 % 1500 B.
    std::uint32_t packet_size_sample(PacketSizeMode mode, std::uint32_t mean_bytes, RngStream &stream);

    class PoissonArrivals final : public ArrivalProcess
    {
    public:
        PoissonArrivals(double rate_bps, std::uint32_t mean_bytes, PacketSizeMode mode, RngStream stream);
        Arrival next() override;
        double mean_rate_bps() const override { return rate_bps_; }

    private:
        double rate_bps_;
        std::uint32_t mean_bytes_;
        PacketSizeMode mode_;
        RngStream rng_;
        double mean_gap_ps_;
        double clock_ps_ = 0.0;
    };

    class OnOffArrivals final : public ArrivalProcess
    {
    public:
        OnOffArrivals(double rate_bps, const TrafficConfig &cfg, RngStream stream);
        Arrival next() override;
        double mean_rate_bps() const override { return rate_bps_; }

    private:
        struct SubSource
        {
            RngStream rng;
            bool on = false;
            double period_end_s = 0.0;
            double clock_s = 0.0;
            std::uint32_t next_bytes = 0;
            double next_emit_s = 0.0;
        };

        void advance(SubSource &s);
        double period(SubSource &s, bool on);

        double rate_bps_;
        TrafficConfig cfg_;
        double peak_bytes_per_s_;
        double on_x_min_s_;
        double off_x_min_s_;
        std::vector<SubSource> subs_;
    };

    /// Builds the process for one source offering cfg.rho * capacity_bps.
    /// Throws TrafficConfigError when that rate, or the ON/OFF peak rate, exceeds
    /// the source's access line rate.
    std::unique_ptr<ArrivalProcess> make_generator(const TrafficConfig &cfg, RngStream stream, double capacity_bps,
                                                   double line_rate_bps);

    /// CSV dump "source_id,time_ps,bytes" of every arrival before `until`.
    void write_arrival_trace(std::ostream &out, std::uint32_t source_id, ArrivalProcess &process, SimTime until,
                             bool header = true);
} // namespace rfft
