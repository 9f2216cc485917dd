#pragma once

// Remote node (R-PHY or R-FFT) forwarding cable upstream traffic onto the optical
// fronthaul it shares with the LTE baseband stream, and the scenario runner that
// measures mean DOCSIS (CM to headend) and LTE (remote node to BBU) delays.

#include "rfft/des.hpp"
#include "rfft/docsis_mac.hpp"
#include "rfft/rational.hpp"
#include "rfft/scenario.hpp"
#include "rfft/traffic.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace rfft
{
    enum class Priority : std::uint8_t
    {
        high,
        normal,
    };

    enum class ItemKind : std::uint8_t
    {
        lte,
        cable_data,    // last datagram of a DOCSIS packet
        cable_segment, // any earlier datagram of a DOCSIS packet
        cable_request,
        cable_batch, // R-FFT symbol-window datagram
    };

    struct ForwardingParams
    {
        Rational uepi_overhead = ratio(5, 100);
        Rational iq_expansion = ratio(50, 27);
        std::uint32_t frame_bytes = 1500;
    };

    /// Wire bytes for `bytes` of cable upstream data: bytes * (1 + uepi_overhead)
    /// for R-PHY, bytes * iq_expansion for R-FFT, rounded up to whole bytes.
    std::uint64_t forwarded_bytes(RemoteNodeMode mode, std::uint64_t bytes, const ForwardingParams &p);

    /// The forwarded bytes cut into datagrams of at most frame_bytes.
    std::vector<std::uint32_t> forward_cable_upstream(RemoteNodeMode mode, std::uint64_t bytes,
                                                      const ForwardingParams &p);

    /// Constant-bitrate LTE baseband I/Q stream: frame_bytes datagrams spaced
    /// exactly frame_bytes * 8 / (rho_b * capacity) apart, first one at t = 0.
    class LteBasebandSource final : public ArrivalProcess
    {
    public:
        LteBasebandSource(const Rational &rho_b, std::uint32_t frame_bytes, std::int64_t capacity_bps);
        Arrival next() override;
        double mean_rate_bps() const override { return rate_bps_; }
        /// Arrival time of datagram k.
        SimTime arrival(std::uint64_t k) const;

    private:
        std::uint32_t frame_bytes_;
        double rate_bps_;
        std::int64_t spacing_num_ = 0; // spacing in ps = num / den
        std::int64_t spacing_den_ = 1;
        std::uint64_t index_ = 0;
    };

    struct LinkItem
    {
        SimTime arrival;
        SimTime service;
        std::uint64_t created_ps = 0;
        std::uint64_t tag = 0;
        std::uint32_t bytes = 0;
        ItemKind kind = ItemKind::lte;
    };

    struct LinkCounters
    {
        std::uint64_t arrivals = 0;
        std::uint64_t served = 0;
        std::uint64_t served_bytes = 0;
        SimTime busy;
        unsigned __int128 wait_ps = 0; // sum of start - arrival over served items

        double mean_wait_s() const;
    };

    /// Remote-node output port: non-preemptive two-priority FIFO served at the
    /// fronthaul rate. LTE datagrams are pulled lazily from an attached source, so
    /// they cost no simulator events.
    class FronthaulLink
    {
    public:
        using CompletionHandler = std::function<void(const LinkItem &, SimTime start, SimTime finish)>;

        FronthaulLink(std::int64_t capacity_bps, SimTime propagation);

        void attach_lte(std::unique_ptr<ArrivalProcess> source);
        void on_complete(CompletionHandler handler) { handler_ = std::move(handler); }
        /// With a single class every finish time is known at enqueue.
        void set_single_class(bool single) { single_class_ = single; }

        /// Queues an item arriving at `at` (>= any earlier arrival). Returns its
        /// finish time when already determined (high priority, or single class),
        /// SimTime::max() otherwise.
        SimTime enqueue(SimTime at, std::uint32_t bytes, Priority priority, ItemKind kind, std::uint64_t created_ps,
                        std::uint64_t tag);

        /// Makes every service decision before t and queues LTE arrivals before t.
        void advance(SimTime t);

        SimTime service_time(std::uint64_t bytes) const;
        SimTime propagation() const { return propagation_; }
        std::int64_t capacity_bps() const { return capacity_bps_; }
        std::uint64_t queued_bytes() const { return high_bytes_ + normal_bytes_; }
        std::size_t queued_items() const { return high_.size() + normal_.size(); }
        SimTime server_free() const { return server_free_; }
        const LinkCounters &counters() const { return counters_; }

    private:
        void pull_lte(SimTime before);
        void push(std::deque<LinkItem> &q, const LinkItem &item, Priority priority);
        LinkItem pop(std::deque<LinkItem> &q, Priority priority);

        std::int64_t capacity_bps_;
        SimTime propagation_;
        bool single_class_ = false;
        std::deque<LinkItem> high_;
        std::deque<LinkItem> normal_;
        std::uint64_t high_bytes_ = 0;
        std::uint64_t normal_bytes_ = 0;
        SimTime high_work_;
        SimTime normal_work_;
        SimTime server_free_;
        SimTime last_arrival_;
        std::unique_ptr<ArrivalProcess> lte_;
        Arrival lte_next_{SimTime::max(), 0};
        CompletionHandler handler_;
        LinkCounters counters_;
    };

    struct DelayStats
    {
        std::string stream; // "DOCSIS" or "LTE"
        std::uint64_t count = 0;
        unsigned __int128 sum_ps = 0;
        SimTime max;
        double warmup_excluded_s = 0.0;
        double measurement_duration_s = 0.0;

        void add(SimTime delay);
        /// NaN when no sample was taken.
        double mean_s() const;
    };

    struct QueueSample
    {
        SimTime time;
        std::uint64_t fronthaul_bytes = 0;
        std::uint64_t cm_backlog_bytes = 0;
    };

    struct ScenarioResult
    {
        ScenarioConfig config;
        DelayStats docsis;
        DelayStats lte;
        bool saturated = false;
        double fronthaul_growth_bps = 0.0; // regression slope of queued bits, final half
        double backlog_growth_bps = 0.0;
        std::vector<std::string> warnings;
        std::vector<QueueSample> samples;
        LinkCounters link;
        MacCounters mac;
        std::uint64_t cable_packets_generated = 0;
        std::uint64_t cable_packets_delivered = 0;
        std::uint64_t events = 0;
    };

    struct RunOptions
    {
        /// Per-packet CSV "cm_id,created_ps,delivered_ps" for every DOCSIS packet
        /// reaching the headend.
        std::ostream *packets_out = nullptr;
        /// Sees every fronthaul item as it is served.
        std::function<void(const LinkItem &, SimTime start, SimTime finish)> link_observer;
    };

    /// Least-squares slope of y over t.
    double regression_slope(const std::vector<double> &t, const std::vector<double> &y);

    ScenarioResult run_scenario(const ScenarioConfig &cfg, const RunOptions &options = {});

    /// Runs every scenario, `threads` at a time; results keep the input order.
    std::vector<ScenarioResult> scenario_sweep(const std::vector<ScenarioConfig> &grid, unsigned threads = 1);

    /// Arrival traces of every cable modem source up to the end of the run.
    void write_cm_traces(const ScenarioConfig &cfg, std::ostream &out);

    std::string csv_header();
    std::string csv_row(const ScenarioResult &r);
} // namespace rfft
