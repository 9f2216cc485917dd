#pragma once

// DOCSIS upstream MAC on the shared broadcast cable: cable modems with infinite
// FIFO buffers, Double Phase Polling (two interleaved polling groups), gated
// service, and a 20 % contention/maintenance derating of the cable rate.
//
// The CMTS sits at the headend. A grant reaches a CM after the downstream fiber
// and cable delays; the CM then sends its granted packets followed by a request
// reporting what is left in its queue. Bursts are placed back to back on the
// cable as seen at the remote node.

#include "rfft/des.hpp"
#include "rfft/traffic.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <vector>

namespace rfft
{
    enum EventKind : std::uint32_t
    {
        ev_grant_issue = 1,        // target: group; CMTS sends the group's grants
        ev_packet_at_remote_node,  // target: cm; payload: created_ps, bytes, packet id
        ev_request_at_remote_node, // target: cm; payload: reported bytes, request bytes
        ev_request_at_headend,     // target: cm; payload: reported bytes
        ev_window_flush,           // payload: window index
        ev_backlog_sample,
    };

    struct QueuedPacket
    {
        SimTime created;
        std::uint32_t bytes = 0;
        std::uint64_t id = 0;
    };

    struct CableModem
    {
        std::uint32_t id = 0;
        double distance_km = 0.0;
        SimTime propagation; // CM to remote node
        std::deque<QueuedPacket> queue; // unbounded
        std::uint64_t queued_bytes = 0;
        std::uint64_t pending_request_bytes = 0; // last reported backlog
        std::uint64_t granted_bytes = 0;         // grant for the next burst
        std::uint64_t generated_packets = 0;
        std::uint64_t generated_bytes = 0;
        std::uint64_t sent_packets = 0;
        std::uint64_t sent_bytes = 0;

        std::unique_ptr<ArrivalProcess> source;
        Arrival lookahead{SimTime::max(), 0};

        /// Moves every arrival with time <= t from the source into the queue.
        void pull_until(SimTime t);
    };

    struct CablePlantConfig
    {
        double capacity_bps = 1e9;
        double data_fraction = 0.8;
        int num_cms = 200;
        double min_km = 1.0;
        double max_km = 2.0;
        std::uint32_t request_bytes = 64;
        SimTime min_cycle = SimTime::from_ms(2);
        double km_per_second = 2.0e5; // signal speed in coax and fiber
    };

    struct CablePlant
    {
        CablePlantConfig config;
        std::vector<CableModem> cms;
        std::vector<std::uint32_t> polling_order; // CM ids by ascending propagation delay

        double data_rate_bps() const { return config.data_fraction * config.capacity_bps; }
        /// Cable time for the first `bytes` bytes of a burst.
        SimTime burst_offset(std::uint64_t bytes) const;

        /// Places `num_cms` modems at uniform distances and attaches one traffic
        /// source per modem (stream i + 1 for modem i).
        static CablePlant build(const CablePlantConfig &config, const TrafficConfig &traffic, std::uint64_t seed);
    };

    struct PollingCycle
    {
        std::vector<std::uint32_t> group_a;
        std::vector<std::uint32_t> group_b;
        int phase = 0; // group whose grants were issued last
        std::uint64_t cycle_index = 0;

        const std::vector<std::uint32_t> &group(int g) const { return g == 0 ? group_a : group_b; }
    };

    /// Alternating positions of the polling order.
    PollingCycle make_polling_cycle(const std::vector<std::uint32_t> &polling_order);

    struct Request
    {
        std::uint32_t cm = 0;
        std::uint64_t bytes = 0;
    };

    /// The poll response a modem sends: its current backlog, possibly zero.
    Request request_message(const CableModem &cm);

    struct MacCounters
    {
        std::uint64_t grant_cycles = 0;
        std::uint64_t bursts = 0;
        std::uint64_t requests = 0;
        std::uint64_t data_bytes = 0;
        SimTime channel_busy; // data + request time on the cable
    };

    class DppMac
    {
    public:
        /// `downstream_delay` is the headend to remote-node delay a grant sees.
        DppMac(CablePlant &plant, Simulator &sim, SimTime downstream_delay);

        /// Issues the bootstrap grants: group A now, group B half a cycle later.
        void start();

        void on_grant_issue(int group);
        void on_request_at_headend(std::uint32_t cm, std::uint64_t reported_bytes);

        /// Bytes queued at all modems at time t (pulls arrivals up to t).
        std::uint64_t total_backlog_bytes(SimTime t);

        const PollingCycle &cycle() const { return cycle_; }
        const MacCounters &counters() const { return counters_; }
        SimTime channel_free() const { return channel_free_; }

    private:
        CablePlant &plant_;
        Simulator &sim_;
        SimTime downstream_delay_;
        PollingCycle cycle_;
        std::vector<int> group_of_;
        SimTime channel_free_;
        SimTime last_issue_[2];
        std::size_t outstanding_[2] = {0, 0};
        MacCounters counters_;
    };
} // namespace rfft
