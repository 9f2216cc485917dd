#include "rfft/docsis_mac.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rfft
{
    void CableModem::pull_until(SimTime t)
    {
        while (lookahead.time <= t)
        {
            queue.push_back(QueuedPacket{lookahead.time, lookahead.bytes,
                                         (static_cast<std::uint64_t>(id) << 40) | generated_packets});
            queued_bytes += lookahead.bytes;
            ++generated_packets;
            generated_bytes += lookahead.bytes;
            lookahead = source->next();
        }
    }

    SimTime CablePlant::burst_offset(std::uint64_t bytes) const
    {
        const double ps = static_cast<double>(bytes) * 8.0 * static_cast<double>(SimTime::ps_per_second) /
                          data_rate_bps();
        return SimTime::from_ps(std::llround(ps));
    }

    CablePlant CablePlant::build(const CablePlantConfig &config, const TrafficConfig &traffic, std::uint64_t seed)
    {
        if (config.num_cms < 1)
        {
            throw std::invalid_argument("cable plant needs at least one modem");
        }
        if (!(config.min_km >= 0.0 && config.min_km <= config.max_km) || !(config.km_per_second > 0.0))
        {
            throw std::invalid_argument("cable plant: invalid distance range");
        }
        if (!(config.data_fraction > 0.0 && config.data_fraction <= 1.0) || !(config.capacity_bps > 0.0))
        {
            throw std::invalid_argument("cable plant: invalid capacity");
        }

        CablePlant plant;
        plant.config = config;
        plant.cms.resize(static_cast<std::size_t>(config.num_cms));

        // Stream 0 places the modems; stream i + 1 drives modem i.
        RngStream placement(seed, 0);
        const double per_cm_capacity = config.capacity_bps / config.num_cms;
        for (int i = 0; i < config.num_cms; ++i)
        {
            CableModem &cm = plant.cms[static_cast<std::size_t>(i)];
            cm.id = static_cast<std::uint32_t>(i);
            cm.distance_km = placement.uniform(config.min_km, config.max_km);
            cm.propagation = SimTime::from_seconds(cm.distance_km / config.km_per_second);
            cm.source = make_generator(traffic, RngStream(seed, static_cast<std::uint64_t>(i) + 1), per_cm_capacity,
                                       plant.data_rate_bps());
            cm.lookahead = cm.source->next();
        }

        plant.polling_order.resize(plant.cms.size());
        std::iota(plant.polling_order.begin(), plant.polling_order.end(), 0U);
        std::stable_sort(plant.polling_order.begin(), plant.polling_order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return plant.cms[a].propagation < plant.cms[b].propagation; });
        return plant;
    }

    PollingCycle make_polling_cycle(const std::vector<std::uint32_t> &polling_order)
    {
        PollingCycle c;
        for (std::size_t i = 0; i < polling_order.size(); ++i)
        {
            (i % 2 == 0 ? c.group_a : c.group_b).push_back(polling_order[i]);
        }
        return c;
    }

    Request request_message(const CableModem &cm)
    {
        return Request{cm.id, cm.queued_bytes};
    }

    DppMac::DppMac(CablePlant &plant, Simulator &sim, SimTime downstream_delay)
        : plant_(plant), sim_(sim), downstream_delay_(downstream_delay),
          cycle_(make_polling_cycle(plant.polling_order)), group_of_(plant.cms.size(), 0)
    {
        for (std::uint32_t id : cycle_.group_b)
        {
            group_of_[id] = 1;
        }
    }

    void DppMac::start()
    {
        sim_.schedule(sim_.now(), ev_grant_issue, 0);
        if (!cycle_.group_b.empty())
        {
            sim_.schedule(sim_.now() + SimTime::from_ps(plant_.config.min_cycle.ps() / 2), ev_grant_issue, 1);
        }
    }

    void DppMac::on_grant_issue(int group)
    {
        const SimTime now = sim_.now();
        const std::uint64_t request_bytes = plant_.config.request_bytes;
        last_issue_[group] = now;
        cycle_.phase = group;
        ++cycle_.cycle_index;
        ++counters_.grant_cycles;

        const auto &members = cycle_.group(group);
        outstanding_[group] = members.size();
        for (std::uint32_t id : members)
        {
            CableModem &cm = plant_.cms[id];
            const SimTime rx_start =
                std::max(channel_free_, now + downstream_delay_ + cm.propagation + cm.propagation);
            const SimTime tx_start = rx_start - cm.propagation;
            cm.pull_until(tx_start);

            // Gated service: send exactly the packets covered by the last report.
            std::uint64_t sent = 0;
            while (sent < cm.granted_bytes)
            {
                if (cm.queue.empty())
                {
                    throw std::logic_error("grant exceeds the modem's queue");
                }
                const QueuedPacket p = cm.queue.front();
                cm.queue.pop_front();
                sent += p.bytes;
                cm.queued_bytes -= p.bytes;
                ++cm.sent_packets;
                sim_.schedule(rx_start + plant_.burst_offset(sent), ev_packet_at_remote_node, id,
                              {static_cast<std::uint64_t>(p.created.ps()), p.bytes, p.id});
            }
            if (sent != cm.granted_bytes)
            {
                throw std::logic_error("grant does not end on a packet boundary");
            }
            cm.sent_bytes += sent;
            cm.granted_bytes = 0;

            const Request req = request_message(cm);
            cm.pending_request_bytes = req.bytes;
            const SimTime burst_end = rx_start + plant_.burst_offset(sent + request_bytes);
            sim_.schedule(burst_end, ev_request_at_remote_node, id, {req.bytes, request_bytes, 0});

            channel_free_ = burst_end;
            counters_.channel_busy += burst_end - rx_start;
            counters_.data_bytes += sent;
            ++counters_.bursts;
            ++counters_.requests;
        }
    }

    void DppMac::on_request_at_headend(std::uint32_t cm_id, std::uint64_t reported_bytes)
    {
        CableModem &cm = plant_.cms.at(cm_id);
        cm.granted_bytes = reported_bytes;
        const int g = group_of_[cm_id];
        if (outstanding_[g] == 0)
        {
            throw std::logic_error("unexpected request at the headend");
        }
        if (--outstanding_[g] == 0)
        {
            sim_.schedule(std::max(sim_.now(), last_issue_[g] + plant_.config.min_cycle), ev_grant_issue,
                          static_cast<std::uint32_t>(g));
        }
    }

    std::uint64_t DppMac::total_backlog_bytes(SimTime t)
    {
        std::uint64_t total = 0;
        for (auto &cm : plant_.cms)
        {
            cm.pull_until(t);
            total += cm.queued_bytes;
        }
        return total;
    }
} // namespace rfft
