#include "rfft/des.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rfft
{
    SimTime SimTime::from_seconds(double seconds)
    {
        if (!std::isfinite(seconds))
        {
            throw std::invalid_argument("SimTime::from_seconds: non-finite value");
        }
        return SimTime(std::llround(seconds * static_cast<double>(ps_per_second)));
    }

    SimTime transmission_time(std::uint64_t bytes, double rate_bps)
    {
        if (rate_bps <= 0.0)
        {
            throw std::invalid_argument("transmission_time: rate must be positive");
        }
        const double ps = static_cast<double>(bytes) * 8.0 * static_cast<double>(SimTime::ps_per_second) / rate_bps;
        return SimTime::from_ps(std::llround(ps));
    }

    void Simulator::schedule(Event event)
    {
        if (event.fire_time < now_)
        {
            throw SchedulingError("event kind " + std::to_string(event.kind) + " scheduled at " +
                                  std::to_string(event.fire_time.ps()) + " ps, before the clock at " +
                                  std::to_string(now_.ps()) + " ps");
        }
        event.sequence = next_sequence_++;
        heap_.push_back(event);
        std::push_heap(heap_.begin(), heap_.end(), Later{});
    }

    void Simulator::schedule(SimTime at, std::uint32_t kind, std::uint32_t target,
                             std::array<std::uint64_t, 3> payload)
    {
        Event ev;
        ev.fire_time = at;
        ev.kind = kind;
        ev.target = target;
        ev.payload = payload;
        schedule(ev);
    }

    void Simulator::run_until(SimTime end, const Handler &handler)
    {
        stopped_ = false;
        while (!heap_.empty() && !stopped_)
        {
            if (heap_.front().fire_time > end)
            {
                break;
            }
            std::pop_heap(heap_.begin(), heap_.end(), Later{});
            const Event ev = heap_.back();
            heap_.pop_back();
            now_ = ev.fire_time;
            ++dispatched_;
            handler(ev);
        }
        if (!stopped_ && end > now_)
        {
            now_ = end;
        }
    }

    std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id), engine_(mix64(mix64(seed) ^ mix64(stream_id + 0x632be59bd9b4e019ULL)))
    {
    }

    double RngStream::uniform01()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double RngStream::exponential(double mean)
    {
        return -mean * std::log1p(-uniform01());
    }

    double RngStream::pareto(double alpha, double x_min)
    {
        return x_min * std::pow(1.0 - uniform01(), -1.0 / alpha);
    }

    RngStream RngStream::substream(std::uint64_t index) const
    {
        return RngStream(mix64(seed_ ^ 0xd1b54a32d192ed03ULL) + stream_id_, mix64(index) ^ stream_id_);
    }
} // namespace rfft
