#pragma once

// Deterministic single-threaded discrete-event kernel: integer picosecond clock,
// (fire_time, sequence) ordered event calendar, and reproducible RNG streams.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rfft
{
    class SimTime
    {
    public:
        static constexpr std::int64_t ps_per_second = 1'000'000'000'000;

        constexpr SimTime() = default;

        static constexpr SimTime from_ps(std::int64_t ps) { return SimTime(ps); }
        static constexpr SimTime from_ns(std::int64_t ns) { return SimTime(ns * 1'000); }
        static constexpr SimTime from_us(std::int64_t us) { return SimTime(us * 1'000'000); }
        static constexpr SimTime from_ms(std::int64_t ms) { return SimTime(ms * 1'000'000'000); }
        /// Rounds to the nearest picosecond.
        static SimTime from_seconds(double seconds);
        static constexpr SimTime max() { return SimTime(std::numeric_limits<std::int64_t>::max()); }

        constexpr std::int64_t ps() const { return ps_; }
        constexpr double seconds() const { return static_cast<double>(ps_) / ps_per_second; }

        constexpr SimTime operator+(SimTime other) const { return SimTime(ps_ + other.ps_); }
        constexpr SimTime operator-(SimTime other) const { return SimTime(ps_ - other.ps_); }
        constexpr SimTime &operator+=(SimTime other)
        {
            ps_ += other.ps_;
            return *this;
        }
        constexpr SimTime operator*(std::int64_t k) const { return SimTime(ps_ * k); }
        constexpr auto operator<=>(const SimTime &) const = default;

    private:
        constexpr explicit SimTime(std::int64_t ps) : ps_(ps) {}
        std::int64_t ps_ = 0;
    };

    /// Time to serialize `bytes` at `rate_bps`, rounded to the nearest picosecond.
    SimTime transmission_time(std::uint64_t bytes, double rate_bps);

    struct Event
    {
        SimTime fire_time;
        std::uint64_t sequence = 0;
        std::uint32_t kind = 0;
        std::uint32_t target = 0;
        std::array<std::uint64_t, 3> payload{};
    };

    /// Scheduling before the current clock.
    class SchedulingError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    class Simulator
    {
    public:
        using Handler = std::function<void(const Event &)>;

        SimTime now() const { return now_; }

        /// Inserts `event`; its sequence field is overwritten with the next
        /// insertion counter so (fire_time, sequence) stays unique.
        void schedule(Event event);
        void schedule(SimTime at, std::uint32_t kind, std::uint32_t target = 0,
                      std::array<std::uint64_t, 3> payload = {});

        /// Dispatches every event with fire_time <= end in (fire_time, sequence)
        /// order; afterwards the clock reads `end` (the clock never moves back).
        void run_until(SimTime end, const Handler &handler);

        /// Stops run_until after the current event returns.
        void stop() { stopped_ = true; }

        std::size_t pending() const { return heap_.size(); }
        std::uint64_t dispatched() const { return dispatched_; }
        std::uint64_t scheduled() const { return next_sequence_; }

    private:
        struct Later
        {
            bool operator()(const Event &a, const Event &b) const
            {
                if (a.fire_time != b.fire_time)
                {
                    return a.fire_time > b.fire_time;
                }
                return a.sequence > b.sequence;
            }
        };

        std::vector<Event> heap_;
        SimTime now_;
        std::uint64_t next_sequence_ = 0;
        std::uint64_t dispatched_ = 0;
        bool stopped_ = false;
    };

    /// Counter-free splitmix64 finalizer.
    std::uint64_t mix64(std::uint64_t x);

    /// Independent random stream identified by (seed, stream_id). Uses only
    /// fully specified generators (mt19937_64 plus explicit transforms) so the
    /// sequence is the same on every conforming platform.
    class RngStream
    {
    public:
        RngStream(std::uint64_t seed, std::uint64_t stream_id);

        std::uint64_t seed() const { return seed_; }
        std::uint64_t stream_id() const { return stream_id_; }

        std::uint64_t next_u64() { return engine_(); }
        /// Uniform on [0, 1) with 53 random bits.
        double uniform01();
        /// Exponential with the given mean.
        double exponential(double mean);
        /// Pareto with shape `alpha` and scale (minimum) `x_min`.
        double pareto(double alpha, double x_min);
        /// Uniform on [lo, hi).
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

        /// Child stream that does not overlap this one in practice.
        RngStream substream(std::uint64_t index) const;

    private:
        std::uint64_t seed_;
        std::uint64_t stream_id_;
        std::mt19937_64 engine_;
    };
} // namespace rfft
