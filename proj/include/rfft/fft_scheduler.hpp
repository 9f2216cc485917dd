#pragma once

// Sharing one IFFT/FFT module between DOCSIS and LTE symbol streams:
// schedulability tests, the non-preemptive EDF timeline, and the remote-node
// procedure that merges cached QAM symbols into each received grid before
// handing it to the module.

#include "rfft/caching_model.hpp"
#include "rfft/des.hpp"
#include "rfft/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rfft
{
    struct PeriodicTask
    {
        std::string name;
        SimTime period;
        SimTime compute_time;
        SimTime guard_time{}; // context-switch/wake-up allowance added to every job
        SimTime phase{};

        SimTime busy_time() const { return compute_time + guard_time; }
        /// Throws std::invalid_argument unless 0 < busy_time <= period.
        void validate() const;
    };

    struct TimelineEntry
    {
        std::string task;
        std::int64_t job = 0;
        SimTime release;
        SimTime start;
        SimTime finish;
        SimTime deadline;

        bool missed() const { return finish > deadline; }
        friend bool operator==(const TimelineEntry &, const TimelineEntry &) = default;
    };

    struct ScheduleTimeline
    {
        std::vector<TimelineEntry> entries; // in start order
        std::vector<TimelineEntry> misses;
    };

    /// Sum of busy_time / period, exact.
    Rational utilization(std::span<const PeriodicTask> tasks);

    bool preemptive_schedulable(std::span<const PeriodicTask> tasks);

    struct PairConditions
    {
        bool utilization_ok = false;
        // Each period covers the other task's compute time.
        bool periods_cover_compute = false;
        // The longer period covers both compute times.
        bool longer_period_covers_sum = false;
        // The shorter period covers both compute times. Needed because a job of the
        // short-period task can be blocked by a just-started job of the other task.
        bool shorter_period_covers_sum = false;

        bool schedulable() const
        {
            return utilization_ok && periods_cover_compute && longer_period_covers_sum && shorter_period_covers_sum;
        }
    };

    PairConditions nonpreemptive_conditions(const PeriodicTask &a, const PeriodicTask &b);

    /// Sufficient test for non-preemptive EDF of two periodic tasks with implicit
    /// deadlines. `edf_timeline` is the ground truth.
    bool nonpreemptive_schedulable_pair(const PeriodicTask &cable, const PeriodicTask &lte);

    /// lcm of all periods.
    SimTime hyperperiod(std::span<const PeriodicTask> tasks);

    /// Non-preemptive EDF over every job released before `horizon`. Deadline is the
    /// next release of the same task; ties go to the lexicographically smaller task
    /// name. Jobs released before the horizon run to completion even past it.
    ScheduleTimeline edf_timeline(std::span<const PeriodicTask> tasks, SimTime horizon);

    struct SymbolJob
    {
        Technology technology = Technology::lte;
        SimTime release;
        int iq_payload_symbols = 0;
        int cache_reads = 0;
    };

    struct TechnologyGrid
    {
        Technology technology = Technology::lte;
        int grid_size = 0;         // QAM symbols per OFDM symbol
        int cached_positions = 0;  // positions filled from the cache when enabled
        SimTime period;            // symbol duration
        SimTime compute_time;      // FFT time including any guard
    };

    struct SubmittedSymbol
    {
        SymbolJob job;           // with cache_reads filled in
        bool module_busy = false; // module was running another symbol at release
        SimTime earliest_start;  // release, or the running symbol's finish time
        SimTime deadline;
    };

    /// Remote-node side of the caching + shared-FFT procedure. Symbols must be
    /// submitted in non-decreasing release order.
    class RemoteFftNode
    {
    public:
        RemoteFftNode(std::vector<TechnologyGrid> grids, bool caching_enabled);

        /// Installs the cached symbols for a technology (initial signalling or renew).
        void load_cache(Technology t);
        /// Drops a technology's cached symbols.
        void flush_cache(Technology t);
        bool cache_loaded(Technology t) const;

        /// Merges cached positions into the received grid, then queues the symbol
        /// for the FFT module.
        /// Throws std::invalid_argument if the grid does not add up.
        SubmittedSymbol process_symbol(SymbolJob job);

        /// Runs every queued symbol to completion and returns the timeline.
        ScheduleTimeline finish();

        /// Positions that should have come from the cache but did not.
        std::uint64_t cache_misses() const { return cache_misses_; }
        /// Set once a miss shows the cache is stale; cleared by load_cache.
        bool renew_requested() const { return renew_requested_; }

    private:
        struct Pending
        {
            SymbolJob job;
            SimTime deadline;
            std::int64_t index;
        };

        const TechnologyGrid &grid(Technology t) const;
        void dispatch_until(SimTime t);
        void start(const Pending &p, SimTime at);

        std::vector<TechnologyGrid> grids_;
        bool caching_enabled_;
        std::map<Technology, bool> cache_valid_;
        std::vector<Pending> pending_;
        std::map<Technology, std::int64_t> job_counter_;
        SimTime busy_until_;
        SimTime last_release_;
        ScheduleTimeline timeline_;
        std::uint64_t cache_misses_ = 0;
        bool renew_requested_ = false;
    };
} // namespace rfft
