#include "rfft/fft_scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rfft
{
    void PeriodicTask::validate() const
    {
        if (period <= SimTime{} || compute_time <= SimTime{} || guard_time < SimTime{} || phase < SimTime{})
        {
            throw std::invalid_argument("task '" + name + "': period and compute time must be positive");
        }
        if (busy_time() > period)
        {
            throw std::invalid_argument("task '" + name + "': compute time exceeds period");
        }
    }

    Rational utilization(std::span<const PeriodicTask> tasks)
    {
        Rational u = 0;
        for (const auto &t : tasks)
        {
            t.validate();
            u += Rational(BigInt(t.busy_time().ps()), BigInt(t.period.ps()));
        }
        return u;
    }

    bool preemptive_schedulable(std::span<const PeriodicTask> tasks)
    {
        if (tasks.empty())
        {
            throw std::invalid_argument("preemptive_schedulable: no tasks");
        }
        return utilization(tasks) <= 1;
    }

    PairConditions nonpreemptive_conditions(const PeriodicTask &a, const PeriodicTask &b)
    {
        const std::array<PeriodicTask, 2> pair{a, b};
        PairConditions c;
        c.utilization_ok = utilization(pair) <= 1;

        const SimTime sum = a.busy_time() + b.busy_time();
        const SimTime shorter = std::min(a.period, b.period);
        const SimTime longer = std::max(a.period, b.period);
        c.periods_cover_compute = a.period >= b.busy_time() && b.period >= a.busy_time();
        c.longer_period_covers_sum = longer >= sum;
        // With equal periods no job of one task can be released while a job of the
        // other is blocking it past its deadline; utilization alone decides.
        c.shorter_period_covers_sum = a.period == b.period || shorter >= sum;
        return c;
    }

    bool nonpreemptive_schedulable_pair(const PeriodicTask &cable, const PeriodicTask &lte)
    {
        return nonpreemptive_conditions(cable, lte).schedulable();
    }

    SimTime hyperperiod(std::span<const PeriodicTask> tasks)
    {
        std::int64_t h = 1;
        for (const auto &t : tasks)
        {
            t.validate();
            h = std::lcm(h, t.period.ps());
        }
        return SimTime::from_ps(h);
    }

    ScheduleTimeline edf_timeline(std::span<const PeriodicTask> tasks, SimTime horizon)
    {
        if (horizon <= SimTime{})
        {
            throw std::invalid_argument("edf_timeline: horizon must be positive");
        }

        std::vector<std::size_t> order(tasks.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return tasks[x].name < tasks[y].name; });

        struct Job
        {
            std::size_t rank; // position in name order
            std::int64_t index;
            SimTime release;
            SimTime deadline;
        };
        std::vector<Job> jobs;
        for (std::size_t rank = 0; rank < order.size(); ++rank)
        {
            const PeriodicTask &t = tasks[order[rank]];
            t.validate();
            for (std::int64_t k = 0;; ++k)
            {
                const SimTime release = t.phase + t.period * k;
                if (release >= horizon)
                {
                    break;
                }
                jobs.push_back(Job{rank, k, release, release + t.period});
            }
        }
        std::stable_sort(jobs.begin(), jobs.end(), [](const Job &x, const Job &y) { return x.release < y.release; });

        auto earlier = [](const Job &x, const Job &y) {
            if (x.deadline != y.deadline)
            {
                return x.deadline < y.deadline;
            }
            if (x.rank != y.rank)
            {
                return x.rank < y.rank;
            }
            return x.release < y.release;
        };

        ScheduleTimeline timeline;
        timeline.entries.reserve(jobs.size());
        std::vector<Job> ready;
        std::size_t next = 0;
        SimTime clock{};
        while (next < jobs.size() || !ready.empty())
        {
            if (ready.empty() && jobs[next].release > clock)
            {
                clock = jobs[next].release;
            }
            while (next < jobs.size() && jobs[next].release <= clock)
            {
                ready.push_back(jobs[next++]);
            }
            const auto pick = std::min_element(ready.begin(), ready.end(), earlier);
            const Job job = *pick;
            ready.erase(pick);

            const PeriodicTask &t = tasks[order[job.rank]];
            TimelineEntry e{t.name, job.index, job.release, clock, clock + t.busy_time(), job.deadline};
            clock = e.finish;
            if (e.missed())
            {
                timeline.misses.push_back(e);
            }
            timeline.entries.push_back(std::move(e));
        }
        return timeline;
    }

    RemoteFftNode::RemoteFftNode(std::vector<TechnologyGrid> grids, bool caching_enabled)
        : grids_(std::move(grids)), caching_enabled_(caching_enabled)
    {
        for (const auto &g : grids_)
        {
            if (g.grid_size <= 0 || g.cached_positions < 0 || g.cached_positions > g.grid_size)
            {
                throw std::invalid_argument("RemoteFftNode: invalid grid for " + to_string(g.technology));
            }
            if (g.period <= SimTime{} || g.compute_time <= SimTime{})
            {
                throw std::invalid_argument("RemoteFftNode: period and compute time must be positive");
            }
            cache_valid_[g.technology] = false;
        }
    }

    const TechnologyGrid &RemoteFftNode::grid(Technology t) const
    {
        for (const auto &g : grids_)
        {
            if (g.technology == t)
            {
                return g;
            }
        }
        throw std::invalid_argument("RemoteFftNode: no grid configured for " + to_string(t));
    }

    void RemoteFftNode::load_cache(Technology t)
    {
        grid(t);
        cache_valid_[t] = true;
        renew_requested_ = false;
    }

    void RemoteFftNode::flush_cache(Technology t)
    {
        grid(t);
        cache_valid_[t] = false;
    }

    bool RemoteFftNode::cache_loaded(Technology t) const
    {
        const auto it = cache_valid_.find(t);
        return it != cache_valid_.end() && it->second;
    }

    void RemoteFftNode::start(const Pending &p, SimTime at)
    {
        const TechnologyGrid &g = grid(p.job.technology);
        TimelineEntry e{to_string(p.job.technology), p.index, p.job.release, at, at + g.compute_time, p.deadline};
        busy_until_ = e.finish;
        if (e.missed())
        {
            timeline_.misses.push_back(e);
        }
        timeline_.entries.push_back(std::move(e));
    }

    void RemoteFftNode::dispatch_until(SimTime t)
    {
        // A decision at time s is final only once every release <= s is known,
        // i.e. for s strictly before the newest release.
        while (!pending_.empty())
        {
            SimTime first_release = SimTime::max();
            for (const auto &p : pending_)
            {
                first_release = std::min(first_release, p.job.release);
            }
            const SimTime s = std::max(busy_until_, first_release);
            if (s >= t)
            {
                return;
            }
            auto best = pending_.end();
            for (auto it = pending_.begin(); it != pending_.end(); ++it)
            {
                if (it->job.release > s)
                {
                    continue;
                }
                if (best == pending_.end() || it->deadline < best->deadline ||
                    (it->deadline == best->deadline &&
                     to_string(it->job.technology) < to_string(best->job.technology)))
                {
                    best = it;
                }
            }
            const Pending chosen = *best;
            pending_.erase(best);
            start(chosen, s);
        }
    }

    SubmittedSymbol RemoteFftNode::process_symbol(SymbolJob job)
    {
        if (job.release < last_release_)
        {
            throw std::invalid_argument("process_symbol: symbols must arrive in release order");
        }
        const TechnologyGrid &g = grid(job.technology);
        if (job.iq_payload_symbols < 0)
        {
            throw std::invalid_argument("process_symbol: negative payload");
        }

        job.cache_reads = 0;
        if (caching_enabled_ && g.cached_positions > 0)
        {
            if (cache_loaded(job.technology))
            {
                job.cache_reads = g.cached_positions;
            }
            else
            {
                cache_misses_ += static_cast<std::uint64_t>(g.cached_positions);
                renew_requested_ = true;
            }
        }
        const bool stale = caching_enabled_ && g.cached_positions > 0 && !cache_loaded(job.technology);
        const int expected_payload = stale ? g.grid_size - g.cached_positions : g.grid_size - job.cache_reads;
        if (job.iq_payload_symbols != expected_payload)
        {
            throw std::invalid_argument("process_symbol: " + to_string(job.technology) + " grid of " +
                                        std::to_string(g.grid_size) + " positions got " +
                                        std::to_string(job.iq_payload_symbols) + " received + " +
                                        std::to_string(job.cache_reads) + " cached");
        }

        last_release_ = job.release;
        dispatch_until(job.release);

        SubmittedSymbol out;
        out.job = job;
        out.module_busy = busy_until_ > job.release;
        out.earliest_start = std::max(job.release, busy_until_);
        out.deadline = job.release + g.period;

        pending_.push_back(Pending{job, out.deadline, job_counter_[job.technology]++});
        return out;
    }

    ScheduleTimeline RemoteFftNode::finish()
    {
        dispatch_until(SimTime::max());
        return timeline_;
    }
} // namespace rfft
