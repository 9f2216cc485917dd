#include "rfft/traffic.hpp"

#include "doctest.h"
#include "support/stats_oracles.hpp"

#include <sstream>

using namespace rfft;

namespace
{
    std::vector<double> gaps_s(ArrivalProcess &p, std::size_t n)
    {
        std::vector<double> out;
        out.reserve(n);
        SimTime prev;
        for (std::size_t i = 0; i < n; ++i)
        {
            const Arrival a = p.next();
            out.push_back((a.time - prev).seconds());
            prev = a.time;
        }
        return out;
    }

    double offered_bps(ArrivalProcess &p, SimTime until)
    {
        std::uint64_t bytes = 0;
        for (Arrival a = p.next(); a.time < until; a = p.next())
        {
            bytes += a.bytes;
        }
        return 8.0 * static_cast<double>(bytes) / until.seconds();
    }

    std::vector<double> binned_bytes(ArrivalProcess &p, SimTime bin, std::size_t bins)
    {
        std::vector<double> out(bins, 0.0);
        for (Arrival a = p.next(); a.time.ps() / bin.ps() < static_cast<std::int64_t>(bins); a = p.next())
        {
            out[static_cast<std::size_t>(a.time.ps() / bin.ps())] += a.bytes;
        }
        return out;
    }

    TrafficConfig onoff(double hurst)
    {
        TrafficConfig c;
        c.hurst = hurst;
        c.rho = 0.1;
        return c;
    }
}

TEST_SUITE("traffic")
{
    TEST_CASE("Poisson interarrivals pass a KS test")
    {
        PoissonArrivals p(1e8, 472, PacketSizeMode::fixed, RngStream(1, 1));
        const auto g = gaps_s(p, 100'000);
        const double mean = 472.0 * 8.0 / 1e8;
        CHECK(oracle::ks_exponential(g, mean) < oracle::ks_critical_1pct(g.size()));
    }

    TEST_CASE("Poisson interarrivals have unit coefficient of variation")
    {
        PoissonArrivals p(5e6, 472, PacketSizeMode::fixed, RngStream(2, 1));
        const auto g = gaps_s(p, 1'000'000);
        CHECK(oracle::coefficient_of_variation(g) == doctest::Approx(1.0).epsilon(0.05));
    }

    TEST_CASE("generators offer the configured load")
    {
        for (double hurst : {0.5, 0.8})
        {
            TrafficConfig c = onoff(hurst);
            c.rho = 0.2;
            auto g = make_generator(c, RngStream(3, 1), 5e6, 8e8);
            CHECK(g->mean_rate_bps() == doctest::Approx(1e6));
            CHECK(offered_bps(*g, SimTime::from_seconds(4000.0)) == doctest::Approx(1e6).epsilon(0.01));
        }
    }

    TEST_CASE("trimodal sizes keep the 472 byte mean")
    {
        RngStream rng(4, 0);
        double sum = 0.0;
        int small = 0;
        const int n = 1'000'000;
        for (int i = 0; i < n; ++i)
        {
            const auto b = packet_size_sample(PacketSizeMode::trimodal, 472, rng);
            CHECK((b == 64 || b == 668 || b == 1500));
            sum += b;
            small += b == 64 ? 1 : 0;
        }
        CHECK(sum / n == doctest::Approx(472.0).epsilon(0.01));
        CHECK(static_cast<double>(small) / n == doctest::Approx(0.6).epsilon(0.01));
        CHECK(packet_size_sample(PacketSizeMode::fixed, 300, rng) == 300);
    }

    TEST_CASE("streams are reproducible and independent")
    {
        for (double hurst : {0.5, 0.8})
        {
            TrafficConfig c = onoff(hurst);
            auto a = make_generator(c, RngStream(9, 3), 1e9, 1e9);
            auto b = make_generator(c, RngStream(9, 3), 1e9, 1e9);
            auto d = make_generator(c, RngStream(9, 4), 1e9, 1e9);
            bool differs = false;
            for (int i = 0; i < 10'000; ++i)
            {
                const Arrival x = a->next();
                const Arrival y = b->next();
                CHECK(x.time == y.time);
                differs = differs || d->next().time != x.time;
            }
            CHECK(differs);
        }
    }

    TEST_CASE("arrivals come in time order")
    {
        TrafficConfig c = onoff(0.9);
        c.size_mode = PacketSizeMode::trimodal;
        auto g = make_generator(c, RngStream(10, 1), 1e9, 1e9);
        SimTime prev;
        for (int i = 0; i < 100'000; ++i)
        {
            const Arrival a = g->next();
            CHECK(a.time >= prev);
            prev = a.time;
        }
    }

    TEST_CASE("aggregated variance of independent noise gives one half")
    {
        RngStream rng(11, 0);
        std::vector<double> x(1 << 18);
        for (auto &v : x)
        {
            v = rng.exponential(1.0);
        }
        CHECK(oracle::hurst_aggregated_variance(x, 3) == doctest::Approx(0.5).epsilon(0.1));
    }

    TEST_CASE("ON/OFF superposition is long-range dependent")
    {
        const SimTime bin = SimTime::from_ms(5);
        const std::size_t bins = std::size_t{1} << 17;
        auto poisson = make_generator(onoff(0.5), RngStream(12, 1), 1e9, 1e9);
        auto bursty = make_generator(onoff(0.8), RngStream(12, 1), 1e9, 1e9);
        const double h_poisson = oracle::hurst_aggregated_variance(binned_bytes(*poisson, bin, bins), 3);
        const double h_bursty = oracle::hurst_aggregated_variance(binned_bytes(*bursty, bin, bins), 3);
        MESSAGE("H estimates: Poisson ", h_poisson, ", ON/OFF ", h_bursty);
        CHECK(h_poisson == doctest::Approx(0.5).epsilon(0.1));
        CHECK(h_bursty > h_poisson + 0.15);
    }

    TEST_CASE("configuration checks")
    {
        TrafficConfig c;
        CHECK_NOTHROW(c.validate());
        CHECK(c.poisson());
        c.hurst = 0.8;
        CHECK(c.pareto_shape() == doctest::Approx(1.4));
        c.hurst = 1.0;
        CHECK_THROWS_AS(c.validate(), TrafficConfigError);
        c = TrafficConfig{};
        c.peak_ratio = 1.0;
        CHECK_THROWS_AS(c.validate(), TrafficConfigError);
        c = TrafficConfig{};
        c.size_mode = PacketSizeMode::trimodal;
        c.mean_packet_bytes = 500;
        CHECK_THROWS_AS(c.validate(), TrafficConfigError);
        CHECK_THROWS_AS(parse_packet_size_mode("bimodal"), TrafficConfigError);
        CHECK(parse_packet_size_mode("trimodal") == PacketSizeMode::trimodal);
    }

    TEST_CASE("line rate limits the offered and peak rates")
    {
        TrafficConfig c;
        c.rho = 0.5;
        CHECK_THROWS_AS(make_generator(c, RngStream(1, 1), 1e9, 4e8), TrafficConfigError);
        CHECK_NOTHROW(make_generator(c, RngStream(1, 1), 1e9, 6e8));
        c.hurst = 0.8;
        CHECK_THROWS_AS(make_generator(c, RngStream(1, 1), 1e9, 6e8), TrafficConfigError);
        CHECK_NOTHROW(make_generator(c, RngStream(1, 1), 1e9, 1e9));
    }

    TEST_CASE("zero load never arrives")
    {
        TrafficConfig c;
        c.rho = 0.0;
        CHECK(make_generator(c, RngStream(1, 1), 1e9, 1e9)->next().time == SimTime::max());
        c.hurst = 0.7;
        CHECK(make_generator(c, RngStream(1, 1), 1e9, 1e9)->next().time == SimTime::max());
    }

    TEST_CASE("arrival trace format")
    {
        PoissonArrivals p(1e6, 100, PacketSizeMode::fixed, RngStream(13, 1));
        std::ostringstream out;
        write_arrival_trace(out, 7, p, SimTime::from_ms(50));
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "source_id,time_ps,bytes");
        int rows = 0;
        while (std::getline(in, line))
        {
            ++rows;
            CHECK(line.rfind("7,", 0) == 0);
            CHECK(line.substr(line.size() - 4) == ",100");
        }
        CHECK(rows > 30);
        CHECK(rows < 100);
    }
}
