#pragma once

// One upstream experiment (remote node mode, loads, distances, burstiness,
// durations) and its plain-text `key = value` configuration format.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rfft
{
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string key, const std::string &message)
            : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key))
        {
        }
        const std::string &key() const { return key_; }

    private:
        std::string key_;
    };

    enum class RemoteNodeMode
    {
        rphy,
        rfft,
    };

    enum class RfftBatching
    {
        batched,    // per-symbol windows of T_C
        per_packet, // each cable packet expanded on its own
    };

    enum class LteTraffic
    {
        cbr,    // fixed-size datagrams at exact spacing
        bursty, // datagrams from the scenario's traffic process (Poisson or ON/OFF)
    };

    std::string to_string(RemoteNodeMode m);
    std::string to_string(RfftBatching b);
    std::string to_string(LteTraffic t);
    RemoteNodeMode parse_mode(std::string_view text);
    RfftBatching parse_batching(std::string_view text);
    LteTraffic parse_lte_traffic(std::string_view text);

    struct ScenarioConfig
    {
        RemoteNodeMode mode = RemoteNodeMode::rphy;
        double rho_c = 0.2;
        double rho_b = 0.5;
        double hurst = 0.5;
        double distance_km = 25.0;
        double duration_s = 600.0; // measured time after warm-up
        double warmup_s = 10.0;
        int num_cms = 200;
        std::uint64_t seed = 1;

        // cable plant
        double cable_gbps = 1.0;
        double data_fraction = 0.8;
        double cm_min_km = 1.0;
        double cm_max_km = 2.0;
        std::uint32_t request_bytes = 64;
        double min_cycle_s = 0.002;

        // traffic
        std::uint32_t mean_packet_bytes = 472;
        int num_subsources = 16;
        double onoff_mean_s = 0.02;
        double onoff_peak_ratio = 2.0;
        bool trimodal_sizes = false;

        // fronthaul
        double fronthaul_gbps = 10.0;
        double uepi_overhead = 0.05;
        std::uint32_t frame_bytes = 1500;
        RfftBatching batching = RfftBatching::batched;
        LteTraffic lte_traffic = LteTraffic::cbr;
        double code_rate = 0.9;
        int qam_bits = 12;
        int bits_per_component = 10;

        // shared FFT module
        double cable_symbol_us = 40.0;
        double lte_symbol_us = 71.4;
        double tau_c_us = 20.0;
        double tau_l_us = 10.0;

        // measurement
        double sample_interval_s = 0.01;
        double saturation_threshold = 1e-3; // queue growth, as a fraction of the link rate

        /// Throws ConfigError naming the first out-of-range field.
        void validate() const;
        double end_s() const { return warmup_s + duration_s; }

        friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
    };

    /// Parses "12.5", "25km", "40us", "10gbps" style values. `unit` is the unit the
    /// bare number is taken in: one of "", "s", "us", "km", "gbps".
    double parse_quantity(std::string_view text, std::string_view unit);

    /// Applies one `key = value` assignment. Throws ConfigError on an unknown key or
    /// a malformed value.
    void apply_setting(ScenarioConfig &cfg, std::string_view key, std::string_view value);

    /// Every recognised key, in serialization order.
    const std::vector<std::string> &config_keys();

    /// Parses a config file body. An empty text gives the defaults.
    ScenarioConfig parse_config_text(std::string_view text);
    ScenarioConfig parse_config(const std::string &path);

    /// Full `key = value` listing; parse_config_text(serialize(c)) == c.
    std::string serialize(const ScenarioConfig &cfg);

    struct SweepAxis
    {
        std::string key;
        std::vector<std::string> values;
    };

    struct SweepSpec
    {
        ScenarioConfig base;
        std::vector<SweepAxis> axes;
    };

    /// Base settings followed by an optional `[sweep]` section whose keys list
    /// values as "a, b, c" or "start:stop:step" (inclusive, exact decimal steps).
    SweepSpec parse_sweep_text(std::string_view text);
    SweepSpec parse_sweep(const std::string &path);

    /// Cartesian product of the axes, first axis outermost.
    std::vector<ScenarioConfig> expand(const SweepSpec &spec);
} // namespace rfft
