#pragma once

// Closed-form fronthaul bitrates for the passband, baseband, frequency-domain and
// FFT (R-FFT) function splits. Everything is exact rational arithmetic; rounding
// happens only when a value is rendered.

#include "rfft/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rfft
{
    /// Bit rate in bit/s, held exactly.
    struct Bitrate
    {
        Rational bps{0};

        static Bitrate gbps(const Rational &g) { return Bitrate{g * 1'000'000'000}; }
        static Bitrate mbps(const Rational &m) { return Bitrate{m * 1'000'000}; }

        Rational in_gbps() const { return bps / 1'000'000'000; }
        double as_double() const { return to_double(bps); }

        Bitrate operator+(const Bitrate &o) const { return Bitrate{bps + o.bps}; }
        Bitrate operator*(const Rational &k) const { return Bitrate{bps * k}; }
        friend bool operator==(const Bitrate &, const Bitrate &) = default;
        friend std::strong_ordering operator<=>(const Bitrate &a, const Bitrate &b)
        {
            return a.bps < b.bps ? std::strong_ordering::less
                                 : (b.bps < a.bps ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
    };

    /// "3.704" style rendering in Gbps.
    std::string format_gbps(const Bitrate &rate, int decimals = 3, Rounding mode = Rounding::nearest);

    struct LtePhyProfile
    {
        int num_rru = 1;
        int num_antennas = 1;
        int bits_per_component = 10;
        Rational carrier_freq_hz{2'000'000'000};
        Rational sampling_freq_hz = ratio(30'720'000);
        int used_subcarriers = 1200;
        // Useful symbol duration; 66.7 us reproduces the 360 Mbps frequency-domain rate.
        Rational symbol_duration_s = ratio(667, 10'000'000);
        int oversampling = 2;
        int qam_bits = 6;
        Rational code_rate = ratio(9, 10);
        Bitrate link_capacity{Rational(1'000'000'000)};

        /// Throws std::invalid_argument when a field is out of range.
        void validate() const;
    };

    struct DocsisPhyProfile
    {
        int num_nodes = 1;
        int num_antennas = 1;
        Rational carrier_freq_hz{1'000'000'000};
        Rational sampling_freq_hz = ratio(204'800'000);
        int fft_size = 4096;
        int total_subcarriers = 7680;
        int guard_subcarriers = 80;
        int continuous_pilots = 88;
        int scattered_pilots = 60;
        Rational symbol_duration_s = ratio(40, 1'000'000);
        int qam_bits = 12;
        Rational code_rate = ratio(9, 10);
        int bits_per_component = 10;
        int oversampling = 2;
        Bitrate link_capacity{Rational(1'000'000'000)};

        /// Throws on hard violations; returns soft warnings (non-standard T_C).
        std::vector<std::string> validate() const;
    };

    struct TrafficLoad
    {
        Rational rho{0};
        Bitrate capacity;

        Bitrate offered() const { return capacity * rho; }
    };

    Bitrate passband_rate(const LtePhyProfile &p);
    Bitrate passband_rate(const DocsisPhyProfile &p);

    Bitrate baseband_rate(const LtePhyProfile &p);
    Bitrate baseband_rate(const DocsisPhyProfile &p);

    Bitrate freq_domain_rate(const LtePhyProfile &p);

    /// I/Q bitrate needed to carry `load` as QAM symbols: rho R / (CR q) * 2K.
    Bitrate fft_split_payload_rate(const TrafficLoad &load, const Rational &code_rate, int qam_bits,
                                   int bits_per_component);

    /// Load-independent cached-overhead bitrate: overhead_fraction times the
    /// payload rate at rho = 1.
    Bitrate fft_split_overhead_rate(const Rational &overhead_fraction, const Bitrate &full_load_payload_rate);

    struct FftSplitRate
    {
        Bitrate payload;  // what crosses the fiber with caching
        Bitrate overhead; // what caching removes
        Bitrate total;    // what crosses the fiber without caching

        Rational savings_fraction() const;
        Rational savings_percent() const { return savings_fraction() * 100; }
    };

    FftSplitRate fft_split_total_rate(const TrafficLoad &load, const Rational &code_rate, int qam_bits,
                                      int bits_per_component, const Rational &overhead_fraction);

    /// Expansion of payload bits into frequency-domain I/Q bits: 2K / (CR q).
    Rational iq_expansion_factor(const Rational &code_rate, int qam_bits, int bits_per_component);

    /// R^F_total <= R^F: the employed subcarriers can carry the split's load.
    bool fits_frequency_domain_capacity(const FftSplitRate &rate, const Bitrate &freq_domain_capacity);

    struct TechnologyRates
    {
        Bitrate lte;
        Bitrate docsis;
        Bitrate total() const { return lte + docsis; }
    };

    struct SplitComparisonRow
    {
        Rational rho;
        TechnologyRates fft_cached;
        TechnologyRates fft_uncached;
        TechnologyRates baseband;
        TechnologyRates passband;
    };

    struct SplitComparisonOptions
    {
        // LTE baseband must be scaled up to carry a 1 Gbps payload.
        Rational lte_scaleup{15};
        Rational lte_overhead = ratio(7, 100);
        Rational docsis_overhead = ratio(3, 100);
        // When set, the 20 MHz LTE baseband rate is rounded to a multiple of this
        // step before scaling (the published table scales the rounded 1.23 Gbps).
        std::optional<Bitrate> lte_baseband_rounding_step;
    };

    std::vector<SplitComparisonRow> split_comparison_table(const LtePhyProfile &lte, const DocsisPhyProfile &docsis,
                                                           const std::vector<Rational> &loads,
                                                           const SplitComparisonOptions &options = {});
} // namespace rfft
