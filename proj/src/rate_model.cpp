#include "rfft/rate_model.hpp"

#include <stdexcept>

namespace rfft
{
    namespace
    {
        void require(bool ok, const char *what)
        {
            if (!ok)
            {
                throw std::invalid_argument(what);
            }
        }

        bool valid_qam_bits(int q)
        {
            return q >= 2 && q <= 12 && q % 2 == 0;
        }
    } // namespace

    std::string format_gbps(const Bitrate &rate, int decimals, Rounding mode)
    {
        return format_decimal(rate.in_gbps(), decimals, mode);
    }

    void LtePhyProfile::validate() const
    {
        require(num_rru >= 1, "LTE profile: num_rru must be >= 1");
        require(num_antennas >= 1, "LTE profile: num_antennas must be >= 1");
        require(bits_per_component >= 1, "LTE profile: bits_per_component must be >= 1");
        require(code_rate > 0 && code_rate <= 1, "LTE profile: code_rate must be in (0, 1]");
        require(valid_qam_bits(qam_bits), "LTE profile: qam_bits must be one of 2,4,...,12");
        require(symbol_duration_s > 0, "LTE profile: symbol duration must be positive");
        require(used_subcarriers >= 0, "LTE profile: used_subcarriers must be >= 0");
        require(carrier_freq_hz >= 0 && sampling_freq_hz >= 0, "LTE profile: frequencies must be >= 0");
    }

    std::vector<std::string> DocsisPhyProfile::validate() const
    {
        require(num_nodes >= 1 && num_antennas >= 1, "DOCSIS profile: node/antenna counts must be >= 1");
        require(bits_per_component >= 1, "DOCSIS profile: bits_per_component must be >= 1");
        require(code_rate > 0 && code_rate <= 1, "DOCSIS profile: code_rate must be in (0, 1]");
        require(valid_qam_bits(qam_bits), "DOCSIS profile: qam_bits must be one of 2,4,...,12");
        require(guard_subcarriers >= 0 && continuous_pilots >= 0 && scattered_pilots >= 0,
                "DOCSIS profile: pilot counts must be >= 0");
        require(guard_subcarriers + continuous_pilots + scattered_pilots < total_subcarriers,
                "DOCSIS profile: guard + pilots must be fewer than total subcarriers");

        std::vector<std::string> warnings;
        if (symbol_duration_s != ratio(40, 1'000'000) && symbol_duration_s != ratio(8413, 100'000'000))
        {
            warnings.push_back("DOCSIS symbol duration " + format_decimal(symbol_duration_s * 1'000'000, 3) +
                               " us is not a standard value (40 us or 84.13 us)");
        }
        return warnings;
    }

    Bitrate passband_rate(const LtePhyProfile &p)
    {
        return Bitrate{Rational(p.num_rru) * p.num_antennas * 2 * p.carrier_freq_hz * p.bits_per_component};
    }

    Bitrate passband_rate(const DocsisPhyProfile &p)
    {
        return Bitrate{Rational(p.num_nodes) * p.num_antennas * 2 * p.carrier_freq_hz * p.bits_per_component};
    }

    Bitrate baseband_rate(const LtePhyProfile &p)
    {
        return Bitrate{Rational(p.num_rru) * p.num_antennas * p.oversampling * p.sampling_freq_hz * 2 *
                       p.bits_per_component};
    }

    Bitrate baseband_rate(const DocsisPhyProfile &p)
    {
        return Bitrate{Rational(p.num_nodes) * p.num_antennas * p.oversampling * p.sampling_freq_hz * 2 *
                       p.bits_per_component};
    }

    Bitrate freq_domain_rate(const LtePhyProfile &p)
    {
        require(p.symbol_duration_s > 0, "freq_domain_rate: symbol duration must be positive");
        return Bitrate{Rational(p.num_rru) * p.num_antennas * p.used_subcarriers / p.symbol_duration_s * 2 *
                       p.bits_per_component};
    }

    Rational iq_expansion_factor(const Rational &code_rate, int qam_bits, int bits_per_component)
    {
        require(code_rate > 0 && code_rate <= 1, "code rate must lie in (0, 1]");
        require(qam_bits > 0, "QAM bits must be positive");
        return Rational(2 * bits_per_component) / (code_rate * qam_bits);
    }

    Bitrate fft_split_payload_rate(const TrafficLoad &load, const Rational &code_rate, int qam_bits,
                                   int bits_per_component)
    {
        require(load.rho >= 0 && load.rho <= 1, "traffic load rho must lie in [0, 1]");
        return load.offered() * iq_expansion_factor(code_rate, qam_bits, bits_per_component);
    }

    Bitrate fft_split_overhead_rate(const Rational &overhead_fraction, const Bitrate &full_load_payload_rate)
    {
        require(overhead_fraction >= 0, "fft_split_overhead_rate: overhead fraction must be >= 0");
        return full_load_payload_rate * overhead_fraction;
    }

    Rational FftSplitRate::savings_fraction() const
    {
        if (total.bps == 0)
        {
            return Rational(0);
        }
        return overhead.bps / total.bps;
    }

    FftSplitRate fft_split_total_rate(const TrafficLoad &load, const Rational &code_rate, int qam_bits,
                                      int bits_per_component, const Rational &overhead_fraction)
    {
        FftSplitRate r;
        r.payload = fft_split_payload_rate(load, code_rate, qam_bits, bits_per_component);
        const TrafficLoad full{Rational(1), load.capacity};
        r.overhead = fft_split_overhead_rate(overhead_fraction,
                                             fft_split_payload_rate(full, code_rate, qam_bits, bits_per_component));
        r.total = r.payload + r.overhead;
        return r;
    }

    bool fits_frequency_domain_capacity(const FftSplitRate &rate, const Bitrate &freq_domain_capacity)
    {
        return rate.total <= freq_domain_capacity;
    }

    std::vector<SplitComparisonRow> split_comparison_table(const LtePhyProfile &lte, const DocsisPhyProfile &docsis,
                                                           const std::vector<Rational> &loads,
                                                           const SplitComparisonOptions &options)
    {
        lte.validate();
        docsis.validate();

        Bitrate lte_baseband = baseband_rate(lte);
        if (options.lte_baseband_rounding_step)
        {
            lte_baseband.bps =
                quantize_to_step(lte_baseband.bps, options.lte_baseband_rounding_step->bps, Rounding::nearest);
        }
        const TechnologyRates baseband{lte_baseband * options.lte_scaleup, baseband_rate(docsis)};
        const TechnologyRates passband{passband_rate(lte), passband_rate(docsis)};

        std::vector<SplitComparisonRow> rows;
        rows.reserve(loads.size());
        for (const Rational &rho : loads)
        {
            require(rho >= 0 && rho <= 1, "split_comparison_table: loads must lie in [0, 1]");
            const auto lte_fft = fft_split_total_rate(TrafficLoad{rho, lte.link_capacity}, lte.code_rate,
                                                      lte.qam_bits, lte.bits_per_component, options.lte_overhead);
            const auto doc_fft =
                fft_split_total_rate(TrafficLoad{rho, docsis.link_capacity}, docsis.code_rate, docsis.qam_bits,
                                     docsis.bits_per_component, options.docsis_overhead);
            rows.push_back(SplitComparisonRow{
                rho,
                TechnologyRates{lte_fft.payload, doc_fft.payload},
                TechnologyRates{lte_fft.total, doc_fft.total},
                baseband,
                passband,
            });
        }
        return rows;
    }
} // namespace rfft
