#include "rfft/scenario.hpp"

#include "rfft/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace rfft
{
    namespace
    {
        std::string lower(std::string_view s)
        {
            std::string out(s);
            std::transform(out.begin(), out.end(), out.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            return out;
        }

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            {
                s.remove_prefix(1);
            }
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            {
                s.remove_suffix(1);
            }
            return s;
        }

        // Splits "25.5km" into ("25.5", "km").
        std::pair<std::string_view, std::string_view> split_number(std::string_view text)
        {
            text = trim(text);
            std::size_t i = 0;
            while (i < text.size())
            {
                const char c = text[i];
                const bool numeric = std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' ||
                                     c == '-' ||
                                     ((c == 'e' || c == 'E') && i + 1 < text.size() &&
                                      (std::isdigit(static_cast<unsigned char>(text[i + 1])) || text[i + 1] == '-' ||
                                       text[i + 1] == '+'));
                if (!numeric)
                {
                    break;
                }
                ++i;
            }
            return {trim(text.substr(0, i)), trim(text.substr(i))};
        }

        double parse_number(std::string_view text)
        {
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
            {
                throw std::invalid_argument("'" + std::string(text) + "' is not a number");
            }
            return value;
        }

        double unit_scale(std::string_view family, const std::string &suffix)
        {
            struct Unit
            {
                const char *family;
                const char *suffix;
                double scale;
            };
            // scale converts the suffixed value into the family's base unit
            static const Unit units[] = {
                {"s", "s", 1.0},       {"s", "ms", 1e-3},    {"s", "us", 1e-6},     {"s", "ns", 1e-9},
                {"us", "s", 1e6},      {"us", "ms", 1e3},    {"us", "us", 1.0},     {"us", "ns", 1e-3},
                {"km", "km", 1.0},     {"km", "m", 1e-3},    {"gbps", "gbps", 1.0}, {"gbps", "mbps", 1e-3},
                {"gbps", "kbps", 1e-6}, {"gbps", "bps", 1e-9},
            };
            for (const auto &u : units)
            {
                if (family == u.family && suffix == u.suffix)
                {
                    return u.scale;
                }
            }
            throw std::invalid_argument("unit '" + suffix + "' not accepted here");
        }

        std::string format_double(double v)
        {
            char buf[64];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, ptr);
        }

        template <class Int>
        Int parse_integer(std::string_view text)
        {
            text = trim(text);
            Int value{};
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            {
                throw std::invalid_argument("'" + std::string(text) + "' is not an integer");
            }
            return value;
        }

        bool parse_bool(std::string_view text)
        {
            const std::string t = lower(trim(text));
            if (t == "true" || t == "1" || t == "yes" || t == "on")
            {
                return true;
            }
            if (t == "false" || t == "0" || t == "no" || t == "off")
            {
                return false;
            }
            throw std::invalid_argument("'" + std::string(text) + "' is not a boolean");
        }

        struct Field
        {
            std::string name;
            std::function<void(ScenarioConfig &, std::string_view)> set;
            std::function<std::string(const ScenarioConfig &)> get;
        };

        Field real(std::string name, double ScenarioConfig::*member, std::string unit)
        {
            return Field{
                name,
                [member, unit](ScenarioConfig &c, std::string_view v) { c.*member = parse_quantity(v, unit); },
                [member](const ScenarioConfig &c) { return format_double(c.*member); },
            };
        }

        template <class Int>
        Field integer(std::string name, Int ScenarioConfig::*member)
        {
            return Field{
                name,
                [member](ScenarioConfig &c, std::string_view v) { c.*member = parse_integer<Int>(v); },
                [member](const ScenarioConfig &c) { return std::to_string(c.*member); },
            };
        }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = [] {
                std::vector<Field> f;
                f.push_back(Field{
                    "mode",
                    [](ScenarioConfig &c, std::string_view v) { c.mode = parse_mode(v); },
                    [](const ScenarioConfig &c) { return to_string(c.mode); },
                });
                f.push_back(real("rho_c", &ScenarioConfig::rho_c, ""));
                f.push_back(real("rho_b", &ScenarioConfig::rho_b, ""));
                f.push_back(real("hurst", &ScenarioConfig::hurst, ""));
                f.push_back(real("distance_km", &ScenarioConfig::distance_km, "km"));
                f.push_back(real("duration_s", &ScenarioConfig::duration_s, "s"));
                f.push_back(real("warmup_s", &ScenarioConfig::warmup_s, "s"));
                f.push_back(integer("num_cms", &ScenarioConfig::num_cms));
                f.push_back(integer("seed", &ScenarioConfig::seed));
                f.push_back(real("cable_gbps", &ScenarioConfig::cable_gbps, "gbps"));
                f.push_back(real("data_fraction", &ScenarioConfig::data_fraction, ""));
                f.push_back(real("cm_min_km", &ScenarioConfig::cm_min_km, "km"));
                f.push_back(real("cm_max_km", &ScenarioConfig::cm_max_km, "km"));
                f.push_back(integer("request_bytes", &ScenarioConfig::request_bytes));
                f.push_back(real("min_cycle_s", &ScenarioConfig::min_cycle_s, "s"));
                f.push_back(integer("mean_packet_bytes", &ScenarioConfig::mean_packet_bytes));
                f.push_back(integer("num_subsources", &ScenarioConfig::num_subsources));
                f.push_back(real("onoff_mean_s", &ScenarioConfig::onoff_mean_s, "s"));
                f.push_back(real("onoff_peak_ratio", &ScenarioConfig::onoff_peak_ratio, ""));
                f.push_back(Field{
                    "trimodal_sizes",
                    [](ScenarioConfig &c, std::string_view v) { c.trimodal_sizes = parse_bool(v); },
                    [](const ScenarioConfig &c) { return std::string(c.trimodal_sizes ? "true" : "false"); },
                });
                f.push_back(real("fronthaul_gbps", &ScenarioConfig::fronthaul_gbps, "gbps"));
                f.push_back(real("uepi_overhead", &ScenarioConfig::uepi_overhead, ""));
                f.push_back(integer("frame_bytes", &ScenarioConfig::frame_bytes));
                f.push_back(Field{
                    "batching",
                    [](ScenarioConfig &c, std::string_view v) { c.batching = parse_batching(v); },
                    [](const ScenarioConfig &c) { return to_string(c.batching); },
                });
                f.push_back(Field{
                    "lte_traffic",
                    [](ScenarioConfig &c, std::string_view v) { c.lte_traffic = parse_lte_traffic(v); },
                    [](const ScenarioConfig &c) { return to_string(c.lte_traffic); },
                });
                f.push_back(real("code_rate", &ScenarioConfig::code_rate, ""));
                f.push_back(integer("qam_bits", &ScenarioConfig::qam_bits));
                f.push_back(integer("bits_per_component", &ScenarioConfig::bits_per_component));
                f.push_back(real("cable_symbol_us", &ScenarioConfig::cable_symbol_us, "us"));
                f.push_back(real("lte_symbol_us", &ScenarioConfig::lte_symbol_us, "us"));
                f.push_back(real("tau_c_us", &ScenarioConfig::tau_c_us, "us"));
                f.push_back(real("tau_l_us", &ScenarioConfig::tau_l_us, "us"));
                f.push_back(real("sample_interval_s", &ScenarioConfig::sample_interval_s, "s"));
                f.push_back(real("saturation_threshold", &ScenarioConfig::saturation_threshold, ""));
                return f;
            }();
            return table;
        }

        const Field &field(std::string_view key)
        {
            for (const auto &f : fields())
            {
                if (f.name == key)
                {
                    return f;
                }
            }
            throw ConfigError(std::string(key), "unknown key");
        }

        void check(bool ok, const char *key, const std::string &message)
        {
            if (!ok)
            {
                throw ConfigError(key, message);
            }
        }

        std::string read_file(const std::string &path)
        {
            std::ifstream in(path);
            if (!in)
            {
                throw ConfigError("", "cannot read '" + path + "'");
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        struct Line
        {
            int number;
            std::string_view key;
            std::string_view value;
            std::string_view section; // non-empty for "[name]" lines
        };

        std::vector<Line> split_lines(std::string_view text)
        {
            std::vector<Line> out;
            int number = 0;
            while (!text.empty())
            {
                const std::size_t nl = text.find('\n');
                std::string_view raw = text.substr(0, nl);
                text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
                ++number;
                if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
                {
                    raw = raw.substr(0, hash);
                }
                raw = trim(raw);
                if (raw.empty())
                {
                    continue;
                }
                if (raw.front() == '[')
                {
                    if (raw.back() != ']')
                    {
                        throw ConfigError("", "line " + std::to_string(number) + ": malformed section header");
                    }
                    out.push_back(Line{number, {}, {}, trim(raw.substr(1, raw.size() - 2))});
                    continue;
                }
                const std::size_t eq = raw.find('=');
                if (eq == std::string_view::npos)
                {
                    throw ConfigError("", "line " + std::to_string(number) + ": expected key = value");
                }
                out.push_back(Line{number, trim(raw.substr(0, eq)), trim(raw.substr(eq + 1)), {}});
            }
            return out;
        }

        int decimals_of(std::string_view number)
        {
            const std::size_t dot = number.find('.');
            if (dot == std::string_view::npos)
            {
                return 0;
            }
            std::size_t end = dot + 1;
            while (end < number.size() && std::isdigit(static_cast<unsigned char>(number[end])))
            {
                ++end;
            }
            return static_cast<int>(end - dot - 1);
        }

        std::vector<std::string> axis_values(const std::string &key, std::string_view text)
        {
            std::vector<std::string> values;
            if (text.find(':') != std::string_view::npos)
            {
                std::vector<std::string_view> parts;
                std::string_view rest = text;
                for (std::size_t colon; (colon = rest.find(':')) != std::string_view::npos;)
                {
                    parts.push_back(trim(rest.substr(0, colon)));
                    rest = rest.substr(colon + 1);
                }
                parts.push_back(trim(rest));
                if (parts.size() != 3)
                {
                    throw ConfigError(key, "range must be start:stop:step");
                }
                const auto [start_num, start_unit] = split_number(parts[0]);
                const auto [stop_num, stop_unit] = split_number(parts[1]);
                const auto [step_num, step_unit] = split_number(parts[2]);
                if (start_unit != stop_unit || start_unit != step_unit)
                {
                    throw ConfigError(key, "range bounds and step must share one unit");
                }
                Rational start, stop, step;
                try
                {
                    start = parse_decimal(start_num);
                    stop = parse_decimal(stop_num);
                    step = parse_decimal(step_num);
                }
                catch (const std::invalid_argument &e)
                {
                    throw ConfigError(key, e.what());
                }
                if (step <= 0 || stop < start)
                {
                    throw ConfigError(key, "range needs step > 0 and stop >= start");
                }
                const int decimals =
                    std::max({decimals_of(start_num), decimals_of(stop_num), decimals_of(step_num)});
                for (Rational v = start; v <= stop; v += step)
                {
                    values.push_back(format_decimal(v, decimals) + std::string(start_unit));
                    if (values.size() > 100000)
                    {
                        throw ConfigError(key, "range expands to too many points");
                    }
                }
                return values;
            }
            std::string_view rest = text;
            for (;;)
            {
                const std::size_t comma = rest.find(',');
                const std::string_view item = trim(rest.substr(0, comma));
                if (item.empty())
                {
                    throw ConfigError(key, "empty value in list");
                }
                values.emplace_back(item);
                if (comma == std::string_view::npos)
                {
                    break;
                }
                rest = rest.substr(comma + 1);
            }
            return values;
        }
    } // namespace

    std::string to_string(RemoteNodeMode m)
    {
        return m == RemoteNodeMode::rphy ? "rphy" : "rfft";
    }

    std::string to_string(RfftBatching b)
    {
        return b == RfftBatching::batched ? "batched" : "per_packet";
    }

    std::string to_string(LteTraffic t)
    {
        return t == LteTraffic::cbr ? "cbr" : "bursty";
    }

    RemoteNodeMode parse_mode(std::string_view text)
    {
        const std::string t = lower(trim(text));
        if (t == "rphy" || t == "r-phy" || t == "r_phy")
        {
            return RemoteNodeMode::rphy;
        }
        if (t == "rfft" || t == "r-fft" || t == "r_fft")
        {
            return RemoteNodeMode::rfft;
        }
        throw ConfigError("mode", "expected rphy or rfft, got '" + std::string(text) + "'");
    }

    RfftBatching parse_batching(std::string_view text)
    {
        const std::string t = lower(trim(text));
        if (t == "batched")
        {
            return RfftBatching::batched;
        }
        if (t == "per_packet" || t == "per-packet")
        {
            return RfftBatching::per_packet;
        }
        throw ConfigError("batching", "expected batched or per_packet, got '" + std::string(text) + "'");
    }

    LteTraffic parse_lte_traffic(std::string_view text)
    {
        const std::string t = lower(trim(text));
        if (t == "cbr")
        {
            return LteTraffic::cbr;
        }
        if (t == "bursty")
        {
            return LteTraffic::bursty;
        }
        throw ConfigError("lte_traffic", "expected cbr or bursty, got '" + std::string(text) + "'");
    }

    double parse_quantity(std::string_view text, std::string_view unit)
    {
        const auto [number, suffix] = split_number(text);
        const double value = parse_number(number);
        if (suffix.empty())
        {
            return value;
        }
        if (unit.empty())
        {
            throw std::invalid_argument("'" + std::string(text) + "' must be a plain number");
        }
        return value * unit_scale(unit, lower(suffix));
    }

    void ScenarioConfig::validate() const
    {
        auto finite = [](double v) { return std::isfinite(v); };
        check(finite(rho_c) && rho_c >= 0.0 && rho_c <= data_fraction, "rho_c",
              "must lie in [0, data_fraction] (cable data capacity)");
        check(finite(rho_b) && rho_b >= 0.0 && rho_b <= 1.0, "rho_b", "must lie in [0, 1]");
        check(hurst >= 0.5 && hurst < 1.0, "hurst", "must lie in [0.5, 1)");
        check(finite(distance_km) && distance_km > 0.0 && distance_km <= 1000.0, "distance_km",
              "must lie in (0, 1000]");
        check(finite(duration_s) && duration_s > 0.0, "duration_s", "must be positive");
        check(finite(warmup_s) && warmup_s >= 0.0, "warmup_s", "must be >= 0");
        check(end_s() <= 9.0e6, "duration_s", "run too long for the picosecond clock");
        check(num_cms >= 1 && num_cms <= 100000, "num_cms", "must lie in [1, 100000]");
        check(finite(cable_gbps) && cable_gbps > 0.0 && cable_gbps <= 1000.0, "cable_gbps", "must lie in (0, 1000]");
        check(data_fraction > 0.0 && data_fraction <= 1.0, "data_fraction", "must lie in (0, 1]");
        check(cm_min_km >= 0.0 && cm_min_km <= cm_max_km && cm_max_km <= 1000.0, "cm_min_km",
              "need 0 <= cm_min_km <= cm_max_km <= 1000");
        check(request_bytes >= 1, "request_bytes", "must be >= 1");
        check(finite(min_cycle_s) && min_cycle_s >= 0.0 && min_cycle_s <= 1.0, "min_cycle_s", "must lie in [0, 1]");
        check(mean_packet_bytes >= 1 && mean_packet_bytes <= 65535, "mean_packet_bytes", "must lie in [1, 65535]");
        check(!trimodal_sizes || mean_packet_bytes == 472, "trimodal_sizes", "the trimodal mix has a 472 B mean");
        check(num_subsources >= 1 && num_subsources <= 4096, "num_subsources", "must lie in [1, 4096]");
        check(finite(onoff_mean_s) && onoff_mean_s > 0.0, "onoff_mean_s", "must be positive");
        check(finite(onoff_peak_ratio) && onoff_peak_ratio > 1.0 && onoff_peak_ratio <= 1000.0, "onoff_peak_ratio",
              "must lie in (1, 1000]");
        check(finite(fronthaul_gbps) && fronthaul_gbps > 0.0 && fronthaul_gbps <= 10000.0, "fronthaul_gbps",
              "must lie in (0, 10000]");
        check(std::fabs(fronthaul_gbps * 1e9 - std::round(fronthaul_gbps * 1e9)) < 1e-3, "fronthaul_gbps",
              "must be a whole number of bit/s");
        check(finite(uepi_overhead) && uepi_overhead >= 0.0 && uepi_overhead <= 1.0, "uepi_overhead",
              "must lie in [0, 1]");
        check(frame_bytes >= 64 && frame_bytes <= 65535, "frame_bytes", "must lie in [64, 65535]");
        check(code_rate > 0.0 && code_rate <= 1.0, "code_rate", "must lie in (0, 1]");
        check(qam_bits >= 2 && qam_bits <= 12 && qam_bits % 2 == 0, "qam_bits", "must be one of 2, 4, ..., 12");
        check(bits_per_component >= 1 && bits_per_component <= 32, "bits_per_component", "must lie in [1, 32]");
        check(cable_symbol_us > 0.0 && cable_symbol_us <= 1e6, "cable_symbol_us", "must be positive");
        check(lte_symbol_us > 0.0 && lte_symbol_us <= 1e6, "lte_symbol_us", "must be positive");
        check(tau_c_us > 0.0, "tau_c_us", "must be positive");
        check(tau_l_us > 0.0, "tau_l_us", "must be positive");
        check(finite(sample_interval_s) && sample_interval_s > 0.0, "sample_interval_s", "must be positive");
        check(finite(saturation_threshold) && saturation_threshold > 0.0, "saturation_threshold",
              "must be positive");
    }

    void apply_setting(ScenarioConfig &cfg, std::string_view key, std::string_view value)
    {
        const Field &f = field(trim(key));
        try
        {
            f.set(cfg, trim(value));
        }
        catch (const ConfigError &)
        {
            throw;
        }
        catch (const std::exception &e)
        {
            throw ConfigError(f.name, e.what());
        }
    }

    const std::vector<std::string> &config_keys()
    {
        static const std::vector<std::string> keys = [] {
            std::vector<std::string> k;
            for (const auto &f : fields())
            {
                k.push_back(f.name);
            }
            return k;
        }();
        return keys;
    }

    ScenarioConfig parse_config_text(std::string_view text)
    {
        ScenarioConfig cfg;
        for (const Line &line : split_lines(text))
        {
            if (!line.section.empty())
            {
                throw ConfigError("[" + std::string(line.section) + "]",
                                  "sections are only valid in sweep files");
            }
            apply_setting(cfg, line.key, line.value);
        }
        cfg.validate();
        return cfg;
    }

    ScenarioConfig parse_config(const std::string &path)
    {
        return parse_config_text(read_file(path));
    }

    std::string serialize(const ScenarioConfig &cfg)
    {
        std::string out;
        for (const auto &f : fields())
        {
            out += f.name;
            out += " = ";
            out += f.get(cfg);
            out += '\n';
        }
        return out;
    }

    SweepSpec parse_sweep_text(std::string_view text)
    {
        SweepSpec spec;
        bool in_sweep = false;
        for (const Line &line : split_lines(text))
        {
            if (!line.section.empty())
            {
                if (line.section != "sweep")
                {
                    throw ConfigError("[" + std::string(line.section) + "]", "unknown section");
                }
                in_sweep = true;
                continue;
            }
            if (!in_sweep)
            {
                apply_setting(spec.base, line.key, line.value);
                continue;
            }
            const std::string key(line.key);
            field(key);
            for (const auto &axis : spec.axes)
            {
                if (axis.key == key)
                {
                    throw ConfigError(key, "axis listed twice");
                }
            }
            spec.axes.push_back(SweepAxis{key, axis_values(key, line.value)});
        }
        spec.base.validate();
        return spec;
    }

    SweepSpec parse_sweep(const std::string &path)
    {
        return parse_sweep_text(read_file(path));
    }

    std::vector<ScenarioConfig> expand(const SweepSpec &spec)
    {
        std::vector<ScenarioConfig> out{spec.base};
        for (const auto &axis : spec.axes)
        {
            std::vector<ScenarioConfig> next;
            next.reserve(out.size() * axis.values.size());
            for (const auto &cfg : out)
            {
                for (const auto &value : axis.values)
                {
                    ScenarioConfig c = cfg;
                    apply_setting(c, axis.key, value);
                    next.push_back(std::move(c));
                }
            }
            out = std::move(next);
        }
        for (const auto &c : out)
        {
            c.validate();
        }
        return out;
    }
} // namespace rfft
