// Copyright 2026 The magblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magblock/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

struct BadValue {
    std::string message;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
        throw BadValue{"cannot parse '" + std::string(text) + "' as a number"};
    }
    return value;
}

long long parse_integer(std::string_view text) {
    text = trim(text);
    long long value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        throw BadValue{"cannot parse '" + std::string(text) + "' as an integer"};
    }
    return value;
}

// "<parameter> <start> <stop> <points>"
AxisSpec parse_axis(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string name, start, stop, points, extra;
    if (!(in >> name >> start >> stop >> points) || (in >> extra)) {
        throw BadValue{"expected '<parameter> <start> <stop> <points>'"};
    }
    const auto parameter = parse_parameter(name);
    if (!parameter) throw BadValue{"unknown sweep parameter '" + name + "'"};
    const long long n = parse_integer(points);
    if (n < 1) throw BadValue{"axis needs at least one point"};
    return {*parameter, parse_real(start), parse_real(stop), static_cast<std::size_t>(n)};
}

void set_axis(RunConfig& c, std::size_t slot, std::string_view value) {
    const AxisSpec axis = parse_axis(value);
    if (c.axes.size() <= slot) c.axes.resize(slot + 1);
    c.axes[slot] = axis;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
    static const std::vector<std::pair<std::string, Setter>> table = {
        {"mode", [](RunConfig& c, std::string_view v) {
             const auto mode = parse_mode(trim(v));
             if (!mode) throw BadValue{"unknown mode '" + std::string(v) + "'"};
             c.mode = *mode;
         }},
        {"delta_m", [](RunConfig& c, std::string_view v) { c.params.delta_m = parse_real(v); }},
        {"delta_q", [](RunConfig& c, std::string_view v) { c.params.delta_q = parse_real(v); }},
        {"chi_qm", [](RunConfig& c, std::string_view v) { c.params.chi_qm = parse_real(v); }},
        {"omega_s", [](RunConfig& c, std::string_view v) { c.params.omega_s = parse_real(v); }},
        {"omega_d", [](RunConfig& c, std::string_view v) { c.params.omega_d = parse_real(v); }},
        {"kappa_m", [](RunConfig& c, std::string_view v) { c.params.kappa_m = parse_real(v); }},
        {"kappa_q", [](RunConfig& c, std::string_view v) { c.params.kappa_q = parse_real(v); }},
        {"kappa_1", [](RunConfig& c, std::string_view v) { c.params.kappa_1 = parse_real(v); }},
        {"kappa_phi", [](RunConfig& c, std::string_view v) { c.params.kappa_phi = parse_real(v); }},
        {"n_th", [](RunConfig& c, std::string_view v) { c.params.n_th = parse_real(v); }},
        {"m_th", [](RunConfig& c, std::string_view v) { c.params.m_th = parse_real(v); }},
        {"n_fock", [](RunConfig& c, std::string_view v) {
             const long long n = parse_integer(v);
             if (n < 2) throw BadValue{"n_fock must be >= 2"};
             c.params.n_fock = static_cast<std::size_t>(n);
         }},
        {"gamma_ref_hz", [](RunConfig& c, std::string_view v) { c.params.gamma_ref_hz = parse_real(v); }},
        {"omega_m", [](RunConfig& c, std::string_view v) { c.omega_m = parse_real(v); }},
        {"omega_q", [](RunConfig& c, std::string_view v) { c.omega_q = parse_real(v); }},
        {"axis1", [](RunConfig& c, std::string_view v) { set_axis(c, 0, v); }},
        {"axis2", [](RunConfig& c, std::string_view v) { set_axis(c, 1, v); }},
        {"channel", [](RunConfig& c, std::string_view v) {
             v = trim(v);
             if (v == "m_th") c.channel = ThermalChannel::kMagnon;
             else if (v == "n_th") c.channel = ThermalChannel::kQubit;
             else throw BadValue{"channel must be m_th or n_th"};
         }},
        {"threshold_hi", [](RunConfig& c, std::string_view v) { c.threshold_hi = parse_real(v); }},
        {"output", [](RunConfig& c, std::string_view v) { c.output_path = std::string(trim(v)); }},
        {"format", [](RunConfig& c, std::string_view v) {
             v = trim(v);
             if (v == "csv") c.format = OutputFormat::kCsv;
             else if (v == "json") c.format = OutputFormat::kJson;
             else throw BadValue{"format must be csv or json"};
         }},
        {"workers", [](RunConfig& c, std::string_view v) {
             const long long n = parse_integer(v);
             if (n < 0) throw BadValue{"workers must be >= 0"};
             c.workers = static_cast<int>(n);
         }},
    };
    return table;
}

const Setter* find_setter(std::string_view key) {
    for (const auto& [name, setter] : setters())
        if (name == key) return &setter;
    return nullptr;
}

class Builder {
public:
    void apply(std::string_view key, std::string_view value, int line) {
        const Setter* setter = find_setter(key);
        if (!setter) throw ConfigError(std::string(key), line, "unknown key");
        try {
            (*setter)(config_, value);
        } catch (const BadValue& bad) {
            throw ConfigError(std::string(key), line, bad.message);
        }
        origin_[std::string(key)] = line;
    }

    RunConfig finish() {
        if (!origin_.contains("mode")) throw ConfigError("mode", 0, "mode is required");
        try {
            config_.params.validate();
        } catch (const InvalidArgument& e) {
            throw ConfigError(e.field(), line_of(e.field()), e.what());
        }
        if (config_.axes.size() == 2 && !origin_.contains("axis1")) {
            throw ConfigError("axis2", line_of("axis2"), "axis2 given without axis1");
        }
        for (std::size_t i = 0; i < config_.axes.size(); ++i) {
            const std::string key = "axis" + std::to_string(i + 1);
            try {
                config_.axes[i].validate();
            } catch (const InvalidArgument& e) {
                throw ConfigError(key, line_of(key), e.what());
            }
        }
        if (config_.axes.size() == 2 && config_.axes[0].parameter == config_.axes[1].parameter) {
            throw ConfigError("axis2", line_of("axis2"), "both axes sweep the same parameter");
        }
        require_positive("omega_m", config_.omega_m);
        require_positive("omega_q", config_.omega_q);
        if (config_.threshold_hi) require_positive("threshold_hi", *config_.threshold_hi);

        switch (config_.mode) {
            case RunMode::kSweep:
                if (config_.axes.empty()) throw ConfigError("axis1", 0, "sweep mode requires at least one axis");
                break;
            case RunMode::kThermalThreshold:
                if (!config_.channel) throw ConfigError("channel", 0, "thermal-threshold mode requires a channel");
                [[fallthrough]];
            case RunMode::kSteady:
            case RunMode::kResonance:
            case RunMode::kCheck:
                if (!config_.axes.empty()) {
                    throw ConfigError("axis1", line_of("axis1"),
                                      std::string(mode_name(config_.mode)) + " mode takes no axes");
                }
                break;
        }
        return config_;
    }

private:
    int line_of(const std::string& key) const {
        const auto it = origin_.find(key);
        return it == origin_.end() ? 0 : it->second;
    }

    void require_positive(const std::string& key, double value) const {
        if (!(value > 0.0)) throw ConfigError(key, line_of(key), "must be > 0");
    }

    RunConfig config_;
    std::map<std::string, int> origin_;
};

}  // namespace

std::string_view mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::kSteady: return "steady";
        case RunMode::kSweep: return "sweep";
        case RunMode::kResonance: return "resonance";
        case RunMode::kThermalThreshold: return "thermal-threshold";
        case RunMode::kCheck: return "check";
    }
    return "unknown";
}

std::optional<RunMode> parse_mode(std::string_view name) {
    for (RunMode mode : {RunMode::kSteady, RunMode::kSweep, RunMode::kResonance,
                         RunMode::kThermalThreshold, RunMode::kCheck}) {
        if (mode_name(mode) == name) return mode;
    }
    return std::nullopt;
}

OutputFormat RunConfig::effective_format() const {
    if (format) return *format;
    return (mode == RunMode::kSweep || mode == RunMode::kResonance) ? OutputFormat::kCsv
                                                                     : OutputFormat::kJson;
}

double RunConfig::effective_threshold_hi() const {
    if (threshold_hi) return *threshold_hi;
    return channel == ThermalChannel::kQubit ? 30.0 : 0.1;
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    Builder builder;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_number;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("", line_number, "expected 'key = value'");
        builder.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_number);
        if (eol == text.size()) break;
    }
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError(item, 0, "override must be key=value");
        const std::string_view view(item);
        builder.apply(trim(view.substr(0, eq)), trim(view.substr(eq + 1)), 0);
    }
    return builder.finish();
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    const auto put = [&out](std::string_view key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    const auto& p = c.params;
    put("mode", std::string(mode_name(c.mode)));
    put("delta_m", format_real(p.delta_m));
    put("delta_q", format_real(p.delta_q));
    put("chi_qm", format_real(p.chi_qm));
    put("omega_s", format_real(p.omega_s));
    put("omega_d", format_real(p.omega_d));
    put("kappa_m", format_real(p.kappa_m));
    put("kappa_q", format_real(p.kappa_q));
    put("kappa_1", format_real(p.kappa_1));
    if (p.kappa_phi) put("kappa_phi", format_real(*p.kappa_phi));
    put("n_th", format_real(p.n_th));
    put("m_th", format_real(p.m_th));
    put("n_fock", std::to_string(p.n_fock));
    put("gamma_ref_hz", format_real(p.gamma_ref_hz));
    put("omega_m", format_real(c.omega_m));
    put("omega_q", format_real(c.omega_q));
    for (std::size_t i = 0; i < c.axes.size(); ++i) {
        const auto& a = c.axes[i];
        put("axis" + std::to_string(i + 1), std::string(parameter_name(a.parameter)) + " " +
                                                format_real(a.start) + " " + format_real(a.stop) + " " +
                                                std::to_string(a.points));
    }
    if (c.channel) put("channel", std::string(channel_name(*c.channel)));
    if (c.threshold_hi) put("threshold_hi", format_real(*c.threshold_hi));
    if (!c.output_path.empty()) put("output", c.output_path);
    if (c.format) put("format", *c.format == OutputFormat::kCsv ? "csv" : "json");
    put("workers", std::to_string(c.workers));
    return out.str();
}

}  // namespace magblock
