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

#include "magblock/app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magblock/errors.hpp"
#include "magblock/observables.hpp"
#include "magblock/resonance.hpp"
#include "magblock/self_check.hpp"
#include "magblock/steady_state.hpp"
#include "magblock/sweep.hpp"

namespace magblock {
namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& value) {
    return value ? Json(*value) : Json(nullptr);
}

// Ordinary frequency of a value given in units of gamma.
double to_hz(const RunConfig& c, double omega) {
    return omega * c.params.gamma_ref_hz / physical::kTwoPi;
}

void emit(const RunConfig& config, std::ostream& out, const std::string& payload) {
    if (config.output_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + config.output_path + " for writing");
    file << payload;
    file.close();
    if (!file) throw IoError("failed writing " + config.output_path);
}

std::string steady(const RunConfig& c) {
    const SteadyStateResult r = solve_steady_state(c.params);
    const auto quantity = r.g2_zero ? TruncationQuantity::kG2 : TruncationQuantity::kMeanMagnon;
    const TruncationReport convergence = truncation_converged(c.params, quantity, 1e-4);

    if (c.effective_format() == OutputFormat::kCsv) {
        std::string line = (r.g2_zero ? format_real(*r.g2_zero) : std::string());
        for (double p : r.p_n) line += "," + format_real(p);
        std::string header = "g2";
        for (std::size_t n = 0; n < r.p_n.size(); ++n) header += ",p" + std::to_string(n);
        header += ",mean_magnon,qubit_excitation,residual,n_fock,converged\n";
        return header + line + "," + format_real(r.mean_magnon) + "," + format_real(r.qubit_excitation) +
               "," + format_real(r.residual_norm) + "," + std::to_string(c.params.n_fock) + "," +
               (convergence.converged ? "true" : "false") + "\n";
    }
    Json j;
    j["g2"] = optional_number(r.g2_zero);
    j["p_n"] = r.p_n;
    j["mean_magnon"] = r.mean_magnon;
    j["qubit_excitation"] = r.qubit_excitation;
    j["residual"] = r.residual_norm;
    j["n_fock"] = c.params.n_fock;
    j["converged"] = convergence.converged;
    return j.dump() + "\n";
}

std::string sweep(const RunConfig& c) {
    const SweepResult result = run_sweep(c.params, c.axes, SweepOptions{c.workers});
    std::ostringstream out;
    if (c.effective_format() == OutputFormat::kCsv) {
        write_csv(result, out);
        return out.str();
    }
    Json records = Json::array();
    for (const auto& r : result.records) {
        Json j;
        j[std::string(parameter_name(c.axes[0].parameter))] = r.axis1;
        if (r.axis2) j[std::string(parameter_name(c.axes[1].parameter))] = *r.axis2;
        j["g2"] = optional_number(r.g2);
        j["log10_g2"] = optional_number(r.log10_g2);
        j["p_n"] = r.p_n;
        j["mean_magnon"] = r.mean_magnon;
        j["qubit_excitation"] = r.qubit_excitation;
        j["residual"] = r.residual_norm;
        records.push_back(std::move(j));
    }
    return records.dump() + "\n";
}

std::string resonance(const RunConfig& c) {
    const ResonanceSet set = resonance_set(c.params.delta_q, c.params.chi_qm, c.params.omega_s);
    const auto order_name = [](ResonanceOrder o) {
        return o == ResonanceOrder::kSingleMagnon ? "single_magnon" : "two_magnon";
    };
    if (c.effective_format() == OutputFormat::kJson) {
        Json list = Json::array();
        for (const auto& r : set.all()) {
            Json j;
            j["order"] = order_name(r.order);
            j["label"] = r.label;
            j["delta_m"] = r.detuning;
            list.push_back(std::move(j));
        }
        return list.dump() + "\n";
    }
    std::string out = "order,label,delta_m\n";
    for (const auto& r : set.all()) {
        out += std::string(order_name(r.order)) + "," + r.label + "," + format_real(r.detuning) + "\n";
    }
    return out;
}

std::string threshold(const RunConfig& c) {
    const ThermalChannel channel = *c.channel;
    const ThresholdResult r = thermal_threshold(c.params, channel, c.effective_threshold_hi());
    const double freq = to_hz(c, channel == ThermalChannel::kMagnon ? c.omega_m : c.omega_q);
    const double temperature = temperature_for_occupation(freq, r.crossing);
    if (c.effective_format() == OutputFormat::kCsv) {
        return "channel,crossing,temperature_k,frequency_hz,iterations,g2_at_zero,g2_at_hi\n" +
               std::string(channel_name(channel)) + "," + format_real(r.crossing) + "," +
               format_real(temperature) + "," + format_real(freq) + "," + std::to_string(r.iterations) + "," +
               format_real(r.g2_at_zero) + "," + format_real(r.g2_at_hi) + "\n";
    }
    Json j;
    j["channel"] = channel_name(channel);
    j["crossing"] = r.crossing;
    j["temperature_k"] = temperature;
    j["frequency_hz"] = freq;
    j["iterations"] = r.iterations;
    j["g2_at_zero"] = r.g2_at_zero;
    j["g2_at_hi"] = r.g2_at_hi;
    return j.dump() + "\n";
}

std::string check(const RunConfig& c, bool& all_passed) {
    const auto outcomes = run_self_checks(c.params);
    all_passed = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
    if (c.effective_format() == OutputFormat::kJson) {
        Json list = Json::array();
        for (const auto& o : outcomes) {
            Json j;
            j["name"] = o.name;
            j["passed"] = o.passed;
            j["detail"] = o.detail;
            list.push_back(std::move(j));
        }
        return list.dump() + "\n";
    }
    std::string out = "name,passed,detail\n";
    for (const auto& o : outcomes) out += o.name + "," + (o.passed ? "true" : "false") + "," + o.detail + "\n";
    return out;
}

}  // namespace

int report_error(const std::exception& error, std::ostream& err) {
    Json j;
    if (const auto* e = dynamic_cast<const Error*>(&error)) {
        j["error"] = error_name(e->code());
        j["exit_code"] = static_cast<int>(e->code());
    } else {
        j["error"] = "internal";
        j["exit_code"] = 1;
    }
    j["message"] = error.what();
    err << j.dump() << '\n';
    return j["exit_code"].get<int>();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.mode) {
            case RunMode::kSteady: emit(config, out, steady(config)); break;
            case RunMode::kSweep: emit(config, out, sweep(config)); break;
            case RunMode::kResonance: emit(config, out, resonance(config)); break;
            case RunMode::kThermalThreshold: emit(config, out, threshold(config)); break;
            case RunMode::kCheck: {
                bool passed = false;
                emit(config, out, check(config, passed));
                if (!passed) throw Error(ErrorCode::kCheckFailed, "one or more self-checks failed");
                break;
            }
        }
        return 0;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

}  // namespace magblock
