#include "flowsynth/economics.hpp"

#include <algorithm>

#include <json.hpp>

namespace flowsynth {

EconomicConfig EconomicConfig::case1() {
    EconomicConfig e;
    e.price = {1.0, 1.0, 1.0, 1.0};
    return e;
}

EconomicConfig EconomicConfig::case2() {
    EconomicConfig e;
    e.price = {-0.125, -0.125, 2.0, 2.0};
    return e;
}

EconomicConfig EconomicConfig::from_json_text(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    EconomicConfig e;
    e.invest_distillation = j.at("I_D").get<double>();
    e.invest_reactor = j.at("I_R").get<double>();
    e.invest_mixer = j.at("I_M").get<double>();
    e.price[0] = j.at("p_A").get<double>();
    e.price[1] = j.at("p_B").get<double>();
    e.price[2] = j.at("p_C").get<double>();
    e.price[3] = j.at("p_D").get<double>();
    return e;
}

std::string EconomicConfig::to_json_text() const {
    nlohmann::json j;
    j["I_D"] = invest_distillation;
    j["I_R"] = invest_reactor;
    j["I_M"] = invest_mixer;
    j["p_A"] = price[0];
    j["p_B"] = price[1];
    j["p_C"] = price[2];
    j["p_D"] = price[3];
    return j.dump(2);
}

double stream_cash_flow(const Stream& s, const EconomicConfig& econ) {
    int positive = 0;
    int pure_component = -1;
    for (int i = 0; i < kNumComponents; ++i) {
        if (s.n[i] > 0.0) {
            ++positive;
            pure_component = i;
        }
    }
    if (positive == 0) return 0.0;
    if (positive == 1) {
        return s.n[pure_component] * econ.price[pure_component] * EconomicConfig::kHoursPerYear;
    }
    double cash = 0.0;
    for (int i = 0; i < kNumComponents; ++i) {
        cash += s.n[i] * std::min(econ.price[i], 0.0) * EconomicConfig::kHoursPerYear;
    }
    return cash;
}

} // namespace flowsynth
