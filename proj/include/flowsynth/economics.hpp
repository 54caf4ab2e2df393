#pragma once

#include <array>
#include <string>

#include "flowsynth/stream.hpp"

namespace flowsynth {

// Cost parameters of the net-present-value objective. All money in k€,
// prices in k€/kmol. The 8000 hr/a on-stream time and the 10 a horizon
// factor are fixed constants of the objective, not configuration.
struct EconomicConfig {
    double invest_distillation = 10000.0; // per column
    double invest_reactor = 10000.0;
    double invest_mixer = 1000.0;
    std::array<double, kNumComponents> price{1.0, 1.0, 1.0, 1.0};

    static constexpr double kHoursPerYear = 8000.0;
    static constexpr double kHorizonYears = 10.0;

    static EconomicConfig case1(); // all prices 1
    static EconomicConfig case2(); // A, B disposal at -0.125; C, D worth 2

    // Reads {"I_D","I_R","I_M","p_A","p_B","p_C","p_D"} from a JSON document.
    static EconomicConfig from_json_text(const std::string& text);
    std::string to_json_text() const;

    double investment(UnitKind kind) const {
        switch (kind) {
        case UnitKind::R: return invest_reactor;
        case UnitKind::M: return invest_mixer;
        default: return invest_distillation;
        }
    }
};

// Yearly cash flow of an open stream leaving the process, k€/a. A stream
// with exactly one positive component flow sells at that component's price;
// a mixed stream only ever incurs disposal cost for negatively priced
// components; a zero-total stream is worth nothing.
double stream_cash_flow(const Stream& s, const EconomicConfig& econ);

} // namespace flowsynth
