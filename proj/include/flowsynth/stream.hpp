#pragma once

#include <array>
#include <cstdint>

namespace flowsynth {

inline constexpr int kNumComponents = 4; // A, B, C, D in boiling order

// Process units. D1/D2/D3 are sharp distillation splits at fixed cut
// positions in the boiling order ABCD (A|BCD, AB|CD, ABC|D); the cut is
// part of the unit kind and never parameterized.
enum class UnitKind : std::uint8_t { D1, D2, D3, R, M };

const char* unit_kind_name(UnitKind kind);

// One material stream: component molar flows in kmol/hr.
struct Stream {
    std::array<double, kNumComponents> n{0.0, 0.0, 0.0, 0.0};

    double total() const { return n[0] + n[1] + n[2] + n[3]; }

    // Mole fractions; a zero-total stream reports all fractions as zero.
    std::array<double, kNumComponents> mole_fractions() const {
        const double t = total();
        if (t <= 0.0) return {0.0, 0.0, 0.0, 0.0};
        return {n[0] / t, n[1] / t, n[2] / t, n[3] / t};
    }
};

struct SplitResult {
    Stream top;
    Stream bottom;
};

// Sharp distillation split: components lighter than the cut go to the top,
// the rest to the bottom, flows copied unchanged. `cut` must be D1..D3.
SplitResult split_distillation(const Stream& feed, UnitKind cut);

// Component-wise sum of two streams.
Stream mix(const Stream& s1, const Stream& s2);

// Steady-state CSTR extent for A + B -> C + D with rate
// 5 kmol/hr * x_A_out * x_B_out. Unique root of
// g(xi) = 5 (n_A - xi)(n_B - xi) / n_tot^2 - xi on [0, min(n_A, n_B)],
// found by bisection to 1e-12 absolute tolerance.
double reaction_extent(const Stream& feed);

// Closed-form root of the same quadratic, kept as a cross-check for the
// bisection path.
double reaction_extent_closed_form(const Stream& feed);

// Reactor outlet: applies the extent with 1:1:1:1 stoichiometry.
Stream react_cstr(const Stream& feed);

} // namespace flowsynth
