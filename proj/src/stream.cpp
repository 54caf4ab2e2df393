#include "flowsynth/stream.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace flowsynth {

const char* unit_kind_name(UnitKind kind) {
    switch (kind) {
    case UnitKind::D1: return "D1";
    case UnitKind::D2: return "D2";
    case UnitKind::D3: return "D3";
    case UnitKind::R: return "R";
    case UnitKind::M: return "M";
    }
    return "?";
}

SplitResult split_distillation(const Stream& feed, UnitKind cut) {
    assert(cut == UnitKind::D1 || cut == UnitKind::D2 || cut == UnitKind::D3);
    // D1 -> 1 light component, D2 -> 2, D3 -> 3.
    const int n_light = static_cast<int>(cut) + 1;
    SplitResult r;
    for (int i = 0; i < kNumComponents; ++i) {
        if (i < n_light) {
            r.top.n[i] = feed.n[i];
        } else {
            r.bottom.n[i] = feed.n[i];
        }
    }
    return r;
}

Stream mix(const Stream& s1, const Stream& s2) {
    Stream out;
    for (int i = 0; i < kNumComponents; ++i) {
        out.n[i] = s1.n[i] + s2.n[i];
    }
    return out;
}

double reaction_extent(const Stream& feed) {
    const double total = feed.total();
    const double cap = std::min(feed.n[0], feed.n[1]);
    if (total <= 0.0 || cap <= 0.0) return 0.0;

    const double inv_tot2 = 1.0 / (total * total);
    const auto residual = [&](double xi) {
        return 5.0 * (feed.n[0] - xi) * (feed.n[1] - xi) * inv_tot2 - xi;
    };

    // residual(0) >= 0 and residual(cap) = -cap < 0; the residual is strictly
    // decreasing on [0, cap], so bisection cannot fail.
    double lo = 0.0;
    double hi = cap;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double reaction_extent_closed_form(const Stream& feed) {
    const double total = feed.total();
    const double cap = std::min(feed.n[0], feed.n[1]);
    if (total <= 0.0 || cap <= 0.0) return 0.0;

    // 5 (nA - xi)(nB - xi) = xi * total^2 rearranged into
    // xi^2 - (nA + nB + total^2/5) xi + nA nB = 0; the smaller root is the
    // one inside [0, cap].
    const double p = feed.n[0] + feed.n[1] + total * total / 5.0;
    const double disc = p * p - 4.0 * feed.n[0] * feed.n[1];
    const double xi = 0.5 * (p - std::sqrt(disc));
    return std::clamp(xi, 0.0, cap);
}

Stream react_cstr(const Stream& feed) {
    const double xi = reaction_extent(feed);
    Stream out = feed;
    out.n[0] -= xi;
    out.n[1] -= xi;
    out.n[2] += xi;
    out.n[3] += xi;
    out.n[0] = std::max(out.n[0], 0.0);
    out.n[1] = std::max(out.n[1], 0.0);
    return out;
}

} // namespace flowsynth
