#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace flowsynth {

// Seeded random source. Draws are produced from the raw mt19937_64 output
// so results do not depend on libstdc++'s distribution internals; every
// consumer of randomness in the project goes through this class.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{seed, stream};
        gen_.seed(seq);
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), n >= 1, without modulo bias.
    int uniform_int(int n) {
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return static_cast<int>(r % un);
    }

    std::string serialize() const {
        std::ostringstream oss;
        oss << gen_;
        return oss.str();
    }

    void deserialize(const std::string& text) {
        std::istringstream iss(text);
        iss >> gen_;
    }

    bool operator==(const Rng& other) const { return gen_ == other.gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace flowsynth
