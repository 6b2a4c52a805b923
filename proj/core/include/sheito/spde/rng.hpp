#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace sheito {

// Philox4x32-10 counter-based generator: every (key, counter) pair maps to four
// independent 32-bit words, so draws can be addressed directly instead of streamed.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit Philox4x32(std::uint64_t seed)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
    {
    }
    explicit Philox4x32(Key key) : key_(key) {}

    Counter operator()(Counter ctr) const;
    static constexpr const char* name() { return "philox4x32-10"; }

    // Two standard normals (Box-Muller) from the block at ctr.
    std::pair<double, double> normals(Counter ctr) const;

private:
    Key key_;
};

} // namespace sheito
