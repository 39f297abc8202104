#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hungerlab {

/// Failure categories. The CLI maps these onto exit codes.
enum class Errc {
    malformed_token,
    row_sum,
    negative_entry,
    mode_mismatch,
    invalid_argument,
    non_unique_stationary,
    float_mode_unsupported,
    v_is_absorbing,
    no_absorbing_states,
    i_is_absorbing,
    u_equals_v,
    has_absorbing,
    not_irreducible,
    y_not_on_z,
    zero_steps,
    stabilized,
    cap_exceeded,
    orbit_memory_exceeded,
    invariant_violated,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::malformed_token: return "MalformedToken";
    case Errc::row_sum: return "RowSumError";
    case Errc::negative_entry: return "NegativeEntry";
    case Errc::mode_mismatch: return "ModeMismatch";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::non_unique_stationary: return "NonUniqueStationary";
    case Errc::float_mode_unsupported: return "FloatModeUnsupported";
    case Errc::v_is_absorbing: return "VIsAbsorbing";
    case Errc::no_absorbing_states: return "NoAbsorbingStates";
    case Errc::i_is_absorbing: return "IIsAbsorbing";
    case Errc::u_equals_v: return "UEqualsV";
    case Errc::has_absorbing: return "HasAbsorbing";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::y_not_on_z: return "YNotOnZ";
    case Errc::zero_steps: return "ZeroSteps";
    case Errc::stabilized: return "Stabilized";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::orbit_memory_exceeded: return "OrbitMemoryExceeded";
    case Errc::invariant_violated: return "InvariantViolated";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline constexpr std::uint64_t default_cap = 10'000'000;

[[noreturn]] inline void throw_cap_exceeded(std::uint64_t cap) {
    throw Error(Errc::cap_exceeded, "step cap " + std::to_string(cap) + " reached");
}

}  // namespace hungerlab
