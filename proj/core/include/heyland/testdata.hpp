#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "heyland/geom.hpp"

namespace heyland {

/// Angle entered in degrees; the radian value is computed once on construction.
class Angle {
public:
    constexpr Angle() = default;
    static Angle degrees(double deg);

    double deg() const noexcept { return deg_; }
    double rad() const noexcept { return rad_; }

private:
    double deg_ = 0.0;
    double rad_ = 0.0;
};

/// No-load and blocked-rotor measurements plus ratings.
///
/// Currents are line currents and `v_rated` is a line voltage. Angles are
/// lagging power-factor angles. Use `validate()` (or `parse_test_data`) before
/// handing an instance to the construction.
struct MachineTestData {
    double i0 = 0.0;      ///< no-load current, A
    Angle phi0;           ///< no-load phase angle
    double isc = 0.0;     ///< blocked-rotor current at v_sc, A
    Angle phi_sc;         ///< blocked-rotor phase angle
    double v_rated = 0.0; ///< V (line)
    double v_sc = 0.0;    ///< blocked-rotor test voltage, V (line)
    double p_rated_kw = 0.0;
    int phases = 3;
    double rotor_cu_fraction = 0.5;
    std::optional<double> f_hz;
    std::optional<int> poles;

    double p_rated_w() const noexcept { return p_rated_kw * 1000.0; }

    friend bool operator==(const MachineTestData& a, const MachineTestData& b);
};

/// Throws InvariantViolation naming the first offending key.
void validate(const MachineTestData& data);

/// Parses the flat `key = value` document; throws MissingKey, MalformedValue,
/// UnknownKey or InvariantViolation.
MachineTestData parse_test_data(std::string_view document);

/// Inverse of parse_test_data; parse(serialize(d)) == d for any valid d.
std::string serialize_test_data(const MachineTestData& data);

/// Horizontal = reactive (m sin a), vertical = active (m cos a).
Point2 phasor_to_point(double magnitude, Angle angle);

struct DiagramAnchors {
    Point2 o_prime;            ///< no-load point
    Point2 a;                  ///< blocked-rotor point referred to rated voltage
    double isc_referred = 0.0; ///< A
};

/// Scales the blocked-rotor current linearly to rated voltage and maps both
/// phasors into the plane. Throws DegenerateConstruction if A does not lie to
/// the right of O'.
DiagramAnchors refer_to_rated(const MachineTestData& data);

} // namespace heyland
