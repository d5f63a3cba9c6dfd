#include "heyland/testdata.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "heyland/errors.hpp"
#include "heyland/format.hpp"

namespace heyland {
namespace {

constexpr std::string_view kKnownKeys[] = {
    "I0",    "phi0_deg", "Isc",           "phi_sc_deg", "V_rated", "V_sc",
    "P_rated_kw", "phases", "rotor_cu_fraction", "f_hz", "poles",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key) {
    for (auto k : kKnownKeys) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

double to_double(const std::string& key, std::string_view text) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw MalformedValue(key, "expected a decimal number, got '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw MalformedValue(key, "value must be finite");
    }
    return value;
}

int to_int(const std::string& key, std::string_view text) {
    int value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw MalformedValue(key, "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

void require(bool ok, const char* key, const char* what) {
    if (!ok) {
        throw InvariantViolation(key, what);
    }
}

} // namespace

Angle Angle::degrees(double deg) {
    Angle a;
    a.deg_ = deg;
    a.rad_ = deg * (std::numbers::pi / 180.0);
    return a;
}

bool operator==(const MachineTestData& a, const MachineTestData& b) {
    return a.i0 == b.i0 && a.phi0.deg() == b.phi0.deg() && a.isc == b.isc
           && a.phi_sc.deg() == b.phi_sc.deg() && a.v_rated == b.v_rated && a.v_sc == b.v_sc
           && a.p_rated_kw == b.p_rated_kw && a.phases == b.phases
           && a.rotor_cu_fraction == b.rotor_cu_fraction && a.f_hz == b.f_hz
           && a.poles == b.poles;
}

void validate(const MachineTestData& d) {
    require(d.i0 > 0.0, "I0", "no-load current must be positive");
    require(d.isc > 0.0, "Isc", "blocked-rotor current must be positive");
    require(d.v_rated > 0.0, "V_rated", "rated voltage must be positive");
    require(d.v_sc > 0.0, "V_sc", "blocked-rotor voltage must be positive");
    require(d.v_sc <= d.v_rated, "V_sc", "blocked-rotor voltage must not exceed rated voltage");
    require(d.p_rated_kw > 0.0, "P_rated_kw", "rated power must be positive");
    require(d.phi_sc.deg() > 0.0, "phi_sc_deg", "blocked-rotor angle must be positive");
    require(d.phi0.deg() < 90.0, "phi0_deg", "no-load angle must be below 90 degrees");
    require(d.phi_sc.deg() < d.phi0.deg(), "phi_sc_deg",
            "blocked-rotor angle must be strictly below the no-load angle");
    require(d.rotor_cu_fraction >= 0.0 && d.rotor_cu_fraction <= 1.0, "rotor_cu_fraction",
            "must lie in [0, 1]");
    require(d.phases == 1 || d.phases == 3, "phases", "must be 1 or 3");
    if (d.f_hz) {
        require(*d.f_hz > 0.0, "f_hz", "frequency must be positive");
    }
    if (d.poles) {
        require(*d.poles > 0 && *d.poles % 2 == 0, "poles", "must be a positive even integer");
    }
}

MachineTestData parse_test_data(std::string_view document) {
    std::map<std::string, std::string, std::less<>> entries;

    std::size_t pos = 0;
    while (pos <= document.size()) {
        auto eol = document.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = document.size();
        }
        std::string_view line = document.substr(pos, eol - pos);
        pos = eol + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw MalformedValue(std::string(line), "expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (!is_known(key)) {
            throw UnknownKey(key);
        }
        if (value.empty()) {
            throw MalformedValue(key, "empty value");
        }
        if (!entries.emplace(key, std::string(value)).second) {
            throw MalformedValue(key, "duplicate key");
        }
    }

    auto mandatory = [&](const char* key) {
        auto it = entries.find(key);
        if (it == entries.end()) {
            throw MissingKey(key);
        }
        return to_double(key, it->second);
    };
    auto optional_entry = [&](const char* key) -> const std::string* {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    MachineTestData d;
    d.i0 = mandatory("I0");
    d.phi0 = Angle::degrees(mandatory("phi0_deg"));
    d.isc = mandatory("Isc");
    d.phi_sc = Angle::degrees(mandatory("phi_sc_deg"));
    d.v_rated = mandatory("V_rated");
    d.v_sc = mandatory("V_sc");
    d.p_rated_kw = mandatory("P_rated_kw");
    if (auto* v = optional_entry("phases")) {
        d.phases = to_int("phases", *v);
    }
    if (auto* v = optional_entry("rotor_cu_fraction")) {
        d.rotor_cu_fraction = to_double("rotor_cu_fraction", *v);
    }
    if (auto* v = optional_entry("f_hz")) {
        d.f_hz = to_double("f_hz", *v);
    }
    if (auto* v = optional_entry("poles")) {
        d.poles = to_int("poles", *v);
    }

    validate(d);
    return d;
}

std::string serialize_test_data(const MachineTestData& d) {
    std::ostringstream out;
    auto put = [&](std::string_view key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    put("I0", fmt::shortest(d.i0));
    put("phi0_deg", fmt::shortest(d.phi0.deg()));
    put("Isc", fmt::shortest(d.isc));
    put("phi_sc_deg", fmt::shortest(d.phi_sc.deg()));
    put("V_rated", fmt::shortest(d.v_rated));
    put("V_sc", fmt::shortest(d.v_sc));
    put("P_rated_kw", fmt::shortest(d.p_rated_kw));
    put("phases", std::to_string(d.phases));
    put("rotor_cu_fraction", fmt::shortest(d.rotor_cu_fraction));
    if (d.f_hz) {
        put("f_hz", fmt::shortest(*d.f_hz));
    }
    if (d.poles) {
        put("poles", std::to_string(*d.poles));
    }
    return out.str();
}

Point2 phasor_to_point(double magnitude, Angle angle) {
    return {magnitude * std::sin(angle.rad()), magnitude * std::cos(angle.rad())};
}

DiagramAnchors refer_to_rated(const MachineTestData& data) {
    DiagramAnchors anchors;
    anchors.isc_referred = data.isc * data.v_rated / data.v_sc;
    anchors.o_prime = phasor_to_point(data.i0, data.phi0);
    anchors.a = phasor_to_point(anchors.isc_referred, data.phi_sc);
    if (anchors.a.x - anchors.o_prime.x <= kGeomEps * anchors.isc_referred) {
        throw DegenerateConstruction(
            "referred blocked-rotor point must lie right of the no-load point "
            "(perpendicular bisector would be parallel to the reference horizontal)");
    }
    return anchors;
}

} // namespace heyland
