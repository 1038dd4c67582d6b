#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace twistlab {

// Symmetric probe window [-N, N]. Every scan is window-relative: a probe can
// report that exceptional behavior is confined to the inner fraction of the
// window, never a claim about all of Z.
struct Window {
    std::int64_t n = 50;
    double inner_fraction = 0.5;

    Window() = default;
    Window(std::int64_t radius, double rho = 0.5) : n(radius), inner_fraction(rho) {
        if (n < 1) throw std::invalid_argument("window radius must be >= 1");
        if (!(inner_fraction > 0.0 && inner_fraction < 1.0))
            throw std::invalid_argument("inner fraction must lie in (0, 1)");
    }

    std::int64_t inner_radius() const { return static_cast<std::int64_t>(std::floor(inner_fraction * static_cast<double>(n))); }
    bool contains(std::int64_t k) const { return k >= -n && k <= n; }
    bool inner_contains(std::int64_t k) const { return k >= -inner_radius() && k <= inner_radius(); }
    std::size_t size() const { return static_cast<std::size_t>(2 * n + 1); }
    std::int64_t at(std::size_t idx) const { return -n + static_cast<std::int64_t>(idx); }
};

inline nlohmann::json to_json(const Window& w) {
    return {{"N", w.n}, {"rho", w.inner_fraction}};
}

inline Window window_from_json(const nlohmann::json& j) {
    Window w;
    if (j.is_number_integer()) return Window(j.get<std::int64_t>());
    if (!j.is_object()) throw std::invalid_argument("window must be an integer or {N, rho}");
    return Window(j.at("N").get<std::int64_t>(), j.value("rho", 0.5));
}

}  // namespace twistlab
