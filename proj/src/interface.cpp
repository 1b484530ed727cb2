#include "pspchain/interface.hpp"

#include <stdexcept>

namespace pspchain {

namespace detail {

int psp_twice_of_span(const int* spins, int n) {
    const int sites = 2 * n + 1;
    int total_plus = 0;
    for (int i = 0; i < sites; ++i) total_plus += (spins[i] > 0);

    int prefix_minus = 0;  // minus spins among sites [0..i]
    int prefix_plus = 0;
    int best_norm = -1;
    int best_min_t2 = 0;
    int best_max_t2 = 0;
    // boundary between site i and i+1 sits at t2 = 2(i-n)+1; i runs from -1
    // (left boundary spin -1) to sites-1 (right boundary spin +1)
    for (int i = -1; i < sites; ++i) {
        if (i >= 0) {
            prefix_minus += (spins[i] < 0);
            prefix_plus += (spins[i] > 0);
        }
        const int left = i < 0 ? -1 : spins[i];
        const int right = i + 1 >= sites ? +1 : spins[i + 1];
        if (left == right) continue;
        const int norm = prefix_minus + (total_plus - prefix_plus);
        const int t2 = 2 * (i - n) + 1;
        if (norm > best_norm) {
            best_norm = norm;
            best_min_t2 = best_max_t2 = t2;
        } else if (norm == best_norm) {
            best_max_t2 = t2;
        }
    }
    return total_plus >= n + 1 ? best_min_t2 : best_max_t2;
}

}  // namespace detail

namespace {

void require_in_range(InterfaceIndex t, int n) {
    if ((t.twice & 1) == 0)
        throw std::invalid_argument("interface index must be a half-integer (odd doubled value)");
    if (t.twice > 2 * n + 1 || t.twice < -(2 * n + 1))
        throw std::out_of_range("interface index outside the volume's range");
}

}  // namespace

std::vector<InterfaceIndex> interface_points(const SpinConfiguration& config) {
    const int n = config.half_width();
    const auto bc = BoundaryCondition::pm();
    std::vector<InterfaceIndex> points;
    for (int t2 = -(2 * n + 1); t2 <= 2 * n + 1; t2 += 2) {
        const InterfaceIndex t{t2};
        if (config.extended_spin(t.left_site(), bc) != config.extended_spin(t.right_site(), bc))
            points.push_back(t);
    }
    return points;
}

InterfaceStats interface_stats(const SpinConfiguration& config, InterfaceIndex t) {
    const int n = config.half_width();
    require_in_range(t, n);
    InterfaceStats s{0, 0, 0, 0};
    for (int x = -n; x <= n; ++x) {
        if (2 * x < t.twice && config.spin(x) < 0) ++s.l_minus;
        if (2 * x > t.twice && config.spin(x) > 0) ++s.r_plus;
    }
    // the complements follow from the site counts on each side of t
    s.l_plus = (2 * n + t.twice + 1) / 2 - s.l_minus;
    s.r_minus = (2 * n - t.twice + 1) / 2 - s.r_plus;
    return s;
}

MajorityClass majority_class(const SpinConfiguration& config) {
    return config.plus_count() >= config.half_width() + 1 ? MajorityClass::Plus
                                                          : MajorityClass::Minus;
}

InterfaceIndex psp(const SpinConfiguration& config) {
    const int n = config.half_width();
    std::vector<int> spins;
    spins.reserve(static_cast<std::size_t>(config.volume().site_count()));
    for (int x = -n; x <= n; ++x) spins.push_back(config.spin(x));
    return InterfaceIndex{detail::psp_twice_of_span(spins.data(), n)};
}

}  // namespace pspchain
