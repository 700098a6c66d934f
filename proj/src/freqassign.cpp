#include "xtalk/freqassign.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xtalk {

namespace {

bool pair_ok(double d, double a, double delta) {
    // d: positive frequency difference, a = |alpha|
    return d >= delta && std::abs(d - a) >= delta && d + a >= delta;
}

bool placement_ok(const std::vector<double>& pts, double a, double delta) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!pair_ok(std::abs(pts[i] - pts[j]), a, delta)) return false;
    return true;
}

// Exhaustive DFS over grid placements anchored at lo. Any feasible placement
// on the anchored grid can be shifted down so its lowest point sits at lo,
// which keeps all differences, so fixing the first point loses nothing.
bool grid_dfs(std::vector<double>& chosen, int next_idx, int n, double lo, double pitch,
              int npts, double a, double delta) {
    if (static_cast<int>(chosen.size()) == n) return true;
    int remaining = n - static_cast<int>(chosen.size());
    for (int idx = next_idx; idx < npts; ++idx) {
        double p = lo + idx * pitch;
        double room = lo + (npts - 1) * pitch - p;
        if (room < (remaining - 1) * delta - 1e-12) break;
        bool ok = true;
        for (double q : chosen) {
            if (!pair_ok(p - q, a, delta)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(p);
        int step = std::max(1, static_cast<int>(std::floor(delta / pitch)));
        if (grid_dfs(chosen, idx + step, n, lo, pitch, npts, a, delta)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<double>> feasible(int n_colors, double delta, double alpha,
                                            double omega_lo, double omega_hi) {
    if (n_colors < 1) throw std::invalid_argument("need at least one color");
    if (omega_lo > omega_hi) throw std::invalid_argument("empty frequency range");
    if (delta < 0) throw std::invalid_argument("negative separation");

    if (n_colors == 1) {
        if (delta > omega_hi - omega_lo + 1e-12) return std::nullopt;
        return std::vector<double>{omega_hi};
    }

    const double W = omega_hi - omega_lo;
    const double a = std::abs(alpha);
    const double s_max = W / (n_colors - 1);

    // Uniform spacings, anchored at the top of the region. The feasible set
    // of spacings is [delta, s_max] minus the open bands ((a-delta)/m,
    // (a+delta)/m); every maximal sub-interval ends at s_max or at a band's
    // lower edge, so checking those candidates decides the uniform family.
    std::vector<double> spacings{s_max};
    for (int m = 1; m < n_colors; ++m) {
        double edge = (a - delta) / m;
        if (edge >= delta && edge <= s_max) spacings.push_back(edge);
    }
    if (a + delta <= s_max) spacings.push_back(a + delta);
    for (double s : spacings) {
        if (s < delta - 1e-15) continue;
        std::vector<double> pts(n_colors);
        for (int i = 0; i < n_colors; ++i) pts[i] = omega_hi - i * s;
        if (pts.back() < omega_lo - 1e-12) continue;
        if (placement_ok(pts, a, delta)) return pts;
    }

    // Grid fallback for small color counts: resolution delta/8, floored so
    // the grid stays tractable.
    if (n_colors <= 6 && delta > 0) {
        double pitch = std::max(delta / 8.0, W / 4096.0);
        int npts = static_cast<int>(std::floor(W / pitch)) + 1;
        std::vector<double> chosen{omega_lo};
        if (grid_dfs(chosen, 1, n_colors, omega_lo, pitch, npts, a, delta)) return chosen;
    }
    return std::nullopt;
}

FrequencyAssignment smt_find(const Coloring& coloring, double alpha, double omega_lo,
                             double omega_hi, double tolerance) {
    FrequencyAssignment res;
    res.omega_lo = omega_lo;
    res.omega_hi = omega_hi;
    const double W = omega_hi - omega_lo;

    const int n = coloring.n_colors;
    if (n == 0) {
        res.delta = W;
        return res;
    }

    std::vector<double> freqs;
    if (auto top = feasible(n, W, alpha, omega_lo, omega_hi)) {
        res.delta = W;
        freqs = *top;
    } else {
        double lo = 0.0, hi = W;
        auto lo_pts = feasible(n, 0.0, alpha, omega_lo, omega_hi);
        while (hi - lo > tolerance) {
            double mid = 0.5 * (lo + hi);
            if (auto pts = feasible(n, mid, alpha, omega_lo, omega_hi)) {
                lo = mid;
                lo_pts = std::move(pts);
            } else {
                hi = mid;
            }
        }
        res.delta = lo;
        freqs = std::move(*lo_pts);
    }

    // most-used color gets the highest frequency; ties by ascending color id
    std::sort(freqs.begin(), freqs.end(), std::greater<>());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        int mi = coloring.multiplicity[i], mj = coloring.multiplicity[j];
        return mi != mj ? mi > mj : i < j;
    });
    res.omega_of_color.assign(n, 0.0);
    for (int rank = 0; rank < n; ++rank) res.omega_of_color[order[rank]] = freqs[rank];

    auto violations = validate_assignment(res, coloring, alpha);
    if (!violations.empty())
        throw std::logic_error("smt_find produced an invalid assignment: " + violations.front());
    return res;
}

FrequencyAssignment assign_idle(const Coloring& conn_coloring, const FrequencyPartition& partition,
                                double alpha) {
    return smt_find(conn_coloring, alpha, partition.parking_lo, partition.parking_hi);
}

std::vector<std::string> validate_assignment(const FrequencyAssignment& a, const Coloring& c,
                                             double alpha) {
    std::vector<std::string> out;
    const double eps = 1e-9;
    if (static_cast<int>(a.omega_of_color.size()) != c.n_colors) {
        out.push_back("assignment size does not match color count");
        return out;
    }
    for (double w : a.omega_of_color) {
        if (w < a.omega_lo - eps || w > a.omega_hi + eps) {
            out.push_back("frequency outside region");
            break;
        }
    }
    for (int i = 0; i < c.n_colors; ++i) {
        for (int j = 0; j < c.n_colors; ++j) {
            if (i == j) continue;
            double wi = a.omega_of_color[i], wj = a.omega_of_color[j];
            if (std::abs(wi - wj) < a.delta - eps) {
                out.push_back("pair separation below delta");
            }
            if (std::abs(wi + alpha - wj) < a.delta - eps) {
                out.push_back("anharmonicity-shifted separation below delta");
            }
        }
    }
    for (int i = 0; i < c.n_colors; ++i) {
        for (int j = 0; j < c.n_colors; ++j) {
            if (c.multiplicity[i] > c.multiplicity[j] &&
                a.omega_of_color[i] < a.omega_of_color[j] - eps) {
                out.push_back("multiplicity order not reflected in frequencies");
            }
        }
    }
    if (out.size() > 3) out.resize(3);
    return out;
}

}  // namespace xtalk
