#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "theta/gaussian.hpp"

namespace theta {

enum class Side { A, B };

char side_name(Side s);

/// pi_5^n - 1 (side A) or pi_5^n + 1 (side B).
GaussInt side_element(int n, Side side);

GaussFactorization factor_side(int n, Side side, int64_t bound = kDefaultTrialDivisionBound);

/// Per-factor cycle data for a chosen order vector entry h_i > 0:
/// l_i is minimal with rho^{l_i} = +-1 mod prime^{h_i}, epsilon_i records
/// the sign (+1 -> 1, -1 -> 0, -1 meaning wildcard when both hold).
struct FactorCycleData {
    GaussPrimePower factor;
    int h = 0;
    int64_t l = 0;
    int epsilon = 0;
};

struct CycleLength {
    int64_t l = 0;
    std::vector<FactorCycleData> detail;
};

/// Number of elements of the odd part with componentwise order p_i^{h_i}:
/// prod N_{h_i} over inert factors times prod phi(p_i^{h_i}) over split ones.
int64_t count_points_of_order(const GaussFactorization& f, const std::vector<int>& h);

/// Cycle length for the class h: l = 2^eps * lcm(l_i over h_i > 0), where
/// eps = 0 if all epsilon_i agree and 1 otherwise. h must be nonzero.
CycleLength cycle_length_for(const GaussFactorization& f, const std::vector<int>& h);

struct CycleClassReport {
    std::vector<int> h;
    int64_t point_count = 0;
    int64_t cycle_length = 0;
    int64_t cycle_count = 0;
    std::vector<FactorCycleData> detail;
};

/// One report per nonzero h in H = prod [0, e_i].
std::vector<CycleClassReport> cycle_classes(const GaussFactorization& f);

struct CycleSpectrum {
    Side side = Side::A;
    std::vector<std::pair<int64_t, int64_t>> entries; // (length, count), merged, sorted
    bool fixed_point_infinity = false;                // A side: the cycle {infinity}

    int64_t cycle_vertex_total() const;
};

/// Predicted spectrum: all nonzero h classes; side A adds the length-1 cycle
/// {infinity}, side B discards h = 0 (those points are E*).
CycleSpectrum predict_cycles(int n, Side side, int64_t bound = kDefaultTrialDivisionBound);

struct TreeShape {
    int depth = 0;
    std::vector<int64_t> level_widths; // widths at levels 1..depth
    int root_children = 1;
    bool special_infinity = false;

    int64_t size() const; // vertices including the root
    friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

/// Reversed-tree shape at a cycle vertex. Generic: depth e_0 with widths
/// 2^{k-1}. The infinity tree has widths 1, 2, 2^{k-2} and, for odd n,
/// depth 3 instead of e_0 = 2.
TreeShape predict_tree(int n, Side side, bool at_infinity, int64_t bound = kDefaultTrialDivisionBound);

struct ComponentGroup {
    Side side = Side::A;
    bool infinity = false;
    int64_t cycle_length = 0;
    int64_t count = 0;
    int64_t size = 0; // vertices per component

    friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

struct PredictedCensus {
    int n = 0;
    CycleSpectrum a_cycles, b_cycles;
    TreeShape a_tree, b_tree, infinity_tree;
    std::vector<ComponentGroup> components;
    int64_t size_a = 0, size_b = 0, size_c = 0;
    int64_t total_vertices = 0;
};

/// Full predicted census with vertex accounting; throws std::logic_error if
/// the accounting does not close.
PredictedCensus predict_summary(int n, int64_t bound = kDefaultTrialDivisionBound);

} // namespace theta
