#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bezout/antisym.hpp"
#include "bezout/groebner.hpp"

namespace bezout {

/// Strictly increasing positive radii r_1 < r_2 < ...; disk k is the closed
/// polydisk of radius r_k, so the disks are nested. Index 0 is served by the
/// innermost disk: every scheduled disk contains it, which keeps majorants
/// taken "on disk 0" sound.
class DiskSchedule {
public:
    DiskSchedule(std::size_t n, std::vector<Rational> radii);
    /// radii 1, 2, ..., count
    static DiskSchedule standard(std::size_t n, std::size_t count);

    std::size_t var_count() const { return n_; }
    std::size_t size() const { return radii_.size(); }
    const std::vector<Rational>& radii() const { return radii_; }
    const Rational& radius(std::size_t k) const;  // 1-based; k = 0 maps to r_1
    Polydisk disk(std::size_t k) const;

private:
    std::size_t n_;
    std::vector<Rational> radii_;
};

/// Supplies the per-disk solutions a_k = base.g + f * perturbation_k for
/// k >= 1. Perturbations beyond the stored list are zero, so those a_k all
/// equal the base solution. Every produced tuple is re-verified against the
/// unit equation before it is handed out.
struct LocalSolutionProvider {
    PolyTuple f;
    BezoutCertificate base;
    std::vector<AntisymMatrix> perturbations;

    PolyTuple solution(std::size_t k) const;
};

/// One gluing stage, k >= 1. Stage 0 is fixed by convention (a_0 = 0, zero
/// transition and truncation, zero bound) and is never recorded.
struct GlueStage {
    PolyTuple a;                // a_k
    AntisymMatrix transition;   // H_k with a_{k+1} = a_k + f * H_k
    AntisymMatrix truncation;   // P_k, the polynomial part kept by the series
    Rational bound;             // certified majorant of f * (H_k - P_k) on disk k+1
};

struct GlueTrace {
    PolyTuple f;
    std::vector<Rational> radii;          // r_1 .. r_{m+1}
    BoundPolicy policy = BoundPolicy::Sum;
    std::vector<GlueStage> stages;        // k = 1..m
    PolyTuple a_final;                    // a_{m+1}
    std::vector<PolyTuple> partial_sums;  // g_0 .. g_m, g_m = a_{m+1} - f * (P_1 + ... + P_m)
};

/// H with a_next = a_k + f * H. Both inputs are re-verified to solve the unit
/// equation (not_a_solution otherwise); the reconstruction identity is then
/// checked symbolically and cannot fail short of a defect here.
AntisymMatrix transition_matrix(const PolyTuple& f, const PolyTuple& a_k,
                                const PolyTuple& a_next);

/// Entrywise truncation of the transition at the smallest common total degree
/// d >= -1 whose certified tail majorant on disk_next is strictly below the
/// budget. Returns the truncation and that majorant. Always terminates: at
/// d = max entry degree the tail is empty and the majorant is zero. The
/// majorant is not monotone in d, so candidates are scanned from d = -1 up.
std::pair<AntisymMatrix, Rational> choose_truncation(const PolyTuple& f,
                                                     const AntisymMatrix& transition,
                                                     const Polydisk& disk_next,
                                                     const Rational& budget,
                                                     BoundPolicy policy = BoundPolicy::Sum);

/// Runs the staged construction for stages k = 1..stage_count with the per-
/// stage budget 2^-k, recording transitions, truncations, certified bounds and
/// the telescoping partial sums g_m; every g_m is verified against the unit
/// equation before the trace is returned.
GlueTrace run_glue(const LocalSolutionProvider& provider, const DiskSchedule& schedule,
                   std::size_t stage_count, BoundPolicy policy = BoundPolicy::Sum);

/// Certified majorant of g_{m'} - g_m on disk m: the sum over k = m+1..m' of
/// the tail majorants taken at radius r_m. Since r_m <= r_{k+1} for every such
/// k and each tail clears its stage budget, the result is below 2^-m.
Rational cauchy_bound(const GlueTrace& trace, std::size_t m, std::size_t m_prime,
                      const DiskSchedule& schedule);

/// Re-derives every identity and bound in a trace from its raw data, trusting
/// nothing recorded: solutions, transition reconstructions, bound recomputation
/// (recorded bounds must match exactly and clear their budgets), telescoping
/// partial sums, and the full triangle of tail-sum bounds. Returns the first
/// failure description, or nullopt when the trace checks out.
std::optional<std::string> check_trace(const GlueTrace& trace);

}  // namespace bezout
