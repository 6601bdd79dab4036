#include "bezout/glue.hpp"

#include <string>
#include <utility>

namespace bezout {

DiskSchedule::DiskSchedule(std::size_t n, std::vector<Rational> radii)
    : n_(n), radii_(std::move(radii)) {
    if (radii_.empty()) throw error("DiskSchedule: at least one radius is required");
    Rational prev(0);
    for (const Rational& r : radii_) {
        if (!(r > prev)) throw error("DiskSchedule: radii must be positive and strictly increasing");
        prev = r;
    }
}

DiskSchedule DiskSchedule::standard(std::size_t n, std::size_t count) {
    std::vector<Rational> radii;
    radii.reserve(count);
    for (std::size_t k = 1; k <= count; ++k) radii.emplace_back(static_cast<long>(k));
    return DiskSchedule(n, std::move(radii));
}

const Rational& DiskSchedule::radius(std::size_t k) const {
    if (radii_.empty() || k > radii_.size())
        throw index_out_of_range("DiskSchedule: no radius with index " + std::to_string(k));
    return radii_[k == 0 ? 0 : k - 1];
}

Polydisk DiskSchedule::disk(std::size_t k) const { return Polydisk(n_, radius(k)); }

PolyTuple LocalSolutionProvider::solution(std::size_t k) const {
    if (k == 0) throw index_out_of_range("LocalSolutionProvider: solutions start at stage 1");
    if (!solves_unit_equation(base.g, f))
        throw not_a_solution("LocalSolutionProvider: base certificate does not solve the unit equation");
    const AntisymMatrix pert = k - 1 < perturbations.size()
                                   ? perturbations[k - 1]
                                   : AntisymMatrix::zero(f.size(), f.var_count());
    const PolyTuple a = apply_shift(f, base.g, pert);
    if (!solves_unit_equation(a, f))
        throw verification_failure("LocalSolutionProvider: shifted solution failed verification");
    return a;
}

AntisymMatrix transition_matrix(const PolyTuple& f, const PolyTuple& a_k, const PolyTuple& a_next) {
    if (!solves_unit_equation(a_k, f))
        throw not_a_solution("transition_matrix: left tuple does not solve the unit equation");
    if (!solves_unit_equation(a_next, f))
        throw not_a_solution("transition_matrix: right tuple does not solve the unit equation");
    AntisymMatrix h = difference_matrix(a_k, a_next);
    if (!(apply_shift(f, a_k, h) == a_next))
        throw verification_failure("transition_matrix: reconstruction identity failed");
    return h;
}

std::pair<AntisymMatrix, Rational> choose_truncation(const PolyTuple& f,
                                                     const AntisymMatrix& transition,
                                                     const Polydisk& disk_next,
                                                     const Rational& budget, BoundPolicy policy) {
    if (budget.sign() <= 0) throw error("choose_truncation: budget must be positive");
    const std::size_t count = transition.size();
    const int d_max = transition.max_entry_degree();
    for (int d = -1;; ++d) {
        AntisymMatrix kept = AntisymMatrix::zero(count, transition.var_count());
        AntisymMatrix tail = AntisymMatrix::zero(count, transition.var_count());
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t k = j + 1; k < count; ++k) {
                auto [head_part, tail_part] = transition.at(j, k).truncate_total_degree(d);
                kept.set_upper(j, k, std::move(head_part));
                tail.set_upper(j, k, std::move(tail_part));
            }
        const Rational bound = tuple_majorant(row_times_matrix(f, tail), disk_next, policy);
        if (bound < budget) return {std::move(kept), bound};
        if (d >= d_max)
            throw verification_failure("choose_truncation: empty tail failed the budget");
    }
}

GlueTrace run_glue(const LocalSolutionProvider& provider, const DiskSchedule& schedule,
                   std::size_t stage_count, BoundPolicy policy) {
    const PolyTuple& f = provider.f;
    if (schedule.var_count() != f.var_count())
        throw dimension_mismatch("run_glue: schedule and f disagree on the variable count");
    if (schedule.size() < stage_count + 1)
        throw index_out_of_range("run_glue: schedule has fewer radii than stages require");

    std::vector<GlueStage> stages;
    std::vector<PolyTuple> partial_sums;
    stages.reserve(stage_count);
    partial_sums.reserve(stage_count + 1);

    // Stage 0 contributes a_1 - a_0 - f * P_0 = a_1 with the zero conventions.
    PolyTuple a_prev = provider.solution(1);
    PolyTuple g = a_prev;
    if (!solves_unit_equation(g, f))
        throw verification_failure("run_glue: partial sum 0 failed the unit equation");
    partial_sums.push_back(g);

    for (std::size_t k = 1; k <= stage_count; ++k) {
        PolyTuple a_next = provider.solution(k + 1);
        AntisymMatrix transition = transition_matrix(f, a_prev, a_next);
        auto [truncation, bound] = choose_truncation(
            f, transition, schedule.disk(k + 1), Rational::pow2(-static_cast<long>(k)), policy);
        g = g + (a_next - a_prev - row_times_matrix(f, truncation));
        if (!solves_unit_equation(g, f))
            throw verification_failure("run_glue: partial sum " + std::to_string(k) +
                                       " failed the unit equation");
        partial_sums.push_back(g);
        stages.push_back({std::move(a_prev), std::move(transition), std::move(truncation),
                          std::move(bound)});
        a_prev = std::move(a_next);
    }

    std::vector<Rational> radii(schedule.radii().begin(),
                                schedule.radii().begin() + static_cast<long>(stage_count + 1));
    return GlueTrace{f,         std::move(radii),  policy,
                     std::move(stages), std::move(a_prev), std::move(partial_sums)};
}

Rational cauchy_bound(const GlueTrace& trace, std::size_t m, std::size_t m_prime,
                      const DiskSchedule& schedule) {
    if (m >= m_prime || m_prime > trace.stages.size())
        throw index_out_of_range("cauchy_bound: need m < m' <= recorded stages");
    const Polydisk disk = schedule.disk(m);
    Rational total(0);
    for (std::size_t k = m + 1; k <= m_prime; ++k) {
        const GlueStage& st = trace.stages[k - 1];
        total += tuple_majorant(row_times_matrix(trace.f, st.transition - st.truncation), disk,
                                trace.policy);
    }
    return total;
}

std::optional<std::string> check_trace(const GlueTrace& trace) {
    const PolyTuple& f = trace.f;
    const std::size_t count = f.size();
    const std::size_t n = f.var_count();
    const std::size_t m_max = trace.stages.size();

    if (trace.radii.size() < m_max + 1) return "schedule lists fewer radii than stages require";
    Rational prev(0);
    for (const Rational& r : trace.radii) {
        if (!(r > prev)) return "schedule radii are not positive and strictly increasing";
        prev = r;
    }
    const DiskSchedule schedule(n, trace.radii);
    if (trace.partial_sums.size() != m_max + 1)
        return "trace does not record exactly one partial sum per stage plus the base";

    const auto a_at = [&](std::size_t k) -> const PolyTuple& {
        return k <= m_max ? trace.stages[k - 1].a : trace.a_final;
    };
    const auto shaped = [&](const PolyTuple& t) { return t.size() == count && t.var_count() == n; };

    if (!shaped(trace.a_final)) return "a_final does not match the shape of f";
    for (std::size_t k = 1; k <= m_max; ++k) {
        const GlueStage& st = trace.stages[k - 1];
        if (!shaped(st.a)) return "stage " + std::to_string(k) + ": solution shape mismatch";
        if (st.transition.size() != count || st.transition.var_count() != n ||
            st.truncation.size() != count || st.truncation.var_count() != n)
            return "stage " + std::to_string(k) + ": matrix shape mismatch";
    }
    for (const PolyTuple& g : trace.partial_sums)
        if (!shaped(g)) return "partial sum shape mismatch";

    for (std::size_t k = 1; k <= m_max + 1; ++k)
        if (!solves_unit_equation(a_at(k), f))
            return "stage " + std::to_string(k) + ": a_k does not solve the unit equation";

    for (std::size_t k = 1; k <= m_max; ++k) {
        const GlueStage& st = trace.stages[k - 1];
        if (!(apply_shift(f, st.a, st.transition) == a_at(k + 1)))
            return "stage " + std::to_string(k) + ": transition identity a_{k+1} = a_k + f*H_k fails";
        const Rational recomputed = tuple_majorant(
            row_times_matrix(f, st.transition - st.truncation), schedule.disk(k + 1), trace.policy);
        if (!(recomputed == st.bound))
            return "stage " + std::to_string(k) + ": recorded bound " + st.bound.str() +
                   " differs from the recomputed majorant " + recomputed.str();
        if (!(st.bound < Rational::pow2(-static_cast<long>(k))))
            return "stage " + std::to_string(k) + ": bound " + st.bound.str() +
                   " does not clear the stage budget 2^-" + std::to_string(k);
    }

    for (std::size_t m = 0; m <= m_max; ++m)
        if (!solves_unit_equation(trace.partial_sums[m], f))
            return "partial sum " + std::to_string(m) + " does not solve the unit equation";
    PolyTuple g = a_at(1);
    if (!(trace.partial_sums[0] == g)) return "partial sum 0 is not a_1";
    for (std::size_t k = 1; k <= m_max; ++k) {
        g = g + (a_at(k + 1) - a_at(k) - row_times_matrix(f, trace.stages[k - 1].truncation));
        if (!(trace.partial_sums[k] == g))
            return "partial sum " + std::to_string(k) + " differs from its telescoping recomputation";
    }

    for (std::size_t m = 0; m < m_max; ++m)
        for (std::size_t m_prime = m + 1; m_prime <= m_max; ++m_prime)
            if (!(cauchy_bound(trace, m, m_prime, schedule) < Rational::pow2(-static_cast<long>(m))))
                return "tail sum bound for (" + std::to_string(m) + ", " + std::to_string(m_prime) +
                       ") does not clear 2^-" + std::to_string(m);

    return std::nullopt;
}

}  // namespace bezout
