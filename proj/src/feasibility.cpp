#include "maxcurves/feasibility.hpp"

#include <algorithm>

#include "maxcurves/curves.hpp"
#include "maxcurves/util.hpp"

namespace maxcurves {

GenusClass genus_class(std::uint64_t Q, std::uint64_t g) {
    if (Q < 2 || !prime_power(Q)) throw InvalidArgumentError("Q must be a prime power >= 2");
    GenusClass gc;
    gc.Q = Q;
    gc.g = g;
    const std::int64_t t = 2 * static_cast<std::int64_t>(g) - 2;
    const std::int64_t q1 = static_cast<std::int64_t>(Q) + 1;
    gc.A = ceil_div(t + 1, q1);
    gc.B = gc.A * q1 - t;
    if (gc.B < 1 || gc.B > q1) throw InconsistencyError("genus decomposition out of range");
    gc.k = (gc.B - 1) / (gc.A + 1);
    if (!(gc.k * (gc.A + 1) < gc.B && (gc.k + 1) * (gc.A + 1) >= gc.B))
        throw InconsistencyError("k is not maximal with k(A+1) < B");
    return gc;
}

std::int64_t hurwitz_upper(std::uint64_t Q, std::uint64_t g) {
    if (g < 2) throw InvalidArgumentError("Hurwitz bound needs genus >= 2");
    std::int64_t num = static_cast<std::int64_t>((Q - 2) * (Q + 1));
    return floor_div(num, 2 * static_cast<std::int64_t>(g) - 2);
}

std::int64_t splitting_lower(std::uint64_t Q, std::uint64_t g) {
    std::int64_t num = static_cast<std::int64_t>(Q * Q * Q + 1);
    std::int64_t den = static_cast<std::int64_t>(Q * Q + 1 + 2 * g * Q);
    return ceil_div(num, den);
}

std::optional<std::int64_t> lemcov_lower(const GenusClass& gc) {
    if (gc.B == gc.A + 2) return std::nullopt;
    return ceil_div(static_cast<std::int64_t>(gc.Q) + gc.k, gc.A + 1);
}

std::optional<std::int64_t> lemcov_corollary(const GenusClass& gc) {
    if (gc.B <= gc.A + 2) return std::nullopt;
    return ceil_div(static_cast<std::int64_t>(gc.Q) + 1, gc.A + 1);
}

std::optional<std::int64_t> proplb_lower(const GenusClass& gc) {
    if (gc.B <= gc.A + 2) return std::nullopt;
    return ceil_div((gc.k + 1) * (static_cast<std::int64_t>(gc.Q) + 1), gc.B);
}

RamificationBudget ramification_budget(const GenusClass& gc, std::uint64_t d) {
    if (d < 1) throw InvalidArgumentError("degree must be >= 1");
    const std::int64_t Q = static_cast<std::int64_t>(gc.Q);
    const std::int64_t dd = static_cast<std::int64_t>(d);
    RamificationBudget b;
    b.R0 = Q - 2 - dd * gc.A + gc.k;
    b.R1 = dd * gc.B - gc.k * (Q + 1);
    b.deg_r = b.R0 * (Q + 1) + b.R1;
    std::int64_t direct = (Q - 2) * (Q + 1) - dd * (2 * static_cast<std::int64_t>(gc.g) - 2);
    if (b.deg_r != direct) throw InconsistencyError("budget split disagrees with Hurwitz");
    return b;
}

const char* to_string(EliminationReason r) {
    switch (r) {
        case EliminationReason::Splitting: return "splitting";
        case EliminationReason::Lemcov: return "lemcov";
        case EliminationReason::Proplb: return "proplb";
        case EliminationReason::Hurwitz: return "hurwitz";
        case EliminationReason::BudgetNegative: return "budget-negative";
        case EliminationReason::BudgetShape: return "budget-shape";
        case EliminationReason::ProfileEmpty: return "profile-empty";
    }
    return "?";
}

std::int64_t FeasibilityReport::lower() const {
    std::int64_t lo = std::max<std::int64_t>(1, lower_splitting);
    if (lower_lemcov) lo = std::max(lo, *lower_lemcov);
    if (lower_lemcov_corollary) lo = std::max(lo, *lower_lemcov_corollary);
    if (lower_proplb) lo = std::max(lo, *lower_proplb);
    return lo;
}

bool FeasibilityReport::contains(std::int64_t d) const {
    if (unbounded) return d >= lower();
    return std::binary_search(feasible.begin(), feasible.end(), d);
}

FeasibilityReport feasible_degrees(std::uint64_t Q, std::uint64_t g) {
    FeasibilityReport rep;
    rep.Q = Q;
    rep.genus = g;
    rep.gc = genus_class(Q, g);
    rep.lower_splitting = splitting_lower(Q, g);
    rep.lower_lemcov = lemcov_lower(rep.gc);
    rep.lower_lemcov_corollary = lemcov_corollary(rep.gc);
    rep.lower_proplb = proplb_lower(rep.gc);

    if (g < 2) {
        // the Hurwitz quotient has no positive denominator; only the lower
        // bounds apply and every d above them stays on the table
        rep.unbounded = true;
        for (std::int64_t d = 1; d < rep.lower(); ++d) {
            EliminationReason why = EliminationReason::Splitting;
            if (d >= rep.lower_splitting) {
                if (rep.lower_lemcov && d < *rep.lower_lemcov)
                    why = EliminationReason::Lemcov;
                else
                    why = EliminationReason::Proplb;
            }
            rep.eliminated.push_back({d, why});
        }
        return rep;
    }

    rep.upper_hurwitz = hurwitz_upper(Q, g);
    std::int64_t hi = std::max(*rep.upper_hurwitz, rep.lower() - 1);
    for (std::int64_t d = 1; d <= hi; ++d) {
        std::optional<EliminationReason> why;
        if (d < rep.lower_splitting) {
            why = EliminationReason::Splitting;
        } else if (rep.lower_lemcov && d < *rep.lower_lemcov) {
            why = EliminationReason::Lemcov;
        } else if (rep.lower_lemcov_corollary && d < *rep.lower_lemcov_corollary) {
            why = EliminationReason::Lemcov;
        } else if (rep.lower_proplb && d < *rep.lower_proplb) {
            why = EliminationReason::Proplb;
        } else if (d > *rep.upper_hurwitz) {
            why = EliminationReason::Hurwitz;
        } else {
            RamificationBudget b = ramification_budget(rep.gc, static_cast<std::uint64_t>(d));
            if (b.deg_r < 0) {
                why = EliminationReason::BudgetNegative;
            } else if (rep.gc.B > rep.gc.A + 2 && b.R0 < 0 && b.deg_r > 0) {
                // For B > A+2 a Galois covering has dB >= (k+1)(Q+1), so R1
                // carries at least Q+1; a negative R0 with nonzero
                // ramification leaves no split matching the ramification
                // bound. Unramified coverings (deg R = 0) are unaffected.
                why = EliminationReason::BudgetShape;
            } else if (!profile_exists(Q, static_cast<std::int64_t>(g),
                                       static_cast<std::uint64_t>(d))) {
                why = EliminationReason::ProfileEmpty;
            } else {
                // identity (5.5)-style consistency of the admissible budget
                std::int64_t lhs = rep.gc.k * (b.R0 - d) + (b.R1 - d);
                if (lhs < rep.gc.k * (rep.gc.k - 3))
                    throw InconsistencyError("budget inequality violated for a feasible d");
            }
        }
        if (why)
            rep.eliminated.push_back({d, *why});
        else
            rep.feasible.push_back(d);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// named theorem presets

namespace {

void check_theorem_params(const std::string& id, std::uint64_t q, std::uint32_t n) {
    if (!prime_power(q)) throw InvalidArgumentError("q must be a prime power");
    if (n < 3 || n % 2 == 0) throw InvalidArgumentError("n must be odd and >= 3");
    if (id == "1.2") {
        if (q != 2) throw InvalidArgumentError("preset 1.2 needs q = 2");
        if (n < 5) throw InvalidArgumentError("preset 1.2 needs n >= 5");
    } else if (id == "1.1" || id == "1.3") {
        if (q < 3) throw InvalidArgumentError("presets 1.1/1.3 need q >= 3");
    } else {
        throw InvalidArgumentError("unknown theorem id (use 1.1, 1.2 or 1.3)");
    }
}

}  // namespace

TheoremRow check_theorem(const std::string& id, std::uint64_t q, std::uint32_t n) {
    check_theorem_params(id, q, n);
    TheoremRow row;
    row.q = q;
    row.n = n;
    const std::uint64_t Q = ipow(q, n);
    if (id == "1.1") {
        row.report = feasible_degrees(Q, genus_ggk(q, n));
        row.pass = row.report.feasible.empty() && !row.report.unbounded;
        row.detail = row.pass ? "no feasible degree" : "unexpected feasible degree";
    } else if (id == "1.2") {
        row.report = feasible_degrees(Q, genus_ggk(q, n));
        std::int64_t want = static_cast<std::int64_t>((ipow(2, n) + 1) / 3);
        bool unique = row.report.feasible == std::vector<std::int64_t>{want};
        bool unramified =
            unique && ramification_budget(row.report.gc, static_cast<std::uint64_t>(want))
                              .deg_r == 0;
        row.pass = unique && unramified;
        row.detail = "d = " + std::to_string(want) + (unramified ? ", unramified" : "");
    } else {
        row.report = feasible_degrees(Q, genus_xn(q, n));
        std::int64_t lo_want = ceil_div(static_cast<std::int64_t>((q + 1) * (Q + 1)),
                                        static_cast<std::int64_t>(q * q + 1));
        std::int64_t hi_want = 2;
        for (std::uint32_t i = 1; i < n; ++i) hi_want += static_cast<std::int64_t>(ipow(q, i));
        bool nonempty = !row.report.feasible.empty();
        row.pass = nonempty && row.report.feasible.front() == lo_want &&
                   row.report.feasible.back() == hi_want;
        row.detail = std::to_string(lo_want) + " <= d <= " + std::to_string(hi_want);
    }
    return row;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> theorem_default_sweep(
    const std::string& id) {
    if (id == "1.1") return {{3, 3}, {3, 5}, {4, 3}, {4, 5}, {5, 3}, {5, 5}};
    if (id == "1.2") return {{2, 5}, {2, 7}};
    if (id == "1.3") return {{3, 3}, {3, 5}, {4, 3}, {4, 5}};
    throw InvalidArgumentError("unknown theorem id (use 1.1, 1.2 or 1.3)");
}

}  // namespace maxcurves
