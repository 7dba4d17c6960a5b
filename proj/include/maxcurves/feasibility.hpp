#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxcurves/covers.hpp"

namespace maxcurves {

/// Decomposition of a candidate subcover genus relative to Q:
///   2g - 2 = A(Q+1) - B  with  1 <= B <= Q+1  (unique),
/// and k maximal with k(A+1) < B.
struct GenusClass {
    std::uint64_t Q = 0;
    std::uint64_t g = 0;
    std::int64_t A = 0;
    std::int64_t B = 0;
    std::int64_t k = 0;
};

GenusClass genus_class(std::uint64_t Q, std::uint64_t g);

/// floor((Q-2)(Q+1) / (2g-2)), the Hurwitz-quotient bound; needs g >= 2.
std::int64_t hurwitz_upper(std::uint64_t Q, std::uint64_t g);

/// ceil((Q^3+1) / (Q^2+1+2gQ)), from the splitting of rational points.
std::int64_t splitting_lower(std::uint64_t Q, std::uint64_t g);

/// ceil((Q+k)/(A+1)) under the hypotheses k(A+1) < B (true by construction)
/// and B != A+2; nothing when B == A+2.
std::optional<std::int64_t> lemcov_lower(const GenusClass& gc);

/// The corollary bound ceil((Q+1)/(A+1)), reported for B > A+2.
std::optional<std::int64_t> lemcov_corollary(const GenusClass& gc);

/// ceil((k+1)(Q+1)/B) for Galois coverings, valid for B > A+2.
std::optional<std::int64_t> proplb_lower(const GenusClass& gc);

/// deg R = (Q-2)(Q+1) - d(2g-2) split as R0(Q+1) + R1 with
/// R0 = Q-2-dA+k and R1 = dB - k(Q+1).
struct RamificationBudget {
    std::int64_t R0 = 0;
    std::int64_t R1 = 0;
    std::int64_t deg_r = 0;
};

RamificationBudget ramification_budget(const GenusClass& gc, std::uint64_t d);

enum class EliminationReason {
    Splitting,
    Lemcov,
    Proplb,
    Hurwitz,
    BudgetNegative,  // deg R < 0
    BudgetShape,     // B > A+2, R0 < 0 with deg R > 0: no admissible budget split
    ProfileEmpty,    // no profile solves the two counting equations
};

const char* to_string(EliminationReason r);

struct Elimination {
    std::int64_t d;
    EliminationReason reason;
};

/// Full report of the degree-feasibility engine for a Galois covering of the
/// Hermitian curve of parameter Q by a maximal curve of the given genus.
struct FeasibilityReport {
    std::uint64_t Q = 0;
    std::uint64_t genus = 0;
    GenusClass gc;

    std::int64_t lower_splitting = 1;
    std::optional<std::int64_t> lower_lemcov;
    std::optional<std::int64_t> lower_lemcov_corollary;
    std::optional<std::int64_t> lower_proplb;
    std::optional<std::int64_t> upper_hurwitz;  // absent for genus <= 1

    std::int64_t lower() const;  // max of the applicable lower bounds

    /// Surviving degrees, ascending. For genus <= 1 the set is the unbounded
    /// interval [lower(), infinity): unbounded is set and feasible stays
    /// empty.
    std::vector<std::int64_t> feasible;
    bool unbounded = false;
    std::vector<Elimination> eliminated;

    std::optional<std::string> theorem_tag;

    bool contains(std::int64_t d) const;
};

FeasibilityReport feasible_degrees(std::uint64_t Q, std::uint64_t g);

/// Named verification presets reproducing the published conclusions.
///  "1.1": GGK genus, q >= 3 odd n >= 3: no feasible degree.
///  "1.2": GGK genus, q = 2, odd n >= 5: exactly {(2^n+1)/3}, unramified.
///  "1.3": Xn genus, q >= 3 odd n >= 3: interval endpoints
///         ceil((q+1)(q^n+1)/(q^2+1)) and q^{n-1}+...+q+2.
struct TheoremRow {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    bool pass = false;
    std::string detail;
    FeasibilityReport report;
};

TheoremRow check_theorem(const std::string& id, std::uint64_t q, std::uint32_t n);

/// Default (q, n) sweep for each theorem id.
std::vector<std::pair<std::uint64_t, std::uint32_t>> theorem_default_sweep(
    const std::string& id);

}  // namespace maxcurves
