#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "maxcurves/fields.hpp"

namespace maxcurves {

enum class CurveFamily { Hermitian, GGK, Xn, Y };

const char* to_string(CurveFamily f);

/// A named curve model together with its field of definition. The field of
/// definition always has square order s^2; s is the parameter entering the
/// Hasse-Weil count s^2 + 1 + 2gs.
///
/// Equations, with places at infinity on the nonsingular model:
///   Hermitian(Q):  x^Q + x = y^{Q+1}              over F_{Q^2},    1 at infinity
///   GGK(q,n):      x^q + x = y^{q+1},
///                  y^{q^2} - y = z^{(q^n+1)/(q+1)} over F_{q^{2n}}, 1 at infinity
///   Xn(q,n):       y^{q^2} - y = z^{(q^n+1)/(q+1)} over F_{q^{2n}}, 1 at infinity
///   Y(q):          y^{q^2} - y^q + y = x^{q^2-q+1} over F_{q^6},    1 at infinity
///
/// Each n_infinity value is pinned by the maximality identity: it equals
/// hasse_weil_target - affine at the smallest parameter set of the family and
/// is checked constant across all tested parameter sets.
struct CurveModel {
    CurveFamily family;
    std::uint64_t q = 0;  // Hermitian: Q itself; other families: the small q
    std::uint32_t n = 1;
    std::shared_ptr<const Field> field;
    std::uint64_t sqrt_size = 0;  // s with |field| = s^2
    std::uint64_t genus = 0;
    std::uint64_t n_infinity = 0;
};

std::uint64_t genus_hermitian(std::uint64_t Q);
std::uint64_t genus_ggk(std::uint64_t q, std::uint32_t n);
std::uint64_t genus_xn(std::uint64_t q, std::uint32_t n);
std::uint64_t genus_y(std::uint64_t q);

CurveModel make_hermitian(std::uint64_t Q);
CurveModel make_ggk(std::uint64_t q, std::uint32_t n);
CurveModel make_xn(std::uint64_t q, std::uint32_t n);
CurveModel make_y(std::uint64_t q);

/// Enumeration limits for exact counting. Exceeding a limit raises
/// BudgetExceededError; nothing is ever sampled or truncated silently.
struct EnumerationBudget {
    std::uint64_t max_field_size = std::uint64_t(1) << 20;
    std::uint64_t max_ops = 1000000000ull;
};

struct PointCount {
    std::uint64_t affine = 0;
    std::uint64_t at_infinity = 0;
    std::uint64_t total = 0;
    std::uint64_t hasse_weil_target = 0;
    bool maximal = false;
};

/// Exact number of affine rational solutions over the field of definition.
/// Uses the fiber structure of the defining equations (kernel size of the
/// additive map times an image-membership test) instead of a full product
/// loop over all variables.
std::uint64_t count_affine(const CurveModel& model, const EnumerationBudget& budget = {},
                           unsigned workers = 1);

/// Counts points and compares against the Hasse-Weil upper bound for the
/// model's genus. maximal == true iff affine + n_infinity equals the bound.
PointCount check_maximal(const CurveModel& model, const EnumerationBudget& budget = {},
                         unsigned workers = 1);

}  // namespace maxcurves
