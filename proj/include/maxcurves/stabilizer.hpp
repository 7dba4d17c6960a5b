#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "maxcurves/fields.hpp"

namespace maxcurves {

/// Automorphism [a,b,c] of the Hermitian curve x^Q + x = y^{Q+1} fixing the
/// point at infinity:
///   x -> a^{Q+1} x + a b^Q y + c,   y -> a y + b,
/// with a != 0 and c^Q + c = b^{Q+1}.
struct StabilizerElement {
    Elem a, b, c;

    bool is_identity() const { return a.is_one() && b.is_zero() && c.is_zero(); }
    bool operator==(const StabilizerElement& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
    bool operator!=(const StabilizerElement& o) const { return !(*this == o); }
};

enum class ArtinCase {
    MixedOrder,      // a != 1, characteristic divides the order        -> 1
    Torus,           // a != 1, order divides Q+1                       -> Q+1
    TameGeneric,     // a != 1, otherwise                               -> 2
    Shear,           // a == 1, b != 0                                  -> 2
    Translation,     // a == 1, b == 0, c != 0                          -> Q+2
    DegreeThree,     // fixes a single orbit of degree three            -> 3
    FixedPointFree,  // fixes no point of the curve                     -> 0
};

const char* to_string(ArtinCase c);

struct ArtinValue {
    std::uint64_t value = 0;
    ArtinCase case_tag = ArtinCase::FixedPointFree;
};

/// The stabilizer H of the point at infinity inside PGU(3,Q), acting on the
/// Hermitian curve x^Q + x = y^{Q+1} over F_{Q^2}. |H| = Q^3 (Q^2 - 1).
///
/// The coordinate field is F_{Q^{2 ambient}}; element components are always
/// restricted to the F_{Q^2} subfield. ambient = 1 is the plain group;
/// ambient = 3 additionally supports fixed-point scans over F_{Q^6}
/// (classify_general). Immutable after construction and safe to share.
class HermitianStabilizer {
public:
    explicit HermitianStabilizer(std::uint64_t Q, std::uint32_t ambient = 1);

    HermitianStabilizer(const HermitianStabilizer&) = delete;
    HermitianStabilizer& operator=(const HermitianStabilizer&) = delete;

    std::uint64_t Q() const { return q_; }
    std::uint32_t p() const { return field_->p(); }
    std::uint64_t order() const { return q_ * q_ * q_ * (q_ * q_ - 1); }
    const Field& field() const { return *field_; }
    std::uint32_t subfield_degree() const { return s2_; }  // F_{Q^2} = F_{p^{s2}}
    bool in_base(const Elem& v) const;                     // lies in F_{Q^2}

    StabilizerElement identity() const;

    /// Validates a != 0, the membership constraint and subfield containment.
    StabilizerElement make(Elem a, Elem b, Elem c) const;

    /// Group law: apply s2 first, then s1 (composition of the maps above).
    StabilizerElement compose(const StabilizerElement& s1, const StabilizerElement& s2) const;
    StabilizerElement inverse(const StabilizerElement& s) const;
    StabilizerElement power(const StabilizerElement& s, std::uint64_t e) const;

    /// Least k >= 1 with s^k = identity.
    std::uint64_t element_order(const StabilizerElement& s) const;

    /// All elements of F_{Q^2}, in index order.
    const std::vector<Elem>& base_elements() const { return base_; }

    /// Solutions c of c^Q + c = w for w in F_Q, in index order.
    const std::vector<Elem>& trace_fiber(const Elem& w) const;

    /// Enumerates H exactly once: a over F_{Q^2} minus zero, b over F_{Q^2},
    /// c over the trace fiber of b^{Q+1}; deterministic order.
    template <class Fn>
    void for_each(Fn&& fn, std::uint64_t max_elements = std::uint64_t(1) << 20) const {
        if (order() > max_elements)
            throw BudgetExceededError("stabilizer enumeration exceeds budget");
        for (const Elem& a : base_) {
            if (a.is_zero()) continue;
            for (const Elem& b : base_) {
                for (const Elem& c : trace_fiber(b.pow(q_ + 1))) fn(make(a, b, c));
            }
        }
    }

    std::vector<StabilizerElement> enumerate(std::uint64_t max_elements = std::uint64_t(1)
                                                                          << 20) const;

    /// Artin character value i(s) for s != 1 by the closed-form case split.
    ArtinValue artin_formula(const StabilizerElement& s) const;

    /// Oracle for a != 1: counts the degree-one points of the curve fixed by
    /// s (affine fixed points plus the point at infinity). Each such point is
    /// at most tamely ramified for these elements, so the count is i(s).
    std::uint64_t artin_fixed_point_count(const StabilizerElement& s) const;

    /// Oracle for a == 1: evaluates v(-b^Q y^2 + b x - c y) + 2(Q+1) at the
    /// point at infinity from the pole orders v(x) = -(Q+1), v(y) = -Q. The
    /// candidate monomial valuations -2Q < -(Q+1) < -Q are pairwise distinct
    /// for Q > 1, so the minimum over the nonzero monomials is exact.
    std::uint64_t artin_wild_valuation(const StabilizerElement& s) const;

    /// Multiset {i(s) : s in H, s != 1} via artin_formula.
    std::map<std::uint64_t, std::uint64_t> artin_census(unsigned workers = 1) const;

    /// Affine rational points of the curve (coordinates in F_{Q^2}).
    const std::vector<std::pair<Elem, Elem>>& curve_points() const { return points_; }

    /// Affine points with coordinates anywhere in the ambient field. Needs
    /// ambient >= 2; used for degree-three orbit detection with ambient = 3.
    const std::vector<std::pair<Elem, Elem>>& extension_curve_points() const;

private:
    std::uint64_t q_ = 0;
    std::uint32_t s2_ = 0;      // F_{Q^2} = F_{p^{s2_}}
    std::uint32_t ambient_ = 1;
    std::unique_ptr<Field> field_;
    std::vector<Elem> base_;                       // the F_{Q^2} subfield
    std::vector<std::vector<Elem>> fibers_;        // c-solutions per index of w
    std::vector<std::pair<Elem, Elem>> points_;    // rational affine points
    mutable std::vector<std::pair<Elem, Elem>> ext_points_;  // built on first use
};

// ---------------------------------------------------------------------------
// Projective-unitary matrices acting on the curve in coordinates (X : Y : Z),
// x = X/Z, y = Y/Z; the curve is X^Q Z + X Z^Q = Y^{Q+1} and the Hermitian
// form has Gram matrix G = [[0,0,1],[0,-1,0],[1,0,0]].

struct Mat3 {
    std::array<Elem, 9> e;  // row-major

    const Elem& at(int r, int c) const { return e[3 * r + c]; }
    Elem& at(int r, int c) { return e[3 * r + c]; }
};

Mat3 mat_identity(const Field& F);
Mat3 mat_mul(const Mat3& A, const Mat3& B);
Mat3 mat_inverse(const Mat3& A);
bool mat_proportional(const Mat3& A, const Mat3& B);

/// Embeds a stabilizer element: [[a^{Q+1}, a b^Q, c], [0, a, b], [0, 0, 1]].
Mat3 to_matrix(const HermitianStabilizer& H, const StabilizerElement& s);

/// The curve symmetry (X:Y:Z) -> (Z:Y:X); swaps the point at infinity with
/// the origin.
Mat3 swap_infinity(const Field& F);

/// Checks M^T G M^{(Q)} = lambda G for some nonzero lambda.
bool preserves_hermitian_form(const HermitianStabilizer& H, const Mat3& M);

/// Converts a matrix fixing the point at infinity back to [a,b,c] form;
/// nothing if the matrix is not of that shape.
std::optional<StabilizerElement> stabilizer_from_matrix(const HermitianStabilizer& H,
                                                        const Mat3& M);

/// Projective order of a unitary matrix: least k >= 1 with M^k scalar.
std::uint64_t projective_order(const HermitianStabilizer& H, const Mat3& M,
                               std::uint64_t bound = 1 << 20);

struct GeneralArtin {
    ArtinValue artin;
    int fixed_degree = 0;  // 1, 3, or 0 when nothing is fixed
    std::optional<StabilizerElement> conjugated;  // set for fixed_degree == 1
};

/// Artin value of an arbitrary non-scalar element of PGU(3,Q): finds a fixed
/// degree-one point and conjugates the element into the stabilizer of the
/// point at infinity, or detects a fixed degree-three orbit over F_{Q^6}, or
/// reports it fixed-point free. Requires ambient divisible by 3 when no
/// degree-one point is fixed.
GeneralArtin classify_general(const HermitianStabilizer& H, const Mat3& M);

}  // namespace maxcurves
