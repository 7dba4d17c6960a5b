#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "maxcurves/stabilizer.hpp"

namespace maxcurves {

/// Multiplicities of the Artin values {0, 1, 2, 3, Q+1, Q+2} over the
/// nontrivial elements of a subgroup, with the derived quantities
///   u = n0+n1+n2+n3,  v = n_{Q+1}+n_{Q+2},  degR = sum of value * count.
/// Always satisfies v(Q+1) <= degR <= v(Q+1) + 3u + v.
struct RamificationProfile {
    std::uint64_t Q = 0;
    std::array<std::uint64_t, 6> n{};  // indices: 0,1,2,3, then Q+1, Q+2

    std::uint64_t u() const { return n[0] + n[1] + n[2] + n[3]; }
    std::uint64_t v() const { return n[4] + n[5]; }
    std::uint64_t deg_r() const {
        return n[1] + 2 * n[2] + 3 * n[3] + (Q + 1) * n[4] + (Q + 2) * n[5];
    }
    std::uint64_t order() const { return 1 + u() + v(); }  // d = 1 + u + v
};

/// An explicit subgroup of the stabilizer: element list containing the
/// identity, closed under composition and inverse.
class SubgroupWitness {
public:
    /// Validates the list (identity present, closed, inverses present).
    static SubgroupWitness from_elements(const HermitianStabilizer& H,
                                         std::vector<StabilizerElement> elements);

    /// Closure of a generating set, capped (default 10^4) to stay desk-scale.
    static SubgroupWitness generate(const HermitianStabilizer& H,
                                    std::vector<StabilizerElement> generators,
                                    std::size_t cap = 10000);

    const std::vector<StabilizerElement>& elements() const { return elements_; }
    std::uint64_t order() const { return elements_.size(); }

private:
    SubgroupWitness() = default;
    std::vector<StabilizerElement> elements_;
};

/// deg R = sum of i(s) over the nontrivial elements of G, with the profile.
RamificationProfile ramification_profile(const HermitianStabilizer& H,
                                         const SubgroupWitness& G);

/// Same for an explicit list of unitary matrices closed under multiplication
/// (elements classified through classify_general; needs ambient = 3).
RamificationProfile ramification_profile_matrices(const HermitianStabilizer& H,
                                                  const std::vector<Mat3>& group);

/// Genus of the quotient curve by Riemann-Hurwitz:
///   (Q-2)(Q+1) = d (2g' - 2) + deg R.
/// Throws InconsistencyError when the division does not come out an integer
/// >= 0; that indicates corrupted subgroup data.
std::uint64_t quotient_genus(const HermitianStabilizer& H, const SubgroupWitness& G);
std::uint64_t quotient_genus_for(std::uint64_t Q, std::uint64_t d, std::uint64_t deg_r);

/// Sharp subcover genus for d | Q:  2g - 2 = (Q/d - 1)(Q + 1) - (Q/d + 1).
/// Realized by quotients by subgroups of the translation group {[1,0,c]}.
std::uint64_t gsx_genus(std::uint64_t Q, std::uint64_t d);

struct ProfileOptions {
    bool stabilizer_only = false;  // the group fixes a point: forces n0 = 0
};

/// All profiles (n0, n1, n2, n3, n_{Q+1}, n_{Q+2}) with sum d-1 and weighted
/// sum (Q-2)(Q+1) - d(2g-2); empty when that required degree is negative.
std::vector<std::array<std::uint64_t, 6>> profile_solutions(std::uint64_t Q,
                                                            std::int64_t genus,
                                                            std::uint64_t d,
                                                            ProfileOptions opts = {},
                                                            std::size_t max_results = 200000);

/// Existence test for the same system, without materializing solutions.
bool profile_exists(std::uint64_t Q, std::int64_t genus, std::uint64_t d,
                    ProfileOptions opts = {});

}  // namespace maxcurves
