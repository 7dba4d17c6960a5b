#include "maxcurves/covers.hpp"

#include <algorithm>
#include <set>

#include "maxcurves/util.hpp"

namespace maxcurves {

namespace {

std::array<std::uint64_t, 3> key_of(const Field& F, const StabilizerElement& s) {
    return {F.index(s.a), F.index(s.b), F.index(s.c)};
}

void bump(RamificationProfile& prof, const ArtinValue& av) {
    std::uint64_t Q = prof.Q;
    if (av.value == 0) ++prof.n[0];
    else if (av.value == 1) ++prof.n[1];
    else if (av.value == 2) ++prof.n[2];
    else if (av.value == Q + 1) ++prof.n[4];
    else if (av.value == Q + 2) ++prof.n[5];
    else if (av.value == 3) ++prof.n[3];
    else throw InconsistencyError("artin value outside the admissible set");
}

}  // namespace

SubgroupWitness SubgroupWitness::from_elements(const HermitianStabilizer& H,
                                               std::vector<StabilizerElement> elements) {
    const Field& F = H.field();
    std::set<std::array<std::uint64_t, 3>> keys;
    for (const auto& s : elements) {
        if (s.a.is_zero() || s.c.pow(H.Q()) + s.c != s.b.pow(H.Q() + 1))
            throw InvalidArgumentError("list contains a non-member element");
        if (!keys.insert(key_of(F, s)).second)
            throw InvalidArgumentError("duplicate element in subgroup list");
    }
    if (!keys.count(key_of(F, H.identity())))
        throw InvalidArgumentError("subgroup list lacks the identity");
    for (const auto& s : elements) {
        if (!keys.count(key_of(F, H.inverse(s))))
            throw InvalidArgumentError("subgroup list is not closed under inverse");
        for (const auto& t : elements)
            if (!keys.count(key_of(F, H.compose(s, t))))
                throw InvalidArgumentError("subgroup list is not closed under composition");
    }
    SubgroupWitness w;
    w.elements_ = std::move(elements);
    return w;
}

SubgroupWitness SubgroupWitness::generate(const HermitianStabilizer& H,
                                          std::vector<StabilizerElement> generators,
                                          std::size_t cap) {
    const Field& F = H.field();
    std::set<std::array<std::uint64_t, 3>> keys;
    std::vector<StabilizerElement> out{H.identity()};
    keys.insert(key_of(F, out[0]));
    std::vector<StabilizerElement> frontier = out;
    while (!frontier.empty()) {
        std::vector<StabilizerElement> next;
        for (const auto& cur : frontier) {
            for (const auto& g : generators) {
                StabilizerElement prod = H.compose(cur, g);
                if (keys.insert(key_of(F, prod)).second) {
                    if (out.size() >= cap)
                        throw BudgetExceededError("subgroup closure exceeds cap");
                    out.push_back(prod);
                    next.push_back(prod);
                }
            }
        }
        frontier = std::move(next);
    }
    SubgroupWitness w;
    w.elements_ = std::move(out);
    return w;
}

RamificationProfile ramification_profile(const HermitianStabilizer& H,
                                         const SubgroupWitness& G) {
    RamificationProfile prof;
    prof.Q = H.Q();
    for (const auto& s : G.elements()) {
        if (s.is_identity()) continue;
        bump(prof, H.artin_formula(s));
    }
    std::uint64_t lo = prof.v() * (H.Q() + 1);
    if (!(lo <= prof.deg_r() && prof.deg_r() <= lo + 3 * prof.u() + prof.v()))
        throw InconsistencyError("profile violates the two-sided ramification bound");
    return prof;
}

RamificationProfile ramification_profile_matrices(const HermitianStabilizer& H,
                                                  const std::vector<Mat3>& group) {
    RamificationProfile prof;
    prof.Q = H.Q();
    Mat3 id = mat_identity(H.field());
    for (const Mat3& m : group) {
        if (mat_proportional(m, id)) continue;
        bump(prof, classify_general(H, m).artin);
    }
    return prof;
}

std::uint64_t quotient_genus_for(std::uint64_t Q, std::uint64_t d, std::uint64_t deg_r) {
    std::int64_t lhs = static_cast<std::int64_t>((Q - 2) * (Q + 1)) -
                       static_cast<std::int64_t>(deg_r);
    if (lhs % static_cast<std::int64_t>(d) != 0)
        throw InconsistencyError("ramification degree incompatible with the group order");
    std::int64_t two_g_minus_2 = lhs / static_cast<std::int64_t>(d);
    if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2)
        throw InconsistencyError("quotient genus is not a non-negative integer");
    return static_cast<std::uint64_t>(two_g_minus_2 / 2 + 1);
}

std::uint64_t quotient_genus(const HermitianStabilizer& H, const SubgroupWitness& G) {
    RamificationProfile prof = ramification_profile(H, G);
    return quotient_genus_for(H.Q(), G.order(), prof.deg_r());
}

std::uint64_t gsx_genus(std::uint64_t Q, std::uint64_t d) {
    if (d == 0 || Q % d != 0) throw InvalidArgumentError("d must divide Q");
    std::uint64_t qd = Q / d;
    std::int64_t two_g_minus_2 =
        static_cast<std::int64_t>((qd - 1) * (Q + 1)) - static_cast<std::int64_t>(qd + 1);
    if (two_g_minus_2 % 2 != 0) throw InconsistencyError("sharp genus parity");
    return static_cast<std::uint64_t>(two_g_minus_2 / 2 + 1);
}

std::vector<std::array<std::uint64_t, 6>> profile_solutions(std::uint64_t Q,
                                                            std::int64_t genus,
                                                            std::uint64_t d,
                                                            ProfileOptions opts,
                                                            std::size_t max_results) {
    std::vector<std::array<std::uint64_t, 6>> out;
    std::int64_t need = static_cast<std::int64_t>((Q - 2) * (Q + 1)) -
                        static_cast<std::int64_t>(d) * (2 * genus - 2);
    if (need < 0 || d == 0) return out;
    const std::uint64_t deg_r = static_cast<std::uint64_t>(need);
    const std::uint64_t count = d - 1;

    for (std::uint64_t n5 = 0; n5 * (Q + 2) <= deg_r && n5 <= count; ++n5) {
        for (std::uint64_t n4 = 0; n4 * (Q + 1) + n5 * (Q + 2) <= deg_r && n4 + n5 <= count;
             ++n4) {
            std::uint64_t r = deg_r - n4 * (Q + 1) - n5 * (Q + 2);  // tame part
            std::uint64_t s = count - n4 - n5;                      // tame slots
            for (std::uint64_t n3 = 0; 3 * n3 <= r && n3 <= s; ++n3) {
                for (std::uint64_t n2 = 0; 3 * n3 + 2 * n2 <= r && n3 + n2 <= s; ++n2) {
                    std::uint64_t n1 = r - 3 * n3 - 2 * n2;
                    if (n1 + n2 + n3 > s) continue;
                    std::uint64_t n0 = s - n1 - n2 - n3;
                    if (opts.stabilizer_only && n0 != 0) continue;
                    out.push_back({n0, n1, n2, n3, n4, n5});
                    if (out.size() > max_results)
                        throw BudgetExceededError("profile enumeration exceeds cap");
                }
            }
        }
    }
    return out;
}

bool profile_exists(std::uint64_t Q, std::int64_t genus, std::uint64_t d,
                    ProfileOptions opts) {
    std::int64_t need = static_cast<std::int64_t>((Q - 2) * (Q + 1)) -
                        static_cast<std::int64_t>(d) * (2 * genus - 2);
    if (need < 0 || d == 0) return false;
    const std::uint64_t deg_r = static_cast<std::uint64_t>(need);
    const std::uint64_t count = d - 1;
    for (std::uint64_t n5 = 0; n5 * (Q + 2) <= deg_r && n5 <= count; ++n5) {
        for (std::uint64_t n4 = 0; n4 * (Q + 1) + n5 * (Q + 2) <= deg_r && n4 + n5 <= count;
             ++n4) {
            std::uint64_t r = deg_r - n4 * (Q + 1) - n5 * (Q + 2);
            std::uint64_t s = count - n4 - n5;
            // some (n1, n2, n3) fills r over s slots iff r <= 3s; with
            // stabilizer_only the slots must be used exactly, still r <= 3s
            // suffices because values 1,2,3 tile any such r
            if (r > 3 * s) continue;
            if (opts.stabilizer_only) {
                // need n1+n2+n3 == s with n1+2n2+3n3 == r, so r >= s as well
                if (r < s) continue;
            }
            return true;
        }
    }
    return false;
}

}  // namespace maxcurves
