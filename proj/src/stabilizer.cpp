#include "maxcurves/stabilizer.hpp"

#include <thread>

#include "maxcurves/util.hpp"

namespace maxcurves {

const char* to_string(ArtinCase c) {
    switch (c) {
        case ArtinCase::MixedOrder: return "a!=1,p-divides-order";
        case ArtinCase::Torus: return "a!=1,order-divides-Q+1";
        case ArtinCase::TameGeneric: return "a!=1,generic";
        case ArtinCase::Shear: return "a=1,b!=0";
        case ArtinCase::Translation: return "a=1,b=0,c!=0";
        case ArtinCase::DegreeThree: return "degree-three-orbit";
        case ArtinCase::FixedPointFree: return "fixed-point-free";
    }
    return "?";
}

HermitianStabilizer::HermitianStabilizer(std::uint64_t Q, std::uint32_t ambient) {
    auto pp = prime_power(Q);
    if (!pp) throw InvalidArgumentError("Q must be a prime power >= 2");
    if (ambient < 1) throw InvalidArgumentError("ambient multiplier must be >= 1");
    auto [p, e] = *pp;
    q_ = Q;
    s2_ = 2 * e;
    ambient_ = ambient;
    field_ = std::make_unique<Field>(static_cast<std::uint32_t>(p), s2_ * ambient);
    if (field_->size() > (std::uint64_t(1) << 20))
        throw BudgetExceededError("coordinate field exceeds the enumeration budget");

    // the F_{Q^2} subfield, by scanning the ambient field
    for (std::uint64_t i = 0; i < field_->size(); ++i) {
        Elem v = field_->from_index(i);
        if (field_->in_subfield(v, s2_)) base_.push_back(v);
    }
    if (base_.size() != Q * Q) throw InconsistencyError("subfield size");

    // fibers of c -> c^Q + c restricted to F_{Q^2}
    fibers_.resize(field_->size());
    for (const Elem& c : base_) {
        Elem w = c.pow(q_) + c;
        fibers_[field_->index(w)].push_back(c);
    }

    // affine rational points: for y in F_{Q^2}, the x with x^Q + x = y^{Q+1}
    for (const Elem& y : base_) {
        Elem w = y.pow(q_ + 1);
        for (const Elem& x : fibers_[field_->index(w)]) points_.emplace_back(x, y);
    }
    if (points_.size() != Q * Q * Q) throw InconsistencyError("rational point count");
}

bool HermitianStabilizer::in_base(const Elem& v) const { return field_->in_subfield(v, s2_); }

StabilizerElement HermitianStabilizer::identity() const {
    return {field_->one(), field_->zero(), field_->zero()};
}

StabilizerElement HermitianStabilizer::make(Elem a, Elem b, Elem c) const {
    if (!field_->same_as(a.field()) || !field_->same_as(b.field()) ||
        !field_->same_as(c.field()))
        throw FieldMismatchError("stabilizer element components from a foreign field");
    if (a.is_zero()) throw InvalidArgumentError("a must be nonzero");
    if (!in_base(a) || !in_base(b) || !in_base(c))
        throw InvalidArgumentError("components must lie in F_{Q^2}");
    if (c.pow(q_) + c != b.pow(q_ + 1))
        throw InvalidArgumentError("membership constraint c^Q + c = b^{Q+1} violated");
    return {std::move(a), std::move(b), std::move(c)};
}

const std::vector<Elem>& HermitianStabilizer::trace_fiber(const Elem& w) const {
    const auto& fiber = fibers_[field_->index(w)];
    if (fiber.empty()) throw InvalidArgumentError("value is not a relative trace");
    return fiber;
}

StabilizerElement HermitianStabilizer::compose(const StabilizerElement& s1,
                                               const StabilizerElement& s2) const {
    // substitute the map of s2 into the map of s1
    Elem a = s1.a * s2.a;
    Elem b = s1.a * s2.b + s1.b;
    Elem c = s1.c + s1.a.pow(q_ + 1) * s2.c + s1.a * s1.b.pow(q_) * s2.b;
    return {std::move(a), std::move(b), std::move(c)};
}

StabilizerElement HermitianStabilizer::inverse(const StabilizerElement& s) const {
    Elem ai = s.a.inv();
    Elem b = -(ai * s.b);
    Elem c = -(ai.pow(q_ + 1) * s.c + ai * b.pow(q_) * s.b);
    return {std::move(ai), std::move(b), std::move(c)};
}

StabilizerElement HermitianStabilizer::power(const StabilizerElement& s, std::uint64_t e) const {
    StabilizerElement acc = identity();
    StabilizerElement base = s;
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t HermitianStabilizer::element_order(const StabilizerElement& s) const {
    // order of the semisimple part a, then the order of the leftover element
    // of the (normal) group {a = 1}, which is p, or 4 for p = 2 with b != 0
    std::uint64_t ord_a = 1;
    Elem t = s.a;
    while (!t.is_one()) {
        t = t * s.a;
        ++ord_a;
        if (ord_a > q_ * q_) throw InconsistencyError("runaway multiplicative order");
    }
    StabilizerElement w = power(s, ord_a);
    std::uint64_t wild;
    if (w.is_identity())
        wild = 1;
    else if (p() == 2 && !w.b.is_zero())
        wild = 4;
    else
        wild = p();
    return ord_a * wild;
}

std::vector<StabilizerElement> HermitianStabilizer::enumerate(std::uint64_t max_elements) const {
    std::vector<StabilizerElement> out;
    out.reserve(order());
    for_each([&](const StabilizerElement& s) { out.push_back(s); }, max_elements);
    return out;
}

ArtinValue HermitianStabilizer::artin_formula(const StabilizerElement& s) const {
    if (s.is_identity())
        throw InvalidArgumentError("artin value is undefined for the identity");
    if (s.a.is_one()) {
        if (!s.b.is_zero()) return {2, ArtinCase::Shear};
        return {q_ + 2, ArtinCase::Translation};
    }
    std::uint64_t ord = element_order(s);
    if (ord % p() == 0) return {1, ArtinCase::MixedOrder};
    if ((q_ + 1) % ord == 0) return {q_ + 1, ArtinCase::Torus};
    return {2, ArtinCase::TameGeneric};
}

std::uint64_t HermitianStabilizer::artin_fixed_point_count(const StabilizerElement& s) const {
    if (s.is_identity())
        throw InvalidArgumentError("artin value is undefined for the identity");
    if (s.a.is_one())
        throw InvalidArgumentError("fixed-point oracle requires a != 1; use the wild oracle");
    Elem norm_a = s.a.pow(q_ + 1);
    Elem abq = s.a * s.b.pow(q_);
    std::uint64_t count = 1;  // the point at infinity
    for (const auto& [x, y] : points_) {
        if (s.a * y + s.b == y && norm_a * x + abq * y + s.c == x) ++count;
    }
    return count;
}

std::uint64_t HermitianStabilizer::artin_wild_valuation(const StabilizerElement& s) const {
    if (s.is_identity())
        throw InvalidArgumentError("artin value is undefined for the identity");
    if (!s.a.is_one()) throw InvalidArgumentError("valuation oracle requires a = 1");
    const std::int64_t Q = static_cast<std::int64_t>(q_);
    if (!(-2 * Q < -(Q + 1) && -(Q + 1) < -Q))
        throw InconsistencyError("monomial pole orders are not distinct");
    std::int64_t v;
    if (!s.b.is_zero())
        v = -2 * Q;  // the y^2 monomial dominates; bx sits at -(Q+1)
    else
        v = -Q;      // only -cy remains
    return static_cast<std::uint64_t>(v + 2 * (Q + 1));
}

std::map<std::uint64_t, std::uint64_t> HermitianStabilizer::artin_census(unsigned workers) const {
    if (order() > (std::uint64_t(1) << 20))
        throw BudgetExceededError("stabilizer census exceeds budget");
    std::vector<Elem> units;
    for (const Elem& a : base_)
        if (!a.is_zero()) units.push_back(a);

    auto tally_range = [&](std::size_t lo, std::size_t hi,
                           std::map<std::uint64_t, std::uint64_t>& out) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (const Elem& b : base_) {
                for (const Elem& c : fibers_[field_->index(b.pow(q_ + 1))]) {
                    StabilizerElement s{units[i], b, c};
                    if (s.is_identity()) continue;
                    ++out[artin_formula(s).value];
                }
            }
        }
    };

    if (workers <= 1) {
        std::map<std::uint64_t, std::uint64_t> census;
        tally_range(0, units.size(), census);
        return census;
    }
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = units.size() * w / workers, hi = units.size() * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] { tally_range(lo, hi, partial[w]); });
    }
    for (auto& t : pool) t.join();
    std::map<std::uint64_t, std::uint64_t> census;
    for (const auto& part : partial)
        for (auto [k, v] : part) census[k] += v;
    return census;
}

const std::vector<std::pair<Elem, Elem>>& HermitianStabilizer::extension_curve_points() const {
    if (ambient_ < 2) throw InvalidArgumentError("extension scan needs ambient > 1");
    if (!ext_points_.empty()) return ext_points_;
    // fibers of x -> x^Q + x over the whole ambient field
    std::vector<std::vector<Elem>> fib(field_->size());
    for (std::uint64_t i = 0; i < field_->size(); ++i) {
        Elem x = field_->from_index(i);
        fib[field_->index(x.pow(q_) + x)].push_back(x);
    }
    for (std::uint64_t i = 0; i < field_->size(); ++i) {
        Elem y = field_->from_index(i);
        for (const Elem& x : fib[field_->index(y.pow(q_ + 1))]) ext_points_.emplace_back(x, y);
    }
    return ext_points_;
}

// ---------------------------------------------------------------------------
// matrices

Mat3 mat_identity(const Field& F) {
    Mat3 m{{F.one(), F.zero(), F.zero(), F.zero(), F.one(), F.zero(), F.zero(), F.zero(),
            F.one()}};
    return m;
}

Mat3 mat_mul(const Mat3& A, const Mat3& B) {
    const Field& F = A.e[0].field();
    Mat3 r{{F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero(),
            F.zero()}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem acc = F.zero();
            for (int k = 0; k < 3; ++k) acc = acc + A.at(i, k) * B.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

Mat3 mat_inverse(const Mat3& A) {
    auto det2 = [&](int r0, int c0, int r1, int c1) {
        return A.at(r0, c0) * A.at(r1, c1) - A.at(r0, c1) * A.at(r1, c0);
    };
    Elem det = A.at(0, 0) * det2(1, 1, 2, 2) - A.at(0, 1) * det2(1, 0, 2, 2) +
               A.at(0, 2) * det2(1, 0, 2, 1);
    if (det.is_zero()) throw InvalidArgumentError("singular matrix");
    Elem di = det.inv();
    Mat3 r = A;
    // adjugate transpose
    r.at(0, 0) = det2(1, 1, 2, 2) * di;
    r.at(0, 1) = (-det2(0, 1, 2, 2)) * di;
    r.at(0, 2) = det2(0, 1, 1, 2) * di;
    r.at(1, 0) = (-det2(1, 0, 2, 2)) * di;
    r.at(1, 1) = det2(0, 0, 2, 2) * di;
    r.at(1, 2) = (-det2(0, 0, 1, 2)) * di;
    r.at(2, 0) = det2(1, 0, 2, 1) * di;
    r.at(2, 1) = (-det2(0, 0, 2, 1)) * di;
    r.at(2, 2) = det2(0, 0, 1, 1) * di;
    return r;
}

bool mat_proportional(const Mat3& A, const Mat3& B) {
    const Field& F = A.e[0].field();
    // find a reference position with both entries nonzero
    int ref = -1;
    for (int i = 0; i < 9; ++i) {
        bool az = A.e[i].is_zero(), bz = B.e[i].is_zero();
        if (az != bz) return false;
        if (!az && ref < 0) ref = i;
    }
    if (ref < 0) return true;  // both zero matrices
    Elem lam = B.e[ref] * A.e[ref].inv();
    for (int i = 0; i < 9; ++i)
        if (!(lam * A.e[i] == B.e[i])) return false;
    (void)F;
    return true;
}

Mat3 to_matrix(const HermitianStabilizer& H, const StabilizerElement& s) {
    const Field& F = H.field();
    std::uint64_t Q = H.Q();
    Mat3 m{{s.a.pow(Q + 1), s.a * s.b.pow(Q), s.c, F.zero(), s.a, s.b, F.zero(), F.zero(),
            F.one()}};
    return m;
}

Mat3 swap_infinity(const Field& F) {
    Mat3 m{{F.zero(), F.zero(), F.one(), F.zero(), F.one(), F.zero(), F.one(), F.zero(),
            F.zero()}};
    return m;
}

namespace {

Mat3 gram(const Field& F) {
    Mat3 g{{F.zero(), F.zero(), F.one(), F.zero(), -F.one(), F.zero(), F.one(), F.zero(),
            F.zero()}};
    return g;
}

Mat3 mat_frob(const Mat3& A, std::uint64_t r) {
    Mat3 out = A;
    for (int i = 0; i < 9; ++i) out.e[i] = A.e[i].pow(r);
    return out;
}

Mat3 mat_transpose(const Mat3& A) {
    Mat3 out = A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.at(i, j) = A.at(j, i);
    return out;
}

std::array<Elem, 3> mat_apply(const Mat3& M, const std::array<Elem, 3>& v) {
    const Field& F = M.e[0].field();
    std::array<Elem, 3> out{F.zero(), F.zero(), F.zero()};
    for (int i = 0; i < 3; ++i) {
        Elem acc = F.zero();
        for (int k = 0; k < 3; ++k) acc = acc + M.at(i, k) * v[k];
        out[i] = acc;
    }
    return out;
}

bool vec_proportional(const std::array<Elem, 3>& u, const std::array<Elem, 3>& v) {
    int ref = -1;
    for (int i = 0; i < 3; ++i) {
        bool uz = u[i].is_zero(), vz = v[i].is_zero();
        if (uz != vz) return false;
        if (!uz && ref < 0) ref = i;
    }
    if (ref < 0) return true;
    Elem lam = v[ref] * u[ref].inv();
    for (int i = 0; i < 3; ++i)
        if (!(lam * u[i] == v[i])) return false;
    return true;
}

}  // namespace

bool preserves_hermitian_form(const HermitianStabilizer& H, const Mat3& M) {
    const Field& F = H.field();
    Mat3 t = mat_mul(mat_mul(mat_transpose(M), gram(F)), mat_frob(M, H.Q()));
    Elem lam = t.at(0, 2);
    if (lam.is_zero()) return false;
    return mat_proportional(t, gram(F));
}

std::optional<StabilizerElement> stabilizer_from_matrix(const HermitianStabilizer& H,
                                                        const Mat3& M) {
    if (!M.at(1, 0).is_zero() || !M.at(2, 0).is_zero() || !M.at(2, 1).is_zero())
        return std::nullopt;
    if (M.at(2, 2).is_zero()) return std::nullopt;
    Elem d = M.at(2, 2).inv();
    Elem a = M.at(1, 1) * d;
    Elem b = M.at(1, 2) * d;
    Elem c = M.at(0, 2) * d;
    if (a.is_zero()) return std::nullopt;
    std::uint64_t Q = H.Q();
    if (!(M.at(0, 0) * d == a.pow(Q + 1)) || !(M.at(0, 1) * d == a * b.pow(Q)))
        return std::nullopt;
    if (!(c.pow(Q) + c == b.pow(Q + 1))) return std::nullopt;
    if (!H.in_base(a) || !H.in_base(b) || !H.in_base(c)) return std::nullopt;
    return StabilizerElement{a, b, c};
}

std::uint64_t projective_order(const HermitianStabilizer& H, const Mat3& M,
                               std::uint64_t bound) {
    Mat3 id = mat_identity(H.field());
    Mat3 acc = M;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (mat_proportional(acc, id)) return k;
        acc = mat_mul(acc, M);
    }
    throw BudgetExceededError("projective order exceeds bound");
}

GeneralArtin classify_general(const HermitianStabilizer& H, const Mat3& M) {
    const Field& F = H.field();
    for (const Elem& e : M.e)
        if (!H.in_base(e))
            throw InvalidArgumentError("matrix entries must lie in F_{Q^2}");
    if (!preserves_hermitian_form(H, M))
        throw InvalidArgumentError("matrix does not preserve the Hermitian form");
    if (mat_proportional(M, mat_identity(F)))
        throw InvalidArgumentError("artin value is undefined for the identity coset");

    // degree-one fixed points: the point at infinity, then the affine points
    std::optional<std::array<Elem, 3>> fixed;
    if (M.at(1, 0).is_zero() && M.at(2, 0).is_zero())
        fixed = std::array<Elem, 3>{F.one(), F.zero(), F.zero()};
    if (!fixed) {
        for (const auto& [x, y] : H.curve_points()) {
            std::array<Elem, 3> v{x, y, F.one()};
            if (vec_proportional(v, mat_apply(M, v))) {
                fixed = v;
                break;
            }
        }
    }

    if (fixed) {
        Mat3 conj = M;
        if (!(*fixed)[2].is_zero()) {
            // move the fixed point to the origin, then to infinity
            StabilizerElement t = H.make(F.one(), (*fixed)[1], (*fixed)[0]);
            Mat3 tau = mat_mul(swap_infinity(F), mat_inverse(to_matrix(H, t)));
            conj = mat_mul(mat_mul(tau, M), mat_inverse(tau));
        }
        auto s = stabilizer_from_matrix(H, conj);
        if (!s) throw InconsistencyError("conjugated matrix is not in stabilizer form");
        GeneralArtin out;
        out.artin = H.artin_formula(*s);
        out.fixed_degree = 1;
        out.conjugated = *s;
        return out;
    }

    // no rational fixed point: look for a degree-three orbit over F_{Q^6}
    if (F.m() % (3 * H.subfield_degree()) != 0)
        throw InvalidArgumentError("degree-three scan needs the cubic extension in the field");
    std::vector<std::pair<Elem, Elem>> fixed_ext;
    for (const auto& [x, y] : H.extension_curve_points()) {
        std::array<Elem, 3> v{x, y, F.one()};
        if (vec_proportional(v, mat_apply(M, v))) fixed_ext.emplace_back(x, y);
    }
    if (fixed_ext.empty()) return {{0, ArtinCase::FixedPointFree}, 0, std::nullopt};

    std::uint64_t q2 = H.Q() * H.Q();
    for (const auto& [x, y] : fixed_ext)
        if (H.in_base(x) && H.in_base(y))
            throw InconsistencyError("rational point missed by the degree-one scan");
    if (fixed_ext.size() != 3)
        throw InconsistencyError("fixed points do not form a single degree-three orbit");
    // the three fixed points must be one Frobenius orbit
    auto contains = [&](const Elem& x, const Elem& y) {
        for (const auto& [u, v] : fixed_ext)
            if (u == x && v == y) return true;
        return false;
    };
    Elem fx = fixed_ext[0].first, fy = fixed_ext[0].second;
    Elem g1x = fx.pow(q2), g1y = fy.pow(q2);
    Elem g2x = g1x.pow(q2), g2y = g1y.pow(q2);
    bool distinct = !(g1x == fx && g1y == fy);
    if (!distinct || !contains(g1x, g1y) || !contains(g2x, g2y))
        throw InconsistencyError("fixed points do not form a single degree-three orbit");
    return {{3, ArtinCase::DegreeThree}, 3, std::nullopt};
}

}  // namespace maxcurves
