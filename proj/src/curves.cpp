#include "maxcurves/curves.hpp"

#include <thread>
#include <vector>

#include "maxcurves/util.hpp"

namespace maxcurves {

const char* to_string(CurveFamily f) {
    switch (f) {
        case CurveFamily::Hermitian: return "hermitian";
        case CurveFamily::GGK: return "ggk";
        case CurveFamily::Xn: return "xn";
        case CurveFamily::Y: return "yrem";
    }
    return "?";
}

std::uint64_t genus_hermitian(std::uint64_t Q) {
    if (Q < 2 || !prime_power(Q)) throw InvalidArgumentError("Q must be a prime power >= 2");
    return Q * (Q - 1) / 2;
}

namespace {

void check_family_params(std::uint64_t q, std::uint32_t n) {
    if (q < 2 || !prime_power(q)) throw InvalidArgumentError("q must be a prime power >= 2");
    if (n < 3 || n % 2 == 0) throw InvalidArgumentError("n must be odd and >= 3");
}

}  // namespace

std::uint64_t genus_ggk(std::uint64_t q, std::uint32_t n) {
    check_family_params(q, n);
    std::uint64_t qn = ipow(q, n);
    std::uint64_t two_g_minus_2 = (q * q - 1) * (qn + 1) - (q * q * q + 1);
    if (two_g_minus_2 % 2 != 0) throw InconsistencyError("genus formula parity");
    return two_g_minus_2 / 2 + 1;
}

std::uint64_t genus_xn(std::uint64_t q, std::uint32_t n) {
    check_family_params(q, n);
    std::uint64_t qn = ipow(q, n);
    std::uint64_t two_g_minus_2 = (q - 1) * (qn + 1) - (q * q + 1);
    if (two_g_minus_2 % 2 != 0) throw InconsistencyError("genus formula parity");
    return two_g_minus_2 / 2 + 1;
}

std::uint64_t genus_y(std::uint64_t q) {
    if (q < 2 || !prime_power(q)) throw InvalidArgumentError("q must be a prime power >= 2");
    return (q - 1) * (q * q * q - q) / 2;
}

CurveModel make_hermitian(std::uint64_t Q) {
    auto pp = prime_power(Q);
    if (!pp) throw InvalidArgumentError("Q must be a prime power >= 2");
    auto [p, e] = *pp;
    CurveModel m;
    m.family = CurveFamily::Hermitian;
    m.q = Q;
    m.n = 1;
    m.field = std::make_shared<Field>(static_cast<std::uint32_t>(p), 2 * e);
    m.sqrt_size = Q;
    m.genus = genus_hermitian(Q);
    m.n_infinity = 1;
    return m;
}

CurveModel make_ggk(std::uint64_t q, std::uint32_t n) {
    check_family_params(q, n);
    auto [p, e] = *prime_power(q);
    CurveModel m;
    m.family = CurveFamily::GGK;
    m.q = q;
    m.n = n;
    m.field = std::make_shared<Field>(static_cast<std::uint32_t>(p), 2 * n * e);
    m.sqrt_size = ipow(q, n);
    m.genus = genus_ggk(q, n);
    m.n_infinity = 1;
    return m;
}

CurveModel make_xn(std::uint64_t q, std::uint32_t n) {
    check_family_params(q, n);
    auto [p, e] = *prime_power(q);
    CurveModel m;
    m.family = CurveFamily::Xn;
    m.q = q;
    m.n = n;
    m.field = std::make_shared<Field>(static_cast<std::uint32_t>(p), 2 * n * e);
    m.sqrt_size = ipow(q, n);
    m.genus = genus_xn(q, n);
    m.n_infinity = 1;
    return m;
}

CurveModel make_y(std::uint64_t q) {
    auto pp = prime_power(q);
    if (!pp) throw InvalidArgumentError("q must be a prime power >= 2");
    auto [p, e] = *pp;
    CurveModel m;
    m.family = CurveFamily::Y;
    m.q = q;
    m.n = 3;
    m.field = std::make_shared<Field>(static_cast<std::uint32_t>(p), 6 * e);
    m.sqrt_size = q * q * q;
    m.genus = genus_y(q);
    m.n_infinity = 1;
    return m;
}

namespace {

void check_budget(const CurveModel& m, const EnumerationBudget& b, std::uint64_t ops) {
    if (m.field->size() > b.max_field_size)
        throw BudgetExceededError("field size exceeds enumeration budget");
    if (ops > b.max_ops) throw BudgetExceededError("loop count exceeds enumeration budget");
}

/// Sums fn(i) over i in [0, n) with the index range split across workers.
/// Partial sums are combined in worker order, so the result does not depend
/// on scheduling.
template <class Fn>
std::uint64_t parallel_sum(std::uint64_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n < 64) {
        std::uint64_t acc = 0;
        for (std::uint64_t i = 0; i < n; ++i) acc += fn(i);
        return acc;
    }
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
        pool.emplace_back([&partial, w, lo, hi, &fn] {
            std::uint64_t acc = 0;
            for (std::uint64_t i = lo; i < hi; ++i) acc += fn(i);
            partial[w] = acc;
        });
    }
    for (auto& t : pool) t.join();
    std::uint64_t acc = 0;
    for (std::uint64_t s : partial) acc += s;
    return acc;
}

/// Bitmap of the image of an additive polynomial map over the whole field,
/// plus its kernel size. Fibers of such a map have size kernel over the
/// image and are empty elsewhere.
struct AdditiveMapTable {
    std::vector<std::uint8_t> in_image;
    std::uint64_t kernel_size = 0;
    std::uint64_t image_size = 0;
};

template <class Fn>
AdditiveMapTable tabulate_additive_map(const Field& F, Fn&& map) {
    AdditiveMapTable t;
    t.in_image.assign(F.size(), 0);
    for (std::uint64_t i = 0; i < F.size(); ++i) {
        Elem w = map(F.from_index(i));
        std::uint64_t wi = F.index(w);
        if (wi == 0) ++t.kernel_size;
        if (!t.in_image[wi]) {
            t.in_image[wi] = 1;
            ++t.image_size;
        }
    }
    if (t.kernel_size * t.image_size != F.size())
        throw InconsistencyError("tabulated map is not additive");
    return t;
}

std::uint64_t count_hermitian(const CurveModel& m, const EnumerationBudget& b, unsigned workers) {
    const Field& F = *m.field;
    check_budget(m, b, F.size());
    const std::uint64_t Q = m.sqrt_size;
    const std::uint32_t half = F.m() / 2;
    // x^Q + x is the relative trace onto F_Q; each y contributes Q solutions
    // in x exactly when y^{Q+1} lies in F_Q.
    return parallel_sum(F.size(), workers, [&](std::uint64_t i) -> std::uint64_t {
        Elem w = F.rel_norm(F.from_index(i));
        return F.in_subfield(w, half) ? Q : 0;
    });
}

std::uint64_t count_xn(const CurveModel& m, const EnumerationBudget& b, unsigned workers) {
    const Field& F = *m.field;
    check_budget(m, b, F.size());
    auto [p, e] = *prime_power(m.q);
    (void)p;
    const std::uint32_t s2 = 2 * e;           // F_{q^2} inside F_{q^{2n}}
    const std::uint64_t q2 = ipow(m.q, 2);
    const std::uint64_t qn = ipow(m.q, m.n);
    const std::uint64_t zexp = (qn + 1) / (m.q + 1);
    // y^{q^2} - y has kernel F_{q^2}; its image is the kernel of the relative
    // trace onto F_{q^2}.
    return parallel_sum(F.size(), workers, [&](std::uint64_t i) -> std::uint64_t {
        Elem w = F.from_index(i).pow(zexp);
        return F.trace_to(w, s2).is_zero() ? q2 : 0;
    });
}

std::uint64_t count_ggk(const CurveModel& m, const EnumerationBudget& b, unsigned workers) {
    const Field& F = *m.field;
    const std::uint64_t N = F.size();
    check_budget(m, b, N * N);
    const std::uint64_t q = m.q;
    const std::uint64_t q2 = q * q;
    const std::uint64_t qn = ipow(q, m.n);
    const std::uint64_t zexp = (qn + 1) / (q + 1);

    // x-fiber: x^q + x = y^{q+1} has q solutions when the right side lies in
    // the image of x -> x^q + x, none otherwise.
    auto xmap = tabulate_additive_map(F, [&](const Elem& x) { return x.pow(q) + x; });
    if (xmap.kernel_size != q) throw InconsistencyError("x-fiber kernel size");

    std::vector<std::uint64_t> xfiber(N), ylhs(N), zrhs(N);
    for (std::uint64_t i = 0; i < N; ++i) {
        Elem y = F.from_index(i);
        xfiber[i] = xmap.in_image[F.index(y.pow(q + 1))] ? q : 0;
        ylhs[i] = F.index(y.pow(q2) - y);
        zrhs[i] = F.index(y.pow(zexp));  // reused as z^{(q^n+1)/(q+1)}
    }

    // iterate (y, z) pairs; multiply by the x-fiber count
    return parallel_sum(N, workers, [&](std::uint64_t yi) -> std::uint64_t {
        std::uint64_t acc = 0;
        std::uint64_t lhs = ylhs[yi];
        for (std::uint64_t zi = 0; zi < N; ++zi)
            if (lhs == zrhs[zi]) acc += xfiber[yi];
        return acc;
    });
}

std::uint64_t count_y(const CurveModel& m, const EnumerationBudget& b, unsigned workers) {
    const Field& F = *m.field;
    check_budget(m, b, 2 * F.size());
    const std::uint64_t q = m.q;
    auto ymap = tabulate_additive_map(
        F, [&](const Elem& y) { return y.pow(q * q) - y.pow(q) + y; });
    if (ymap.kernel_size != q * q) throw InconsistencyError("y-fiber kernel size");
    const std::uint64_t xexp = q * q - q + 1;
    return parallel_sum(F.size(), workers, [&](std::uint64_t i) -> std::uint64_t {
        Elem w = F.from_index(i).pow(xexp);
        return ymap.in_image[F.index(w)] ? ymap.kernel_size : 0;
    });
}

}  // namespace

std::uint64_t count_affine(const CurveModel& model, const EnumerationBudget& budget,
                           unsigned workers) {
    switch (model.family) {
        case CurveFamily::Hermitian: return count_hermitian(model, budget, workers);
        case CurveFamily::GGK: return count_ggk(model, budget, workers);
        case CurveFamily::Xn: return count_xn(model, budget, workers);
        case CurveFamily::Y: return count_y(model, budget, workers);
    }
    throw InvalidArgumentError("unknown curve family");
}

PointCount check_maximal(const CurveModel& model, const EnumerationBudget& budget,
                         unsigned workers) {
    PointCount pc;
    pc.affine = count_affine(model, budget, workers);
    pc.at_infinity = model.n_infinity;
    pc.total = pc.affine + pc.at_infinity;
    const std::uint64_t s = model.sqrt_size;
    pc.hasse_weil_target = s * s + 1 + 2 * model.genus * s;
    pc.maximal = pc.total == pc.hasse_weil_target;
    return pc;
}

}  // namespace maxcurves
