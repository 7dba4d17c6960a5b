#include "maxcurves/fields.hpp"

#include <algorithm>

#include "maxcurves/util.hpp"

namespace maxcurves {

namespace {

// Dense univariate polynomials over F_p, constant term first, trimmed.
using Poly = std::vector<Residue>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        r[i] = static_cast<Residue>((av + p - bv) % p);
    }
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    Poly r(acc.begin(), acc.end());
    trim(r);
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0 mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return static_cast<std::uint32_t>((t % p + p) % p);
}

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (degree(a) >= degree(b)) {
        std::uint64_t coef = (static_cast<std::uint64_t>(a.back()) * lead_inv) % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = (coef * b[i]) % p;
            a[shift + i] = static_cast<Residue>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly result{1};
    Poly b = poly_rem(base, f, p);
    while (e > 0) {
        if (e & 1) result = poly_rem(poly_mul(result, b, p), f, p);
        b = poly_rem(poly_mul(b, b, p), f, p);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<Residue>& poly) {
    if (!is_prime(p)) throw InvalidArgumentError("characteristic must be prime");
    Poly f = poly;
    trim(f);
    int m = degree(f);
    if (m < 1) return false;
    if (m == 1) return true;

    // f is irreducible over F_p iff x^{p^m} == x (mod f) and, for every prime
    // divisor l of m, gcd(x^{p^{m/l}} - x, f) is constant.
    Poly x{0, 1};
    std::vector<Poly> frob(m + 1);  // frob[j] = x^{p^j} mod f
    frob[0] = x;
    for (int j = 1; j <= m; ++j) frob[j] = poly_powmod(frob[j - 1], p, f, p);
    if (frob[m] != poly_rem(x, f, p)) return false;
    for (std::uint32_t l : prime_divisors(static_cast<std::uint32_t>(m))) {
        Poly g = poly_gcd(poly_sub(frob[m / l], x, p), f, p);
        if (degree(g) > 0) return false;
    }
    return true;
}

std::vector<Residue> find_irreducible(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw InvalidArgumentError("characteristic must be prime");
    if (m < 1) throw InvalidArgumentError("extension degree must be >= 1");
    std::uint64_t count = ipow(p, m);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // idx encodes (c_0, ..., c_{m-1}) with the constant term as the most
        // significant digit, so ascending idx is ascending lexicographic
        // order compared from the constant term upward.
        std::vector<Residue> f(m + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint64_t digit_base = ipow(p, m - 1 - i);
            f[i] = static_cast<Residue>(rest / digit_base);
            rest %= digit_base;
        }
        f[m] = 1;
        if (is_irreducible(p, f)) return f;
    }
    throw InconsistencyError("no irreducible polynomial found");  // unreachable
}

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint32_t p, std::uint32_t m) : Field(p, find_irreducible(p, m)) {}

Field::Field(std::uint32_t p, std::vector<Residue> modulus) {
    if (!is_prime(p)) throw InvalidArgumentError("characteristic must be prime");
    if (modulus.size() < 2) throw InvalidArgumentError("modulus must have degree >= 1");
    for (Residue c : modulus)
        if (c >= p) throw InvalidArgumentError("modulus coefficient out of range");
    if (modulus.back() != 1) throw InvalidArgumentError("modulus must be monic");
    if (!is_irreducible(p, modulus)) throw InvalidArgumentError("modulus is reducible");
    spec_.p = p;
    spec_.m = static_cast<std::uint32_t>(modulus.size()) - 1;
    spec_.modulus = std::move(modulus);
    size_ = ipow(p, spec_.m);
}

Elem Field::zero() const { return Elem(this, std::vector<Residue>(spec_.m, 0)); }

Elem Field::one() const { return from_int(1); }

Elem Field::from_int(std::uint64_t v) const {
    std::vector<Residue> c(spec_.m, 0);
    c[0] = static_cast<Residue>(v % spec_.p);
    return Elem(this, std::move(c));
}

Elem Field::from_coeffs(std::vector<Residue> c) const {
    if (c.size() > spec_.m) throw InvalidArgumentError("too many coefficients");
    c.resize(spec_.m, 0);
    for (Residue& x : c) x %= spec_.p;
    return Elem(this, std::move(c));
}

Elem Field::from_index(std::uint64_t idx) const {
    if (idx >= size_) throw InvalidArgumentError("element index out of range");
    std::vector<Residue> c(spec_.m, 0);
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        c[i] = static_cast<Residue>(idx % spec_.p);
        idx /= spec_.p;
    }
    return Elem(this, std::move(c));
}

std::uint64_t Field::index(const Elem& v) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = spec_.m; i-- > 0;) idx = idx * spec_.p + v.c_[i];
    return idx;
}

Field::Range Field::all() const { return Range(this); }

Elem Field::gen() const {
    if (spec_.m == 1) {
        // x == -modulus[0] in the prime field
        std::uint32_t c0 = spec_.modulus[0];
        return from_int((spec_.p - c0) % spec_.p);
    }
    std::vector<Residue> c(spec_.m, 0);
    c[1] = 1;
    return Elem(this, std::move(c));
}

void Field::check_same(const Elem& a, const Elem& b) const {
    if (a.f_ == b.f_) return;
    if (a.f_ == nullptr || b.f_ == nullptr || !(a.f_->spec_ == b.f_->spec_))
        throw FieldMismatchError("operands belong to different fields");
}

std::vector<Residue> Field::mul_impl(const std::vector<Residue>& a,
                                     const std::vector<Residue>& b) const {
    const std::uint32_t p = spec_.p, m = spec_.m;
    std::vector<std::uint64_t> acc(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    // reduce x^{m+k} by the monic modulus, top down
    for (std::uint32_t i = 2 * m - 2; i >= m; --i) {
        std::uint64_t t = acc[i];
        if (t != 0) {
            acc[i] = 0;
            for (std::uint32_t j = 0; j < m; ++j) {
                std::uint64_t sub = (t * spec_.modulus[j]) % p;
                acc[i - m + j] = (acc[i - m + j] + p - sub) % p;
            }
        }
        if (i == m) break;
    }
    std::vector<Residue> r(m);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = static_cast<Residue>(acc[i]);
    return r;
}

bool Field::in_subfield(const Elem& v, std::uint32_t s) const {
    if (s == 0 || spec_.m % s != 0) throw InvalidArgumentError("subfield degree must divide m");
    return v.pow(ipow(spec_.p, s)) == v;
}

Elem Field::trace_to(const Elem& v, std::uint32_t s) const {
    if (s == 0 || spec_.m % s != 0) throw InvalidArgumentError("subfield degree must divide m");
    std::uint64_t q = ipow(spec_.p, s);
    Elem acc = v, t = v;
    for (std::uint32_t i = 1; i < spec_.m / s; ++i) {
        t = t.pow(q);
        acc = acc + t;
    }
    return acc;
}

std::uint64_t Field::half_order() const {
    if (spec_.m % 2 != 0)
        throw InvalidArgumentError("quadratic-extension maps need even extension degree");
    return ipow(spec_.p, spec_.m / 2);
}

Elem Field::rel_trace(const Elem& v) const { return v.pow(half_order()) + v; }

Elem Field::rel_norm(const Elem& v) const { return v.pow(half_order() + 1); }

// ---------------------------------------------------------------------------
// Elem

bool Elem::is_zero() const {
    for (Residue x : c_)
        if (x != 0) return false;
    return true;
}

bool Elem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Elem::operator==(const Elem& o) const {
    f_->check_same(*this, o);
    return c_ == o.c_;
}

Elem Elem::operator+(const Elem& o) const {
    f_->check_same(*this, o);
    const std::uint32_t p = f_->p();
    std::vector<Residue> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % p;
    return Elem(f_, std::move(r));
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator-() const {
    const std::uint32_t p = f_->p();
    std::vector<Residue> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (p - c_[i]) % p;
    return Elem(f_, std::move(r));
}

Elem Elem::operator*(const Elem& o) const {
    f_->check_same(*this, o);
    return Elem(f_, f_->mul_impl(c_, o.c_));
}

Elem Elem::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return pow(f_->size() - 2);
}

Elem Elem::pow(std::uint64_t e) const {
    Elem result = f_->one();
    Elem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Elem Elem::frobenius(std::uint64_t r) const {
    std::uint64_t t = r;
    if (t == 0) throw InvalidArgumentError("frobenius exponent must be a power of p");
    while (t > 1) {
        if (t % f_->p() != 0)
            throw InvalidArgumentError("frobenius exponent must be a power of p");
        t /= f_->p();
    }
    return pow(r);
}

}  // namespace maxcurves
