#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "maxcurves/errors.hpp"

namespace maxcurves {

using Residue = std::uint32_t;

/// Returns the lexicographically smallest monic irreducible polynomial of
/// degree m over F_p, as a coefficient list of length m+1, constant term
/// first, leading coefficient 1. Candidates are compared from the constant
/// term upward, so the result is deterministic across runs.
std::vector<Residue> find_irreducible(std::uint32_t p, std::uint32_t m);

/// Independent irreducibility check for a monic polynomial over F_p given as
/// a constant-first coefficient list.
bool is_irreducible(std::uint32_t p, const std::vector<Residue>& poly);

/// Description of F_{p^m} = F_p[x]/(modulus).
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::vector<Residue> modulus;  // length m+1, constant term first, monic

    bool operator==(const FieldSpec&) const = default;
};

class Field;

/// Element of a finite field, stored as a dense vector of m residues mod p
/// (coefficients of the residue-class polynomial, constant term first).
/// Representation is canonical, so equality is coefficient-wise. Elements
/// keep a pointer to their field; the Field object must outlive them.
class Elem {
public:
    Elem() = default;

    const Field& field() const { return *f_; }
    const std::vector<Residue>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator-() const;
    Elem operator*(const Elem& o) const;

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Elem inv() const;

    /// e-th power by square-and-multiply; pow(0) == 1 for every element,
    /// including zero.
    Elem pow(std::uint64_t e) const;

    /// v^r for r a power of the field characteristic; rejects other r.
    Elem frobenius(std::uint64_t r) const;

private:
    friend class Field;
    Elem(const Field* f, std::vector<Residue> c) : f_(f), c_(std::move(c)) {}

    const Field* f_ = nullptr;
    std::vector<Residue> c_;
};

/// Arithmetic context for F_{p^m}. All operations are pure and the object is
/// immutable after construction, so it can be shared freely across threads.
class Field {
public:
    /// Builds F_{p^m} with modulus find_irreducible(p, m).
    Field(std::uint32_t p, std::uint32_t m);

    /// Builds F_{p^m} with an explicit monic modulus (verified irreducible).
    Field(std::uint32_t p, std::vector<Residue> modulus);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t m() const { return spec_.m; }
    std::uint64_t size() const { return size_; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::uint64_t v) const;  // v mod p as a constant

    /// Canonicalizes a coefficient list (length <= m, entries reduced mod p).
    Elem from_coeffs(std::vector<Residue> c) const;

    /// Bijection between elements and [0, p^m): index = sum c_i p^i.
    Elem from_index(std::uint64_t idx) const;
    std::uint64_t index(const Elem& v) const;

    /// Range over all p^m elements, each exactly once, in index order.
    class Range;
    Range all() const;

    /// The residue class of x (a root of the modulus).
    Elem gen() const;

    /// True when v lies in the subfield F_{p^s}, i.e. v^{p^s} == v. Requires
    /// s | m.
    bool in_subfield(const Elem& v, std::uint32_t s) const;

    /// Relative trace onto F_{p^s}: sum of v^{p^{s i}} for 0 <= i < m/s.
    Elem trace_to(const Elem& v, std::uint32_t s) const;

    // Quadratic-extension maps, available when m is even. With Q = p^{m/2},
    // the field is F_{Q^2} over F_Q and:
    //   rel_trace(v) = v^Q + v,   rel_norm(v) = v^{Q+1},
    // both landing in F_Q.
    std::uint64_t half_order() const;  // Q
    Elem rel_trace(const Elem& v) const;
    Elem rel_norm(const Elem& v) const;

    bool same_as(const Field& other) const { return this == &other || spec_ == other.spec_; }

    class Iterator {
    public:
        using value_type = Elem;
        using difference_type = std::ptrdiff_t;

        Iterator(const Field* f, std::uint64_t i) : f_(f), i_(i) {}
        Elem operator*() const { return f_->from_index(i_); }
        Iterator& operator++() {
            ++i_;
            return *this;
        }
        bool operator==(const Iterator& o) const { return i_ == o.i_; }
        bool operator!=(const Iterator& o) const { return i_ != o.i_; }

    private:
        const Field* f_;
        std::uint64_t i_;
    };

    class Range {
    public:
        explicit Range(const Field* f) : f_(f) {}
        Iterator begin() const { return Iterator(f_, 0); }
        Iterator end() const { return Iterator(f_, f_->size()); }

    private:
        const Field* f_;
    };

private:
    friend class Elem;

    void check_same(const Elem& a, const Elem& b) const;
    std::vector<Residue> mul_impl(const std::vector<Residue>& a,
                                  const std::vector<Residue>& b) const;

    FieldSpec spec_;
    std::uint64_t size_ = 0;
};

}  // namespace maxcurves
