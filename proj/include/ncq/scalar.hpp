#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ncq/qpoly.hpp"

namespace ncq {

// Order of a group element, possibly infinite.
struct ExtOrder {
    bool finite = false;
    long value = 0;

    static ExtOrder inf() { return {false, 0}; }
    static ExtOrder of(long v) { return {true, v}; }
    bool operator==(const ExtOrder&) const = default;
    std::string str() const { return finite ? std::to_string(value) : "infinite"; }
};

enum class FieldKind { Cyclotomic, Generic };

// Coefficient field for the whole workbench. Two exact modes:
//   Cyclotomic(n, e): Q(zeta_n) with the parameter alpha = zeta_n^e, zeta_n a
//   primitive n-th root of unity represented mod Phi_n.
//   Generic: Q(a), rational functions in the formal parameter alpha = a.
// Construction rejects alpha = 1; algebra presentations impose their own
// sharper constraints on alpha where required.
class FieldMode {
public:
    static FieldMode cyclotomic(unsigned n, unsigned e);
    static FieldMode generic();

    FieldKind kind() const;
    bool is_cyclotomic() const { return kind() == FieldKind::Cyclotomic; }
    unsigned conductor() const;  // n, cyclotomic only
    unsigned exponent() const;   // e mod n, cyclotomic only

    bool operator==(const FieldMode& o) const;
    bool operator!=(const FieldMode& o) const { return !(*this == o); }
    std::string str() const;

    struct Rep;
    const Rep& rep() const { return *rep_; }

private:
    explicit FieldMode(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
    std::shared_ptr<const Rep> rep_;
};

// Exact field element. A scalar is either a plain rational literal (usable in
// any mode), a residue in Q(zeta_n), or a reduced fraction in Q(a). Arithmetic
// promotes literals to the mode of the other operand; mixing two distinct
// modes is a programming error.
class Scalar {
public:
    Scalar() : Scalar(0L) {}
    explicit Scalar(long v);
    explicit Scalar(const Rat& v);

    static Scalar cyclotomic(const FieldMode& m, QPoly residue);
    static Scalar rational_function(const FieldMode& m, QPoly num, QPoly den);

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long k) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // lies in Q (constant in either mode)
    std::optional<Rat> as_rational() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    bool is_literal() const { return !mode_.has_value(); }
    const FieldMode& mode() const;
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

private:
    Scalar promote(const FieldMode& m) const;
    void reduce_fraction();

    std::optional<FieldMode> mode_;  // empty = rational literal
    QPoly num_;
    QPoly den_;  // {1} unless a reduced rational function
};

Scalar alpha(const FieldMode& m);
Scalar zeta(const FieldMode& m);  // cyclotomic only
Scalar alpha_pow(const FieldMode& m, long k);

// sum_{v=0}^{j-1} alpha^{3v}; j = 0 gives 0
Scalar power_sum(const FieldMode& m, long j);

ExtOrder order_of_alpha(const FieldMode& m);
ExtOrder order_of_alpha_cubed(const FieldMode& m);

// multiplicative order of a nonzero scalar
ExtOrder mult_order(const Scalar& s);

// defined in parser.cpp
Scalar parse_scalar(const FieldMode& m, std::string_view text);

}  // namespace ncq
