#include "ncq/scalar.hpp"

#include <numeric>
#include <sstream>

#include "ncq/error.hpp"

namespace ncq {

struct FieldMode::Rep {
    FieldKind kind;
    unsigned n = 0;
    unsigned e = 0;
    QPoly phi;
    std::vector<QPoly> zeta_pows;  // x^i mod Phi_n, i = 0..n-1
};

static constexpr unsigned kMaxConductor = 4096;

FieldMode FieldMode::cyclotomic(unsigned n, unsigned e) {
    if (n == 0 || n > kMaxConductor) fail(Err::BadParameter, "conductor out of range");
    e %= n;
    if (e == 0) fail(Err::BadParameter, "alpha = 1 is not a valid parameter");
    auto rep = std::make_shared<Rep>();
    rep->kind = FieldKind::Cyclotomic;
    rep->n = n;
    rep->e = e;
    rep->phi = qp::cyclotomic(n);
    rep->zeta_pows.reserve(n);
    QPoly cur = qp::constant(1);
    for (unsigned i = 0; i < n; ++i) {
        rep->zeta_pows.push_back(cur);
        // multiply by x and reduce
        cur.insert(cur.begin(), Rat(0));
        cur = qp::divmod(cur, rep->phi).second;
    }
    return FieldMode(std::move(rep));
}

FieldMode FieldMode::generic() {
    static std::shared_ptr<const Rep> rep = [] {
        auto r = std::make_shared<Rep>();
        r->kind = FieldKind::Generic;
        return r;
    }();
    return FieldMode(rep);
}

FieldKind FieldMode::kind() const { return rep_->kind; }

unsigned FieldMode::conductor() const {
    if (!is_cyclotomic()) fail(Err::BadParameter, "conductor undefined in generic mode");
    return rep_->n;
}

unsigned FieldMode::exponent() const {
    if (!is_cyclotomic()) fail(Err::BadParameter, "exponent undefined in generic mode");
    return rep_->e;
}

bool FieldMode::operator==(const FieldMode& o) const {
    if (rep_->kind != o.rep_->kind) return false;
    if (rep_->kind == FieldKind::Generic) return true;
    return rep_->n == o.rep_->n && rep_->e == o.rep_->e;
}

std::string FieldMode::str() const {
    if (kind() == FieldKind::Generic) return "generic";
    std::ostringstream os;
    os << "cyclotomic(" << rep_->n << "," << rep_->e << ")";
    return os.str();
}

/******** Scalar ********/

Scalar::Scalar(long v) : num_(qp::constant(Rat(v))), den_(qp::constant(1)) {}

Scalar::Scalar(const Rat& v) : num_(qp::constant(v)), den_(qp::constant(1)) {}

Scalar Scalar::cyclotomic(const FieldMode& m, QPoly residue) {
    if (!m.is_cyclotomic()) fail(Err::BadParameter, "cyclotomic scalar needs cyclotomic mode");
    Scalar s;
    s.mode_ = m;
    s.num_ = qp::divmod(residue, m.rep().phi).second;
    s.den_ = qp::constant(1);
    return s;
}

Scalar Scalar::rational_function(const FieldMode& m, QPoly num, QPoly den) {
    if (m.is_cyclotomic()) fail(Err::BadParameter, "rational function needs generic mode");
    if (qp::is_zero(den)) fail(Err::BadParameter, "zero denominator");
    Scalar s;
    s.mode_ = m;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.reduce_fraction();
    return s;
}

void Scalar::reduce_fraction() {
    if (qp::is_zero(num_)) {
        den_ = qp::constant(1);
        return;
    }
    QPoly g = qp::gcd(num_, den_);
    if (!qp::is_one(g)) {
        num_ = qp::divexact(num_, g);
        den_ = qp::divexact(den_, g);
    }
    Rat lead = den_.back();
    if (lead != 1) {
        for (auto& c : num_) c /= lead;
        for (auto& c : den_) c /= lead;
    }
}

const FieldMode& Scalar::mode() const {
    if (!mode_) fail(Err::BadParameter, "literal scalar has no mode");
    return *mode_;
}

Scalar Scalar::promote(const FieldMode& m) const {
    if (mode_) {
        if (*mode_ != m) fail(Err::BadParameter, "mixed field modes");
        return *this;
    }
    Scalar s;
    s.mode_ = m;
    s.num_ = num_;
    s.den_ = den_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_literal() && o.is_literal()) {
        Scalar r;
        r.num_ = qp::add(num_, o.num_);
        r.den_ = qp::constant(1);
        return r;
    }
    const FieldMode& m = mode_ ? *mode_ : o.mode();
    Scalar a = promote(m), b = o.promote(m);
    Scalar r;
    r.mode_ = m;
    if (m.is_cyclotomic()) {
        r.num_ = qp::add(a.num_, b.num_);
        r.den_ = qp::constant(1);
    } else {
        r.num_ = qp::add(qp::mul(a.num_, b.den_), qp::mul(b.num_, a.den_));
        r.den_ = qp::mul(a.den_, b.den_);
        r.reduce_fraction();
    }
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = qp::neg(r.num_);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_literal() && o.is_literal()) {
        Scalar r;
        r.num_ = qp::mul(num_, o.num_);
        r.den_ = qp::constant(1);
        return r;
    }
    const FieldMode& m = mode_ ? *mode_ : o.mode();
    Scalar a = promote(m), b = o.promote(m);
    Scalar r;
    r.mode_ = m;
    if (m.is_cyclotomic()) {
        r.num_ = qp::divmod(qp::mul(a.num_, b.num_), m.rep().phi).second;
        r.den_ = qp::constant(1);
    } else {
        r.num_ = qp::mul(a.num_, b.num_);
        r.den_ = qp::mul(a.den_, b.den_);
        r.reduce_fraction();
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(Err::BadParameter, "inverse of zero");
    if (is_literal()) {
        Scalar r;
        r.num_ = qp::constant(Rat(1) / num_[0]);
        r.den_ = qp::constant(1);
        return r;
    }
    Scalar r;
    r.mode_ = mode_;
    if (mode_->is_cyclotomic()) {
        auto x = qp::xgcd(num_, mode_->rep().phi);
        if (!qp::is_one(x.g)) fail(Err::BadParameter, "non-invertible residue");
        r.num_ = qp::divmod(x.s, mode_->rep().phi).second;
        r.den_ = qp::constant(1);
    } else {
        r.num_ = den_;
        r.den_ = num_;
        r.reduce_fraction();
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long k) const {
    if (k == 0) {
        Scalar one(1L);
        return mode_ ? one.promote(*mode_) : one;
    }
    if (k < 0) return inverse().pow(-k);
    Scalar base = *this;
    Scalar acc(1L);
    if (mode_) acc = acc.promote(*mode_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::is_zero() const { return qp::is_zero(num_); }

bool Scalar::is_one() const { return qp::is_one(num_) && qp::is_one(den_); }

bool Scalar::is_rational() const { return qp::is_constant(num_) && qp::is_one(den_); }

std::optional<Rat> Scalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return num_.empty() ? Rat(0) : num_[0];
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_literal() && o.is_literal()) return num_ == o.num_;
    const FieldMode& m = mode_ ? *mode_ : o.mode();
    Scalar a = promote(m), b = o.promote(m);
    return a.num_ == b.num_ && a.den_ == b.den_;
}

// integer-coefficient rendering of num/den with positive denominator lead
static std::string fraction_str(const QPoly& num, const QPoly& den) {
    Int l(1);
    for (const auto& c : num) l = lcm(l, Int(c.get_den()));
    for (const auto& c : den) l = lcm(l, Int(c.get_den()));
    std::vector<Int> ni, di;
    Int content(0);
    for (const auto& c : num) {
        Int v = Int(c * Rat(l));
        ni.push_back(v);
        content = gcd(content, v);
    }
    for (const auto& c : den) {
        Int v = Int(c * Rat(l));
        di.push_back(v);
        content = gcd(content, v);
    }
    if (content == 0) content = 1;
    if (di.back() < 0) content = -content;
    QPoly nq, dq;
    for (auto& v : ni) nq.push_back(Rat(v / content));
    for (auto& v : di) dq.push_back(Rat(v / content));
    qp::trim(nq);
    qp::trim(dq);
    std::string ns = qp::to_string(nq, "a");
    std::string ds = qp::to_string(dq, "a");
    size_t dterms = 0;
    for (const auto& c : dq)
        if (c != 0) ++dterms;
    bool dsimple = dterms == 1 && dq.back() == 1;
    std::string out = "(" + ns + ")/";
    out += dsimple ? ds : "(" + ds + ")";
    return out;
}

std::string Scalar::str() const {
    if (is_literal()) return num_.empty() ? "0" : num_[0].get_str();
    if (mode_->is_cyclotomic())
        return qp::to_string(num_, "zeta" + std::to_string(mode_->conductor()));
    if (qp::is_one(den_)) return qp::to_string(num_, "a");
    return fraction_str(num_, den_);
}

/******** mode-level helpers ********/

Scalar alpha(const FieldMode& m) {
    if (m.is_cyclotomic()) return Scalar::cyclotomic(m, m.rep().zeta_pows[m.exponent()]);
    return Scalar::rational_function(m, qp::monomial(1, 1), qp::constant(1));
}

Scalar zeta(const FieldMode& m) {
    if (!m.is_cyclotomic()) fail(Err::BadParameter, "zeta undefined in generic mode");
    return Scalar::cyclotomic(m, m.rep().zeta_pows[1 % m.conductor()]);
}

Scalar alpha_pow(const FieldMode& m, long k) {
    if (m.is_cyclotomic()) {
        long n = m.conductor();
        long idx = ((long)m.exponent() * (k % n)) % n;
        if (idx < 0) idx += n;
        return Scalar::cyclotomic(m, m.rep().zeta_pows[idx]);
    }
    if (k >= 0) return Scalar::rational_function(m, qp::monomial(1, (unsigned)k), qp::constant(1));
    return Scalar::rational_function(m, qp::constant(1), qp::monomial(1, (unsigned)(-k)));
}

Scalar power_sum(const FieldMode& m, long j) {
    if (j < 0) fail(Err::BadParameter, "negative power sum length");
    Scalar acc(0L);
    for (long v = 0; v < j; ++v) acc += alpha_pow(m, 3 * v);
    return acc;
}

ExtOrder order_of_alpha(const FieldMode& m) {
    if (!m.is_cyclotomic()) return ExtOrder::inf();
    unsigned n = m.conductor(), e = m.exponent();
    return ExtOrder::of((long)(n / std::gcd(n, e)));
}

ExtOrder order_of_alpha_cubed(const FieldMode& m) {
    ExtOrder o = order_of_alpha(m);
    if (!o.finite) return o;
    return ExtOrder::of(o.value / std::gcd(o.value, 3L));
}

ExtOrder mult_order(const Scalar& s) {
    if (s.is_zero()) fail(Err::BadParameter, "order of zero");
    if (auto r = s.as_rational()) {
        if (*r == 1) return ExtOrder::of(1);
        if (*r == -1) return ExtOrder::of(2);
        return ExtOrder::inf();
    }
    if (s.is_literal() || !s.mode().is_cyclotomic()) return ExtOrder::inf();
    // torsion units of Q(zeta_n) have order dividing lcm(2, n)
    long bound = 2L * s.mode().conductor();
    Scalar p = s;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_one()) return ExtOrder::of(k);
        p *= s;
    }
    return ExtOrder::inf();
}

}  // namespace ncq
