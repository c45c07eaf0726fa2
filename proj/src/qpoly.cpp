#include "ncq/qpoly.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "ncq/error.hpp"

namespace ncq::qp {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return (int)p.size() - 1; }

bool is_zero(const QPoly& p) { return p.empty(); }

bool is_one(const QPoly& p) { return p.size() == 1 && p[0] == 1; }

bool is_constant(const QPoly& p) { return p.size() <= 1; }

QPoly constant(const Rat& c) {
    if (c == 0) return {};
    return {c};
}

QPoly monomial(const Rat& c, unsigned k) {
    if (c == 0) return {};
    QPoly p(k + 1);
    p[k] = c;
    return p;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly neg(const QPoly& a) {
    QPoly r(a);
    for (auto& c : r) c = -c;
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly mul_rat(const QPoly& a, const Rat& c) {
    if (c == 0) return {};
    QPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) fail(Err::BadParameter, "polynomial division by zero");
    QPoly r(a), q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    const Rat& lead = b.back();
    while (r.size() >= b.size()) {
        Rat c = r.back() / lead;
        size_t k = r.size() - b.size();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
        // the top coefficient cancels exactly
        r.pop_back();
        trim(r);
        if (r.size() < b.size()) break;
    }
    trim(q);
    return {q, r};
}

QPoly divexact(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) fail(Err::BadParameter, "inexact polynomial division");
    return q;
}

static QPoly make_monic(QPoly p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.empty()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

XgcdResult xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = constant(1), s1 = {};
    QPoly t0 = {}, t1 = constant(1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        QPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        Rat lead = r0.back();
        r0 = make_monic(std::move(r0));
        for (auto& c : s0) c /= lead;
        for (auto& c : t0) c /= lead;
    }
    return {r0, s0, t0};
}

Rat eval(const QPoly& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

QPoly cyclotomic(unsigned n) {
    if (n == 0) fail(Err::BadParameter, "cyclotomic index must be positive");
    static std::map<unsigned, QPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    QPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    std::function<QPoly(unsigned)> get = [&](unsigned m) -> QPoly {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        QPoly nm(m + 1);
        nm[0] = -1;
        nm[m] = 1;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) nm = divexact(nm, get(d));
        cache[m] = nm;
        return nm;
    };
    QPoly result = get(n);
    return result;
}

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace ncq::qp
