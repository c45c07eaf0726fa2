#include "ncq/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "ncq/error.hpp"
#include "ncq/linalg.hpp"

namespace ncq {

/******** Word ********/

Word Word::power(Gen g, uint32_t e) {
    Word w;
    if (e > 0) w.runs.push_back({g, e});
    return w;
}

uint32_t Word::degree() const {
    uint32_t d = 0;
    for (const auto& r : runs) d += r.e;
    return d;
}

void Word::append(Gen g, uint32_t e) {
    if (e == 0) return;
    if (!runs.empty() && runs.back().g == g)
        runs.back().e += e;
    else
        runs.push_back({g, e});
}

Word Word::concat(const Word& o) const {
    Word w = *this;
    for (const auto& r : o.runs) w.append(r.g, r.e);
    return w;
}

Gen Word::letter_at(uint32_t i) const {
    for (const auto& r : runs) {
        if (i < r.e) return r.g;
        i -= r.e;
    }
    fail(Err::BadParameter, "letter index out of range");
}

Word Word::prefix(uint32_t k) const {
    Word w;
    for (const auto& r : runs) {
        if (k == 0) break;
        uint32_t take = std::min(k, r.e);
        w.append(r.g, take);
        k -= take;
    }
    return w;
}

Word Word::suffix(uint32_t k) const {
    Word w;
    for (const auto& r : runs) {
        if (k >= r.e) {
            k -= r.e;
            continue;
        }
        w.append(r.g, r.e - k);
        k = 0;
    }
    return w;
}

std::string Word::str(const std::vector<std::string>& names) const {
    if (runs.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& r : runs) {
        if (!first) os << "*";
        first = false;
        os << names.at(r.g);
        if (r.e > 1) os << "^" << r.e;
    }
    return os.str();
}

bool WordDeglex::operator()(const Word& x, const Word& y) const {
    uint32_t dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    size_t i = 0, j = 0;
    uint32_t ei = 0, ej = 0;  // consumed letters of the current runs
    while (i < x.runs.size() && j < y.runs.size()) {
        Gen gx = x.runs[i].g, gy = y.runs[j].g;
        if (gx != gy) return gx < gy;
        uint32_t ri = x.runs[i].e - ei, rj = y.runs[j].e - ej;
        if (ri < rj) {
            ++i;
            ei = 0;
            ej += ri;
        } else if (rj < ri) {
            ++j;
            ej = 0;
            ei += rj;
        } else {
            ++i;
            ++j;
            ei = ej = 0;
        }
    }
    return false;
}

/******** scalar rendering for polynomial terms ********/

namespace {

struct CoeffRender {
    bool negative;
    std::string abs;  // without sign; "1" allowed
};

// A coefficient prints inline when it is a plain rational or a single
// monomial in the field symbol; everything else is parenthesized.
CoeffRender render_coeff(const Scalar& c) {
    if (auto r = c.as_rational()) {
        Rat v = *r;
        bool neg = v < 0;
        if (neg) v = -v;
        return {neg, v.get_str()};
    }
    const QPoly& num = c.num();
    size_t nz = 0, pos = 0;
    for (size_t i = 0; i < num.size(); ++i)
        if (num[i] != 0) {
            ++nz;
            pos = i;
        }
    bool den_one = qp::is_one(c.den());
    if (!c.is_literal() && den_one && nz == 1) {
        std::string var = c.mode().is_cyclotomic()
                              ? "zeta" + std::to_string(c.mode().conductor())
                              : "a";
        Rat q = num[pos];
        bool neg = q < 0;
        if (neg) q = -q;
        std::string s;
        if (q != 1) s = q.get_str() + "*";
        s += var;
        if (pos > 1) s += "^" + std::to_string(pos);
        return {neg, s};
    }
    return {false, "(" + c.str() + ")"};
}

std::string poly_str(const std::vector<std::pair<std::string, Scalar>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        CoeffRender cr = render_coeff(c);
        if (first) {
            if (cr.negative) os << "-";
            first = false;
        } else {
            os << (cr.negative ? " - " : " + ");
        }
        if (mono.empty() || mono == "1")
            os << cr.abs;
        else if (cr.abs == "1")
            os << mono;
        else
            os << cr.abs << "*" << mono;
    }
    return os.str();
}

}  // namespace

/******** FreePoly ********/

FreePoly FreePoly::scalar(const Scalar& c) {
    FreePoly p;
    p.add_term(Word::one(), c);
    return p;
}

FreePoly FreePoly::word(const Word& w, const Scalar& c) {
    FreePoly p;
    p.add_term(w, c);
    return p;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    FreePoly r = *this;
    for (const auto& [w, c] : o.terms) r.add_term(w, -c);
    return r;
}

FreePoly FreePoly::operator-() const {
    FreePoly r;
    for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
    FreePoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms) r.add_term(w, k * c);
    return r;
}

FreePoly FreePoly::concat(const FreePoly& o) const {
    FreePoly r;
    for (const auto& [w1, c1] : terms)
        for (const auto& [w2, c2] : o.terms) r.add_term(w1.concat(w2), c1 * c2);
    return r;
}

bool FreePoly::is_homogeneous(uint32_t* deg_out) const {
    if (terms.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    uint32_t d = terms.begin()->first.degree();
    for (const auto& [w, c] : terms)
        if (w.degree() != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

bool FreePoly::operator==(const FreePoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = terms.begin();
    auto jt = o.terms.begin();
    for (; it != terms.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

std::string FreePoly::str(const std::vector<std::string>& names) const {
    std::vector<std::pair<std::string, Scalar>> parts;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        parts.emplace_back(it->first.str(names), it->second);
    return poly_str(parts);
}

/******** Mono / NormalPoly ********/

uint32_t mono_degree(const Mono& m) {
    uint32_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

Word mono_word(const Mono& m) {
    Word w;
    for (size_t g = 0; g < m.size(); ++g) w.append((Gen)g, m[g]);
    return w;
}

bool MonoDeglex::operator()(const Mono& a, const Mono& b) const {
    uint32_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // on sorted words, a larger exponent on an earlier generator is smaller
    return a > b;
}

NormalPoly NormalPoly::monomial(const Mono& m, const Scalar& c) {
    NormalPoly p;
    p.add_term(m, c);
    return p;
}

void NormalPoly::add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NormalPoly NormalPoly::operator+(const NormalPoly& o) const {
    NormalPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

NormalPoly NormalPoly::operator-(const NormalPoly& o) const {
    NormalPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

NormalPoly NormalPoly::operator-() const {
    NormalPoly r;
    for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
    return r;
}

NormalPoly NormalPoly::scaled(const Scalar& c) const {
    NormalPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms) r.add_term(m, k * c);
    return r;
}

bool NormalPoly::is_homogeneous(uint32_t* deg_out) const {
    if (terms.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    uint32_t d = mono_degree(terms.begin()->first);
    for (const auto& [m, c] : terms)
        if (mono_degree(m) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

FreePoly NormalPoly::to_free() const {
    FreePoly r;
    for (const auto& [m, c] : terms) r.add_term(mono_word(m), c);
    return r;
}

bool NormalPoly::operator==(const NormalPoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = terms.begin();
    auto jt = o.terms.begin();
    for (; it != terms.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

std::string NormalPoly::str(const std::vector<std::string>& names) const {
    std::vector<std::pair<std::string, Scalar>> parts;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        parts.emplace_back(mono_word(it->first).str(names), it->second);
    return poly_str(parts);
}

/******** QuadraticPresentation ********/

static bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum((unsigned char)ch) && ch != '_') return false;
    return true;
}

static bool reserved_name(const std::string& s) {
    return s == "a" || s == "b" || s.rfind("zeta", 0) == 0 || s == "field" || s == "gens" ||
           s == "rels" || s == "generic" || s == "cyclotomic";
}

QuadraticPresentation::QuadraticPresentation(FieldMode mode, std::vector<std::string> gens,
                                             std::vector<FreePoly> rels)
    : mode_(std::move(mode)), gens_(std::move(gens)), rels_(std::move(rels)) {
    if (gens_.empty() || gens_.size() > 64) fail(Err::BadParameter, "generator count out of range");
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (!valid_ident(g)) fail(Err::BadParameter, "bad generator name '" + g + "'");
        if (reserved_name(g)) fail(Err::BadParameter, "reserved name '" + g + "'");
        if (!seen.insert(g).second) fail(Err::BadParameter, "duplicate generator '" + g + "'");
    }
    for (const auto& r : rels_) {
        uint32_t deg = 0;
        if (!r.is_homogeneous(&deg) || (!r.is_zero() && deg != 2))
            fail(Err::InhomogeneousRelation, "relations must be homogeneous of degree 2");
        for (const auto& [w, c] : r.terms) {
            if (!c.is_literal() && c.mode() != mode_)
                fail(Err::BadParameter, "relation coefficient from a different field mode");
            for (const auto& run : w.runs)
                if (run.g >= gens_.size()) fail(Err::BadParameter, "relation uses unknown generator");
        }
    }
}

std::optional<Gen> QuadraticPresentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) return (Gen)i;
    return std::nullopt;
}

/******** built-in presentations ********/

QuadraticPresentation type_s_prime_cy(const FieldMode& m) {
    Scalar a = alpha(m);
    if (alpha_pow(m, 3).is_one()) fail(Err::BadParameter, "alpha^3 = 1 excluded for this family");
    const Gen x = 0, y = 1, z = 2;
    FreePoly g1, g2, g3;
    g1.add_term(Word::power(y, 1).concat(Word::power(z, 1)), Scalar(1L));
    g1.add_term(Word::power(z, 1).concat(Word::power(y, 1)), -a);
    g1.add_term(Word::power(x, 2), Scalar(1L));
    g2.add_term(Word::power(z, 1).concat(Word::power(x, 1)), Scalar(1L));
    g2.add_term(Word::power(x, 1).concat(Word::power(z, 1)), -a);
    g3.add_term(Word::power(x, 1).concat(Word::power(y, 1)), Scalar(1L));
    g3.add_term(Word::power(y, 1).concat(Word::power(x, 1)), -a);
    return QuadraticPresentation(m, {"x", "y", "z"}, {g1, g2, g3});
}

QuadraticPresentation type_s_prime(const FieldMode& m, const Scalar& beta) {
    Scalar a = alpha(m);
    Scalar b = beta + Scalar(0L);  // promote literals
    Scalar ab2 = a * b * b;
    if (ab2.is_zero() || ab2.is_one())
        fail(Err::BadParameter, "alpha*beta^2 in {0,1} excluded for this family");
    const Gen x = 0, y = 1, z = 2;
    FreePoly f1, f2, f3;
    f1.add_term(Word::power(y, 1).concat(Word::power(z, 1)), Scalar(1L));
    f1.add_term(Word::power(z, 1).concat(Word::power(y, 1)), -a);
    f1.add_term(Word::power(x, 2), Scalar(1L));
    f2.add_term(Word::power(z, 1).concat(Word::power(x, 1)), Scalar(1L));
    f2.add_term(Word::power(x, 1).concat(Word::power(z, 1)), -b);
    f3.add_term(Word::power(x, 1).concat(Word::power(y, 1)), Scalar(1L));
    f3.add_term(Word::power(y, 1).concat(Word::power(x, 1)), -b);
    return QuadraticPresentation(m, {"x", "y", "z"}, {f1, f2, f3});
}

QuadraticPresentation quantum_plane(const FieldMode& m) {
    Scalar a = alpha(m);
    const Gen y = 0, z = 1;
    FreePoly f;
    f.add_term(Word::power(y, 1).concat(Word::power(z, 1)), Scalar(1L));
    f.add_term(Word::power(z, 1).concat(Word::power(y, 1)), -a);
    return QuadraticPresentation(m, {"y", "z"}, {f});
}

/******** RewriteSystem ********/

bool RewriteSystem::has_rule(Gen a, Gen b) const {
    return rules_[a * ngens() + b].has_value();
}

const FreePoly& RewriteSystem::rule_rhs(Gen a, Gen b) const {
    const auto& r = rules_[a * ngens() + b];
    if (!r) fail(Err::BadParameter, "no rule for this pair");
    return *r;
}

std::pair<bool, uint32_t> RewriteSystem::first_reducible(const Word& w) const {
    uint32_t base = 0;
    for (size_t i = 0; i < w.runs.size(); ++i) {
        Gen g = w.runs[i].g;
        uint32_t e = w.runs[i].e;
        if (e >= 2 && has_rule(g, g)) return {true, base};
        if (i + 1 < w.runs.size() && has_rule(g, w.runs[i + 1].g)) return {true, base + e - 1};
        base += e;
    }
    return {false, 0};
}

FreePoly RewriteSystem::normal_form(const FreePoly& f) const {
    FreePoly out;
    FreePoly agenda = f;
    while (!agenda.terms.empty()) {
        auto it = std::prev(agenda.terms.end());
        Word w = it->first;
        Scalar c = it->second;
        agenda.terms.erase(it);
        auto [found, pos] = first_reducible(w);
        if (!found) {
            out.add_term(w, c);
            continue;
        }
        Word u = w.prefix(pos);
        Word v = w.suffix(pos + 2);
        const FreePoly& rhs = rule_rhs(w.letter_at(pos), w.letter_at(pos + 1));
        for (const auto& [tw, tc] : rhs.terms) agenda.add_term(u.concat(tw).concat(v), c * tc);
    }
    return out;
}

NormalPoly RewriteSystem::normal_form_mono(const FreePoly& f) const {
    if (!pbw_sorted_) fail(Err::BadParameter, "irreducible words are not ordered monomials");
    FreePoly nf = normal_form(f);
    NormalPoly r;
    for (const auto& [w, c] : nf.terms) {
        Mono m(ngens(), 0);
        for (const auto& run : w.runs) m[run.g] += run.e;
        r.add_term(m, c);
    }
    return r;
}

NormalPoly RewriteSystem::multiply(const NormalPoly& f, const NormalPoly& g) const {
    return normal_form_mono(f.to_free().concat(g.to_free()));
}

NormalPoly RewriteSystem::commutator(const NormalPoly& f, const NormalPoly& g) const {
    FreePoly ff = f.to_free(), gg = g.to_free();
    return normal_form_mono(ff.concat(gg) - gg.concat(ff));
}

NormalPoly RewriteSystem::gen_poly(Gen g, uint32_t e) const {
    Mono m(ngens(), 0);
    m[g] = e;
    return NormalPoly::monomial(m);
}

NormalPoly RewriteSystem::power(const NormalPoly& f, unsigned long k) const {
    Mono unit(ngens(), 0);
    NormalPoly acc = NormalPoly::monomial(unit);
    for (unsigned long i = 0; i < k; ++i) acc = multiply(acc, f);
    return acc;
}

std::vector<long> RewriteSystem::hilbert_series(uint32_t dmax) const {
    size_t g = ngens();
    std::vector<long> out;
    out.push_back(1);
    if (dmax == 0) return out;
    std::vector<Int> cur(g, 1);
    out.push_back((long)g);
    for (uint32_t d = 2; d <= dmax; ++d) {
        std::vector<Int> next(g, 0);
        for (size_t h = 0; h < g; ++h)
            for (size_t gg = 0; gg < g; ++gg)
                if (!has_rule((Gen)gg, (Gen)h)) next[h] += cur[gg];
        cur = std::move(next);
        Int total(0);
        for (const auto& v : cur) total += v;
        if (!total.fits_slong_p()) fail(Err::BadParameter, "dimension overflow");
        out.push_back(total.get_si());
    }
    return out;
}

long RewriteSystem::hilbert_dimension(uint32_t d) const { return hilbert_series(d).at(d); }

std::vector<Mono> RewriteSystem::normal_monomials(uint32_t d) const {
    if (!pbw_sorted_) fail(Err::BadParameter, "irreducible words are not ordered monomials");
    std::vector<Mono> out;
    Mono cur(ngens(), 0);
    auto rec = [&](auto&& self, size_t pos, uint32_t rest) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = rest;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (uint32_t e = 0; e <= rest; ++e) {
            cur[pos] = e;
            self(self, pos + 1, rest - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    MonoDeglex less;
    std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return less(b, a); });
    return out;
}

bool RewriteSystem::is_normal_element(const NormalPoly& f, uint32_t dmax) const {
    uint32_t deg = 0;
    if (!f.is_homogeneous(&deg)) fail(Err::BadParameter, "normality needs a homogeneous element");
    if (f.is_zero()) return true;
    for (uint32_t e = 1; e <= dmax; ++e) {
        std::vector<Mono> be = normal_monomials(e);
        std::vector<Mono> bt = normal_monomials(deg + e);
        std::map<Mono, size_t, MonoDeglex> index;
        for (size_t i = 0; i < bt.size(); ++i) index.emplace(bt[i], i);
        Matrix left((long)be.size(), (long)bt.size());
        Matrix right((long)be.size(), (long)bt.size());
        for (size_t r = 0; r < be.size(); ++r) {
            NormalPoly m = NormalPoly::monomial(be[r]);
            for (const auto& [mm, c] : multiply(f, m).terms) left.at(r, index.at(mm)) = c;
            for (const auto& [mm, c] : multiply(m, f).terms) right.at(r, index.at(mm)) = c;
        }
        rref(left);
        rref(right);
        if (!(left == right)) return false;
    }
    return true;
}

std::vector<long> RewriteSystem::multidegree(const Mono& m) const {
    std::vector<long> md;
    md.reserve(weights_.size());
    for (const auto& w : weights_) {
        long acc = 0;
        for (size_t i = 0; i < m.size(); ++i) acc += w[i] * (long)m[i];
        md.push_back(acc);
    }
    return md;
}

static std::vector<std::vector<long>> weight_lattice(const QuadraticPresentation& p) {
    size_t g = p.ngens();
    std::vector<std::vector<long>> rows;
    for (const auto& rel : p.rels()) {
        if (rel.terms.empty()) continue;
        auto exps = [&](const Word& w) {
            std::vector<long> e(g, 0);
            for (const auto& r : w.runs) e[r.g] += r.e;
            return e;
        };
        auto it = rel.terms.begin();
        std::vector<long> e0 = exps(it->first);
        for (++it; it != rel.terms.end(); ++it) {
            std::vector<long> d = exps(it->first);
            for (size_t i = 0; i < g; ++i) d[i] -= e0[i];
            bool zero = std::all_of(d.begin(), d.end(), [](long v) { return v == 0; });
            if (!zero) rows.push_back(std::move(d));
        }
    }
    Matrix m(rows.size(), g);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < g; ++c) m.at(r, c) = Scalar((long)rows[r][c]);
    auto basis = nullspace(m);
    std::vector<std::vector<long>> out;
    for (const auto& v : basis) {
        Int l(1);
        for (const auto& s : v) {
            Rat q = *s.as_rational();
            l = lcm(l, Int(q.get_den()));
        }
        std::vector<long> w(g, 0);
        Int content(0);
        std::vector<Int> scaled(g);
        for (size_t i = 0; i < g; ++i) {
            scaled[i] = Int(*v[i].as_rational() * Rat(l));
            content = gcd(content, scaled[i]);
        }
        if (content == 0) content = 1;
        for (size_t i = 0; i < g; ++i)
            if (scaled[i] != 0) {
                if (scaled[i] < 0) content = -content;
                break;
            }
        for (size_t i = 0; i < g; ++i) w[i] = Int(scaled[i] / content).get_si();
        out.push_back(std::move(w));
    }
    return out;
}

RewriteSystem build_rewrite_system(const QuadraticPresentation& p) {
    RewriteSystem rs(p);
    size_t g = p.ngens();
    rs.rules_.assign(g * g, std::nullopt);
    for (const auto& rel : p.rels()) {
        if (rel.is_zero()) fail(Err::DegenerateLeading, "zero relation");
        auto lead = std::prev(rel.terms.end());
        const Word& w = lead->first;
        Gen a = w.letter_at(0), b = w.letter_at(1);
        if (rs.rules_[a * g + b])
            fail(Err::DegenerateLeading, "duplicate leading word " + w.str(p.gens()));
        Scalar cinv = lead->second.inverse();
        FreePoly rhs;
        for (auto it = rel.terms.begin(); it != lead; ++it)
            rhs.add_term(it->first, -(it->second * cinv));
        rs.rules_[a * g + b] = std::move(rhs);
    }
    bool pbw = true;
    for (size_t a = 0; a < g; ++a)
        for (size_t b = 0; b < g; ++b) {
            bool has = rs.rules_[a * g + b].has_value();
            if ((a > b) != has) pbw = false;
        }
    rs.pbw_sorted_ = pbw;

    std::vector<std::string> bad;
    for (size_t a = 0; a < g; ++a)
        for (size_t b = 0; b < g; ++b) {
            if (!rs.has_rule((Gen)a, (Gen)b)) continue;
            for (size_t c = 0; c < g; ++c) {
                if (!rs.has_rule((Gen)b, (Gen)c)) continue;
                FreePoly left, right;
                for (const auto& [tw, tc] : rs.rule_rhs((Gen)a, (Gen)b).terms)
                    left.add_term(tw.concat(Word::power((Gen)c, 1)), tc);
                for (const auto& [tw, tc] : rs.rule_rhs((Gen)b, (Gen)c).terms)
                    right.add_term(Word::power((Gen)a, 1).concat(tw), tc);
                left = rs.normal_form(left);
                right = rs.normal_form(right);
                bool ok = left == right;
                rs.overlaps_.push_back({(Gen)a, (Gen)b, (Gen)c, ok});
                if (!ok)
                    bad.push_back(Word::power((Gen)a, 1)
                                      .concat(Word::power((Gen)b, 1))
                                      .concat(Word::power((Gen)c, 1))
                                      .str(p.gens()));
            }
        }
    if (!bad.empty()) {
        std::string msg = "unresolvable overlaps:";
        for (const auto& s : bad) msg += " " + s;
        fail(Err::NonConfluent, msg);
    }
    rs.weights_ = weight_lattice(p);
    return rs;
}

}  // namespace ncq
