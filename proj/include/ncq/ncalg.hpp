#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncq/scalar.hpp"

namespace ncq {

using Gen = uint8_t;

// Word in the free monoid on the generators, run-length encoded.
// Canonical: positive exponents, adjacent runs carry distinct generators.
struct Word {
    struct Run {
        Gen g;
        uint32_t e;
        bool operator==(const Run&) const = default;
    };
    std::vector<Run> runs;

    static Word one() { return {}; }
    static Word power(Gen g, uint32_t e);

    uint32_t degree() const;
    bool is_one() const { return runs.empty(); }
    void append(Gen g, uint32_t e);
    Word concat(const Word& o) const;
    Gen letter_at(uint32_t i) const;
    Word prefix(uint32_t k) const;  // first k letters
    Word suffix(uint32_t k) const;  // drop first k letters
    bool operator==(const Word&) const = default;
    std::string str(const std::vector<std::string>& names) const;
};

// degree first, then left-to-right letter comparison
struct WordDeglex {
    bool operator()(const Word& x, const Word& y) const;
};

// Element of the free algebra: finite sum of scalar-weighted words.
class FreePoly {
public:
    using Map = std::map<Word, Scalar, WordDeglex>;
    Map terms;

    static FreePoly scalar(const Scalar& c);
    static FreePoly word(const Word& w, const Scalar& c = Scalar(1L));

    void add_term(const Word& w, const Scalar& c);
    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator-() const;
    FreePoly scaled(const Scalar& c) const;
    FreePoly concat(const FreePoly& o) const;  // free product, no reduction

    bool is_zero() const { return terms.empty(); }
    // all words of one total degree; zero counts as homogeneous
    bool is_homogeneous(uint32_t* deg_out = nullptr) const;
    bool operator==(const FreePoly& o) const;
    std::string str(const std::vector<std::string>& names) const;
};

// Exponent vector of an ordered monomial x1^e1 ... xg^eg (one slot per generator).
using Mono = std::vector<uint32_t>;

uint32_t mono_degree(const Mono& m);
Word mono_word(const Mono& m);

// matches WordDeglex on the corresponding sorted words
struct MonoDeglex {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Polynomial supported on ordered monomials (the PBW basis of a confluent
// presentation whose irreducible words are sorted).
class NormalPoly {
public:
    using Map = std::map<Mono, Scalar, MonoDeglex>;
    Map terms;

    static NormalPoly monomial(const Mono& m, const Scalar& c = Scalar(1L));

    void add_term(const Mono& m, const Scalar& c);
    NormalPoly operator+(const NormalPoly& o) const;
    NormalPoly operator-(const NormalPoly& o) const;
    NormalPoly operator-() const;
    NormalPoly scaled(const Scalar& c) const;

    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous(uint32_t* deg_out = nullptr) const;
    FreePoly to_free() const;
    bool operator==(const NormalPoly& o) const;
    std::string str(const std::vector<std::string>& names) const;
};

// Finitely presented quadratic algebra over a FieldMode.
class QuadraticPresentation {
public:
    QuadraticPresentation(FieldMode mode, std::vector<std::string> gens,
                          std::vector<FreePoly> rels);

    const FieldMode& mode() const { return mode_; }
    const std::vector<std::string>& gens() const { return gens_; }
    size_t ngens() const { return gens_.size(); }
    const std::vector<FreePoly>& rels() const { return rels_; }
    std::optional<Gen> gen_index(const std::string& name) const;

private:
    FieldMode mode_;
    std::vector<std::string> gens_;
    std::vector<FreePoly> rels_;
};

// Built-in presentations.
// Cubic Calabi-Yau form: yz - a zy + x^2, zx - a xz, xy - a yx (needs a^3 != 0, 1).
QuadraticPresentation type_s_prime_cy(const FieldMode& m);
// General member: yz - a zy + x^2, zx - b xz, xy - b yx (needs a b^2 != 0, 1).
QuadraticPresentation type_s_prime(const FieldMode& m, const Scalar& beta);
// Quantum plane on y, z: yz - a zy.
QuadraticPresentation quantum_plane(const FieldMode& m);

struct OverlapCheck {
    Gen a, b, c;
    bool ok;
};

// Quadratic rewriting system with leading-word rules ab -> lower terms,
// confluence certified by resolving all length-3 overlaps.
class RewriteSystem {
public:
    const QuadraticPresentation& presentation() const { return pres_; }
    const FieldMode& mode() const { return pres_.mode(); }
    size_t ngens() const { return pres_.ngens(); }
    const std::vector<std::string>& gen_names() const { return pres_.gens(); }

    bool has_rule(Gen a, Gen b) const;
    const FreePoly& rule_rhs(Gen a, Gen b) const;
    const std::vector<OverlapCheck>& overlaps() const { return overlaps_; }
    // irreducible words are exactly the sorted monomials
    bool pbw_sorted() const { return pbw_sorted_; }

    FreePoly normal_form(const FreePoly& f) const;
    NormalPoly normal_form_mono(const FreePoly& f) const;
    NormalPoly multiply(const NormalPoly& f, const NormalPoly& g) const;
    NormalPoly commutator(const NormalPoly& f, const NormalPoly& g) const;
    NormalPoly gen_poly(Gen g, uint32_t e = 1) const;
    NormalPoly power(const NormalPoly& f, unsigned long k) const;

    long hilbert_dimension(uint32_t d) const;
    std::vector<long> hilbert_series(uint32_t dmax) const;

    // descending deglex list of the degree-d ordered monomials
    std::vector<Mono> normal_monomials(uint32_t d) const;

    // normality of a homogeneous element: fA_e and A_e f span the same
    // subspace for every e <= dmax
    bool is_normal_element(const NormalPoly& f, uint32_t dmax) const;

    // integer weight vectors w with every relation w-homogeneous; contains the
    // all-ones vector. Used to block-split graded linear systems.
    const std::vector<std::vector<long>>& weight_basis() const { return weights_; }
    std::vector<long> multidegree(const Mono& m) const;

    friend RewriteSystem build_rewrite_system(const QuadraticPresentation& p);

private:
    explicit RewriteSystem(QuadraticPresentation p) : pres_(std::move(p)) {}
    std::pair<bool, uint32_t> first_reducible(const Word& w) const;

    QuadraticPresentation pres_;
    std::vector<std::optional<FreePoly>> rules_;  // ngens * ngens, slot a*ngens+b
    std::vector<OverlapCheck> overlaps_;
    std::vector<std::vector<long>> weights_;
    bool pbw_sorted_ = false;
};

RewriteSystem build_rewrite_system(const QuadraticPresentation& p);

}  // namespace ncq
