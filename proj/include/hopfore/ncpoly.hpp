#ifndef HOPFORE_NCPOLY_HPP
#define HOPFORE_NCPOLY_HPP

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfore/diagnostics.hpp"
#include "hopfore/scalar.hpp"

namespace hopfore {

class Presentation;
class Element;

struct GeneratorInfo {
    std::string name;
    bool invertible = false; ///< negative exponents permitted (non-torsion only)
    long torsion = 0;        ///< n > 0 imposes g^n = 1; exponents live in [0,n)
    long weight = 1;         ///< positive weight used by the termination order
};

/// A single signed letter: g or g^{-1}.
struct Letter {
    int gen = 0;
    bool neg = false;
    auto operator<=>(const Letter&) const = default;
};

/// A run of equal letters g^e (e != 0; e < 0 only for invertible non-torsion
/// generators). Monomials are canonical words: adjacent factors differ in
/// generator, torsion exponents are reduced to [0, n).
struct Factor {
    int gen = 0;
    long exp = 1;
    bool operator==(const Factor&) const = default;
};

class Monomial {
public:
    Monomial() = default; // the empty word, i.e. 1
    explicit Monomial(std::vector<Factor> f) : f_(std::move(f)) {}

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    long degree() const;
    long weighted_degree(const Presentation& p) const;
    Letter letter_at_factor(size_t i) const { return {f_[i].gen, f_[i].exp < 0}; }

    /// Word order: total degree first, then lexicographic on the letter
    /// sequence (generator index ascending, positive sign before negative).
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    std::string str(const Presentation& p) const;

private:
    std::vector<Factor> f_;
};

/// Finite linear combination of canonical monomials over the ground field.
/// Holds a non-owning pointer to its presentation (the caller keeps the
/// shared_ptr alive); arithmetic normalizes through the rewriting system.
class Element {
public:
    Element() = default; // detached zero; usable only after assignment

    static Element zero(const Presentation& p);
    static Element one(const Presentation& p);
    static Element constant(const Presentation& p, const Scalar& c);
    static Element generator(const Presentation& p, int gen, long exp = 1);

    const Presentation& pres() const;
    bool is_zero() const { return t_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return t_; }
    long max_degree() const;

    void add_term(const Monomial& m, const Scalar& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element operator*(const Scalar& c) const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    bool operator==(const Element& o) const { return t_ == o.t_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element pow(long e) const; // negative e requires an invertible element

    /// The scalar c when the element is c*1 (or 0); nullopt otherwise.
    std::optional<Scalar> as_scalar() const;
    /// The monomial m when the element is exactly 1*m; nullopt otherwise.
    std::optional<Monomial> as_monomial() const;

    std::string str() const;

private:
    const Presentation* p_ = nullptr;
    std::map<Monomial, Scalar> t_;
    explicit Element(const Presentation& p) : p_(&p) {}
    friend class Presentation;
};

/// Two-sided inverse of a single-term element whose letters are all
/// invertible (or torsion) generators. Error("NonInvertible") otherwise.
Element invert_element(const Element& e);

/// Transport an element to another presentation by generator name.
Element rebase(const Element& e, const Presentation& target);

/// Apply an (anti)homomorphism determined by generator images. Images of
/// negative letters are inverses of the images (which must be invertible).
Element apply_hom(const Element& e, const Presentation& target,
                  const std::vector<Element>& images, bool antihom = false);

class Tensor2;

/// Transport a 2-tensor to another presentation by generator name.
Tensor2 rebase_tensor(const Tensor2& t, const Presentation& target);

/// Single-term element 1*m over the monomial's presentation.
Element mono_element(const Presentation& p, const Monomial& m);

/// Noncommutative presentation: generators plus a terminating 2-letter
/// rewriting system u*v -> rhs. Rules must strictly decrease the
/// (weighted degree, degree, letter-lex) order, which proves termination.
class Presentation {
public:
    static std::shared_ptr<Presentation> create(FieldSpec f);

    int add_generator(GeneratorInfo info);
    void add_rule(Letter u, Letter v, const Element& rhs);
    /// Derives the signed-letter mirrors of plain skew-commutation rules,
    /// then checks that every realizable signed variant of each rule's
    /// letter pair is covered. No rules may be added afterwards.
    void finalize();
    bool finalized() const { return finalized_; }

    const FieldSpec& field() const { return f_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const GeneratorInfo& gen(int i) const { return gens_[static_cast<size_t>(i)]; }
    int gen_index(const std::string& name) const; // -1 when absent
    bool letter_invertible(int gen) const;

    long degree_cap() const { return cap_; }
    void set_degree_cap(long c) { cap_ = c; }

    enum class Strategy { Leftmost, Rightmost };

    /// Full normalization of c * (the word w); w need not be canonical.
    Element normalize_word(std::vector<Factor> w, const Scalar& c,
                           Strategy s = Strategy::Leftmost) const;
    Element multiply(const Element& a, const Element& b,
                     Strategy s = Strategy::Leftmost) const;

    /// Canonicalize a raw factor string (merge runs, reduce torsion
    /// exponents, validate signs); does not apply rules.
    void canonicalize_factors(std::vector<Factor>& w) const;

    /// All length-3 overlaps (u,v,w) with rules on (u,v) and (v,w) resolved
    /// both ways; an entry per overlap with the difference as residual.
    Diagnostic check_local_confluence() const;

    /// All rule-free canonical monomials of degree <= max_degree, in word
    /// order (negative letters are excluded when positive_only is set).
    std::vector<Monomial> normal_monomials(long max_degree, bool positive_only = false) const;

    const std::map<std::pair<Letter, Letter>, Element>& rules() const { return rules_; }

    std::string letter_str(Letter l) const;

private:
    FieldSpec f_;
    std::vector<GeneratorInfo> gens_;
    std::map<std::pair<Letter, Letter>, Element> rules_;
    bool finalized_ = false;
    long cap_ = 24;

    explicit Presentation(FieldSpec f) : f_(std::move(f)) {}
    void validate_rule(Letter u, Letter v, const Element& rhs) const;
};

/// Element of A (x) A with canonical monomial-pair basis.
class Tensor2 {
public:
    Tensor2() = default;
    static Tensor2 zero(const Presentation& p);
    static Tensor2 of(const Element& a, const Element& b);

    const Presentation& pres() const;
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<Monomial, Monomial>, Scalar>& terms() const { return t_; }

    void add_term(const Monomial& a, const Monomial& b, const Scalar& c);

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator-() const;
    Tensor2 operator*(const Tensor2& o) const; // componentwise product
    Tensor2 operator*(const Scalar& c) const;
    Tensor2& operator+=(const Tensor2& o) { return *this = *this + o; }
    Tensor2& operator-=(const Tensor2& o) { return *this = *this - o; }
    bool operator==(const Tensor2& o) const { return t_ == o.t_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    Tensor2 pow(long e) const; // e >= 0

    /// Swap the two slots (used for cocommutativity tests).
    Tensor2 flip() const;

    std::string str() const;

private:
    const Presentation* p_ = nullptr;
    std::map<std::pair<Monomial, Monomial>, Scalar> t_;
    explicit Tensor2(const Presentation& p) : p_(&p) {}
};

using MonoFn = std::function<Element(const Monomial&)>;

/// Sum of c * f1(m1) (x) f2(m2) over the terms of t.
Tensor2 map_slots(const Tensor2& t, const MonoFn& f1, const MonoFn& f2);
/// Sum of c * f1(m1) * f2(m2) over the terms of t (multiplication in A).
Element fold_multiply(const Tensor2& t, const MonoFn& f1, const MonoFn& f2);

class Tensor3 {
public:
    Tensor3() = default;
    static Tensor3 zero(const Presentation& p);

    bool is_zero() const { return t_.empty(); }
    void add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& s);
    Tensor3 operator-(const Tensor3& o) const;
    bool operator==(const Tensor3& o) const { return t_ == o.t_; }
    std::string str() const;

private:
    const Presentation* p_ = nullptr;
    std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar> t_;
    explicit Tensor3(const Presentation& p) : p_(&p) {}
    friend Tensor3 expand_slot(const Tensor2&, int, const std::function<Tensor2(const Monomial&)>&);
};

/// Apply a comultiplication-like map to one slot of a 2-tensor:
/// slot = 0 gives sum c * F(m1) (x) m2, slot = 1 gives sum c * m1 (x) F(m2).
Tensor3 expand_slot(const Tensor2& t, int slot,
                    const std::function<Tensor2(const Monomial&)>& f);

} // namespace hopfore

#endif
