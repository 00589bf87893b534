#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidfoq/graded.hpp"

namespace braidfoq {

// ---------------------------------------------------------------- symbols

enum class SymKind : std::uint8_t { U = 0, Ustar = 1, X = 2, Xstar = 3, Z = 4 };

/// A raw generator token: U(i,j), U*(i,j), X(i,j), X*(i,j) or Z^power.
/// Indices are 0-based; text forms are 1-based.
struct Symbol {
    SymKind kind = SymKind::U;
    int i = 0;
    int j = 0;
    int power = 0;

    static Symbol u(int i, int j) { return {SymKind::U, i, j, 0}; }
    static Symbol ustar(int i, int j) { return {SymKind::Ustar, i, j, 0}; }
    static Symbol x(int i, int j) { return {SymKind::X, i, j, 0}; }
    static Symbol xstar(int i, int j) { return {SymKind::Xstar, i, j, 0}; }
    static Symbol z(int power = 1) { return {SymKind::Z, 0, 0, power}; }

    static Symbol parse(const std::string& text);
    std::string to_string() const;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using RawWord = std::vector<Symbol>;

/// Total Z power, then symbols.
bool raw_word_less(const RawWord& a, const RawWord& b);

struct RawTerm {
    Scalar coeff;
    RawWord word;
};

/// Un-normalized element: sorted by raw_word_less, duplicates merged, zeros dropped.
class RawElement {
public:
    RawElement() = default;
    void add(const Scalar& coeff, RawWord word);
    const std::vector<RawTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    friend bool operator==(const RawElement& a, const RawElement& b);

private:
    std::vector<RawTerm> terms_;
};

struct RawTensorTerm {
    Scalar coeff;
    std::vector<RawWord> legs;
};

using RawTensor = std::vector<RawTensorTerm>;

// ---------------------------------------------------------------- words

enum class LetterKind : std::uint8_t { U = 0, Ustar = 1, X = 2, Xstar = 3 };

struct Letter {
    LetterKind kind = LetterKind::U;
    std::uint8_t i = 0;
    std::uint8_t j = 0;

    Letter star() const;
    bool starred() const { return kind == LetterKind::Ustar || kind == LetterKind::Xstar; }
    Symbol symbol() const;
    std::string to_string() const { return symbol().to_string(); }

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// letters followed by z^zexp.
struct Word {
    std::vector<Letter> letters;
    int zexp = 0;

    std::size_t length() const noexcept { return letters.size(); }
    std::string to_string() const;
    RawWord raw() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

/// z-commutation degree: d_j - d_i for U(i,j) and X(i,j), the negative for starred letters.
int letter_degree(const Letter& g, const GradedSpace& space);
int word_degree(const std::vector<Letter>& letters, const GradedSpace& space);

struct NormalWord {
    Word word;
    Scalar phase;
};

/// Moves every z to the right using z g = zeta^(-deg g) g z.
NormalWord normal_form(const RawWord& raw, const GradedSpace& space);

// ---------------------------------------------------------------- elements

class Element {
public:
    explicit Element(GradedSpace space);
    static Element constant(const GradedSpace& space, const Scalar& c);
    static Element monomial(const GradedSpace& space, Word w, const Scalar& c);
    static Element from_raw(const RawElement& raw, const GradedSpace& space);

    const GradedSpace& space() const noexcept { return space_; }
    const std::map<Word, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t max_length() const;

    void add_term(const Word& w, const Scalar& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    Element scaled(const Scalar& c) const;
    Element adjoint() const;

    /// Terms share one letter degree (zexp ignored).
    bool homogeneous() const;
    RawElement raw() const;
    std::string to_string() const;

    friend bool operator==(const Element& a, const Element& b);

private:
    void require_same(const Element& o) const;
    GradedSpace space_;
    std::map<Word, Scalar> terms_;
};

/// Product of normal words; the phase is returned separately.
NormalWord multiply_words(const Word& a, const Word& b, const GradedSpace& space);
NormalWord adjoint_word(const Word& w, const GradedSpace& space);

/// The character sending every letter to delta_ij and z to 1.
Scalar counit(const Element& e);
Scalar counit(const Word& w, const FieldSpec& f);

// ---------------------------------------------------------------- tensors

class Tensor {
public:
    Tensor(GradedSpace space, int legs);
    static Tensor from_raw(const RawTensor& raw, const GradedSpace& space, int legs);

    const GradedSpace& space() const noexcept { return space_; }
    int legs() const noexcept { return legs_; }
    const std::map<std::vector<Word>, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const std::vector<Word>& ws, const Scalar& c);
    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    /// Legwise product, no braiding between legs.
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    Tensor scaled(const Scalar& c) const;
    Tensor adjoint() const;
    std::size_t max_leg_length() const;
    std::string to_string() const;

    friend bool operator==(const Tensor& a, const Tensor& b);

private:
    GradedSpace space_;
    int legs_;
    std::map<std::vector<Word>, Scalar> terms_;
};

/// Extends generator images multiplicatively; starred letters via adjoints.
class Comultiplier {
public:
    /// `z_image` may be absent when the algebra has no z.
    Comultiplier(const GradedSpace& space, const std::map<Letter, Tensor>& letters, const std::optional<Tensor>& z_image);

    Tensor apply(const Word& w) const;
    Tensor apply(const Element& e) const;
    /// (Delta (x) id) Delta on a 2-leg tensor's first leg, or (id (x) Delta) on the second.
    Tensor expand_leg(const Tensor& t, int leg) const;

private:
    Tensor z_power(int e) const;
    GradedSpace space_;
    std::map<Letter, Tensor> images_;
    std::optional<Word> z_left_;
    std::optional<Word> z_right_;
    std::optional<Scalar> z_coeff_;
};

}  // namespace braidfoq
