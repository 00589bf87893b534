#include "braidfoq/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "braidfoq/error.hpp"

namespace braidfoq {

namespace {

int total_z(const RawWord& w) {
    int t = 0;
    for (const auto& s : w)
        if (s.kind == SymKind::Z) t += s.power;
    return t;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int parse_int(const std::string& s, const std::string& ctx) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError("bad integer '" + s + "' in symbol '" + ctx + "'");
}

void check_space(const GradedSpace& a, const GradedSpace& b) {
    if (a.degrees() != b.degrees() || a.field() != b.field() || a.zeta() != b.zeta())
        throw InvalidData("algebra elements from different contexts");
}

}  // namespace

// ---------------------------------------------------------------- symbols

Symbol Symbol::parse(const std::string& text) {
    const std::string t = trim(text);
    if (t == "Z") return z(1);
    if (t.rfind("Z^", 0) == 0) return z(parse_int(t.substr(2), t));
    SymKind kind;
    std::size_t pos;
    if (t.rfind("U*(", 0) == 0) {
        kind = SymKind::Ustar;
        pos = 3;
    } else if (t.rfind("X*(", 0) == 0) {
        kind = SymKind::Xstar;
        pos = 3;
    } else if (t.rfind("U(", 0) == 0) {
        kind = SymKind::U;
        pos = 2;
    } else if (t.rfind("X(", 0) == 0) {
        kind = SymKind::X;
        pos = 2;
    } else {
        throw ParseError("unknown generator kind: '" + t + "'");
    }
    if (t.back() != ')') throw ParseError("unterminated generator: '" + t + "'");
    const std::string inner = t.substr(pos, t.size() - pos - 1);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("generator needs two indices: '" + t + "'");
    const int i = parse_int(trim(inner.substr(0, comma)), t);
    const int j = parse_int(trim(inner.substr(comma + 1)), t);
    if (i < 1 || j < 1) throw ParseError("generator indices are 1-based: '" + t + "'");
    return {kind, i - 1, j - 1, 0};
}

std::string Symbol::to_string() const {
    const std::string idx = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    switch (kind) {
        case SymKind::U: return "U" + idx;
        case SymKind::Ustar: return "U*" + idx;
        case SymKind::X: return "X" + idx;
        case SymKind::Xstar: return "X*" + idx;
        case SymKind::Z: return power == 1 ? std::string("Z") : "Z^" + std::to_string(power);
    }
    return "?";
}

bool raw_word_less(const RawWord& a, const RawWord& b) {
    const int za = total_z(a), zb = total_z(b);
    if (za != zb) return za < zb;
    return a < b;
}

void RawElement::add(const Scalar& coeff, RawWord word) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                               [](const RawTerm& t, const RawWord& w) { return raw_word_less(t.word, w); });
    if (it != terms_.end() && it->word == word) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
        return;
    }
    terms_.insert(it, RawTerm{coeff, std::move(word)});
}

bool operator==(const RawElement& a, const RawElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].word != b.terms_[k].word || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    return true;
}

// ---------------------------------------------------------------- words

Letter Letter::star() const {
    static constexpr LetterKind flip[] = {LetterKind::Ustar, LetterKind::U, LetterKind::Xstar, LetterKind::X};
    return {flip[static_cast<int>(kind)], i, j};
}

Symbol Letter::symbol() const { return {static_cast<SymKind>(kind), i, j, 0}; }

std::string Word::to_string() const {
    std::string s;
    for (const auto& l : letters) s += l.to_string();
    if (zexp != 0) s += Symbol::z(zexp).to_string();
    return s.empty() ? "1" : s;
}

RawWord Word::raw() const {
    RawWord r;
    for (const auto& l : letters) r.push_back(l.symbol());
    if (zexp != 0) r.push_back(Symbol::z(zexp));
    return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.zexp <=> b.zexp; c != 0) return c;
    return a.letters <=> b.letters;
}

int letter_degree(const Letter& g, const GradedSpace& space) {
    if (g.i >= space.n() || g.j >= space.n()) throw InvalidData("generator index out of range: " + g.to_string());
    const int d = space.degree(g.j) - space.degree(g.i);
    return g.starred() ? -d : d;
}

int word_degree(const std::vector<Letter>& letters, const GradedSpace& space) {
    int d = 0;
    for (const auto& g : letters) d += letter_degree(g, space);
    return d;
}

NormalWord normal_form(const RawWord& raw, const GradedSpace& space) {
    Word w;
    long phase = 0;
    int e = 0;
    for (const auto& s : raw) {
        if (s.kind == SymKind::Z) {
            e += s.power;
            continue;
        }
        if (s.i < 0 || s.j < 0) throw InvalidData("negative generator index");
        const Letter g{static_cast<LetterKind>(s.kind), static_cast<std::uint8_t>(s.i), static_cast<std::uint8_t>(s.j)};
        phase -= static_cast<long>(e) * letter_degree(g, space);
        w.letters.push_back(g);
    }
    w.zexp = e;
    return {std::move(w), space.zeta_pow(phase)};
}

NormalWord multiply_words(const Word& a, const Word& b, const GradedSpace& space) {
    Word w;
    w.letters.reserve(a.letters.size() + b.letters.size());
    w.letters = a.letters;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    w.zexp = a.zexp + b.zexp;
    if (a.zexp == 0 || b.letters.empty()) return {std::move(w), Scalar::one(space.field())};
    return {std::move(w), space.zeta_pow(-static_cast<long>(a.zexp) * word_degree(b.letters, space))};
}

NormalWord adjoint_word(const Word& w, const GradedSpace& space) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(it->star());
    r.zexp = -w.zexp;
    if (w.zexp == 0) return {std::move(r), Scalar::one(space.field())};
    return {r, space.zeta_pow(static_cast<long>(w.zexp) * word_degree(r.letters, space))};
}

// ---------------------------------------------------------------- elements

Element::Element(GradedSpace space) : space_(std::move(space)) {}

Element Element::constant(const GradedSpace& space, const Scalar& c) {
    Element e(space);
    e.add_term(Word{}, c);
    return e;
}

Element Element::monomial(const GradedSpace& space, Word w, const Scalar& c) {
    Element e(space);
    e.add_term(w, c);
    return e;
}

Element Element::from_raw(const RawElement& raw, const GradedSpace& space) {
    Element e(space);
    for (const auto& t : raw.terms()) {
        auto nw = normal_form(t.word, space);
        e.add_term(nw.word, t.coeff * nw.phase);
    }
    return e;
}

std::size_t Element::max_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.length());
    return m;
}

void Element::require_same(const Element& o) const { check_space(space_, o.space_); }

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    require_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    a.require_same(b);
    Element r(a.space_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            auto nw = multiply_words(wa, wb, a.space_);
            r.add_term(nw.word, ca * cb * nw.phase);
        }
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r(space_);
    for (const auto& [w, v] : terms_) r.add_term(w, v * c);
    return r;
}

Element Element::adjoint() const {
    Element r(space_);
    for (const auto& [w, c] : terms_) {
        auto nw = adjoint_word(w, space_);
        r.add_term(nw.word, c.conj() * nw.phase);
    }
    return r;
}

bool Element::homogeneous() const {
    bool first = true;
    int deg = 0;
    for (const auto& [w, c] : terms_) {
        const int d = word_degree(w.letters, space_);
        if (!first && d != deg) return false;
        deg = d;
        first = false;
    }
    return true;
}

RawElement Element::raw() const {
    RawElement r;
    for (const auto& [w, c] : terms_) r.add(c, w.raw());
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")" + w.to_string();
    }
    return s;
}

bool operator==(const Element& a, const Element& b) {
    a.require_same(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
        if (!(w == ib->first) || c != ib->second) return false;
        ++ib;
    }
    return true;
}

Scalar counit(const Word& w, const FieldSpec& f) {
    for (const auto& l : w.letters)
        if (l.i != l.j) return Scalar::zero(f);
    return Scalar::one(f);
}

Scalar counit(const Element& e) {
    Scalar acc = Scalar::zero(e.space().field());
    for (const auto& [w, c] : e.terms())
        if (!counit(w, c.field()).is_zero()) acc += c;
    return acc;
}

// ---------------------------------------------------------------- tensors

Tensor::Tensor(GradedSpace space, int legs) : space_(std::move(space)), legs_(legs) {
    if (legs < 1) throw InvalidData("tensor needs at least one leg");
}

Tensor Tensor::from_raw(const RawTensor& raw, const GradedSpace& space, int legs) {
    Tensor t(space, legs);
    for (const auto& term : raw) {
        if (static_cast<int>(term.legs.size()) != legs) throw InvalidData("tensor term has the wrong number of legs");
        std::vector<Word> ws;
        Scalar c = term.coeff;
        for (const auto& leg : term.legs) {
            auto nw = normal_form(leg, space);
            c *= nw.phase;
            ws.push_back(std::move(nw.word));
        }
        t.add_term(ws, c);
    }
    return t;
}

void Tensor::add_term(const std::vector<Word>& ws, const Scalar& c) {
    if (static_cast<int>(ws.size()) != legs_) throw InvalidData("tensor term has the wrong number of legs");
    if (c.is_zero()) return;
    auto it = terms_.find(ws);
    if (it == terms_.end()) {
        terms_.emplace(ws, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check_space(space_, o.space_);
    if (legs_ != o.legs_) throw InvalidData("tensor leg mismatch");
    for (const auto& [ws, c] : o.terms_) add_term(ws, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check_space(space_, o.space_);
    if (legs_ != o.legs_) throw InvalidData("tensor leg mismatch");
    for (const auto& [ws, c] : o.terms_) add_term(ws, -c);
    return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
    check_space(a.space_, b.space_);
    if (a.legs_ != b.legs_) throw InvalidData("tensor leg mismatch");
    Tensor r(a.space_, a.legs_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            std::vector<Word> ws(a.legs_);
            Scalar c = ca * cb;
            for (int k = 0; k < a.legs_; ++k) {
                auto nw = multiply_words(wa[k], wb[k], a.space_);
                c *= nw.phase;
                ws[k] = std::move(nw.word);
            }
            r.add_term(ws, c);
        }
    return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor r(space_, legs_);
    for (const auto& [ws, v] : terms_) r.add_term(ws, v * c);
    return r;
}

Tensor Tensor::adjoint() const {
    Tensor r(space_, legs_);
    for (const auto& [ws, c] : terms_) {
        std::vector<Word> out(legs_);
        Scalar v = c.conj();
        for (int k = 0; k < legs_; ++k) {
            auto nw = adjoint_word(ws[k], space_);
            v *= nw.phase;
            out[k] = std::move(nw.word);
        }
        r.add_term(out, v);
    }
    return r;
}

std::size_t Tensor::max_leg_length() const {
    std::size_t m = 0;
    for (const auto& [ws, c] : terms_)
        for (const auto& w : ws) m = std::max(m, w.length());
    return m;
}

std::string Tensor::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [ws, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        for (std::size_t k = 0; k < ws.size(); ++k) s += (k ? " ⊗ " : "") + ws[k].to_string();
    }
    return s;
}

bool operator==(const Tensor& a, const Tensor& b) {
    check_space(a.space_, b.space_);
    if (a.legs_ != b.legs_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [ws, c] : a.terms_) {
        if (ws != ib->first || c != ib->second) return false;
        ++ib;
    }
    return true;
}

// ---------------------------------------------------------------- comultiplication

Comultiplier::Comultiplier(const GradedSpace& space, const std::map<Letter, Tensor>& letters,
                           const std::optional<Tensor>& z_image)
    : space_(space), images_(letters) {
    for (const auto& [l, t] : letters) {
        if (t.legs() != 2) throw InvalidData("comultiplication images need two legs");
        if (!images_.count(l.star())) images_.emplace(l.star(), t.adjoint());
    }
    if (z_image) {
        if (z_image->terms().size() != 1) throw InvalidData("comultiplication of z must be a single monomial");
        const auto& [ws, c] = *z_image->terms().begin();
        if (!ws[0].letters.empty() || !ws[1].letters.empty())
            throw InvalidData("comultiplication of z must be a pure power of z on each leg");
        z_left_ = ws[0];
        z_right_ = ws[1];
        z_coeff_ = c;
    }
}

Tensor Comultiplier::z_power(int e) const {
    Tensor t(space_, 2);
    if (e == 0) {
        t.add_term({Word{}, Word{}}, Scalar::one(space_.field()));
        return t;
    }
    if (!z_left_) throw Error("generator Z has no comultiplication");
    Word a{{}, z_left_->zexp * e};
    Word b{{}, z_right_->zexp * e};
    t.add_term({a, b}, z_coeff_->pow(e));
    return t;
}

Tensor Comultiplier::apply(const Word& w) const {
    Tensor acc(space_, 2);
    acc.add_term({Word{}, Word{}}, Scalar::one(space_.field()));
    for (const auto& l : w.letters) {
        auto it = images_.find(l);
        if (it == images_.end()) throw Error("generator " + l.to_string() + " has no comultiplication");
        acc = acc * it->second;
    }
    if (w.zexp != 0) acc = acc * z_power(w.zexp);
    return acc;
}

Tensor Comultiplier::apply(const Element& e) const {
    Tensor acc(space_, 2);
    for (const auto& [w, c] : e.terms()) acc += apply(w).scaled(c);
    return acc;
}

Tensor Comultiplier::expand_leg(const Tensor& t, int leg) const {
    if (t.legs() != 2) throw InvalidData("expand_leg needs a 2-leg tensor");
    Tensor out(space_, 3);
    for (const auto& [ws, c] : t.terms()) {
        const Tensor img = apply(ws[leg]);
        for (const auto& [iw, ic] : img.terms()) {
            std::vector<Word> triple = leg == 0 ? std::vector<Word>{iw[0], iw[1], ws[1]}
                                                : std::vector<Word>{ws[0], iw[0], iw[1]};
            out.add_term(triple, c * ic);
        }
    }
    return out;
}

}  // namespace braidfoq
