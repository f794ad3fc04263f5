#include "fig8/group_words.hpp"

#include <cctype>
#include <cstdlib>

#include "fig8/errors.hpp"

namespace fig8 {

char Letter::symbol() const noexcept {
    if (gen == Generator::x) return inverse ? 'X' : 'x';
    return inverse ? 'Y' : 'y';
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == l.inverted())
        out.pop_back();
    else
        out.push_back(l);
}

bool letter_from_char(char c, Letter& out) {
    switch (c) {
    case 'x': out = {Generator::x, false}; return true;
    case 'X': out = {Generator::x, true}; return true;
    case 'y': out = {Generator::y, false}; return true;
    case 'Y': out = {Generator::y, true}; return true;
    default: return false;
    }
}

} // namespace

GroupWord GroupWord::from_letters(const std::vector<Letter>& letters) {
    GroupWord w;
    for (auto l : letters) push_reduced(w.letters_, l);
    return w;
}

GroupWord GroupWord::generator(Generator g, bool inverse) { return from_letters({Letter{g, inverse}}); }

GroupWord GroupWord::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact == "1") return {};

    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        Letter l;
        if (!letter_from_char(compact[pos], l))
            throw ParseError(std::string("unexpected character '") + compact[pos] + "' at offset " +
                             std::to_string(pos));
        ++pos;
        long exponent = 1;
        if (pos < compact.size() && compact[pos] == '^') {
            ++pos;
            const std::size_t start = pos;
            if (pos < compact.size() && (compact[pos] == '-' || compact[pos] == '+')) ++pos;
            while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
            const std::string digits = compact.substr(start, pos - start);
            if (digits.empty() || digits == "-" || digits == "+")
                throw ParseError("missing exponent after '^' at offset " + std::to_string(start));
            if (digits.size() > 7) throw ParseError("exponent too large: " + digits);
            exponent = std::strtol(digits.c_str(), nullptr, 10);
        }
        if (exponent < 0) {
            l = l.inverted();
            exponent = -exponent;
        }
        for (long k = 0; k < exponent; ++k) letters.push_back(l);
    }
    return from_letters(letters);
}

std::string GroupWord::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) s.push_back(l.symbol());
    return s;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
    return w;
}

int GroupWord::exponent_sum(Generator g) const noexcept {
    int sum = 0;
    for (auto l : letters_)
        if (l.gen == g) sum += l.inverse ? -1 : 1;
    return sum;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return GroupWord::from_letters(letters);
}

GroupRingElement GroupRingElement::of(const GroupWord& w, std::int64_t coeff) {
    GroupRingElement e;
    e.add(w, coeff);
    return e;
}

void GroupRingElement::add(const GroupWord& w, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }

GroupRingElement operator*(const GroupWord& g, const GroupRingElement& e) {
    GroupRingElement out;
    for (const auto& [w, c] : e.terms()) out.add(g * w, c);
    return out;
}

GroupRingElement fox_derivative(const GroupWord& w, Generator g) {
    // d(l_1 ... l_n)/dg = sum_k l_1 ... l_{k-1} * d l_k / dg, with
    // dg/dg = 1 and dg^-1/dg = -g^-1.
    GroupRingElement result;
    std::vector<Letter> prefix;
    for (auto l : w.letters()) {
        if (l.gen == g) {
            if (!l.inverse) {
                result.add(GroupWord::from_letters(prefix), 1);
            } else {
                auto with_inverse = prefix;
                with_inverse.push_back(l);
                result.add(GroupWord::from_letters(with_inverse), -1);
            }
        }
        prefix.push_back(l);
    }
    return result;
}

Mat2 evaluate_word(const GroupWord& w, const GeneratorImages& images) {
    const Mat2 x_inv = mat2_inverse(images.x);
    const Mat2 y_inv = mat2_inverse(images.y);
    Mat2 acc = Mat2::identity();
    for (auto l : w.letters()) {
        if (l.gen == Generator::x)
            acc = acc * (l.inverse ? x_inv : images.x);
        else
            acc = acc * (l.inverse ? y_inv : images.y);
    }
    return acc;
}

Mat2 evaluate_group_ring(const GroupRingElement& e, const GeneratorImages& images) {
    Mat2 acc = Mat2::zero();
    for (const auto& [w, c] : e.terms()) acc = acc + static_cast<double>(c) * evaluate_word(w, images);
    return acc;
}

} // namespace fig8
