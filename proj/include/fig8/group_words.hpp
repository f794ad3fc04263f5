#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fig8/numeric.hpp"

namespace fig8 {

enum class Generator : std::uint8_t { x = 0, y = 1 };

struct Letter {
    Generator gen = Generator::x;
    bool inverse = false;

    Letter inverted() const noexcept { return {gen, !inverse}; }
    char symbol() const noexcept;  // x, X, y, Y

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x, y. Text form uses x, y for the
/// generators and X, Y for their inverses; "" is the identity.
class GroupWord {
public:
    GroupWord() = default;

    /// Reduces the letter sequence freely.
    static GroupWord from_letters(const std::vector<Letter>& letters);

    /// Accepts the compact form "xYXy" and the caret form "x y^-1 x^-1 y"
    /// (integer exponents, any sign). Whitespace is ignored; "1" alone is the
    /// identity. Throws ParseError on anything else.
    static GroupWord parse(std::string_view text);

    static GroupWord generator(Generator g, bool inverse = false);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }

    /// Compact form.
    std::string str() const;

    GroupWord inverse() const;

    /// Sum of exponents of g (the abelianization coordinate).
    int exponent_sum(Generator g) const noexcept;

    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Free concatenation followed by reduction at the seam.
GroupWord operator*(const GroupWord& a, const GroupWord& b);

inline GroupWord word_inverse(const GroupWord& w) { return w.inverse(); }
inline GroupWord word_concat(const GroupWord& a, const GroupWord& b) { return a * b; }

/// Finite formal sum of words with integer coefficients, an element of Z[F_2].
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement one() { return of(GroupWord{}, 1); }
    static GroupRingElement of(const GroupWord& w, std::int64_t coeff = 1);

    void add(const GroupWord& w, std::int64_t coeff);
    const std::map<GroupWord, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& other);
    GroupRingElement& operator-=(const GroupRingElement& other);

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::map<GroupWord, std::int64_t> terms_;  // no zero coefficients
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b);
/// Left multiplication by a group element.
GroupRingElement operator*(const GroupWord& g, const GroupRingElement& e);

/// Fox free derivative d w / d g, by the product rule read left to right.
GroupRingElement fox_derivative(const GroupWord& w, Generator g);

/// Images of the two generators under a representation into SL(2, C).
struct GeneratorImages {
    Mat2 x;
    Mat2 y;
};

Mat2 evaluate_word(const GroupWord& w, const GeneratorImages& images);
Mat2 evaluate_group_ring(const GroupRingElement& e, const GeneratorImages& images);

} // namespace fig8
