#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subconj {

// A signed generator letter.  Encoded as 2*generator + (inverse ? 1 : 0), so
// the inverse letter is code ^ 1 and letters order as a < a^-1 < b < b^-1.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, bool inverse)
      : code_(2 * generator + (inverse ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1u) != 0; }
  constexpr int sign() const { return is_inverse() ? -1 : 1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

// Generator index plus sign (+1 / -1), the unvalidated input form.
struct SignedLetter {
  std::int64_t generator;
  int sign;
};

class Alphabet {
 public:
  // Names x1..x<rank>.
  explicit Alphabet(std::size_t rank);
  explicit Alphabet(std::vector<std::string> names);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t generator) const { return names_[generator]; }
  // Throws InputError when the name is unknown.
  std::uint32_t index_of(std::string_view name) const;
  bool has(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

// A freely reduced word.  Every constructor reduces, so the invariant holds
// for every value of this type.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest generator index used plus one; 0 for the identity.
  std::size_t min_rank() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  Word& operator*=(const Word& rhs);

  bool operator==(const Word&) const = default;
  // Shortlex: shorter words first, then lexicographic by letter code.
  std::strong_ordering operator<=>(const Word& other) const;

  static Word generator(std::uint32_t index) { return Word{Letter(index, false)}; }

 private:
  std::vector<Letter> letters_;
};

// Freely reduces signed letters, validating generator indices against rank.
// Throws InputError on an index outside [0, rank) or a sign other than +-1.
Word free_reduce(std::span<const SignedLetter> raw, std::size_t rank);
// Reduces an arbitrary letter sequence (no validation; letters are typed).
Word free_reduce(std::span<const Letter> raw);

Word invert(const Word& w);

struct CyclicReduction {
  Word core;
  Word prefix;
};

// w = prefix * core * prefix^-1 with core cyclically reduced and prefix of
// minimal length.  Equivalently core = prefix^-1 * w * prefix.
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// c^-1 * w * c, freely reduced.
Word conjugate(const Word& w, const Word& c);

// Whitespace-separated tokens "name" or "name^-1"; "1" is the identity.
// Throws InputError naming the offending token.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string to_string(const Word& w, const Alphabet& alphabet);

// Calls visit(word) for every reduced word of exactly the given length over
// the rank, in shortlex order.  Stops early if visit returns false; returns
// false in that case.
bool for_each_reduced_word(std::size_t rank, std::size_t length,
                           const std::function<bool(const Word&)>& visit);

}  // namespace subconj

template <>
struct std::hash<subconj::Word> {
  std::size_t operator()(const subconj::Word& w) const noexcept;
};
