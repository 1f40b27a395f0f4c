#include "subconj/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "subconj/error.hpp"

namespace subconj {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// Stack-based reduction; the result is independent of cancellation order.
std::vector<Letter> reduce_letters(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(std::size_t rank) {
  if (rank == 0) {
    throw InputError("alphabet rank must be at least 1");
  }
  names_.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (rank <= 26) {
      names_.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names_.push_back("x" + std::to_string(i + 1));
    }
  }
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw InputError("alphabet rank must be at least 1");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) {
      throw InputError("invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw InputError("duplicate generator name '" + n + "'");
    }
  }
}

std::uint32_t Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw InputError("unknown generator '" + std::string(name) + "'");
  }
  return static_cast<std::uint32_t>(it - names_.begin());
}

bool Alphabet::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Word::Word(std::initializer_list<Letter> letters)
    : letters_(reduce_letters(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word::Word(std::span<const Letter> letters) : letters_(reduce_letters(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

std::size_t Word::min_rank() const {
  std::size_t r = 0;
  for (Letter l : letters_) {
    r = std::max<std::size_t>(r, l.generator() + 1);
  }
  return r;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out *= rhs;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t i = 0;
  while (i < rhs.size() && !letters_.empty() && letters_.back() == rhs[i].inverse()) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  rhs.letters_.end());
  return *this;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = size() <=> other.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                other.letters_.begin(), other.letters_.end());
}

Word free_reduce(std::span<const SignedLetter> raw, std::size_t rank) {
  std::vector<Letter> letters;
  letters.reserve(raw.size());
  for (const auto& s : raw) {
    if (s.generator < 0 || static_cast<std::size_t>(s.generator) >= rank) {
      throw InputError("generator index " + std::to_string(s.generator) +
                       " out of range for rank " + std::to_string(rank));
    }
    if (s.sign != 1 && s.sign != -1) {
      throw InputError("letter sign must be +1 or -1");
    }
    letters.emplace_back(static_cast<std::uint32_t>(s.generator), s.sign < 0);
  }
  return Word(std::move(letters));
}

Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  const std::size_t n = w.size();
  while (2 * k + 1 < n && w[k] == w[n - 1 - k].inverse()) {
    ++k;
  }
  auto letters = w.letters();
  return {Word(letters.subspan(k, n - 2 * k)), Word(letters.subspan(0, k))};
}

Word conjugate(const Word& w, const Word& c) { return invert(c) * w * c; }

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  bool saw_identity = false;
  std::size_t tokens = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) {
      break;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    ++tokens;
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    bool inverse = false;
    std::string_view name = token;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      if (token.substr(caret) != "^-1") {
        throw InputError("bad token '" + std::string(token) + "'");
      }
      inverse = true;
      name = token.substr(0, caret);
    }
    if (!alphabet.has(name)) {
      throw InputError("bad token '" + std::string(token) + "'");
    }
    letters.emplace_back(alphabet.index_of(name), inverse);
  }
  if (saw_identity && tokens > 1) {
    throw InputError("'1' must stand alone in a word");
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += alphabet.name(l.generator());
    if (l.is_inverse()) {
      out += "^-1";
    }
  }
  return out;
}

namespace {

bool extend_words(std::size_t rank, std::size_t length, std::vector<Letter>& prefix,
                  const std::function<bool(const Word&)>& visit) {
  if (prefix.size() == length) {
    return visit(Word(std::span<const Letter>(prefix)));
  }
  for (std::uint32_t code = 0; code < 2 * rank; ++code) {
    Letter l = Letter::from_code(code);
    if (!prefix.empty() && prefix.back() == l.inverse()) {
      continue;
    }
    prefix.push_back(l);
    bool keep_going = extend_words(rank, length, prefix, visit);
    prefix.pop_back();
    if (!keep_going) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool for_each_reduced_word(std::size_t rank, std::size_t length,
                           const std::function<bool(const Word&)>& visit) {
  std::vector<Letter> prefix;
  prefix.reserve(length);
  return extend_words(rank, length, prefix, visit);
}

}  // namespace subconj

std::size_t std::hash<subconj::Word>::operator()(const subconj::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto l : w) {
    h = (h ^ l.code()) * 1099511628211ull;
  }
  return h;
}
