#include "subconj/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string_view>
#include <unordered_set>

#include "subconj/error.hpp"

namespace subconj {

using simd::active_kernels;
using simd::kMaxDegree;
using simd::padded_length;

Permutation::Permutation(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw InputError("permutation degree must be in [1, 256], got " + std::to_string(degree));
  }
  data_.resize(padded_length(degree));
  std::iota(data_.begin(), data_.end(), std::uint8_t{0});
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  Permutation p(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || hit[images[i]]) {
      throw InputError("image list is not a permutation");
    }
    hit[images[i]] = true;
    p.data_[i] = static_cast<std::uint8_t>(images[i]);
  }
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&] {
    throw InputError("bad cycle notation '" + std::string(text) + "'");
  };
  skip_space();
  if (pos == text.size()) {
    fail();
  }
  while (pos < text.size()) {
    if (text[pos] != '(') {
      fail();
    }
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) {
        fail();
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail();
      }
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v >= degree) {
          fail();
        }
        ++pos;
      }
      if (used[v]) {
        fail();
      }
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return from_images(images);
}

bool Permutation::is_identity() const {
  return active_kernels().is_identity(data_.data(), data_.size());
}

Permutation Permutation::inverse() const {
  Permutation out(degree_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[data_[i]] = static_cast<std::uint8_t>(i);
  }
  return out;
}

Permutation Permutation::conjugate_of(const Permutation& p) const {
  Permutation out(degree_);
  Permutation inv = inverse();
  active_kernels().conjugate(p.data_.data(), data_.data(), inv.data_.data(), out.data_.data(),
                             data_.size());
  return out;
}

Permutation operator*(const Permutation& first, const Permutation& second) {
  if (first.degree_ != second.degree_) {
    throw InputError("permutation degrees differ");
  }
  Permutation out(first.degree_);
  active_kernels().compose(first.data_.data(), second.data_.data(), out.data_.data(),
                           first.data_.size());
  return out;
}

bool Permutation::operator<(const Permutation& other) const {
  if (degree_ != other.degree_) {
    return degree_ < other.degree_;
  }
  return data_ < other.data_;
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> seen(degree_, false);
  for (std::size_t start = 0; start < degree_; ++start) {
    if (seen[start] || data_[start] == start) {
      continue;
    }
    out += '(';
    std::size_t v = start;
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(v);
      first = false;
      v = data_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> generate_group(std::size_t degree,
                                        const std::vector<Permutation>& generators) {
  // Right-multiplying by generators reaches every element of a finite group;
  // inverses are positive powers.
  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_set<Permutation> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = elements[i] * g;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace subconj

std::size_t std::hash<subconj::Permutation>::operator()(
    const subconj::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull ^ p.degree();
  for (std::uint8_t b : p.padded_bytes()) {
    h = (h ^ b) * 1099511628211ull;
  }
  return h;
}
