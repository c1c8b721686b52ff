#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace klck {

/// A word in the simple reflections s_1 .. s_{n-1}, stored as letters 1..n-1.
/// Words multiply left to right: "45231" denotes s_4 s_5 s_2 s_3 s_1.
using Word = std::vector<int>;

Word parse_word(const std::string& digits);
std::string word_str(const Word& w);

/// Element of S_n in one-line notation. image()[i] = w(i+1) - 1 (0-indexed
/// internally; serialized one-line notation uses values 1..n).
class Perm {
public:
  Perm() = default;
  static Perm identity(int n);
  static Perm simple(int n, int i);              // s_i, 1 <= i <= n-1
  static Perm from_images(std::vector<uint8_t> im);   // 0-indexed images
  static Perm from_one_line(const std::string& csv, int n = 0);  // "3,1,2"
  static Perm from_word(const Word& w, int n);
  /// Accepts either comma-separated one-line notation or a generator-word
  /// digit string ("e" for the identity).
  static Perm parse(const std::string& text, int n);

  int n() const { return static_cast<int>(im_.size()); }
  int operator()(int i) const { return im_[static_cast<size_t>(i)]; }  // 0-indexed
  const std::vector<uint8_t>& images() const { return im_; }

  Perm compose(const Perm& rhs) const;   // (a*b)(i) = a(b(i))
  Perm inverse() const;
  Perm times_s(int i) const;             // w * s_i : swap positions i-1, i
  Perm s_times(int i) const;             // s_i * w : swap values i-1, i

  int length() const;                    // inversion count
  bool is_identity() const;
  bool is_involution() const { return compose(*this).is_identity(); }
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const { return inverse().right_descents(); }
  /// Letters of any reduced word; i is in the support iff w does not
  /// stabilize {1..i}.
  std::vector<int> support() const;
  Word reduced_word() const;             // lexicographically smallest

  bool operator==(const Perm& o) const { return im_ == o.im_; }
  bool operator!=(const Perm& o) const { return im_ != o.im_; }
  bool operator<(const Perm& o) const { return im_ < o.im_; }

  std::string one_line() const;          // "3,1,2"
  std::string compact() const;           // "312" (n <= 9)

private:
  std::vector<uint8_t> im_;
};

} // namespace klck
