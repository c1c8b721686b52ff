#include "klcellkit/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace klck {

Word parse_word(const std::string& digits) {
  Word w;
  if (digits == "e" || digits.empty()) return w;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("word letters must be digits 1..9");
    w.push_back(ch - '0');
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int c : w) s += static_cast<char>('0' + c);
  return s;
}

Perm Perm::identity(int n) {
  Perm p;
  p.im_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.im_[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  return p;
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  Perm p = identity(n);
  std::swap(p.im_[static_cast<size_t>(i - 1)], p.im_[static_cast<size_t>(i)]);
  return p;
}

Perm Perm::from_images(std::vector<uint8_t> im) {
  std::vector<bool> seen(im.size(), false);
  for (auto v : im) {
    if (v >= im.size() || seen[v]) throw std::invalid_argument("images are not a permutation");
    seen[v] = true;
  }
  Perm p;
  p.im_ = std::move(im);
  return p;
}

Perm Perm::from_one_line(const std::string& csv, int n) {
  std::vector<uint8_t> im;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int v = std::stoi(tok);
    if (v < 1) throw std::invalid_argument("one-line entries are 1..n");
    im.push_back(static_cast<uint8_t>(v - 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (n > 0 && static_cast<int>(im.size()) != n)
    throw std::invalid_argument("one-line notation has wrong rank");
  return from_images(std::move(im));
}

Perm Perm::from_word(const Word& w, int n) {
  Perm p = identity(n);
  for (int c : w) p = p.times_s(c);
  return p;
}

Perm Perm::parse(const std::string& text, int n) {
  if (text.find(',') != std::string::npos) return from_one_line(text, n);
  Word w = parse_word(text);
  for (int c : w)
    if (c >= n) throw std::invalid_argument("word letter " + std::to_string(c) + " out of range for n=" + std::to_string(n));
  return from_word(w, n);
}

Perm Perm::compose(const Perm& rhs) const {
  if (n() != rhs.n()) throw std::invalid_argument("rank mismatch in compose");
  Perm p;
  p.im_.resize(im_.size());
  for (size_t i = 0; i < im_.size(); ++i) p.im_[i] = im_[rhs.im_[i]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.im_.resize(im_.size());
  for (size_t i = 0; i < im_.size(); ++i) p.im_[im_[i]] = static_cast<uint8_t>(i);
  return p;
}

Perm Perm::times_s(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("generator index out of range");
  Perm p = *this;
  std::swap(p.im_[static_cast<size_t>(i - 1)], p.im_[static_cast<size_t>(i)]);
  return p;
}

Perm Perm::s_times(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("generator index out of range");
  Perm p = *this;
  int a = -1, b = -1;
  for (int k = 0; k < n(); ++k) {
    if (im_[static_cast<size_t>(k)] == i - 1) a = k;
    if (im_[static_cast<size_t>(k)] == i) b = k;
  }
  std::swap(p.im_[static_cast<size_t>(a)], p.im_[static_cast<size_t>(b)]);
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (size_t i = 0; i < im_.size(); ++i)
    for (size_t j = i + 1; j < im_.size(); ++j)
      if (im_[i] > im_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < im_.size(); ++i)
    if (im_[i] != i) return false;
  return true;
}

std::vector<int> Perm::right_descents() const {
  std::vector<int> d;
  for (int i = 1; i < n(); ++i)
    if (im_[static_cast<size_t>(i - 1)] > im_[static_cast<size_t>(i)]) d.push_back(i);
  return d;
}

std::vector<int> Perm::support() const {
  std::vector<int> s;
  int mx = -1;
  for (int i = 1; i < n(); ++i) {
    mx = std::max(mx, static_cast<int>(im_[static_cast<size_t>(i - 1)]));
    if (mx > i - 1) s.push_back(i);
  }
  return s;
}

Word Perm::reduced_word() const {
  // Left-strip the smallest left descent; yields the lex-smallest reduced word.
  Word w;
  Perm p = *this;
  while (!p.is_identity()) {
    auto ld = p.left_descents();
    int s = ld.front();
    w.push_back(s);
    p = p.s_times(s);
  }
  return w;
}

std::string Perm::one_line() const {
  std::string s;
  for (size_t i = 0; i < im_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(im_[i] + 1);
  }
  return s;
}

std::string Perm::compact() const {
  std::string s;
  for (auto v : im_) s += static_cast<char>('1' + v);
  return s;
}

} // namespace klck
