// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anyonkit/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace anyonkit {

PauliOperator::PauliOperator(int n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

void PauliOperator::set_x(int j, bool v) {
  if (v)
    x_[j >> 6] |= 1ull << (j & 63);
  else
    x_[j >> 6] &= ~(1ull << (j & 63));
}

void PauliOperator::set_z(int j, bool v) {
  if (v)
    z_[j >> 6] |= 1ull << (j & 63);
  else
    z_[j >> 6] &= ~(1ull << (j & 63));
}

int PauliOperator::weight() const {
  int w = 0;
  for (size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
  return w;
}

bool PauliOperator::is_identity_pauli() const {
  for (size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i]) return false;
  return true;
}

bool PauliOperator::is_identity() const { return phase_ == 0 && is_identity_pauli(); }

bool PauliOperator::same_pauli(const PauliOperator& o) const {
  return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
}

int PauliOperator::overlap_parity(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  uint64_t acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

PauliOperator PauliOperator::times(const PauliOperator& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("pauli length mismatch");
  PauliOperator out(n_);
  // Z block of the left factor moves across the X block of the right factor.
  int swaps = overlap_parity(z_, rhs.x_);
  out.phase_ = (phase_ + rhs.phase_ + 2 * swaps) & 3;
  for (size_t i = 0; i < x_.size(); ++i) {
    out.x_[i] = x_[i] ^ rhs.x_[i];
    out.z_[i] = z_[i] ^ rhs.z_[i];
  }
  return out;
}

PauliOperator PauliOperator::inverse() const {
  // (X^a Z^b)^2 = (-1)^{<a,b>}, so the inverse reuses the same bits.
  PauliOperator out = *this;
  int self = overlap_parity(x_, z_);
  out.phase_ = ((-phase_ + 2 * self) % 4 + 4) & 3;
  return out;
}

int PauliOperator::commutation_sign(const PauliOperator& a, const PauliOperator& b) {
  int s = overlap_parity(a.x_, b.z_) ^ overlap_parity(a.z_, b.x_);
  return s ? -1 : 1;
}

namespace {

std::string bits_to_hex(const std::vector<uint64_t>& words, int n) {
  int digits = (n + 3) / 4;
  std::string out(digits, '0');
  for (int d = 0; d < digits; ++d) {
    int nibble = static_cast<int>((words[(d * 4) >> 6] >> ((d * 4) & 63)) & 0xf);
    out[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return out;
}

void hex_to_bits(const std::string& hex, std::vector<uint64_t>& words, int n) {
  int digits = (n + 3) / 4;
  if (static_cast<int>(hex.size()) != digits)
    throw std::invalid_argument("pauli hex field has wrong length");
  for (int d = 0; d < digits; ++d) {
    char c = hex[digits - 1 - d];
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nibble = c - 'A' + 10;
    else
      throw std::invalid_argument("bad hex digit in pauli");
    words[(d * 4) >> 6] |= static_cast<uint64_t>(nibble) << ((d * 4) & 63);
  }
  // Bits beyond n must be zero.
  if (n & 63) {
    uint64_t mask = ~((1ull << (n & 63)) - 1);
    if (words.back() & mask) throw std::invalid_argument("pauli hex sets bits beyond n");
  }
}

}  // namespace

std::string PauliOperator::serialize() const {
  return "i^" + std::to_string(phase_) + "|" + bits_to_hex(x_, n_) + "|" + bits_to_hex(z_, n_);
}

PauliOperator PauliOperator::deserialize(const std::string& text, int n) {
  if (text.size() < 4 || text[0] != 'i' || text[1] != '^')
    throw std::invalid_argument("bad pauli serialization: " + text);
  size_t bar1 = text.find('|');
  size_t bar2 = text.find('|', bar1 + 1);
  if (bar1 == std::string::npos || bar2 == std::string::npos)
    throw std::invalid_argument("bad pauli serialization: " + text);
  PauliOperator out(n);
  int p = std::stoi(text.substr(2, bar1 - 2));
  if (p < 0 || p > 3) throw std::invalid_argument("pauli phase out of range: " + text);
  out.phase_ = p;
  hex_to_bits(text.substr(bar1 + 1, bar2 - bar1 - 1), out.x_, n);
  hex_to_bits(text.substr(bar2 + 1), out.z_, n);
  return out;
}

}  // namespace anyonkit
