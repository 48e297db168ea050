#include "dgk/bigint.hpp"

#include <stdexcept>

namespace dgk {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                               : 0ULL - static_cast<unsigned long long>(v);
  while (m > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
    m /= kBase;
  }
}

BigInt BigInt::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigInt::parse: empty string");
  size_t i = 0;
  int sign = 1;
  if (s[0] == '-') {
    sign = -1;
    i = 1;
  } else if (s[0] == '+') {
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt::parse: no digits");
  BigInt out;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt::parse: bad digit in '" + s + "'");
    out *= BigInt(10);
    out += BigInt(s[i] - '0');
  }
  if (sign < 0) out = -out;
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
    std::uint64_t v = carry;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v += b[i];
    out.push_back(static_cast<std::uint32_t>(v % kBase));
    carry = v / kBase;
  }
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (v < 0) {
      v += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = o;
    return *this;
  }
  if (sign_ == o.sign_) {
    limbs_ = add_mag(limbs_, o.limbs_);
    return *this;
  }
  int c = cmp_mag(limbs_, o.limbs_);
  if (c == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (c > 0) {
    limbs_ = sub_mag(limbs_, o.limbs_);
  } else {
    limbs_ = sub_mag(o.limbs_, limbs_);
    sign_ = o.sign_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (sign_ == 0 || o.sign_ == 0) {
    sign_ = 0;
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size() || carry; ++j) {
      std::uint64_t v = out[i + j] + carry;
      if (j < o.limbs_.size())
        v += static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
      out[i + j] = static_cast<std::uint32_t>(v % kBase);
      carry = v / kBase;
    }
  }
  limbs_ = std::move(out);
  sign_ *= o.sign_;
  trim();
  return *this;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
  if (a.sign_ >= 0) return c <=> 0;
  return 0 <=> c;
}

bool BigInt::fits_i64() const {
  if (limbs_.size() < 3) return true;
  if (limbs_.size() > 3) return false;
  BigInt abs = *this;
  abs.sign_ = 1;
  if (sign_ < 0) {
    const BigInt min_mag = BigInt(9223372036854775807LL) + BigInt(1);
    return abs <= min_mag;
  }
  return abs <= BigInt(9223372036854775807LL);
}

long long BigInt::as_i64() const {
  unsigned long long m = 0;
  for (size_t i = limbs_.size(); i-- > 0;) m = m * kBase + limbs_[i];
  if (sign_ < 0) return static_cast<long long>(0ULL - m);
  return static_cast<long long>(m);
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
  if (m == 0) throw std::invalid_argument("BigInt::mod_u32: modulus 0");
  std::uint64_t r = 0;
  for (size_t i = limbs_.size(); i-- > 0;) r = (r * kBase + limbs_[i]) % m;
  if (sign_ < 0 && r != 0) r = m - r;
  return static_cast<std::uint32_t>(r);
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace dgk
