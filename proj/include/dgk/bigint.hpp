#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dgk {

/// Exact signed integer.  Relation coefficients stay tiny in practice, but
/// certificate composition multiplies them, so the arithmetic is unbounded.
/// Sign-magnitude over base-1e9 limbs; only the operations the presentation
/// machinery needs.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, coefficients read naturally
  static BigInt parse(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }
  bool fits_i64() const;
  long long as_i64() const;  // requires fits_i64()
  /// Mathematical residue in [0, m): (this mod m), m > 0.
  std::uint32_t mod_u32(std::uint32_t m) const;
  std::string str() const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

 private:
  static constexpr std::uint32_t kBase = 1000000000u;
  int sign_ = 0;                       // -1, 0, +1
  std::vector<std::uint32_t> limbs_;   // little-endian, no leading zeros, empty iff zero

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

}  // namespace dgk
