#pragma once

// Exact scalar types: arbitrary-precision rationals and prime fields F_p with a
// per-thread modulus (set with FpContext).  Both are usable as Eigen scalars.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <type_traits>

#include "cmtilt/errors.hpp"

namespace cmtilt {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

bool is_prime(std::uint64_t n);

namespace detail {
inline thread_local std::uint32_t fp_modulus = 0;
}

/// Element of the prime field F_p, p taken from the calling thread's FpContext.
class Fp {
 public:
  Fp() = default;
  Fp(long long v) {  // NOLINT(google-explicit-constructor): literal promotion
    const auto p = static_cast<long long>(modulus());
    long long r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static std::uint32_t modulus() {
    if (detail::fp_modulus == 0)
      throw Error(ErrorKind::InvalidInput, "F_p arithmetic used without an active FpContext");
    return detail::fp_modulus;
  }

  std::uint32_t value() const noexcept { return v_; }

  Fp& operator+=(const Fp& o) {
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= modulus()) s -= modulus();
    v_ = static_cast<std::uint32_t>(s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + modulus() - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % modulus());
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  Fp inverse() const {
    if (v_ == 0) throw Error(ErrorKind::InternalCheckFailed, "division by zero in F_p");
    // Fermat: v^(p-2).
    std::uint64_t base = v_, result = 1, e = modulus() - 2;
    while (e) {
      if (e & 1) result = (result * base) % modulus();
      base = (base * base) % modulus();
      e >>= 1;
    }
    Fp r;
    r.v_ = static_cast<std::uint32_t>(result);
    return r;
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp() - *this; }
  Fp operator+() const { return *this; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

/// Sets the F_p modulus for the current thread; restores the previous one on exit.
class FpContext {
 public:
  explicit FpContext(std::uint32_t p) : saved_(detail::fp_modulus) {
    if (p < 2 || !is_prime(p)) throw Error(ErrorKind::InvalidInput, "modulus is not prime");
    detail::fp_modulus = p;
  }
  ~FpContext() { detail::fp_modulus = saved_; }
  FpContext(const FpContext&) = delete;
  FpContext& operator=(const FpContext&) = delete;

 private:
  std::uint32_t saved_;
};

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q" or "fp:<p>".
  static FieldSpec parse(const std::string& text);
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// ---- scalar helpers used by the generic code -------------------------------

template <class S>
inline constexpr bool is_rational_v = std::is_same_v<S, Rational>;

template <class S>
bool is_zero(const S& s) {
  if constexpr (is_rational_v<S>) return s.is_zero();
  else return s.value() == 0;
}

template <class S>
S inv(const S& s) {
  if constexpr (is_rational_v<S>) {
    if (s.is_zero()) throw Error(ErrorKind::InternalCheckFailed, "division by zero in Q");
    return Rational(1) / s;
  } else {
    return s.inverse();
  }
}

/// 0 for Q.
template <class S>
std::uint64_t characteristic() {
  if constexpr (is_rational_v<S>) return 0;
  else return Fp::modulus();
}

template <class S>
S from_rational(const Rational& q) {
  if constexpr (is_rational_v<S>) {
    return q;
  } else {
    const auto p = static_cast<long long>(Fp::modulus());
    BigInt num = boost::multiprecision::numerator(q) % p;
    BigInt den = boost::multiprecision::denominator(q) % p;
    Fp d(den.convert_to<long long>());
    if (d == Fp(0))
      throw Error(ErrorKind::InvalidInput, "coefficient denominator vanishes modulo p");
    return Fp(num.convert_to<long long>()) / d;
  }
}

template <class S>
std::string to_string(const S& s) {
  if constexpr (is_rational_v<S>) return s.str();
  else return std::to_string(s.value());
}

/// Uniform over F_p; small integers in [-9, 9] over Q.
template <class S, class Rng>
S random_scalar(Rng& rng) {
  if constexpr (is_rational_v<S>) {
    std::uniform_int_distribution<int> dist(-9, 9);
    return Rational(dist(rng));
  } else {
    std::uniform_int_distribution<std::uint32_t> dist(0, Fp::modulus() - 1);
    return Fp(static_cast<long long>(dist(rng)));
  }
}

/// Field size, or 0 when infinite.
template <class S>
std::uint64_t field_size() {
  return characteristic<S>();
}

/// Runs `fn(S{})` with S the scalar type for `spec`, inside an FpContext if needed.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(Rational{});
  FpContext ctx(spec.p);
  return fn(Fp{});
}

}  // namespace cmtilt

namespace Eigen {
template <>
struct NumTraits<cmtilt::Fp> : GenericNumTraits<cmtilt::Fp> {
  using Real = cmtilt::Fp;
  using NonInteger = cmtilt::Fp;
  using Nested = cmtilt::Fp;
  using Literal = cmtilt::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen
