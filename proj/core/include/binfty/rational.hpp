#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace binfty {

/// Error raised by library operations (bad arity, cap overflow, parse failure, ...).
class Error : public std::runtime_error {
  public:
	explicit Error(const std::string &what) : std::runtime_error(what) {}
};

class CapError : public Error {
  public:
	explicit CapError(const std::string &what) : Error(what) {}
};

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; zero is 0/1.
class Rational {
  public:
	Rational();
	Rational(long n);
	Rational(long num, long den);
	Rational(const Rational &other);
	Rational(Rational &&other) noexcept;
	Rational &operator=(const Rational &other);
	Rational &operator=(Rational &&other) noexcept;
	~Rational();

	/// Parses "p/q" or "p" with arbitrary-precision decimal integers.
	static std::optional<Rational> parse(const std::string &s);

	bool is_zero() const;
	bool is_one() const;
	int sign() const;

	Rational operator-() const;
	Rational &operator+=(const Rational &rhs);
	Rational &operator-=(const Rational &rhs);
	Rational &operator*=(const Rational &rhs);
	/// Division by zero throws Error.
	Rational &operator/=(const Rational &rhs);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	bool operator==(const Rational &rhs) const;
	bool operator!=(const Rational &rhs) const { return !(*this == rhs); }
	bool operator<(const Rational &rhs) const;

	/// Canonical form "p/q", e.g. "3/1", "-2/5".
	std::string str() const;

  private:
	struct Impl;
	Impl *impl_;
};

} // namespace binfty
