#include "binfty/rational.hpp"

#include <gmp.h>

#include <cctype>
#include <cstring>

namespace binfty {

struct Rational::Impl {
	mpq_t q;
};

Rational::Rational() : impl_(new Impl) {
	mpq_init(impl_->q);
}

Rational::Rational(long n) : impl_(new Impl) {
	mpq_init(impl_->q);
	mpq_set_si(impl_->q, n, 1);
}

Rational::Rational(long num, long den) : impl_(new Impl) {
	if (den == 0)
		throw Error("Rational: zero denominator");
	mpq_init(impl_->q);
	mpq_set_si(impl_->q, num, 1);
	mpq_t d;
	mpq_init(d);
	mpq_set_si(d, den, 1);
	mpq_div(impl_->q, impl_->q, d);
	mpq_clear(d);
}

Rational::Rational(const Rational &other) : impl_(new Impl) {
	mpq_init(impl_->q);
	mpq_set(impl_->q, other.impl_->q);
}

Rational::Rational(Rational &&other) noexcept : impl_(other.impl_) {
	other.impl_ = nullptr;
}

Rational &Rational::operator=(const Rational &other) {
	if (this != &other)
		mpq_set(impl_->q, other.impl_->q);
	return *this;
}

Rational &Rational::operator=(Rational &&other) noexcept {
	if (this != &other) {
		if (impl_) {
			mpq_clear(impl_->q);
			delete impl_;
		}
		impl_ = other.impl_;
		other.impl_ = nullptr;
	}
	return *this;
}

Rational::~Rational() {
	if (impl_) {
		mpq_clear(impl_->q);
		delete impl_;
	}
}

std::optional<Rational> Rational::parse(const std::string &s) {
	auto is_int = [](const std::string &t) {
		if (t.empty())
			return false;
		size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
		if (i == t.size())
			return false;
		for (; i < t.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(t[i])))
				return false;
		return true;
	};
	std::string num = s, den = "1";
	auto slash = s.find('/');
	if (slash != std::string::npos) {
		num = s.substr(0, slash);
		den = s.substr(slash + 1);
	}
	if (!is_int(num) || !is_int(den))
		return std::nullopt;
	Rational r;
	mpz_t n, d;
	mpz_init(n);
	mpz_init(d);
	mpz_set_str(n, num.c_str(), 10);
	mpz_set_str(d, den.c_str(), 10);
	if (mpz_sgn(d) == 0) {
		mpz_clear(n);
		mpz_clear(d);
		return std::nullopt;
	}
	mpq_set_num(r.impl_->q, n);
	mpq_set_den(r.impl_->q, d);
	mpq_canonicalize(r.impl_->q);
	mpz_clear(n);
	mpz_clear(d);
	return r;
}

bool Rational::is_zero() const {
	return mpq_sgn(impl_->q) == 0;
}

bool Rational::is_one() const {
	return mpq_cmp_si(impl_->q, 1, 1) == 0;
}

int Rational::sign() const {
	return mpq_sgn(impl_->q);
}

Rational Rational::operator-() const {
	Rational r(*this);
	mpq_neg(r.impl_->q, r.impl_->q);
	return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
	mpq_add(impl_->q, impl_->q, rhs.impl_->q);
	return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
	mpq_sub(impl_->q, impl_->q, rhs.impl_->q);
	return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
	mpq_mul(impl_->q, impl_->q, rhs.impl_->q);
	return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
	if (rhs.is_zero())
		throw Error("Rational: division by zero");
	mpq_div(impl_->q, impl_->q, rhs.impl_->q);
	return *this;
}

bool Rational::operator==(const Rational &rhs) const {
	return mpq_equal(impl_->q, rhs.impl_->q) != 0;
}

bool Rational::operator<(const Rational &rhs) const {
	return mpq_cmp(impl_->q, rhs.impl_->q) < 0;
}

std::string Rational::str() const {
	char *n = mpz_get_str(nullptr, 10, mpq_numref(impl_->q));
	char *d = mpz_get_str(nullptr, 10, mpq_denref(impl_->q));
	std::string out = std::string(n) + "/" + std::string(d);
	void (*freefn)(void *, size_t);
	mp_get_memory_functions(nullptr, nullptr, &freefn);
	freefn(n, std::strlen(n) + 1);
	freefn(d, std::strlen(d) + 1);
	return out;
}

} // namespace binfty
