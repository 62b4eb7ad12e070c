#include "superdix/scalar.hpp"

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace superdix {

namespace {

using Coeffs = std::vector<Rational>;

bool all_zero(const Rational* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(p[i]) != 0) return false;
    return true;
}

std::size_t log2_exact(std::size_t n) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

Coeffs lifted(const Coeffs& a, std::size_t len) {
    Coeffs r(len, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

void mul_rec(const Rational* a, const Rational* b, std::size_t len, Rational* out);

// d * v where d is the radicand of the level split at `len` (len = 2 * half).
void mul_radicand(const Rational* v, std::size_t half, Rational* out) {
    std::size_t level = log2_exact(half);
    Coeffs d = lifted(Tower::global().radicand(level).coefficients(), half);
    mul_rec(d.data(), v, half, out);
}

void mul_rec(const Rational* a, const Rational* b, std::size_t len, Rational* out) {
    if (len == 1) {
        out[0] = a[0] * b[0];
        return;
    }
    std::size_t half = len / 2;
    const Rational* a0 = a;
    const Rational* a1 = a + half;
    const Rational* b0 = b;
    const Rational* b1 = b + half;
    bool za1 = all_zero(a1, half);
    bool zb1 = all_zero(b1, half);
    Coeffs t(half);
    mul_rec(a0, b0, half, out);
    if (!za1 && !zb1) {
        Coeffs ab(half);
        mul_rec(a1, b1, half, ab.data());
        mul_radicand(ab.data(), half, t.data());
        for (std::size_t i = 0; i < half; ++i) out[i] += t[i];
    }
    for (std::size_t i = 0; i < half; ++i) out[half + i] = 0;
    if (!zb1) {
        mul_rec(a0, b1, half, t.data());
        for (std::size_t i = 0; i < half; ++i) out[half + i] += t[i];
    }
    if (!za1) {
        mul_rec(a1, b0, half, t.data());
        for (std::size_t i = 0; i < half; ++i) out[half + i] += t[i];
    }
}

Coeffs inv_rec(const Coeffs& a) {
    std::size_t len = a.size();
    if (len == 1) {
        if (sgn(a[0]) == 0) throw std::domain_error("division by zero scalar");
        return {Rational(1) / a[0]};
    }
    std::size_t half = len / 2;
    Coeffs a0(a.begin(), a.begin() + half);
    Coeffs a1(a.begin() + half, a.end());
    Coeffs out(len, Rational(0));
    if (all_zero(a1.data(), half)) {
        Coeffs i0 = inv_rec(a0);
        for (std::size_t i = 0; i < half; ++i) out[i] = i0[i];
        return out;
    }
    // (a0 + a1 r)^{-1} = (a0 - a1 r) / (a0^2 - d a1^2)
    Coeffs sq0(half), sq1(half), dsq1(half);
    mul_rec(a0.data(), a0.data(), half, sq0.data());
    mul_rec(a1.data(), a1.data(), half, sq1.data());
    mul_radicand(sq1.data(), half, dsq1.data());
    Coeffs norm(half);
    for (std::size_t i = 0; i < half; ++i) norm[i] = sq0[i] - dsq1[i];
    Coeffs ninv = inv_rec(norm);
    Coeffs lo(half), hi(half);
    mul_rec(a0.data(), ninv.data(), half, lo.data());
    mul_rec(a1.data(), ninv.data(), half, hi.data());
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = lo[i];
        out[half + i] = -hi[i];
    }
    return out;
}

std::string rational_string(const Rational& q) {
    return q.get_str();
}

Scalar basis_root(std::size_t level) {
    Coeffs c(std::size_t{1} << (level + 1), Rational(0));
    c[std::size_t{1} << level] = 1;
    return Scalar::from_coefficients(std::move(c));
}

std::pair<Scalar, Scalar> split_at(const Scalar& x, std::size_t level) {
    std::size_t half = std::size_t{1} << level;
    Coeffs c = lifted(x.coefficients(), std::max(2 * half, x.coefficients().size()));
    if (c.size() > 2 * half) throw std::logic_error("split_at below value level");
    Coeffs lo(c.begin(), c.begin() + half), hi(c.begin() + half, c.end());
    return {Scalar::from_coefficients(std::move(lo)), Scalar::from_coefficients(std::move(hi))};
}

std::optional<Scalar> sqrt_rational(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Scalar(Rational(n, d));
}

// Square root of x inside Q(sqrt(d_1..d_levels)), searched exhaustively.
std::optional<Scalar> sqrt_in(const Scalar& x, std::size_t levels) {
    if (x.is_zero()) return Scalar(0);
    if (levels == 0) {
        if (!x.is_rational()) throw std::logic_error("sqrt_in: value above level");
        return sqrt_rational(x.rational());
    }
    std::size_t top = levels - 1;
    const Scalar& d = Tower::global().radicand(top);
    auto [a0, a1] = split_at(x, top);
    Scalar r = basis_root(top);
    if (a1.is_zero()) {
        if (auto s = sqrt_in(a0, top)) return *s;
        if (auto t = sqrt_in(a0 / d, top)) return *t * r;
        return std::nullopt;
    }
    Scalar norm = a0 * a0 - a1 * a1 * d;
    auto n = sqrt_in(norm, top);
    if (!n) return std::nullopt;
    for (int sign : {1, -1}) {
        Scalar x2 = (a0 + Scalar(sign) * *n) / Scalar(2);
        if (x2.is_zero()) continue;
        if (auto s = sqrt_in(x2, top)) {
            Scalar y = a1 / (Scalar(2) * *s);
            return *s + y * r;
        }
    }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower

struct Tower::Impl {
    std::array<std::unique_ptr<Scalar>, Tower::kMaxLevels> radicands;
    std::atomic<std::size_t> count{0};
    std::mutex write;
};

Tower::Impl& Tower::impl() {
    static Impl instance;
    return instance;
}

Tower& Tower::global() {
    static Tower t;
    return t;
}

std::size_t Tower::size() const { return impl().count.load(std::memory_order_acquire); }

const Scalar& Tower::radicand(std::size_t level) const {
    if (level >= size()) throw std::out_of_range("tower level not adjoined");
    return *impl().radicands[level];
}

std::vector<Scalar> Tower::radicands() const {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(radicand(i));
    return out;
}

std::optional<Scalar> Tower::sqrt(const Scalar& x) const { return sqrt_in(x, size()); }

Scalar Tower::adjoin_sqrt(const Scalar& x) {
    if (x.is_zero()) throw std::invalid_argument("adjoin_sqrt: radicand is zero");
    if (auto s = sqrt(x)) return *s;
    std::lock_guard lock(impl().write);
    if (auto s = sqrt(x)) return *s;
    Scalar rad = x;
    Scalar factor(1);
    if (x.is_rational()) {
        // sqrt(n/d) = f*sqrt(s)/d with n*d = f^2 * s
        const Rational& q = x.rational();
        mpz_class m = q.get_num() * q.get_den();
        mpz_class f = 1;
        for (unsigned long p = 2; p <= 1000; ++p) {
            mpz_class p2 = p * p;
            while (m % p2 == 0) {
                m /= p2;
                f *= p;
            }
        }
        rad = Scalar(Rational(m));
        factor = Scalar(Rational(f, q.get_den()));
    }
    std::size_t n = size();
    if (n >= kMaxLevels) throw std::length_error("scalar tower exhausted");
    impl().radicands[n] = std::make_unique<Scalar>(rad);
    impl().count.store(n + 1, std::memory_order_release);
    return factor * basis_root(n);
}

std::vector<Rational> Tower::mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::size_t len = std::max(a.size(), b.size());
    Coeffs la = lifted(a, len), lb = lifted(b, len);
    Coeffs out(len);
    mul_rec(la.data(), lb.data(), len, out.data());
    return out;
}

std::vector<Rational> Tower::inv(const std::vector<Rational>& a) { return inv_rec(a); }

Scalar adjoin_sqrt(const Scalar& radicand) { return Tower::global().adjoin_sqrt(radicand); }
std::optional<Scalar> try_sqrt(const Scalar& x) { return Tower::global().sqrt(x); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::from_coefficients(std::vector<Rational> coeffs) {
    if (coeffs.empty()) coeffs.emplace_back(0);
    std::size_t len = std::size_t{1} << log2_exact(coeffs.size());
    coeffs.resize(len, Rational(0));
    for (auto& c : coeffs) c.canonicalize();
    return Scalar(std::move(coeffs));
}

void Scalar::normalize() {
    while (c_.size() > 1) {
        std::size_t half = c_.size() / 2;
        if (!all_zero(c_.data() + half, half)) break;
        c_.resize(half);
    }
}

const Rational& Scalar::rational() const {
    if (!is_rational()) throw std::domain_error("scalar is irrational: " + to_string());
    return c_[0];
}

std::size_t Scalar::levels() const { return log2_exact(c_.size()); }

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.c_.size() == 1) {
        for (auto& c : c_) c *= o.c_[0];
    } else if (c_.size() == 1) {
        Rational s = c_[0];
        c_ = o.c_;
        for (auto& c : c_) c *= s;
    } else {
        c_ = Tower::mul(c_, o.c_);
    }
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (c_.size() == 1) {
        if (sgn(c_[0]) == 0) throw std::domain_error("division by zero scalar");
        return Scalar(Rational(1) / c_[0]);
    }
    return Scalar(Tower::inv(c_));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Scalar::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        const Rational& c = c_[idx];
        if (sgn(c) == 0) continue;
        std::string basis;
        for (std::size_t bit = 0; (std::size_t{1} << bit) <= idx; ++bit) {
            if ((idx >> bit) & 1U) {
                if (!basis.empty()) basis += "*";
                basis += "sqrt(" + Tower::global().radicand(bit).to_string() + ")";
            }
        }
        Rational mag = abs(c);
        std::string term;
        if (basis.empty())
            term = rational_string(mag);
        else if (mag == 1)
            term = basis;
        else
            term = rational_string(mag) + "*" + basis;
        if (first) {
            out = (sgn(c) < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
    }
    return first ? "0" : out;
}

std::string Scalar::to_factor_string() const {
    std::size_t nonzero = 0;
    for (const auto& c : c_)
        if (sgn(c) != 0) ++nonzero;
    std::string s = to_string();
    return nonzero > 1 ? "(" + s + ")" : s;
}

std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
    std::string out;
    for (const auto& [c, label] : terms) {
        if (c.is_zero()) continue;
        std::size_t nonzero = 0;
        int lead_sign = 0;
        for (const auto& q : c.coefficients())
            if (sgn(q) != 0) {
                ++nonzero;
                lead_sign = sgn(q);
            }
        bool negative = nonzero == 1 && lead_sign < 0;
        Scalar mag = negative ? -c : c;
        std::string term;
        if (label.empty())
            term = nonzero > 1 && !out.empty() ? mag.to_factor_string() : mag.to_string();
        else if (mag.is_one())
            term = label;
        else
            term = mag.to_factor_string() + "*" + label;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace superdix
