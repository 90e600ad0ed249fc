#include "trop/field.hpp"

#include <algorithm>
#include <random>

namespace trop {

namespace {

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_pos(const Int& v, long p) {
    Int r = v % p;
    if (r < 0) r += p;
    return static_cast<long>(r);
}

}  // namespace

FieldSpec FieldSpec::prime_field(long p) {
    if (p == 2) throw FieldError("characteristic 2 not supported");
    if (!is_small_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "R") return reals();
    if (s.size() >= 2 && s[0] == 'F' &&
        s.find_first_not_of("0123456789", 1) == std::string::npos)
        return prime_field(std::stol(s.substr(1)));
    throw FieldError("bad field string: " + s);
}

std::string FieldSpec::name() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Reals: return "R";
        case FieldKind::PrimeField: return "F" + std::to_string(characteristic);
    }
    return "?";
}

FieldElem::FieldElem(FieldSpec f, const Rat& value) : field_(f) {
    if (f.kind == FieldKind::PrimeField) {
        long p = f.characteristic;
        long den = mod_pos(denominator(value), p);
        if (den == 0) throw FieldError("denominator divisible by p");
        r_ = mod_pos(numerator(value), p);
        if (r_ != 0 && den != 1) {
            FieldElem d(f, Int(den));
            r_ = (FieldElem(f, Int(r_)) * d.inverse()).r_;
        }
    } else {
        q_ = value;
    }
}

FieldElem::FieldElem(FieldSpec f, const Int& value) : field_(f) {
    if (f.kind == FieldKind::PrimeField)
        r_ = mod_pos(value, f.characteristic);
    else
        q_ = value;
}

bool FieldElem::is_zero() const {
    return field_.kind == FieldKind::PrimeField ? r_ == 0 : q_ == 0;
}

void FieldElem::check_same(const FieldElem& o) const {
    if (field_ != o.field_) throw FieldError("field mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.field_ = field_;
    if (field_.kind == FieldKind::PrimeField)
        r.r_ = (r_ + o.r_) % field_.characteristic;
    else
        r.q_ = q_ + o.q_;
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.field_ = field_;
    if (field_.kind == FieldKind::PrimeField)
        r.r_ = mod_pos(Int(r_) * o.r_, field_.characteristic);
    else
        r.q_ = q_ * o.q_;
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
    FieldElem r;
    r.field_ = field_;
    if (field_.kind == FieldKind::PrimeField)
        r.r_ = r_ == 0 ? 0 : field_.characteristic - r_;
    else
        r.q_ = -q_;
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    FieldElem r;
    r.field_ = field_;
    if (field_.kind == FieldKind::PrimeField) {
        long p = field_.characteristic;
        // extended Euclid
        long a = r_, b = p, x0 = 1, x1 = 0;
        while (b) {
            long q = a / b;
            long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        r.r_ = ((x0 % p) + p) % p;
    } else {
        r.q_ = 1 / q_;
    }
    return r;
}

FieldElem FieldElem::pow(const Int& e) const {
    FieldElem base = e < 0 ? inverse() : *this;
    Int n = abs(e);
    FieldElem acc = FieldElem::one(field_);
    while (n > 0) {
        if (bit_test(n, 0)) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    return field_ == o.field_ &&
           (field_.kind == FieldKind::PrimeField ? r_ == o.r_ : q_ == o.q_);
}

std::string FieldElem::str() const {
    if (field_.kind == FieldKind::PrimeField) return std::to_string(r_);
    return q_.str();
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;  // deterministic for n < 3.3e24
    }
    return true;
}

namespace {

Int pollard_rho(const Int& n) {
    std::mt19937_64 rng(0x5eed);
    while (true) {
        Int c = Int(rng() % 1000000) + 1;
        Int x = Int(rng() % 1000000) + 2, y = x, d = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) { out[n]++; return; }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Int, int> factorize(Int n) {
    if (n == 0) throw FieldError("factorize(0)");
    n = abs(n);
    std::map<Int, int> out;
    for (long p = 2; p <= 1000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) { out[Int(p)]++; n /= p; }
        if (n == 1) break;
    }
    factor_into(n, out);
    return out;
}

Int squarefree_part(const Rat& a) {
    if (a == 0) throw FieldError("square class of zero");
    Int prod = numerator(a) * denominator(a);
    Int r = prod < 0 ? -1 : 1;
    for (auto& [p, e] : factorize(prod))
        if (e % 2) r *= p;
    return r;
}

int legendre(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Jacobi-symbol algorithm (p odd)
    Int m = r, n = p;
    int t = 1;
    while (m != 0) {
        while ((m & 1) == 0) {
            m >>= 1;
            Int n8 = n % 8;
            if (n8 == 3 || n8 == 5) t = -t;
        }
        std::swap(m, n);
        if (m % 4 == 3 && n % 4 == 3) t = -t;
        m %= n;
    }
    return n == 1 ? t : 0;
}

long least_nonresidue(long p) {
    for (long a = 2; a < p; ++a)
        if (legendre(Int(a), Int(p)) == -1) return a;
    throw FieldError("no nonresidue found");  // unreachable for odd prime p
}

SquareClass square_class_reduce(const FieldElem& a) {
    if (a.is_zero()) throw FieldError("square class of zero");
    const FieldSpec& f = a.field();
    switch (f.kind) {
        case FieldKind::Rationals:
            return {f, squarefree_part(a.rational())};
        case FieldKind::Reals:
            return {f, Int(a.rational() < 0 ? -1 : 1)};
        case FieldKind::PrimeField: {
            int l = legendre(Int(a.residue()), Int(f.characteristic));
            return {f, Int(l == 1 ? 1 : least_nonresidue(f.characteristic))};
        }
    }
    throw FieldError("bad field");
}

SquareClass square_class_reduce(const Rat& a, FieldSpec f) {
    return square_class_reduce(FieldElem(f, a));
}

SquareClass square_class_parse(const std::string& s, FieldSpec f) {
    return square_class_reduce(Rat(s), f);
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (field != o.field) throw FieldError("field mismatch");
    return square_class_reduce(lift() * o.lift());
}

SquareClass SquareClass::negated() const {
    return square_class_reduce(-lift());
}

FieldElem SquareClass::lift() const { return FieldElem(field, rep); }

int hilbert_symbol_int(Int a, Int b, const Place& v) {
    if (a == 0 || b == 0) throw FieldError("hilbert symbol needs units");
    if (v.real) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p;
    int alpha = 0, beta = 0;
    while (a % p == 0) { a /= p; ++alpha; }
    while (b % p == 0) { b /= p; ++beta; }
    if (p == 2) {
        auto eps = [](const Int& u) { return static_cast<int>(((u - 1) / 2) % 2 ? 1 : 0); };
        auto omg = [](const Int& u) { return static_cast<int>(((u * u - 1) / 8) % 2 ? 1 : 0); };
        int e = eps(a) * eps(b) + alpha * omg(b) + beta * omg(a);
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if ((alpha % 2) && (beta % 2) && legendre(Int(-1), p) == -1) s = -s;
    if (beta % 2) s *= legendre(a, p);
    if (alpha % 2) s *= legendre(b, p);
    return s;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
    if (a.field.kind != FieldKind::Rationals || b.field.kind != FieldKind::Rationals)
        throw FieldError("hilbert symbol only over Q");
    return hilbert_symbol_int(a.rep, b.rep, v);
}

}  // namespace trop
