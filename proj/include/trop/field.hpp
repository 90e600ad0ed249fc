#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, Reals, PrimeField };

// Base field: Q, R, or F_p with p an odd prime.  Characteristic 2 is rejected.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long characteristic = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec reals() { return {FieldKind::Reals, 0}; }
    static FieldSpec prime_field(long p);
    // Accepts "Q", "R", or "F<p>" (e.g. "F5").
    static FieldSpec parse(const std::string& s);

    std::string name() const;
    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && characteristic == o.characteristic;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

// Exact field element.  Q and R are both backed by exact rationals (R only
// ever sees rational data in this artifact); F_p stores a residue in [0, p).
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldSpec f, const Rat& value);
    FieldElem(FieldSpec f, const Int& value);
    static FieldElem zero(FieldSpec f) { return FieldElem(f, Int(0)); }
    static FieldElem one(FieldSpec f) { return FieldElem(f, Int(1)); }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    // Only valid over Q/R.
    const Rat& rational() const { return q_; }
    // Only valid over F_p.
    long residue() const { return r_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(const Int& e) const;  // e may be negative for units
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void check_same(const FieldElem& o) const;
    FieldSpec field_;
    Rat q_ = 0;
    long r_ = 0;
};

// Canonical representative of a unit modulo squares:
//   Q   -> signed squarefree integer,
//   R   -> +1 / -1,
//   F_p -> 1 or the least quadratic nonresidue mod p.
struct SquareClass {
    FieldSpec field;
    Int rep = 1;

    bool is_one() const { return rep == 1; }
    bool operator==(const SquareClass& o) const {
        return field == o.field && rep == o.rep;
    }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    bool operator<(const SquareClass& o) const { return rep < o.rep; }

    SquareClass operator*(const SquareClass& o) const;
    SquareClass negated() const;
    // The canonical representative as an honest field element.
    FieldElem lift() const;
    std::string str() const { return rep.str(); }
};

SquareClass square_class_reduce(const FieldElem& a);
SquareClass square_class_reduce(const Rat& a, FieldSpec f);
SquareClass square_class_parse(const std::string& s, FieldSpec f);

// Legendre symbol (a/p), p an odd prime; 0 when p | a.
int legendre(const Int& a, const Int& p);

// Least quadratic nonresidue mod p.
long least_nonresidue(long p);

// Place of Q: the real place or a finite prime.
struct Place {
    bool real = false;
    Int p = 0;
    static Place real_place() { return {true, 0}; }
    static Place prime(const Int& q) { return {false, q}; }
};

// Hilbert symbol (a,b)_v for nonzero integers a, b.  Field must be Q.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);
int hilbert_symbol_int(Int a, Int b, const Place& v);

// Factorization of |n| (trial division + Pollard rho), n != 0.
std::map<Int, int> factorize(Int n);
bool is_probable_prime(const Int& n);

// Signed squarefree part of a nonzero rational.
Int squarefree_part(const Rat& a);

}  // namespace trop
