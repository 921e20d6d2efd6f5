#pragma once

// Exact coefficient arithmetic: rationals with arbitrary-precision integers,
// prime fields F_p with canonical residues in [0,p), and Z/m rings for the
// Witt-vector module. A field/ring is a small context object; matrix and
// series code is templated over it.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "shw/errors.hpp"

namespace shw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // always reduced, den > 0

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Canonical formatting: "a/b" in lowest terms, "a" when b = 1.
inline std::string rat_to_string(const Rat& x) {
    if (rat_den(x) == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("cannot parse rational: " + s);
    }
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

struct Rationals {
    using Elem = Rat;

    static constexpr std::uint64_t characteristic() { return 0; }
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long v) const { return Rat(v); }
    Elem from_integer(const Int& v) const { return Rat(v); }
    Elem from_rat(const Rat& v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw InputError("division by zero");
        return Rat(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string to_string(const Elem& a) const { return rat_to_string(a); }
    Elem parse(const std::string& s) const { return rat_parse(s); }
    std::string tag() const { return "q"; }
    bool operator==(const Rationals&) const { return true; }
};

// Z/m with residues in [0,m). A ring, not a field, unless m is prime; inv()
// works exactly on units.
struct ZMod {
    std::uint64_t m = 2;

    using Elem = std::uint64_t;

    explicit ZMod(std::uint64_t mod) : m(mod) {
        if (m < 2) throw InputError("modulus must be >= 2");
    }
    std::uint64_t characteristic() const { return m; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % m; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(m);
        if (r < 0) r += static_cast<long long>(m);
        return static_cast<Elem>(r);
    }
    Elem from_integer(const Int& v) const {
        Int r = v % Int(m);
        if (r < 0) r += Int(m);
        return r.convert_to<std::uint64_t>();
    }
    Elem from_rat(const Rat& v) const {
        Elem num = from_integer(rat_num(v));
        Elem den = from_integer(rat_den(v));
        return mul(num, inv(den));
    }
    Elem add(Elem a, Elem b) const { return (a + b) % m; }
    Elem sub(Elem a, Elem b) const { return (a + m - b) % m; }
    Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, m); }
    Elem neg(Elem a) const { return (m - a) % m; }
    Elem inv(Elem a) const {
        // extended Euclid; unit check
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw InputError("not a unit mod " + std::to_string(m));
        if (t < 0) t += static_cast<long long>(m);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a % m == 0; }
    bool eq(Elem a, Elem b) const { return a % m == b % m; }
    std::string to_string(Elem a) const { return std::to_string(a % m); }
    Elem parse(const std::string& s) const {
        Rat r = rat_parse(s);
        return from_rat(r);
    }
    std::string tag() const { return "zmod:" + std::to_string(m); }
    bool operator==(const ZMod& o) const { return m == o.m; }
};

struct PrimeField : ZMod {
    explicit PrimeField(std::uint64_t prime) : ZMod(prime) {
        if (!is_prime_u64(prime)) throw InputError(std::to_string(prime) + " is not prime");
    }
    std::string tag() const { return "fp:" + std::to_string(m); }
    bool operator==(const PrimeField& o) const { return m == o.m; }
};

// Runtime field selector, parsed from tags "q" / "fp:<p>".
struct FieldCfg {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldCfg q() { return FieldCfg{}; }
    static FieldCfg fp(std::uint64_t prime) {
        if (!is_prime_u64(prime)) throw InputError(std::to_string(prime) + " is not prime");
        return FieldCfg{Kind::prime_field, prime};
    }
    std::uint64_t characteristic() const { return kind == Kind::rationals ? 0 : p; }
    std::string tag() const {
        return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
    }
    static FieldCfg parse(const std::string& tag) {
        if (tag == "q" || tag == "Q") return q();
        if (tag.rfind("fp:", 0) == 0) {
            try {
                return fp(std::stoull(tag.substr(3)));
            } catch (const std::logic_error&) {
                throw InputError("bad field tag: " + tag);
            }
        }
        throw InputError("bad field tag: " + tag + " (expected \"q\" or \"fp:<p>\")");
    }
    bool operator==(const FieldCfg& o) const { return kind == o.kind && p == o.p; }
};

// Dispatch a callable over the concrete field type of a FieldCfg.
template <class Fn>
decltype(auto) with_field(const FieldCfg& cfg, Fn&& fn) {
    if (cfg.kind == FieldCfg::Kind::rationals) return fn(Rationals{});
    return fn(PrimeField{cfg.p});
}

}  // namespace shw
