#pragma once
#include <string>
#include <vector>

#include "arckit/tps.hpp"

namespace arckit {

// Exact polynomial in t with Poly coefficients (no truncation). Used where
// identities must hold on the nose: Euclidean division by monic divisors,
// bounded arc data, exact residual certificates.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static TPoly zero(const RingPtr& r) { return TPoly(r); }
    static TPoly from_poly(const Poly& c0);
    static TPoly t_power(const RingPtr& r, int k);
    static TPoly from_coeffs(RingPtr ring, std::vector<Poly> c); // c[k] -> t^k

    const RingPtr& ring() const { return ring_; }
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Poly coeff(int k) const; // zero Poly beyond the degree
    const std::vector<Poly>& coeffs() const { return c_; }
    void set_coeff(int k, const Poly& p);

    bool operator==(const TPoly& o) const;
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator-() const;
    TPoly operator*(const TPoly& o) const;
    TPoly scale(const Poly& p) const;
    TPoly shifted_up(int k) const;

    // Exact Euclidean division by a monic divisor: *this = q*div + r with
    // deg r < deg div. Requires div monic (leading coefficient 1).
    struct DivMod;
    DivMod divmod_monic(const TPoly& div) const;

    Tps to_tps(int N) const;                 // coefficients beyond N drop
    static TPoly from_tps(const Tps& s);     // the truncated representative

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Poly> c_; // trailing zero coefficients are trimmed
    void trim();
};

struct TPoly::DivMod {
    TPoly quot;
    TPoly rem;
};

TPoly eval_tpoly(const Poly& f, const std::vector<TPoly>& images);

} // namespace arckit
