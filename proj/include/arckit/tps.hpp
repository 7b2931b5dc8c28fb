#pragma once
#include <optional>
#include <string>
#include <vector>

#include "arckit/poly.hpp"

namespace arckit {

// Truncated power series in t: exactly N coefficients c0..c_{N-1}, each a
// Poly over a shared ring. The truncation order N is explicit and checked on
// every binary operation; there is no implicit coercion between truncations.
class Tps {
public:
    Tps() = default;
    Tps(RingPtr ring, int N);

    static Tps zero(const RingPtr& r, int N) { return Tps(r, N); }
    static Tps one(const RingPtr& r, int N);
    static Tps from_poly(const Poly& c0, int N);       // constant series
    static Tps t_power(const RingPtr& r, int k, int N); // t^k (0 beyond N)
    // c[k] becomes the coefficient of t^k; c.size() == N.
    static Tps from_coeffs(RingPtr ring, std::vector<Poly> c);

    const RingPtr& ring() const { return ring_; }
    int trunc() const { return N_; }
    const Poly& coeff(int k) const;
    void set_coeff(int k, const Poly& p);
    const std::vector<Poly>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const Tps& o) const;
    bool operator!=(const Tps& o) const { return !(*this == o); }

    Tps operator+(const Tps& o) const;
    Tps operator-(const Tps& o) const;
    Tps operator-() const;
    Tps operator*(const Tps& o) const;
    Tps scale(const Poly& p) const;

    // Multiply by t^k: coefficients shift up, truncation absorbs the top.
    Tps shifted_up(int k) const;
    // Divide by t^k assuming the low k coefficients vanish (checked):
    // result has truncation N - k.
    Tps shifted_down(int k) const;
    // Explicit precision drop to k <= N.
    Tps truncated(int k) const;
    // Zero-extend to k >= N. The added window is a convention, not a
    // certified value; callers must track certified precision themselves.
    Tps extended(int k) const;

    // Multiplicative inverse at truncation N; requires c0 to be a unit
    // (nonzero field constant plus nilpotent parameter terms).
    Tps inverse() const;

    // Smallest k with coeff(k) nonzero after setting all parameters to 0;
    // nullopt when the whole reduction vanishes (order undetermined at N).
    std::optional<int> t_order_reduced() const;
    // Same, without reduction (first structurally nonzero coefficient).
    std::optional<int> t_order_raw() const;

    std::string str() const; // ascending powers of t, canonical

private:
    RingPtr ring_;
    int N_ = 0;
    std::vector<Poly> c_;
    void check_compat(const Tps& o) const;
};

// Evaluate f at the given series (one per ring variable of f). All images
// share a ring and truncation; coefficients of f are mapped across fields
// identically (same field required).
Tps eval_tps(const Poly& f, const std::vector<Tps>& images);

} // namespace arckit
