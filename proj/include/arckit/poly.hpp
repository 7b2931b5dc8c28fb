#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arckit/field.hpp"

namespace arckit {

// An infinitesimal test ring: named nilpotent parameters a1..ak with a single
// total-degree nilpotency bound M (every monomial of total parameter-degree
// >= M is zero). M >= 1; k = 0 gives the bare field.
struct TestRingSpec {
    std::vector<std::string> params;
    int M = 1;
};

// Ordered-variable polynomial ring context. The last n_params variables are
// the nilpotent test-ring parameters; monomials of total parameter-degree
// >= M are identified with zero. Shared immutably by all Poly values.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> make(const Field& f,
                                                const std::vector<std::string>& vars);
    static std::shared_ptr<const PolyRing> make(const Field& f,
                                                const std::vector<std::string>& vars,
                                                const TestRingSpec& spec);

    const Field& field() const { return field_; }
    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[(size_t)i]; }
    int var_index(const std::string& name) const;          // -1 when missing
    int var_index_checked(const std::string& name) const;  // throws context_error

    int n_params() const { return n_params_; }
    int nilpotency() const { return M_; }
    bool is_param(int i) const { return i >= nvars() - n_params_; }
    int first_param() const { return nvars() - n_params_; }

    bool same_as(const PolyRing& o) const;

private:
    PolyRing(const Field& f, std::vector<std::string> vars, int n_params, int M);
    Field field_;
    std::vector<std::string> vars_;
    int n_params_;
    int M_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

void check_same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector with cached total degree; ordered graded-lex descending
// (higher total degree first; ties broken lexicographically with earlier
// variables more significant). That order is the canonical print order.
struct Mono {
    std::vector<int> e;
    int deg = 0;
    static Mono of(std::vector<int> exps);
};

struct MonoCmpDesc {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Exact sparse multivariate polynomial over a PolyRing. Invariants: no stored
// zero coefficient; no stored monomial of parameter-degree >= M.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingPtr& r) { return Poly(r); }
    static Poly constant(const RingPtr& r, const FieldElem& c);
    static Poly from_long(const RingPtr& r, long v);
    static Poly var(const RingPtr& r, int i, int exp = 1);
    static Poly var(const RingPtr& r, const std::string& name, int exp = 1);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const; // -1 for the zero polynomial

    const std::map<Mono, FieldElem, MonoCmpDesc>& terms() const { return terms_; }

    // Adds c * mono, normalizing (zero removal + nilpotency reduction).
    void add_term(const Mono& m, const FieldElem& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(const FieldElem& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var) const;

    // The coefficient of the all-zero monomial.
    FieldElem constant_term() const;
    // True when every monomial has parameter-degree >= 1 (zero qualifies).
    bool in_param_ideal() const;
    // Image under "set all parameters to zero" (drop param-containing terms).
    Poly reduce_mod_params() const;
    // When the reduction is a constant, returns it.
    std::optional<FieldElem> as_constant() const;

    // Multiplicative inverse of a unit: constant term nonzero in the field
    // and every non-constant monomial contains a parameter (so it is
    // nilpotent). Throws std::domain_error otherwise.
    Poly unit_inverse() const;

    // Substitute images[i] for variable i; all images share `target`.
    Poly subst(const RingPtr& target, const std::vector<Poly>& images) const;
    // Rebuild in `target`, matching variables by name (all must exist).
    Poly map_ring(const RingPtr& target) const;
    // Evaluate at a field point (one value per variable).
    FieldElem eval_point(const std::vector<FieldElem>& point) const;

    // Canonical text form: terms in descending graded-lex order.
    std::string str() const;

private:
    RingPtr ring_;
    std::map<Mono, FieldElem, MonoCmpDesc> terms_;
    int param_degree(const Mono& m) const;
};

// Convenience: the polynomial ring of a TestRingSpec alone (parameters only).
RingPtr param_ring(const Field& f, const TestRingSpec& spec);

// All monomials of the parameters with total degree < M, in ascending
// degree order; the canonical basis used by linear-solve oracles.
std::vector<Mono> param_monomial_basis(const RingPtr& r);

} // namespace arckit
