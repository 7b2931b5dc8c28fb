#pragma once
#include <string>
#include <vector>

#include "arckit/enumerate.hpp"
#include "arckit/geometry.hpp"
#include "arckit/special_ci.hpp"
#include "arckit/weierstrass.hpp"

namespace arckit {

// A fixed finite-dimensional formal model of the quadric-cone arc space at
// the stratum base arc (t^d, 0, 0): model variables with their defining
// equations, plus the bookkeeping needed to map model points (together with
// a unit and a tail series) to honest arcs.
struct GoldenModel {
    std::string name;
    RingPtr ring;
    std::vector<Poly> eqs;
    std::vector<std::string> q_coeff_vars; // lower coefficients of q, ascending
    std::vector<std::string> z_vars;       // low part of z, ascending t-levels
    std::vector<std::string> free_vars;    // pure product-disc coordinates
    int d = 0;                             // q degree; base arc is (t^d, 0, 0)
};

// The built-in depth-1 and depth-2 models over the given field.
std::vector<GoldenModel> builtin_models(const Field& F);
const GoldenModel& model_by_name(const std::vector<GoldenModel>& models, const std::string& name);

struct ModelMapResult {
    Tps x, y, z;
    MonicPoly q;
};

// (model point, unit u, tail xi) -> arc on the quadric cone:
//   x = q*u,  z = z_low + q*xi,  y = (z^2 / q) * u^{-1}.
// The exact remainder rem(z_low^2, q) must vanish (obstruction_error
// otherwise); that divisibility is precisely the model's equations. The
// image satisfies x*y - z^2 == 0 exactly at the truncation (asserted).
ModelMapResult model_map_eval(const GoldenModel& M, const std::vector<Poly>& point, const Tps& u,
                              const Tps& xi);

// Symbolic check: the t-coefficients of rem(z_low^2, q) over the model ring
// are the model equations up to sign.
bool model_remainder_identity(const GoldenModel& M);

struct DeskCheckReport {
    std::string model;
    int q = 0, N = 0;
    long long model_count = 0;
    long long arc_count = 0;
    bool injective = false;
    bool image_matches = false;
    bool roundtrip_ok = false;
    bool pass = false;
};

// Square-zero deformation desk check over F_q[e]/(e^2): enumerate all
// model-side deformations of the base point (model variables in the
// parameter ideal, unit and tail representatives at truncation N-d), map
// them to arcs, and compare against the independently enumerated arc-side
// deformation set with the canonical distinguished coordinate. Every image
// point is also round-tripped through preparation and tail inversion.
DeskCheckReport formal_iso_desk_check(const GoldenModel& M, int q, int N);

struct CounterexampleReport {
    int base_rank = 0;
    int base_eqs = 0;
    bool base_singular = false;
    std::vector<int> jet_ranks; // at jet levels 1..4 on the image arc
    bool jets_smooth = false;
    bool pass = false;
};

// The depth-2 model is singular at (a,b,v,w) = (1,0,0,0), yet the image arc
// (1+t^2, 0, 0) sits at certified-smooth points of every checked jet scheme:
// model singularities need not come from the arc space's finite levels.
CounterexampleReport counterexample_check();

struct CensusReport {
    int q = 0, j = 0;
    long long total = 0;
    long long d0 = 0;
    long long d1 = 0;
    long long residual = 0;
    long long tail_factor = 0;
    long long d0_contrib = 0;
    bool partition_ok = false;
};

// Count level-j jets (j = 2, three coefficients) of the quadric cone over
// F_q and check the partition: depth-0 stratum points times their free tail
// factor, plus depth-1 stratum points, plus the residual locus x0 = x1 = 0.
CensusReport stratification_census(int q, long long budget);

} // namespace arckit
