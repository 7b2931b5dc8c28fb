#pragma once
#include <string>
#include <vector>

#include "arckit/matrix.hpp"
#include "arckit/poly.hpp"

namespace arckit {

// A special complete intersection: n equations in ambient m-space with n
// distinguished y-variables. The ambient ring's variables, in order, are the
// arc coordinates; y_idx locates the distinguished block inside them.
struct SpecialCI {
    RingPtr ring;            // ambient coordinates, no parameters
    int m = 0;               // ambient dimension == ring->nvars()
    int n = 0;               // number of equations == y-variables
    std::vector<int> y_idx;  // indices of the distinguished variables, size n
    std::vector<Poly> f;     // defining equations, size n

    bool is_y(int var) const;
    int y_position(int var) const; // position in y_idx or -1
    std::vector<int> x_idx() const; // the non-distinguished coordinates, in order
};

SpecialCI make_special_ci(const RingPtr& ring, const std::vector<std::string>& y_names,
                          const std::vector<Poly>& eqs);

// The worked fixture: {x*y - z^2 = 0} in A^3 with y distinguished.
SpecialCI quadric_cone(const Field& F);

// phi = (d f_i / d y_j), phi_adj = adjugate, psi = det phi.
// phi_adj * phi = phi * phi_adj = psi * I is asserted symbolically.
struct JacobianData {
    Mat<Poly> phi;
    Mat<Poly> phi_adj;
    Poly psi;
};

JacobianData jacobian_package(const SpecialCI& X);

// psi: the singular locus of X is {psi = 0} on X.
Poly singular_locus(const SpecialCI& X);

} // namespace arckit
