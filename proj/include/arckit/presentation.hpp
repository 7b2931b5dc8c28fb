#pragma once
#include <map>
#include <string>
#include <vector>

#include "arckit/poly.hpp"

namespace arckit {

// One presentation variable with provenance: which arc coordinate and
// t-exponent it encodes (when any), its structural role, and whether it
// belongs to the free affine tail factor.
struct PresVar {
    std::string name;
    std::string coord;    // encoded arc coordinate, "" when not applicable
    int t_exp = -1;       // encoded t-exponent, -1 when not applicable
    std::string role;     // "arc", "witness", "q", "unit", "xbar", "xi", "nu", "model", "plain"
    bool free_tail = false;

    bool operator==(const PresVar& o) const {
        return name == o.name && coord == o.coord && t_exp == o.t_exp && role == o.role &&
               free_tail == o.free_tail;
    }
};

// One equation with its generation tag: which source row and t-level.
struct PresEq {
    std::string tag;
    int row = 0;
    int level = 0;
    Poly p;
};

// Coordinates whose t-levels beyond from_level stay free (the affine-tail
// part of a product decomposition that the presentation window cuts off).
struct TailMark {
    std::string coord;
    int from_level = 0;
    bool operator==(const TailMark& o) const {
        return coord == o.coord && from_level == o.from_level;
    }
};

// Finite scheme presentation: variables, equations, and elements required
// invertible (localization data). A point over a ring R is an assignment
// satisfying every equation with every inverted element a unit of R.
struct SchemePresentation {
    RingPtr ring;
    std::vector<PresVar> vars; // parallel to ring variables
    std::vector<PresEq> eqs;
    std::vector<Poly> inverted;
    std::vector<TailMark> tails;

    void validate() const;
    bool operator==(const SchemePresentation& o) const;
    int count_eqs_tagged(const std::string& tag) const;
};

// Plain affine presentation: one variable per ring variable, no provenance.
SchemePresentation affine_presentation(const RingPtr& ring, std::vector<Poly> eqs,
                                       std::vector<Poly> inverted = {});

// Substitute field constants for the named variables, dropping them.
SchemePresentation specialize(const SchemePresentation& P,
                              const std::map<std::string, FieldElem>& values);

// Extend with additional equations (cutting out a closed subset).
SchemePresentation with_extra_equations(const SchemePresentation& P, const std::string& tag,
                                        std::vector<Poly> extra);

// Evaluate all equations and inverted elements at polynomial images over
// another ring (same coefficient field); images are matched positionally.
struct PresEval {
    std::vector<Poly> eq_values;
    std::vector<Poly> inverted_values;
};
PresEval eval_presentation(const SchemePresentation& P, const RingPtr& target,
                           const std::vector<Poly>& images);

// Point membership over the base field.
bool satisfies_point(const SchemePresentation& P, const std::vector<FieldElem>& point);

} // namespace arckit
