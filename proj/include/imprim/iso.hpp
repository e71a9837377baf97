#pragma once

#include "imprim/action.hpp"
#include "imprim/report.hpp"
#include "imprim/table.hpp"

namespace imprim {

enum class IsoCase { C141, C142, C143, Custom };
const char* iso_case_name(IsoCase c);

// A normalized isomorphism candidate Phi = (Phi1, Phi2):
//   Phi1(u1,u2,u3,a) = (b1 u1 + d1 u3^{deg1}, b2 u2 + d2 u3^{deg2}, b3 u3, a),
//   Phi2(x,y)        = (b1 x  + d1 y^{deg1},  b3 y),
// with b1 = b2^{h2} b3^{h3} and deg_j = e_j / e3.
struct IsoDescriptor {
  IsoCase kase = IsoCase::Custom;
  GroupParams src, dst;
  FieldElem b1, b2, b3;  // nonzero
  FieldElem d1, d2;
  long long deg1 = 0, deg2 = 0;  // monomial degrees of f1, f2 (0 when d_j = 0)
};

// Builds the descriptor of one of the three classified isomorphism shapes.
// src must carry beta = 0 and dst the matching monomial beta; the parameter
// tuple must have the shape belonging to the case, else NotApplicable.
// d1 applies to the characteristic-2 case only (free there), ignored for
// 14.1 / 14.2 where it is forced.
IsoDescriptor make_case_descriptor(IsoCase kase, const GroupParams& src, const GroupParams& dst,
                                   const FieldElem& b2, const FieldElem& b3,
                                   const FieldElem* d1_free = nullptr);

GroupElement iso_map(const IsoDescriptor& d, const GroupElement& g);
PointOmega iso_plane_map(const IsoDescriptor& d, const PointOmega& p);

// Exhaustive verification over F_q that (Phi1, Phi2) is an isomorphism of
// permutation groups: Phi1 bijective homomorphism, Phi2 bijective, the
// actions intertwined, horizontal lines preserved.
CheckResult check_iso(const IsoDescriptor& d, const FieldCtx& qctx);

// Structured search for a normalized isomorphism over F_q.  Returns the
// lexicographically first passing candidate; a nullopt outcome is heuristic
// evidence only (finite-field non-isomorphism does not transfer to the
// closure).
std::optional<IsoDescriptor> search_iso(const GroupParams& src, const GroupParams& dst,
                                        const FieldCtx& qctx);

}  // namespace imprim
