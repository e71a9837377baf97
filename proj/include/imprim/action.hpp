#pragma once

#include "imprim/group.hpp"

namespace imprim {

// A point (x, y) of the affine plane; its block is the horizontal line
// y = const.
struct PointOmega {
  FieldElem x, y;
  bool operator==(const PointOmega& o) const { return x == o.x && y == o.y; }
};

struct BlockId {
  FieldElem y;
  bool operator==(const BlockId& o) const { return y == o.y; }
};

inline BlockId block_of(const PointOmega& p) { return {p.y}; }

// Canonical representative of the coset z*{(0,w,0)}: the unique member with
// second coordinate 0, projected to the plane.
PointOmega canonical_point(const GroupLaw& law, const UnipElem& z);

// The coset action: lift P to (x,0,y), apply the torus part, left-multiply by
// the unipotent part, canonicalize.
PointOmega act(const GroupLaw& law, const GroupElement& g, const PointOmega& p);

BlockId act_on_block(const GroupLaw& law, const GroupElement& g, const BlockId& b);

// The point image as printed in the classification statement:
// (u1 + a^{e1} x + psi1(u3, 0, a^{e3} y), u3 + a^{e3} y).  Kept as a
// diagnostic; it differs from the coset action whenever u2 != 0 or
// psi2(u3, a^{e3} y) != 0.
PointOmega act_closed_form(const GroupLaw& law, const GroupElement& g, const PointOmega& p);

}  // namespace imprim
