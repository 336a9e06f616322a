#pragma once

#include <string>
#include <vector>

#include "core/linform.hpp"

namespace entro {

// A copy-rule partition of the ground set: one copy variable z, a nonempty
// x-group and a (possibly empty) y-group, pairwise disjoint and jointly
// covering the context.
struct Partition {
    int z = 0;        // bit position of the copy variable
    Mask xgroup = 0;
    Mask ygroup = 0;

    Mask zbit() const { return Mask(1) << z; }
};

// Validates the partition shape; throws UnknownVariableError / RuleShapeError.
Partition make_partition(const VarContext& ctx, const std::string& z,
                         const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys);

// The copy-rule premise shape  f(X,Y) + g(Y,z) + alpha * I(z;X|Y) >= 0:
// f collects the terms avoiding z, g the terms inside Y u {z}, and alpha is
// read off the full-set coordinate (the only canonical coordinate of
// I(z;X|Y) containing both z and all of X).
struct ZYDecomposition {
    Partition p;
    LinForm f;  // support avoids z
    LinForm g;  // support inside ygroup u {z}
    Rat alpha;  // >= 0
};

// Errors: NegativeAlphaError when the full-set coordinate yields alpha < 0;
// MixedTermError when, after removing alpha * I(z;X|Y), some term still
// contains z together with a nonempty part of the x-group.
ZYDecomposition decompose_zy(const LinForm& h, const Partition& p);

// Copy rule: from  f + g + alpha*I(z;X|Y) >= 0  infer  f + g >= 0.
LinForm apply_zy(const LinForm& h, const Partition& p);

// Function-of-Y rule: from  f + g >= 0  (no term mixing z and the x-group)
// infer  f + g - r_z * H(z|Y) >= 0  with r_z the sum of the coefficients
// involving z.
LinForm apply_mmrv(const LinForm& h, const Partition& p);

// Variable substitution "let from = to".  When `to` is a context variable the
// subsets merge ((J - from) u to, collided coefficients summed) and the
// context drops `from`; when `to` is a fresh name the variable is renamed in
// place.  Throws UnknownVariableError when `from` (or, for merging, `to`) is
// invalid.
LinForm substitute(const LinForm& f, const std::string& from, const std::string& to);

// The two constructive halves of the copy-rule / function-of-Y-rule
// equivalence.  Forward: a copy-rule premise decomposition becomes the
// weaker premise  f + g + alpha*H(z|Y) >= 0  (since H(z|Y) >= I(z;X|Y)).
LinForm zy_premise_to_mmrv_premise(const ZYDecomposition& d);
// Backward: a function-of-Y premise h becomes
//   h - r_z*H(z|Y) + r_z*I(z;X|Y) >= 0,
// which is balanced for z and on which the copy rule reproduces
// apply_mmrv(h) exactly.
LinForm mmrv_premise_to_zy_premise(const LinForm& h, const Partition& p);

}  // namespace entro
