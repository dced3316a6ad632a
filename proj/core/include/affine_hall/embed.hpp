#pragma once

#include "affine_hall/repfq.hpp"

namespace ah {

// Kronecker conventions: vertex 0 is the sink i, vertex 1 the source j, arrows 0 (a) and 1 (b).

// R_{f,level} for a monic irreducible f, or the point at infinity when f is null.
FqRep kronecker_regular(const QuiverPtr& K, int q, const FqPoly* f, int level);
Mat companion(const Field& F, const FqPoly& f);

// The embedding functors Rep(K) -> Rep(Q):
//   1  identity on the Kronecker quiver
//   2  type A_n^(1), sink i_0 with incoming arrows h1, h2
//   3  type D/E with an extending sink
//   4  type D/E whose extending vertices are sources
// Throws domain_error when the target does not satisfy the case hypotheses.
FqRep kronecker_embed(int kase, const QuiverPtr& target, const FqRep& rep);
int default_embed_case(const Quiver& Q);
// The rigid indecomposable of dimension delta - e used by cases 3 and 4.
FqRep embed_rigid_module(const QuiverPtr& target, int q, int e);

}  // namespace ah
