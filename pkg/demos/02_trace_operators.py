#!/usr/bin/env python3
"""The level-lowering trace on canonical basis elements.

Traces are computed by principal-part matching: whenever the relevant
holomorphic space downstairs is trivial, the coefficients of the source
element through the target gap bound pin the answer exactly.

Two contrasting stories: tracing the weight-0 grid from level 4 to
level 1 lands exactly on the level-1 grid (duality preserved), while
tracing the weight -6 grid from level 2 picks up correction terms and
duality breaks.
"""

from gridforge import INF, HAT, trace

print("Weight 0, level 4 -> 1.  The traced elements are exactly the")
print("level-1 canonical basis (the j-function family):")
for m in range(4):
    rep = trace(4, 1, 0, INF, m, 8)
    print(f"  tr(f_0,{m}) =", rep.expansion.truncate(4))
print()

print("Weight 2 subspace side, level 4 -> 1:")
for n in range(1, 4):
    rep = trace(4, 1, 2, HAT, n, 8)
    print(f"  tr(g_2,{n}) =", rep.expansion.truncate(4))
print()

print("Weight -6, level 2 -> 1.  Each trace is the matching level-1")
print("element plus a multiple of f_-6,1 read off the q^-1 coefficient:")
for m in (2, 3, 4):
    rep = trace(2, 1, -6, INF, m, 4)
    combo = " + ".join(f"({c})*f_-6,{i}" for i, c in rep.combination)
    print(f"  tr(f_-6,{m}) = {combo}")
    print(f"             = {rep.expansion.truncate(2)}")
print()

print("The dual weight-8 subspace side of the same grid:")
for n in (-1, 0, 1):
    rep = trace(2, 1, 8, HAT, n, 5)
    print(f"  tr(g_8,{n}) =", rep.expansion.truncate(4))
print()

print("tr(g_8,-1) = 0: the element has no principal part or constant")
print("term, and the weight-8 cusp space at level 1 is trivial.")
print()

print("Where principal-part matching does not apply, the operator says so:")
rep = trace(2, 1, 8, INF, -2, 8)
print(" ", rep.reason)
