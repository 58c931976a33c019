"""Anatomy of one solution: y^2 = u1^2 + lam*u1 + u2 + 1 with lam = t.

Over S = {0, 2, -2, inf} the units u1 = t and u2 = -2t^2 give y = 1.
We validate the instance, build the auxiliary quadratics F and G (both
from the fast formula and from the Sylvester determinant), check that y
divides F(u1) and G(u2), and classify the solution.
"""

from unitfield.funfield import RatFunc, SSet, height
from unitfield.vojta import (
    UnitEquationInstance,
    classify,
    compare_quadratics,
    degree_bound,
    discriminant_bounds,
    divisibility_check,
    printed_F,
    resultant_F,
    resultant_G,
    sylvester_F,
    sylvester_G,
    validate,
)

t = RatFunc.t()
S = SSet.from_points([0, 2, -2])
inst = validate(UnitEquationInstance(S, t, t, -2 * t**2, RatFunc.const(1)))
print("S =", [str(v) for v in S.places], " chi_S =", inst.chi, " H(lam) =", inst.h_lam)
print("designated places:", [str(v) for v in S.designated])

F, G = resultant_F(inst), resultant_G(inst)
print("\nF(X) =", F)
print("G(Y) =", G.format("Y"))
print("F vs Sylvester:", compare_quadratics(sylvester_F(inst), F))
print("G vs Sylvester:", "equal" if sylvester_G(inst) == G else "differs")
print("printed F vs oracle:", compare_quadratics(F, printed_F(inst)))

# F and G lose their X^2 and X terms here; y = 1 divides anything
print("\nF(u1) =", F(inst.u1), " G(u2) =", G(inst.u2))
print("divisibility:", divisibility_check(inst).ok)

disc = discriminant_bounds(inst)
print(f"\nH(Disc F) = {disc.height_F} <= {disc.bound_F}")
print(f"H(Disc G) = {disc.height_G} <= {disc.bound_G}")
for f in disc.findings:
    print("  finding:", f)

cls = classify(inst)
print("\ncases:")
for c in cls.cases:
    print("  ", c)
for f in cls.findings:
    print("  finding:", f)

deg = degree_bound(inst)
print(f"\ndeg sigma <= H(u1) + H(y) = {height(inst.u1)} + {height(inst.y)} = {deg.degree_bound}"
      f" <= {deg.bound}")
