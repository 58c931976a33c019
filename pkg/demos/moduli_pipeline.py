"""From the conic coefficient lam to the modulus lambda' of the divisor.

The conic y^2 = x^2 + lam*x*z + z^2 meets the lines z = 0 and x = 0 in four
points.  Read as parameters on a rational parametrization of the conic,
their cross-ratio beta determines lambda' = beta + 1/beta - 2.  The whole
pipeline collapses to 16 / (lam^2 - 4).
"""

from fractions import Fraction

from unitfield.moduli import (
    STABILIZER,
    ConicTwoLines,
    apply_perm,
    coeff_to_moduli,
    config_from_coeff,
    cross_ratio,
    intersection_fourple,
    is_normal_crossing,
    lambda_prime,
)

print(f"{'lam':>6} {'fourple':>28} {'beta':>8} {'lambda_prime':>12} {'16/(lam^2-4)':>13}")
for lam in (Fraction(0), Fraction(1), Fraction(6), Fraction(-7, 3), Fraction(5, 2)):
    f = intersection_fourple(config_from_coeff(lam))
    pts = ", ".join(str(p) for p in f)
    print(f"{str(lam):>6} {pts:>28} {str(cross_ratio(f)):>8} "
          f"{str(coeff_to_moduli(lam)):>12} {str(16 / (lam * lam - 4)):>13}")

# A different parametrization (projection from a point the search finds by
# itself) moves the four parameters by a Moebius map; lambda' stays put.
c = config_from_coeff(Fraction(6))
generic = ConicTwoLines(c.conic, c.line2, c.line3)
f = intersection_fourple(generic)
print("\ngeneric parametrization:", [str(p) for p in f], "lambda' =", lambda_prime(f))

# The 8 relabelings that preserve {{P1,P2},{P3,P4}} keep lambda' fixed
print("orbit values:", sorted({str(lambda_prime(apply_perm(g, f))) for g in STABILIZER}))

for lam in (2, -2, 3):
    print(f"lam = {lam}: normal crossing = {is_normal_crossing(config_from_coeff(lam))}")
