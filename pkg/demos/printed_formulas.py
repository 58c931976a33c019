"""Where the printed discriminant formulas drift from the computed ones.

F and G are taken from exact resultants.  Their discriminants b^2 - 4ac are
compared with the closed forms as printed: the formula for Disc(F) matches
once lam'^2 is read as lam', the one for Disc(G) matches under neither
reading of its missing operator.  Whatever the printed forms say, the
computed discriminants always satisfy Disc(G) = (lam*theta_1 - lam')^2 Disc(F).
"""

import random
from collections import Counter

from unitfield.harness.generators import rand_strict_instance
from unitfield.vojta import discriminant_bounds, printed_disc_F, printed_disc_G

rng = random.Random(1)
findings = Counter()
slack_F, slack_G = [], []
for _ in range(100):
    inst = rand_strict_instance(rng)
    rep = discriminant_bounds(inst)
    findings.update(rep.findings)
    assert rep.same_square_class
    slack_F.append(rep.bound_F - rep.height_F)
    slack_G.append(rep.bound_G - rep.height_G)
    dF = inst.F.discriminant()
    assert printed_disc_F(inst, corrected=True) == dF

for text, n in findings.most_common():
    print(f"{n:4d}  {text}")
print("\nmin slack in the Disc(F) bound:", min(slack_F))
print("min slack in the Disc(G) bound:", min(slack_G))

inst = rand_strict_instance(rng)
print("\nexample: lam =", inst.lam, " u1 =", inst.u1, " u2 =", inst.u2)
print("Disc F (oracle)        :", inst.F.discriminant())
print("Disc F (printed)       :", printed_disc_F(inst))
print("Disc G (oracle)        :", inst.G.discriminant())
print("Disc G (printed, prod) :", printed_disc_G(inst, "product"))
