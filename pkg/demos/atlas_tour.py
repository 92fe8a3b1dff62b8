"""Sample the two chart atlases and the 3-tangent stratum."""
import random

from cubicline import atlas as A
from cubicline.geometry import classify_cubic, contact_type

rng = random.Random(1)

for j in range(1, 8):
    rep = A.verify_phi_extension(j, samples=10, rng=rng)
    print("phi chart %d: %d/%d samples pass" % (j, sum(r.passed for r in rep.records), len(rep.records)))

for r in range(1, 5):
    rep = A.verify_psi_extension(r, samples=10, rng=rng)
    print("psi chart %d: %d/%d samples pass" % (r, sum(x.passed for x in rep.records), len(rep.records)))

rep = A.verify_phi_transition(1, 2, samples=6, rng=rng)
print("transition 1 -> 2:", "ok" if rep.passed else "FAILED")

# both limits of the graph family
gc = A.graph_closure_family(1, 0, 0, 1)
print("first limit ", gc.first, classify_cubic(gc.first.C).kind)
print("second limit", gc.second, contact_type(gc.second.C, gc.second.L).kind)

# smooth members of the 3-tangent stratum are read off by j
for mu in (0, 2, 3):
    print("mu =", mu, "j =", A.wt_j_match(mu).j)
print("mu = 1:", A.wt_j_match(1).j)
