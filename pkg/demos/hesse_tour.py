"""The Hesse pencil, its group of 216 projectivities, and the j-line."""
from cubicline import hesse as H
from cubicline.forms import ProjectivePoint
from cubicline.scalars import BASE

one = BASE.one()

G = H.g216()
print("group order", G.order, "; level subgroup", H.level_subgroup().order)

m = H.HessePoint(one, 5 * one)
orbit, stab = H.orbit_and_stabilizer(m)
print("orbit of mu = 5 has", len(orbit), "members, stabilizer", stab)
print("j on the orbit:", {str(H.j_invariant(p)) for p in orbit})

# the four singular members form one orbit
print("singular orbit:", [str(p) for p in H.orbit_formula(H.HessePoint(BASE.zero(), one))])

# a generic pair has 216 preimages
b = ProjectivePoint([one, 3 * one, 7 * one])
z = H.pair_of(H.HessePoint(one, 2 * one), b)
pts = H.fiber(z)
print("fibre size", len(pts))

t = H.incidence_table()
print("incidence mismatches", t.mismatches())
