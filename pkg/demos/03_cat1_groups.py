"""Generalized cat1-groups and their functor into generalized crossed modules.

(G, s, t) has two self-action-preserving endomorphisms with s o t = t and
t o s = s, and every element of ker t acting trivially on ker s.  The functor
sends (G, s, t) to (ker s, im s, t restricted), with im s acting through the
self-action.
"""

from genxmod import (
    cat1_to_gxmod,
    check_ordinary_cat1,
    cyclic_group,
    enumerate_gcat1s,
    symmetric_group,
    validate_gcat1,
    validate_gxmod_full,
)
from genxmod.fixtures import s3_identity_cat1, v4_projection_cat1

c = v4_projection_cat1()
print("V4 with s = t = first-factor projection, valid:", validate_gcat1(c).ok)
print("counts as an ordinary cat1-group (abelian, trivial action):", check_ordinary_cat1(c))

x = cat1_to_gxmod(c)
print("functor image: ker s of order", x.A.group.order, "-> im s of order", x.B.group.order,
      "valid:", validate_gxmod_full(x).ok)

print("\nS3 with s = t = id, conjugation action:",
      validate_gcat1(s3_identity_cat1()).ok)

# exhaustive enumeration: every self-action and every compatible (s, t) pair
for g in (cyclic_group(4), symmetric_group(3)):
    cats = enumerate_gcat1s(g)
    print(f"\n{g.name}: {len(cats)} cat1 structures; functor images all valid:",
          all(validate_gxmod_full(cat1_to_gxmod(cc)).ok for cc in cats))
