"""Coverings and liftings of a fixed generalized crossed module, and the two
criterion theorems with their concrete witnesses.

A covering of (A, B, alpha) is a morphism <f, g> into it with f an
isomorphism.  A lifting factors alpha through some X as omega o phi so that
(A, X, phi) is again a crossed module under the pulled-back action.
"""

from genxmod import (
    GXModMorphism,
    WitnessFailure,
    extend_morphism_through_lifting,
    factor_through_covering,
    identity_covering,
    identity_hom,
    image_lifting,
    lifting_to_covering,
    natural_lifting,
    quotient_lifting,
    self_lifting,
    subgroup,
    validate_covering,
    validate_lifting,
    Hom,
)
from genxmod.fixtures import gx1, gx2, gx3
from genxmod.groups import kernel

base = gx3()

# canonical liftings
nat = natural_lifting(base)
print("natural lifting through A/ker alpha: X order", nat.X.group.order,
      "ker phi =", kernel(nat.phi).members, "valid:", validate_lifting(nat).ok)
img = image_lifting(base)
print("image lifting through alpha(A): valid:", validate_lifting(img).ok)
print("self lifting valid:", validate_lifting(self_lifting(base)).ok)

# quotient liftings exist for every ideal inside ker alpha
q = quotient_lifting(base, subgroup(base.A.group, [0]))
print("quotient by the trivial ideal: phi bijective:", q.phi.is_bijective())

# every lifting is a covering via <1_A, omega>
cov = lifting_to_covering(nat)
print("\nlifting viewed as covering valid:", validate_covering(cov).ok)

# morphism extension through a lifting: succeeds exactly when
# f(ker alpha~) lands inside ker phi, otherwise a witness element comes back
x, y = gx3(), gx1()
m = GXModMorphism(x, y, Hom(x.A.group, y.A.group, (0, 1, 0, 1)), identity_hom(y.B.group))
extended = extend_morphism_through_lifting(m, natural_lifting(y))
print("\nextension through the natural lifting of GX1 found:",
      isinstance(extended, GXModMorphism))

blocked = extend_morphism_through_lifting(
    GXModMorphism(gx2(), gx2(), identity_hom(gx2().A.group), identity_hom(gx2().B.group)),
    quotient_lifting(gx2(), subgroup(gx2().A.group, [0])),
)
print("identity on GX2 cannot extend through the injective-phi lifting:",
      isinstance(blocked, WitnessFailure), "witness element:", blocked.element)

# factorization through a covering obeys the mirror-image criterion
factored = factor_through_covering(x, m, identity_covering(y))
print("\nfactorization through the identity covering found:",
      isinstance(factored, GXModMorphism))
