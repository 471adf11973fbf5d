"""Generalized crossed modules: the two defining conditions, derived modules,
and transport along isomorphisms.

(A, B, alpha) has alpha: A -> B between groups with self-action and an action
of B on A subject to
    equivariance:  alpha(b . a)  = ^b alpha(a)
    peiffer:       alpha(a) . a1 = ^a a1
"""

from genxmod import (
    Hom,
    check_alpha_gwa_morphism,
    check_kernel_acts_trivially,
    image_gxmod,
    is_aspherical,
    is_simply_connected,
    kernel_gxmod,
    transport_domain,
    validate_gxmod,
    validate_gxmod_full,
    validate_gxmod_morphism,
)
from genxmod.fixtures import a3_s3, gx1, gx3, inner_automorphism_gxmod, zero_module_gxmod

for x in (gx1(), gx3(), a3_s3(), inner_automorphism_gxmod(), zero_module_gxmod()):
    print(
        f"{x.name}: valid={validate_gxmod_full(x).ok}"
        f" aspherical={is_aspherical(x)} simply_connected={is_simply_connected(x)}"
    )

x = gx3()
print("\nalpha automatically preserves self-actions:", check_alpha_gwa_morphism(x))
print("the kernel of alpha acts trivially on A:", check_kernel_acts_trivially(x))

# the kernel and image inherit crossed module structures
k = kernel_gxmod(x)
print("\nkernel module: order", k.A.group.order, "into A of order", k.B.group.order,
      "valid:", validate_gxmod(k).ok, "aspherical:", is_aspherical(k))
im = image_gxmod(x)
print("image module: order", im.A.group.order, "into B, valid:", validate_gxmod(im).ok)

# transport A along one of its self-action-preserving automorphisms:
# the result is isomorphic, and transporting back returns the original tables
inv = Hom(x.A.group, x.A.group, x.A.group.inv)
moved, witness = transport_domain(x, inv, x.A)
print("\ntransported module valid:", validate_gxmod(moved).ok)
print("witness morphism valid:", validate_gxmod_morphism(witness).ok)
back, _ = transport_domain(moved, inv, x.A)
print("round trip restores tables exactly:", back == x)
