"""
Soft image and soft preimage along group homomorphisms.
"""

from typing import Sequence, Tuple

from .errors import GroupMismatch
from .groups import Homomorphism
from .int_groups import SoftLike, as_soft
from .soft_sets import SoftSet


def image_masks_along(hom: Homomorphism, masks: Sequence[int]) -> Tuple[int, ...]:
    """phi(f)(y) = union of f(x) over the fiber of y."""
    out = [0] * hom.codomain.order
    for x, y in enumerate(hom.images):
        out[y] |= masks[x]
    return tuple(out)


def preimage_masks_along(hom: Homomorphism, masks: Sequence[int]) -> Tuple[int, ...]:
    """phi^-1(g)(x) = g(phi(x))."""
    return tuple(masks[y] for y in hom.images)


def soft_image(hom: Homomorphism, f: SoftLike) -> SoftSet:
    """Soft image over the codomain; empty fibers give the empty set.

    Raises:
        GroupMismatch: If f does not live over the domain
    """
    f = as_soft(f)
    if not f.group.same_as(hom.domain):
        raise GroupMismatch("soft set does not live over the domain")
    return SoftSet(hom.codomain, f.universe, image_masks_along(hom, f.masks))


def soft_preimage(hom: Homomorphism, g: SoftLike) -> SoftSet:
    """Soft preimage over the domain.

    Raises:
        GroupMismatch: If g does not live over the codomain
    """
    g = as_soft(g)
    if not g.group.same_as(hom.codomain):
        raise GroupMismatch("soft set does not live over the codomain")
    return SoftSet(hom.domain, g.universe, preimage_masks_along(hom, g.masks))
