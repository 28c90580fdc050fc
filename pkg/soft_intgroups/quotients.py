"""
Soft cosets and the quotient group G/f of a normal soft int-group.
"""

import logging
from functools import cached_property
from typing import List, Optional, Tuple

from .config import Side
from .errors import AxiomViolation, NotNormal
from .groups import FiniteGroup, Homomorphism, QuotientGroup, quotient_by
from .int_groups import SoftIntGroup, SoftLike, as_soft, eset_subgroup, is_normal, soft_product
from .soft_sets import SoftSet, USet, e_set, soft_point

logger = logging.getLogger(__name__)


class SoftCoset:
    """The soft coset af (x -> f(a^-1 x)) or fa (x -> f(x a^-1))."""

    def __init__(self, base: SoftIntGroup, representative: int, side: Side = Side.LEFT):
        if not 0 <= representative < base.group.order:
            raise ValueError("representative outside the group")
        self.base = base
        self.representative = representative
        self.side = side

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        group, a = self.base.group, self.representative
        if self.side == Side.LEFT:
            row = group.left_division_table[a]
        else:
            row = group.right_division_table[a]
        return tuple(self.base.masks[row[x]] for x in group.elements)

    def __call__(self, x: int) -> USet:
        return USet(self.base.universe, self.masks[x])

    def as_soft(self) -> SoftSet:
        return self.base.inner.with_masks(self.masks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SoftCoset)
            and other.base.inner.compatible_with(self.base.inner)
            and other.masks == self.masks
        )

    def __hash__(self) -> int:
        return hash(self.masks)

    def __repr__(self) -> str:
        a = self.base.group.name(self.representative)
        return f"{a}f" if self.side == Side.LEFT else f"f{a}"


def coset(f: SoftIntGroup, a: int, side: Side = Side.LEFT) -> SoftCoset:
    return SoftCoset(f, a, side)


def coset_by_product(f: SoftIntGroup, a: int, side: Side = Side.LEFT) -> SoftSet:
    """The coset realised as a soft product with the soft point a^{f(e)}."""
    point = soft_point(f.group, a, f(f.group.identity))
    if side == Side.LEFT:
        return soft_product(point, f)
    return soft_product(f, point)


def cosets_equal(first: SoftCoset, second: SoftCoset) -> bool:
    """Pointwise equality of the value functions."""
    return first == second


def cosets_equal_by_eset(f: SoftLike, a: int, b: int, side: Side = Side.LEFT) -> bool:
    """af = bf decided by a*e_f = b*e_f (e_f*a = e_f*b on the right)."""
    f = as_soft(f)
    group = f.group
    eset = e_set(f)
    if side == Side.LEFT:
        return {group.op(a, h) for h in eset} == {group.op(b, h) for h in eset}
    return {group.op(h, a) for h in eset} == {group.op(h, b) for h in eset}


def distinct_cosets(f: SoftIntGroup, side: Side = Side.LEFT) -> List[SoftCoset]:
    """Distinct cosets in order of their first representative."""
    seen = {}
    for a in f.group.elements:
        c = SoftCoset(f, a, side)
        seen.setdefault(c.masks, c)
    return list(seen.values())


class SoftQuotientGroup(FiniteGroup):
    """G/f: distinct cosets xf under (xf)*(yf) = (xy)f."""

    def __init__(self, base: SoftIntGroup):
        """Build the coset table of a normal soft int-group.

        Raises:
            NotNormal: If base is not normal
            AxiomViolation: If the coset product depends on representatives
        """
        if not is_normal(base):
            raise NotNormal("quotient needs a normal soft int-group")
        group = base.group
        cosets = distinct_cosets(base)
        position = {c.masks: i for i, c in enumerate(cosets)}
        coset_of = tuple(position[SoftCoset(base, x).masks] for x in group.elements)
        representatives = tuple(c.representative for c in cosets)

        table = [[coset_of[group.op(a, b)] for b in representatives] for a in representatives]
        for x in group.elements:
            for y in group.elements:
                if coset_of[group.op(x, y)] != table[coset_of[x]][coset_of[y]]:
                    raise AxiomViolation("well-defined", (x, y))

        super().__init__(table, [f"{group.name(a)}f" for a in representatives])
        self.base = base
        self.cosets: Tuple[SoftCoset, ...] = tuple(cosets)
        self.coset_of = coset_of
        self.representatives = representatives
        logger.debug("soft quotient of order %d over %r", len(cosets), group)

    @property
    def projection(self) -> Homomorphism:
        """x -> xf."""
        return Homomorphism(self.base.group, self, self.coset_of)

    def isomorphism(self) -> Homomorphism:
        """xf -> x*e_f onto G/e_f.

        Raises:
            NotAHomomorphism: If the map does not respect products
        """
        target: QuotientGroup = quotient_by(self.base.group, eset_subgroup(self.base))
        images = [target.coset_of[a] for a in self.representatives]
        return Homomorphism(self, target, images)


def quotient_group(f: SoftIntGroup) -> SoftQuotientGroup:
    """Raises NotNormal for a non-normal f."""
    return SoftQuotientGroup(f)


def quotient_soft(f: SoftIntGroup, quotient: Optional[SoftQuotientGroup] = None) -> SoftIntGroup:
    """The soft int-group xf -> f(x) over G/f.

    Raises:
        NotNormal: If f is not normal
        AxiomViolation: If two representatives of one coset carry different values
    """
    if quotient is None:
        quotient = SoftQuotientGroup(f)
    masks = [f.masks[a] for a in quotient.representatives]
    for x in f.group.elements:
        if f.masks[x] != masks[quotient.coset_of[x]]:
            raise AxiomViolation("well-defined", (x,))
    return SoftIntGroup(SoftSet(quotient, f.universe, masks))
