"""
The soft int-group calculus: validation, soft product, normality, conjugates,
normalizer and level subgroups.

Hot loops work on raw value masks (one int per group element) so the theorem
suite can sweep millions of soft sets; the public functions wrap them.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .config import CONFIG, NormalityCriterion
from .errors import EmptyFamily, EmptySupport, NotAnIntGroup, NotASubgroup, PreconditionFailed
from .groups import FiniteGroup, Subgroup, commutator, quotient_by
from .soft_sets import (
    ImageClass, SoftSet, Universe, USet, cut_of_masks, e_set, image_class, image_masks,
    masks_subset, require_compatible,
)

logger = logging.getLogger(__name__)

Masks = Tuple[int, ...]


@dataclass(frozen=True)
class GroupoidViolation:
    """f(xy) does not contain f(x) & f(y)."""
    x: int
    y: int

    @property
    def witness(self) -> Tuple[int, ...]:
        return (self.x, self.y)

    def describe(self, group: FiniteGroup) -> str:
        return f"groupoid condition fails at ({group.name(self.x)},{group.name(self.y)})"


@dataclass(frozen=True)
class InverseViolation:
    """f(x^-1) differs from f(x)."""
    x: int

    @property
    def witness(self) -> Tuple[int, ...]:
        return (self.x,)

    def describe(self, group: FiniteGroup) -> str:
        return f"inverse condition fails at {group.name(self.x)}"


Violation = Union[GroupoidViolation, InverseViolation]


# Mask kernels

def groupoid_witness(group: FiniteGroup, masks: Sequence[int]) -> Optional[Tuple[int, int]]:
    """First (x, y) in row-major order with f(xy) missing part of f(x) & f(y)."""
    mul = group.mul
    for x in group.elements:
        fx = masks[x]
        if not fx:
            continue
        row = mul[x]
        for y in group.elements:
            if fx & masks[y] & ~masks[row[y]]:
                return x, y
    return None


def inverse_witness(group: FiniteGroup, masks: Sequence[int]) -> Optional[int]:
    """First x with f(x^-1) != f(x)."""
    inv = group.inverses
    for x in group.elements:
        if masks[inv[x]] != masks[x]:
            return x
    return None


def find_violation(group: FiniteGroup, masks: Sequence[int]) -> Optional[Violation]:
    """Groupoid pass first, then the inverse pass."""
    pair = groupoid_witness(group, masks)
    if pair is not None:
        return GroupoidViolation(*pair)
    x = inverse_witness(group, masks)
    if x is not None:
        return InverseViolation(x)
    return None


def product_masks(group: FiniteGroup, first: Sequence[int], second: Sequence[int]) -> Masks:
    """(f*g)(x) = union of f(u) & g(u^-1 x) over u."""
    ldiv = group.left_division_table
    out = [0] * group.order
    for u in group.elements:
        a = first[u]
        if not a:
            continue
        row = ldiv[u]
        for x in group.elements:
            out[x] |= a & second[row[x]]
    return tuple(out)


def inverse_masks(group: FiniteGroup, masks: Sequence[int]) -> Masks:
    inv = group.inverses
    return tuple(masks[inv[x]] for x in group.elements)


def alpha_levels(universe: Universe, masks: Sequence[int]) -> List[int]:
    """Nonempty cut levels to scan.

    Every nonempty alpha for small universes; otherwise the nonempty pairwise
    intersections of values, which decide the same subgroup questions.
    """
    if universe.size <= CONFIG.ALPHA_SCAN_LIMIT:
        return list(range(1, universe.full_mask + 1))
    distinct = sorted(set(masks))
    return sorted({a & b for a in distinct for b in distinct} - {0})


def is_int_group_direct(group: FiniteGroup, masks: Sequence[int]) -> bool:
    return find_violation(group, masks) is None


def is_int_group_by_cuts(group: FiniteGroup, universe: Universe, masks: Sequence[int]) -> bool:
    """Every nonempty cut f^alpha (alpha nonempty) is a subgroup."""
    for alpha in alpha_levels(universe, masks):
        cut = cut_of_masks(masks, alpha)
        if cut and not group.is_closed(cut):
            return False
    return True


def is_int_group_by_product(group: FiniteGroup, masks: Sequence[int]) -> bool:
    """f*f included in f and f^-1 = f."""
    return (
        masks_subset(product_masks(group, masks, masks), masks)
        and inverse_masks(group, masks) == tuple(masks)
    )


def normality_witness_masks(group: FiniteGroup, masks: Sequence[int],
                            criterion: NormalityCriterion) -> Optional[Tuple[int, int]]:
    """First failing pair for a normality criterion, None when it holds."""
    mul = group.mul
    conj = group.conjugation_table
    elements = group.elements
    if criterion == NormalityCriterion.ABELIAN:
        for x in elements:
            for y in elements:
                if masks[mul[x][y]] != masks[mul[y][x]]:
                    return x, y
    elif criterion in (NormalityCriterion.CONJ_EQ, NormalityCriterion.CONJ_SUP, NormalityCriterion.CONJ_SUB):
        for x in elements:
            row = conj[x]
            for y in elements:
                lhs, rhs = masks[row[y]], masks[y]
                if criterion == NormalityCriterion.CONJ_EQ and lhs != rhs:
                    return x, y
                if criterion == NormalityCriterion.CONJ_SUP and rhs & ~lhs:
                    return x, y
                if criterion == NormalityCriterion.CONJ_SUB and lhs & ~rhs:
                    return x, y
    elif criterion == NormalityCriterion.COMMUTATOR_SUP:
        for x in elements:
            for y in elements:
                if masks[x] & ~masks[commutator(group, x, y)]:
                    return x, y
    elif criterion == NormalityCriterion.ALPHA_CUTS:
        for alpha in sorted({m for m in masks if m}):
            cut = cut_of_masks(masks, alpha)
            for x in elements:
                for h in sorted(cut):
                    if conj[x][h] not in cut:
                        return x, h
            if not group.is_closed(cut):
                return group.identity, min(cut)
    return None


def is_normal_masks(group: FiniteGroup, masks: Sequence[int]) -> bool:
    return normality_witness_masks(group, masks, NormalityCriterion.ABELIAN) is None


def normalizer_members(group: FiniteGroup, masks: Sequence[int]) -> Tuple[int, ...]:
    """{x : f(xy) = f(yx) for all y}."""
    mul = group.mul
    return tuple(
        x for x in group.elements
        if all(masks[mul[x][y]] == masks[mul[y][x]] for y in group.elements)
    )


def conjugate_masks(group: FiniteGroup, masks: Sequence[int], u: int) -> Masks:
    """x -> f(u x u^-1)."""
    row = group.conjugation_table[u]
    return tuple(masks[row[x]] for x in group.elements)


def chain_masks(group: FiniteGroup, chain: Sequence[FrozenSet[int]], values: Sequence[int]) -> Masks:
    """f(x) = values[min{i : x in chain[i]}], empty outside the last member."""
    out = []
    for x in group.elements:
        level = next((i for i, members in enumerate(chain) if x in members), None)
        out.append(0 if level is None else values[level])
    return tuple(out)


# Typed wrappers

class SoftIntGroup:
    """A soft set validated as a soft int-group."""

    def __init__(self, inner: SoftSet, validate: bool = True):
        """Wrap a soft set.

        Args:
            inner: The soft set
            validate: Check both int-group conditions first

        Raises:
            NotAnIntGroup: If validation finds a violation
        """
        if validate:
            violation = find_violation(inner.group, inner.masks)
            if violation is not None:
                raise NotAnIntGroup(violation)
        self.inner = inner

    @property
    def group(self) -> FiniteGroup:
        return self.inner.group

    @property
    def universe(self) -> Universe:
        return self.inner.universe

    @property
    def masks(self) -> Masks:
        return self.inner.masks

    @property
    def values(self) -> Tuple[USet, ...]:
        return self.inner.values

    def __call__(self, x: int) -> USet:
        return self.inner(x)

    def __eq__(self, other) -> bool:
        if isinstance(other, SoftIntGroup):
            other = other.inner
        return self.inner == other

    def __hash__(self) -> int:
        return hash(self.inner)

    def __repr__(self) -> str:
        return "SoftIntGroup" + repr(self.inner)[len("SoftSet"):]

    def _derive(self, masks: Sequence[int]) -> 'SoftIntGroup':
        return SoftIntGroup(self.inner.with_masks(masks), validate=False)


SoftLike = Union[SoftSet, SoftIntGroup]


def as_soft(f: SoftLike) -> SoftSet:
    return f.inner if isinstance(f, SoftIntGroup) else f


def check_int_group(f: SoftLike) -> Union[SoftIntGroup, Violation]:
    """Validate both int-group conditions by a full double loop.

    Returns:
        The validated SoftIntGroup, or the first violation under row-major order
    """
    f = as_soft(f)
    violation = find_violation(f.group, f.masks)
    if violation is not None:
        return violation
    return SoftIntGroup(f, validate=False)


def require_int_group(f: SoftLike) -> SoftIntGroup:
    """Like check_int_group but raising.

    Raises:
        NotAnIntGroup: With the first violation
    """
    result = check_int_group(f)
    if not isinstance(result, SoftIntGroup):
        raise NotAnIntGroup(result)
    return result


def int_group_routes(f: SoftLike) -> Dict[str, bool]:
    """Verdicts of the direct, cut and product routes."""
    f = as_soft(f)
    return {
        "direct": is_int_group_direct(f.group, f.masks),
        "cuts": is_int_group_by_cuts(f.group, f.universe, f.masks),
        "product": is_int_group_by_product(f.group, f.masks),
    }


def identity_dominance(f: SoftIntGroup) -> bool:
    """f(e) contains every value and the e-set is a subgroup."""
    top = f.masks[f.group.identity]
    return all(m & ~top == 0 for m in f.masks) and f.group.is_closed(e_set(f.inner))


def restrict(f: SoftIntGroup, subgroup: Subgroup) -> SoftIntGroup:
    """f restricted to H, as a soft int-group over H as its own group.

    Raises:
        NotASubgroup: If H belongs to another group
    """
    if not subgroup.parent.same_as(f.group):
        raise NotASubgroup("subgroup of a different group")
    group, embedding = subgroup.as_group()
    return SoftIntGroup(SoftSet(group, f.universe, [f.masks[m] for m in embedding]))


def soft_product(f: SoftLike, g: SoftLike) -> SoftSet:
    """(f*g)(x) = union of f(u) & g(v) over uv = x.

    Raises:
        GroupMismatch, UniverseMismatch: For incompatible operands
    """
    f, g = as_soft(f), as_soft(g)
    require_compatible(f, g)
    return f.with_masks(product_masks(f.group, f.masks, g.masks))


def soft_inverse(f: SoftLike) -> SoftSet:
    """f^-1(x) = f(x^-1)."""
    f = as_soft(f)
    return f.with_masks(inverse_masks(f.group, f.masks))


@dataclass(frozen=True)
class NormalityReport:
    """All normality criteria with their first witnesses."""
    verdicts: Dict[NormalityCriterion, bool]
    witnesses: Dict[NormalityCriterion, Optional[Tuple[int, int]]]

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def is_normal(self) -> bool:
        return self.verdicts[NormalityCriterion.ABELIAN]


def normality_report(f: SoftIntGroup) -> NormalityReport:
    witnesses = {
        c: normality_witness_masks(f.group, f.masks, c) for c in NormalityCriterion
    }
    return NormalityReport({c: w is None for c, w in witnesses.items()}, witnesses)


def is_normal(f: SoftIntGroup, criterion: NormalityCriterion = NormalityCriterion.ABELIAN) -> bool:
    """Normality under one of the six equivalent criteria."""
    return normality_witness_masks(f.group, f.masks, criterion) is None


def commutator_value_test(f: SoftIntGroup) -> bool:
    """f([x, y]) = f(e) for all x, y."""
    group = f.group
    top = f.masks[group.identity]
    return all(
        f.masks[commutator(group, x, y)] == top for x in group.elements for y in group.elements
    )


def eset_subgroup(f: SoftLike) -> Subgroup:
    f = as_soft(f)
    return Subgroup(f.group, e_set(f))


def quotient_by_eset_abelian(f: SoftIntGroup) -> bool:
    """Whether G/e_f is Abelian, for normal f.

    Raises:
        PreconditionFailed: If f is not normal
    """
    if not is_normal(f):
        raise PreconditionFailed("quotient by the e-set needs a normal soft int-group")
    return quotient_by(f.group, eset_subgroup(f)).is_abelian()


def conjugate(f: SoftIntGroup, u: int) -> SoftIntGroup:
    """f^u(x) = f(u x u^-1)."""
    return f._derive(conjugate_masks(f.group, f.masks, u))


def normalizer(f: SoftIntGroup) -> Subgroup:
    """N(f) = {x : f(xy) = f(yx) for all y}."""
    return Subgroup(f.group, normalizer_members(f.group, f.masks))


def distinct_conjugates(f: SoftIntGroup) -> List[SoftIntGroup]:
    """Distinct conjugates f^u in order of first u.

    Raises:
        EmptySupport: If f is empty everywhere
    """
    if not any(f.masks):
        raise EmptySupport("conjugate count needs a nonempty support")
    seen = {}
    for u in f.group.elements:
        masks = conjugate_masks(f.group, f.masks, u)
        if masks not in seen:
            seen[masks] = f._derive(masks)
    return list(seen.values())


def largest_normal_contained(f: SoftIntGroup) -> SoftIntGroup:
    """Pointwise intersection of all conjugates of f."""
    out = list(f.masks)
    for u in f.group.elements:
        for x, m in enumerate(conjugate_masks(f.group, f.masks, u)):
            out[x] &= m
    return f._derive(out)


def family_intersection(family: Sequence[SoftIntGroup]) -> SoftIntGroup:
    """Pointwise intersection of a nonempty family.

    Raises:
        EmptyFamily: For an empty family
        GroupMismatch, UniverseMismatch: For incompatible members
    """
    if not family:
        raise EmptyFamily("family intersection needs at least one member")
    first = family[0]
    out = list(first.masks)
    for member in family[1:]:
        require_compatible(first.inner, as_soft(member))
        out = [a & b for a, b in zip(out, member.masks)]
    return first._derive(out)


def chain_int_group(group: FiniteGroup, universe: Universe, chain: Sequence, values: Sequence) -> SoftIntGroup:
    """Soft int-group built from a subgroup chain and a descending value chain.

    Args:
        group: Parameter group
        universe: Value universe
        chain: Nested subgroups H_0 <= ... <= H_k
        values: Values alpha_0 >= ... >= alpha_k (USets or masks)

    Raises:
        ValueError: If the chains are not nested or differ in length
    """
    members = [frozenset(h.members if isinstance(h, Subgroup) else h) for h in chain]
    masks = [v.mask if isinstance(v, USet) else int(v) for v in values]
    if len(members) != len(masks) or not members:
        raise ValueError("chain and values must be nonempty and of equal length")
    if any(not a <= b for a, b in zip(members, members[1:])):
        raise ValueError("subgroups must be nested")
    if any(b & ~a for a, b in zip(masks, masks[1:])):
        raise ValueError("values must be descending")
    for h in members:
        Subgroup(group, h)
    return SoftIntGroup(SoftSet(group, universe, chain_masks(group, members, masks)))


@dataclass(frozen=True)
class LevelReport:
    """Level subgroups of a soft int-group and their normality structure."""
    image: ImageClass
    level_subgroups: Tuple[Subgroup, ...]
    chain: Optional[Tuple[Subgroup, ...]]
    poset_level_normal: bool
    poset_witness: Optional[Tuple[Subgroup, Subgroup]]
    chain_level_normal: Optional[bool]
    chain_witness: Optional[Tuple[Subgroup, Subgroup]]

    @property
    def is_chain(self) -> bool:
        return self.chain is not None

    def summary(self) -> str:
        """One-line verdict."""
        if self.chain is None:
            verdict = "yes" if self.poset_level_normal else "no"
            return f"images not a chain; poset-form level-normal: {verdict}"
        return "soft level normal" if self.chain_level_normal else "not soft level normal"


def level_structure(f: SoftIntGroup) -> LevelReport:
    """Level subgroups {f^alpha : alpha in Im(f)}, closed at the top by G."""
    group = f.group
    found = []
    for alpha in image_masks(f.inner):
        cut = Subgroup(group, cut_of_masks(f.masks, alpha))
        if cut not in found:
            found.append(cut)
    whole = Subgroup.whole(group)
    if whole not in found:
        found.append(whole)
    levels = tuple(sorted(found, key=lambda h: (h.order, h.members)))

    poset_witness = None
    for small in levels:
        for big in levels:
            if small is not big and small.issubset(big) and not _normal_in(small, big):
                poset_witness = (small, big)
                break
        if poset_witness:
            break

    is_chain = all(a.issubset(b) for a, b in zip(levels, levels[1:]))
    chain = levels if is_chain else None
    chain_normal, chain_witness = None, None
    if chain is not None:
        chain_witness = next(
            ((a, b) for a, b in zip(chain, chain[1:]) if not _normal_in(a, b)), None
        )
        chain_normal = chain_witness is None

    return LevelReport(
        image=image_class(f.inner),
        level_subgroups=levels,
        chain=chain,
        poset_level_normal=poset_witness is None,
        poset_witness=poset_witness,
        chain_level_normal=chain_normal,
        chain_witness=chain_witness,
    )


def _normal_in(small: Subgroup, big: Subgroup) -> bool:
    """H normal in K for nested subgroups of one group."""
    group = small.parent
    conj = group.conjugation_table
    return all(conj[k][h] in small.member_set for k in big.members for h in small.members)
