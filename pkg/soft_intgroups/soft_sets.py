"""
Finite universes, their subsets P(U), and the soft set algebra over a group.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from .config import CONFIG, SoftKind
from .errors import GroupMismatch, UniverseMismatch
from .groups import FiniteGroup


def _default_label(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"u{i}"


@dataclass(frozen=True)
class Universe:
    """The initial universe U, given by distinct display labels."""
    labels: Tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("universe needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("universe labels must be distinct")
        if len(self.labels) > CONFIG.MAX_UNIVERSE_SIZE:
            raise ValueError(f"universe larger than {CONFIG.MAX_UNIVERSE_SIZE}")

    @classmethod
    def of_size(cls, m: int) -> 'Universe':
        """Universe labelled a, b, c, ..."""
        return cls(tuple(_default_label(i) for i in range(m)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def empty(self) -> 'USet':
        return USet(self, 0)

    def full(self) -> 'USet':
        return USet(self, self.full_mask)

    def subset(self, labels: Iterable[str]) -> 'USet':
        """USet from labels.

        Raises:
            KeyError: If a label is not in the universe
        """
        mask = 0
        for label in labels:
            try:
                mask |= 1 << self.labels.index(label)
            except ValueError:
                raise KeyError(label) from None
        return USet(self, mask)

    def from_mask(self, mask: int) -> 'USet':
        return USet(self, mask)

    def render(self, mask: int) -> str:
        """Render a mask as ``{a,b}``."""
        return "{" + ",".join(label for i, label in enumerate(self.labels) if mask >> i & 1) + "}"


@dataclass(frozen=True)
class USet:
    """A subset of the universe, packed into a bit mask."""
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise ValueError("mask outside the universe")

    def _check(self, other: 'USet') -> None:
        if other.universe != self.universe:
            raise UniverseMismatch("values over different universes")

    def __or__(self, other: 'USet') -> 'USet':
        self._check(other)
        return USet(self.universe, self.mask | other.mask)

    def __and__(self, other: 'USet') -> 'USet':
        self._check(other)
        return USet(self.universe, self.mask & other.mask)

    def __sub__(self, other: 'USet') -> 'USet':
        self._check(other)
        return USet(self.universe, self.mask & ~other.mask)

    def issubset(self, other: 'USet') -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def issuperset(self, other: 'USet') -> bool:
        return other.issubset(self)

    def is_proper_subset(self, other: 'USet') -> bool:
        return self.issubset(other) and self.mask != other.mask

    # inclusion order only; never by size
    __le__ = issubset
    __ge__ = issuperset

    def __lt__(self, other: 'USet') -> bool:
        return self.is_proper_subset(other)

    def __gt__(self, other: 'USet') -> bool:
        return other.is_proper_subset(self)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def labels(self) -> Tuple[str, ...]:
        return tuple(label for i, label in enumerate(self.universe.labels) if self.mask >> i & 1)

    def __str__(self) -> str:
        return self.universe.render(self.mask)


class SoftSet:
    """A total map f: G -> P(U); off-support values are the empty set."""

    def __init__(self, group: FiniteGroup, universe: Universe, masks: Sequence[int]):
        """Create a soft set from one value mask per group element.

        Raises:
            ValueError: If the value array is not total over G or leaves U
        """
        masks = tuple(int(m) for m in masks)
        if len(masks) != group.order:
            raise ValueError(f"expected {group.order} values, got {len(masks)}")
        full = universe.full_mask
        if any(m < 0 or m & ~full for m in masks):
            raise ValueError("value outside the universe")
        self.group = group
        self.universe = universe
        self.masks = masks

    def __call__(self, x: int) -> USet:
        return USet(self.universe, self.masks[x])

    @property
    def values(self) -> Tuple[USet, ...]:
        return tuple(USet(self.universe, m) for m in self.masks)

    def compatible_with(self, other: 'SoftSet') -> bool:
        return other.group.same_as(self.group) and other.universe == self.universe

    def __eq__(self, other) -> bool:
        return isinstance(other, SoftSet) and self.compatible_with(other) and other.masks == self.masks

    def __hash__(self) -> int:
        return hash((self.group.order, self.universe, self.masks))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self.group.name(x)}:{self.universe.render(m)}" for x, m in enumerate(self.masks)
        )
        return f"SoftSet({body})"

    def with_masks(self, masks: Sequence[int]) -> 'SoftSet':
        """Soft set over the same group and universe."""
        return SoftSet(self.group, self.universe, masks)


def require_compatible(first: SoftSet, second: SoftSet) -> None:
    """Raise if two soft sets do not share group and universe.

    Raises:
        GroupMismatch: If the groups differ
        UniverseMismatch: If the universes differ
    """
    if not first.group.same_as(second.group):
        raise GroupMismatch("soft sets over different groups")
    if first.universe != second.universe:
        raise UniverseMismatch("soft sets over different universes")


def make_soft(group: FiniteGroup, universe: Universe, kind: SoftKind,
              elements: Optional[Iterable[int]] = None, alpha: Optional[USet] = None,
              point: Optional[int] = None, values: Optional[Sequence] = None) -> SoftSet:
    """Build one of the canonical soft sets.

    Args:
        group: Parameter group E = G
        universe: Value universe U
        kind: Which constructor to apply
        elements: Element set A for CHARACTERISTIC and A_ALPHA
        alpha: Value for A_ALPHA and POINT
        point: Element w for POINT
        values: Per-element USets (or masks) for EXPLICIT

    Returns:
        The soft set, total over G

    Raises:
        UniverseMismatch: If alpha or an explicit value lives over another universe
    """
    n = group.order
    if kind == SoftKind.EMPTY:
        return SoftSet(group, universe, [0] * n)
    if kind == SoftKind.UNIVERSAL:
        return SoftSet(group, universe, [universe.full_mask] * n)
    if kind == SoftKind.EXPLICIT:
        masks = []
        for value in values:
            if isinstance(value, USet):
                if value.universe != universe:
                    raise UniverseMismatch("explicit value over another universe")
                value = value.mask
            masks.append(value)
        return SoftSet(group, universe, masks)

    if kind.needs_alpha():
        if alpha is None:
            raise ValueError(f"{kind.value} needs alpha")
        if alpha.universe != universe:
            raise UniverseMismatch("alpha over another universe")
        value = alpha.mask
    else:
        value = universe.full_mask

    if kind == SoftKind.POINT:
        if point is None or not 0 <= point < n:
            raise ValueError("point needs a valid element index")
        members = {point}
    else:
        if kind.needs_elements() and elements is None:
            raise ValueError(f"{kind.value} needs an element set")
        members = set(elements)
        if any(not 0 <= x < n for x in members):
            raise ValueError("element set outside the group")
    return SoftSet(group, universe, [value if x in members else 0 for x in range(n)])


def empty_soft(group: FiniteGroup, universe: Universe) -> SoftSet:
    return make_soft(group, universe, SoftKind.EMPTY)


def universal_soft(group: FiniteGroup, universe: Universe) -> SoftSet:
    return make_soft(group, universe, SoftKind.UNIVERSAL)


def characteristic(group: FiniteGroup, universe: Universe, elements: Iterable[int]) -> SoftSet:
    return make_soft(group, universe, SoftKind.CHARACTERISTIC, elements=elements)


def a_alpha(group: FiniteGroup, elements: Iterable[int], alpha: USet) -> SoftSet:
    return make_soft(group, alpha.universe, SoftKind.A_ALPHA, elements=elements, alpha=alpha)


def soft_point(group: FiniteGroup, w: int, alpha: USet) -> SoftSet:
    return make_soft(group, alpha.universe, SoftKind.POINT, point=w, alpha=alpha)


def soft_union(f: SoftSet, g: SoftSet) -> SoftSet:
    """Pointwise union."""
    require_compatible(f, g)
    return f.with_masks([a | b for a, b in zip(f.masks, g.masks)])


def soft_intersection(f: SoftSet, g: SoftSet) -> SoftSet:
    """Pointwise intersection."""
    require_compatible(f, g)
    return f.with_masks([a & b for a, b in zip(f.masks, g.masks)])


def masks_subset(first: Sequence[int], second: Sequence[int]) -> bool:
    return all(a & ~b == 0 for a, b in zip(first, second))


def is_soft_subset(f: SoftSet, g: SoftSet) -> bool:
    """f(x) included in g(x) for every x."""
    require_compatible(f, g)
    return masks_subset(f.masks, g.masks)


def soft_equal(f: SoftSet, g: SoftSet) -> bool:
    """Pointwise equality."""
    require_compatible(f, g)
    return f.masks == g.masks


def support(f: SoftSet) -> FrozenSet[int]:
    """f* = elements with a nonempty value."""
    return frozenset(x for x, m in enumerate(f.masks) if m)


def image_of_set(f: SoftSet, elements: Iterable[int]) -> USet:
    """f(K) = union of f(x) over x in K; empty for empty K."""
    mask = 0
    for x in elements:
        mask |= f.masks[x]
    return USet(f.universe, mask)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_chain(masks: Iterable[int]) -> bool:
    """Check if masks are totally ordered by inclusion."""
    ordered = sorted(set(masks), key=_popcount)
    return all(a & ~b == 0 for a, b in zip(ordered, ordered[1:]))


@dataclass(frozen=True)
class ImageClass:
    """Distinct values of a soft set and whether they form a chain."""
    values: Tuple[USet, ...]
    is_chain: bool

    def masks(self) -> Tuple[int, ...]:
        return tuple(v.mask for v in self.values)


def image_masks(f: SoftSet, include_empty: bool = False) -> Tuple[int, ...]:
    """Distinct support values, larger first then by mask."""
    distinct = {m for m in f.masks if m}
    if include_empty and any(m == 0 for m in f.masks):
        distinct.add(0)
    return tuple(sorted(distinct, key=lambda m: (-_popcount(m), m)))


def image_class(f: SoftSet, include_empty: bool = False) -> ImageClass:
    """Im(f) over the support, with a chain flag.

    Args:
        f: Soft set
        include_empty: Also include the empty set when the support is proper
    """
    masks = image_masks(f, include_empty)
    return ImageClass(tuple(USet(f.universe, m) for m in masks), is_chain(masks))


def cut_of_masks(masks: Sequence[int], alpha: int, strict: bool = False) -> FrozenSet[int]:
    """Alpha-cut on raw masks; the non-strict empty cut is the support."""
    if alpha == 0:
        return frozenset(x for x, m in enumerate(masks) if m)
    if strict:
        return frozenset(x for x, m in enumerate(masks) if alpha & ~m == 0 and m != alpha)
    return frozenset(x for x, m in enumerate(masks) if alpha & ~m == 0)


def alpha_cut(f: SoftSet, alpha: USet, strict: bool = False) -> FrozenSet[int]:
    """f^alpha = {x : f(x) contains alpha}; strict asks for proper containment.

    Raises:
        UniverseMismatch: If alpha lives over another universe
    """
    if alpha.universe != f.universe:
        raise UniverseMismatch("alpha over another universe")
    return cut_of_masks(f.masks, alpha.mask, strict)


def e_set(f: SoftSet) -> FrozenSet[int]:
    """Elements whose value equals f(e)."""
    top = f.masks[f.group.identity]
    return frozenset(x for x, m in enumerate(f.masks) if m == top)
