"""
Exhaustive enumeration and seeded generation of soft sets and soft int-groups.
"""

import hashlib
import itertools
import logging
import random
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple

from .config import CONFIG
from .errors import BudgetExceeded
from .groups import FiniteGroup, Subgroup, all_subgroups, normal_subgroups
from .int_groups import Masks, SoftIntGroup, chain_masks, is_normal_masks
from .soft_sets import SoftSet, Universe

logger = logging.getLogger(__name__)


def derive_seed(*parts) -> int:
    """64-bit seed from the SHA-256 of the joined parts."""
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


def soft_set_count(group: FiniteGroup, universe: Universe) -> int:
    """(2^|U|)^|G|."""
    return (universe.full_mask + 1) ** group.order


def _require_budget(group: FiniteGroup, universe: Universe, budget: Optional[int]) -> None:
    budget = CONFIG.ENUMERATION_BUDGET if budget is None else budget
    required = soft_set_count(group, universe)
    if required > budget:
        raise BudgetExceeded(required, budget)


def soft_vectors(group: FiniteGroup, universe: Universe, budget: Optional[int] = None) -> Iterator[Masks]:
    """Every value vector in lexicographic order.

    Raises:
        BudgetExceeded: If the count is above the budget
    """
    _require_budget(group, universe, budget)
    return itertools.product(range(universe.full_mask + 1), repeat=group.order)


def int_group_vectors(group: FiniteGroup, universe: Universe, budget: Optional[int] = None) -> Iterator[Masks]:
    """Value vectors of every soft int-group, in the same lexicographic order.

    Elements are assigned in index order and a prefix is abandoned as soon as
    a pair whose product is already assigned breaks a condition.

    Raises:
        BudgetExceeded: If the soft set count is above the budget
    """
    _require_budget(group, universe, budget)
    n = group.order
    mul, inv, ldiv = group.mul, group.inverses, group.left_division_table
    values = range(universe.full_mask + 1)
    assigned = [0] * n

    def consistent(x: int) -> bool:
        fx = assigned[x]
        if inv[x] < x and assigned[inv[x]] != fx:
            return False
        for a in range(x + 1):
            for p, q in ((a, x), (x, a)):
                prod = mul[p][q]
                if prod <= x and assigned[p] & assigned[q] & ~assigned[prod]:
                    return False
            b = ldiv[a][x]
            if a < x and b < x and assigned[a] & assigned[b] & ~fx:
                return False
        return True

    def extend(x: int) -> Iterator[Masks]:
        if x == n:
            yield tuple(assigned)
            return
        for v in values:
            assigned[x] = v
            if consistent(x):
                yield from extend(x + 1)
        assigned[x] = 0

    return extend(0)


def enumerate_soft_sets(group: FiniteGroup, universe: Universe, budget: Optional[int] = None) -> Iterator[SoftSet]:
    """Every total map G -> P(U).

    Raises:
        BudgetExceeded: With the required count
    """
    for masks in soft_vectors(group, universe, budget):
        yield SoftSet(group, universe, masks)


def enumerate_int_groups(group: FiniteGroup, universe: Universe, budget: Optional[int] = None,
                         normal_only: bool = False) -> Iterator[SoftIntGroup]:
    """The soft int-groups among enumerate_soft_sets, same order.

    Raises:
        BudgetExceeded: With the required count
    """
    for masks in int_group_vectors(group, universe, budget):
        if normal_only and not is_normal_masks(group, masks):
            continue
        yield SoftIntGroup(SoftSet(group, universe, masks), validate=False)


def random_chain(subgroups: Sequence[Subgroup], rng: random.Random) -> List[Subgroup]:
    """Random strictly ascending chain ending at the whole group."""
    current = rng.choice(subgroups)
    chain = [current]
    top = subgroups[-1].parent.order
    while current.order < top:
        current = rng.choice([h for h in subgroups if h.order > current.order and current.issubset(h)])
        chain.append(current)
    return chain


def random_value_chain(universe: Universe, length: int, rng: random.Random) -> List[int]:
    """Random descending chain of masks."""
    values = [rng.randrange(universe.full_mask + 1)]
    for _ in range(length - 1):
        values.append(values[-1] & rng.randrange(universe.full_mask + 1))
    return values


def chain_vector(group: FiniteGroup, universe: Universe, rng: random.Random, normal_only: bool = False) -> Masks:
    subgroups = normal_subgroups(group) if normal_only else all_subgroups(group)
    chain = random_chain(subgroups, rng)
    values = random_value_chain(universe, len(chain), rng)
    return chain_masks(group, [h.member_set for h in chain], values)


def generate_chain_int_group(group: FiniteGroup, universe: Universe, seed: int,
                             normal_only: bool = False) -> SoftIntGroup:
    """Soft int-group from a random subgroup chain and a random descending value chain.

    Args:
        group: Parameter group
        universe: Value universe
        seed: Any integer; equal seeds give equal results
        normal_only: Draw the chain from normal subgroups, giving a normal result
    """
    rng = random.Random(seed)
    masks = chain_vector(group, universe, rng, normal_only)
    return SoftIntGroup(SoftSet(group, universe, masks), validate=False)


class SweepContext:
    """Operand pools for one (group, universe) pair, built lazily."""

    def __init__(self, group: FiniteGroup, universe: Universe, budget: Optional[int] = None):
        self.group = group
        self.universe = universe
        self.budget = CONFIG.ENUMERATION_BUDGET if budget is None else budget
        self._views = {}

    @cached_property
    def subgroups(self) -> Tuple[Subgroup, ...]:
        return tuple(all_subgroups(self.group))

    @cached_property
    def normal_subgroups(self) -> Tuple[Subgroup, ...]:
        return tuple(normal_subgroups(self.group))

    def subgroup_view(self, members) -> Tuple[FiniteGroup, Tuple[int, ...]]:
        """A subgroup as its own group plus embedding, cached by members."""
        key = tuple(sorted(members))
        if key not in self._views:
            self._views[key] = Subgroup(self.group, key).as_group()
        return self._views[key]

    @property
    def soft_count(self) -> int:
        return soft_set_count(self.group, self.universe)

    @property
    def enumerable(self) -> bool:
        return self.soft_count <= self.budget

    def soft_pool(self) -> Iterator[Masks]:
        return soft_vectors(self.group, self.universe, self.budget)

    @cached_property
    def int_pool(self) -> Tuple[Masks, ...]:
        pool = tuple(int_group_vectors(self.group, self.universe, self.budget))
        logger.debug("%d int-groups over %r with |U|=%d", len(pool), self.group, self.universe.size)
        return pool

    @cached_property
    def normal_pool(self) -> Tuple[Masks, ...]:
        return tuple(m for m in self.int_pool if is_normal_masks(self.group, m))

    @cached_property
    def point_pool(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((w, a) for w in self.group.elements for a in range(self.universe.full_mask + 1))

    def random_soft(self, rng: random.Random) -> Masks:
        top = self.universe.full_mask + 1
        return tuple(rng.randrange(top) for _ in self.group.elements)

    def random_int(self, rng: random.Random, normal_only: bool = False) -> Masks:
        """Chain int-group, intersected with a second one half of the time."""
        masks = chain_vector(self.group, self.universe, rng, normal_only)
        if rng.random() < 0.5:
            other = chain_vector(self.group, self.universe, rng, normal_only)
            masks = tuple(a & b for a, b in zip(masks, other))
        return masks

    def random_point(self, rng: random.Random) -> Tuple[int, int]:
        return rng.randrange(self.group.order), rng.randrange(self.universe.full_mask + 1)

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.group.order)
