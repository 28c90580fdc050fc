"""
Finite groups as explicit Cayley tables.
Subgroups, normality, quotients and homomorphisms that the soft calculus sits on.
"""

import itertools
import logging
import math
from functools import cached_property, reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation

from .config import CONFIG
from .errors import (
    AxiomViolation, BoundExceeded, NotAHomomorphism, NotASubgroup, NotNormal, ParseError,
)

logger = logging.getLogger(__name__)


def cayley_spec(table: Sequence[Sequence[int]]) -> str:
    """Inline spec string that rebuilds a group from its table."""
    return "cayley:" + "/".join(" ".join(str(int(v)) for v in row) for row in table)


class FiniteGroup:
    """A finite group given by its Cayley table over indices 0..n-1.

    ``table[i][j]`` is the index of ``x_i * x_j`` ("i then j"). Identity and
    inverses are derived from the table; all group axioms are checked here.
    """

    def __init__(self, table, names: Optional[Sequence[str]] = None, spec: Optional[str] = None):
        """Validate a Cayley table and derive identity and inverses.

        Args:
            table: Square matrix of element indices
            names: Optional display names, one per element
            spec: Optional spec string used to rebuild the group

        Raises:
            AxiomViolation: If closure, associativity, identity or inverses fail
        """
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise AxiomViolation("square table", arr.shape)
        n = arr.shape[0]

        bad = np.argwhere((arr < 0) | (arr >= n))
        if bad.size:
            raise AxiomViolation("closure", bad[0])

        # left[a, b, c] = (ab)c and right[a, b, c] = a(bc)
        left = arr[arr]
        right = arr[:, arr]
        bad = np.argwhere(left != right)
        if bad.size:
            raise AxiomViolation("associativity", bad[0])

        idx = np.arange(n)
        candidates = np.flatnonzero((arr == idx).all(axis=1) & (arr.T == idx).all(axis=1))
        if not candidates.size:
            raise AxiomViolation("identity", ())
        identity = int(candidates[0])

        hits = arr == identity
        two_sided = hits & hits.T
        has_inverse = two_sided.any(axis=1)
        if not has_inverse.all():
            raise AxiomViolation("inverses", (int(np.flatnonzero(~has_inverse)[0]),))

        if names is None:
            names = [str(i) for i in range(n)]
        if len(names) != n:
            raise ValueError(f"expected {n} names, got {len(names)}")

        arr.flags.writeable = False
        self._table = arr
        self.names: Tuple[str, ...] = tuple(str(name) for name in names)
        self.spec = spec or cayley_spec(arr.tolist())
        self.identity = identity
        self.inverses: Tuple[int, ...] = tuple(int(i) for i in two_sided.argmax(axis=1))
        self.mul: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in arr.tolist())
        self._memo: Dict[str, object] = {}

    @property
    def order(self) -> int:
        """Number of elements."""
        return len(self.mul)

    @property
    def table(self) -> np.ndarray:
        """Read-only Cayley table."""
        return self._table

    @property
    def elements(self) -> range:
        """Element indices in canonical order."""
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec!r}, order={self.order})"

    def op(self, a: int, b: int) -> int:
        """Product a*b."""
        return self.mul[a][b]

    def inv(self, a: int) -> int:
        """Inverse of a."""
        return self.inverses[a]

    def name(self, a: int) -> str:
        """Display name of element a."""
        return self.names[a]

    def index_of(self, name: str) -> int:
        """Element index for a display name.

        Raises:
            KeyError: If no element carries the name
        """
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def power(self, a: int, k: int) -> int:
        """a raised to the integer power k."""
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.identity
        for _ in range(k):
            result = self.mul[result][a]
        return result

    def element_order(self, a: int) -> int:
        """Smallest k >= 1 with a^k = e."""
        k, x = 1, a
        while x != self.identity:
            x = self.mul[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        """Check if the table is symmetric."""
        return bool(np.array_equal(self._table, self._table.T))

    def same_as(self, other: 'FiniteGroup') -> bool:
        """Check if two groups share element order and table."""
        return other is self or (
            isinstance(other, FiniteGroup)
            and other.order == self.order
            and bool(np.array_equal(other.table, self._table))
        )

    @cached_property
    def conjugation_table(self) -> Tuple[Tuple[int, ...], ...]:
        """conj[u][x] = u x u^-1."""
        inv = np.array(self.inverses)
        conj = self._table[self._table, inv[:, None]]
        return tuple(tuple(row) for row in conj.tolist())

    @cached_property
    def left_division_table(self) -> Tuple[Tuple[int, ...], ...]:
        """ldiv[u][x] = u^-1 x."""
        inv = np.array(self.inverses)
        return tuple(tuple(row) for row in self._table[inv].tolist())

    @cached_property
    def right_division_table(self) -> Tuple[Tuple[int, ...], ...]:
        """rdiv[u][x] = x u^-1."""
        inv = np.array(self.inverses)
        return tuple(tuple(row) for row in self._table[:, inv].T.tolist())

    def closure(self, elements: Iterable[int]) -> FrozenSet[int]:
        """Smallest subgroup (as an element set) containing the elements."""
        members = {self.identity}
        frontier = list(set(elements) - members)
        members.update(frontier)
        generators = list(members)
        while frontier:
            fresh = []
            for x in frontier:
                for g in generators:
                    y = self.mul[x][g]
                    if y not in members:
                        members.add(y)
                        fresh.append(y)
            frontier = fresh
        return frozenset(members)

    def is_closed(self, elements: Iterable[int]) -> bool:
        """Check if a nonempty element set is closed under the product."""
        members = set(elements)
        if not members:
            return False
        return all(self.mul[a][b] in members for a in members for b in members)


class Subgroup:
    """A subgroup of a FiniteGroup, stored as sorted member indices."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        """Validate membership as a subgroup.

        Args:
            parent: Ambient group
            members: Element indices of the subgroup

        Raises:
            NotASubgroup: If identity, closure or inverses fail
        """
        member_set = frozenset(int(m) for m in members)
        if any(m < 0 or m >= parent.order for m in member_set):
            raise NotASubgroup(f"indices out of range for order {parent.order}")
        if parent.identity not in member_set:
            raise NotASubgroup("identity missing")
        for a in sorted(member_set):
            if parent.inv(a) not in member_set:
                raise NotASubgroup(f"inverse of {parent.name(a)} missing")
            for b in sorted(member_set):
                if parent.op(a, b) not in member_set:
                    raise NotASubgroup(f"{parent.name(a)}*{parent.name(b)} not a member")
        self.parent = parent
        self.members: Tuple[int, ...] = tuple(sorted(member_set))
        self.member_set = member_set

    @classmethod
    def whole(cls, group: FiniteGroup) -> 'Subgroup':
        """The group itself as a subgroup."""
        return cls(group, group.elements)

    @classmethod
    def trivial(cls, group: FiniteGroup) -> 'Subgroup':
        """The identity subgroup."""
        return cls(group, (group.identity,))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        """|G : H|."""
        return self.parent.order // self.order

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent.same_as(self.parent)
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((self.parent.order, self.members))

    def __repr__(self) -> str:
        return "{" + ",".join(self.parent.name(m) for m in self.members) + "}"

    def issubset(self, other: 'Subgroup') -> bool:
        return self.member_set <= other.member_set

    def left_coset(self, a: int) -> FrozenSet[int]:
        """aH as an element set."""
        return frozenset(self.parent.op(a, h) for h in self.members)

    def right_coset(self, a: int) -> FrozenSet[int]:
        """Ha as an element set."""
        return frozenset(self.parent.op(h, a) for h in self.members)

    def is_normal(self) -> bool:
        return is_normal_subgroup(self.parent, self)

    def as_group(self) -> Tuple[FiniteGroup, Tuple[int, ...]]:
        """The subgroup as its own FiniteGroup plus the embedding into the parent.

        Returns:
            Tuple of (group on indices 0..k-1, members in sorted order)
        """
        position = {m: i for i, m in enumerate(self.members)}
        table = [[position[self.parent.op(a, b)] for b in self.members] for a in self.members]
        names = [self.parent.name(m) for m in self.members]
        return FiniteGroup(table, names), self.members


class QuotientGroup(FiniteGroup):
    """G/N on the left cosets of a normal subgroup, ordered by smallest member."""

    def __init__(self, parent: FiniteGroup, normal_subgroup: Subgroup):
        if not is_normal_subgroup(parent, normal_subgroup):
            raise NotNormal(f"{normal_subgroup!r} is not normal")

        coset_of = [-1] * parent.order
        cosets: List[Tuple[int, ...]] = []
        for x in parent.elements:
            if coset_of[x] >= 0:
                continue
            coset = normal_subgroup.left_coset(x)
            for y in coset:
                coset_of[y] = len(cosets)
            cosets.append(tuple(sorted(coset)))

        table = [[coset_of[parent.op(a[0], b[0])] for b in cosets] for a in cosets]
        for i, a in enumerate(cosets):
            for j, b in enumerate(cosets):
                for x in a:
                    for y in b:
                        if coset_of[parent.op(x, y)] != table[i][j]:
                            raise AxiomViolation("well-defined", (x, y))

        names = [parent.name(c[0]) + "N" for c in cosets]
        super().__init__(table, names)
        self.parent = parent
        self.normal_subgroup = normal_subgroup
        self.cosets: Tuple[Tuple[int, ...], ...] = tuple(cosets)
        self.coset_of: Tuple[int, ...] = tuple(coset_of)
        logger.debug("built quotient of order %d from %r", len(cosets), parent)

    @property
    def projection(self) -> 'Homomorphism':
        """Canonical map G -> G/N."""
        return Homomorphism(self.parent, self, self.coset_of, spec=quotient_map_spec(self.parent, self.normal_subgroup))


class Homomorphism:
    """A product-preserving element map between finite groups, checked on construction."""

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, images: Sequence[int], spec: Optional[str] = None):
        """Validate the map on every pair of elements.

        Raises:
            ValueError: If the image array has the wrong shape
            NotAHomomorphism: If some pair is not preserved
        """
        images = tuple(int(y) for y in images)
        if len(images) != domain.order or any(y < 0 or y >= codomain.order for y in images):
            raise ValueError("image array must give one codomain index per domain element")
        for x in domain.elements:
            for y in domain.elements:
                if images[domain.op(x, y)] != codomain.op(images[x], images[y]):
                    raise NotAHomomorphism(x, y)
        self.domain = domain
        self.codomain = codomain
        self.images = images
        self.spec = spec

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __repr__(self) -> str:
        return f"Homomorphism({self.spec or self.images})"

    def fiber(self, y: int) -> Tuple[int, ...]:
        """Domain elements mapped to y."""
        return tuple(x for x in self.domain.elements if self.images[x] == y)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.codomain.order

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.domain.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, set(self.images))

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, self.fiber(self.codomain.identity))

    @classmethod
    def identity(cls, group: FiniteGroup) -> 'Homomorphism':
        return cls(group, group, group.elements, spec=f"identity:{group.spec}")

    @classmethod
    def inclusion(cls, subgroup: Subgroup) -> 'Homomorphism':
        """Embedding of a subgroup (as its own group) into the parent."""
        group, embedding = subgroup.as_group()
        members = ",".join(str(m) for m in subgroup.members)
        return cls(group, subgroup.parent, embedding, spec=f"inclusion:{subgroup.parent.spec}:{members}")


def quotient_map_spec(group: FiniteGroup, normal_subgroup: Subgroup) -> str:
    return f"quotient:{group.spec}:" + ",".join(str(m) for m in normal_subgroup.members)


# Catalog constructors

def cyclic(n: int) -> FiniteGroup:
    """Z_n with elements 0..n-1 read as exponents of a generator."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, [str(i) for i in range(n)], spec=f"cyclic:{n}")


def dihedral(n: int) -> FiniteGroup:
    """D_n of order 2n on e, u, ..., u^{n-1}, v, vu, ..., vu^{n-1}.

    Relations u^n = v^2 = e and uv = vu^{-1}.
    """
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")

    def index(s: int, k: int) -> int:
        return s * n + k % n

    def name(s: int, k: int) -> str:
        rot = "" if k == 0 else ("u" if k == 1 else f"u{k}")
        if s == 0:
            return rot or "e"
        return "v" + rot

    elements = [(s, k) for s in range(2) for k in range(n)]
    table = []
    for s1, k1 in elements:
        row = []
        for s2, k2 in elements:
            # v^s1 u^k1 v^s2 u^k2 with u^k v = v u^-k
            if s2 == 0:
                row.append(index(s1, k1 + k2))
            else:
                row.append(index((s1 + 1) % 2, k2 - k1))
        table.append(row)
    return FiniteGroup(table, [name(s, k) for s, k in elements], spec=f"dihedral:{n}")


def klein() -> FiniteGroup:
    """Klein four-group on e, x, y, xy."""
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return FiniteGroup(table, ["e", "x", "y", "xy"], spec="klein")


# unit products: (sign, unit) with units 1, i, j, k as 0..3
_QUATERNION_UNITS = {
    (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion() -> FiniteGroup:
    """Q_8 on 1, -1, i, -i, j, -j, k, -k."""
    def unit_product(a: int, b: int) -> Tuple[int, int]:
        if a == 0:
            return 1, b
        if b == 0:
            return 1, a
        return _QUATERNION_UNITS[(a, b)]

    elements = [(unit, sign) for unit in range(4) for sign in (1, -1)]
    position = {e: i for i, e in enumerate(elements)}
    table = []
    for u1, s1 in elements:
        row = []
        for u2, s2 in elements:
            sign, unit = unit_product(u1, u2)
            row.append(position[(unit, sign * s1 * s2)])
        table.append(row)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(table, names, spec="quaternion")


def symmetric(n: int) -> FiniteGroup:
    """S_n on permutations in lexicographic rank order; p*q applies p first."""
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    perms = [Permutation.unrank_lex(n, r) for r in range(math.factorial(n))]
    position = {tuple(p.array_form): i for i, p in enumerate(perms)}
    table = [[position[tuple((p * q).array_form)] for q in perms] for p in perms]
    names = ["".join(str(v) for v in p.array_form) for p in perms]
    return FiniteGroup(table, names, spec=f"symmetric:{n}")


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """G x H on pairs (g, h) with index g*|H| + h."""
    m = second.order
    pairs = list(itertools.product(first.elements, second.elements))
    table = [
        [first.op(g1, g2) * m + second.op(h1, h2) for g2, h2 in pairs]
        for g1, h1 in pairs
    ]
    names = [f"({first.name(g)},{second.name(h)})" for g, h in pairs]
    return FiniteGroup(table, names, spec=f"{first.spec} x {second.spec}")


def from_cayley_table(matrix: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                      spec: Optional[str] = None) -> FiniteGroup:
    """Group from an explicit Cayley table."""
    return FiniteGroup(matrix, names, spec)


def _parse_size(spec: str, text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ParseError(f"bad group size in {spec!r}") from None
    if n < 1:
        raise ParseError(f"group size must be >= 1 in {spec!r}")
    return n


def make_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string.

    Args:
        spec: One of ``cyclic:n``, ``dihedral:n``, ``klein``, ``quaternion``,
            ``symmetric:n``, ``A x B``, ``table:PATH`` or ``cayley:ROWS``

    Returns:
        Validated FiniteGroup

    Raises:
        ParseError: If the spec is not recognised
        AxiomViolation: If an explicit table is not a group
    """
    spec = spec.strip()
    if " x " in spec:
        return reduce(direct_product, (make_group(part) for part in spec.split(" x ")))
    family, _, arg = spec.partition(":")
    if family == "cyclic":
        return cyclic(_parse_size(spec, arg))
    if family == "dihedral":
        return dihedral(_parse_size(spec, arg))
    if family == "symmetric":
        return symmetric(_parse_size(spec, arg))
    if family == "klein" and not arg:
        return klein()
    if family == "quaternion" and not arg:
        return quaternion()
    if family == "table":
        from .formats import read_group_file
        return read_group_file(arg)
    if family == "cayley":
        try:
            rows = [[int(v) for v in row.split()] for row in arg.split("/")]
        except ValueError:
            raise ParseError(f"bad inline table in {spec!r}") from None
        return FiniteGroup(rows, spec=spec)
    raise ParseError(f"unknown group spec {spec!r}")


# Elementwise algebra

def commutator(group: FiniteGroup, x: int, y: int) -> int:
    """[x, y] = x^-1 y^-1 x y."""
    return group.op(group.op(group.inv(x), group.inv(y)), group.op(x, y))


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Subgroup generated by a set of elements."""
    return Subgroup(group, group.closure(generators))


def commutator_subgroup(group: FiniteGroup) -> Subgroup:
    """G' generated by all commutators."""
    return generated_subgroup(group, {commutator(group, x, y) for x in group.elements for y in group.elements})


def bracket_subgroup(group: FiniteGroup, first: Iterable[int], second: Iterable[int]) -> Subgroup:
    """[H, K] generated by the commutators [h, k]."""
    second = list(second)
    return generated_subgroup(group, {commutator(group, h, k) for h in first for k in second})


def is_normal_by_bracket(group: FiniteGroup, subgroup: Subgroup) -> bool:
    """H is normal iff [H, G] <= H."""
    return bracket_subgroup(group, subgroup, group.elements).issubset(subgroup)


def _as_subgroup(group: FiniteGroup, subgroup) -> Subgroup:
    if isinstance(subgroup, Subgroup):
        if not subgroup.parent.same_as(group):
            raise NotASubgroup("subgroup belongs to a different group")
        return subgroup
    return Subgroup(group, subgroup)


def is_normal_subgroup(group: FiniteGroup, subgroup) -> bool:
    """Check x h x^-1 in H for all x in G, h in H.

    Raises:
        NotASubgroup: If the member set is not a subgroup
    """
    subgroup = _as_subgroup(group, subgroup)
    conj = group.conjugation_table
    return all(conj[x][h] in subgroup.member_set for x in group.elements for h in subgroup.members)


def quotient_by(group: FiniteGroup, normal_subgroup) -> QuotientGroup:
    """G/N for a normal subgroup N.

    Raises:
        NotNormal: If N is not normal in G
    """
    return QuotientGroup(group, _as_subgroup(group, normal_subgroup))


def all_subgroups(group: FiniteGroup, bound: Optional[int] = None, method: Optional[str] = None) -> List[Subgroup]:
    """Every subgroup, sorted by size then membership.

    Args:
        group: Group to scan
        bound: Largest order accepted (default CONFIG.SUBGROUP_BOUND)
        method: ``"subsets"`` (scan all subsets) or ``"closure"`` (joins of
            cyclic subgroups); chosen from CONFIG.EXHAUSTIVE_SUBSET_BOUND if None

    Raises:
        BoundExceeded: If the group is above the bound
    """
    bound = CONFIG.SUBGROUP_BOUND if bound is None else bound
    n = group.order
    if n > bound:
        raise BoundExceeded(f"order {n} above subgroup bound {bound}")
    if method is None:
        method = "subsets" if n <= CONFIG.EXHAUSTIVE_SUBSET_BOUND else "closure"

    cache_key = f"subgroups:{method}"
    if cache_key in group._memo:
        return list(group._memo[cache_key])

    logger.debug("enumerating subgroups of %r by %s", group, method)
    if method == "subsets":
        others = [x for x in group.elements if x != group.identity]
        found = set()
        for size in range(len(others) + 1):
            for combo in itertools.combinations(others, size):
                members = (group.identity,) + combo
                if group.is_closed(members):
                    found.add(frozenset(members))
    elif method == "closure":
        cyclic_subgroups = {group.closure([g]) for g in group.elements}
        found = set(cyclic_subgroups)
        frontier = list(found)
        while frontier:
            fresh = []
            for h in frontier:
                for c in cyclic_subgroups:
                    if c <= h:
                        continue
                    joined = group.closure(h | c)
                    if joined not in found:
                        found.add(joined)
                        fresh.append(joined)
            frontier = fresh
    else:
        raise ValueError(f"unknown method {method!r}")

    result = sorted((Subgroup(group, members) for members in found), key=lambda h: (h.order, h.members))
    group._memo[cache_key] = tuple(result)
    return result


def normal_subgroups(group: FiniteGroup, bound: Optional[int] = None) -> List[Subgroup]:
    """Subgroups that are normal, in all_subgroups order."""
    return [h for h in all_subgroups(group, bound) if is_normal_subgroup(group, h)]


def is_dedekind(group: FiniteGroup, bound: Optional[int] = None) -> bool:
    """Check if every subgroup is normal.

    Raises:
        BoundExceeded: If the group is above the subgroup bound
    """
    return all(is_normal_subgroup(group, h) for h in all_subgroups(group, bound))


# Homomorphism catalog

def reduction_map(n: int, m: int) -> Homomorphism:
    """Z_n -> Z_m, x -> x mod m, for m dividing n."""
    if m < 1 or n % m:
        raise ValueError(f"{m} does not divide {n}")
    return Homomorphism(cyclic(n), cyclic(m), [x % m for x in range(n)], spec=f"reduction:{n}:{m}")


def sign_map(n: int) -> Homomorphism:
    """D_n -> Z_2 sending rotations to 0 and reflections to 1."""
    return Homomorphism(dihedral(n), cyclic(2), [x // n for x in range(2 * n)], spec=f"sign:{n}")


def _parse_members(spec: str, text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError(f"bad member list in {spec!r}") from None


def make_homomorphism(spec: str) -> Homomorphism:
    """Build a homomorphism from a spec string.

    Args:
        spec: One of ``reduction:N:M``, ``sign:N``, ``identity:GROUP``,
            ``quotient:GROUP:i,j,...``, ``inclusion:GROUP:i,j,...``

    Raises:
        ParseError: If the spec is not recognised
    """
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    if kind == "reduction":
        n, _, m = rest.partition(":")
        try:
            return reduction_map(int(n), int(m))
        except ValueError as exc:
            raise ParseError(f"bad reduction spec {spec!r}: {exc}") from None
    if kind == "sign":
        return sign_map(_parse_size(spec, rest))
    if kind == "identity":
        return Homomorphism.identity(make_group(rest))
    if kind in ("quotient", "inclusion"):
        group_spec, _, members = rest.rpartition(":")
        if not group_spec:
            raise ParseError(f"missing member list in {spec!r}")
        group = make_group(group_spec)
        subgroup = Subgroup(group, _parse_members(spec, members))
        if kind == "inclusion":
            return Homomorphism.inclusion(subgroup)
        return quotient_by(group, subgroup).projection
    raise ParseError(f"unknown homomorphism spec {spec!r}")


def _catalog_family(spec: Optional[str]) -> Tuple[Optional[str], int]:
    """(family, n) for a single ``cyclic:n`` or ``dihedral:n`` spec, else (None, 0)."""
    if not spec or " x " in spec:
        return None, 0
    family, _, arg = spec.partition(":")
    if family not in ("cyclic", "dihedral") or not arg.isdigit():
        return None, 0
    return family, int(arg)


def catalog_homomorphisms(group: FiniteGroup, bound: Optional[int] = None) -> List[Homomorphism]:
    """Homomorphisms the theorem suite transports along for a group.

    Quotient maps by every nontrivial normal subgroup, inclusions of every
    proper nontrivial subgroup, plus the reduction and sign maps when the
    group is a catalog cyclic or dihedral group.
    """
    homs = []
    subgroups = all_subgroups(group, bound)
    for h in subgroups:
        if h.order > 1 and is_normal_subgroup(group, h):
            homs.append(quotient_by(group, h).projection)
    for h in subgroups:
        if 1 < h.order < group.order:
            homs.append(Homomorphism.inclusion(h))
    family, n = _catalog_family(group.spec)
    if family == "cyclic" and n % 2 == 0 and n > 2:
        homs.append(reduction_map(n, 2))
    if family == "dihedral":
        homs.append(sign_map(n))
    return homs
