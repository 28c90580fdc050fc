"""
One brute-force checker per result of the soft int-group theory.

A checker receives a CheckContext plus its operands (raw value masks, soft
points or elements) and returns None when the statement holds for them, or a
message describing the failure. PreconditionFailed means the operands fall
outside the statement's hypotheses.
"""

import hashlib
import itertools
import json
import logging
import random
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .config import CONFIG, NormalityCriterion, SuiteMode, Verdict
from .enumeration import SweepContext, derive_seed
from .errors import AxiomViolation, NotAHomomorphism, NotAnIntGroup, PreconditionFailed, UnknownTheorem
from .groups import (
    FiniteGroup, Homomorphism, commutator, commutator_subgroup, is_dedekind, make_group,
    make_homomorphism, quotient_by,
)
from .int_groups import (
    Masks, SoftIntGroup, alpha_levels, conjugate_masks, find_violation, inverse_masks,
    is_int_group_by_cuts, is_int_group_by_product, is_int_group_direct, is_normal_masks,
    level_structure, normality_witness_masks, normalizer_members, product_masks,
)
from .quotients import SoftQuotientGroup, quotient_soft
from .soft_sets import SoftSet, Universe, cut_of_masks, masks_subset
from .transport import image_masks_along, preimage_masks_along

logger = logging.getLogger(__name__)


class TheoremId(Enum):
    """Checked results, in canonical report order."""
    B20 = "B20"
    B100 = "B100"
    B210 = "B210"
    B220 = "B220"
    B300 = "B300"
    B367 = "B367"
    B380 = "B380"
    B400 = "B400"
    B420 = "B420"
    B430 = "B430"
    B480 = "B480"
    B490 = "B490"
    C15 = "C15"
    C20 = "C20"
    C30 = "C30"
    C30_GEN = "C30gen"
    C35 = "C35"
    C90_FWD = "C90fwd"
    C90_CONV = "C90conv"
    C95 = "C95"
    C100 = "C100"
    C110 = "C110"
    C190 = "C190"
    C220 = "C220"
    C221 = "C221"
    C221_SUPP = "C221supp"
    C226 = "C226"
    C227 = "C227"
    C228 = "C228"
    C229 = "C229"
    C240 = "C240"
    C246 = "C246"
    C270 = "C270"
    C2650 = "C2650"
    C290 = "C290"
    C300 = "C300"
    C345 = "C345"
    C355 = "C355"
    C360 = "C360"
    C370 = "C370"
    C380 = "C380"
    C383 = "C383"
    C385 = "C385"
    D376 = "D376"
    C420 = "C420"
    C430 = "C430"
    B163 = "B163"
    D593 = "D593"
    D593_IMG = "D593img"

    @classmethod
    def parse(cls, text: str) -> 'TheoremId':
        """Look up an id by its value, case-insensitively.

        Raises:
            UnknownTheorem: If no checker carries the id
        """
        for tid in cls:
            if tid.value.lower() == text.strip().lower():
                return tid
        raise UnknownTheorem(f"no checker for {text!r}")

    def position(self) -> int:
        return list(TheoremId).index(self)


class OperandKind(Enum):
    """What a checker quantifies over."""
    SOFT = "soft"
    INT = "int"
    NORMAL = "normal"
    POINT = "point"
    ELEMENT = "element"
    DOMAIN_NORMAL = "domain-normal"
    CODOMAIN_SOFT = "codomain-soft"
    CODOMAIN_NORMAL = "codomain-normal"

    def on_codomain(self) -> bool:
        return self in (OperandKind.CODOMAIN_SOFT, OperandKind.CODOMAIN_NORMAL)


@dataclass(frozen=True)
class Theorem:
    id: TheoremId
    statement: str
    operands: Tuple[OperandKind, ...]
    check: Callable
    needs_hom: bool = False
    informational: bool = False


REGISTRY: Dict[TheoremId, Theorem] = {}


def _register(tid: TheoremId, statement: str, *operands: OperandKind,
              hom: bool = False, informational: bool = False):
    def wrap(check):
        REGISTRY[tid] = Theorem(tid, statement, tuple(operands), check, hom, informational)
        return check
    return wrap


def get_theorem(tid) -> Theorem:
    """Raises UnknownTheorem for ids without a checker."""
    if isinstance(tid, str):
        tid = TheoremId.parse(tid)
    try:
        return REGISTRY[tid]
    except KeyError:
        raise UnknownTheorem(f"no checker for {tid.value}") from None


def _freeze(value):
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value):
    if isinstance(value, (list, tuple)):
        return [_thaw(v) for v in value]
    return value


@dataclass(frozen=True)
class Instance:
    """Where a theorem is checked: a group and universe size, optionally a
    homomorphism, and either fixed operands or open (quantified) ones."""
    group: str
    universe: int
    hom: Optional[str] = None
    operands: Optional[Tuple] = None
    mode: SuiteMode = SuiteMode.EXHAUSTIVE
    samples: Optional[int] = None
    seed: Optional[int] = None

    def to_record(self) -> dict:
        return {
            "group": self.group,
            "universe": self.universe,
            "hom": self.hom,
            "operands": None if self.operands is None else _thaw(self.operands),
            "mode": self.mode.value,
            "samples": self.samples,
            "seed": self.seed,
        }

    @classmethod
    def from_record(cls, record: dict) -> 'Instance':
        operands = record.get("operands")
        return cls(
            group=record["group"],
            universe=int(record["universe"]),
            hom=record.get("hom"),
            operands=None if operands is None else _freeze(operands),
            mode=SuiteMode(record.get("mode", SuiteMode.EXHAUSTIVE.value)),
            samples=record.get("samples"),
            seed=record.get("seed"),
        )

    def serialize(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def deserialize(cls, text: str) -> 'Instance':
        return cls.from_record(json.loads(text))

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode("utf-8")).hexdigest()[:16]

    def label(self) -> str:
        text = f"{self.group} |U|={self.universe}"
        return f"{text} via {self.hom}" if self.hom else text


@dataclass(frozen=True)
class Witness:
    """Operands on which a statement failed, plus what went wrong."""
    operands: Tuple
    message: str

    def to_record(self) -> dict:
        return {"operands": _thaw(self.operands), "message": self.message}


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    instance: Instance
    verdict: Verdict
    mode: SuiteMode
    checked: int
    witness: Optional[Witness] = None
    detail: str = ""
    micros: Optional[int] = None

    def to_record(self) -> dict:
        return {
            "id": self.theorem.value,
            "instance": self.instance.to_record(),
            "digest": self.instance.digest(),
            "verdict": self.verdict.value,
            "mode": self.mode.value,
            "checked": self.checked,
            "witness": None if self.witness is None else self.witness.to_record(),
            "detail": self.detail,
            "micros": self.micros,
        }


@lru_cache(maxsize=32)
def sweep_for(group_spec: str, universe_size: int) -> SweepContext:
    return SweepContext(make_group(group_spec), Universe.of_size(universe_size))


@lru_cache(maxsize=64)
def hom_for(spec: str) -> Homomorphism:
    return make_homomorphism(spec)


@dataclass
class CheckContext:
    """Everything a checker may consult besides its operands."""
    sweep: SweepContext
    rng: random.Random
    samples: int
    hom: Optional[Homomorphism] = None
    codomain_sweep: Optional[SweepContext] = None
    notes: List[str] = field(default_factory=list)

    @property
    def group(self) -> FiniteGroup:
        return self.sweep.group

    @property
    def universe(self) -> Universe:
        return self.sweep.universe

    def name(self, x: int) -> str:
        return self.group.name(x)

    def pair(self, x: int, y: int) -> str:
        return f"({self.name(x)},{self.name(y)})"

    def wrap(self, masks: Masks, group: Optional[FiniteGroup] = None) -> SoftIntGroup:
        return SoftIntGroup(SoftSet(group or self.group, self.universe, masks), validate=False)


# Helpers on raw masks

def _eset(group: FiniteGroup, f: Masks) -> frozenset:
    top = f[group.identity]
    return frozenset(x for x in group.elements if f[x] == top)


def _support(f: Masks) -> frozenset:
    return frozenset(x for x, m in enumerate(f) if m)


def _conj_closed(group: FiniteGroup, members) -> bool:
    conj = group.conjugation_table
    return all(conj[u][h] in members for u in group.elements for h in members)


def _point_masks(group: FiniteGroup, w: int, alpha: int) -> Masks:
    return tuple(alpha if x == w else 0 for x in group.elements)


def _left_coset_masks(group: FiniteGroup, f: Masks, a: int) -> Masks:
    row = group.left_division_table[a]
    return tuple(f[row[x]] for x in group.elements)


def _right_coset_masks(group: FiniteGroup, f: Masks, a: int) -> Masks:
    row = group.right_division_table[a]
    return tuple(f[row[x]] for x in group.elements)


def _first_difference(ctx: CheckContext, left: Masks, right: Masks, what: str) -> Optional[str]:
    for x, (a, b) in enumerate(zip(left, right)):
        if a != b:
            return f"{what} differ at {ctx.name(x)}: {ctx.universe.render(a)} vs {ctx.universe.render(b)}"
    return None


def _violation_text(ctx: CheckContext, masks: Masks, group: Optional[FiniteGroup] = None) -> Optional[str]:
    group = group or ctx.group
    violation = find_violation(group, masks)
    return None if violation is None else violation.describe(group)


def _normal_int_on(group: FiniteGroup, masks: Masks) -> Optional[str]:
    violation = find_violation(group, masks)
    if violation is not None:
        return violation.describe(group)
    return None if is_normal_masks(group, masks) else "not normal"


# Soft set algebra and the int-group conditions

@_register(TheoremId.B20, "f(e) contains every value of a soft int-group", OperandKind.INT)
def _identity_dominates(ctx, f):
    top = f[ctx.group.identity]
    for x in ctx.group.elements:
        if f[x] & ~top:
            return f"f({ctx.name(x)}) not inside f(e)"
    return None


@_register(TheoremId.B100, "the e-set of a soft int-group is a subgroup", OperandKind.INT)
def _eset_is_subgroup(ctx, f):
    eset = _eset(ctx.group, f)
    if not ctx.group.is_closed(eset):
        return "e-set " + "{" + ",".join(ctx.name(x) for x in sorted(eset)) + "} is not closed"
    return None


@_register(TheoremId.B210, "restrictions to subgroups are soft int-groups", OperandKind.INT)
def _restriction(ctx, f):
    for h in ctx.sweep.subgroups:
        group, embedding = ctx.sweep.subgroup_view(h.members)
        problem = _violation_text(ctx, tuple(f[m] for m in embedding), group)
        if problem:
            return f"restriction to {h!r}: {problem}"
    return None


@_register(TheoremId.B220, "intersections of soft int-groups are soft int-groups", OperandKind.INT, OperandKind.INT)
def _intersection(ctx, f, g):
    return _violation_text(ctx, tuple(a & b for a, b in zip(f, g)))


@_register(TheoremId.B300, "larger levels give smaller cuts", OperandKind.SOFT)
def _cut_monotone(ctx, f):
    levels = [0] + alpha_levels(ctx.universe, f)
    cuts = {a: cut_of_masks(f, a) for a in levels}
    for a in levels:
        for b in levels:
            if a & ~b == 0 and not cuts[b] <= cuts[a]:
                r = ctx.universe.render
                return f"cut at {r(b)} not inside cut at {r(a)}"
    return None


@_register(TheoremId.B367, "int-group exactly when every nonempty level cut is a subgroup", OperandKind.SOFT)
def _cut_route(ctx, f):
    direct = is_int_group_direct(ctx.group, f)
    cuts = is_int_group_by_cuts(ctx.group, ctx.universe, f)
    if direct != cuts:
        return f"direct check says {direct}, cut check says {cuts}"
    return None


@_register(TheoremId.B380, "the product of two soft points is the soft point of the product", OperandKind.POINT, OperandKind.POINT)
def _point_product(ctx, p, q):
    (w, a), (z, b) = p, q
    g = ctx.group
    got = product_masks(g, _point_masks(g, w, a), _point_masks(g, z, b))
    return _first_difference(ctx, got, _point_masks(g, g.op(w, z), a & b), "point product and expected point")


@_register(TheoremId.B400, "the soft product is associative", OperandKind.SOFT, OperandKind.SOFT, OperandKind.SOFT)
def _associative(ctx, f, g, h):
    group = ctx.group
    left = product_masks(group, product_masks(group, f, g), h)
    right = product_masks(group, f, product_masks(group, g, h))
    return _first_difference(ctx, left, right, "(f*g)*h and f*(g*h)")


@_register(TheoremId.B420, "a soft point carrying f(G) translates f on the left", OperandKind.ELEMENT, OperandKind.SOFT)
def _point_translates(ctx, u, f):
    group = ctx.group
    alpha = 0
    for m in f:
        alpha |= m
    got = product_masks(group, _point_masks(group, u, alpha), f)
    return _first_difference(ctx, got, _left_coset_masks(group, f, u), "point product and translate")


@_register(TheoremId.B430, "a soft int-group equals its soft inverse", OperandKind.INT)
def _self_inverse(ctx, f):
    return _first_difference(ctx, inverse_masks(ctx.group, f), tuple(f), "f^-1 and f")


@_register(TheoremId.B480, "int-group exactly when f*f is inside f and f^-1 = f", OperandKind.SOFT)
def _product_route(ctx, f):
    direct = is_int_group_direct(ctx.group, f)
    product = is_int_group_by_product(ctx.group, f)
    if direct != product:
        return f"direct check says {direct}, product check says {product}"
    return None


@_register(TheoremId.B490, "f*g is an int-group exactly when f*g = g*f", OperandKind.INT, OperandKind.INT)
def _product_commutes(ctx, f, g):
    fg = product_masks(ctx.group, f, g)
    gf = product_masks(ctx.group, g, f)
    is_int = find_violation(ctx.group, fg) is None
    if is_int != (fg == gf):
        return f"f*g int-group is {is_int} but f*g = g*f is {fg == gf}"
    return None


# Normality

_POINTWISE = (
    NormalityCriterion.ABELIAN, NormalityCriterion.CONJ_EQ,
    NormalityCriterion.CONJ_SUP, NormalityCriterion.CONJ_SUB,
)


def _criteria_disagree(ctx, f, criteria) -> Optional[str]:
    verdicts = {c: normality_witness_masks(ctx.group, f, c) is None for c in criteria}
    if len(set(verdicts.values())) > 1:
        return ", ".join(f"{c.value}={v}" for c, v in verdicts.items())
    return None


@_register(TheoremId.C15, "the Abelian and conjugation criteria agree", OperandKind.INT)
def _criteria_agree(ctx, f):
    return _criteria_disagree(ctx, f, _POINTWISE)


@_register(TheoremId.C20, "over an Abelian group every soft int-group is normal", OperandKind.INT)
def _abelian_normal(ctx, f):
    if not ctx.group.is_abelian():
        raise PreconditionFailed("group is not Abelian")
    witness = normality_witness_masks(ctx.group, f, NormalityCriterion.ABELIAN)
    return None if witness is None else f"f(xy) != f(yx) at {ctx.pair(*witness)}"


def _eset_soft_failure(ctx, f) -> Optional[str]:
    group = ctx.group
    whole = tuple(ctx.universe.full_mask for _ in group.elements)
    problem = _normal_int_on(group, whole)
    if problem:
        return f"whole soft set: {problem}"
    eset = _eset(group, f)
    top = f[group.identity]
    g = tuple(top if x in eset else 0 for x in group.elements)
    problem = _normal_int_on(group, g)
    return None if problem is None else f"e-set soft set: {problem}"


@_register(TheoremId.C30, "the whole soft set and the e-set carrying f(e) are normal soft int-groups", OperandKind.NORMAL)
def _eset_soft(ctx, f):
    return _eset_soft_failure(ctx, f)


@_register(TheoremId.C30_GEN, "the e-set carrying f(e) is normal for any soft int-group f", OperandKind.INT,
           informational=True)
def _eset_soft_any(ctx, f):
    return _eset_soft_failure(ctx, f)


@_register(TheoremId.C35, "intersections of normal soft int-groups are normal", OperandKind.NORMAL, OperandKind.NORMAL)
def _normal_intersection(ctx, f, g):
    meet = tuple(a & b for a, b in zip(f, g))
    problem = _violation_text(ctx, meet)
    if problem:
        return problem
    return None if is_normal_masks(ctx.group, meet) else "intersection is not normal"


def _commutator_failure(ctx, f) -> Optional[str]:
    group = ctx.group
    top = f[group.identity]
    for x in group.elements:
        for y in group.elements:
            c = commutator(group, x, y)
            if f[c] != top:
                return f"f([{ctx.name(x)},{ctx.name(y)}]) = {ctx.universe.render(f[c])} != f(e) = {ctx.universe.render(top)}"
    return None


@_register(TheoremId.C90_FWD, "f([x,y]) = f(e) everywhere implies normal", OperandKind.INT)
def _commutator_forward(ctx, f):
    if _commutator_failure(ctx, f) is not None:
        raise PreconditionFailed("commutator values differ from f(e)")
    return None if is_normal_masks(ctx.group, f) else "commutators are constant but f is not normal"


@_register(TheoremId.C90_CONV, "normal implies f([x,y]) = f(e) everywhere", OperandKind.NORMAL, informational=True)
def _commutator_converse(ctx, f):
    return _commutator_failure(ctx, f)


@_register(TheoremId.C95, "G/N is Abelian exactly when G' lies in N")
def _abelian_quotient(ctx):
    group = ctx.group
    derived = commutator_subgroup(group)
    for n in ctx.sweep.normal_subgroups:
        abelian = quotient_by(group, n).is_abelian()
        if abelian != derived.issubset(n):
            return f"G/{n!r} Abelian is {abelian} but G' <= N is {derived.issubset(n)}"
    return None


@_register(TheoremId.C100, "G/e_f is Abelian for normal f", OperandKind.NORMAL, informational=True)
def _eset_quotient_abelian(ctx, f):
    eset = _eset(ctx.group, f)
    quotient = quotient_by(ctx.group, eset)
    if not quotient.is_abelian():
        return f"G/e_f of order {quotient.order} is not Abelian"
    return None


@_register(TheoremId.C110, "normal exactly when f([x,y]) contains f(x)", OperandKind.INT)
def _commutator_criterion(ctx, f):
    return _criteria_disagree(ctx, f, (NormalityCriterion.ABELIAN, NormalityCriterion.COMMUTATOR_SUP))


@_register(TheoremId.C190, "level subgroups of a normal soft int-group are level-normal", OperandKind.NORMAL)
def _level_normal(ctx, f):
    report = level_structure(ctx.wrap(f))
    if not report.poset_level_normal:
        small, big = report.poset_witness
        return f"{small!r} is not normal in {big!r}"
    return None


@_register(TheoremId.C220, "normal exactly when every nonempty level cut is a normal subgroup", OperandKind.INT)
def _normal_cuts(ctx, f):
    group = ctx.group
    normal = is_normal_masks(group, f)
    cuts_normal = True
    for alpha in alpha_levels(ctx.universe, f):
        cut = cut_of_masks(f, alpha)
        if cut and not _conj_closed(group, cut):
            cuts_normal = False
            break
    if normal != cuts_normal:
        return f"normal is {normal} but all cuts normal is {cuts_normal}"
    return None


@_register(TheoremId.C221, "a normal soft int-group has a normal e-set and a conjugation-closed support", OperandKind.NORMAL)
def _normal_eset(ctx, f):
    group = ctx.group
    eset = _eset(group, f)
    if not (group.is_closed(eset) and _conj_closed(group, eset)):
        return "e-set is not a normal subgroup"
    if not _conj_closed(group, _support(f)):
        return "support is not closed under conjugation"
    return None


@_register(TheoremId.C221_SUPP, "the support of a normal soft int-group is a subgroup", OperandKind.NORMAL, informational=True)
def _support_subgroup(ctx, f):
    supp = _support(f)
    if supp and not ctx.group.is_closed(supp):
        return "support {" + ",".join(ctx.name(x) for x in sorted(supp)) + "} is not a subgroup"
    return None


@_register(TheoremId.C226, "every soft int-group is normal exactly when G is Dedekind")
def _dedekind(ctx):
    group = ctx.group
    if is_dedekind(group):
        if ctx.sweep.enumerable:
            pool = ctx.sweep.int_pool
        else:
            pool = [ctx.sweep.random_int(ctx.rng) for _ in range(ctx.samples)]
        ctx.notes.append(f"{len(pool)} int-groups scanned")
        for f in pool:
            if not is_normal_masks(group, f):
                return "Dedekind group with a non-normal soft int-group " + str(list(f))
        return None
    for h in ctx.sweep.subgroups:
        if not _conj_closed(group, h.member_set):
            full = ctx.universe.full_mask
            f = tuple(full if x in h.member_set else 0 for x in group.elements)
            if find_violation(group, f) is not None or is_normal_masks(group, f):
                return f"characteristic soft set of {h!r} is not a non-normal int-group"
            ctx.notes.append(f"non-normal witness on {h!r}")
            return None
    return "non-Dedekind group without a non-normal subgroup"


# Products of normal soft int-groups

@_register(TheoremId.C227, "a normal soft int-group commutes with every soft set", OperandKind.NORMAL, OperandKind.SOFT)
def _normal_commutes(ctx, f, g):
    return _first_difference(ctx, product_masks(ctx.group, f, g), product_masks(ctx.group, g, f), "f*g and g*f")


@_register(TheoremId.C228, "normal times int-group is an int-group", OperandKind.NORMAL, OperandKind.INT)
def _normal_product(ctx, f, g):
    return _violation_text(ctx, product_masks(ctx.group, f, g))


@_register(TheoremId.C229, "the product of normal soft int-groups is normal", OperandKind.NORMAL, OperandKind.NORMAL)
def _normal_product_normal(ctx, f, g):
    fg = product_masks(ctx.group, f, g)
    problem = _violation_text(ctx, fg)
    if problem:
        return problem
    return None if is_normal_masks(ctx.group, fg) else "f*g is not normal"


@_register(TheoremId.C240, "normal soft int-groups form a commutative idempotent semigroup",
           OperandKind.NORMAL, OperandKind.NORMAL, OperandKind.NORMAL)
def _semigroup(ctx, f, g, h):
    group = ctx.group
    fg = product_masks(group, f, g)
    return (
        _first_difference(ctx, fg, product_masks(group, g, f), "f*g and g*f")
        or _first_difference(ctx, product_masks(group, fg, h),
                             product_masks(group, f, product_masks(group, g, h)), "(f*g)*h and f*(g*h)")
        or _first_difference(ctx, product_masks(group, f, f), tuple(f), "f*f and f")
    )


# Conjugates and normalizer

@_register(TheoremId.C246, "normal exactly when every conjugate equals f", OperandKind.INT)
def _conjugate_fixed(ctx, f):
    group = ctx.group
    fixed = all(conjugate_masks(group, f, u) == tuple(f) for u in group.elements)
    normal = is_normal_masks(group, f)
    if fixed != normal:
        return f"normal is {normal} but fixed by conjugation is {fixed}"
    return None


@_register(TheoremId.C270, "the normalizer is a subgroup, f is normal on it, and it is G exactly for normal f", OperandKind.INT)
def _normalizer(ctx, f):
    group = ctx.group
    members = normalizer_members(group, f)
    if not group.is_closed(members):
        return "normalizer is not a subgroup"
    sub, embedding = ctx.sweep.subgroup_view(members)
    if not is_normal_masks(sub, tuple(f[m] for m in embedding)):
        return "restriction to the normalizer is not normal"
    if (len(members) == group.order) != is_normal_masks(group, f):
        return "normalizer is G but f is not normal, or the reverse"
    return None


@_register(TheoremId.C2650, "the normalizer is the set of u with conjugate(f, u) = f", OperandKind.INT)
def _normalizer_by_conjugates(ctx, f):
    group = ctx.group
    members = set(normalizer_members(group, f))
    stabilizer = {u for u in group.elements if conjugate_masks(group, f, u) == tuple(f)}
    if members != stabilizer:
        odd = min(members ^ stabilizer)
        return f"{ctx.name(odd)} lies in exactly one of the two sets"
    return None


@_register(TheoremId.C290, "the number of distinct conjugates is the index of the normalizer", OperandKind.INT)
def _conjugate_count(ctx, f):
    group = ctx.group
    if not any(f):
        raise PreconditionFailed("empty support")
    count = len({conjugate_masks(group, f, u) for u in group.elements})
    size = len(normalizer_members(group, f))
    if count * size != group.order:
        return f"{count} conjugates times |N(f)| = {size} is not {group.order}"
    return None


@_register(TheoremId.C300, "the intersection of all conjugates is the largest normal soft int-group inside f", OperandKind.INT)
def _largest_normal(ctx, f):
    group = ctx.group
    core = list(f)
    for u in group.elements:
        core = [a & b for a, b in zip(core, conjugate_masks(group, f, u))]
    core = tuple(core)
    problem = _violation_text(ctx, core)
    if problem:
        return problem
    if not is_normal_masks(group, core) or not masks_subset(core, f):
        return "core is not a normal soft int-group inside f"
    if ctx.sweep.enumerable:
        candidates = ctx.sweep.normal_pool
    else:
        candidates = [ctx.sweep.random_int(ctx.rng, normal_only=True) for _ in range(ctx.samples)]
    for g in candidates:
        if masks_subset(g, f) and not masks_subset(g, core):
            return "normal soft int-group inside f but not inside the core: " + str(list(g))
    return None


# Cosets and quotients

@_register(TheoremId.C345, "left and right soft cosets are equinumerous", OperandKind.INT)
def _coset_counts(ctx, f):
    group = ctx.group
    left = {_left_coset_masks(group, f, a) for a in group.elements}
    right = {_right_coset_masks(group, f, a) for a in group.elements}
    if len(left) != len(right):
        return f"{len(left)} left cosets but {len(right)} right cosets"
    return None


@_register(TheoremId.C355, "for normal f, af = fa and (af)(ga) = (af)(ag) = f(g)", OperandKind.NORMAL, OperandKind.ELEMENT)
def _normal_cosets(ctx, f, a):
    group = ctx.group
    left = _left_coset_masks(group, f, a)
    problem = _first_difference(ctx, left, _right_coset_masks(group, f, a), "af and fa")
    if problem:
        return problem
    for g in group.elements:
        if left[group.op(g, a)] != f[g] or left[group.op(a, g)] != f[g]:
            return f"translate values differ from f at {ctx.name(g)}"
    return None


@_register(TheoremId.C360, "af = bf exactly when a e_f = b e_f", OperandKind.INT)
def _coset_equality(ctx, f):
    group = ctx.group
    eset = _eset(group, f)
    left = [_left_coset_masks(group, f, a) for a in group.elements]
    right = [_right_coset_masks(group, f, a) for a in group.elements]
    left_sets = [frozenset(group.op(a, h) for h in eset) for a in group.elements]
    right_sets = [frozenset(group.op(h, a) for h in eset) for a in group.elements]
    for a in group.elements:
        for b in group.elements:
            if (left[a] == left[b]) != (left_sets[a] == left_sets[b]):
                return f"left cosets at {ctx.pair(a, b)}"
            if (right[a] == right[b]) != (right_sets[a] == right_sets[b]):
                return f"right cosets at {ctx.pair(a, b)}"
    return None


@_register(TheoremId.C370, "for normal f, af = bf implies f(a) = f(b)", OperandKind.NORMAL)
def _coset_values(ctx, f):
    group = ctx.group
    cosets = [_left_coset_masks(group, f, a) for a in group.elements]
    for a in group.elements:
        for b in group.elements:
            if cosets[a] == cosets[b] and f[a] != f[b]:
                return f"equal cosets at {ctx.pair(a, b)} but different values"
    return None


@_register(TheoremId.C380, "the cosets of a normal f multiply as (xf)*(yf) = (xy)f and form a group", OperandKind.NORMAL)
def _coset_products(ctx, f):
    group = ctx.group
    cosets = [_left_coset_masks(group, f, a) for a in group.elements]
    for x in group.elements:
        for y in group.elements:
            got = product_masks(group, cosets[x], cosets[y])
            if got != cosets[group.op(x, y)]:
                return f"(xf)*(yf) != (xy)f at {ctx.pair(x, y)}"
    try:
        quotient = SoftQuotientGroup(ctx.wrap(f))
    except AxiomViolation as exc:
        return f"coset table is not a group: {exc}"
    if group.is_abelian() and not quotient.is_abelian():
        return "quotient of an Abelian group is not Abelian"
    return None


@_register(TheoremId.C383, "xf -> x e_f is an isomorphism G/f -> G/e_f", OperandKind.NORMAL)
def _quotient_isomorphism(ctx, f):
    try:
        iso = SoftQuotientGroup(ctx.wrap(f)).isomorphism()
    except (AxiomViolation, NotAHomomorphism) as exc:
        return str(exc)
    return None if iso.is_bijective() else "map is not a bijection"


@_register(TheoremId.C385, "xf -> f(x) is a well-defined normal soft int-group over G/f", OperandKind.NORMAL)
def _quotient_soft(ctx, f):
    try:
        induced = quotient_soft(ctx.wrap(f))
    except (AxiomViolation, NotAnIntGroup) as exc:
        return str(exc)
    if not is_normal_masks(induced.group, induced.masks):
        return "induced soft int-group is not normal"
    return None


# Transport along homomorphisms

@_register(TheoremId.D376, "soft preimage is monotone", OperandKind.CODOMAIN_SOFT, OperandKind.CODOMAIN_SOFT, hom=True)
def _preimage_monotone(ctx, g1, g2):
    smaller = tuple(a & b for a, b in zip(g1, g2))
    if not masks_subset(preimage_masks_along(ctx.hom, smaller), preimage_masks_along(ctx.hom, g2)):
        return "preimage of the smaller soft set is not inside the other"
    return None


@_register(TheoremId.C420, "the image of a normal soft int-group under an epimorphism is normal", OperandKind.DOMAIN_NORMAL, hom=True)
def _image_normal(ctx, f):
    if not ctx.hom.is_surjective():
        raise PreconditionFailed("homomorphism is not onto")
    problem = _normal_int_on(ctx.hom.codomain, image_masks_along(ctx.hom, f))
    return None if problem is None else f"image: {problem}"


@_register(TheoremId.C430, "the preimage of a normal soft int-group is normal", OperandKind.CODOMAIN_NORMAL, hom=True)
def _preimage_normal(ctx, g):
    problem = _normal_int_on(ctx.hom.domain, preimage_masks_along(ctx.hom, g))
    return None if problem is None else f"preimage: {problem}"


@_register(TheoremId.B163, "g contains phi(phi^-1(g)), with equality for epimorphisms", OperandKind.CODOMAIN_SOFT, hom=True)
def _image_of_preimage(ctx, g):
    back = image_masks_along(ctx.hom, preimage_masks_along(ctx.hom, g))
    if not masks_subset(back, g):
        return "phi(phi^-1(g)) is not inside g"
    if ctx.hom.is_surjective() and back != tuple(g):
        return "phi(phi^-1(g)) differs from g for an onto map"
    return None


def _image_of_preimage_normal(ctx, g) -> Optional[str]:
    back = image_masks_along(ctx.hom, preimage_masks_along(ctx.hom, g))
    problem = _normal_int_on(ctx.hom.codomain, back)
    return None if problem is None else f"phi(phi^-1(g)): {problem}"


@_register(TheoremId.D593, "phi(phi^-1(g)) is normal for normal g when phi(G) is normal", OperandKind.CODOMAIN_NORMAL, hom=True)
def _image_of_preimage_normal_checked(ctx, g):
    codomain = ctx.hom.codomain
    if not _conj_closed(codomain, ctx.hom.image().member_set):
        raise PreconditionFailed("image of the homomorphism is not normal")
    return _image_of_preimage_normal(ctx, g)


@_register(TheoremId.D593_IMG, "phi(phi^-1(g)) is normal for normal g, any phi", OperandKind.CODOMAIN_NORMAL,
           hom=True, informational=True)
def _image_of_preimage_normal_any(ctx, g):
    return _image_of_preimage_normal(ctx, g)


# Running checks

def _pool(ctx: CheckContext, kind: OperandKind) -> Optional[Sequence]:
    """Exhaustive operand pool, or None when its sweep is over budget."""
    sweep = ctx.codomain_sweep if kind.on_codomain() else ctx.sweep
    if kind == OperandKind.ELEMENT:
        return sweep.group.elements
    if kind == OperandKind.POINT:
        return sweep.point_pool
    if not sweep.enumerable:
        return None
    if kind in (OperandKind.SOFT, OperandKind.CODOMAIN_SOFT):
        return _SoftPool(sweep)
    if kind == OperandKind.INT:
        return sweep.int_pool
    return sweep.normal_pool


class _SoftPool:
    """Lazily iterated pool of every soft set of a sweep."""

    def __init__(self, sweep: SweepContext):
        self.sweep = sweep

    def __len__(self) -> int:
        return self.sweep.soft_count

    def __iter__(self):
        return iter(self.sweep.soft_pool())


def _sample(ctx: CheckContext, kind: OperandKind, pool: Optional[Sequence]):
    sweep = ctx.codomain_sweep if kind.on_codomain() else ctx.sweep
    if pool is not None and not isinstance(pool, _SoftPool):
        return pool[ctx.rng.randrange(len(pool))]
    if kind in (OperandKind.SOFT, OperandKind.CODOMAIN_SOFT):
        return sweep.random_soft(ctx.rng)
    if kind == OperandKind.INT:
        return sweep.random_int(ctx.rng)
    return sweep.random_int(ctx.rng, normal_only=True)


def _operand_stream(theorem: Theorem, ctx: CheckContext, instance: Instance) -> Tuple[SuiteMode, Iterator[Tuple]]:
    kinds = theorem.operands
    if instance.operands is not None:
        return instance.mode, iter([instance.operands])
    if not kinds:
        return SuiteMode.EXHAUSTIVE, iter([()])

    pools = [_pool(ctx, kind) for kind in kinds]
    if instance.mode == SuiteMode.EXHAUSTIVE:
        limit = CONFIG.ENUMERATION_BUDGET if len(kinds) == 1 else CONFIG.COMBINATION_BUDGET
        if all(p is not None for p in pools):
            total = 1
            for p in pools:
                total *= len(p)
            if total <= limit:
                if len(kinds) == 1:
                    return SuiteMode.EXHAUSTIVE, ((x,) for x in pools[0])
                return SuiteMode.EXHAUSTIVE, itertools.product(*pools)
        logger.warning("%s on %s: operands over budget, sampling %d instead",
                       theorem.id.value, instance.label(), ctx.samples)

    def sampled():
        for _ in range(ctx.samples):
            yield tuple(
                (ctx.sweep.random_point(ctx.rng) if kind == OperandKind.POINT
                 else ctx.sweep.random_element(ctx.rng) if kind == OperandKind.ELEMENT
                 else _sample(ctx, kind, pool if instance.mode == SuiteMode.EXHAUSTIVE else None))
                for kind, pool in zip(kinds, pools)
            )

    return SuiteMode.RANDOM, sampled()


def hypothesis_failure(theorem: Theorem, ctx: CheckContext, operands: Tuple) -> Optional[str]:
    """Why fixed operands fall outside the theorem's hypotheses, or None."""
    if len(operands) != len(theorem.operands):
        return f"expected {len(theorem.operands)} operands, got {len(operands)}"
    for position, (kind, operand) in enumerate(zip(theorem.operands, operands), 1):
        if kind in (OperandKind.POINT, OperandKind.ELEMENT, OperandKind.SOFT, OperandKind.CODOMAIN_SOFT):
            continue
        group = ctx.codomain_sweep.group if kind.on_codomain() else ctx.group
        violation = find_violation(group, operand)
        if violation is not None:
            return f"operand {position} is not a soft int-group: {violation.describe(group)}"
        if kind != OperandKind.INT and not is_normal_masks(group, operand):
            return f"operand {position} is not normal"
    return None


def build_context(theorem: Theorem, instance: Instance) -> CheckContext:
    """Resolve the instance's group, universe and homomorphism.

    Raises:
        PreconditionFailed: If a transport check has no homomorphism
    """
    seed = CONFIG.DEFAULT_SEED if instance.seed is None else instance.seed
    samples = CONFIG.RANDOM_SAMPLES if instance.samples is None else instance.samples
    rng = random.Random(derive_seed(seed, theorem.id.value, instance.digest()))
    if theorem.needs_hom:
        if instance.hom is None:
            raise PreconditionFailed(f"{theorem.id.value} needs a homomorphism")
        hom = hom_for(instance.hom)
        return CheckContext(
            sweep=sweep_for(hom.domain.spec, instance.universe),
            rng=rng,
            samples=samples,
            hom=hom,
            codomain_sweep=sweep_for(hom.codomain.spec, instance.universe),
        )
    return CheckContext(sweep=sweep_for(instance.group, instance.universe), rng=rng, samples=samples)


def check_theorem(tid, instance: Instance, timings: Optional[bool] = None) -> TheoremReport:
    """Check one theorem on one instance.

    Args:
        tid: TheoremId or its string value
        instance: Group, universe, optional homomorphism and operands
        timings: Record elapsed microseconds (default CONFIG.RECORD_TIMINGS)

    Returns:
        TheoremReport; a violated report carries a replayable witness

    Raises:
        UnknownTheorem: If no checker carries the id
        PreconditionFailed: If a transport check has no homomorphism
    """
    theorem = get_theorem(tid)
    timings = CONFIG.RECORD_TIMINGS if timings is None else timings
    started = time.perf_counter()
    ctx = build_context(theorem, instance)
    if instance.operands is not None:
        reason = hypothesis_failure(theorem, ctx, instance.operands)
        if reason is not None:
            logger.info("%s on %s: %s", theorem.id.value, instance.label(), reason)
            micros = int((time.perf_counter() - started) * 1e6) if timings else None
            return TheoremReport(theorem.id, instance, Verdict.PRECONDITION_UNMET, instance.mode,
                                 checked=0, detail=reason, micros=micros)
    mode, stream = _operand_stream(theorem, ctx, instance)

    checked = failures = unmet = 0
    witness = None
    for operands in stream:
        try:
            problem = theorem.check(ctx, *operands)
        except PreconditionFailed:
            unmet += 1
            continue
        checked += 1
        if problem is not None:
            failures += 1
            if witness is None:
                witness = Witness(_freeze(operands), problem)
            if not theorem.informational:
                break

    notes = list(ctx.notes[:1])
    if theorem.informational:
        verdict = Verdict.INFORMATIONAL
        notes.insert(0, f"reading fails on {failures} of {checked}")
    elif failures:
        verdict = Verdict.VIOLATED
    elif checked == 0:
        verdict = Verdict.PRECONDITION_UNMET
        notes.insert(0, f"precondition unmet on all {unmet}")
    else:
        verdict = Verdict.HOLDS
    if unmet and verdict != Verdict.PRECONDITION_UNMET:
        notes.append(f"{unmet} outside hypotheses")

    micros = int((time.perf_counter() - started) * 1e6) if timings else None
    return TheoremReport(
        theorem=theorem.id,
        instance=instance,
        verdict=verdict,
        mode=mode,
        checked=checked,
        witness=witness,
        detail="; ".join(notes),
        micros=micros,
    )


def replay_witness(report: TheoremReport) -> bool:
    """Re-run the checker on the witness alone; True if it fails again."""
    if report.witness is None:
        return False
    theorem = get_theorem(report.theorem)
    instance = replace(report.instance, operands=report.witness.operands)
    ctx = build_context(theorem, instance)
    if hypothesis_failure(theorem, ctx, instance.operands) is not None:
        return False
    try:
        return theorem.check(ctx, *instance.operands) is not None
    except PreconditionFailed:
        return False
