"""
Command-line front end.
Parses group specs and soft-set files, dispatches verbs and prints reports.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import __version__
from .config import CONFIG, NormalityCriterion, OutputFormat, SuiteMode
from .enumeration import enumerate_int_groups, enumerate_soft_sets
from .errors import NotNormal, ParseError, SoftGroupError
from .formats import format_soft_set, read_soft_file
from .groups import FiniteGroup, make_group, make_homomorphism
from .int_groups import (
    SoftIntGroup, Violation, check_int_group, distinct_conjugates, is_normal, level_structure,
    normality_report, normalizer, soft_product,
)
from .quotients import quotient_group
from .soft_sets import SoftSet, Universe
from .suite import SuiteConfig, preset, run_suite
from .theorems import TheoremId
from .transport import soft_image, soft_preimage

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Exit code plus the text and structured renderings of a verb's output."""
    code: int
    lines: List[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def render(self, output: OutputFormat) -> str:
        if output == OutputFormat.STRUCTURED:
            return json.dumps(self.data, indent=2, sort_keys=True)
        return "\n".join(self.lines)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _pair(group: FiniteGroup, pair) -> str:
    return "(" + ",".join(group.name(x) for x in pair) + ")"


def _soft_line(f: SoftSet) -> str:
    return " ".join(f"{f.group.name(x)}:{f.universe.render(m)}" for x, m in enumerate(f.masks))


def _soft_data(f: SoftSet) -> dict:
    return {"universe": list(f.universe.labels), "values": list(f.masks)}


def _load(args) -> SoftSet:
    group = make_group(args.group)
    return read_soft_file(args.soft, group)


def _not_int_group(group: FiniteGroup, violation: Violation) -> CommandResult:
    text = violation.describe(group)
    return CommandResult(1, [f"int-group: no; {text}"], {"int_group": False, "violation": text})


def _load_int_group(args):
    """The soft set as a SoftIntGroup, or the refusal result."""
    f = _load(args)
    checked = check_int_group(f)
    if isinstance(checked, SoftIntGroup):
        return checked, None
    return None, _not_int_group(f.group, checked)


# Verb handlers

def cmd_validate(args) -> CommandResult:
    f = _load(args)
    checked = check_int_group(f)
    if not isinstance(checked, SoftIntGroup):
        return _not_int_group(f.group, checked)
    report = normality_report(checked)
    line = f"int-group: yes; normal: {_yes(report.is_normal)}"
    data = {"int_group": True, "normal": report.is_normal}
    if not report.is_normal:
        witness = report.witnesses[NormalityCriterion.CONJ_EQ]
        line += f"; witness {_pair(f.group, witness)}"
        data["witness"] = [f.group.name(x) for x in witness]
    return CommandResult(0, [line], data)


def cmd_normal(args) -> CommandResult:
    f, refusal = _load_int_group(args)
    if refusal:
        return refusal
    report = normality_report(f)
    lines, data = [], {"criteria": {}, "agree": report.agree}
    for criterion in NormalityCriterion:
        verdict = report.verdicts[criterion]
        witness = report.witnesses[criterion]
        line = f"{criterion.value}: {_yes(verdict)}"
        if witness is not None:
            line += f" witness {_pair(f.group, witness)}"
        lines.append(line)
        data["criteria"][criterion.value] = {
            "normal": verdict,
            "witness": None if witness is None else [f.group.name(x) for x in witness],
        }
    lines.append(f"agree: {_yes(report.agree)}")
    return CommandResult(0, lines, data)


def cmd_levels(args) -> CommandResult:
    f, refusal = _load_int_group(args)
    if refusal:
        return refusal
    report = level_structure(f)
    lines = [
        "image: " + " ".join(str(v) for v in report.image.values),
        f"image chain: {_yes(report.image.is_chain)}",
        "level subgroups: " + " ".join(repr(h) for h in report.level_subgroups),
    ]
    if report.chain is not None:
        lines.append("chain: " + " < ".join(repr(h) for h in report.chain))
    else:
        lines.append("chain: none")
    lines.append(f"poset-form level-normal: {_yes(report.poset_level_normal)}")
    if report.chain_level_normal is not None:
        lines.append(f"chain-form level-normal: {_yes(report.chain_level_normal)}")
    lines.append(report.summary())
    data = {
        "image": [str(v) for v in report.image.values],
        "image_chain": report.image.is_chain,
        "level_subgroups": [repr(h) for h in report.level_subgroups],
        "chain": None if report.chain is None else [repr(h) for h in report.chain],
        "poset_level_normal": report.poset_level_normal,
        "chain_level_normal": report.chain_level_normal,
        "summary": report.summary(),
    }
    return CommandResult(0, lines, data)


def cmd_normalizer(args) -> CommandResult:
    f, refusal = _load_int_group(args)
    if refusal:
        return refusal
    n = normalizer(f)
    return CommandResult(0, [f"normalizer: {n!r}", f"index: {n.index}"],
                         {"normalizer": [f.group.name(x) for x in n.members], "index": n.index})


def cmd_quotient(args) -> CommandResult:
    f, refusal = _load_int_group(args)
    if refusal:
        return refusal
    try:
        q = quotient_group(f)
    except NotNormal:
        return CommandResult(1, ["not normal; no quotient"], {"normal": False})
    iso = q.isomorphism()
    width = max(len(name) for name in q.names)
    lines = [f"order: {q.order}", " " * width + " | " + " ".join(n.ljust(width) for n in q.names)]
    for i, row in enumerate(q.mul):
        lines.append(q.names[i].ljust(width) + " | " + " ".join(q.names[j].ljust(width) for j in row))
    lines.append("isomorphism onto G/e_f:")
    for i in q.elements:
        lines.append(f"  {q.name(i)} -> {iso.codomain.name(iso(i))}")
    data = {
        "order": q.order,
        "cosets": list(q.names),
        "table": [list(row) for row in q.mul],
        "isomorphism": {q.name(i): iso.codomain.name(iso(i)) for i in q.elements},
    }
    return CommandResult(0, [line.rstrip() for line in lines], data)


def cmd_conjugates(args) -> CommandResult:
    f, refusal = _load_int_group(args)
    if refusal:
        return refusal
    conjugates = distinct_conjugates(f)
    lines = [f"distinct conjugates: {len(conjugates)}"]
    lines.extend(_soft_line(c.inner) for c in conjugates)
    return CommandResult(0, lines, {"count": len(conjugates), "conjugates": [list(c.masks) for c in conjugates]})


def _emit_soft(result: SoftSet) -> CommandResult:
    data = _soft_data(result)
    checked = check_int_group(result)
    data["int_group"] = isinstance(checked, SoftIntGroup)
    data["normal"] = data["int_group"] and is_normal(checked)
    return CommandResult(0, format_soft_set(result).rstrip("\n").split("\n"), data)


def cmd_product(args) -> CommandResult:
    f = _load(args)
    g = read_soft_file(args.soft2, f.group)
    return _emit_soft(soft_product(f, g))


def cmd_image(args) -> CommandResult:
    hom = make_homomorphism(args.hom)
    return _emit_soft(soft_image(hom, read_soft_file(args.soft, hom.domain)))


def cmd_preimage(args) -> CommandResult:
    hom = make_homomorphism(args.hom)
    return _emit_soft(soft_preimage(hom, read_soft_file(args.soft, hom.codomain)))


def cmd_enumerate(args) -> CommandResult:
    group = make_group(args.group)
    universe = Universe.of_size(args.universe)
    if args.normal or args.int_groups:
        items = [f.inner for f in enumerate_int_groups(group, universe, normal_only=args.normal)]
        kind = "normal int-groups" if args.normal else "int-groups"
    else:
        items = list(enumerate_soft_sets(group, universe))
        kind = "soft sets"
    lines = [f"{kind}: {len(items)}"]
    if args.list:
        lines.extend(_soft_line(f) for f in items)
    data = {"kind": kind, "count": len(items)}
    if args.list:
        data["items"] = [list(f.masks) for f in items]
    return CommandResult(0, lines, data)


def _suite_config(args) -> SuiteConfig:
    if args.preset:
        config = preset(args.preset)
    elif args.groups is None:
        config = preset("desk")
    else:
        config = SuiteConfig()
    if args.groups is not None:
        config.groups = [g.strip() for g in args.groups.split(";") if g.strip()]
    if args.universe:
        config.universes = [int(m) for m in args.universe.split(",")]
    if args.mode:
        config.mode = SuiteMode(args.mode)
    if args.samples is not None:
        config.samples = args.samples
    if args.seed is not None:
        config.seed = args.seed
    if args.theorem:
        config.theorems = [TheoremId.parse(t) for t in args.theorem]
    if args.workers is not None:
        config.workers = args.workers
    if args.timings:
        config.timings = True
    return config


def cmd_theorems(args) -> CommandResult:
    report = run_suite(_suite_config(args))
    return CommandResult(report.exit_code, report.render_text().split("\n"), json.loads(report.to_structured()))


COMMANDS: Dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "validate": cmd_validate,
    "normal": cmd_normal,
    "levels": cmd_levels,
    "normalizer": cmd_normalizer,
    "product": cmd_product,
    "quotient": cmd_quotient,
    "conjugates": cmd_conjugates,
    "image": cmd_image,
    "preimage": cmd_preimage,
    "enumerate": cmd_enumerate,
    "theorems": cmd_theorems,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="soft-intgroups", description="Soft int-groups over finite groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument("--log-level", default=CONFIG.LOG_LEVEL)
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb in ("validate", "normal", "levels", "normalizer", "quotient", "conjugates"):
        sub = verbs.add_parser(verb)
        sub.add_argument("--group", required=True, help="group spec, e.g. dihedral:3")
        sub.add_argument("--soft", required=True, help="soft-set file")

    sub = verbs.add_parser("product")
    sub.add_argument("--group", required=True)
    sub.add_argument("--soft", required=True)
    sub.add_argument("--soft2", required=True)

    for verb in ("image", "preimage"):
        sub = verbs.add_parser(verb)
        sub.add_argument("--hom", required=True, help="e.g. reduction:4:2, sign:3, quotient:dihedral:3:0,1,2")
        sub.add_argument("--soft", required=True)

    sub = verbs.add_parser("enumerate")
    sub.add_argument("--group", required=True)
    sub.add_argument("--universe", type=int, required=True)
    kind = sub.add_mutually_exclusive_group()
    kind.add_argument("--int-groups", action="store_true")
    kind.add_argument("--normal", action="store_true")
    sub.add_argument("--list", action="store_true")

    sub = verbs.add_parser("theorems")
    sub.add_argument("--preset")
    sub.add_argument("--groups", help="group specs separated by ';'")
    sub.add_argument("--universe", help="universe sizes separated by ','")
    sub.add_argument("--mode", choices=[m.value for m in SuiteMode])
    sub.add_argument("--samples", type=int)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--theorem", action="append", help="theorem id, repeatable")
    sub.add_argument("--workers", type=int)
    sub.add_argument("--timings", action="store_true")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch the verb and print its report.

    Returns:
        0 on success, 1 for a negative answer or a violated verdict,
        2 for parse and argument errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        logging.basicConfig(stream=sys.stderr, level=args.log_level.upper(),
                            format="%(levelname)s %(name)s: %(message)s")
        result = COMMANDS[args.verb](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SoftGroupError, ValueError) as exc:
        logger.debug("command %s failed", args.verb, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 2

    print(result.render(OutputFormat(args.format)))
    return result.code
