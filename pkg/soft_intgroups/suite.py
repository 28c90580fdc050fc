"""
Theorem suite runner: plans (theorem, instance) pairs, runs them, and renders
the verdicts as text or as a structured document.
"""

import json
import logging
from collections import Counter, OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .config import CONFIG, SuiteMode, Verdict
from .groups import catalog_homomorphisms, make_group
from .theorems import REGISTRY, Instance, TheoremId, TheoremReport, check_theorem

logger = logging.getLogger(__name__)

DESK_GROUPS = [
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
    "klein", "dihedral:3", "dihedral:4", "quaternion",
]


@dataclass
class SuiteConfig:
    """What the suite runs over."""
    groups: List[str] = field(default_factory=list)
    universes: List[int] = field(default_factory=lambda: [1])
    mode: SuiteMode = SuiteMode.EXHAUSTIVE
    samples: int = field(default_factory=lambda: CONFIG.RANDOM_SAMPLES)
    seed: int = field(default_factory=lambda: CONFIG.DEFAULT_SEED)
    theorems: Optional[List[TheoremId]] = None
    workers: int = field(default_factory=lambda: CONFIG.WORKERS)
    timings: bool = field(default_factory=lambda: CONFIG.RECORD_TIMINGS)

    def selected(self) -> List[TheoremId]:
        chosen = set(self.theorems) if self.theorems else set(TheoremId)
        return [tid for tid in TheoremId if tid in chosen]

    def to_record(self) -> dict:
        return {
            "groups": list(self.groups),
            "universes": list(self.universes),
            "mode": self.mode.value,
            "samples": self.samples,
            "seed": self.seed,
            "theorems": [tid.value for tid in self.selected()],
        }


PRESETS = {
    "desk": lambda: SuiteConfig(groups=list(DESK_GROUPS), universes=[1, 2]),
    "quick": lambda: SuiteConfig(groups=["cyclic:2", "cyclic:4", "klein", "dihedral:3"], universes=[1]),
    "random": lambda: SuiteConfig(groups=["symmetric:4"], universes=[1], mode=SuiteMode.RANDOM,
                                  samples=100, seed=1),
}


def preset(name: str) -> SuiteConfig:
    """Fresh config for a named preset.

    Raises:
        ValueError: For an unknown preset name
    """
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None


def plan(config: SuiteConfig) -> List[Tuple[TheoremId, Instance]]:
    """All (theorem, instance) pairs in canonical order."""
    # transport checks run once per catalog homomorphism out of the group
    homs: Dict[str, List[str]] = {}
    for spec in config.groups:
        homs[spec] = [h.spec for h in catalog_homomorphisms(make_group(spec))]

    pairs = []
    for tid in config.selected():
        theorem = REGISTRY[tid]
        for spec in config.groups:
            for m in config.universes:
                base = Instance(spec, m, mode=config.mode, samples=config.samples, seed=config.seed)
                if not theorem.needs_hom:
                    pairs.append((tid, base))
                    continue
                for hom in homs[spec]:
                    pairs.append((tid, Instance(spec, m, hom=hom, mode=config.mode,
                                                samples=config.samples, seed=config.seed)))
    return pairs


def _run_batch(batch: List[Tuple[int, TheoremId, Instance]], timings: bool) -> List[Tuple[int, TheoremReport]]:
    return [(index, check_theorem(tid, instance, timings=timings)) for index, tid, instance in batch]


@dataclass
class SuiteReport:
    """Verdicts of a suite run in canonical order."""
    config: SuiteConfig
    reports: List[TheoremReport]

    def counts(self) -> Dict[Verdict, int]:
        tally = Counter(r.verdict for r in self.reports)
        return {v: tally.get(v, 0) for v in Verdict}

    @property
    def violations(self) -> List[TheoremReport]:
        return [r for r in self.reports if r.verdict.is_failure()]

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0

    def summary(self) -> str:
        counts = self.counts()
        parts = ", ".join(f"{counts[v]} {v.value}" for v in Verdict)
        return f"{len(self.reports)} records: {parts}"

    def render_text(self) -> str:
        lines = []
        for r in self.reports:
            line = f"{r.theorem.value:<9} {r.verdict.value:<19} {r.mode.value:<11} {r.instance.label()} checked={r.checked}"
            if r.micros is not None:
                line += f" micros={r.micros}"
            if r.detail:
                line += f" ({r.detail})"
            lines.append(line)
            if r.witness is not None:
                lines.append(f"    witness {list(r.witness.operands)}: {r.witness.message}")
        lines.append(self.summary())
        return "\n".join(lines)

    def to_structured(self) -> str:
        document = {
            "config": self.config.to_record(),
            "records": [r.to_record() for r in self.reports],
            "summary": {v.value: n for v, n in self.counts().items()},
            "exit_code": self.exit_code,
        }
        return json.dumps(document, indent=2, sort_keys=True)


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run every selected theorem over every planned instance.

    Instances sharing a (group, universe) pair form one batch; with more
    than one worker the batches run in separate processes. Results are put
    back into canonical (theorem, instance) order either way.

    Raises:
        BudgetExceeded: Propagated from enumeration
    """
    pairs = plan(config)
    batches: "OrderedDict[Tuple[str, int], list]" = OrderedDict()
    for index, (tid, instance) in enumerate(pairs):
        batches.setdefault((instance.group, instance.universe), []).append((index, tid, instance))

    results: List[Tuple[int, TheoremReport]] = []
    if config.workers > 1 and len(batches) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [pool.submit(_run_batch, batch, config.timings) for batch in batches.values()]
            for future in futures:
                results.extend(future.result())
    else:
        for (group, m), batch in batches.items():
            logger.info("checking %d records on %s with |U|=%d", len(batch), group, m)
            results.extend(_run_batch(batch, config.timings))

    results.sort(key=lambda item: item[0])
    return SuiteReport(config, [report for _, report in results])
