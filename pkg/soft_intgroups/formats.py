"""
Text formats for Cayley tables and soft sets.

Group file::

    order 4
    0 1 2 3
    ...
    names e a b c

Soft-set file::

    universe 2 a b
    0 : {a,b}
    1 : {a}

Blank lines and lines starting with ``#`` are skipped. Elements missing from a
soft-set file take the empty value.
"""

import re
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from .errors import ParseError
from .groups import FiniteGroup, from_cayley_table
from .int_groups import find_violation, is_normal_masks
from .soft_sets import SoftSet, Universe

_ELEMENT_LINE = re.compile(r"^\s*(\S+)\s*:\s*\{([^}]*)\}\s*$")


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, line


def _column(line: str, token: str) -> int:
    return line.find(token) + 1


def parse_group(text: str, spec: Optional[str] = None) -> FiniteGroup:
    """Parse a Cayley table file.

    Raises:
        ParseError: For malformed lines, with line and column
        AxiomViolation: If the table is not a group
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty group file")
    number, line = lines[0]
    words = line.split()
    if len(words) != 2 or words[0] != "order":
        raise ParseError("expected 'order n'", number, 1)
    try:
        n = int(words[1])
    except ValueError:
        raise ParseError("order must be an integer", number, _column(line, words[1])) from None
    if n < 1:
        raise ParseError("order must be positive", number, _column(line, words[1]))
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows", lines[-1][0])

    rows: List[List[int]] = []
    for number, line in lines[1:n + 1]:
        words = line.split()
        if len(words) != n:
            raise ParseError(f"expected {n} entries, got {len(words)}", number, 1)
        row = []
        for word in words:
            try:
                row.append(int(word))
            except ValueError:
                raise ParseError(f"bad entry {word!r}", number, _column(line, word)) from None
        rows.append(row)

    names = None
    rest = lines[n + 1:]
    if rest:
        number, line = rest[0]
        words = line.split()
        if words[0] != "names" or len(words) != n + 1:
            raise ParseError(f"expected 'names' with {n} labels", number, 1)
        names = words[1:]
        if len(rest) > 1:
            raise ParseError("unexpected content after names", rest[1][0], 1)
    return from_cayley_table(rows, names, spec=spec)


def read_group_file(path) -> FiniteGroup:
    """Group from a file; its spec is ``table:PATH``."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_group(text, spec=f"table:{path}")


def format_group(group: FiniteGroup) -> str:
    lines = [f"order {group.order}"]
    lines.extend(" ".join(str(v) for v in row) for row in group.mul)
    lines.append("names " + " ".join(group.names))
    return "\n".join(lines) + "\n"


def _element_index(group: FiniteGroup, token: str, number: int, line: str) -> int:
    try:
        return group.index_of(token)
    except KeyError:
        pass
    try:
        index = int(token)
    except ValueError:
        raise ParseError(f"unknown element {token!r}", number, _column(line, token)) from None
    if not 0 <= index < group.order:
        raise ParseError(f"element {index} outside order {group.order}", number, _column(line, token))
    return index


def parse_soft_set(text: str, group: FiniteGroup) -> SoftSet:
    """Parse a soft-set file over a group; elements are indices or names.

    Raises:
        ParseError: For malformed lines, unknown labels or repeated elements
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty soft-set file")
    number, line = lines[0]
    words = line.split()
    if not words or words[0] != "universe" or len(words) < 2:
        raise ParseError("expected 'universe m labels...'", number, 1)
    try:
        m = int(words[1])
    except ValueError:
        raise ParseError("universe size must be an integer", number, _column(line, words[1])) from None
    labels = words[2:] if len(words) > 2 else None
    if labels is not None and len(labels) != m:
        raise ParseError(f"expected {m} labels, got {len(labels)}", number, 1)
    try:
        universe = Universe(tuple(labels)) if labels else Universe.of_size(m)
    except ValueError as exc:
        raise ParseError(str(exc), number, 1) from None

    masks = [0] * group.order
    seen = set()
    for number, line in lines[1:]:
        match = _ELEMENT_LINE.match(line)
        if not match:
            raise ParseError("expected 'element : {labels}'", number, 1)
        index = _element_index(group, match.group(1), number, line)
        if index in seen:
            raise ParseError(f"element {match.group(1)} given twice", number, 1)
        seen.add(index)
        for label in (part.strip() for part in match.group(2).split(",")):
            if not label:
                continue
            if label not in universe.labels:
                raise ParseError(f"unknown label {label!r}", number, _column(line, label))
            masks[index] |= 1 << universe.labels.index(label)
    return SoftSet(group, universe, masks)


def read_soft_file(path, group: FiniteGroup) -> SoftSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_soft_set(text, group)


def format_soft_set(f: SoftSet, annotate: bool = True) -> str:
    """Soft-set file text, one line per element.

    Args:
        f: Soft set to write
        annotate: Prefix ``# validated: int-group[, normal]`` when f is an int-group
    """
    lines = []
    if annotate and find_violation(f.group, f.masks) is None:
        tag = "int-group, normal" if is_normal_masks(f.group, f.masks) else "int-group"
        lines.append(f"# validated: {tag}")
    lines.append(f"universe {f.universe.size} " + " ".join(f.universe.labels))
    for x, mask in enumerate(f.masks):
        lines.append(f"{x} : {f.universe.render(mask)}")
    return "\n".join(lines) + "\n"
