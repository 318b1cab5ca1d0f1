"""Text formats: points files, graph exports and flat key=value reports.

Points file::

    tripts v1 3
    # anything after '#' is a comment
    0/1 0/1
    1/2 -3/4  # a0
    7/1 1/3

Coordinates are exact rationals written ``num/den`` in lowest terms (a bare
integer is accepted on input). A trailing comment on a point line is the
point's label. Serializing a parsed canonical file reproduces it byte for byte.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .geometry import PointSet
from .graphs import SimpleGraph

__all__ = [
    "FormatError",
    "format_points",
    "parse_points",
    "read_points",
    "write_points",
    "format_graph",
    "parse_graph",
    "format_kv",
    "parse_kv",
]

MAGIC = "tripts"
VERSION = "v1"


class FormatError(ValueError):
    """Malformed input file (the CLI maps this to the bad-input exit code)."""


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_rational(tok: str, lineno: int) -> Fraction:
    try:
        if "/" in tok:
            num, den = tok.split("/")
            q = Fraction(int(num), int(den))
        else:
            q = Fraction(int(tok))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"line {lineno}: bad rational {tok!r}") from exc
    return q


def format_points(ps: PointSet) -> str:
    if not ps.is_rational:
        raise FormatError("points file holds rational coordinates only")
    lines = [f"{MAGIC} {VERSION} {len(ps)}"]
    for p in ps:
        line = f"{_fmt(p.x.rational_part)} {_fmt(p.y.rational_part)}"
        if ps.labels is not None:
            line += f"  # {ps.labels[p.id]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_points(text: str, certify: bool = True) -> PointSet:
    """Parse a points file; raises :class:`FormatError` or ``GeneralPositionError``."""
    header = None
    coords = []
    labels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        body = body.strip()
        if not body:
            continue
        if header is None:
            parts = body.split()
            if len(parts) != 3 or parts[0] != MAGIC or parts[1] != VERSION:
                raise FormatError(f"line {lineno}: expected '{MAGIC} {VERSION} <n>' header")
            try:
                header = int(parts[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad point count {parts[2]!r}") from exc
            continue
        parts = body.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two coordinates")
        coords.append((_parse_rational(parts[0], lineno), _parse_rational(parts[1], lineno)))
        labels.append(comment.strip())
    if header is None:
        raise FormatError("empty points file")
    if header != len(coords):
        raise FormatError(f"header says {header} points, found {len(coords)}")
    use_labels = labels if any(labels) else None
    if use_labels is not None and not all(labels):
        use_labels = [lab or str(k) for k, lab in enumerate(labels)]
    return PointSet(coords, labels=use_labels, certify=certify)


def read_points(path, certify: bool = True) -> PointSet:
    return parse_points(Path(path).read_text(), certify=certify)


def write_points(path, ps: PointSet) -> None:
    Path(path).write_text(format_points(ps))


def format_graph(g: SimpleGraph, flavor: str) -> str:
    lines = [flavor] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_graph(text: str):
    """Inverse of :func:`format_graph`: ``(flavor, sorted edge list)``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty graph file")
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return lines[0], edges


def format_kv(pairs) -> str:
    out = []
    for k, v in pairs:
        if "=" in k or "\n" in str(v):
            raise ValueError(f"unrepresentable key/value {k!r}")
        out.append(f"{k}={v}")
    return "\n".join(out) + "\n"


def parse_kv(text: str) -> dict:
    out = {}
    for ln in text.splitlines():
        if not ln.strip() or ln.startswith("#"):
            continue
        k, sep, v = ln.partition("=")
        if not sep:
            raise FormatError(f"not a key=value line: {ln!r}")
        out[k] = v
    return out
