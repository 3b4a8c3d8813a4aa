"""Reading and writing the flat ideal file format.

A document is a `ring:` line naming the variables followed by one or more
`ideal:` lines of comma-separated generators. A generator is a monomial
string (`x^3*y`; the `*` and `^k` are optional) or an exponent vector
(`[3 1 0]`). `#` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import IdealSyntaxError
from .monomials import MonomialIdeal, Multidegree, minimalize

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?\d+")

MONOMIAL_FORMAT = "monomial"
VECTOR_FORMAT = "vector"


@dataclass(frozen=True)
class IdealDocument:
    """Parsed ideal file: variable names plus minimalized generators."""

    variables: tuple[str, ...]
    generators: tuple[Multidegree, ...]
    source_format: str = MONOMIAL_FORMAT
    dropped: int = field(default=0, compare=False)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(len(self.variables), self.generators)


def default_variable_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def format_monomial(mu: Multidegree, names) -> str:
    parts = []
    for name, e in zip(names, mu):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(doc: IdealDocument) -> str:
    lines = ["ring: " + " ".join(doc.variables)]
    if doc.generators:
        if doc.source_format == VECTOR_FORMAT:
            rendered = ["[" + " ".join(map(str, g)) + "]" for g in doc.generators]
        else:
            rendered = [format_monomial(g, doc.variables) for g in doc.generators]
        lines.append("ideal: " + ", ".join(rendered))
    return "\n".join(lines) + "\n"


def _split_generators(body: str, line_no: int, col_base: int):
    """Comma-split with 1-based column positions of each segment start."""
    segments = []
    start = 0
    while start <= len(body):
        end = body.find(",", start)
        if end < 0:
            end = len(body)
        seg = body[start:end]
        if not seg.strip():
            raise IdealSyntaxError("empty generator", line_no, col_base + start)
        offset = len(seg) - len(seg.lstrip())
        segments.append((seg.strip(), col_base + start + offset))
        if end == len(body):
            break
        start = end + 1
    return segments


def _parse_vector(seg: str, line_no: int, col: int, n: int) -> Multidegree:
    if not seg.endswith("]"):
        raise IdealSyntaxError("unterminated exponent vector", line_no, col + len(seg))
    inner = seg[1:-1]
    entries = []
    for m in re.finditer(r"\S+", inner):
        tok = m.group()
        tok_col = col + 1 + m.start()
        if not _INT_RE.fullmatch(tok):
            raise IdealSyntaxError(f"expected integer, got {tok!r}", line_no, tok_col)
        value = int(tok)
        if value < 0:
            raise IdealSyntaxError("negative exponent", line_no, tok_col)
        entries.append(value)
    if len(entries) != n:
        raise IdealSyntaxError(
            f"vector has {len(entries)} entries, ring has {n} variables", line_no, col
        )
    return tuple(entries)


def _parse_monomial(seg: str, line_no: int, col: int, index: dict[str, int], n: int):
    if seg == "1":
        return (0,) * n
    exps = [0] * n
    pos = 0
    expect_factor = True
    while pos < len(seg):
        if seg[pos].isspace():
            pos += 1
            continue
        if seg[pos] == "*":
            if expect_factor:
                raise IdealSyntaxError("expected variable name", line_no, col + pos)
            expect_factor = True
            pos += 1
            continue
        m = _NAME_RE.match(seg, pos)
        if not m:
            raise IdealSyntaxError(
                f"expected variable name, got {seg[pos]!r}", line_no, col + pos
            )
        name = m.group()
        if name not in index:
            raise IdealSyntaxError(f"unknown variable {name!r}", line_no, col + pos)
        pos = m.end()
        exponent = 1
        if pos < len(seg) and seg[pos] == "^":
            pos += 1
            m2 = _INT_RE.match(seg, pos)
            if not m2:
                raise IdealSyntaxError("expected exponent after '^'", line_no, col + pos)
            exponent = int(m2.group())
            if exponent < 0:
                raise IdealSyntaxError("negative exponent", line_no, col + pos)
            pos = m2.end()
        exps[index[name]] += exponent
        expect_factor = False
    if expect_factor:
        raise IdealSyntaxError("expected variable name", line_no, col + len(seg))
    return tuple(exps)


def parse_ideal(text: str) -> IdealDocument:
    """Parse the documented format; generators are minimalized and the count
    of redundant ones dropped is reported on the document."""
    variables: tuple[str, ...] | None = None
    raw: list[Multidegree] = []
    saw_monomial = False
    saw_ideal_line = False
    for line_no, full_line in enumerate(text.splitlines(), start=1):
        line = full_line.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("ring:"):
            if variables is not None:
                raise IdealSyntaxError("duplicate ring line", line_no, col0)
            names = stripped[5:].split()
            if not names:
                raise IdealSyntaxError("ring line names no variables", line_no, col0)
            for name in names:
                if not _NAME_RE.fullmatch(name):
                    raise IdealSyntaxError(
                        f"invalid variable name {name!r}",
                        line_no,
                        line.index(name) + 1,
                    )
            if len(set(names)) != len(names):
                raise IdealSyntaxError("duplicate variable name", line_no, col0)
            variables = tuple(names)
        elif stripped.startswith("ideal:"):
            if variables is None:
                raise IdealSyntaxError(
                    "ring line must come before the ideal", line_no, col0
                )
            saw_ideal_line = True
            body_col = col0 + len("ideal:")
            body = stripped[len("ideal:") :]
            index = {name: i for i, name in enumerate(variables)}
            for seg, seg_col in _split_generators(body, line_no, body_col):
                if seg.startswith("["):
                    raw.append(_parse_vector(seg, line_no, seg_col, len(variables)))
                else:
                    raw.append(
                        _parse_monomial(seg, line_no, seg_col, index, len(variables))
                    )
                    saw_monomial = True
        else:
            raise IdealSyntaxError(
                "expected a 'ring:' or 'ideal:' line", line_no, col0
            )
    if variables is None:
        raise IdealSyntaxError("missing ring line", 1, 1)
    if not saw_ideal_line:
        raise IdealSyntaxError("missing ideal line", 1, 1)
    ideal = minimalize(raw, len(variables))
    fmt = MONOMIAL_FORMAT if saw_monomial or not raw else VECTOR_FORMAT
    return IdealDocument(
        variables, ideal.gens, fmt, dropped=len(raw) - len(ideal.gens)
    )
