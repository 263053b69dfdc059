"""Plain-text chain descriptions.

Grammar (whitespace-insensitive, ``#`` starts a comment)::

    c = 3
    i = 1
    r = 4
    gens:
    x[1,2]^3
    x[1,4]^2 * x[2,1]
    x[2,2]*x[3,3]

Header keys ``c``, ``i``, ``r`` are required; ``char``, ``gen_cap`` and
``depth_cap`` are optional defaults that command-line flags override.
Monomials are ``*``-separated ``x[k,j]^e`` factors (``^1`` may be
omitted), or the literal ``1``.  Generator columns may not exceed ``r``.
Redundant generators are dropped with a warning; a unit generator is an
error because the seed must be proper.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError
from .monomial import Monomial, MonomialIdeal
from .chains import ChainSpec

__all__ = [
    "ChainDocument",
    "parse_monomial",
    "parse_chain_document",
    "parse_spec",
    "render_chain_document",
]

_FACTOR = re.compile(r"x\[\s*(\d+)\s*,\s*(\d+)\s*\](?:\s*\^\s*([+-]?\d+))?")
_HEADER_KEYS = ("c", "i", "r")
_OPTION_KEYS = ("char", "gen_cap", "depth_cap")


@dataclass
class ChainDocument:
    """Parsed form of a chain description file."""

    c: int
    i: int
    r: int
    gens: list
    options: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def to_spec(self):
        seed = MonomialIdeal(self.c, self.r, self.gens)
        if len(seed.gens) < len(set(self.gens)):
            self.warnings.append(
                "redundant generators were dropped while minimalizing the seed"
            )
        return ChainSpec(rows=self.c, index=self.i, seed_index=self.r, seed=seed)


def parse_monomial(text, rows=None, line=1):
    """Parse one monomial in the x[k,j]^e grammar; positions feed diagnostics."""
    s = text.strip()
    if s == "1":
        return Monomial()
    pos = 0
    entries = {}
    expect_factor = True
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if not expect_factor:
            if s[pos] == "*":
                pos += 1
                expect_factor = True
                continue
            raise ParseError(line, pos + 1, f"expected '*' before {s[pos:]!r}")
        m = _FACTOR.match(s, pos)
        if not m:
            raise ParseError(line, pos + 1, f"expected a factor x[k,j]^e at {s[pos:]!r}")
        row, col, exp = int(m.group(1)), int(m.group(2)), m.group(3)
        exp = 1 if exp is None else int(exp)
        if exp <= 0:
            raise ParseError(line, m.start(3) + 1, f"exponent must be positive, got {exp}")
        if row < 1 or (rows is not None and row > rows):
            raise ParseError(line, pos + 1, f"row {row} out of range 1..{rows}")
        if col < 1:
            raise ParseError(line, pos + 1, f"column {col} must be positive")
        entries[(row, col)] = entries.get((row, col), 0) + exp
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise ParseError(line, len(s), "dangling '*' or empty monomial")
    return Monomial(entries)


def _strip_comment(line):
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_chain_document(text):
    """Parse a chain description into a ChainDocument, with diagnostics."""
    header = {}
    options = {}
    gens = []
    in_gens = False
    gens_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if not in_gens:
            if re.fullmatch(r"gens\s*:", line):
                in_gens = True
                gens_line = lineno
                continue
            m = re.fullmatch(r"([A-Za-z_]+)\s*=\s*([+-]?\d+)", line)
            if not m:
                raise ParseError(lineno, 1, f"expected 'key = value' or 'gens:', got {line!r}")
            key, value = m.group(1), int(m.group(2))
            if key in _HEADER_KEYS:
                if key in header:
                    raise ParseError(lineno, 1, f"duplicate key {key!r}")
                header[key] = value
            elif key in _OPTION_KEYS:
                options[key] = value
            else:
                raise ParseError(lineno, 1, f"unknown key {key!r}")
        else:
            gens.append((lineno, line))
    for key in _HEADER_KEYS:
        if key not in header:
            raise ParseError(1, 1, f"missing required key {key!r}")
    c, i, r = header["c"], header["i"], header["r"]
    if c < 1:
        raise ParseError(1, 1, f"c must be positive, got {c}")
    if i < 0:
        raise ParseError(1, 1, f"i must be nonnegative, got {i}")
    if r < 1:
        raise ParseError(1, 1, f"r must be positive, got {r}")
    if not in_gens:
        raise ParseError(1, 1, "missing 'gens:' section")
    if not gens:
        raise ParseError(gens_line, 1, "empty gens section")
    monomials = []
    for lineno, body in gens:
        mono = parse_monomial(body, rows=c, line=lineno)
        if mono.is_unit:
            raise ParseError(lineno, 1, "a unit generator makes the seed improper")
        if mono.max_col() > r:
            raise ParseError(
                lineno, 1, f"generator column {mono.max_col()} exceeds r = {r}"
            )
        monomials.append(mono)
    doc = ChainDocument(c=c, i=i, r=r, gens=monomials, options=options)
    if len(set(monomials)) < len(monomials):
        doc.warnings.append("duplicate generators in input")
    return doc


def parse_spec(text):
    """Parse a chain description directly to a ChainSpec."""
    return parse_chain_document(text).to_spec()


def render_chain_document(doc):
    """Canonical text for a document; reparsing yields an equal document."""
    lines = [f"c = {doc.c}", f"i = {doc.i}", f"r = {doc.r}"]
    for key in _OPTION_KEYS:
        if key in doc.options:
            lines.append(f"{key} = {doc.options[key]}")
    lines.append("gens:")
    seed = MonomialIdeal(doc.c, doc.r, doc.gens)
    for g in seed.gens:
        lines.append(str(g))
    return "\n".join(lines) + "\n"
