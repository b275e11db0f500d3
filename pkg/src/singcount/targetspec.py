"""Text grammar for targets used on the command line.

    pm(m=2, d=4)            pm(m=2, d=d)
    product((m=1, d=d1), (m=1, d=d2))
    table(file=chern.json)
    generic(m=3)

Degrees are integers or bare identifiers (symbolic).  Where ranges are
allowed (the ``table`` subcommand) a degree may also be ``lo..hi``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, replace

from .targets import ChernTarget, load_table, make_generic, make_pm, make_product


class TargetSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class DegreeRange:
    lo: int
    hi: int

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class TargetSpec:
    kind: str                       # pm | product | table | generic
    factors: tuple = ()             # ((m, d), ...) for pm (one factor) and product
    m: int | None = None            # generic
    file: str | None = None         # table

    def __str__(self) -> str:
        if self.kind == "pm":
            (m, d), = self.factors
            return f"pm(m={m},d={d})"
        if self.kind == "product":
            return "product(" + ",".join(f"(m={m},d={d})" for m, d in self.factors) + ")"
        if self.kind == "generic":
            return f"generic(m={self.m})"
        return f"table(file={self.file})"

    def ranges(self) -> list:
        """[(label, DegreeRange)] for every ranged degree, in factor order."""
        out = []
        for j, (_, d) in enumerate(self.factors):
            if isinstance(d, DegreeRange):
                out.append(("d" if self.kind == "pm" else f"d{j + 1}", d))
        return out

    def expand(self, diagonal: bool = False):
        """Yield ``(labels -> degree, concrete spec)`` over all ranged degrees."""
        rngs = self.ranges()
        if not rngs:
            yield {}, self
            return
        if diagonal:
            lengths = {len(r.values()) for _, r in rngs}
            if len(lengths) != 1:
                raise TargetSyntaxError("--diagonal needs ranges of equal length")
            combos = zip(*(r.values() for _, r in rngs))
        else:
            combos = itertools.product(*(r.values() for _, r in rngs))
        for combo in combos:
            it = iter(combo)
            factors = tuple((m, next(it) if isinstance(d, DegreeRange) else d) for m, d in self.factors)
            yield dict(zip((lab for lab, _ in rngs), combo)), replace(self, factors=factors)

    def build(self) -> ChernTarget:
        if self.ranges():
            raise TargetSyntaxError(f"{self} still contains degree ranges")
        if self.kind == "pm":
            (m, d), = self.factors
            return make_pm(m, d)
        if self.kind == "product":
            return make_product(self.factors)
        if self.kind == "generic":
            return make_generic(self.m)
        return load_table(self.file)


_TOKEN_RE = re.compile(r"\s*(?:(?P<range>\d+\s*\.\.\s*\d+)|(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),=]))")
_TABLE_RE = re.compile(r"\s*table\s*\(\s*file\s*=\s*(?P<path>\"[^\"]*\"|'[^']*'|[^\s()]+)\s*\)\s*\Z")


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if not mt:
            raise TargetSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
        kind = mt.lastgroup
        out.append((kind, mt.group(kind)))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text: str, allow_ranges: bool):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_ranges = allow_ranges

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        k, v = self.peek()
        if k is None or (kind and k != kind) or (value and v != value):
            want = value or kind
            raise TargetSyntaxError(f"expected {want!r} in {self.text!r}, found {v!r}")
        self.i += 1
        return v

    def done(self):
        if self.i != len(self.toks):
            raise TargetSyntaxError(f"trailing input {self.toks[self.i][1]!r} in {self.text!r}")

    def int_arg(self, key):
        self.take("name", key)
        self.take("punct", "=")
        v = int(self.take("int"))
        if v < 1:
            raise TargetSyntaxError(f"{key} must be a positive integer")
        return v

    def degree_arg(self):
        self.take("name", "d")
        self.take("punct", "=")
        k, v = self.peek()
        self.i += 1
        if k == "int":
            return int(v)
        if k == "name":
            return v
        if k == "range" and self.allow_ranges:
            lo, hi = (int(s) for s in v.split(".."))
            if lo > hi:
                raise TargetSyntaxError(f"empty range {v}")
            return DegreeRange(lo, hi)
        raise TargetSyntaxError(f"bad degree {v!r} in {self.text!r}")

    def factor(self):
        m = self.int_arg("m")
        self.take("punct", ",")
        return m, self.degree_arg()

    def parse(self) -> TargetSpec:
        head = self.take("name")
        self.take("punct", "(")
        if head == "pm":
            spec = TargetSpec("pm", (self.factor(),))
        elif head == "generic":
            spec = TargetSpec("generic", m=self.int_arg("m"))
        elif head == "product":
            factors = []
            while True:
                self.take("punct", "(")
                factors.append(self.factor())
                self.take("punct", ")")
                if self.peek() != ("punct", ","):
                    break
                self.take("punct", ",")
            spec = TargetSpec("product", tuple(factors))
        else:
            raise TargetSyntaxError(f"unknown target kind {head!r}")
        self.take("punct", ")")
        self.done()
        return spec


def parse_target(text: str, allow_ranges: bool = False) -> TargetSpec:
    mt = _TABLE_RE.match(text)
    if mt:
        path = mt.group("path")
        if path[0] in "\"'":
            path = path[1:-1]
        return TargetSpec("table", file=path)
    return _Parser(text, allow_ranges).parse()
