"""Chern-number evaluators for concrete or symbolic (X, L).

A target turns a weight-m monomial in c1, x1..xm into the number (or
degree polynomial) obtained by evaluating it on [X].
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Sequence, Union

from .cohomology import C1, WeightError, x_name, x_ring, x_weight
from .polyring import (
    Generator,
    Monomial,
    Poly,
    PolySyntaxError,
    Ring,
    binomial,
    mono_exponent,
    mono_str,
    parse_monomial,
)

Degree = Union[int, str]


class TableError(ValueError):
    """Malformed or incomplete table of Chern numbers."""


def _x_index(name: str) -> int:
    return int(name[1:])


def _check_monomial(mono: Monomial, m: int) -> None:
    for n, _ in mono:
        if n != C1 and not (n[0] == "x" and n[1:].isdigit() and 1 <= _x_index(n) <= m):
            raise WeightError(f"{n!r} is not a class on X (dimension {m})")
    if x_weight(mono) != m:
        raise WeightError(f"monomial {mono_str(mono)} has weight {x_weight(mono)}, expected {m}")


def _degree_ring(degrees: Sequence[Degree]) -> Ring:
    names = []
    for d in degrees:
        if isinstance(d, str):
            if d not in names:
                names.append(d)
        elif not isinstance(d, int):
            raise TypeError(f"degree must be int or symbol name, got {d!r}")
    return Ring.parameters(names)


def _degree_poly(ring: Ring, d: Degree) -> Poly:
    return ring.gen(d) if isinstance(d, str) else ring.const(d)


class ChernTarget:
    kind = "abstract"

    def __init__(self, dimension: int, result_ring: Ring):
        if dimension < 1:
            raise ValueError("dimension must be >= 1")
        self.dimension = dimension
        self.result_ring = result_ring

    def eval_monomial(self, mono: Monomial) -> Poly:
        _check_monomial(mono, self.dimension)
        return self._eval(mono)

    def _eval(self, mono: Monomial) -> Poly:
        raise NotImplementedError

    def evaluate(self, p: Poly) -> Poly:
        """Evaluate a weight-m class in c1, x_i (any ring containing them)."""
        out = self.result_ring.zero()
        for mono, c in p.terms.items():
            out = out + c * self.eval_monomial(mono)
        return out


class ProjectiveSpaceTarget(ChernTarget):
    """X = P^m, L = O(d): c1 = d h, x_i = (-1)^i C(m+1, i) h^i, <h^m, [X]> = 1."""

    kind = "projective_space"

    def __init__(self, m: int, d: Degree):
        super().__init__(m, _degree_ring([d]))
        self.degree = d
        self._d = _degree_poly(self.result_ring, d)

    def _eval(self, mono):
        m = self.dimension
        value = 1
        for n, e in mono:
            if n != C1:
                i = _x_index(n)
                value *= ((-1) ** i * binomial(m + 1, i)) ** e
        return value * self._d ** mono_exponent(mono, C1)

    def __repr__(self):
        return f"ProjectiveSpaceTarget(m={self.dimension}, d={self.degree!r})"


class ProductTarget(ChernTarget):
    """X = P^{m_1} x ... x P^{m_r}, L = O(d_1, ..., d_r).

    c1 = sum d_j h_j and c(T*X) = prod (1 - h_j)^(m_j + 1), with h_j^(m_j+1) = 0
    and <h_1^{m_1} ... h_r^{m_r}, [X]> = 1.
    """

    kind = "product_of_projective_spaces"

    def __init__(self, factors: Sequence[tuple]):
        factors = [(int(mj), dj) for mj, dj in factors]
        if not factors:
            raise ValueError("need at least one factor")
        if any(mj < 1 for mj, _ in factors):
            raise ValueError("factor dimensions must be >= 1")
        m = sum(mj for mj, _ in factors)
        super().__init__(m, _degree_ring([dj for _, dj in factors]))
        self.factors = tuple(factors)

        hs = [f"_h{j}" for j in range(len(factors))]
        self._hset = frozenset(hs)
        self._hring = self.result_ring.union(Ring(Generator(h) for h in hs))
        self._top = tuple(sorted(zip(hs, (mj for mj, _ in factors))))
        bounds = dict(self._top)
        self._keep = lambda mono: all(e <= bounds[n] for n, e in mono if n in bounds)

        ring = self._hring
        c1 = ring.zero()
        total = ring.one()
        for (mj, dj), h in zip(factors, hs):
            c1 = c1 + _degree_poly(ring, dj).to_ring(ring) * ring.gen(h)
            total = total.mul((1 - ring.gen(h)) ** (mj + 1), keep=self._keep)
        self._c1 = c1
        self._x = [_weight_part(total, hs, i) for i in range(m + 1)]

    def _eval(self, mono):
        ring = self._hring
        acc = ring.one()
        for n, e in mono:
            base = self._c1 if n == C1 else self._x[_x_index(n)]
            for _ in range(e):
                acc = acc.mul(base, keep=self._keep)
        out = {}
        for hm, c in acc.terms.items():
            hpart = tuple((n, e) for n, e in hm if n in self._hset)
            if hpart == self._top:
                rest = tuple((n, e) for n, e in hm if (n, e) not in hpart)
                out[rest] = out.get(rest, 0) + c
        return Poly(self.result_ring, out)

    def __repr__(self):
        return f"ProductTarget({list(self.factors)!r})"


def _weight_part(p: Poly, hs: Sequence[str], i: int) -> Poly:
    hset = set(hs)
    return Poly(p.ring, {mono: c for mono, c in p.terms.items()
                         if sum(e for n, e in mono if n in hset) == i})


class TableTarget(ChernTarget):
    """Explicit Chern numbers, one per weight-m monomial."""

    kind = "table"

    def __init__(self, m: int, entries: Mapping[Monomial, Poly]):
        rings = {v.ring for v in entries.values()}
        if len(rings) > 1:
            raise TableError("table values live in different rings")
        super().__init__(m, rings.pop() if rings else Ring([]))
        for mono in entries:
            try:
                _check_monomial(mono, m)
            except WeightError as exc:
                raise TableError(str(exc)) from None
        self.entries = dict(entries)

    def _eval(self, mono):
        try:
            return self.entries[mono]
        except KeyError:
            raise TableError(f"no table entry for {mono_str(mono)}") from None

    def __repr__(self):
        return f"TableTarget(m={self.dimension}, {len(self.entries)} entries)"


class GenericTarget(ChernTarget):
    """Leaves Chern numbers formal: the result is a polynomial in c1, x_i."""

    kind = "generic"

    def __init__(self, m: int):
        super().__init__(m, x_ring(m))

    def _eval(self, mono):
        return Poly(self.result_ring, {mono: 1})

    def __repr__(self):
        return f"GenericTarget(m={self.dimension})"


def make_pm(m: int, d: Degree) -> ProjectiveSpaceTarget:
    return ProjectiveSpaceTarget(m, d)


def make_product(factors: Sequence[tuple]) -> ProductTarget:
    return ProductTarget(factors)


def make_generic(m: int) -> GenericTarget:
    return GenericTarget(m)


def make_table(m: int, entries: Mapping[str, Union[int, Poly]]) -> TableTarget:
    """Build a table target from ``{"c1^2": 9, "c1*x1": -9, ...}``.

    Values may also be polynomials in degree parameters (all in one ring).
    """
    ring = x_ring(m)
    polys = [v for v in entries.values() if isinstance(v, Poly)]
    value_ring = polys[0].ring if polys else Ring([])
    parsed = {}
    for key, value in entries.items():
        if not isinstance(key, str):
            raise TableError(f"table key {key!r} is not a string")
        try:
            mono = parse_monomial(key, ring)
        except PolySyntaxError as exc:
            raise TableError(f"malformed key {key!r}: {exc}") from None
        if mono in parsed:
            raise TableError(f"duplicate entry for {mono_str(mono)}")
        if isinstance(value, bool):
            raise TableError(f"value for {key!r} must be an integer")
        if isinstance(value, int):
            value = value_ring.const(value)
        elif isinstance(value, str) and value.strip().lstrip("-").isdigit():
            value = value_ring.const(int(value))
        elif not isinstance(value, Poly):
            raise TableError(f"value for {key!r} must be an integer")
        parsed[mono] = value
    return TableTarget(m, parsed)


def load_table(path) -> TableTarget:
    """Read a JSON document ``{"dimension": m, "entries": {monomial: int}}``."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise TableError(f"cannot read table {path}: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"dimension", "entries"}:
        raise TableError("table document needs exactly the fields 'dimension' and 'entries'")
    m, entries = doc["dimension"], doc["entries"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise TableError("'dimension' must be a positive integer")
    if not isinstance(entries, dict):
        raise TableError("'entries' must be an object")
    for v in entries.values():
        if isinstance(v, Poly) or not isinstance(v, (int, str)):
            raise TableError(f"table values must be integers, got {v!r}")
    return make_table(m, entries)


def table_from_target(target: ChernTarget) -> dict:
    """All weight-m Chern numbers of ``target`` as ``{monomial string: Poly}``."""
    return {mono_str(mono): target.eval_monomial(mono) for mono in top_monomials(target.dimension)}


def top_monomials(m: int) -> list:
    """Every monomial of X-weight exactly m in c1, x1..xm."""
    out = []

    def rec(i, remaining, acc):
        if i > m:
            if remaining == 0:
                out.append(tuple(sorted(acc)))
            return
        name = C1 if i == 0 else x_name(i)
        w = max(i, 1)
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - e * w, acc + ([(name, e)] if e else []))

    rec(0, m, [])
    return out
