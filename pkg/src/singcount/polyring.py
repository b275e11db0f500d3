"""Exact sparse polynomials over the integers in named, weighted generators.

Coefficients are Python ints, so nothing ever overflows.  Generators come in
two kinds: graded cohomology generators (weight >= 1) and degree parameters
(weight 0).  Both live in the same :class:`Ring`, so a count that depends on
a symbolic degree is just another :class:`Poly`.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by name, with no
zero exponents; ``()`` is the unit monomial.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Union

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by name

COHOMOLOGY = "cohomology"
PARAMETER = "parameter"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ContextError(ValueError):
    """Operands belong to different generator contexts."""


class PolySyntaxError(ValueError):
    """Text could not be parsed as a polynomial or monomial."""


@dataclass(frozen=True)
class Generator:
    name: str
    kind: str = COHOMOLOGY
    weight: int = 1

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"bad generator name {self.name!r}")
        if self.kind == COHOMOLOGY:
            if self.weight < 1:
                raise ValueError(f"cohomology generator {self.name} needs weight >= 1")
        elif self.kind == PARAMETER:
            if self.weight != 0:
                raise ValueError(f"parameter {self.name} must have weight 0")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")


def parameter(name: str) -> Generator:
    return Generator(name, PARAMETER, 0)


class Ring:
    """A generator context.  Rings with the same generators compare equal."""

    def __init__(self, generators: Iterable[Generator]):
        gens = {}
        for g in generators:
            if g.name in gens:
                raise ValueError(f"duplicate generator {g.name!r}")
            gens[g.name] = g
        self._gens = MappingProxyType(dict(sorted(gens.items())))
        self._key = tuple(self._gens.values())

    @classmethod
    def parameters(cls, names: Iterable[str]) -> "Ring":
        return cls(parameter(n) for n in names)

    @property
    def generators(self) -> Mapping[str, Generator]:
        return self._gens

    def __contains__(self, name) -> bool:
        return name in self._gens

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return "Ring(" + ", ".join(f"{g.name}:{g.weight}" for g in self._key) + ")"

    def union(self, other: "Ring") -> "Ring":
        gens = dict(self._gens)
        for name, g in other._gens.items():
            if name in gens and gens[name] != g:
                raise ContextError(f"generator {name!r} declared twice with different data")
            gens[name] = g
        return Ring(gens.values())

    # constructors
    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(): 1})

    def const(self, c: int) -> "Poly":
        return Poly(self, {(): int(c)})

    def gen(self, name: str) -> "Poly":
        if name not in self._gens:
            raise ContextError(f"{name!r} is not a generator of {self!r}")
        return Poly(self, {((name, 1),): 1})

    def weight(self, mono: Monomial) -> int:
        return sum(self._gens[n].weight * e for n, e in mono)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def monomial(self, text: str) -> Monomial:
        return parse_monomial(text, self)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for n, e in b:
        d[n] = d.get(n, 0) + e
    return tuple(sorted(d.items()))


def mono_exponent(mono: Monomial, name: str) -> int:
    for n, e in mono:
        if n == name:
            return e
    return 0


def mono_without(mono: Monomial, name: str) -> Monomial:
    return tuple((n, e) for n, e in mono if n != name)


def mono_str(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)


Coercible = Union["Poly", int]


class Poly:
    """Immutable polynomial; canonical (no zero coefficients) by construction."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, int]):
        self.ring = ring
        self._terms = {m: int(c) for m, c in terms.items() if c}
        self._hash = None

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((), 0)

    def names(self) -> set:
        return {n for m in self._terms for n, _ in m}

    def weights(self) -> set:
        return {self.ring.weight(m) for m in self._terms}

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if weight is None:
            return len(ws) <= 1
        return ws <= {weight}

    # arithmetic
    def _coerce(self, other: Coercible) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ContextError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other: Coercible) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "Poly":
        return (-self) + other

    def mul(self, other: Coercible, keep: Callable[[Monomial], bool] | None = None) -> "Poly":
        """Product, dropping every monomial for which ``keep`` is false."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot multiply Poly by {type(other).__name__}")
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                if keep is not None and not keep(m):
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.ring, out)

    def __mul__(self, other: Coercible) -> "Poly":
        if not isinstance(other, (Poly, int)):
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        return poly_pow(self, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # structure
    def coefficient_of(self, name: str, exponent: int) -> "Poly":
        if name not in self.ring:
            raise ContextError(f"{name!r} is not a generator of {self.ring!r}")
        out = {}
        for m, c in self._terms.items():
            if mono_exponent(m, name) == exponent:
                out[mono_without(m, name)] = c
        return Poly(self.ring, out)

    def subs(self, values: Mapping[str, Coercible]) -> "Poly":
        """Substitute generators by polynomials (or ints) of the same ring."""
        vals = {n: self._coerce(v) for n, v in values.items()}
        out = self.ring.zero()
        powers: dict = {}
        for m, c in self._terms.items():
            kept = []
            term = self.ring.const(c)
            for n, e in m:
                if n in vals:
                    key = (n, e)
                    if key not in powers:
                        powers[key] = vals[n] ** e
                    term = term * powers[key]
                else:
                    kept.append((n, e))
            out = out + term * Poly(self.ring, {tuple(kept): 1})
        return out

    def to_ring(self, ring: Ring) -> "Poly":
        """Re-home this polynomial in ``ring``, which must know every name used."""
        missing = self.names() - set(ring.generators)
        if missing:
            raise ContextError(f"generators {sorted(missing)} not in {ring!r}")
        return Poly(ring, self._terms)

    def sorted_terms(self) -> list:
        names = sorted(self.names())
        ring = self.ring

        def key(item):
            m = dict(item[0])
            return (-ring.weight(item[0]),) + tuple(-m.get(n, 0) for n in names)

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = mono_str(m)
            else:
                body = f"{a}*{mono_str(m)}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_pow(a: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("negative exponent")
    result = a.ring.one()
    base = a
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def coefficient_of(p: Poly, name: str, exponent: int) -> Poly:
    return p.coefficient_of(name, exponent)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero for k < 0 or k > n >= 0; generalized for n < 0."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** k * math.comb(k - n - 1, k)


# --- text form ---------------------------------------------------------------

_FACTOR_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*\Z")


def parse_monomial(text: str, ring: Ring) -> Monomial:
    """Parse ``c1^2*x1`` style text.  ``1`` is the unit monomial."""
    text = text.strip()
    if text == "1":
        return ()
    if not text:
        raise PolySyntaxError("empty monomial")
    exps: dict = {}
    for factor in text.split("*"):
        mt = _FACTOR_RE.match(factor)
        if not mt:
            raise PolySyntaxError(f"bad factor {factor!r} in {text!r}")
        name, e = mt.group(1), int(mt.group(2) or 1)
        if name not in ring:
            raise PolySyntaxError(f"unknown generator {name!r} in {text!r}")
        if name in exps:
            raise PolySyntaxError(f"generator {name!r} repeated in {text!r}")
        if e == 0:
            raise PolySyntaxError(f"zero exponent in {text!r}")
        exps[name] = e
    return tuple(sorted(exps.items()))


_TERM_SPLIT_RE = re.compile(r"([+-])")


def parse_poly(text: str, ring: Ring) -> Poly:
    """Inverse of ``str(Poly)``; also tolerates extra whitespace and ``2*3``-free input."""
    s = text.strip()
    if not s:
        raise PolySyntaxError("empty polynomial")
    pieces = _TERM_SPLIT_RE.split(s)
    if pieces[0].strip() == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    if len(pieces) % 2:
        raise PolySyntaxError(f"dangling sign in {text!r}")
    out: dict = {}
    for sign, body in zip(pieces[::2], pieces[1::2]):
        body = body.strip()
        if not body:
            raise PolySyntaxError(f"empty term in {text!r}")
        head, _, rest = body.partition("*")
        if head.strip().isdigit():
            coeff = int(head)
            mono = parse_monomial(rest, ring) if rest else ()
        else:
            coeff = 1
            mono = parse_monomial(body, ring)
        if sign == "-":
            coeff = -coeff
        out[mono] = out.get(mono, 0) + coeff
    return Poly(ring, out)
