"""Printed closed-form counts, kept verbatim as independent references.

Nothing here is derived from the Euler-class engine.  Where a printed
formula disagrees with the engine, :func:`compare` reports it; the formulas
are never corrected in place.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import C1, x_name, x_ring
from .polyring import Poly, Ring, binomial
from .singularity import SingClass
from .targets import Degree, _degree_poly, _degree_ring


@dataclass(frozen=True)
class DiscrepancyReport:
    context: str
    engine_value: Poly
    paper_value: Poly
    equal: bool

    def to_dict(self) -> dict:
        return {
            "context": self.context,
            "engine_value": str(self.engine_value),
            "paper_value": str(self.paper_value),
            "equal": self.equal,
        }

    def __str__(self) -> str:
        rel = "==" if self.equal else "!="
        return f"{self.context}: engine {self.engine_value} {rel} printed {self.paper_value}"


def compare(engine: Poly, reference: Poly, context: str) -> DiscrepancyReport:
    if engine.ring != reference.ring:
        ring = engine.ring.union(reference.ring)
        equal = engine.to_ring(ring) == reference.to_ring(ring)
    else:
        equal = engine == reference
    return DiscrepancyReport(context, engine, reference, equal)


def _xi(ring: Ring, i: int) -> Poly:
    return ring.one() if i == 0 else ring.gen(x_name(i))


def formula_closed(sing: SingClass, m: int) -> Poly:
    """Generic counts as polynomials in c1, x1..xm (x0 = 1)."""
    sing = SingClass.parse(sing)
    if m < 1:
        raise ValueError("m must be >= 1")
    ring = x_ring(m)
    c1 = ring.gen(C1)
    x1 = ring.gen(x_name(1))
    out = ring.zero()
    if sing is SingClass.A1:
        for i in range(m + 1):
            out += (m + 1 - i) * _xi(ring, i) * c1 ** (m - i)
    elif sing is SingClass.A2:
        for i in range(m + 1):
            out += m * binomial(m + 2 - i, 2) * _xi(ring, i) * c1 ** (m - i)
        for i in range(m):
            out += 2 * binomial(m + 1 - i, 2) * x1 * _xi(ring, i) * c1 ** (m - i - 1)
    else:
        # (3m^2 - m)/2 = m(3m - 1)/2 is always an integer
        half = m * (3 * m - 1) // 2
        for i in range(m - 1):
            t2 = binomial(m + 1 - i, 3) * (half * c1 ** 2 + (6 * m - 1) * c1 * x1 + 6 * x1 ** 2)
            out += t2 * c1 ** (m - i - 2) * _xi(ring, i)
        for i in range(m):
            t1 = binomial(m + 1 - i, 2) * ((3 * m * m - m) * c1 + (6 * m - 1) * x1)
            out += t1 * c1 ** (m - i - 1) * _xi(ring, i)
        for i in range(m + 1):
            t0 = binomial(m + 1 - i, 1) * half
            out += t0 * c1 ** (m - i) * _xi(ring, i)
    return out


def _exact_div(p: Poly, n: int) -> Poly:
    out = {}
    for mono, c in p.terms.items():
        q, r = divmod(c, n)
        if r:
            raise ArithmeticError(f"{p} is not divisible by {n}")
        out[mono] = q
    return Poly(p.ring, out)


def pm_closed(sing: SingClass, m: int, d: Degree) -> Poly:
    """Printed specialisations to X = P^m, L = O(d)."""
    sing = SingClass.parse(sing)
    ring = _degree_ring([d])
    dd = _degree_poly(ring, d)
    if sing is SingClass.A1:
        return (m + 1) * (dd - 1) ** m
    if sing is SingClass.A2:
        return _exact_div(m * (m + 1) * (m + 2) * (dd - 1) ** (m - 1) * (dd - 2), 2)
    if m < 2:
        raise ValueError("the printed P^m tacnode formula needs m >= 2")
    m2 = m * m + 2 * m - 1
    m1 = -12 * m * m - 28 * m + 8
    m0 = 3 * m * m + 8 * m - 3
    inner = m2 * dd ** 2 + m1 * dd + m0
    return _exact_div(m * (m + 1) * (m + 2) * (dd - 1) ** (m - 2) * inner, 12)


def pm_closed_m2(sing: SingClass, d: Degree) -> Poly:
    """The separately printed m = 2 line: 3(d-1)^2, 12(d-1)(d-2), 50d^2 - 192d + 168."""
    sing = SingClass.parse(sing)
    ring = _degree_ring([d])
    dd = _degree_poly(ring, d)
    if sing is SingClass.A1:
        return 3 * (dd - 1) ** 2
    if sing is SingClass.A2:
        return 12 * (dd - 1) * (dd - 2)
    return 50 * dd ** 2 - 192 * dd + 168


def p1p1_closed(sing: SingClass, d1: Degree, d2: Degree) -> Poly:
    """Printed counts on P^1 x P^1 with L = O(d1, d2)."""
    sing = SingClass.parse(sing)
    ring = _degree_ring([d1, d2])
    a, b = _degree_poly(ring, d1), _degree_poly(ring, d2)
    if sing is SingClass.A1:
        return 6 * a * b - 4 * (a + b) + 4
    if sing is SingClass.A2:
        return 24 * (a - 1) * (b - 1)
    return 100 * a * b - 128 * (a + b) + 136
