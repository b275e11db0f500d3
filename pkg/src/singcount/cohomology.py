"""Truncated cohomology of D_k x X and D_k x P(TX), and integration over it.

Generators:

* ``H``   -- hyperplane class of the slice D_k ~ P^k, so H^(k+1) = 0;
* ``lam`` -- first Chern class of the dual tautological line on P(TX);
* ``c1``  -- first Chern class of L;
* ``x1..xm`` -- Chern classes of the cotangent bundle T*X (weight i).

On P(TX) the class ``lam`` satisfies

    lam^m = x1 lam^(m-1) - x2 lam^(m-2) + ... + (-1)^(m+1) xm

which is the projective bundle relation written in the T*X basis
(c_i(TX) = (-1)^i x_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polyring import Generator, Monomial, Poly, Ring, mono_exponent, mono_mul, mono_without

HYPER = "H"
LAMBDA = "lam"
C1 = "c1"


class WeightError(ValueError):
    """A class of the wrong weight reached a place that needs a fixed weight."""


def x_name(i: int) -> str:
    return f"x{i}"


@lru_cache(maxsize=None)
def x_ring(m: int) -> Ring:
    """Classes pulled back from X: c1 and x1..xm."""
    if m < 1:
        raise ValueError("dimension must be >= 1")
    return Ring([Generator(C1, weight=1)] + [Generator(x_name(i), weight=i) for i in range(1, m + 1)])


@lru_cache(maxsize=None)
def cohomology_ring(m: int) -> Ring:
    return x_ring(m).union(Ring([Generator(HYPER, weight=1), Generator(LAMBDA, weight=1)]))


def x_weight(mono: Monomial) -> int:
    """Weight of the part of ``mono`` coming from X (c1 and the x_i)."""
    w = 0
    for n, e in mono:
        if n == C1:
            w += e
        elif n[0] == "x":
            w += int(n[1:]) * e
    return w


def chern_x(m: int) -> list:
    """[1, x1, ..., xm] in the cohomology ring of dimension m."""
    ring = cohomology_ring(m)
    return [ring.one()] + [ring.gen(x_name(i)) for i in range(1, m + 1)]


@dataclass(frozen=True)
class Ambient:
    """D_k x X (or D_k x P(TX) when ``projectivized``) with dim X = m."""

    m: int
    k: int
    projectivized: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")

    @property
    def ring(self) -> Ring:
        return cohomology_ring(self.m)

    @property
    def dimension(self) -> int:
        return self.k + (2 * self.m - 1 if self.projectivized else self.m)

    def keep(self, mono: Monomial) -> bool:
        # partial products violating either bound can never reach the top class
        return mono_exponent(mono, HYPER) <= self.k and x_weight(mono) <= self.m

    def check(self, p: Poly) -> None:
        if p.ring != self.ring:
            raise ValueError(f"polynomial ring {p.ring!r} does not match ambient ring")
        if not self.projectivized and LAMBDA in p.names():
            raise ValueError("lam appears but the ambient is not projectivized")

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a.mul(b, keep=self.keep)

    def product(self, *factors: Poly) -> Poly:
        out = self.ring.one()
        for f in factors:
            self.check(f)
            out = self.mul(out, f)
        return out


def grothendieck_relation(m: int) -> Poly:
    """Right-hand side of lam^m = sum_{i=1..m} (-1)^(i+1) x_i lam^(m-i)."""
    ring = cohomology_ring(m)
    lam = ring.gen(LAMBDA)
    out = ring.zero()
    for i in range(1, m + 1):
        out = out + (-1) ** (i + 1) * ring.gen(x_name(i)) * lam ** (m - i)
    return out


@lru_cache(maxsize=None)
def _lambda_power(m: int, e: int) -> Poly:
    """Normal form of lam^e on P(TX): lam-degree < m, X-weight <= m."""
    ring = cohomology_ring(m)
    if e < m:
        return ring.gen(LAMBDA) ** e
    keep = Ambient(m, 0, True).keep
    prev = _lambda_power(m, e - 1)
    lam = ring.gen(LAMBDA)
    shifted = prev.mul(lam, keep=keep)
    top = shifted.coefficient_of(LAMBDA, m)
    rest = shifted - top.mul(lam ** m)
    return rest + top.mul(grothendieck_relation(m), keep=keep)


def reduce(p: Poly, amb: Ambient) -> Poly:
    """Canonical representative of ``p`` in the cohomology of ``amb``."""
    amb.check(p)
    m = amb.m
    out: dict = {}
    for mono, c in p.terms.items():
        if not amb.keep(mono):
            continue
        e = mono_exponent(mono, LAMBDA)
        if e < m:
            out[mono] = out.get(mono, 0) + c
            continue
        base = mono_without(mono, LAMBDA)
        for nf_mono, nf_c in _lambda_power(m, e).terms.items():
            new = mono_mul(base, nf_mono)
            if amb.keep(new):
                out[new] = out.get(new, 0) + c * nf_c
    return Poly(amb.ring, out)


def pushforward_fiber(p: Poly, amb: Ambient) -> Poly:
    """Integrate over the P^(m-1) fibres of P(TX) -> X."""
    if not amb.projectivized:
        raise ValueError("fibre integration needs a projectivized ambient")
    return reduce(p, amb).coefficient_of(LAMBDA, amb.m - 1)


def integrate(p: Poly, amb: Ambient, target) -> Poly:
    """Evaluate a top-degree class of ``amb`` on its fundamental class.

    Integration runs in three stages: against the slice D_k (coefficient of
    H^k), along the fibres of P(TX) when projectivized (coefficient of
    lam^(m-1)), and finally on [X] through ``target``.
    """
    amb.check(p)
    if target.dimension != amb.m:
        raise ValueError(f"target has dimension {target.dimension}, ambient needs {amb.m}")
    if not p.is_homogeneous(amb.dimension):
        raise WeightError(
            f"integrand weights {sorted(p.weights())} differ from ambient dimension {amb.dimension}")
    q = reduce(p, amb).coefficient_of(HYPER, amb.k)
    if amb.projectivized:
        q = q.coefficient_of(LAMBDA, amb.m - 1)
    out = target.result_ring.zero()
    for mono, c in q.terms.items():
        if x_weight(mono) != amb.m or mono_exponent(mono, LAMBDA) or mono_exponent(mono, HYPER):
            raise WeightError(f"surviving monomial {mono} is not a top class of X")
        out = out + c * target.eval_monomial(mono)
    return out
