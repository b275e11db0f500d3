"""Euler classes of the bundles whose sections cut out the singular loci.

All classes live in :func:`cohomology.cohomology_ring` of the given
dimension.  Twisted bundles E (x) M are handled by the splitting-principle
identity e(E (x) M) = sum_i c_i(E) c1(M)^(rank - i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cohomology import C1, HYPER, LAMBDA, WeightError, chern_x, cohomology_ring, x_name
from .polyring import Poly


@dataclass(frozen=True)
class TwistedBundleSpec:
    rank: int
    base_chern: Sequence[Poly]
    twist: Poly

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.base_chern) != self.rank + 1:
            raise ValueError(f"need {self.rank + 1} Chern classes, got {len(self.base_chern)}")
        if self.base_chern[0] != 1:
            raise ValueError("c_0 must be 1")
        for i, c in enumerate(self.base_chern):
            if not c.is_homogeneous(i):
                raise WeightError(f"c_{i} = {c} is not homogeneous of weight {i}")
        if not self.twist.is_homogeneous(1):
            raise WeightError(f"twist {self.twist} is not homogeneous of weight 1")


def euler_twisted(spec: TwistedBundleSpec) -> Poly:
    r = spec.rank
    out = spec.twist.ring.zero()
    for i, c in enumerate(spec.base_chern):
        out = out + c * spec.twist ** (r - i)
    return out


def _cotangent_twisted(m: int, twist: Poly) -> Poly:
    return euler_twisted(TwistedBundleSpec(m, chern_x(m), twist))


def _base(m: int):
    ring = cohomology_ring(m)
    return ring, ring.gen(HYPER), ring.gen(C1)


def euler_LA0(m: int) -> Poly:
    """gamma_D^* (x) L."""
    _, h, c1 = _base(m)
    return h + c1


def euler_VA1(m: int) -> Poly:
    """gamma_D^* (x) T*X (x) L."""
    _, h, c1 = _base(m)
    return _cotangent_twisted(m, h + c1)


def euler_LA2(m: int) -> Poly:
    """gamma_D^{*m} (x) (det T*X)^2 (x) L^m, the line carrying the Hessian determinant."""
    ring, h, c1 = _base(m)
    return m * h + 2 * ring.gen(x_name(1)) + m * c1


def euler_VPA2(m: int) -> Poly:
    """gamma-hat^* (x) gamma_D^* (x) T*X (x) L on P(TX)."""
    ring, h, c1 = _base(m)
    return _cotangent_twisted(m, ring.gen(LAMBDA) + h + c1)


def euler_LPA3(m: int) -> Poly:
    """gamma-hat^{*3} (x) gamma_D^* (x) L on P(TX)."""
    ring, h, c1 = _base(m)
    return 3 * ring.gen(LAMBDA) + h + c1
