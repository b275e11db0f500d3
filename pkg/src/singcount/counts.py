"""Counting pipelines: Euler-class products integrated over D_k x X or D_k x P(TX)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import closed_forms
from .bundles import euler_LA0, euler_LA2, euler_LPA3, euler_VA1, euler_VPA2
from .closed_forms import DiscrepancyReport, compare
from .cohomology import Ambient, WeightError, integrate
from .polyring import Poly
from .singularity import SingClass
from .targets import ChernTarget, GenericTarget, ProductTarget, ProjectiveSpaceTarget

log = logging.getLogger(__name__)

ROUTES = ("A1", "A2_det", "A2_proj", "A3")


@dataclass
class CountResult:
    value: Poly
    route: str
    checks: list = field(default_factory=list)      # (name, passed)
    notes: list = field(default_factory=list)       # discrepancy strings
    reports: list = field(default_factory=list)     # DiscrepancyReport, equal or not

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def discrepancies(self) -> list:
        return [r for r in self.reports if not r.equal]


def integrand(route: str, m: int):
    """The truncated Euler-class product and its ambient for ``route``."""
    if route == "A1":
        amb = Ambient(m, 1)
        factors = (euler_LA0(m), euler_VA1(m))
    elif route == "A2_det":
        amb = Ambient(m, 2)
        factors = (euler_LA0(m), euler_VA1(m), euler_LA2(m))
    elif route == "A2_proj":
        amb = Ambient(m, 2, projectivized=True)
        factors = (euler_LA0(m), euler_VA1(m), euler_VPA2(m))
    elif route == "A3":
        amb = Ambient(m, 3, projectivized=True)
        factors = (euler_LA0(m), euler_VA1(m), euler_VPA2(m), euler_LPA3(m))
    else:
        raise ValueError(f"unknown route {route!r}")
    total = 0
    for f in factors:
        (w,) = f.weights()
        total += w
    if total != amb.dimension:
        raise WeightError(f"{route}: factor weights sum to {total}, ambient has dimension {amb.dimension}")
    p = amb.product(*factors)
    if not p.is_homogeneous(amb.dimension):
        raise WeightError(f"{route}: integrand is not homogeneous of weight {amb.dimension}")
    return p, amb


def _run(route: str, target: ChernTarget) -> CountResult:
    m = target.dimension
    p, amb = integrand(route, m)
    value = integrate(p, amb, target)
    return CountResult(value, route, checks=[("homogeneity", True)])


def _cross_check(result: CountResult, sing: SingClass, target: ChernTarget) -> CountResult:
    m = target.dimension
    reference = target.evaluate(closed_forms.formula_closed(sing, m))
    rep = compare(result.value, reference, f"{sing} general formula on {target!r}")
    if sing is SingClass.A3 and m == 1:
        # the printed A3 sums are not meant for curves; report, don't fail
        _add_report(result, rep)
    else:
        result.checks.append(("general_formula", rep.equal))
        result.reports.append(rep)

    if isinstance(target, ProjectiveSpaceTarget):
        d = target.degree
        if not (sing is SingClass.A3 and m < 2):
            _add_report(result, compare(result.value, closed_forms.pm_closed(sing, m, d),
                                        f"{sing} printed P^{m} formula, d={d}"))
        if m == 2:
            _add_report(result, compare(result.value, closed_forms.pm_closed_m2(sing, d),
                                        f"{sing} printed P^2 line, d={d}"))
    elif isinstance(target, ProductTarget) and [f[0] for f in target.factors] == [1, 1]:
        (_, d1), (_, d2) = target.factors
        _add_report(result, compare(result.value, closed_forms.p1p1_closed(sing, d1, d2),
                                    f"{sing} printed P1xP1 formula, d1={d1}, d2={d2}"))
    return result


def _add_report(result: CountResult, rep: DiscrepancyReport) -> None:
    result.reports.append(rep)
    if not rep.equal:
        log.info("discrepancy: %s", rep)
        result.notes.append(str(rep))


def count_A1(target: ChernTarget, cross_check: bool = True) -> CountResult:
    result = _run("A1", target)
    return _cross_check(result, SingClass.A1, target) if cross_check else result


def count_A2_det(target: ChernTarget, cross_check: bool = True) -> CountResult:
    result = _run("A2_det", target)
    return _cross_check(result, SingClass.A2, target) if cross_check else result


def count_A2_proj(target: ChernTarget, cross_check: bool = True) -> CountResult:
    result = _run("A2_proj", target)
    return _cross_check(result, SingClass.A2, target) if cross_check else result


def count_A2(target: ChernTarget, route: str = "det", verify: bool = False,
             cross_check: bool = True) -> CountResult:
    """Cusp count; ``verify`` also runs the other route and records agreement."""
    if route not in ("det", "proj"):
        raise ValueError(f"route must be 'det' or 'proj', not {route!r}")
    primary, other = (count_A2_det, count_A2_proj) if route == "det" else (count_A2_proj, count_A2_det)
    result = primary(target, cross_check=cross_check)
    if verify:
        alt = other(target, cross_check=False)
        result.checks.append(("route_agreement", alt.value == result.value))
    return result


def count_A3(target: ChernTarget, cross_check: bool = True) -> CountResult:
    result = _run("A3", target)
    return _cross_check(result, SingClass.A3, target) if cross_check else result


def count(sing, target: ChernTarget, route: str | None = None, verify: bool = False,
          cross_check: bool = True) -> CountResult:
    sing = SingClass.parse(sing)
    if route is not None and sing is not SingClass.A2:
        raise ValueError("--route only applies to A2")
    if sing is SingClass.A1:
        return count_A1(target, cross_check)
    if sing is SingClass.A2:
        return count_A2(target, route or "det", verify, cross_check)
    return count_A3(target, cross_check)


def formula(sing, m: int, route: str | None = None) -> Poly:
    """Generic count as a polynomial in c1, x1..xm."""
    sing = SingClass.parse(sing)
    target = GenericTarget(m)
    if sing is SingClass.A2 and route == "proj":
        return count_A2_proj(target, cross_check=False).value
    return count(sing, target, route=route, cross_check=False).value
