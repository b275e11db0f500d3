"""Exact enumeration of nodal, cuspidal and tacnodal hypersurfaces via Euler classes."""

from .cohomology import Ambient, WeightError, integrate, pushforward_fiber, reduce
from .counts import CountResult, count, count_A1, count_A2, count_A2_det, count_A2_proj, count_A3, formula
from .polyring import Generator, Poly, Ring, binomial
from .singularity import SingClass
from .targets import load_table, make_generic, make_pm, make_product, make_table

__version__ = "0.1.0"

__all__ = [
    "Ambient", "CountResult", "Generator", "Poly", "Ring", "SingClass", "WeightError",
    "binomial", "count", "count_A1", "count_A2", "count_A2_det", "count_A2_proj", "count_A3",
    "formula", "integrate", "load_table", "make_generic", "make_pm", "make_product",
    "make_table", "pushforward_fiber", "reduce",
]
