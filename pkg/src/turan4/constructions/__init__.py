"""Generators for the 4-graph families and a by-name registry."""

from __future__ import annotations

from ..errors import UnknownConstruction
from ..hypergraph import LabeledFourGraph
from .circular import CircularPart, CircularSpec, circular_build, circular_edge_formula, zero_sum_cube
from .expansion import ExpansionSpec, example1_spec, example2_spec, expansion_build, expansion_edge_formula
from .hm import HmLambdaSpec, hm_build, hm_edge_formula, hm_invariant_suite
from .parity import ParitySpec, find_min_parity_matrix, parity_construction
from .rainbow import rainbow_build, rainbow_circular_part, rainbow_counts
from .small import k5_line_construction, two_k6_construction, z2cube_construction

NAMES = ("parity", "k5line", "twok6", "z2cube", "expansion", "circular", "rainbow", "hm")


def circular_part(name: str, rule: str = "swapped") -> CircularPart:
    if name == "zerosum":
        return zero_sum_cube()
    if name == "rainbow1":
        return rainbow_circular_part(1, rule)
    raise UnknownConstruction(f"unknown circular part {name!r}")


def build(name: str, **p) -> LabeledFourGraph:
    """Build a construction from plain parameters, as the command line does."""
    if name == "parity":
        n, m = p.get("n", 3), p.get("m", 3)
        if p.get("random"):
            return parity_construction(ParitySpec.random(n, m, p.get("seed", 0)))
        return parity_construction(ParitySpec.zero(n, m))
    if name == "k5line":
        return k5_line_construction()
    if name == "twok6":
        return two_k6_construction(p.get("variant", 0))
    if name == "z2cube":
        return z2cube_construction()
    if name == "expansion":
        maker = {1: example1_spec, 2: example2_spec}.get(p.get("example", 1))
        if maker is None:
            raise UnknownConstruction("expansion example must be 1 or 2")
        return expansion_build(maker(p.get("size", 2)))
    if name == "circular":
        part = circular_part(p.get("part", "zerosum"), p.get("rule", "swapped"))
        return circular_build(CircularSpec.uniform(part, p.get("m", 2)), validate=p.get("validate", True))
    if name == "rainbow":
        return rainbow_build(p.get("k", 2), p.get("rule", "swapped"))
    if name == "hm":
        return hm_build(HmLambdaSpec(p.get("m", 4), p.get("lam", 1)))
    raise UnknownConstruction(f"unknown construction {name!r}; choose from {', '.join(NAMES)}")


__all__ = [
    "NAMES", "build", "circular_part",
    "CircularPart", "CircularSpec", "circular_build", "circular_edge_formula", "zero_sum_cube",
    "ExpansionSpec", "example1_spec", "example2_spec", "expansion_build", "expansion_edge_formula",
    "HmLambdaSpec", "hm_build", "hm_edge_formula", "hm_invariant_suite",
    "ParitySpec", "find_min_parity_matrix", "parity_construction",
    "rainbow_build", "rainbow_circular_part", "rainbow_counts",
    "k5_line_construction", "two_k6_construction", "z2cube_construction",
]
