"""Named access to the supported polytopes and their cached complexes.

The frame of record per name is the one the published tables use: the 0/1
frame for the tesseract, the canonical centered frames for the 120-cell and
600-cell.  Metric variants are centered and unit-edge normalized, which the
measure module requires.  Complexes are cached per process; a rescaled
complex shares the combinatorics of the cached one.
"""

from __future__ import annotations

from dataclasses import replace
from functools import lru_cache

from . import build, incidence
from .build import Polytope
from .golden import GoldenNumber, ONE, golden_sqrt
from .incidence import IncidenceComplex

NAMES = ("tesseract", "120-cell", "600-cell")


class UnknownPolytopeError(ValueError):
    def __init__(self, name: str) -> None:
        super().__init__(
            f"unknown polytope {name!r}; supported: {', '.join(NAMES)}")


def normalize_name(name: str) -> str:
    key = name.lower().replace("-", "").replace("_", "").replace(" ", "")
    mapping = {"tesseract": "tesseract", "120cell": "120-cell",
               "600cell": "600-cell"}
    if key not in mapping:
        raise UnknownPolytopeError(name)
    return mapping[key]


def polytope(name: str) -> Polytope:
    """The frame-of-record build for a name."""
    name = normalize_name(name)
    if name == "tesseract":
        return build.build_tesseract()
    if name == "120-cell":
        return build.build_120cell()
    return build.build_600cell()


def rescale_complex(cx: IncidenceComplex, factor: GoldenNumber) -> IncidenceComplex:
    """Same combinatorics over an exactly rescaled vertex set."""
    return replace(cx, polytope=build.rescale(cx.polytope, factor))


@lru_cache(maxsize=None)
def complex_for(name: str) -> IncidenceComplex:
    return incidence.build_complex(polytope(name))


@lru_cache(maxsize=None)
def metric_complex(name: str) -> IncidenceComplex:
    """Centered, unit-edge complex (shares combinatorics with complex_for)."""
    name = normalize_name(name)
    if name == "tesseract":
        return incidence.build_complex(build.build_tesseract(centered=True))
    cx = complex_for(name)
    edge = golden_sqrt(build.min_squared_distance(cx.polytope))
    if edge is None:
        raise ValueError("edge length does not lie in Q(sqrt5)")
    if edge == ONE:
        return cx
    return rescale_complex(cx, ONE / edge)
