"""Python front end to the contentlab C++ library."""
import json

from . import _core
from ._core import ContentlabError, content, ring_size, run

__all__ = ["ContentlabError", "analyze", "content", "ring_size", "run", "verify_example1", "verify_theorems"]


def analyze(base, alg, n_max=8, timings=False, max_ring=4096, max_alg=4096):
    """Property report for the algebra `alg` over the ring `base` as a dict."""
    return json.loads(_core.analyze(base, alg, n_max, timings, max_ring, max_alg))


def verify_example1(depth=4):
    return json.loads(_core.verify_example1(depth))


def verify_theorems(moduli=(2, 3, 4, 5, 6, 8, 9, 12), depths=(2, 3), composites=True, reports=False):
    return json.loads(_core.verify_theorems(list(moduli), list(depths), composites, reports))
