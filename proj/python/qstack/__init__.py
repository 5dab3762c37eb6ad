"""Quiver constructions, exact point counts over F_p and moment-map solves.

Every function returns plain Python data decoded from the core's JSON.
"""

import json

from . import _core
from ._core import Error, ParseError, __version__

__all__ = [
    "Error",
    "ParseError",
    "__version__",
    "parse",
    "canonical",
    "build",
    "count",
    "solve_nakajima",
    "check_higgs",
    "verify",
]


def parse(text):
    """Parse quiver text into {name, shape, framing, dims, document}."""
    return json.loads(_core.parse(text))


def canonical(text):
    """The canonical printed form of quiver text."""
    return _core.canonical(text)


def build(text, kind, at=None):
    """Build the "tilde", "double" or "frame" construction of a quiver."""
    return json.loads(_core.build(text, kind, at))


def count(text, p, dims=None, orbits=False):
    """Exact representation count, gauge group order and stacky count over F_p."""
    return json.loads(_core.count(text, p, dims or {}, orbits))


def solve_nakajima(text, dims=None, lam=None, tol=1e-10, seed=0, max_iter=200, starts=1,
                   frame=None):
    """Multi-start Levenberg-Marquardt solve of mu = lambda on the doubled framed quiver."""
    return json.loads(
        _core.solve_nakajima(text, dims or {}, lam or {}, tol, seed, max_iter, starts, frame))


def check_higgs(datum):
    """Integrability and diagram validity for {n, m, phi, field?}."""
    if not isinstance(datum, str):
        datum = json.dumps(datum)
    return json.loads(_core.check_higgs(datum))


def verify(suite, seed=0, cases=0):
    """Run a verification suite (or "all")."""
    return json.loads(_core.verify(suite, seed, cases))
