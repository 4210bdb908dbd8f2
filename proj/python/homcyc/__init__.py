"""Exact Hochschild, cyclic and periodic (co)homology of Hom-associative algebras."""

import json
from fractions import Fraction

from . import _homcyc
from ._homcyc import (
    Algebra,
    Error,
    FormatError,
    InvariantError,
    PreconditionError,
    ValidationError,
)

__all__ = [
    "Algebra", "Error", "FormatError", "InvariantError", "PreconditionError", "ValidationError",
    "load", "algebra", "validate", "betti", "hochschild_homology", "hochschild_cohomology",
    "cyclic_homology", "cyclic_cohomology", "periodic_homology", "periodic_cohomology", "connes_bB",
    "yau_twist", "a_circ", "trace_space", "is_cyclic_cocycle", "derivation_cocycle",
]


def _scalars(x):
    # Fractions and ints go over as exact strings
    if isinstance(x, (list, tuple)):
        return [_scalars(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; use int, str or Fraction")
    return x if isinstance(x, str) else int(x)


def _dump(x):
    return json.dumps(_scalars(x))


def load(path):
    return _homcyc.load(str(path))


def algebra(name, basis, mul, alpha):
    """mul[i][j] = coordinates of e_i e_j; alpha given by rows."""
    data = {"name": name, "basis": list(basis), "mul": _scalars(mul), "alpha": _scalars(alpha)}
    return _homcyc.algebra_from_json(json.dumps(data))


def validate(data):
    if isinstance(data, Algebra):
        data = json.loads(data.to_json())
    return json.loads(_homcyc.validate(json.dumps({**data, "mul": _scalars(data["mul"]),
                                                   "alpha": _scalars(data["alpha"])})))


def betti(report):
    return report["betti"]


def hochschild_homology(a, max_degree, representatives=False):
    return json.loads(_homcyc.hochschild_homology(a, max_degree, representatives))


def hochschild_cohomology(a, max_degree, representatives=False):
    return json.loads(_homcyc.hochschild_cohomology(a, max_degree, representatives))


def cyclic_homology(a, max_degree, method="both", columns=-1):
    return json.loads(_homcyc.cyclic_homology(a, max_degree, method, columns))


def cyclic_cohomology(a, max_degree, method="both", columns=-1):
    return json.loads(_homcyc.cyclic_cohomology(a, max_degree, method, columns))


def periodic_homology(a, max_degree, window=-1):
    return json.loads(_homcyc.periodic_homology(a, max_degree, window))


def periodic_cohomology(a, max_degree, window=-1):
    return json.loads(_homcyc.periodic_cohomology(a, max_degree, window))


def connes_bB(a, max_degree):
    return json.loads(_homcyc.connes_bB(a, max_degree))


def yau_twist(a, endo, name=""):
    return _homcyc.yau_twist(a, _dump(endo), name)


def a_circ(a):
    return json.loads(_homcyc.a_circ(a))


def trace_space(a):
    return json.loads(_homcyc.trace_space(a))


def is_cyclic_cocycle(a, degree, coords):
    return _homcyc.is_cyclic_cocycle(a, degree, _dump(coords))


def derivation_cocycle(a, rho, trace):
    return json.loads(_homcyc.derivation_cocycle(a, _dump(rho), _dump(trace)))
