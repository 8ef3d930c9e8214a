"""Exact computations with initial algebras of Laurent polynomial subalgebras.

Modules:

* ``orders``: group orders on Z^n given by rational weight matrices
* ``laurent``: sparse Laurent polynomials over Q
* ``cones``: rational cones with distinguished faces and region labels
* ``construction``: validated construction data and filtered spanning sets
* ``sagbi``: truncated degree sets, minimal generators, subduction
* ``analysis``: completeness, injectivity and finiteness diagnostics
* ``cli``: the ``initalg`` command
"""

__version__ = "0.1.0"

from .orders import TermOrder, lex, grlex, weight_order, doubled_order, order_from_weights
from .laurent import LaurentPoly
from .cones import ConeWithFaces
from .construction import ConstructionError, ConstructionSpec, load_fixture, load_spec, validate
from .sagbi import degree_monoid, algebra_min_generators, subduce

__all__ = [
    "TermOrder", "lex", "grlex", "weight_order", "doubled_order", "order_from_weights",
    "LaurentPoly", "ConeWithFaces", "ConstructionError", "ConstructionSpec",
    "load_fixture", "load_spec", "validate", "degree_monoid", "algebra_min_generators", "subduce",
]
