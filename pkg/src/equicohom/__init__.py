"""Exact symbolic computation in the C2-equivariant cohomology of BT^2.

The package provides:

* ``grading``: the extended grading groups and their homomorphisms,
* ``hcoeff``: exact arithmetic in the point-coefficient fragment,
* ``rewrite``: the generic commutative reduction engine with the
  diamond-lemma overlap check,
* ``rings``: the presented BT^1 and BT^2 rings, module bases and grids,
* ``maps``: rho, phi, eta, the classifying-map pullbacks, mod N, and the
  pushforward to BU(2),
* ``classes``: units, dual classes, Euler classes of twisted tensor
  powers, and Waner classes,
* ``verify``: the full verification suite,
* ``service`` and ``cli``: a FastAPI wrapper and its thin client.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
