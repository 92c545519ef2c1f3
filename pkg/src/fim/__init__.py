"""Exact computation in the free inverse monoid on one generator.

The package covers, over exact scalar fields (arbitrary-precision
rationals or a prime field):

* canonical forms and arithmetic in the monoid itself (``monoid``),
  certified against a brute-force word oracle (``congruence``);
* its monoid algebra, including the projection idempotents, the central
  idempotents, the projection basis and the twisted inner inverse
  (``algebra``, ``basis``);
* the faithful action on a direct sum of shift blocks, truncation
  matrices, and the infinite-dimensional counterexample operators
  (``representation``);
* constructive strong inner inverses for square matrices
  (``linear_solver``) and for endomaps of finite sets (``set_solver``);
* a command-line front end (``cli``).
"""

from .fields import QQ, PrimeField, field_from_name
from .monoid import (
    ONE,
    X,
    Y,
    CanonicalMonomial,
    ParseError,
    from_exponents,
    parse_monomial,
    parse_word,
    reduce_word,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "PrimeField",
    "field_from_name",
    "CanonicalMonomial",
    "ParseError",
    "ONE",
    "X",
    "Y",
    "from_exponents",
    "parse_monomial",
    "parse_word",
    "reduce_word",
    "__version__",
]
