"""Structure-constant and frame conditions under which lambda equals 2 pi i.

The algebra-level predicate walks four sufficient conditions in order:
semisimple, zero nilpotent tensor, nilpotent dimension at most three, and
(for dimension exactly four) the vanishing of fourteen specific products of
structure constants.  The frame-level predicates cover spans inside the
semisimple part and, for four-dimensional radicals, sparsity patterns of the
frame coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraSpec
from .frames import Frame

__all__ = [
    "Theorem5Result",
    "theorem5_predicate",
    "theorem6_predicate",
    "theorem7_predicate",
]

# Products of structure constants that must all vanish when the radical is
# four-dimensional.  Each triple (a, b, c) encodes the coefficient of
# I_{m+b} in the product I_{m+a} I_{m+c}; each row multiplies two or three
# of those coefficients.
_PRODUCT_PATTERNS = (
    ((1, 2, 1), (2, 3, 2)),
    ((1, 2, 1), (2, 4, 2)),
    ((1, 3, 1), (3, 4, 2)),
    ((3, 4, 3), (1, 3, 1)),
    ((2, 3, 1), (3, 4, 1)),
    ((2, 3, 1), (3, 4, 2)),
    ((2, 3, 1), (3, 4, 3)),
    ((1, 2, 1), (2, 3, 1), (3, 4, 2)),
    ((1, 2, 1), (2, 3, 1), (3, 4, 3)),
    ((2, 3, 2), (3, 4, 1)),
    ((2, 3, 2), (3, 4, 3)),
    ((2, 3, 2), (1, 2, 1), (3, 4, 1)),
    ((2, 3, 2), (1, 2, 1), (3, 4, 2)),
    ((2, 3, 2), (1, 2, 1), (3, 4, 3)),
)


def _coefficient(spec: AlgebraSpec, a: int, b: int, c: int, alternate: bool) -> complex:
    """The symbol value under the adopted reading (middle index = target).

    The alternate reading takes the superscript as the target; it is used
    only to flag algebras where the two readings disagree.
    """
    m = spec.m
    if alternate:
        return spec.structure_coefficient(m + a, m + b, m + c)
    return spec.structure_coefficient(m + a, m + c, m + b)


def _fourteen_products(spec: AlgebraSpec, alternate: bool = False) -> list:
    values = []
    for pattern in _PRODUCT_PATTERNS:
        acc = 1.0 + 0.0j
        for a, b, c in pattern:
            acc *= _coefficient(spec, a, b, c, alternate)
        values.append(acc)
    return values


@dataclass
class Theorem5Result:
    """Which sufficient condition holds, with the product residuals."""

    holds: bool
    condition: int | None
    reason: str
    products: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def theorem5_predicate(spec: AlgebraSpec, tol: float = 1e-14) -> Theorem5Result:
    """First sufficient algebra-level condition that holds, if any."""
    if spec.m == spec.n:
        return Theorem5Result(True, 1, "semisimple")
    if not spec.products or all(v == 0 for v in spec.products.values()):
        return Theorem5Result(True, 2, "zero_nilpotent_tensor")
    dim_n = spec.dim_nilpotent
    if dim_n <= 3:
        return Theorem5Result(True, 3, "dim_nilpotent_le_3")
    if dim_n == 4:
        values = _fourteen_products(spec)
        warnings = []
        alternate = _fourteen_products(spec, alternate=True)
        if any(abs(v - w) > tol for v, w in zip(values, alternate)):
            warnings.append(
                "the two index readings of the structure-constant products "
                "disagree for this algebra; the adopted reading (middle "
                "index = target) was used"
            )
        magnitudes = [abs(v) for v in values]
        if max(magnitudes) <= tol:
            return Theorem5Result(True, 4, "vanishing_products", magnitudes, warnings)
        return Theorem5Result(False, None, "products_nonzero", magnitudes, warnings)
    return Theorem5Result(False, None, "inapplicable")


def theorem6_predicate(frame: Frame, spec: AlgebraSpec) -> bool:
    """True when every frame vector lies in the semisimple part."""
    if frame.n != spec.n:
        raise ValueError("frame and spec dimensions disagree")
    if spec.m == spec.n:
        return True
    return bool(np.all(frame.a[1:, spec.m:] == 0))


def theorem7_predicate(frame: Frame, spec: AlgebraSpec) -> bool:
    """Frame sparsity condition for four-dimensional radicals.

    Requires a vanishing first nilpotent column and at least one of the next
    two columns vanishing as well.
    """
    if spec.dim_nilpotent != 4:
        raise ValueError("this predicate applies only when the radical has dimension 4")
    m = spec.m
    rows = frame.a[1:]
    first = bool(np.all(rows[:, m] == 0))
    second = bool(np.all(rows[:, m + 1] == 0))
    third = bool(np.all(rows[:, m + 2] == 0))
    return first and (second or third)
