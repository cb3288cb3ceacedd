"""Commutative associative algebras with an idempotent/nilpotent basis.

An algebra of complex dimension ``n`` carries a basis ``I_1, ..., I_n`` in
which the first ``m`` elements are pairwise-orthogonal idempotents and the
remaining ``n - m`` span the nilpotent radical.  Multiplication is fixed by
three rules:

1. ``I_r I_s = delta_rs I_r`` for ``r, s <= m``;
2. ``I_r I_s = sum_k c[r, s, k] I_k`` for nilpotent ``r, s``, where the
   structure tensor is supported on ``k >= max(r, s) + 1``;
3. each nilpotent index ``s`` has a selector ``u_s <= m`` with
   ``I_u I_s = I_s`` if ``u = u_s`` and ``0`` otherwise.

The unit is ``1 = I_1 + ... + I_m``.  Only the nilpotent-block tensor is
user input; rules 1 and 3 are hard-coded so they cannot be mis-specified.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SingularElementError, StructureError

__all__ = [
    "AlgebraSpec",
    "Element",
    "ValidationReport",
    "basis_element",
    "functional",
    "left_mul_matrix",
    "multiply",
    "oracle_inverse",
    "unit_element",
    "validate_algebra",
    "zero_element",
]


class Element:
    """A vector of ``n`` complex coordinates with respect to ``{I_r}``.

    Supports vector-space arithmetic; the algebra product needs the
    structure constants, so it lives in :func:`multiply`.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        c = np.asarray(coords, dtype=np.complex128)
        if c.ndim != 1:
            raise ValueError(f"element coordinates must be 1-D, got shape {c.shape}")
        self.coords = c

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def coord(self, r: int) -> complex:
        """Coordinate of ``I_r`` (1-based)."""
        if not 1 <= r <= self.n:
            raise IndexError(f"basis index {r} out of [1, {self.n}]")
        return complex(self.coords[r - 1])

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.coords.view(np.float64))))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return Element(self.coords + other.coords)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return Element(self.coords - other.coords)

    def __neg__(self):
        return Element(-self.coords)

    def __mul__(self, scalar):
        if isinstance(scalar, Element):
            raise TypeError("algebra product of two Elements needs the spec; use multiply(a, b, spec)")
        return Element(self.coords * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Element(self.coords / complex(scalar))

    def __repr__(self):
        return f"Element({np.array2string(self.coords, separator=', ')})"


def zero_element(n: int) -> Element:
    return Element(np.zeros(n, dtype=np.complex128))


def basis_element(r: int, n: int) -> Element:
    """``I_r`` (1-based) in an ``n``-dimensional algebra."""
    if not 1 <= r <= n:
        raise IndexError(f"basis index {r} out of [1, {n}]")
    c = np.zeros(n, dtype=np.complex128)
    c[r - 1] = 1.0
    return Element(c)


class AlgebraSpec:
    """Identity card of an algebra: dimensions, structure tensor, selectors.

    Parameters
    ----------
    n, m:
        Total dimension and number of idempotents, ``1 <= m <= n``.
    products:
        Mapping ``(left, right, target) -> complex`` (all 1-based) giving the
        coefficient of ``I_target`` in ``I_left I_right`` for nilpotent
        ``left, right``.  Either factor order may be given; conflicting
        duplicates are rejected, the table is symmetrized.
    u_map:
        Mapping ``s -> u_s`` for ``s`` in ``[m+1, n]``.  May be omitted when
        ``m == n`` (empty) or ``m == 1`` (the only possible selector).
    """

    __slots__ = ("n", "m", "products", "u_map", "_table", "_unit", "_b_support")

    def __init__(self, n: int, m: int, products=None, u_map=None):
        if not (isinstance(n, int) and isinstance(m, int)):
            raise StructureError("n and m must be integers")
        if n < 1 or m < 1 or m > n:
            raise StructureError(f"need 1 <= m <= n, got n={n}, m={m}")
        self.n = n
        self.m = m
        self.products = self._canonical_products(products or {})
        self.u_map = self._canonical_u_map(u_map)
        self._table = self._build_table()
        self._unit = np.zeros(n, dtype=np.complex128)
        self._unit[:m] = 1.0
        self._b_support = self._build_b_support()

    # -- construction ------------------------------------------------------

    def _canonical_products(self, products) -> dict:
        items = products.items() if hasattr(products, "items") else products
        canon: dict[tuple[int, int, int], complex] = {}
        for (left, right, target), value in items:
            for idx in (left, right, target):
                if not (isinstance(idx, (int, np.integer)) and 1 <= idx <= self.n):
                    raise StructureError(f"tensor index {idx} out of [1, {self.n}]")
            if left <= self.m or right <= self.m:
                raise StructureError(
                    f"product entry ({left},{right},{target}) touches the idempotent "
                    f"block; only nilpotent factors (> {self.m}) may carry tensor entries"
                )
            value = complex(value)
            if not (np.isfinite(value.real) and np.isfinite(value.imag)):
                raise StructureError(f"non-finite tensor value at ({left},{right},{target})")
            key = (min(left, right), max(left, right), target)
            if key in canon and canon[key] != value:
                raise StructureError(
                    f"conflicting values for I_{left} I_{right} -> I_{target}: "
                    f"{canon[key]} vs {value}"
                )
            canon[key] = value
        return canon

    def _canonical_u_map(self, u_map) -> dict:
        nil = range(self.m + 1, self.n + 1)
        if u_map is None:
            if self.m == self.n:
                return {}
            if self.m == 1:
                return {s: 1 for s in nil}
            raise StructureError("u_map is required when m > 1 and n > m")
        u_map = dict(u_map)
        for s in nil:
            if s not in u_map:
                raise StructureError(f"u_map missing selector for s={s}")
            u = u_map[s]
            if not 1 <= u <= self.m:
                raise StructureError(f"u_map[{s}]={u} out of [1, {self.m}]")
        extra = set(u_map) - set(nil)
        if extra:
            raise StructureError(f"u_map has non-nilpotent keys {sorted(extra)}")
        return {s: int(u_map[s]) for s in nil}

    def _build_table(self) -> np.ndarray:
        n, m = self.n, self.m
        t = np.zeros((n, n, n), dtype=np.complex128)
        for u in range(m):
            t[u, u, u] = 1.0
        for s in range(m + 1, n + 1):
            u = self.u_map[s]
            t[u - 1, s - 1, s - 1] = 1.0
            t[s - 1, u - 1, s - 1] = 1.0
        for (left, right, target), value in self.products.items():
            t[left - 1, right - 1, target - 1] = value
            t[right - 1, left - 1, target - 1] = value
        return t

    def _build_b_support(self) -> dict:
        """For each (q, s): list of (p, coeff) with coeff the I_s part of I_q I_p."""
        support: dict[tuple[int, int], list[tuple[int, complex]]] = {}
        for (left, right, target), value in self.products.items():
            for q, p in ((left, right), (right, left)) if left != right else ((left, right),):
                support.setdefault((q, target), []).append((p, value))
        return support

    # -- derived data ------------------------------------------------------

    @property
    def table(self) -> np.ndarray:
        """Full multiplication tensor, ``table[r, s, k]`` 0-based (read-only)."""
        return self._table

    @property
    def dim_nilpotent(self) -> int:
        return self.n - self.m

    def unit_coords(self) -> np.ndarray:
        return self._unit.copy()

    def unit(self) -> Element:
        return Element(self._unit.copy())

    def u_selector(self, s: int) -> int:
        """``u_s`` for a nilpotent index ``s`` (1-based)."""
        return self.u_map[s]

    def structure_coefficient(self, left: int, right: int, target: int) -> complex:
        """Coefficient of ``I_target`` in ``I_left I_right`` (nilpotent block)."""
        key = (min(left, right), max(left, right), target)
        return self.products.get(key, 0.0 + 0.0j)

    def __repr__(self):
        return (
            f"AlgebraSpec(n={self.n}, m={self.m}, "
            f"{len(self.products)} nilpotent products)"
        )


def unit_element(spec: AlgebraSpec) -> Element:
    return spec.unit()


# -- operations -------------------------------------------------------------


def multiply(a: Element, b: Element, spec: AlgebraSpec) -> Element:
    """Bilinear commutative product of two elements."""
    if a.n != spec.n or b.n != spec.n:
        raise ValueError(f"dimension mismatch: {a.n}, {b.n} vs n={spec.n}")
    x, y = a.coords, b.coords
    # content-canonical operand order: the product is symmetric in exact
    # arithmetic, a fixed order makes it bit-identical under operand swap
    if x.tobytes() > y.tobytes():
        x, y = y, x
    return Element(_multiply_coords(x, y, spec))


def _multiply_coords(a, b, spec):
    """Product on raw coordinate arrays; broadcasts over leading axes."""
    return np.einsum("...r,...s,rsk->...k", a, b, spec._table)


def functional(u: int, a: Element, spec: AlgebraSpec) -> complex:
    """The u-th multiplicative functional: the coordinate of ``I_u``."""
    if not 1 <= u <= spec.m:
        raise IndexError(f"functional index {u} out of [1, {spec.m}]")
    return complex(a.coords[u - 1])


def left_mul_matrix(a: Element, spec: AlgebraSpec) -> np.ndarray:
    """Matrix ``L`` with ``L @ coords(b) = coords(a * b)`` for every ``b``."""
    if a.n != spec.n:
        raise ValueError(f"dimension mismatch: {a.n} vs n={spec.n}")
    return np.einsum("r,rsk->ks", a.coords, spec._table)


def oracle_inverse(a: Element, spec: AlgebraSpec) -> Element:
    """Inverse via a dense linear solve of ``L_a x = coords(1)``.

    Independent of the closed-form inverse; used as a cross-check oracle.
    Raises :class:`SingularElementError` when the element is not invertible.
    """
    scale = max(1.0, a.norm())
    xi = a.coords[: spec.m]
    offending = [u + 1 for u in range(spec.m) if abs(xi[u]) <= 1e-12 * scale]
    la = left_mul_matrix(a, spec)
    det = np.linalg.det(la)
    if offending or abs(det) <= 1e-12 * scale**spec.n:
        raise SingularElementError(
            f"element not invertible (vanishing idempotent components {offending})",
            xi=xi,
            offending=offending,
        )
    x = np.linalg.solve(la, spec.unit_coords())
    return Element(x)


# -- validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    """Outcome of the structural axiom checks for one algebra."""

    rule1_ok: bool
    rule2_support_ok: bool
    rule3_ok: bool
    assoc_A1_max_residual: float
    assoc_A2_max_residual: float
    nilpotency_index: int
    unit_ok: bool
    tolerance: float = 1e-12
    dim_bound: int = 0  # n - m + 1, the triangular-support ceiling
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.rule1_ok
            and self.rule2_support_ok
            and self.rule3_ok
            and self.unit_ok
            and self.assoc_A1_max_residual <= self.tolerance
            and self.assoc_A2_max_residual <= self.tolerance
            and 1 <= self.nilpotency_index <= self.dim_bound
        )


def validate_algebra(spec: AlgebraSpec, tolerance: float = 1e-12) -> ValidationReport:
    """Check multiplication rules, associativity, the unit, and nilpotency.

    Violations make the report fail; only malformed input (already rejected
    at construction) raises.
    """
    n, m = spec.n, spec.m
    t = spec._table

    rule1_ok = True
    for r in range(m):
        for s in range(m):
            expected = np.zeros(n)
            if r == s:
                expected[r] = 1.0
            if not np.array_equal(t[r, s], expected):
                rule1_ok = False

    rule2_support_ok = all(
        target >= max(left, right) + 1 for (left, right, target) in spec.products
    )

    rule3_ok = True
    for s in range(m + 1, n + 1):
        u = spec.u_map[s]
        for r in range(1, m + 1):
            expected = np.zeros(n)
            if r == u:
                expected[s - 1] = 1.0
            if not np.array_equal(t[r - 1, s - 1], expected):
                rule3_ok = False

    # assoc[r, s, p, w] = coords of (I_r I_s) I_p - I_r (I_s I_p)
    assoc = np.einsum("rsk,kpw->rspw", t, t) - np.einsum("spk,rkw->rspw", t, t)
    nil = slice(m, n)
    idem = slice(0, m)
    a1 = float(np.max(np.abs(assoc[nil, nil, nil, :]))) if m < n else 0.0
    a2 = float(np.max(np.abs(assoc[idem, nil, nil, :]))) if m < n else 0.0

    unit_prod = np.einsum("r,rsk->sk", spec.unit_coords(), t)
    unit_ok = bool(np.max(np.abs(unit_prod - np.eye(n))) <= tolerance)

    nilpotency_index = _nilpotency_index(spec) if rule2_support_ok else 0

    report = ValidationReport(
        rule1_ok=rule1_ok,
        rule2_support_ok=rule2_support_ok,
        rule3_ok=rule3_ok,
        assoc_A1_max_residual=a1,
        assoc_A2_max_residual=a2,
        nilpotency_index=nilpotency_index,
        unit_ok=unit_ok,
        tolerance=tolerance,
    )
    report.dim_bound = n - m + 1
    if not rule2_support_ok:
        report.warnings.append("structure tensor has entries below the triangular support")
    return report


def _nilpotency_index(spec: AlgebraSpec) -> int:
    """Least q such that every product of q radical elements vanishes."""
    n, m = spec.n, spec.m
    if m == n:
        return 1
    nil_rows = np.eye(n, dtype=np.complex128)[m:]
    span = nil_rows  # span of products of q factors
    q = 1
    while span.shape[0] > 0:
        if q > n - m + 1:
            return 0  # not nilpotent within the triangular bound
        prods = np.einsum("ar,bs,rsk->abk", nil_rows, span, spec._table).reshape(-1, n)
        span = _row_basis(prods)
        q += 1
    return q


def _row_basis(rows: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Orthonormal basis of the row span, dropping near-zero directions."""
    if rows.size == 0:
        return rows.reshape(0, rows.shape[-1])
    _, sv, vh = np.linalg.svd(rows, full_matrices=False)
    keep = sv > tol * max(1.0, sv[0] if sv.size else 1.0)
    return vh[keep]
