"""Build an algebra from its structure constants and probe the arithmetic.

The basis I_1..I_n splits into idempotents and nilpotents.  Products of
nilpotents come from a sparse tensor; everything else is fixed by the
multiplication rules, so a handful of entries pins down the whole algebra.
"""

import numpy as np

from monalg import (
    AlgebraSpec,
    basis_element,
    functional,
    left_mul_matrix,
    multiply,
    oracle_inverse,
    unit_element,
    validate_algebra,
)

# I2*I2 = I3 and I2*I4 = I5 inside a five-dimensional algebra with a single
# idempotent I1 (which therefore acts as the unit).
spec = AlgebraSpec(5, 1, {(2, 2, 3): 1, (2, 4, 5): 1})
print(spec)

report = validate_algebra(spec)
print(f"axioms ok: {report.ok}, nilpotency index: {report.nilpotency_index}")
print(f"associativity residuals: {report.assoc_A1_max_residual:.1e} (nilpotent), "
      f"{report.assoc_A2_max_residual:.1e} (mixed)")

i2 = basis_element(2, 5)
i4 = basis_element(4, 5)
print("\nI2 * I2 =", multiply(i2, i2, spec).coords.real)
print("I2 * I4 =", multiply(i2, i4, spec).coords.real)

# The multiplicative functional reads the idempotent coordinate and turns
# products into scalar products.
rng = np.random.default_rng(1)
a = basis_element(1, 5) * 2 + i2 * (1 + 1j)
b = basis_element(1, 5) - i4 * 0.5
lhs = functional(1, multiply(a, b, spec), spec)
rhs = functional(1, a, spec) * functional(1, b, spec)
print(f"\nf_1(a b) = {lhs:.6f} equals f_1(a) f_1(b) = {rhs:.6f}")

# Left multiplication as a matrix gives a solve-based inverse that serves as
# an oracle for the closed-form inverse elsewhere in the library.
print("\nleft-multiplication matrix of I2 (real part):")
print(left_mul_matrix(i2, spec).real)

inv = oracle_inverse(a, spec)
check = multiply(a, inv, spec) - unit_element(spec)
print(f"\n|a * a^-1 - 1| = {check.norm():.2e}")

# An element whose idempotent coordinate vanishes has no inverse.
try:
    oracle_inverse(i2, spec)
except Exception as exc:
    print(f"I2 is not invertible: {exc}")
