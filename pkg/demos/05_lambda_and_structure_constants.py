"""The constant lambda and when it equals 2 pi i.

lambda is the loop integral of zeta^{-1} d zeta over a circle embracing the
noninvertible locus.  Its idempotent projection is always 2 pi i; whether
the nilpotent residuals vanish depends on the structure constants and on
the frame.  Sufficient conditions exist on both levels, and this script
exercises the sharp case where only the frame-level condition saves the
equality.
"""

import numpy as np

from monalg import (
    AlgebraSpec,
    Circle2D,
    Frame,
    builtin_algebra,
    builtin_frames,
    compute_lambda,
    coordinate_plane,
    theorem5_predicate,
    theorem6_predicate,
    theorem7_predicate,
    validate_algebra,
)

circle2 = Circle2D(np.zeros(2), 1.0, np.eye(2))
circle3 = Circle2D(np.zeros(3), 1.0, coordinate_plane(3, 1, 2))

print("built-in algebras: structure-constant condition and lambda")
for name in ("example1", "example2", "example3", "example4"):
    spec = builtin_algebra(name)
    result = theorem5_predicate(spec)
    lam = compute_lambda(spec, builtin_frames(spec)["default"], circle3)
    print(f"  {name}: condition {result.condition} ({result.reason}), "
          f"|lambda - 2 pi i| = {lam.deviation_from_two_pi_i:.2e}")

# The truncated power algebra (I2 = t, ..., I5 = t^4 modulo t^5) is
# associative but fails the structure-constant condition: one of the
# fourteen products is nonzero.
spec = AlgebraSpec(5, 1, {(2, 2, 3): 1, (2, 3, 4): 1, (2, 4, 5): 1, (3, 3, 5): 1})
assert validate_algebra(spec).ok
result = theorem5_predicate(spec)
print(f"\ntruncated power algebra: holds={result.holds} ({result.reason}); "
      f"nonzero products at positions "
      f"{[i + 1 for i, v in enumerate(result.products) if v > 0]}")

# A frame that never touches the first nilpotent coordinates satisfies the
# frame-level sparsity condition, and lambda lands on 2 pi i anyway.
sparse = Frame.from_rows(spec, [1j, 0, 0, 1, 0], [0, 0, 0, 0, 1])
print(f"frame sparsity condition: {theorem7_predicate(sparse, spec)}")
lam = compute_lambda(spec, sparse, circle3)
print(f"|lambda - 2 pi i| with the sparse frame: {lam.deviation_from_two_pi_i:.2e}")

# A frame inside the semisimple span makes every nilpotent residual vanish
# identically, not just below tolerance.
in_s = Frame.from_rows(spec, [1j, 0, 0, 0, 0])
print(f"semisimple-span condition: {theorem6_predicate(in_s, spec)}")
lam = compute_lambda(spec, in_s, circle2)
print(f"nilpotent residuals with the span frame: "
      f"{np.max(np.abs(lam.nilpotent_residuals)):.1e}")

# A generic frame on the same algebra: the guarantees no longer apply, so
# lambda is measured across planes and radii instead of assumed.
generic = Frame.from_rows(spec, [1j, 1, 0, 0, 0], [0, 0, 1, 0, 0])
print("\ngeneric frame, lambda across circles:")
tilt = np.zeros((2, 3))
tilt[0, 0] = 1.0
tilt[1, 1], tilt[1, 2] = np.cos(0.4), np.sin(0.4)
for label, circle in (
    ("plane(1,2) r=0.5", Circle2D(np.zeros(3), 0.5, coordinate_plane(3, 1, 2))),
    ("plane(1,2) r=1.0", circle3),
    ("tilted r=1.0", Circle2D(np.zeros(3), 1.0, tilt)),
):
    lam = compute_lambda(spec, generic, circle)
    print(f"  {label}: |lambda - 2 pi i| = {lam.deviation_from_two_pi_i:.3e}, "
          f"windings {lam.windings}")
