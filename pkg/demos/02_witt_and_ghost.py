"""Traces, characteristic coefficients, Witt coordinates, ghost components.

Four coordinate systems for the same object.  A matrix f gives
det(1 - tf) = prod_n (1 - x_n t^n); the x_n are the Witt coordinates and
the divisor sums b_n = sum_{d|n} d * x_d^{n/d} (the ghost components)
recover the traces.  Integrality of the Witt coordinates is exactly the
congruence criterion, so a failed sequence exposes a fractional x_n.
"""

from tracewitt import (
    check_trace_sequence,
    coeffs_to_witt,
    ghost_from_witt,
    traces_to_elementary,
    witt_from_ghost,
    witt_to_coeffs,
)

def shown(values):
    """Render exact rationals compactly: integers as integers, else p/q."""
    return "(" + ", ".join(str(v) for v in values) + ")"


print("Powers of two (the 1x1 matrix [2]) have one-point Witt support:")
b = (2, 4, 8, 16)
x = witt_from_ghost(b)
print(f"  traces {b} -> Witt {shown(x)}")
print(f"  ghosts back: {shown(ghost_from_witt(x, 4))}")
print()

print("The Fibonacci companion factors as (1-t)(1-t^2) up to degree 2:")
coeffs = traces_to_elementary([1, 3])
print(f"  traces (1, 3) -> coefficients {shown(coeffs)}")
print(f"  coefficients -> Witt {shown(coeffs_to_witt(coeffs))}")
print(f"  and back: {shown(witt_to_coeffs(coeffs_to_witt(coeffs)))}")
print()

print("An invalid sequence has a non-integral Witt coordinate;")
print("the checker and the fraction point at the same obstruction:")
bad = (0, 1)
print(f"  Witt of {bad}: {shown(witt_from_ghost(bad))}")
print(f"  congruence checker says: {check_trace_sequence(bad).overall}")
print()

print("Round trip on a longer vector, exactly, no floating point:")
x = tuple(range(-5, 7))
assert witt_from_ghost(ghost_from_witt(x, len(x))) == x
print(f"  Witt {x}")
print(f"  -> ghosts {shown(ghost_from_witt(x, len(x)))}")
print("  -> same Witt vector back (asserted)")
