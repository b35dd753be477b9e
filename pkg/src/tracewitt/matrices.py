"""Exact dense integer matrices.

Products, powers, traces, characteristic coefficients, exterior powers and
companion forms, all over Python's arbitrary-precision integers.  Traces of
powers overflow 64 bits almost immediately (entries of size 4 at dimension 6
do so around the 24th power), and a single silently wrapped value would
falsify every congruence downstream, so fixed-width arithmetic and floats
are banned from this module outright.

Dimension 0 and 1 matrices are ordinary values here, not errors: the empty
matrix has ``trace(f^n) = 0`` and ``det(1 + t*f) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .newton import as_integers, integrality_check, traces_to_elementary
from .rng import SplitMix64

# Largest magnitude a JSON consumer with IEEE doubles can hold exactly.
_JSON_SAFE_INT = (1 << 53) - 1


def _as_entry(value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"matrix entries must be plain integers, got {value!r}")
    return value


def encode_int(value: int):
    """JSON-encode an integer: literal when doubles hold it, else a string."""
    return value if -_JSON_SAFE_INT <= value <= _JSON_SAFE_INT else str(value)


def decode_int(obj: object) -> int:
    """Inverse of :func:`encode_int`: accept a JSON integer or decimal string."""
    if isinstance(obj, bool):
        raise ValueError(f"expected an integer, got {obj!r}")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        try:
            return int(obj.strip())
        except ValueError:
            raise ValueError(f"expected a decimal integer string, got {obj!r}") from None
    raise ValueError(f"expected an integer or string, got {obj!r}")


@dataclass(frozen=True)
class IntMatrix:
    """An immutable square matrix of integers.

    >>> IntMatrix.from_rows([[0, 1], [1, 1]]).trace()
    1
    >>> (IntMatrix.from_rows([[0, 1], [1, 1]]) ** 5).entries
    ((3, 5), (5, 8))
    """

    dim: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        rows = tuple(tuple(_as_entry(v) for v in row) for row in self.entries)
        if len(rows) != self.dim or any(len(row) != self.dim for row in rows):
            raise ValueError(f"entries do not form a {self.dim}x{self.dim} square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(len(rows), tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dim))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, n: int) -> "IntMatrix":
        return mat_pow(self, n)

    def to_json_dict(self) -> dict:
        """Render as ``{"dim": r, "entries": [[...]]}`` with big entries as strings."""
        return {
            "dim": self.dim,
            "entries": [[encode_int(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, obj: object) -> "IntMatrix":
        if not isinstance(obj, dict):
            raise ValueError("matrix JSON must be an object")
        unknown = set(obj) - {"dim", "entries"}
        if unknown:
            raise ValueError(f"unknown matrix keys: {sorted(unknown)}")
        if "dim" not in obj or "entries" not in obj:
            raise ValueError('matrix JSON needs "dim" and "entries"')
        dim = decode_int(obj["dim"])
        rows = obj["entries"]
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ValueError('"entries" must be a list of rows')
        return cls(dim, tuple(tuple(decode_int(v) for v in row) for row in rows))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product; dimensions must agree."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    n = a.dim
    rows_a = a.entries
    cols_b = tuple(zip(*b.entries)) if n else ()
    product = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols_b) for row in rows_a
    )
    return IntMatrix(n, product)


def mat_pow(f: IntMatrix, n: int) -> IntMatrix:
    """``f**n`` by repeated squaring; ``f**0`` is the identity."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = IntMatrix.identity(f.dim)
    base = f
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base_needed = n > 1
        n >>= 1
        if base_needed:
            base = mat_mul(base, base)
    return result


def trace_sequence(f: IntMatrix, n_max: int) -> tuple[int, ...]:
    """Traces of f, f^2, ..., f^n_max, one multiplication per step."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if n_max == 0:
        return ()
    traces = [f.trace()]
    power = f
    for _ in range(n_max - 1):
        power = mat_mul(power, f)
        traces.append(power.trace())
    return tuple(traces)


def char_poly_coeffs(f: IntMatrix) -> tuple[int, ...]:
    """Coefficients a_1..a_r of ``det(1 + t*f)``.

    Computed from the trace sequence via Newton's identities; the division
    by n in that recursion is guaranteed to cancel for integer matrices, and
    we verify that it did.

    >>> char_poly_coeffs(IntMatrix.from_rows([[0, 1], [1, 1]]))
    (1, -1)
    >>> char_poly_coeffs(IntMatrix.identity(3))
    (3, 3, 1)
    """
    coeffs = traces_to_elementary(trace_sequence(f, f.dim))
    bad = integrality_check(coeffs)
    if bad:
        raise ArithmeticError(
            f"characteristic coefficients came out non-integer at {bad}; "
            "this is a bug, not bad input"
        )
    return tuple(int(c) for c in coeffs)


def _det(rows: list[list[int]]) -> int:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, pivot in enumerate(rows[0]):
        if pivot == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = pivot * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def compound_matrix(f: IntMatrix, i: int) -> IntMatrix:
    """The i-th exterior power of f: the matrix of all i x i minors.

    Rows and columns are indexed by the size-i subsets of ``{0..r-1}`` in
    lexicographic order, so the result is ``C(r, i)`` square.  Its trace is
    the i-th characteristic coefficient of f, and it respects products:
    ``compound(f*g, i) == compound(f, i) * compound(g, i)``.
    """
    if not 1 <= i <= f.dim:
        raise ValueError(f"minor size {i} out of range for dimension {f.dim}")
    subsets = list(combinations(range(f.dim), i))
    entries = tuple(
        tuple(_det([[f.entries[a][b] for b in cols] for a in rows]) for cols in subsets)
        for rows in subsets
    )
    return IntMatrix(len(subsets), entries)


def companion_matrix(coeffs: Sequence[int]) -> IntMatrix:
    """Integer matrix whose ``det(1 + t*f)`` has the given coefficients.

    This is the Frobenius companion of the monic polynomial
    ``x^r - a_1*x^(r-1) + a_2*x^(r-2) - ... + (-1)^r * a_r``: ones on the
    subdiagonal, the coefficient column (with alternating signs) last.

    >>> companion_matrix([1, -1]).entries
    ((0, 1), (1, 1))
    """
    values = as_integers(coeffs)
    r = len(values)
    rows = [[0] * r for _ in range(r)]
    for i in range(1, r):
        rows[i][i - 1] = 1
    for i in range(r):
        a = values[r - i - 1]
        rows[i][r - 1] = a if (r - i - 1) % 2 == 0 else -a
    return IntMatrix.from_rows(rows)


def random_matrix(dim: int, bound: int, seed: int) -> IntMatrix:
    """Seeded random matrix with entries uniform in ``[-bound, bound]``.

    Uses :class:`tracewitt.rng.SplitMix64`, so a fixed seed yields the same
    matrix on every platform and Python version.  Entries are drawn in
    row-major order.
    """
    if dim < 0:
        raise ValueError("dimension must be non-negative")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    gen = SplitMix64(seed)
    return IntMatrix(
        dim,
        tuple(tuple(gen.integer(-bound, bound) for _ in range(dim)) for _ in range(dim)),
    )


__all__ = [
    "IntMatrix",
    "mat_mul",
    "mat_pow",
    "trace_sequence",
    "char_poly_coeffs",
    "compound_matrix",
    "companion_matrix",
    "random_matrix",
    "encode_int",
    "decode_int",
]
