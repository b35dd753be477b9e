"""Newton's identities: the bridge between power sums and elementary
symmetric coefficients.

A square integer matrix with eigenvalues l_1, ..., l_r has two natural
coordinate systems attached to it:

* the power sums ``b_n = l_1^n + ... + l_r^n`` (the traces of its powers),
* the elementary symmetric functions ``a_n = e_n(l_1, ..., l_r)`` (the
  coefficients of ``det(1 + t*f) = 1 + a_1*t + ... + a_r*t^r``).

Newton's recursion

    n * a_n = sum_{i=1..n} (-1)^(i-1) * a_{n-i} * b_i,    a_0 = 1

converts one into the other.  Going from traces to coefficients divides by
``n``, so the result is a priori rational; whether it is integral is exactly
the question the congruence checker answers.  Everything here runs over
exact rationals (:class:`fractions.Fraction`) -- no floating point, ever.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def traces_to_elementary(traces: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Convert power sums b_1..b_N into elementary coefficients a_1..a_N.

    The result is exact and possibly non-integral; use
    :func:`integrality_check` to find the offending positions.

    >>> traces_to_elementary([1, 3])
    (Fraction(1, 1), Fraction(-1, 1))
    >>> traces_to_elementary([0, 1])
    (Fraction(0, 1), Fraction(-1, 2))
    """
    coeffs = [Fraction(1)]
    for n in range(1, len(traces) + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            term = coeffs[n - i] * traces[i - 1]
            acc = acc + term if i % 2 else acc - term
        coeffs.append(acc / n)
    return tuple(coeffs[1:])


def elementary_to_traces(coeffs: Sequence[Scalar], n_max: int) -> tuple[Scalar, ...]:
    """Recover power sums b_1..b_{n_max} from elementary coefficients a_1..a_r.

    For ``n <= r`` this solves Newton's recursion for ``b_n``; past ``r`` the
    traces obey the linear recurrence

        b_n = a_1*b_{n-1} - a_2*b_{n-2} + ... + (-1)^(r-1) * a_r * b_{n-r}

    coming from the characteristic polynomial.  No division occurs, so
    integer input gives integer output.

    >>> elementary_to_traces([1, -1], 4)
    (1, 3, 4, 7)
    >>> elementary_to_traces([2], 3)
    (2, 4, 8)
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    r = len(coeffs)
    traces: list[Scalar] = []
    for n in range(1, n_max + 1):
        acc: Scalar = 0
        for i in range(1, min(n - 1, r) + 1):
            term = coeffs[i - 1] * traces[n - i - 1]
            acc = acc + term if i % 2 else acc - term
        if n <= r:
            lead = n * coeffs[n - 1]
            acc = acc + lead if n % 2 else acc - lead
        traces.append(acc)
    return tuple(traces)


def integrality_check(values: Sequence[Scalar]) -> list[int]:
    """Return the 1-based positions whose value is not an integer.

    An empty list means every entry has denominator 1.

    >>> integrality_check([Fraction(1), Fraction(-1)])
    []
    >>> integrality_check([Fraction(0), Fraction(-1, 2)])
    [2]
    """
    bad = []
    for pos, value in enumerate(values, start=1):
        if Fraction(value).denominator != 1:
            bad.append(pos)
    return bad


def as_integers(values: Sequence[Scalar]) -> tuple[int, ...]:
    """Collapse integral rationals to plain ints, rejecting anything else."""
    bad = integrality_check(values)
    if bad:
        raise ValueError(f"non-integer values at positions {bad}")
    return tuple(int(v) for v in values)
