"""Divisibility laws of trace sequences, as executable checks.

The central fact: integers b_1, ..., b_r are the traces of powers of some
integer matrix if and only if

    b_n == b_{n/p}  (mod p^k)   whenever  n = p^k * s <= r  with  gcd(p, s) = 1.

(The first instance is the classical ``b_1 == b_2 mod 2``, and the family
generalizes Fermat's little theorem.)  This module checks that condition on
raw sequences, on matrices directly (traces of p-power powers), on exterior
powers (coefficientwise congruence of characteristic polynomials, with the
determinant as the top coefficient), and on integer-valued character tables
restricted to the powers of one group element.  Every check produces a
:class:`CongruenceReport` whose rows carry the exact values, modulus, and
verdict, so failures are self-explaining.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .matrices import (
    IntMatrix,
    char_poly_coeffs,
    companion_matrix,
    compound_matrix,
    decode_int,
    encode_int,
    mat_pow,
    trace_sequence,
)
from .newton import as_integers, traces_to_elementary
from .witt import witt_from_ghost


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality (inputs here are small)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


class PrimePower(NamedTuple):
    """One part of a factorization: n = p**k * s with gcd(p, s) = 1."""

    p: int
    k: int
    s: int


def prime_power_split(n: int) -> tuple[PrimePower, ...]:
    """Factor n into (p, k, s) parts with p ascending; n = 1 gives ().

    >>> prime_power_split(12)
    (PrimePower(p=2, k=2, s=3), PrimePower(p=3, k=1, s=4))
    """
    if n < 1:
        raise ValueError("n must be positive")
    parts = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            parts.append(PrimePower(p, k, n // p**k))
        p += 1
    if rest > 1:
        parts.append(PrimePower(rest, 1, n // rest))
    return tuple(parts)


@dataclass(frozen=True)
class CongruenceRow:
    """One checked congruence: ``lhs == rhs (mod p^k)``.

    ``n`` names what the row is about -- the sequence index for trace
    sequences, the power of the matrix for power-trace checks, or the
    coefficient index for exterior-power checks.
    """

    n: int
    p: int
    k: int
    lhs: int
    rhs: int
    modulus: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "n": encode_int(self.n),
            "p": self.p,
            "k": self.k,
            "lhs": encode_int(self.lhs),
            "rhs": encode_int(self.rhs),
            "modulus": encode_int(self.modulus),
            "pass": self.passed,
        }


def _row(n: int, p: int, k: int, lhs: int, rhs: int) -> CongruenceRow:
    modulus = p**k
    return CongruenceRow(n, p, k, lhs, rhs, modulus, (lhs - rhs) % modulus == 0)


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of a batch of congruence checks, in deterministic order."""

    checks: tuple[CongruenceRow, ...]
    policy: dict = field(default_factory=dict)
    witness: tuple[Fraction, ...] | None = None

    @property
    def overall(self) -> bool:
        return all(row.passed for row in self.checks)

    def failures(self) -> tuple[CongruenceRow, ...]:
        return tuple(row for row in self.checks if not row.passed)

    def to_json_dict(self) -> dict:
        out: dict = {
            "overall": self.overall,
            "checks": [row.to_json_dict() for row in self.checks],
            "policy": dict(self.policy),
        }
        if self.witness is not None:
            out["witness"] = [
                encode_int(int(x)) if x.denominator == 1 else str(x) for x in self.witness
            ]
        return out


class InvalidTraceSequenceError(Exception):
    """Raised when a sequence fails the congruence characterization."""

    def __init__(self, report: CongruenceReport):
        self.report = report
        rows = ", ".join(
            f"(n={r.n}, p={r.p}, k={r.k})" for r in report.failures()
        )
        super().__init__(f"not a trace sequence; failing congruences: {rows}")


def check_trace_sequence(
    traces: Sequence[int], *, with_witness: bool = False
) -> CongruenceReport:
    """Decide whether b_1..b_N is the trace sequence of an integer matrix.

    For every index n and every prime-power part n = p^k * s, one row checks
    ``b_n == b_{n/p} (mod p^k)``.  All rows passing is both necessary and
    sufficient for an N x N integer witness to exist.

    >>> check_trace_sequence([0, 1]).overall
    False
    >>> check_trace_sequence([1, 3, 4, 7]).overall
    True
    """
    rows = []
    for n in range(2, len(traces) + 1):
        for p, k, _ in prime_power_split(n):
            rows.append(_row(n, p, k, traces[n - 1], traces[n // p - 1]))
    witness = witt_from_ghost(traces) if with_witness else None
    policy = {"kind": "trace-sequence", "length": len(traces)}
    return CongruenceReport(tuple(rows), policy, witness)


def synthesize(traces: Sequence[int], *, self_check: bool = True) -> IntMatrix:
    """Produce an integer matrix whose power traces are exactly b_1..b_N.

    The witness is the companion matrix of the characteristic coefficients
    recovered through Newton's identities; those coefficients are integral
    precisely because the congruences hold.  With ``self_check`` (default)
    the traces are recomputed from the result before returning.

    Raises :class:`InvalidTraceSequenceError`, carrying the failing report
    rows, when the sequence is not a trace sequence.
    """
    report = check_trace_sequence(traces, with_witness=True)
    if not report.overall:
        raise InvalidTraceSequenceError(report)
    coeffs = traces_to_elementary(traces)
    matrix = companion_matrix(as_integers(coeffs))
    if self_check and trace_sequence(matrix, len(traces)) != tuple(traces):
        raise ArithmeticError("synthesized matrix fails to reproduce its traces; this is a bug")
    return matrix


def lemma6_verify(a: int, p: int, k: int) -> bool:
    """Check the divisibility ``p^k | a^(p^k) - a^(p^(k-1))`` exactly.

    True for every integer a, prime p and k >= 1 (k = 1 is Fermat's little
    theorem); exposed as a predicate so the claim itself is testable.
    Exponentiation is done modulo p^k, which decides the same divisibility
    without materializing the full powers.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("k must be at least 1")
    modulus = p**k
    return (pow(a, p**k, modulus) - pow(a, p ** (k - 1), modulus)) % modulus == 0


def check_matrix_congruences(f: IntMatrix, p: int, k_max: int) -> CongruenceReport:
    """Trace congruences of matrix p-power powers, with all gap sizes.

    For every 1 <= j <= k <= k_max, one row checks

        trace(f^(p^k)) == trace(f^(p^(k-j)))  (mod p^(k-j+1)).

    The gap-1 rows are the sharpest (modulus p^k); wider gaps trade modulus
    for reach.  Rows are ordered by (k, j); each row stores the power p^k
    in ``n`` and the modulus exponent k-j+1 in ``k``.
    """
    _require_prime(p)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    power_traces = [f.trace()]
    current = f
    for _ in range(k_max):
        current = mat_pow(current, p)
        power_traces.append(current.trace())
    rows = []
    for k in range(1, k_max + 1):
        for j in range(1, k + 1):
            rows.append(_row(p**k, p, k - j + 1, power_traces[k], power_traces[k - j]))
    policy = {"kind": "matrix-power", "p": p, "k_max": k_max, "dim": f.dim}
    return CongruenceReport(tuple(rows), policy)


def check_exterior_congruence(f: IntMatrix, p: int, k: int) -> CongruenceReport:
    """Coefficientwise congruence of ``det(1 + t*f^(p^k))`` mod p^k.

    Row i compares the i-th characteristic coefficient of ``f^(p^k)``
    against that of ``f^(p^(k-1))`` modulo p^k.  The top row (i = r) is the
    determinant congruence ``det(f^(p^k)) == det(f^(p^(k-1))) (mod p^k)``.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("k must be at least 1")
    high = char_poly_coeffs(mat_pow(f, p**k))
    low = char_poly_coeffs(mat_pow(f, p ** (k - 1)))
    rows = tuple(_row(i, p, k, high[i - 1], low[i - 1]) for i in range(1, f.dim + 1))
    policy = {"kind": "exterior-power", "p": p, "k": k, "dim": f.dim}
    return CongruenceReport(rows, policy)


def exterior_via_compound(f: IntMatrix, p: int, k: int) -> CongruenceReport:
    """The same congruences as :func:`check_exterior_congruence`, computed
    through exterior powers instead of characteristic polynomials.

    Because the minor construction respects products, the i-th coefficient
    of ``det(1 + t*f^(p^k))`` equals ``trace(compound(f, i)^(p^k))``; row i
    checks that trace against the p^(k-1) one.  Both routes must produce
    identical values row for row, which makes each a cross-check of the
    other.
    """
    _require_prime(p)
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = []
    for i in range(1, f.dim + 1):
        wedge = compound_matrix(f, i)
        lhs = mat_pow(wedge, p**k).trace()
        rhs = mat_pow(wedge, p ** (k - 1)).trace()
        rows.append(_row(i, p, k, lhs, rhs))
    policy = {"kind": "exterior-power-compound", "p": p, "k": k, "dim": f.dim}
    return CongruenceReport(tuple(rows), policy)


@dataclass(frozen=True)
class CharacterTable:
    """Integer values of one character on the powers of a group element.

    ``values[e]`` is the character at the e-th power of an element of the
    given order, for every residue  0 <= e < order.
    """

    order: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        vals = tuple(self.values)
        if len(vals) != self.order:
            raise ValueError(f"need exactly {self.order} values, got {len(vals)}")
        for v in vals:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"character values must be integers, got {v!r}")
        object.__setattr__(self, "values", vals)

    def value(self, exponent: int) -> int:
        return self.values[exponent % self.order]

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "values": {str(e): encode_int(v) for e, v in enumerate(self.values)},
        }

    @classmethod
    def from_json_dict(cls, obj: object) -> "CharacterTable":
        if not isinstance(obj, dict):
            raise ValueError("character table JSON must be an object")
        if "order" not in obj or "values" not in obj:
            raise ValueError('character table JSON needs "order" and "values"')
        order = decode_int(obj["order"])
        raw = obj["values"]
        if not isinstance(raw, dict):
            raise ValueError('"values" must be an object keyed by residue')
        values = []
        for e in range(order):
            if str(e) not in raw:
                raise ValueError(f"character table is missing residue {e}")
            values.append(decode_int(raw[str(e)]))
        extra = set(raw) - {str(e) for e in range(order)}
        if extra:
            raise ValueError(f"unexpected residues {sorted(extra)} for order {order}")
        return cls(order, tuple(values))


def character_check_bound(p: int, order: int, max_abs: int) -> int:
    """Default exponent bound K(p) for :func:`check_character`.

    The congruence family being checked quantifies over every k >= 1; a
    finite run is honest because of two facts.  First, once ``p^k > 2 * max_abs`` the
    congruence can only hold by outright equality of the two values.
    Second, the residues ``p^k mod order`` are eventually periodic, so those
    forced equalities repeat.  Checking up to

        K(p) = max(k0, preperiod) + period,

    where k0 is the smallest k with ``p^k > 2 * max_abs``, therefore covers
    every larger k by repetition.
    """
    k0 = 1
    while p**k0 <= 2 * max_abs:
        k0 += 1
    seen: dict[int, int] = {}
    value = 1 % order
    index = 0
    while value not in seen:
        seen[value] = index
        value = value * p % order
        index += 1
    preperiod = seen[value]
    period = index - preperiod
    return max(k0, preperiod) + period


def check_character(table: CharacterTable, k_max: int | None = None) -> CongruenceReport:
    """Check ``chi(g^(p^k)) == chi(g^(p^(k-1))) (mod p^k)`` on a table.

    Runs over every prime p up to the element order and k from 1 to K(p),
    where K(p) is :func:`character_check_bound` by default or the explicit
    ``k_max`` cap when given.  The policy section of the report records the
    bounds actually used.  True characters always pass; a corrupted table
    generally does not.
    """
    m = table.order
    max_abs = max((abs(v) for v in table.values), default=0)
    primes = [p for p in range(2, m + 1) if is_prime(p)]
    bounds = {
        p: (k_max if k_max is not None else character_check_bound(p, m, max_abs))
        for p in primes
    }
    rows = []
    for p in primes:
        exponent = 1 % m
        for k in range(1, bounds[p] + 1):
            next_exponent = exponent * p % m
            rows.append(_row(p**k, p, k, table.values[next_exponent], table.values[exponent]))
            exponent = next_exponent
    policy = {
        "kind": "character",
        "order": m,
        "max_abs_value": max_abs,
        "mode": "auto" if k_max is None else "cap",
        "k_bounds": {str(p): bounds[p] for p in primes},
    }
    return CongruenceReport(tuple(rows), policy)


__all__ = [
    "is_prime",
    "PrimePower",
    "prime_power_split",
    "CongruenceRow",
    "CongruenceReport",
    "InvalidTraceSequenceError",
    "check_trace_sequence",
    "synthesize",
    "lemma6_verify",
    "check_matrix_congruences",
    "check_exterior_congruence",
    "exterior_via_compound",
    "CharacterTable",
    "character_check_bound",
    "check_character",
]
