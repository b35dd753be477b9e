"""Which integer sequences are trace sequences?

A sequence b_1, ..., b_N arises as b_n = tr(f^n) for an integer matrix f
exactly when b_n == b_{n/p} (mod p^k) for every n = p^k * s <= N with
gcd(p, s) = 1.  The first instance is the classical b_1 == b_2 (mod 2).
This script walks the two directions: rejecting a non-example with the
precise failing congruence, and building an explicit witness matrix for a
valid one.
"""

from tracewitt import InvalidTraceSequenceError, check_trace_sequence, synthesize, trace_sequence

print("Is (0, 1) a trace sequence?  b_1 = 0 is even, b_2 = 1 is odd:")
report = check_trace_sequence([0, 1])
for row in report.checks:
    verdict = "ok" if row.passed else "VIOLATED"
    print(f"  b_{row.n} == b_{row.n // row.p} (mod {row.modulus}): {row.lhs} vs {row.rhs}  {verdict}")
print(f"  overall: {report.overall}")
print()

print("The Lucas numbers 1, 3, 4, 7, 11, 18 pass every congruence:")
lucas = [1, 3, 4, 7, 11, 18]
print(f"  overall: {check_trace_sequence(lucas).overall}")
print()

print("A valid sequence comes with a constructive witness, the companion")
print("matrix of the characteristic coefficients recovered by Newton's")
print("identities.  For (1, 3) that is the Fibonacci matrix:")
witness = synthesize([1, 3])
for row in witness.entries:
    print(f"  {list(row)}")
print(f"  its power traces: {trace_sequence(witness, 6)}  (Lucas numbers)")
print()

print("Synthesis refuses invalid input and explains why:")
try:
    synthesize([0, 1])
except InvalidTraceSequenceError as exc:
    print(f"  {exc}")
    witness = ", ".join(str(x) for x in exc.report.witness)
    print(f"  rational witness that integrality fails: ({witness})")
