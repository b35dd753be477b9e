"""Integer-valued character tables satisfy trace-style congruences.

Restricted to powers of a single group element g of order m, an
integer-valued character behaves like a trace sequence:
chi(g^(p^k)) == chi(g^(p^(k-1))) (mod p^k).  The checker covers every
prime p <= m with an exponent bound that provably exhausts the infinite
family: once p^k exceeds twice the largest value, congruence means
equality, and the exponents p^k mod m repeat periodically.
"""

from tracewitt import CharacterTable, check_character

m = 6
regular = CharacterTable(m, (m,) + (0,) * (m - 1))
print(f"Regular representation of a cyclic group of order {m}:")
print(f"  values {regular.values}")
report = check_character(regular)
print(f"  checks run: {len(report.checks)}, overall: {report.overall}")
print(f"  exponent bounds used: {report.policy['k_bounds']}")
print()

print("Corrupt one entry and the congruences object.  Setting chi(g^5) = 1")
print("(the true value is 0) breaks the p = 5 family:")
corrupted = CharacterTable(m, (6, 0, 0, 0, 0, 1))
report = check_character(corrupted)
for row in report.failures():
    print(
        f"  chi(g^{row.n % m}) == chi(g^{row.n // row.p % m}) (mod {row.modulus}):"
        f"  {row.lhs} vs {row.rhs}  VIOLATED"
    )
print(f"  overall: {report.overall}")
print()

print("Not every corruption is visible: chi(g^0) never occurs as p^k mod 6")
print("(that would need a prime divisible by both 2 and 3), so the identity")
print("column is unconstrained by this family of congruences:")
shifted = CharacterTable(m, (7, 0, 0, 0, 0, 0))
print(f"  values {shifted.values} -> overall {check_character(shifted).overall}")
print()

print("The trivial character passes with every difference equal to zero:")
trivial = CharacterTable(8, (1,) * 8)
report = check_character(trivial)
print(f"  all diffs zero: {all(r.lhs == r.rhs for r in report.checks)}")
