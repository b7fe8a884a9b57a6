"""Fundamental solutions of a^2 - 2b^2 = +-p for p = +-1 (mod 8).

Shows the lattice route against the exhaustive scan oracle and the
identities connecting the +p and -p solutions.
"""

from cyclosvp import pell_oracle, sieve_primes, solve_pell

print(f"{'p':>6} {'a_p':>6} {'b_p':>6} {'a_-p':>6} {'b_-p':>6}   checks")
for p in sieve_primes(200):
    if p % 8 not in (1, 7):
        continue
    plus = solve_pell(p, 1)
    minus = solve_pell(p, -1)
    oracle_plus = pell_oracle(p, 1)
    oracle_minus = pell_oracle(p, -1)
    assert (plus.a, plus.b) == (oracle_plus.a, oracle_plus.b)
    assert (minus.a, minus.b) == (oracle_minus.a, oracle_minus.b)
    notes = []
    notes.append("a_p>=2b_p" if plus.a >= 2 * plus.b else "VIOLATION")
    notes.append("a_-p=a_p-2b_p" if minus.a == plus.a - 2 * plus.b else "VIOLATION")
    notes.append("a_p<sqrt(2p)" if plus.a**2 < 2 * p else "VIOLATION")
    print(f"{p:>6} {plus.a:>6} {plus.b:>6} {minus.a:>6} {minus.b:>6}   {', '.join(notes)}")

print("\nall rows agree with the scan oracle")
