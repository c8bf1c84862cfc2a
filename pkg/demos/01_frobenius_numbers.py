"""Frobenius numbers three ways.

The Frobenius number of a coprime set is the largest integer that is
not a nonnegative combination of its elements.  This script walks the
computation paths the library offers and shows they agree.
"""

from frobtile import (
    GeneratorSet,
    closed_form_primes,
    frobenius_general,
    frobenius_pair,
    reduce_brauer_shockley,
    represent,
)

# two coprime generators have a closed form
print("g(20, 31) =", frobenius_pair(20, 31))

# beyond two generators there is no closed form in general; the library
# walks shortest paths over residues modulo the smallest generator
S = GeneratorSet((6, 10, 15))
print("g(6, 10, 15) =", frobenius_general(S))

# scaling identities can shrink an instance before the walk
scaled = GeneratorSet((12, 20, 30, 7))
print("g(12, 20, 30, 7) =", frobenius_general(scaled))
print("  via reduction   =", reduce_brauer_shockley(scaled))

# quotient sets of distinct primes 2, 3, 5: generators 15, 10, 6
primes = (2, 3, 5)
print("closed form for prime quotients", primes, "=", closed_form_primes(primes))

# representability with an explicit coefficient vector
for target in (29, 30, 47):
    rep = represent(target, S)
    if rep is None:
        print(target, "is not representable over", S.generators)
    else:
        terms = " + ".join(
            f"{c}*{g}" for c, g in zip(rep.coefficients, S.generators) if c
        )
        print(target, "=", terms)
