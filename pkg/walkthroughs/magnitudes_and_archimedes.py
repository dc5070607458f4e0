"""
Magnitudes with and without the Archimedean property
====================================================

Segments over the series field still add, subtract and compare like
magnitudes, but an infinitesimal segment never exceeds the unit segment no
matter how many copies are laid end to end.
"""

from fractions import Fraction

from euclidbench.fields import NONARCH
from euclidbench.magnitudes import Magnitude, check_axiom

eps = NONARCH.eps()
tiny, unit = Magnitude.segment(eps), Magnitude.segment(NONARCH(1))

for axiom, ops in [
    ("E1", (tiny, unit)),
    ("E1", (unit, Magnitude.segment(NONARCH(7) + eps))),
    ("CN5", (unit, tiny)),
    ("Trichotomy", (tiny, Magnitude.segment(eps * eps))),
    ("E5", (Magnitude.segment(eps + eps * eps), unit, unit)),
]:
    v = check_axiom(axiom, ops)
    print(f"{axiom:<10} holds={v.holds!s:<5}", v.witness)

# over the rationals E1 always finds its n
print(check_axiom("E1", (Magnitude.segment(Fraction(1, 3)), Magnitude.segment(Fraction(2)))).witness)
