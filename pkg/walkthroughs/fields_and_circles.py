"""
Where do two circles meet?
==========================

The same pair of unit circles, centred at (0, 0) and (0, 1), intersected over
three ordered fields.  Over the rationals the meeting points need sqrt(3),
which is not there; the quadratic tower and the series field both have it.
"""

from fractions import Fraction

from euclidbench.fields import CONSTRUCTIBLE, NONARCH, RAT
from euclidbench.geometry import Circle, Point, intersect_circles

for fld in (RAT, CONSTRUCTIBLE, NONARCH):
    c1 = Circle(Point(fld(0), fld(0)), fld(1))
    c2 = Circle(Point(fld(0), fld(1)), fld(1))
    meet = intersect_circles(c1, c2)
    print(f"{fld.tag.value:>13}: {meet.kind}", [f"({p.x}, {p.y})" for p in meet.points])

# the rational failure keeps the discriminant that had no square root
meet = intersect_circles(Circle(Point(Fraction(0), Fraction(0)), Fraction(1)),
                         Circle(Point(Fraction(0), Fraction(1)), Fraction(1)))
print("rational discriminant:", meet.discriminant)

###############################################################################
# Running a whole construction script shows the same split: I.1 stops at the
# intersection step over the rationals and succeeds elsewhere.

from euclidbench.dsl import execute
from euclidbench.geometry import PlaneModel
from euclidbench.props import bundled_script

script = bundled_script("I.1")
print(script.render())
for fld in (RAT, CONSTRUCTIBLE, NONARCH):
    trace = execute(script, PlaneModel(fld))
    print(fld.tag.value, trace.outcome, trace.failure.reason if trace.failure else "")
