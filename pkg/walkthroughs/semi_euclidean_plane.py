"""
Parallels in the limited subplane
=================================

Inside the subplane of points with limited coordinates, the lines through
the origin with infinitesimal slope never reach y = 1: their meeting point
has abscissa 1/slope, which is infinite.  So there are many parallels to
y = 1 through the origin, while every triangle still has angle sum equal to
two right angles.
"""

import random

from euclidbench.fields import NONARCH
from euclidbench.geometry import Line, PlaneModel, Point, angle_sum, meets_in_model
from euclidbench.props import check_I29, parallels_through_point, random_triangle, semi_config

eps = NONARCH.eps()
sub, full = PlaneModel(NONARCH, True), PlaneModel(NONARCH)
origin = Point(NONARCH(0), NONARCH(0))
y1 = Line.from_coeffs(NONARCH(0), NONARCH(1), NONARCH(-1))
slopes = [NONARCH(0), eps, 2 * eps, eps * eps]

for model in (sub, full):
    report = parallels_through_point(model, origin, y1, slopes)
    print(model.descriptor, "lines missing y = 1:", report.witnesses[0]["multiplicity"])

###############################################################################
# y = 1 and y = eps*x do meet in the full plane, far away.

l1, l2, t = semi_config(sub)
p = meets_in_model(l1, l2, full)
print("full plane meeting point:", p.x.pretty(), p.y.pretty())
print("in the subplane:", meets_in_model(l1, l2, sub))

###############################################################################
# Alternate angles on the transversal x = 0 differ, so the converse of
# "parallel implies equal alternate angles" fails here.

report = check_I29(sub, (l1, l2, t))
print("I.29 in the subplane:", report.verdict, report.witnesses[0]["alternate_angles"])

###############################################################################
# Angle sums are untouched.  Each composed pair is (negative, 0).

rng = random.Random(0)
for _ in range(3):
    tri = random_triangle(sub, rng)
    total = angle_sum(tri)
    print([f"({v.x}, {v.y})" for v in tri.vertices], "->", total)
