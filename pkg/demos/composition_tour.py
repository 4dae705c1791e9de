"""A short tour of the secant composition on both cubic surfaces.

Run with: python3 demos/composition_tour.py
"""
from fractions import Fraction

from frickelab import (
    F2Point,
    Finite,
    FrickePoint,
    compose,
    f2_compose,
    f2_p2_compose,
    normalize_projective,
    p2_compose,
    star,
    surface_defect,
)


def fmt(coords):
    return "(" + ", ".join(str(Fraction(c)) for c in coords) + ")"


def show(title, value):
    print(f"{title:<44} {value}")


print("Secant composition on x^2 + y^2 + z^2 = 3xyz")
print("=" * 60)

a = FrickePoint(2, 1, 1)
b = FrickePoint(1, 2, 5)
r = compose(a, b)
show("(2,1,1) o (1,2,5)", fmt(r.point.coords))
show("defect of the result", surface_defect("fricke", r.point.coords))

# the three collinear points determine each other
g = r.point
show("(2,1,1) o result", fmt(compose(a, g).point.coords))
show("(1,2,5) o result", fmt(compose(b, g).point.coords))

# sharing a coordinate pushes the third intersection to infinity
inf = compose(FrickePoint(1, 1, 2), FrickePoint(1, 2, 5))
show("(1,1,2) o (1,2,5)", f"at infinity: {inf.point}")

print()
print("The star law P * Q = (1,1,1) o (P o Q)")
print("=" * 60)
s = star(a, b)
show("(2,1,1) * (1,2,5)", fmt(s.point.coords))
show("(1,1,1) * (2,5,29)", fmt(star(FrickePoint(1, 1, 1), FrickePoint(2, 5, 29)).point.coords))

# star is commutative but not associative
x, y, z = FrickePoint(1, 1, 2), FrickePoint(2, 5, 29), FrickePoint(1, 2, 5)
lhs = star(star(x, y).point, z)
rhs = star(x, star(y, z).point)
show("(A*B)*C", fmt(lhs.point.coords))
show("A*(B*C)", fmt(rhs.point.coords))

print()
print("The double surface (x+y+z)^2 = 9xyz")
print("=" * 60)
r2 = f2_compose(F2Point(4, 1, 1), F2Point(1, 4, 25))
show("(4,1,1) o (1,4,25)", fmt(r2.point.coords))
show("defect of the result", surface_defect("double", r2.point.coords))

print()
print("The same laws transferred to the projective plane")
print("=" * 60)
show("[2:1:1] o [1:2:5] on P^2", p2_compose(normalize_projective([2, 1, 1]),
                                            normalize_projective([1, 2, 5])))
show("[4:1:1] o [1:4:25] on P^2", f2_p2_compose(normalize_projective([4, 1, 1]),
                                                normalize_projective([1, 4, 25])))
assert isinstance(r, Finite) and isinstance(r2, Finite)
assert normalize_projective(r.point.coords).coords == (5, -1, -8)
print()
print("every printed value is an exact rational -- no rounding anywhere")
