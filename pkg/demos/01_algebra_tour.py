"""Tour of generalized quaternion arithmetic.

The algebra (a, b) over the rationals has basis 1, i, j, k with
i^2 = a, j^2 = b, ij = -ji = k.  Hamilton's quaternions are (-1, -1).
Run: python3 demos/01_algebra_tour.py
"""

from fractions import Fraction

from quatpoly import (
    HAMILTON,
    AlgebraParams,
    ZeroDivisorError,
    conjugacy_class,
    distinct_conjugates,
    same_class,
)

A = HAMILTON
print("Hamilton algebra:", f"a = {A.a}, b = {A.b}")
print("unit table: i*j =", A.i * A.j, " j*i =", A.j * A.i, " j*k =", A.j * A.k)

q = A.quat(1, 2, -1, Fraction(1, 2))
print("\nq =", q)
print("trace(q) =", q.trace(), "  norm(q) =", q.norm())
print("q * conj(q) =", q * q.conjugate(), " (equals norm as a scalar)")
print("q^{-1} =", q.inverse(), " check:", q * q.inverse())

# every quaternion satisfies its minimal quadratic x^2 - t x + n
lhs = q * q - A.scalar(q.trace()) * q + A.scalar(q.norm())
print("q^2 - t q + n =", lhs)

# conjugacy classes: central points are singletons, everything else
# lives on a sphere determined by (trace, norm)
print("\nclass of 3/2:", conjugacy_class(A.scalar(Fraction(3, 2))))
print("class of q:  ", conjugacy_class(q))
g = A.quat(1, 1, 0, 0)
print("g q g^{-1} in same class?", same_class(q, g * q * g.inverse()))
print("five distinct conjugates of i:",
      ", ".join(str(c) for c in distinct_conjugates(A.i, 5)))

# a different division algebra: (-1, -2)
B = AlgebraParams(Fraction(-1), Fraction(-2))
print("\nalgebra (-1, -2): j^2 =", B.j * B.j, " j*k =", B.j * B.k)
print("division algebra?", B.is_definitely_division)

# the split algebra (1, 1) has zero divisors; inverses fail lazily
S = AlgebraParams(Fraction(1), Fraction(1))
zd = S.one + S.i
print("\nsplit algebra (1, 1): norm(1 + i) =", zd.norm())
try:
    zd.inverse()
except ZeroDivisorError as err:
    print("inverting 1 + i:", err)
