"""Right division and greatest common right divisors.

Coefficients sit on the left of powers of the central variable x, so
division has a left and a right version; this library implements the
right one: P = Q * D + R with deg R < deg D.
Run: python3 demos/02_division_and_gcrd.py
"""

from quatpoly import HAMILTON, QPoly, eval_right, gcrd, parse_to_qpoly, right_divrem

A = HAMILTON

p = parse_to_qpoly("x^3 - 1")
d = parse_to_qpoly("x - i")
q, r = right_divrem(p, d)
print(f"({p}) = ({q}) * ({d}) + ({r})")
print("recomposes exactly:", q * d + r == p)

# the remainder of division by x - q is the right evaluation P(q):
# powers are applied on the right of each coefficient
point = A.quat(0, 1, 1, 0)
_, rem = right_divrem(p, QPoly(A, [-point, A.one]))
print(f"\nP({point}) =", eval_right(p, point), " remainder:", rem)

# gcrd by the right Euclidean algorithm; the result is monic and every
# common right divisor divides it
a = parse_to_qpoly("(x - i)(x^2 - 1)")
b = parse_to_qpoly("(x + j)(x^2 - 1)")
g = gcrd(a, b)
print(f"\ngcrd({a}, {b}) = {g}")

# planting a right factor W guarantees W divides the gcrd
w = parse_to_qpoly("x - k")
g2 = gcrd(a * w, b * w)
_, rw = right_divrem(g2, w)
print(f"gcrd(A*W, B*W) = {g2}; remainder mod W = {rw}")

# order matters: gcrd works on RIGHT factors only
left = parse_to_qpoly("x - i")
print("\ngcrd((x - i)(x - j), (x - i)(x - k)) =",
      gcrd(parse_to_qpoly("(x - i)(x - j)"), parse_to_qpoly("(x - i)(x - k)")),
      " (the shared LEFT factor x - i is invisible on the right)")
print("shared left factor:", left)
