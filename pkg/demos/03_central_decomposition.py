"""Central coordinates and the maximal central right divisor.

Any P splits along the basis 1, i, j, k into four rational coordinate
polynomials.  Their gcd H is the largest central polynomial
right-dividing P, giving the factorization P = c * G * H.
Run: python3 demos/03_central_decomposition.py
"""

from quatpoly import (
    beck_decompose,
    center_coordinates,
    parse_to_qpoly,
    right_divrem,
    roots_in_center,
)

p = parse_to_qpoly("(x - i)(x + 1)^2")
print("P =", p)
coords = center_coordinates(p)
for unit, part in zip("1ijk", coords.parts()):
    print(f"  {unit}-part: {part}")
print("recombines:", coords.recombine() == p)

beck = beck_decompose(p)
print(f"\nP = ({beck.leading}) * ({beck.reduced}) * ({beck.central})")
print("central roots of P:", roots_in_center(p))

# the subtle part: a central factor you can SEE need not be the
# largest one.  (x^2 + 1) x is divisible by the central x, but its
# maximal central right divisor is the whole product.
p2 = parse_to_qpoly("(x^2 + 1) x")
beck2 = beck_decompose(p2)
print(f"\nP2 = {p2}")
print(f"P2 = ({beck2.leading}) * ({beck2.reduced}) * ({beck2.central})")
x = parse_to_qpoly("x")
_, rem = right_divrem(p2, x)
print(f"x right-divides P2 (remainder {rem}), degree {x.degree} < "
      f"{beck2.central.degree}: the visible factor is not maximal")

# a polynomial with no central right divisor at all keeps central = 1
p3 = parse_to_qpoly("x^2 + i x + j")
beck3 = beck_decompose(p3)
print(f"\nP3 = {p3}: central part {beck3.central}, reduced = P3 is monic "
      f"with coprime coordinates")
