"""Non-root conjugates, conjugation kernels, and subfield roots.

A noncentral point c whose class is not spherical has conjugates that
are not roots; the kernel of y -> sum a_m y c^m pins down exactly which
conjugates are.  Restricting to one quadratic subfield F(s) turns the
root hunt into a commutative gcd.
Run: python3 demos/06_conjugates_and_subfields.py
"""

from quatpoly import (
    HAMILTON,
    conjugation_root_kernel,
    eval_right,
    nonroot_conjugates,
    parse_to_qpoly,
    roots_in_subfield,
    roots_in_subfield_f64,
)

A = HAMILTON

p = parse_to_qpoly("x^2 + x + 1")
print("P =", p)
print("five conjugates of i that are certified non-roots:")
for q in nonroot_conjugates(p, A.i, 5):
    print(f"  {q}   P(q) = {eval_right(p, q)}")

# the kernel dimension over the rationals is 0, 2, or 4: it is a right
# vector space over the field F(c)
for text, point in [("x^2 + 1", "i"), ("x^2 + x + 1", "i"),
                    ("x^3 - i x^2 - x + i", "j")]:
    poly = parse_to_qpoly(text)
    c = getattr(A, point)
    dim = len(conjugation_root_kernel(poly, c))
    print(f"\nkernel dimension of y -> P-twisted y for P = {text}, c = {point}: {dim}")
    if dim == 2:
        y = conjugation_root_kernel(poly, c)[0]
        print(f"  kernel vector {y} conjugates {point} onto the root "
              f"{y * c * y.inverse()}")

# roots inside one subfield F(s): central roots always count, spheres
# contribute when they intersect F(s) at rational coordinates
p = parse_to_qpoly("(x^2 + 1)(x^2 + x + 1)")
print(f"\nP = {p}")
print("roots in F(j):", ", ".join(str(q) for q in roots_in_subfield(p, A.j)))
print("roots in F(i + 2j):",
      ", ".join(str(q) for q in roots_in_subfield(p, A.quat(0, 1, 2, 0))) or "none")

# the float variant also resolves irrational intersections
print("float roots in F(j):")
for r in roots_in_subfield_f64(p, A.j):
    print(f"  {r.w:+.6f} {r.x:+.6f}i {r.y:+.6f}j {r.z:+.6f}k")
