"""Root classification: central, isolated, and spherical root classes.

Roots of a quaternion polynomial come in conjugacy classes.  A class
either contributes a single isolated root or lies entirely inside the
root set (a spherical class).  The number of root-bearing classes never
exceeds the degree, and spherical classes never exceed degree/2.
Run: python3 demos/04_root_classification.py
"""

from quatpoly import classify, parse_to_qpoly, spherical_bound_report

EXAMPLES = [
    "x^3 - x",
    "x^3 + x",
    "x^3 - i x^2 - x + i",
    "x^3 - i x^2 + x - i",
    "x^3 + (2 - i) x^2 + (1 - 2i) x - i",
    "x^3 + (1 - i) x^2 + (1 - i) x - i",
]

for text in EXAMPLES:
    rep = classify(parse_to_qpoly(text))
    print(f"P = {text}")
    if rep.central_roots:
        print("  central roots:", ", ".join(str(v) for v in rep.central_roots))
    for cls, status in rep.class_entries:
        print(f"  {cls}: {status}")
    if not rep.central_roots and not rep.class_entries:
        print("  no rational-class roots")
    print()

# the same sphere can be all-roots or one-root depending on the factor
# order hidden in the coefficients: compare rows 3 and 4 above, which
# differ only in the sign pattern of the central part.

# at the spherical bound the coefficients are forced into a rigid shape
even = parse_to_qpoly("(x^2 + 1)(x^2 + x + 1)")
rep = spherical_bound_report(even)
print(f"P = {even}: {rep.count} spherical classes, bound {rep.bound}, "
      f"parity {rep.equality_parity}, coefficients central: "
      f"{rep.coefficients_central}")

odd = parse_to_qpoly("(x - i)(x^2 + 1)")
rep = spherical_bound_report(odd)
print(f"P = {odd}: {rep.count} spherical class, bound {rep.bound}, "
      f"parity {rep.equality_parity}, coefficients commute: "
      f"{rep.coefficients_commute}")
