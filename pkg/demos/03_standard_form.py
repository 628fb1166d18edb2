"""Splitting a Motzkin diagram into R * T * L and reading off its standard word."""

from motzkin import make_diagram, render
from motzkin.structure import decompose, rp_to_ballot, shifted, standard_word

d = make_diagram(7, [("t1", "t3"), ("t4", "b1"), ("t5", "b2"), ("t6", "b7"), ("b3", "b6"), ("b4", "b5")])
print("d:")
print(render(d))
print("\nd with its empty vertices pushed to the right:")
print(render(shifted(d)))

tri = decompose(d)
for name, part in (("R (right planar rook)", tri.r), ("T (Temperley-Lieb)", tri.t), ("L (left planar rook)", tri.l)):
    print(f"\n{name}:")
    print(render(part))
print("\nR * T * L == d:", tri.product() == (d, 0))

sw = standard_word(d)
print("standard word:", sw)
print("  r-part", sw.r_part, "| t-part", sw.t_part, "| l-part", sw.l_part)

# right planar rook diagrams are counted by ballot sequences
print("\nR as a ballot sequence:", rp_to_ballot(tri.r).entries)
