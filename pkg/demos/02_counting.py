"""How many diagrams each monoid has, counted two ways."""

from motzkin.diagram import Monoid
from motzkin.enumeration import closed_form, enumerate_monoid, generator_closure

print(f"{'n':>2} {'R_n':>7} {'P_n':>6} {'RP_n':>6} {'TL_n':>6} {'M_n':>6}")
for n in range(1, 7):
    row = [len(enumerate_monoid(m, n)) for m in (Monoid.R, Monoid.P, Monoid.RP, Monoid.TL, Monoid.MOTZKIN)]
    print(f"{n:>2} " + " ".join(f"{c:>6}" for c in row))

print("\nclosed forms agree:", all(
    len(enumerate_monoid(m, n)) == closed_form(m, n)
    for m in (Monoid.R, Monoid.P, Monoid.RP, Monoid.LP, Monoid.TL) for n in range(1, 7)))

# the Motzkin monoid has no closed form here; compare with a closure under the generators
for n in range(1, 5):
    direct = set(enumerate_monoid(Monoid.MOTZKIN, n))
    print(f"M_{n}: {len(direct)} diagrams, generator closure agrees: {direct == generator_closure(Monoid.MOTZKIN, n)}")
