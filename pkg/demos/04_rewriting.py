"""Rewriting words into standard form, one certified relation at a time."""

from collections import Counter

from motzkin import evaluate, word_parse
from motzkin.rewrite import macro_hop, macro_t_death, normalize_trace, to_minimal_rtl, to_ptp
from motzkin.structure import standard_word

n = 4
w = word_parse("t2 r1 t3 l2 t1 r3", n)
print("word:            ", w)
print("P T P form:      ", to_ptp(w))
print("compressed form: ", to_minimal_rtl(to_ptp(w)))

log = []
tr = normalize_trace(w, log)
print("standard word:   ", tr.end)
print("oracle agrees:   ", tr.end == standard_word(evaluate(w)).word)
print(f"{len(tr)} rewrite steps, replay reaches the end: {tr.replay() == tr.end}")
print("most used rules: ", Counter(st.rule.family_id for st in tr.steps).most_common(5))
print("steps outside the catalog:", tr.supplement_steps)

# macros are derived identities with their own certificates
lhs, rhs, hop = macro_hop(1, 3, 3)
print(f"\nhop: {lhs} = {rhs} in {len(hop)} catalog steps, catalog-only: {hop.verify()}")

# killing a t letter needs p_i t_i p_i = p_i p_{i+1}, which the catalog cannot derive
lhs, rhs, death = macro_t_death(1, word_parse("t1", 2), 2)
print(f"t-death: {lhs} = {rhs}; catalog-only: {death.verify()}, with the supplement: {death.verify(strict=False)}")
