"""
Least degrees over Q(f)
=======================

Without K in the base field the least degree is T or 2T.  The trace says
which clause of the case ladder decided it.
"""

from cm_degrees import make_order, t_qf_2_2b, t_qf_full, t_qf_prime_power
from cm_degrees.degree_formulas import t_kf_value
from cm_degrees.rational_degrees import clause_string, t_qf_full_with_trace

# %%
# Prime powers on a split prime: a point of order 4 costs twice as much.
ans, trace = t_qf_prime_power(make_order(-7, 1), 2, 2)
print(ans.value, trace)

# %%
# The three anchors on the orders of discriminant -3 and -4.
print(t_qf_full(make_order(-3, 1), 1, 6).value, t_qf_full(make_order(-4, 1), 1, 4).value,
      t_qf_full(make_order(-3, 1), 1, 9).value)

# %%
# Full 2-torsion plus a point of order 2^b.
for b in range(1, 5):
    ans, trace = t_qf_2_2b(make_order(-4, 2), b)
    print(b, ans.value, trace.case_id)

# %%
# A table of T and T° for one order.
o = make_order(-7, 2)
for m, n in [(1, 4), (1, 7), (2, 4), (2, 14), (3, 6)]:
    ans, traces = t_qf_full_with_trace(o, m, n)
    print(f"M={m} N={n}: T={t_kf_value(o, m, n)} T°={ans.value} {clause_string(traces)}")
