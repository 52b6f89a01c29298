"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from cm_degrees.orders import all_orders

ORDERS_120 = all_orders(120)
ORDERS_300 = all_orders(300)

orders = st.sampled_from(ORDERS_120)
orders_wide = st.sampled_from(ORDERS_300)
small_primes = st.sampled_from([2, 3, 5, 7, 11, 13])
