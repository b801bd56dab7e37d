# %% [markdown]
# Counterexamples over finite fields
#
# Over GF(p) the conjecture can fail.  Scan all shift-normalized monic
# polynomials, then compare with the weighted points where every reduced
# discriminant vanishes.

# %%
from caforge import GF
from caforge.poly import parse_upoly
from caforge.search import (
    bad_prime_scan,
    ca_check,
    consistency_triangle,
    enumerate_xn_points,
    search_counterexamples,
)

# %%
rep = ca_check(parse_upoly("X^3 + X^2", GF(2)))
print(rep.to_json())

# %%
res = search_counterexamples(4, 3)
for r in res.counterexamples:
    print(r.to_json()["f"], r.gcd_degrees)
print("weighted points", res.xn_points, "consistent", res.consistent)

# %%
print(enumerate_xn_points(3, 2))

# %%
for n in (2, 3, 4):
    print(n, bad_prime_scan(n, 7))

# %% [markdown]
# Scan, point enumeration and regularity over GF(p) for degree 3.

# %%
for p in (2, 3, 5):
    print(consistency_triangle(3, p).to_json())
