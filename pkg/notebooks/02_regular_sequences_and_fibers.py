# %% [markdown]
# Tuple families, regular sequences and the deformed family
#
# For each index tuple (j1, ..., j_{n-1}) the generators are the images of
# HD^0, ..., HD^{n-2} of x1...x_{n-1} under the involutions Phi_j.  If every
# such family is a regular sequence, degree n has no counterexample.

# %%
from fractions import Fraction

from caforge.geometry import tuple_ideal_generators
from caforge.groebner import buchberger, is_regular_sequence_homogeneous
from caforge.poly import format_poly
from caforge.search import fiber_scan, jc_lower_bound, mainprop_verify, tuple_regularity_sweep

# %%
for tup in [(3, 3), (1, 1), (2, 1)]:
    gens = tuple_ideal_generators(3, tup)
    print(tup, [format_poly(g) for g in gens], is_regular_sequence_homogeneous(gens, 2))

# %%
for n in (3, 4, 5):
    print(n, tuple_regularity_sweep(n).summary())

# %% [markdown]
# A Groebner basis for one of the n = 4 families.

# %%
gb = buchberger(tuple_ideal_generators(4, (1, 2, 4)))
print([format_poly(g) for g in gb.basis], "dimension", gb.dimension())

# %% [markdown]
# The deformed family lives in x1..x_{n-1}, T.  After saturating at 1 - 2T
# every tuple should leave a curve (dimension 1).

# %%
for n in (3, 4):
    rep = mainprop_verify(n)
    print(n, rep.verdict, rep.counts)

# %% [markdown]
# Fibers at T = alpha.  At alpha = 1/2 the first generator dies whenever
# j1 != n, so those fibers are singular.

# %%
alphas = [Fraction(0), Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(-1, 3)]
for tup in [(1, 1), (3, 1), (2, 3)]:
    print(tup, [(s["alpha"], s["dimension"]) for s in fiber_scan(3, tup, alphas)])

# %%
print(jc_lower_bound(4).to_json())
