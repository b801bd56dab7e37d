# %% [markdown]
# Hasse-Schmidt derivatives and higher discriminants
#
# Build the generic monic polynomial, take divided-power derivatives, and
# look at the resultants Res(f, f_i) that detect a shared root.

# %%
from caforge import GF
from caforge.discriminants import disc_at, disc_table, monic_coeff_vector, y_names
from caforge.hasse import elementary_symmetric, hs_multi, hs_uni, product_of_variables
from caforge.poly import format_poly, parse_upoly, upoly_gcd

# %%
f = parse_upoly("(X - 1)^2 * (X + 3)")
for i in range(4):
    print(i, hs_uni(f, i))

# %% [markdown]
# Over GF(2) the ordinary second derivative of X^3 is 0, while HD^2 is 3X = X.

# %%
print(hs_uni(parse_upoly("X^3", GF(2)), 2))

# %% [markdown]
# HD^i of x1...xn is the elementary symmetric polynomial of degree n - i.

# %%
x = product_of_variables(4)
for i in range(5):
    assert hs_multi(x, i) == elementary_symmetric(4, 4 - i)
    print(i, format_poly(hs_multi(x, i)))

# %% [markdown]
# The degree-3 table: entry i is Res(f, f_i) for f = X^3 + y1 X^2 + y2 X + y3.

# %%
table = disc_table(3)
for i, poly in sorted(table.entries.items()):
    print(i, format_poly(poly, y_names(3)))

# %% [markdown]
# Vanishing of the discriminant at a specialized f matches a nontrivial gcd.

# %%
F = GF(7)
g = parse_upoly("X^3 + 3*X^2 + 3*X + 1", F)  # (X + 1)^3
h = parse_upoly("X^3 + X + 1", F)
for poly in (g, h):
    ys = monic_coeff_vector(poly)
    print(poly, [(i, disc_at(3, i, ys, F) == 0, upoly_gcd(poly, hs_uni(poly, i)).degree) for i in (1, 2)])
