# Two curves on D_3 meeting four times.  Their twist product is pseudo-Anosov;
# we compare the growth of curve lengths with the 2x2 matrix picture.

# %%
import math

import numpy as np

from planarmcg import classify, growth_rate, paper_family, product, stretch_from_z, thurston_rep
from planarmcg.pa import curve_lengths

F = paper_family(1, 1, 1, 1)  # tau_B1 tau_B2 on D_3
B1, B2 = F
print("B1:", B1.cls, " B2:", B2.cls)

# %% lengths of f^k(B1) grow geometrically (exact integers throughout)
f = product(F)
L = curve_lengths(f, B1, 12)
print(L)
ratios = np.array(L[1:], dtype=float) / np.array(L[:-1], dtype=float)
print(np.round(ratios, 6))

# %% the matrix model with intersection number z = 4
a, b = thurston_rep(4)
m = a @ b
print(m.tolist(), "trace", m.trace)
print("classify:", classify(m))
print("7 + 4 sqrt 3 =", 7 + 4 * math.sqrt(3))
print("growth after 20 steps:", growth_rate(f, B1, 20), "closed form:", stretch_from_z(4))
