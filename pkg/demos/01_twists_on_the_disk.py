# Dehn twists on a disk with holes, seen through the free group.
#
# pi_1 of D_n is free on x_1..x_n, one loop per hole.  A mapping class is stored
# by where it sends each generator, so equality of mapping classes is exact.

# %%
from planarmcg import Word, compose, curve, equals, half_twist, invert

n = 3
s1, s2 = half_twist(1, n), half_twist(2, n)
for i, w in enumerate(s1.images, 1):
    print(f"s1: x{i} -> {Word(w, n)}")

# %% braid relation, checked on automorphisms
lhs = compose(compose(s1, s2), s1)
rhs = compose(compose(s2, s1), s2)
print("s1 s2 s1 == s2 s1 s2:", equals(lhs, rhs))

# %% curves are named by the holes they enclose plus a conjugating braid
a = curve({1, 2}, n)
b = curve({1, 2}, n, "s2^-1")
print(a.cls, "|", b.cls)
print("same curve?", a == b)

# %% twisting about a curve, then undoing it
ta = a.twist
print("tau_a images:", [str(Word(w, n)) for w in ta.images])
print("tau_a tau_a^-1 is trivial:", equals(compose(ta, invert(ta)), compose(s1, invert(s1))))
