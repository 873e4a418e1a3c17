"""
Levi forms on the minimal orbits of SU(1,3)
===========================================

Two flag manifolds of sl(4,C), two different answers.  The real form su(1,3)
has one black node (alpha_2) and an arrow joining alpha_1 and alpha_3.
"""

from orbit_concavity import build_real_structure, build_spec, decide, hermitian_signature, levi_matrix, resolve

su13 = resolve("su(1,3)")
rs = build_real_structure(su13)
print(su13.label, "black:", [i + 1 for i in su13.black], "arrows:", [(i + 1, j + 1) for i, j in su13.arrows])

# sigma* on the simple roots: black roots flip sign, white roots follow the arrow
for i in range(1, 4):
    a = su13.system.simple_root(i)
    print(f"sigma*(alpha_{i}) =", rs.sigma_star.sigma_star(a))

# %%
# Crossing the black node.  The only real characteristic root is the highest root,
# and its Levi form has one positive and one negative direction.
spec = build_spec(su13, [2])
L = levi_matrix(spec, rs, (1, 1, 1))
print(spec.describe())
print("index:", L.index)
print(L.pretty())
print(hermitian_signature(L), "->", decide(spec).decision.value)

# %%
# Crossing alpha_1 instead.  Both diagonal entries now share a sign: the form is
# semidefinite and nonzero, so no Hermitian metric can make it trace-free.
spec = build_spec(su13, [1])
L = levi_matrix(spec, rs, (1, 1, 1))
print(spec.describe())
print(L.pretty())
print(hermitian_signature(L), "->", decide(spec).decision.value)
