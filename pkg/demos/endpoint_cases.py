"""
Rank-one witnesses in F II and E III
====================================

Crossing alpha_3 breaks essential pseudoconcavity in both exceptional real forms,
and in both cases a single Levi form of rank one is enough to see it.
"""

from orbit_concavity import build_real_structure, build_spec, decide, hermitian_signature, levi_matrix, resolve
from orbit_concavity.exact import fmt

for name, phi, gamma in [("fII", [3], (1, 2, 3, 2)), ("eIII", [3], (1, 2, 2, 3, 2, 1))]:
    spec = build_spec(resolve(name), phi)
    rs = build_real_structure(spec.diagram)
    verdict = decide(spec)
    L = levi_matrix(spec, rs, gamma)
    nonzero = [(L.index[i], fmt(L.entries[i][j])) for i in range(L.size) for j in range(L.size) if L.entries[i][j]]
    print(spec.describe(), "->", verdict.decision.value)
    print("  gamma =", gamma, hermitian_signature(L), "nonzero entries:", nonzero)

# %%
# Crossing alpha_1 of F II keeps every real Levi form indefinite, and a diagonal
# trace-free metric exists.
from orbit_concavity import diagonal_certificate

spec = build_spec(resolve("fII"), [1])
print(spec.describe(), "->", decide(spec).decision.value)
print("diagonal weights:", {r: str(w) for r, w in diagonal_certificate(spec).items()})

# %%
# Indefinite is not the same as diagonally certifiable: su(2,4) with Phi = {alpha_1}
# is essentially pseudoconcave, yet the diagonal of its Levi form is (0, 12, 12, 0).
spec = build_spec(resolve("su(2,4)"), [1])
L = levi_matrix(spec, build_real_structure(spec.diagram), (1, 1, 1, 1, 1))
print(L.pretty())
print(decide(spec).decision.value, "certificate:", diagonal_certificate(spec))
