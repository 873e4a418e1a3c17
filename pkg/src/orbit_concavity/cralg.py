"""Parabolic CR algebras attached to a cross-marked Satake diagram.

``Phi`` is always given by 1-based simple-root labels, as in ``Phi = {alpha_2}``
-> ``(2,)``.  All root sets are stored as tuples of indices into
``system.roots`` in canonical root order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .rootsys import Root, RootSystem
from .satake import ConjugationLatticeMap, SatakeDiagram, conjugation, resolve


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class CRAlgebraSpec:
    diagram: SatakeDiagram
    phi: tuple[int, ...]
    q_roots: tuple[int, ...]
    nilradical: tuple[int, ...]
    conj_nilradical: tuple[int, ...]
    characteristic: tuple[int, ...]
    holomorphic_index: tuple[int, ...]
    real_characteristic: tuple[int, ...]

    @property
    def system(self) -> RootSystem:
        return self.diagram.system

    @property
    def conj(self) -> ConjugationLatticeMap:
        return conjugation(self.diagram)

    @property
    def degenerate(self) -> bool:
        return not self.phi

    @cached_property
    def holomorphic_position(self) -> dict[int, int]:
        return {k: n for n, k in enumerate(self.holomorphic_index)}

    def roots_of(self, indices: Iterable[int]) -> list[Root]:
        R = self.system
        return [R.roots[k] for k in indices]

    def index_of(self, gamma) -> int:
        try:
            return self.system.index[tuple(gamma)]
        except KeyError as exc:
            raise SpecError(f"{tuple(gamma)} is not a root of {self.system.label}") from exc

    def describe(self) -> str:
        phi = "{" + ", ".join(f"alpha_{i}" for i in self.phi) + "}"
        return f"{self.diagram.name}, Phi = {phi}"

    def to_dict(self) -> dict:
        rs = lambda ks: [list(r) for r in self.roots_of(ks)]
        return {
            "algebra": self.diagram.name,
            "phi": list(self.phi),
            "q_roots": rs(self.q_roots),
            "nilradical": rs(self.nilradical),
            "conj_nilradical": rs(self.conj_nilradical),
            "characteristic": rs(self.characteristic),
            "holomorphic_index": rs(self.holomorphic_index),
            "real_characteristic": rs(self.real_characteristic),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CRAlgebraSpec":
        return build_spec(resolve(d["algebra"]), d["phi"])


def build_spec(diagram: SatakeDiagram, phi: Iterable[int]) -> CRAlgebraSpec:
    """Root combinatorics of ``(g, q_Phi)``; ``phi`` holds 1-based simple-root labels."""
    R = diagram.system
    labels = tuple(sorted(set(int(i) for i in phi)))
    for i in labels:
        if not 1 <= i <= R.rank:
            raise SpecError(f"simple root index {i} out of range 1..{R.rank} for {diagram.name}")
    marks = [i - 1 for i in labels]
    c = conjugation(diagram)

    q = tuple(k for k, r in enumerate(R.roots) if all(r[m] >= 0 for m in marks))
    qset = set(q)
    nil = tuple(k for k in q if R.neg[k] not in qset)
    nil_set = set(nil)
    conj_nil = tuple(sorted(c.perm[k] for k in nil))
    conj_set = set(conj_nil)
    char = tuple(k for k in nil if k in conj_set)
    hol = tuple(k for k in nil if k not in conj_set)
    real = tuple(k for k in char if c.is_real(k))
    assert nil_set.issuperset(char)
    return CRAlgebraSpec(diagram, labels, q, nil, conj_nil, char, hol, real)


def is_fundamental(spec: CRAlgebraSpec) -> bool:
    """Whether ``Q_Phi`` and its conjugate generate every root under root addition.

    This is the root-level form of ``q + conj(q)`` generating ``g``; it
    stands in for the finite-kind condition on the minimal orbit.
    """
    R = spec.system
    perm = spec.conj.perm
    total = len(R.roots)
    seen = set(spec.q_roots)
    seen.update(perm[k] for k in spec.q_roots)
    if len(seen) == total:
        return True
    work = list(seen)
    add = R.add
    while work:
        k = work.pop()
        for j, s in add[k].items():
            if j in seen and s not in seen:
                seen.add(s)
                work.append(s)
        if len(seen) == total:
            return True
    return False


def alpha_pairs(spec: CRAlgebraSpec, gamma: int) -> list[tuple[int, int]]:
    """Ordered pairs ``(alpha, beta)`` in the holomorphic index with ``alpha + sigma*(beta) = gamma``."""
    if gamma not in set(spec.characteristic):
        raise SpecError(f"{spec.system.roots[gamma]} is not a characteristic root of {spec.describe()}")
    R = spec.system
    perm = spec.conj.perm
    pos = spec.holomorphic_position
    out = []
    for b in spec.holomorphic_index:
        a = R.add[gamma].get(R.neg[perm[b]])
        if a is not None and a in pos:
            out.append((a, b))
    out.sort(key=lambda ab: (pos[ab[0]], pos[ab[1]]))
    return out


def enumerate_phis(diagram: SatakeDiagram):
    """Every ``Phi`` (1-based labels) in a fixed order: by size, then lexicographically."""
    from itertools import combinations

    n = diagram.n_nodes
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)
