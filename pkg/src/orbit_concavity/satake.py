"""Satake diagrams of the simple real Lie algebras and the induced involution on roots.

Indices of simple roots are 0-based in every data structure here; the JSON
export and the command line use the 1-based ``alpha_i`` labels.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .rootsys import (
    RootSystem,
    apply_matrix,
    build_doubled_system,
    build_root_system,
    longest_element_action,
)

CATALOG_MAX_RANK = 8
MAX_RANK_ENV = "ORBIT_CONCAVITY_MAX_RANK"

ALWAYS_PSEUDOCONCAVE = frozenset(
    {"complex", "compact", "AII", "AIIIb", "BI", "BII", "CIIb", "DIa", "DIb", "DII", "DIIIa",
     "EII", "EIV", "EVI", "EVII", "EIX"}
)
CASE_FAMILIES = frozenset({"AIIIa", "AIV", "CIIa", "DIIIb", "EIII", "FII"})


class SatakeError(ValueError):
    pass


def default_max_rank() -> int:
    raw = os.environ.get(MAX_RANK_ENV)
    return int(raw) if raw else CATALOG_MAX_RANK


@dataclass(frozen=True)
class SatakeDiagram:
    name: str
    family: str
    type_label: str
    rank: int
    black: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...]
    dim_k: int
    params: tuple[tuple[str, int], ...] = ()

    @property
    def is_complex(self) -> bool:
        return self.family == "complex"

    @property
    def is_compact(self) -> bool:
        return self.family == "compact"

    @property
    def n_nodes(self) -> int:
        return 2 * self.rank if self.is_complex else self.rank

    @property
    def is_split(self) -> bool:
        return not self.black and not self.arrows

    @property
    def system(self) -> RootSystem:
        if self.is_complex:
            return build_doubled_system(self.type_label, self.rank)
        return build_root_system(self.type_label, self.rank)

    @property
    def label(self) -> str:
        """Cartan-style label such as ``AIIIa(2,3)``, ``EIII``, ``compact(E6)``."""
        if self.family in ("compact", "complex"):
            return f"{self.family}({self.type_label}{self.rank})"
        if self.is_split:
            return f"split({self.type_label}{self.rank})"
        p = dict(self.params)
        if "q" in p:
            return f"{self.family}({p['p']},{p['q']})"
        return self.family

    def param(self, key: str) -> int:
        return dict(self.params)[key]

    def arrow_map(self) -> tuple[int, ...]:
        s = list(range(self.n_nodes))
        for i, j in self.arrows:
            s[i], s[j] = j, i
        return tuple(s)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "label": self.label,
            "type": self.type_label,
            "rank": self.rank,
            "black": [i + 1 for i in self.black],
            "arrows": [[i + 1, j + 1] for i, j in self.arrows],
            "dim_k": self.dim_k,
            "params": dict(self.params),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SatakeDiagram":
        return cls(
            name=d["name"],
            family=d["family"],
            type_label=d["type"],
            rank=d["rank"],
            black=tuple(i - 1 for i in d["black"]),
            arrows=tuple((i - 1, j - 1) for i, j in d["arrows"]),
            dim_k=d["dim_k"],
            params=tuple(sorted(d.get("params", {}).items())),
        )


def _entry(name, family, t, rank, black=(), arrows=(), dim_k=0, **params) -> SatakeDiagram:
    return SatakeDiagram(
        name=name,
        family=family,
        type_label=t,
        rank=rank,
        black=tuple(sorted(black)),
        arrows=tuple(sorted(tuple(sorted(a)) for a in arrows)),
        dim_k=dim_k,
        params=tuple(sorted(params.items())),
    )


def _dim_so(n: int) -> int:
    return n * (n - 1) // 2


def _dim_sp(n: int) -> int:
    return n * (2 * n + 1)


_COMPACT_DIM = {"A": lambda l: (l + 1) ** 2 - 1, "B": lambda l: _dim_so(2 * l + 1),
                "C": lambda l: _dim_sp(l), "D": lambda l: _dim_so(2 * l),
                "E": lambda l: {6: 78, 7: 133, 8: 248}[l], "F": lambda l: 52, "G": lambda l: 14}


def _type_a(l: int):
    n = l + 1
    yield _entry(f"sl({n},R)", "AI", "A", l, dim_k=_dim_so(n))
    if n % 2 == 0 and n >= 4:
        m = n // 2
        yield _entry(f"sustar({n})", "AII", "A", l, black=range(0, l, 2), dim_k=_dim_sp(m))
    for p in range(1, n // 2 + 1):
        q = n - p
        if q == 1:
            continue  # su(1,1) is sl(2,R)
        arrows = [(i, l - 1 - i) for i in range(p) if i != l - 1 - i]
        if p == q:
            fam, black = "AIIIb", ()
        else:
            fam, black = ("AIV" if p == 1 else "AIIIa"), range(p, q - 1)
        yield _entry(f"su({p},{q})", fam, "A", l, black=black, arrows=arrows,
                     dim_k=p * p + q * q - 1, p=p, q=q)


def _type_b(l: int):
    n = 2 * l + 1
    for p in range(1, l + 1):
        fam = "BII" if p == 1 else "BI"
        yield _entry(f"so({p},{n - p})", fam, "B", l, black=range(p, l),
                     dim_k=_dim_so(p) + _dim_so(n - p), p=p, q=n - p)


def _type_c(l: int):
    yield _entry(f"sp({2 * l},R)", "CI", "C", l, dim_k=l * l)
    for p in range(1, l // 2 + 1):
        q = l - p
        black = [2 * h for h in range(p)] + list(range(2 * p, l))
        fam = "CIIb" if p == q else "CIIa"
        yield _entry(f"sp({p},{q})", fam, "C", l, black=black,
                     dim_k=_dim_sp(p) + _dim_sp(q), p=p, q=q)


def _type_d(l: int):
    n = 2 * l
    for p in range(1, l + 1):
        if p == 1:
            fam, black, arrows = "DII", range(1, l), ()
        elif p <= l - 2:
            fam, black, arrows = "DIa", range(p, l), ()
        elif p == l - 1:
            fam, black, arrows = "DIb", (), [(l - 2, l - 1)]
        else:
            fam, black, arrows = "DIc", (), ()
        yield _entry(f"so({p},{n - p})", fam, "D", l, black=black, arrows=arrows,
                     dim_k=_dim_so(p) + _dim_so(n - p), p=p, q=n - p)
    if l % 2 == 0:
        yield _entry(f"sostar({n})", "DIIIa", "D", l, black=range(0, l - 1, 2), dim_k=l * l)
    else:
        yield _entry(f"sostar({n})", "DIIIb", "D", l, black=range(0, l - 2, 2),
                     arrows=[(l - 2, l - 1)], dim_k=l * l, p=(l - 1) // 2)


def _type_e(l: int):
    if l == 6:
        yield _entry("eI", "EI", "E", 6, dim_k=36)
        yield _entry("eII", "EII", "E", 6, arrows=[(0, 5), (2, 4)], dim_k=38)
        yield _entry("eIII", "EIII", "E", 6, black=(2, 3, 4), arrows=[(0, 5)], dim_k=46)
        yield _entry("eIV", "EIV", "E", 6, black=(1, 2, 3, 4), dim_k=52)
    elif l == 7:
        yield _entry("eV", "EV", "E", 7, dim_k=63)
        yield _entry("eVI", "EVI", "E", 7, black=(1, 4, 6), dim_k=69)
        yield _entry("eVII", "EVII", "E", 7, black=(1, 2, 3, 4), dim_k=79)
    else:
        yield _entry("eVIII", "EVIII", "E", 8, dim_k=120)
        yield _entry("eIX", "EIX", "E", 8, black=(1, 2, 3, 4), dim_k=136)


def _type_f(l: int):
    yield _entry("fI", "FI", "F", 4, dim_k=24)
    yield _entry("fII", "FII", "F", 4, black=(0, 1, 2), dim_k=36)


def _type_g(l: int):
    yield _entry("g", "G", "G", 2, dim_k=6)


_FAMILIES = {"A": (_type_a, 1), "B": (_type_b, 2), "C": (_type_c, 3), "D": (_type_d, 4),
             "E": (_type_e, 6), "F": (_type_f, 4), "G": (_type_g, 2)}


def _ranks(t: str, max_rank: int):
    lo = _FAMILIES[t][1]
    if t == "E":
        return [l for l in (6, 7, 8) if l <= max_rank]
    if t in "FG":
        return [lo] if lo <= max_rank else []
    return list(range(lo, max_rank + 1))


def compact_entry(t: str, l: int) -> SatakeDiagram:
    return _entry(f"compact-{t}{l}", "compact", t, l, black=range(l), dim_k=_COMPACT_DIM[t](l))


def complex_entry(t: str, l: int) -> SatakeDiagram:
    # as a real algebra the maximal compact subalgebra is the compact form
    return _entry(f"complex-{t}{l}", "complex", t, l, arrows=[(i, i + l) for i in range(l)],
                  dim_k=_COMPACT_DIM[t](l))


@lru_cache(maxsize=None)
def _catalog(max_rank: int) -> tuple[SatakeDiagram, ...]:
    out = []
    for t in "ABCDEFG":
        make = _FAMILIES[t][0]
        for l in _ranks(t, max_rank):
            out.extend(make(l))
            out.append(compact_entry(t, l))
            out.append(complex_entry(t, l))
    return tuple(out)


def catalog(max_rank: int | None = None) -> list[SatakeDiagram]:
    """Every simple real form of complex rank ``<= max_rank`` (capped at the catalog bound)."""
    if max_rank is None:
        max_rank = default_max_rank()
    return list(_catalog(min(max_rank, CATALOG_MAX_RANK)))


def catalog_json(max_rank: int | None = None) -> str:
    return json.dumps([d.to_dict() for d in catalog(max_rank)], indent=2)


def _squash(name: str) -> str:
    return "".join(ch for ch in name.lower() if ch not in " (),_")


def resolve(name: str) -> SatakeDiagram:
    """Look up a catalog entry by canonical name or a squashed alias (``su13``, ``slC3``)."""
    entries = _catalog(CATALOG_MAX_RANK)
    raw = name.strip()
    for d in entries:
        if d.name.lower() == raw.lower():
            return d
    alias = _complex_alias(raw)
    if alias is not None:
        return alias
    key = _squash(raw)
    hits = [d for d in entries if _squash(d.name) == key]
    if len(hits) == 1:
        return hits[0]
    if hits:
        raise SatakeError(f"ambiguous algebra name {name!r}: {', '.join(d.name for d in hits)}")
    raise SatakeError(f"unknown algebra {name!r}; see the 'catalog' subcommand for valid names")


def _complex_alias(raw: str) -> SatakeDiagram | None:
    # slC<n>, spC<2n>, soC<n>
    if len(raw) < 4 or raw[2] != "C" or not raw[3:].isdigit():
        return None
    head, n = raw[:2].lower(), int(raw[3:])
    if head == "sl" and n >= 2:
        t, l = "A", n - 1
    elif head == "sp" and n % 2 == 0:
        t, l = "C", n // 2
    elif head == "so" and n >= 5:
        t, l = ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)
    else:
        return None
    for d in _catalog(CATALOG_MAX_RANK):
        if d.is_complex and d.type_label == t and d.rank == l:
            return d
    return None


@dataclass(frozen=True)
class ConjugationLatticeMap:
    """The involution ``sigma*`` on roots induced by the conjugation of the real form."""

    diagram: SatakeDiagram
    matrix: tuple[tuple[int, ...], ...]
    perm: tuple[int, ...]
    compact_roots: frozenset[int] = field(default_factory=frozenset)

    @property
    def system(self) -> RootSystem:
        return self.diagram.system

    def sigma_star(self, root) -> tuple[int, ...]:
        return apply_matrix(self.matrix, root)

    def is_real(self, k: int) -> bool:
        return self.perm[k] == k

    @cached_property
    def compact_simple(self) -> frozenset[int]:
        return frozenset(self.diagram.black)


def _validate(d: SatakeDiagram, R: RootSystem, m, perm, compact) -> None:
    n = R.rank
    s = d.arrow_map()
    black = set(d.black)
    for i, j in d.arrows:
        if i in black or j in black:
            raise SatakeError(f"{d.name}: arrow touches a black node")
    white = [i for i in range(n) if i not in black]
    for i in white:
        for j in white:
            if R.cartan[i][j] != R.cartan[s[i]][s[j]]:
                raise SatakeError(f"{d.name}: arrows do not preserve the Dynkin diagram")
    for k in range(len(R.roots)):
        if perm[perm[k]] != k:
            raise SatakeError(f"{d.name}: sigma* is not an involution")
    for i in range(n):
        img = R.index[apply_matrix(m, R.simple_root(i + 1))]
        if i in black and img != R.neg[i]:
            raise SatakeError(f"{d.name}: sigma* does not negate black node {i + 1}")
        if i not in black and img >= R.n_positive:
            raise SatakeError(f"{d.name}: sigma* sends white node {i + 1} to a negative root")
    supported = {k for k, r in enumerate(R.roots) if all(c == 0 or j in black for j, c in enumerate(r))}
    if supported != set(compact):
        raise SatakeError(f"{d.name}: compact roots differ from the black subsystem")


@lru_cache(maxsize=None)
def conjugation(d: SatakeDiagram) -> ConjugationLatticeMap:
    """``sigma* = w_black o s`` (longest element of the black Weyl group after the arrow permutation)."""
    R = d.system
    n = R.rank
    w = longest_element_action(R, d.black)
    s = d.arrow_map()
    black = set(d.black)
    cols = []
    for i in range(n):
        if i in black:
            cols.append(tuple(-int(j == i) for j in range(n)))
        else:
            cols.append(apply_matrix(w, R.simple_root(s[i] + 1)))
    m = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
    try:
        perm = tuple(R.index[apply_matrix(m, r)] for r in R.roots)
    except KeyError as exc:
        raise SatakeError(f"{d.name}: sigma* does not permute the roots") from exc
    compact = frozenset(k for k in range(len(R.roots)) if perm[k] == R.neg[k])
    _validate(d, R, m, perm, compact)
    return ConjugationLatticeMap(d, m, perm, compact)


def omega_set(d: SatakeDiagram) -> list[tuple[int, ...]]:
    """Positive real roots of the form ``alpha + sigma*(alpha)``, in root order."""
    c = conjugation(d)
    R = d.system
    out = set()
    for k in range(len(R.roots)):
        g = R.add[k].get(c.perm[k])
        if g is not None and g < R.n_positive and c.is_real(g):
            out.add(g)
    return [R.roots[g] for g in sorted(out)]
