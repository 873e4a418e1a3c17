"""Real structures on the Chevalley basis, Levi forms ``L_gamma`` and exact signatures.

The conjugation of the real form acts on root vectors as
``sigma(X_a) = c_a X_{sigma* a}`` with ``c_a`` a fourth root of unity.  The
compact conjugation is ``tau(X_a) = X_-a``, ``tau(H) = -H``; the Cartan
involution is ``theta = sigma o tau``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from sympy import Matrix

from .chevalley import AlgebraElement, StructureConstants, bracket, build_constants
from .cralg import CRAlgebraSpec, alpha_pairs
from .exact import I, ONE, ZERO, GaussianRational, conj, fmt, gauss, real, to_pair
from .rootsys import root_string
from .satake import ConjugationLatticeMap, SatakeDiagram, conjugation

TAU_CONVENTION = "tau(X_a) = X_-a, tau(H) = -H"

# i**e for e mod 4
_POWERS = (ONE, I, -ONE, -I)


class RealStructureError(RuntimeError):
    pass


class FormClass(str, enum.Enum):
    ZERO = "Zero"
    INDEFINITE = "Indefinite"
    SEMIDEFINITE_POSITIVE = "SemidefinitePositive"
    SEMIDEFINITE_NEGATIVE = "SemidefiniteNegative"

    @property
    def is_semidefinite_nonzero(self) -> bool:
        return self in (FormClass.SEMIDEFINITE_POSITIVE, FormClass.SEMIDEFINITE_NEGATIVE)


@dataclass(frozen=True)
class RealStructure:
    diagram: SatakeDiagram
    sigma_star: ConjugationLatticeMap
    exponents: tuple[int, ...]
    theta_fixed_dim: int
    tau_convention: str = TAU_CONVENTION

    @property
    def c(self) -> tuple[GaussianRational, ...]:
        return tuple(_POWERS[e] for e in self.exponents)

    def unit(self, k: int) -> GaussianRational:
        return _POWERS[self.exponents[k]]


def _sign_pattern(S: StructureConstants, perm: Sequence[int]) -> list[int]:
    """``eta(a) = +-1``: the constants ``c_a`` obtained when every simple ``c_i`` is 1."""
    R = S.system
    n, npos = R.rank, R.n_positive
    eta = [0] * len(R.roots)
    for i in range(n):
        eta[i] = eta[R.neg[i]] = 1
    for k in range(n, npos):
        for sign_offset in (0, npos):
            xi = k + sign_offset
            for i in range(n):
                si = R.neg[i] if sign_offset else i
                rest = R.add[xi].get(R.neg[si])
                if rest is not None and (rest < npos) == (sign_offset == 0):
                    break
            else:  # pragma: no cover - every non-simple root has such a decomposition
                raise AssertionError("root without a simple decomposition")
            num = S.N[perm[si], perm[rest]]
            den = S.N[si, rest]
            eta[xi] = eta[rest] * num // den
    return eta


def _theta_fixed_dim(d: SatakeDiagram, cmap: ConjugationLatticeMap, exps: Sequence[int]) -> int:
    R = d.system
    n = R.rank
    m = Matrix(cmap.matrix) + Matrix.eye(n)
    dim = n - m.rank()
    pairs = 0
    for k in range(len(R.roots)):
        partner = R.neg[cmap.perm[k]]
        if partner != k:
            pairs += 1
        elif exps[R.neg[k]] == 0:  # theta acts on g_a by c_{-a}
            dim += 1
    return dim + pairs // 2


def _polar(n: int, e: int) -> tuple[int, int]:
    return (abs(n), (e + (2 if n < 0 else 0)) % 4)


def check_real_structure(S: StructureConstants, cmap: ConjugationLatticeMap, exps: Sequence[int]) -> str | None:
    """The first violated constraint, or ``None`` when all hold."""
    R = S.system
    perm = cmap.perm
    for k in range(len(R.roots)):
        if (exps[perm[k]] - exps[k]) % 4:
            return f"involution fails at {R.roots[k]}"
        if (exps[k] + exps[R.neg[k]]) % 4:
            return f"c_-a != conj(c_a) at {R.roots[k]}"
        if k in cmap.compact_roots and exps[k]:
            return f"c != 1 on compact root {R.roots[k]}"
    for (a, b), nab in S.N.items():
        # compare N_ab c_{a+b} with c_a c_b N_{sigma* a, sigma* b} as (|N|, exponent of i)
        lhs = _polar(nab, exps[R.add[a][b]])
        rhs = _polar(S.N[perm[a], perm[b]], exps[a] + exps[b])
        if lhs != rhs:
            return f"multiplicativity fails at ({R.roots[a]}, {R.roots[b]})"
    return None


@lru_cache(maxsize=None)
def build_real_structure(d: SatakeDiagram) -> RealStructure:
    """Solve for the units ``c_a`` realizing the real form of ``d`` on the Chevalley basis.

    Black simple roots get ``c = 1``.  One unit is searched per orbit of the
    arrow permutation on white nodes (``1`` tried first); the partner of an
    arrow is then forced by the involution constraint, and every other root
    follows by multiplicativity.  Each candidate is checked against all
    constraints and against ``dim k``; failure is an error, never a fallback.
    """
    R = d.system
    S = build_constants(R)
    cmap = conjugation(d)
    perm = cmap.perm
    n, npos = R.rank, R.n_positive
    eta = _sign_pattern(S, perm)
    eta_exp = [0 if v == 1 else 2 for v in eta]
    s = d.arrow_map()
    black = set(d.black)
    reps = [i for i in range(n) if i not in black and s[i] >= i]
    last = "no candidate assignment"
    for choice in itertools.product(range(4), repeat=len(reps)):
        simple = [0] * n
        for i, e in zip(reps, choice):
            simple[i] = e
            if s[i] != i:
                # conj(c_i) c_{sigma* a_i} = 1 with c_{sigma* a_i} = eta * c_{s(i)}
                simple[s[i]] = (e + eta_exp[perm[i]]) % 4
        exps = []
        for k, r in enumerate(R.roots):
            exps.append((eta_exp[k] + sum(m * simple[j] for j, m in enumerate(r))) % 4)
        problem = check_real_structure(S, cmap, exps)
        if problem is None:
            dim = _theta_fixed_dim(d, cmap, exps)
            if dim == d.dim_k:
                return RealStructure(d, cmap, tuple(exps), dim)
            problem = f"theta-fixed dimension {dim} != dim k = {d.dim_k}"
        last = problem
    raise RealStructureError(f"{d.name}: no real structure on this Chevalley system ({last})")


@dataclass(frozen=True)
class Signature:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def form_class(self) -> FormClass:
        if self.n_plus and self.n_minus:
            return FormClass.INDEFINITE
        if self.n_plus:
            return FormClass.SEMIDEFINITE_POSITIVE
        if self.n_minus:
            return FormClass.SEMIDEFINITE_NEGATIVE
        return FormClass.ZERO

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    def to_dict(self) -> dict:
        return {"n_plus": self.n_plus, "n_minus": self.n_minus, "n_zero": self.n_zero,
                "class": self.form_class.value}


@dataclass(frozen=True)
class HermitianForm:
    """A square matrix indexed by roots; Hermitian unless produced raw for a non-real ``gamma``."""

    index: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[GaussianRational, ...], ...]
    gamma: tuple[int, ...] | None = None
    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.index)

    def is_hermitian(self) -> bool:
        e = self.entries
        return all(e[i][j] == conj(e[j][i]) for i in range(self.size) for j in range(i, self.size))

    def is_zero(self) -> bool:
        return not any(v for row in self.entries for v in row)

    def to_dict(self) -> dict:
        return {
            "gamma": list(self.gamma) if self.gamma is not None else None,
            "index": [list(r) for r in self.index],
            "entries": [[to_pair(v) for v in row] for row in self.entries],
            "pairs": [[list(a), list(b)] for a, b in self.pairs],
        }

    def pretty(self) -> str:
        cells = [[fmt(v) for v in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def fixing_scalar(c_minus_gamma: GaussianRational) -> GaussianRational:
    """A nonzero ``u`` with ``conj(u) * c = u``, so that ``u X_-gamma`` is fixed by ``sigma``."""
    table = {ONE: ONE, -ONE: I, I: ONE + I, -I: ONE - I}
    return table[c_minus_gamma]


Sparse = dict[tuple[int, int], GaussianRational]


def levi_entries(spec: CRAlgebraSpec, rs: RealStructure, g: int, flip: bool = False) -> Sparse:
    """Nonzero entries of ``L_gamma`` keyed by positions in the holomorphic index."""
    R = spec.system
    S = build_constants(R)
    perm = rs.sigma_star.perm
    u = fixing_scalar(rs.unit(R.neg[g])) if rs.sigma_star.is_real(g) else ONE
    if flip:
        u = -u
    factor = -I * u * S.killing_pair(g)  # 1/i = -i
    pos = spec.holomorphic_position
    return {(pos[a], pos[b]): factor * rs.unit(b) * S.N[a, perm[b]] for a, b in alpha_pairs(spec, g)}


def levi_matrix(spec: CRAlgebraSpec, rs: RealStructure, gamma, flip: bool = False) -> HermitianForm:
    """``L_gamma(X_a, X_b) = (1/i) kappa(Z_-gamma, [X_a, sigma X_b])`` on the holomorphic index.

    For real ``gamma``, ``Z_-gamma = u X_-gamma`` is fixed by ``sigma`` and the
    result is Hermitian; otherwise ``Z_-gamma = X_-gamma`` and the raw
    matrix is meant for :func:`hermitian_parts`.  ``flip`` uses ``-u``.
    """
    R = spec.system
    g = gamma if isinstance(gamma, int) else spec.index_of(gamma)
    pairs = alpha_pairs(spec, g)
    entries = levi_entries(spec, rs, g, flip)
    if rs.sigma_star.is_real(g) and not sparse_is_hermitian(entries):
        raise RealStructureError(f"L_gamma is not Hermitian for real gamma {R.roots[g]}")
    return HermitianForm(
        index=tuple(R.roots[k] for k in spec.holomorphic_index),
        entries=_dense(len(spec.holomorphic_index), entries),
        gamma=R.roots[g],
        pairs=tuple((R.roots[a], R.roots[b]) for a, b in pairs),
    )


def _dense(n: int, entries: Sparse):
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def _sparse(entries) -> Sparse:
    return {(i, j): v for i, row in enumerate(entries) for j, v in enumerate(row) if v}


def sparse_is_hermitian(entries: Sparse) -> bool:
    return all(entries.get((j, i), ZERO) == conj(v) for (i, j), v in entries.items())


_HALF = gauss(Fraction(1, 2))


def sparse_parts(entries: Sparse) -> tuple[Sparse, Sparse]:
    re: Sparse = {}
    im: Sparse = {}
    for key in set(entries) | {(j, i) for i, j in entries}:
        i, j = key
        v, w = entries.get(key, ZERO), conj(entries.get((j, i), ZERO))
        if v + w:
            re[key] = _HALF * (v + w)
        if v - w:
            im[key] = -I * _HALF * (v - w)
    return re, im


def hermitian_parts(raw: HermitianForm) -> tuple[HermitianForm, HermitianForm]:
    """``((raw + raw*)/2, (raw - raw*)/(2i))``."""
    re, im = sparse_parts(_sparse(raw.entries))
    n = raw.size
    return (HermitianForm(raw.index, _dense(n, re), raw.gamma, raw.pairs),
            HermitianForm(raw.index, _dense(n, im), raw.gamma, raw.pairs))


def _components(n: int, entries: Sparse) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in entries:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in sorted({k for ij in entries for k in ij}):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _inertia(a: list[list[GaussianRational]]) -> tuple[int, int]:
    """Positive and negative indices of inertia by Hermitian congruence (destroys ``a``)."""
    plus = minus = 0
    live = list(range(len(a)))
    while live:
        piv = next((i for i in live if a[i][i]), None)
        if piv is None:
            hit = next(((i, j) for i in live for j in live if i != j and a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            lam = conj(a[i][j])
            # column/row i <- e_i + lam e_j; new a_ii = 2 |a_ij|^2
            for k in live:
                a[k][i] = a[k][i] + lam * a[k][j]
            cl = conj(lam)
            for k in live:
                a[i][k] = a[i][k] + cl * a[j][k]
            piv = i
        d = a[piv][piv]
        if real(d) > 0:
            plus += 1
        else:
            minus += 1
        live.remove(piv)
        inv = ONE / d
        row = a[piv]
        for k in live:
            ck = a[k][piv]
            if not ck:
                continue
            f = ck * inv
            ak = a[k]
            for m in live:
                if row[m]:
                    ak[m] = ak[m] - f * row[m]
    return plus, minus


def sparse_signature(n: int, entries: Sparse) -> Signature:
    """Exact inertia of a Hermitian matrix given by its nonzero entries."""
    plus = minus = 0
    for comp in _components(n, entries):
        if len(comp) == 1:
            v = entries.get((comp[0], comp[0]))
            if v is not None:
                if real(v) > 0:
                    plus += 1
                else:
                    minus += 1
            continue
        block = [[entries.get((i, j), ZERO) for j in comp] for i in comp]
        p, m = _inertia(block)
        plus += p
        minus += m
    return Signature(plus, minus, n - plus - minus)


def hermitian_signature(H: HermitianForm) -> Signature:
    """Exact ``(n_plus, n_minus, n_zero)`` by block-wise congruence diagonalization."""
    if not H.is_hermitian():
        raise ValueError("hermitian_signature needs a Hermitian matrix")
    return sparse_signature(H.size, _sparse(H.entries))


def form_class(H: HermitianForm) -> FormClass:
    return hermitian_signature(H).form_class


def matrix_dump(H: HermitianForm, extra: dict | None = None) -> dict:
    sig = hermitian_signature(H)
    out = H.to_dict()
    out["signature"] = sig.to_dict()
    out["class"] = sig.form_class.value
    if extra:
        out.update(extra)
    return out


def conjugate(rs: RealStructure, x: AlgebraElement) -> AlgebraElement:
    """``sigma(x)``: antilinear, ``X_a -> c_a X_{sigma* a}`` and ``H_a -> H_{sigma* a}``."""
    R = x.system
    S = build_constants(R)
    perm = rs.sigma_star.perm
    h = [ZERO] * R.rank
    for j, v in enumerate(x.h):
        if v:
            for m, w in enumerate(S.coroots[perm[j]]):
                h[m] = h[m] + conj(v) * w
    xs = {perm[k]: conj(v) * rs.unit(k) for k, v in x.x_part.items()}
    return AlgebraElement(R, h, xs)


@dataclass(frozen=True)
class ChainCase:
    """One instance of ``[X_{a+b}, sigma X_{a+b}] = (p - p'(1+q')) [X_b, sigma X_b]``."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    p: int
    p_prime: int
    q_prime: int
    lhs: AlgebraElement
    rhs: AlgebraElement

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def bracket_chain_cases(rs: RealStructure) -> list[ChainCase]:
    """Every ``alpha`` compact, ``beta`` with ``alpha+beta`` a root, ``beta-alpha`` not, ``beta+sigma* beta`` a root."""
    R = rs.diagram.system
    S = build_constants(R)
    perm = rs.sigma_star.perm
    out = []
    for a in sorted(rs.sigma_star.compact_roots):
        for b, ab in sorted(R.add[a].items()):
            if R.add[b].get(R.neg[a]) is not None:
                continue
            g = R.add[b].get(perm[b])
            if g is None:
                continue
            p, q = root_string(R, R.roots[a], R.roots[b])
            assert q == 0
            p2, q2 = root_string(R, R.roots[a], R.roots[g])
            xab = AlgebraElement.x(R, ab)
            xb = AlgebraElement.x(R, b)
            lhs = bracket(S, xab, conjugate(rs, xab))
            rhs = bracket(S, xb, conjugate(rs, xb)).scale(p - p2 * (1 + q2))
            out.append(ChainCase(R.roots[a], R.roots[b], p, p2, q2, lhs, rhs))
    return out
