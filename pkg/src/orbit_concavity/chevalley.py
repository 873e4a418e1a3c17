"""Chevalley structure constants, brackets and the Killing form.

Convention (used verbatim everywhere in the package):

* ``[X_a, X_-a] = -H_a`` with ``a(H_a) = 2``,
* ``[H_a, X_b] = b(H_a) X_b``,
* ``[X_a, X_b] = N_{a,b} X_{a+b}``,
* the linear map ``X_a -> X_-a, H -> -H`` is an automorphism, hence
  ``N_{-a,-b} = N_{a,b}``.

The table is produced from the textbook Chevalley basis ``e_a``
(``[e_a, e_-a] = h_a``, ``N^e_{-a,-b} = -N^e_{a,b}``) with ``N^e = +(q+1)``
on extraspecial pairs, and then rescaled by ``X_a = e_a`` for ``a > 0``,
``X_a = -e_a`` for ``a < 0``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .exact import ZERO, GaussianRational, gauss
from .rootsys import RootSystem, root_string

SIGN_CONVENTION = "extraspecial-positive"


class StructureConstants:
    def __init__(self, system: RootSystem, N: Mapping[tuple[int, int], int]):
        self.system = system
        self.N = dict(N)
        self.sign_convention = SIGN_CONVENTION
        R = system
        self.coroots = tuple(R.coroot(r) for r in R.roots)
        # pair[k][j] = roots[k](H_{alpha_j})
        self.pair = tuple(
            tuple(sum(r[m] * R.cartan[j][m] for m in range(R.rank)) for j in range(R.rank))
            for r in R.roots
        )

    def __repr__(self) -> str:
        return f"StructureConstants({self.system.label}, {len(self.N)} nonzero)"

    def constant(self, alpha, beta) -> int:
        """``N_{alpha,beta}`` for coefficient tuples; ``KeyError`` when ``alpha+beta`` is not a root."""
        R = self.system
        return self.N[R.index[tuple(alpha)], R.index[tuple(beta)]]

    def get(self, a: int, b: int) -> int:
        """``N`` by root index, 0 when the sum is not a root."""
        return self.N.get((a, b), 0)

    @lru_cache(maxsize=None)
    def killing_pair(self, k: int) -> int:
        """``kappa(X_-a, X_a)`` for ``a = roots[k]``.

        Invariance gives ``kappa(H_a, H_a) = -2 kappa(X_a, X_-a)`` and
        ``kappa(H_a, H_a)`` is the sum of ``b(H_a)^2`` over all roots ``b``.
        """
        R = self.system
        h = self.coroots[k]
        total = sum(sum(p[j] * h[j] for j in range(R.rank)) ** 2 for p in self.pair)
        assert total % 2 == 0
        return -total // 2


def _standard_table(R: RootSystem) -> dict[tuple[int, int], int]:
    npos = R.n_positive
    table: dict[tuple[int, int], int] = {}
    norms = R.norms
    neg = R.neg

    def n_std(r: int, s: int) -> Fraction:
        k = R.add[r].get(s)
        if k is None:
            return Fraction(0)
        rp, sp = r < npos, s < npos
        if rp and sp:
            return Fraction(table[r, s])
        if not rp and not sp:
            return -n_std(neg[r], neg[s])
        t = neg[k]
        tp = t < npos
        if sp == tp:
            return Fraction(norms[t], norms[r]) * n_std(s, t)
        return Fraction(norms[t], norms[s]) * n_std(t, r)

    for xi in range(R.rank, npos):
        pairs = []
        for a in range(xi):
            b = R.add[xi].get(neg[a])
            if b is not None and b < npos and a < b:
                pairs.append((a, b))
        a0, b0 = pairs[0]
        _, q = root_string(R, R.roots[a0], R.roots[b0])
        e = q + 1
        table[a0, b0], table[b0, a0] = e, -e
        for c, d in pairs[1:]:
            val = Fraction(0)
            if neg[a0] in R.add[d]:
                val += n_std(d, neg[a0]) * n_std(c, neg[b0]) / norms[R.add[d][neg[a0]]]
            if neg[a0] in R.add[c]:
                val += n_std(neg[a0], c) * n_std(d, neg[b0]) / norms[R.add[c][neg[a0]]]
            val *= Fraction(norms[xi], e)
            if val.denominator != 1:
                raise ArithmeticError(f"non-integral structure constant for pair {c, d}")
            table[c, d], table[d, c] = int(val), -int(val)

    out = {}
    for r in range(len(R.roots)):
        for s in R.add[r]:
            out[r, s] = int(n_std(r, s))
    return out


@lru_cache(maxsize=None)
def build_constants(R: RootSystem) -> StructureConstants:
    """Integer ``N_{a,b}`` for every pair with ``a+b`` a root, in the package convention."""
    npos = R.n_positive
    std = _standard_table(R)
    sgn = lambda k: 1 if k < npos else -1
    N = {(r, s): v * sgn(r) * sgn(s) * sgn(R.add[r][s]) for (r, s), v in std.items()}
    return StructureConstants(R, N)


class AlgebraElement:
    """``sum h_j H_{alpha_j} + sum x_k X_{roots[k]}`` with Gaussian-rational coefficients."""

    __slots__ = ("system", "h", "x_part")

    def __init__(self, system: RootSystem, h: Iterable = (), x_part: Mapping[int, GaussianRational] | None = None):
        self.system = system
        h = tuple(h)
        self.h = h if h else (ZERO,) * system.rank
        self.x_part = {k: v for k, v in (x_part or {}).items() if v}

    @classmethod
    def x(cls, system: RootSystem, k: int, coeff=1) -> "AlgebraElement":
        return cls(system, (), {k: gauss(coeff) if not isinstance(coeff, type(ZERO)) else coeff})

    @classmethod
    def root_vector(cls, system: RootSystem, alpha, coeff=1) -> "AlgebraElement":
        return cls.x(system, system.index[tuple(alpha)], coeff)

    @classmethod
    def cartan(cls, system: RootSystem, coeffs: Iterable) -> "AlgebraElement":
        return cls(system, tuple(gauss(c) if not isinstance(c, type(ZERO)) else c for c in coeffs))

    @classmethod
    def coroot(cls, S: StructureConstants, k: int) -> "AlgebraElement":
        return cls.cartan(S.system, S.coroots[k])

    def coefficient(self, alpha) -> GaussianRational:
        return self.x_part.get(self.system.index[tuple(alpha)], ZERO)

    def is_zero(self) -> bool:
        return not self.x_part and not any(self.h)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        xs = dict(self.x_part)
        for k, v in other.x_part.items():
            xs[k] = xs.get(k, ZERO) + v
        return AlgebraElement(self.system, tuple(a + b for a, b in zip(self.h, other.h)), xs)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(gauss(-1))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        if not isinstance(c, type(ZERO)):
            c = gauss(c)
        return AlgebraElement(self.system, tuple(c * a for a in self.h), {k: c * v for k, v in self.x_part.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self) -> str:
        R = self.system
        terms = [f"({v})H{j + 1}" for j, v in enumerate(self.h) if v]
        terms += [f"({v})X{R.roots[k]}" for k, v in sorted(self.x_part.items())]
        return " + ".join(terms) or "0"


def _bracket_into(S: StructureConstants, ca, a_kind, a, cb, b_kind, b, h_acc, x_acc):
    """Accumulate ``ca*cb*[basis_a, basis_b]`` where kinds are 'h' (index j) or 'x' (root index)."""
    R = S.system
    if a_kind == "h":
        if b_kind == "h":
            return
        c = S.pair[b][a]
        if c:
            x_acc[b] = x_acc.get(b, ZERO) + ca * cb * c
        return
    if b_kind == "h":
        c = S.pair[a][b]
        if c:
            x_acc[a] = x_acc.get(a, ZERO) - ca * cb * c
        return
    if b == R.neg[a]:
        coeff = ca * cb
        for j, v in enumerate(S.coroots[a]):
            if v:
                h_acc[j] = h_acc[j] - coeff * v
        return
    k = R.add[a].get(b)
    if k is not None:
        x_acc[k] = x_acc.get(k, ZERO) + ca * cb * S.N[a, b]


def bracket(S: StructureConstants, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    h_acc = [ZERO] * S.system.rank
    x_acc: dict[int, GaussianRational] = {}
    xt = [("h", j, c) for j, c in enumerate(x.h) if c] + [("x", k, c) for k, c in x.x_part.items()]
    yt = [("h", j, c) for j, c in enumerate(y.h) if c] + [("x", k, c) for k, c in y.x_part.items()]
    for ak, a, ca in xt:
        for bk, b, cb in yt:
            _bracket_into(S, ca, ak, a, cb, bk, b, h_acc, x_acc)
    return AlgebraElement(S.system, h_acc, x_acc)


def killing(S: StructureConstants, x: AlgebraElement, y: AlgebraElement) -> GaussianRational:
    """``trace(ad x o ad y)`` computed over the basis ``H_{alpha_j}, X_a``."""
    R = S.system
    total = ZERO
    for j in range(R.rank):
        e = AlgebraElement.cartan(R, [int(i == j) for i in range(R.rank)])
        total += bracket(S, x, bracket(S, y, e)).h[j]
    for k in range(len(R.roots)):
        total += bracket(S, x, bracket(S, y, AlgebraElement.x(R, k))).x_part.get(k, ZERO)
    return total


def jacobi_defect(S: StructureConstants, a: int, b: int, c: int):
    """``[X_a,[X_b,X_c]] + [X_b,[X_c,X_a]] + [X_c,[X_a,X_b]]`` for root indices.

    Returns ``None`` when ``a+b+c`` is neither a root nor zero (every term then
    vanishes), the coefficient of ``X_{a+b+c}`` when it is a root, and the
    coefficients over the simple coroots when it is zero.
    """
    R = S.system
    add, neg, N, pair, coroots = R.add, R.neg, S.N, S.pair, S.coroots
    ra, rb, rc = R.roots[a], R.roots[b], R.roots[c]
    total = tuple(x + y + z for x, y, z in zip(ra, rb, rc))
    cyc = ((a, b, c), (b, c, a), (c, a, b))
    if not any(total):
        # [X_x, N_yz X_-x] = -N_yz H_x
        vec = [0] * R.rank
        for x, y, z in cyc:
            n = N[y, z]
            for j, v in enumerate(coroots[x]):
                vec[j] -= n * v
        return tuple(vec)
    if total not in R.index:
        return None
    out = 0
    for x, y, z in cyc:
        if z == neg[y]:  # [X_x, -H_y] = x(H_y) X_x
            out += sum(pair[x][j] * coroots[y][j] for j in range(R.rank))
            continue
        yz = add[y].get(z)
        if yz is not None:
            out += N[y, z] * N[x, yz]
    return out
