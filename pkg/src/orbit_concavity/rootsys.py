"""Root systems of types A-G over the simple-root basis, in exact integer arithmetic.

Roots are integer coefficient tuples over the simple roots (Bourbaki numbering).
The only metric data used is the symmetric form on simple roots, from which
every coroot pairing ``beta(H_alpha) = 2 (beta, alpha) / (alpha, alpha)`` follows.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Root = tuple[int, ...]

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

CLASSICAL_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


class RootSystemError(ValueError):
    pass


def _dynkin(type_label: str, rank: int) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Squared lengths of the simple roots and off-diagonal inner products (0-based)."""
    n = rank
    edges: dict[tuple[int, int], int] = {}
    if type_label == "A":
        lengths = [2] * n
        for i in range(n - 1):
            edges[i, i + 1] = -1
    elif type_label == "B":
        lengths = [4] * (n - 1) + [2]
        for i in range(n - 1):
            edges[i, i + 1] = -2
    elif type_label == "C":
        lengths = [2] * (n - 1) + [4]
        for i in range(n - 2):
            edges[i, i + 1] = -1
        edges[n - 2, n - 1] = -2
    elif type_label == "D":
        lengths = [2] * n
        for i in range(n - 2):
            edges[i, i + 1] = -1
        edges[n - 3, n - 1] = -1
    elif type_label == "E":
        lengths = [2] * n
        edges[0, 2] = -1
        edges[1, 3] = -1
        for i in range(2, n - 1):
            edges[i, i + 1] = -1
    elif type_label == "F":
        lengths = [4, 4, 2, 2]
        edges[0, 1] = -2
        edges[1, 2] = -2
        edges[2, 3] = -1
    elif type_label == "G":
        lengths = [2, 6]
        edges[0, 1] = -3
    else:
        raise RootSystemError(f"unknown type {type_label!r}")
    return lengths, edges


class RootSystem:
    """A (possibly reducible) crystallographic root system given by a symmetric form.

    ``roots`` lists the positive roots first (ordered by height, then by
    descending coefficient tuple, so the simple roots come out as
    ``alpha_1, ..., alpha_l``), followed by their negatives in the same order.
    """

    def __init__(self, type_label: str, form: Sequence[Sequence[int]], components: tuple = ()):
        self.type_label = type_label
        self.rank = len(form)
        self.form = tuple(tuple(int(v) for v in row) for row in form)
        self.components = components or ((type_label, self.rank),)
        n = self.rank
        self.cartan = tuple(
            tuple(2 * self.form[i][j] // self.form[i][i] for j in range(n)) for i in range(n)
        )
        positives = _enumerate_positive(self.cartan)
        positives.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
        self.n_positive = len(positives)
        self.roots: tuple[Root, ...] = tuple(positives) + tuple(
            tuple(-c for c in r) for r in positives
        )
        self.index = {r: k for k, r in enumerate(self.roots)}
        npos = self.n_positive
        self.neg = tuple((k + npos) % (2 * npos) for k in range(2 * npos))
        self.norms = tuple(self.inner(r, r) for r in self.roots)
        # add[k] maps j -> index of roots[k] + roots[j], when that is a root
        self.add: tuple[dict[int, int], ...] = tuple(
            {j: self.index[s] for j, s in ((j, _vadd(r, t)) for j, t in enumerate(self.roots)) if s in self.index}
            for r in self.roots
        )

    def __repr__(self) -> str:
        return f"RootSystem({self.label!r}, {len(self.roots)} roots)"

    @property
    def label(self) -> str:
        return "+".join(f"{t}{n}" for t, n in self.components)

    @property
    def positives(self) -> range:
        return range(self.n_positive)

    @property
    def simple(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        f = self.form
        return sum(x[i] * f[i][j] * y[j] for i in range(self.rank) if x[i] for j in range(self.rank) if y[j])

    def pairing(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """``beta(H_alpha) = 2 (beta, alpha) / (alpha, alpha)``."""
        num = 2 * self.inner(beta, alpha)
        den = self.inner(alpha, alpha)
        if num % den:
            raise RootSystemError(f"non-integral pairing of {beta} with coroot of {alpha}")
        return num // den

    def coroot(self, alpha: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of ``H_alpha`` over the simple coroots ``H_{alpha_j}``."""
        norm = self.inner(alpha, alpha)
        out = []
        for j, a in enumerate(alpha):
            c = Fraction(a * self.form[j][j], norm)
            if c.denominator != 1:
                raise RootSystemError(f"non-integral coroot for {alpha}")
            out.append(int(c))
        return tuple(out)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.index

    def is_positive(self, v: Sequence[int]) -> bool:
        return self.index[tuple(v)] < self.n_positive

    def height(self, v: Sequence[int]) -> int:
        return sum(v)

    @property
    def highest_root(self) -> Root:
        """Highest root of the first (or only) component."""
        return self.roots[self.n_positive - 1]

    def simple_root(self, i: int) -> Root:
        """The simple root ``alpha_i`` for a 1-based index ``i``."""
        return tuple(int(j == i - 1) for j in range(self.rank))


def _vadd(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def _enumerate_positive(cartan) -> list[Root]:
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        q += 1
                    else:
                        break
                p = q - sum(beta[j] * cartan[i][j] for j in range(n))
                if p > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        out.extend(nxt)
        layer = nxt
    return out


def _form_for(type_label: str, rank: int) -> list[list[int]]:
    lengths, edges = _dynkin(type_label, rank)
    form = [[0] * rank for _ in range(rank)]
    for i, d in enumerate(lengths):
        form[i][i] = d
    for (i, j), v in edges.items():
        form[i][j] = form[j][i] = v
    return form


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """The irreducible root system of the given type (Bourbaki numbering)."""
    type_label = type_label.upper()
    if type_label not in VALID_RANKS:
        raise RootSystemError(f"unknown root system type {type_label!r}; expected one of A-G")
    if not isinstance(rank, int) or not VALID_RANKS[type_label](rank):
        raise RootSystemError(f"invalid rank {rank!r} for type {type_label}")
    return RootSystem(type_label, _form_for(type_label, rank))


@lru_cache(maxsize=None)
def build_doubled_system(type_label: str, rank: int) -> RootSystem:
    """``R x R``: the root system of the complexification of a complex simple algebra.

    Simple roots ``1..l`` belong to the first copy, ``l+1..2l`` to the second.
    """
    base = build_root_system(type_label, rank)
    n = base.rank
    form = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            form[i][j] = form[i + n][j + n] = base.form[i][j]
    t = base.type_label
    return RootSystem(f"{t}+{t}", form, components=((t, n), (t, n)))


def root_string(R: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, int]:
    """``(p, q)`` such that ``beta - q alpha, ..., beta + p alpha`` is the alpha-string through beta."""
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha not in R.index or beta not in R.index:
        raise RootSystemError("root_string needs two roots of the system")
    if beta == alpha or beta == tuple(-a for a in alpha):
        raise RootSystemError("degenerate string: beta is +-alpha")
    p = 0
    while _vadd(beta, tuple((p + 1) * a for a in alpha)) in R.index:
        p += 1
    q = 0
    while _vadd(beta, tuple(-(q + 1) * a for a in alpha)) in R.index:
        q += 1
    return p, q


def reflect(R: RootSystem, alpha: Sequence[int], lam: Sequence[int]) -> Root:
    """``lam - lam(H_alpha) alpha``."""
    k = R.pairing(lam, alpha)
    return tuple(l - k * a for l, a in zip(lam, alpha))


def _reflection_matrix(R: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    # column j is s_i(alpha_j)
    n = R.rank
    cols = [reflect(R, R.simple_root(i + 1), R.simple_root(j + 1)) for j in range(n)]
    return tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n))


def apply_matrix(m, v: Sequence[int]) -> Root:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _is_nonneg(v) -> bool:
    return all(c >= 0 for c in v)


@lru_cache(maxsize=None)
def _longest_matrix(R: RootSystem, subset: frozenset[int]):
    n = R.rank
    w = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    refl = {i: _reflection_matrix(R, i) for i in subset}
    while True:
        # l(w s_i) > l(w) iff w(alpha_i) > 0
        for i in sorted(subset):
            if _is_nonneg(apply_matrix(w, R.simple_root(i + 1))):
                w = _matmul(w, refl[i])
                break
        else:
            return w


def longest_element_action(R: RootSystem, subset: Iterable[int]):
    """Integer matrix of the longest element of the Weyl group generated by ``subset``.

    ``subset`` holds 0-based simple-root indices.  The matrix acts on
    coefficient column vectors; use :func:`apply_matrix`.
    """
    return _longest_matrix(R, frozenset(subset))
