"""Essential pseudoconcavity of minimal orbits: three decision routes and a cross-check harness.

* :func:`decide_proposition` looks only at real characteristic roots and
  needs a fundamental CR algebra.
* :func:`decide_lemma_iii` looks at every characteristic root, splitting
  non-real Levi forms into their Hermitian real and imaginary parts.
* :func:`closed_form_table` evaluates the classification conditions directly
  from the Satake data.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from sympy.solvers.simplex import InfeasibleLPError, linprog

from .cralg import CRAlgebraSpec, build_spec, enumerate_phis, is_fundamental
from .exact import real
from .leviform import (
    FormClass,
    RealStructure,
    RealStructureError,
    build_real_structure,
    levi_entries,
    levi_matrix,
    sparse_is_hermitian,
    sparse_parts,
    sparse_signature,
)
from .satake import (
    ALWAYS_PSEUDOCONCAVE,
    CATALOG_MAX_RANK,
    SatakeDiagram,
    catalog,
)

log = logging.getLogger(__name__)

_ACCEPTED = (FormClass.ZERO, FormClass.INDEFINITE)


class Decision(str, enum.Enum):
    ESSENTIALLY_PSEUDOCONCAVE = "EssentiallyPseudoconcave"
    NOT = "Not"
    TRIVIALLY_YES = "TriviallyYes"
    INAPPLICABLE = "Inapplicable"

    @property
    def is_yes(self) -> bool:
        return self in (Decision.ESSENTIALLY_PSEUDOCONCAVE, Decision.TRIVIALLY_YES)


@dataclass(frozen=True)
class GammaClass:
    gamma: tuple[int, ...]
    real: bool
    form_class: FormClass | None = None
    re_class: FormClass | None = None
    im_class: FormClass | None = None
    rank: int = 0

    @property
    def accepted(self) -> bool:
        if self.real:
            return self.form_class in _ACCEPTED
        return self.re_class in _ACCEPTED and self.im_class in _ACCEPTED

    def to_dict(self) -> dict:
        out = {"gamma": list(self.gamma), "real": self.real, "rank": self.rank}
        if self.real:
            out["class"] = self.form_class.value
        else:
            out["re_class"] = self.re_class.value
            out["im_class"] = self.im_class.value
        return out


@dataclass(frozen=True)
class Verdict:
    algebra: str
    family: str
    phi: tuple[int, ...]
    fundamental: bool
    degenerate: bool
    decision: Decision
    route: str
    per_gamma: tuple[GammaClass, ...] = ()
    witness: GammaClass | None = None
    certificate: dict[tuple[int, ...], Fraction] | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "family": self.family,
            "phi": list(self.phi),
            "fundamental": self.fundamental,
            "degenerate": self.degenerate,
            "decision": self.decision.value,
            "route": self.route,
            "per_gamma": [g.to_dict() for g in self.per_gamma],
            "witness": self.witness.to_dict() if self.witness else None,
            "certificate": (
                [{"root": list(r), "weight": str(w)} for r, w in self.certificate.items()]
                if self.certificate is not None else None
            ),
            "note": self.note,
        }


def _classify_gamma(spec: CRAlgebraSpec, rs: RealStructure, g: int) -> GammaClass:
    entries = levi_entries(spec, rs, g)
    n = len(spec.holomorphic_index)
    root = spec.system.roots[g]
    if rs.sigma_star.is_real(g):
        if not sparse_is_hermitian(entries):
            raise RealStructureError(f"L_gamma is not Hermitian for real gamma {root}")
        sig = sparse_signature(n, entries)
        return GammaClass(root, True, form_class=sig.form_class, rank=sig.rank)
    re, im = sparse_parts(entries)
    sr, si = sparse_signature(n, re), sparse_signature(n, im)
    return GammaClass(root, False, re_class=sr.form_class, im_class=si.form_class,
                      rank=max(sr.rank, si.rank))


def _verdict(spec, route, gammas, fundamental) -> Verdict:
    bad = next((g for g in gammas if not g.accepted), None)
    return Verdict(
        algebra=spec.diagram.name,
        family=spec.diagram.family,
        phi=spec.phi,
        fundamental=fundamental,
        degenerate=False,
        decision=Decision.NOT if bad else Decision.ESSENTIALLY_PSEUDOCONCAVE,
        route=route,
        per_gamma=tuple(gammas),
        witness=bad,
    )


def _trivial(spec: CRAlgebraSpec, route: str) -> Verdict:
    return Verdict(spec.diagram.name, spec.diagram.family, spec.phi, True, True,
                   Decision.TRIVIALLY_YES, route, note="Phi is empty: the orbit is a point")


def decide_proposition(spec: CRAlgebraSpec, rs: RealStructure | None = None,
                       fundamental: bool | None = None) -> Verdict:
    """Zero-or-indefinite test on ``L_gamma`` for the real characteristic roots only."""
    if spec.degenerate:
        return _trivial(spec, "proposition")
    if fundamental is None:
        fundamental = is_fundamental(spec)
    if not fundamental:
        return Verdict(spec.diagram.name, spec.diagram.family, spec.phi, False, False,
                       Decision.INAPPLICABLE, "proposition",
                       note="not fundamental: the real-root criterion does not apply")
    rs = rs or build_real_structure(spec.diagram)
    gammas = [_classify_gamma(spec, rs, g) for g in spec.real_characteristic]
    return _verdict(spec, "proposition", gammas, True)


def decide_lemma_iii(spec: CRAlgebraSpec, rs: RealStructure | None = None,
                     fundamental: bool | None = None) -> Verdict:
    """Zero-or-indefinite test on every characteristic root (Re and Im parts when not real)."""
    if spec.degenerate:
        return _trivial(spec, "lemma-iii")
    if fundamental is None:
        fundamental = is_fundamental(spec)
    rs = rs or build_real_structure(spec.diagram)
    gammas = [_classify_gamma(spec, rs, g) for g in spec.characteristic]
    return _verdict(spec, "lemma-iii", gammas, fundamental)


def decide(spec: CRAlgebraSpec, rs: RealStructure | None = None) -> Verdict:
    """The default route: the real-root criterion, or the full criterion when not fundamental."""
    fundamental = is_fundamental(spec)
    v = decide_proposition(spec, rs, fundamental)
    if v.decision is Decision.INAPPLICABLE:
        v = decide_lemma_iii(spec, rs, fundamental)
    return v


def _table_condition(d: SatakeDiagram, phi: frozenset[int]) -> tuple[bool, str]:
    fam = d.family
    black = {i + 1 for i in d.black}
    l = d.rank
    if fam in ALWAYS_PSEUDOCONCAVE:
        return True, f"{fam} is always essentially pseudoconcave"
    if fam in ("AIIIa", "AIV"):
        p, q = d.param("p"), d.param("q")
        outer = {i for i in range(1, l + 1) if i < p or i > q}
        ok = phi <= black or phi <= outer
        return ok, f"Phi in R_black or Phi in {{i<{p}}} u {{i>{q}}}"
    if fam == "CIIa":
        p = d.param("p")
        odd = {2 * h - 1 for h in range(1, p + 1)}
        tail = {i for i in range(1, l + 1) if i > 2 * p}
        return phi <= odd or phi <= tail, f"Phi in {{alpha_(2h-1), h<={p}}} or Phi in {{i>{2 * p}}}"
    if fam == "DIIIb":
        return not (phi & {l - 1, l}), f"Phi avoids alpha_{l - 1}, alpha_{l}"
    if fam == "EIII":
        ok = (4 in phi and phi <= black) or phi == {3, 5}
        return ok, "alpha_4 in Phi in R_black, or Phi = {alpha_3, alpha_5}"
    if fam == "FII":
        return phi <= {1, 2}, "Phi in {alpha_1, alpha_2}"
    raise ValueError(f"{d.name}: split forms are outside the classification")


def table_applies(d: SatakeDiagram) -> bool:
    return not d.is_split


def closed_form_table(spec: CRAlgebraSpec) -> Verdict:
    """The printed classification conditions, bound to the catalog's ``p, q, l`` and black nodes."""
    d = spec.diagram
    if not table_applies(d):
        return Verdict(d.name, d.family, spec.phi, False, spec.degenerate, Decision.INAPPLICABLE,
                       "table", note="split forms are excluded from the classification")
    if spec.degenerate:
        return _trivial(spec, "table")
    ok, why = _table_condition(d, frozenset(spec.phi))
    return Verdict(d.name, d.family, spec.phi, True, False,
                   Decision.ESSENTIALLY_PSEUDOCONCAVE if ok else Decision.NOT, "table", note=why)


def diagonal_certificate(spec: CRAlgebraSpec, rs: RealStructure | None = None) -> dict | None:
    """Rational weights ``w >= 1`` on the holomorphic index with ``sum w_a L_gamma(X_a, X_a) = 0``.

    One equation per real characteristic root; non-real roots impose nothing on
    a diagonal metric.  Returns ``None`` when the exact LP is infeasible.
    """
    rs = rs or build_real_structure(spec.diagram)
    R = spec.system
    n = len(spec.holomorphic_index)
    rows = []
    for g in spec.real_characteristic:
        H = levi_matrix(spec, rs, g)
        diag = [real(H.entries[i][i]) for i in range(n)]
        if any(diag):
            rows.append(diag)
    if not rows:
        weights = [Fraction(1)] * n
    else:
        # w = 1 + v with v >= 0; the dummy inequality row is needed by sympy's linprog
        try:
            _, sol = linprog([1] * n, A=[[0] * n], b=[0], A_eq=rows, b_eq=[-sum(r) for r in rows])
        except InfeasibleLPError:
            return None
        weights = [1 + Fraction(str(v)) for v in sol]
        if any(sum(w * a for w, a in zip(weights, r)) for r in rows):
            raise ArithmeticError("linear solver returned a non-solution")
    return {R.roots[k]: w for k, w in zip(spec.holomorphic_index, weights)}


def with_certificate(v: Verdict, spec: CRAlgebraSpec, rs: RealStructure | None = None) -> Verdict:
    if v.decision is not Decision.ESSENTIALLY_PSEUDOCONCAVE or v.route != "proposition":
        return v
    cert = diagonal_certificate(spec, rs)
    note = v.note if cert is not None else "no diagonal certificate (the verdict stands)"
    return Verdict(**{**v.__dict__, "certificate": cert, "note": note})


# ---------------------------------------------------------------- harness

@dataclass
class CrosscheckRow:
    form: str
    label: str
    family: str
    phi: tuple[int, ...]
    fundamental: bool
    decision_algorithmic: str
    decision_table: str
    agree: bool | None
    status: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["phi"] = list(self.phi)
        return d


@dataclass
class CrosscheckReport:
    max_rank: int
    rows: list[CrosscheckRow] = field(default_factory=list)

    @property
    def disagreements(self) -> list[CrosscheckRow]:
        return [r for r in self.rows if r.agree is False]

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, Counter] = defaultdict(Counter)
        for r in self.rows:
            out[r.family]["rows"] += 1
            out[r.family][r.status] += 1
        return {k: dict(v) for k, v in sorted(out.items())}

    def to_json(self) -> str:
        return json.dumps({
            "max_rank": self.max_rank,
            "n_rows": len(self.rows),
            "n_disagreements": len(self.disagreements),
            "summary": self.summary(),
            "rows": [r.to_dict() for r in self.rows],
        }, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["form", "phi", "decision_algorithmic", "decision_table", "agree",
                    "family", "fundamental", "status"])
        for r in self.rows:
            agree = "" if r.agree is None else str(r.agree).lower()
            w.writerow([r.form, " ".join(map(str, r.phi)), r.decision_algorithmic,
                        r.decision_table, agree, r.family, str(r.fundamental).lower(), r.status])
        return buf.getvalue()

    def summary_table(self) -> str:
        cols = ["agree", "disagree", "excluded: non-fundamental", "degenerate"]
        lines = [f"{'family':<10}{'rows':>7}" + "".join(f"{c.split(':')[0]:>11}" for c in cols)]
        for fam, counts in self.summary().items():
            lines.append(f"{fam:<10}{counts['rows']:>7}" + "".join(f"{counts.get(c, 0):>11}" for c in cols))
        lines.append(f"{len(self.rows)} rows, {len(self.disagreements)} disagreements")
        return "\n".join(lines)


def crosscheck_form(d: SatakeDiagram) -> list[CrosscheckRow]:
    """Every ``Phi`` for one catalog form."""
    rs = build_real_structure(d)
    rows = []
    for phi in enumerate_phis(d):
        spec = build_spec(d, phi)
        algo = decide(spec, rs)
        table = closed_form_table(spec)
        if spec.degenerate:
            status, agree = "degenerate", None
        elif not algo.fundamental:
            status, agree = "excluded: non-fundamental", None
        elif table.decision is Decision.INAPPLICABLE:
            status, agree = "excluded: split", None
        else:
            agree = algo.decision.is_yes == table.decision.is_yes
            status = "agree" if agree else "disagree"
        witness = algo.to_dict() if agree is False else (algo.witness.to_dict() if algo.witness else None)
        rows.append(CrosscheckRow(d.name, d.label, d.family, spec.phi, algo.fundamental,
                                  algo.decision.value, table.decision.value, agree, status, witness))
    return rows


def _form_rows(name_rank: tuple[str, int]) -> list[CrosscheckRow]:
    name, max_rank = name_rank
    d = next(x for x in catalog(max_rank) if x.name == name)
    return crosscheck_form(d)


def enumerate_and_crosscheck(max_rank: int, report_sink: Callable[[CrosscheckRow], None] | None = None,
                             workers: int | None = None) -> CrosscheckReport:
    """Run every route over every catalog form of rank ``<= max_rank`` and every ``Phi``.

    ``workers`` > 1 evaluates forms in a process pool; rows are merged in
    catalog order, so the report does not depend on scheduling.
    """
    if max_rank > CATALOG_MAX_RANK:
        raise ValueError(f"max_rank {max_rank} exceeds the catalog bound {CATALOG_MAX_RANK}")
    forms = catalog(max_rank)
    if workers is None:
        workers = int(os.environ.get("ORBIT_CONCAVITY_WORKERS", "1"))
    report = CrosscheckReport(max_rank)
    if workers > 1:
        # biggest forms first keeps the pool busy
        order = sorted(forms, key=lambda d: -(2 ** d.n_nodes) * len(d.system.roots))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = dict(zip((d.name for d in order),
                               pool.map(_form_rows, [(d.name, max_rank) for d in order])))
        chunks: Iterable[list[CrosscheckRow]] = (results[d.name] for d in forms)
    else:
        chunks = (crosscheck_form(d) for d in forms)
    for rows in chunks:
        for r in rows:
            if report_sink:
                report_sink(r)
            report.rows.append(r)
    for r in report.disagreements:
        log.warning("disagreement: %s Phi=%s algorithmic=%s table=%s",
                    r.form, r.phi, r.decision_algorithmic, r.decision_table)
    return report
