"""Command-line front end: ``orbit-concavity {classify,inspect,enumerate,catalog,verify-theorem}``.

Algebra names: ``su(p,q)``, ``sp(p,q)``, ``so(p,q)``, ``sl(n,R)``, ``sp(2n,R)``,
``sustar(2n)``, ``sostar(2n)``, ``eI`` .. ``eIX``, ``fI``, ``fII``, ``g``,
``compact-<X><l>`` and ``complex-<X><l>`` (also ``slC<n>``, ``spC<2n>``,
``soC<n>``).  Parentheses and commas may be dropped (``su13``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classifier import (
    Decision,
    closed_form_table,
    decide,
    decide_lemma_iii,
    decide_proposition,
    enumerate_and_crosscheck,
    crosscheck_form,
    CrosscheckReport,
    with_certificate,
)
from .cralg import SpecError, build_spec
from .leviform import (
    RealStructureError,
    build_real_structure,
    hermitian_parts,
    hermitian_signature,
    levi_matrix,
    matrix_dump,
)
from .rootsys import RootSystemError
from .satake import CATALOG_MAX_RANK, SatakeError, catalog, default_max_rank, resolve

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with 2, which means "disagreement" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _root_str(r) -> str:
    return ",".join(map(str, r))


def _phi_str(phi) -> str:
    return "{" + ", ".join(f"alpha_{i}" for i in phi) + "}"


def _max_rank(value: int | None) -> int:
    r = default_max_rank() if value is None else value
    if r > CATALOG_MAX_RANK:
        print(f"warning: max rank {r} exceeds the catalog bound; capped to {CATALOG_MAX_RANK}",
              file=sys.stderr)
        r = CATALOG_MAX_RANK
    if r < 1:
        raise UsageError("max rank must be at least 1")
    return r


def _spec_from(args):
    try:
        d = resolve(args.algebra)
    except SatakeError as exc:
        raise UsageError(str(exc)) from None
    try:
        return build_spec(d, _ints(args.phi or "", "--phi"))
    except SpecError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_classify(args) -> int:
    spec = _spec_from(args)
    rs = build_real_structure(spec.diagram)
    route = {"default": decide, "proposition": decide_proposition, "lemma": decide_lemma_iii}
    v = route[args.route](spec, rs)
    if args.certificate:
        v = with_certificate(v, spec, rs)
    table = closed_form_table(spec)
    if args.format == "json":
        out = v.to_dict()
        out["spec"] = spec.to_dict()
        out["table_decision"] = table.decision.value
        _emit(args, json.dumps(out, indent=2))
        return EXIT_OK
    d = spec.diagram
    real = [spec.system.roots[g] for g in spec.real_characteristic]
    lines = [
        f"algebra: {d.name} [{d.label}]",
        f"Phi: {_phi_str(spec.phi)}",
        f"fundamental: {'yes' if v.fundamental else 'no'}",
        f"real characteristic roots: {'; '.join(_root_str(r) for r in real) or 'none'}",
    ]
    for g in v.per_gamma:
        cls = g.form_class.value if g.real else f"Re {g.re_class.value}, Im {g.im_class.value}"
        lines.append(f"  gamma = {_root_str(g.gamma)}  {'real' if g.real else 'non-real'}  {cls}  rank {g.rank}")
    lines.append(f"decision: {v.decision.value} (route: {v.route})")
    if v.witness:
        lines.append(f"witness: gamma = {_root_str(v.witness.gamma)}")
    if v.certificate is not None:
        lines.append("diagonal certificate: " + "; ".join(f"{_root_str(r)} -> {w}" for r, w in v.certificate.items()))
    if v.note:
        lines.append(f"note: {v.note}")
    lines.append(f"classification table: {table.decision.value}")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_inspect(args) -> int:
    spec = _spec_from(args)
    gamma = _ints(args.gamma, "--gamma")
    R = spec.system
    valid = "; ".join(_root_str(R.roots[g]) for g in spec.characteristic) or "none"
    if gamma not in R.index or R.index[gamma] not in set(spec.characteristic):
        raise UsageError(f"{_root_str(gamma) or 'empty vector'} is not a characteristic root of "
                         f"{spec.describe()}; valid gamma: {valid}")
    rs = build_real_structure(spec.diagram)
    g = R.index[gamma]
    H = levi_matrix(spec, rs, g)
    is_real = rs.sigma_star.is_real(g)
    forms = {"L": H} if is_real else dict(zip(("Re L", "Im L"), hermitian_parts(H)))
    if args.format == "json":
        if is_real:
            out = matrix_dump(H, {"real": True})
        else:
            out = H.to_dict()
            out["real"] = False
            out["parts"] = {k: matrix_dump(f) for k, f in forms.items()}
            re_sig = hermitian_signature(forms["Re L"])
            out["signature"] = re_sig.to_dict()
            out["class"] = re_sig.form_class.value
        _emit(args, json.dumps(out, indent=2))
        return EXIT_OK
    lines = [f"{spec.describe()}, gamma = {_root_str(gamma)} ({'real' if is_real else 'non-real'})",
             "index: " + "; ".join(_root_str(r) for r in H.index),
             "pairs (alpha, beta) with alpha + conj(beta) = gamma: "
             + ("; ".join(f"({_root_str(a)} | {_root_str(b)})" for a, b in H.pairs) or "none")]
    for name, F in forms.items():
        sig = hermitian_signature(F)
        lines += [f"{name}:", F.pretty() if F.size else "(empty)",
                  f"signature (n+, n-, n0) = ({sig.n_plus}, {sig.n_minus}, {sig.n_zero}), "
                  f"rank {sig.rank}, class {sig.form_class.value}"]
    _emit(args, "\n".join(lines))
    return EXIT_OK


def _render_report(args, report: CrosscheckReport) -> None:
    if args.format == "json":
        _emit(args, report.to_json())
    elif args.format == "csv":
        _emit(args, report.to_csv().rstrip("\n"))
    else:
        _emit(args, report.summary_table())


def cmd_enumerate(args) -> int:
    if args.algebra:
        try:
            d = resolve(args.algebra)
        except SatakeError as exc:
            raise UsageError(str(exc)) from None
        report = CrosscheckReport(d.rank, crosscheck_form(d))
    else:
        report = enumerate_and_crosscheck(_max_rank(args.max_rank), workers=args.workers)
    if args.format == "text":
        lines = [f"{r.form:<14} {_phi_str(r.phi):<40} {r.decision_algorithmic:<25} "
                 f"table {r.decision_table:<25} {r.status}" for r in report.rows]
        _emit(args, "\n".join(lines))
    else:
        _render_report(args, report)
    return EXIT_OK


def cmd_catalog(args) -> int:
    entries = catalog(_max_rank(args.max_rank))
    if args.format == "json":
        _emit(args, json.dumps([d.to_dict() for d in entries], indent=2))
        return EXIT_OK
    lines = []
    for d in entries:
        black = ",".join(str(i + 1) for i in d.black) or "-"
        arrows = " ".join(f"{i + 1}<->{j + 1}" for i, j in d.arrows) or "-"
        lines.append(f"{d.name:<14} {d.label:<16} {d.type_label}{d.rank:<3} black {black:<16} "
                     f"arrows {arrows:<24} dim k {d.dim_k}")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = enumerate_and_crosscheck(_max_rank(args.max_rank), workers=args.workers)
    _render_report(args, report)
    if args.format == "text":
        print(f"{len(report.disagreements)} disagreements", file=sys.stderr)
    return EXIT_DISAGREE if report.disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orbit-concavity", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")

    c = sub.add_parser("classify", help="decide essential pseudoconcavity for (algebra, Phi)")
    c.add_argument("algebra")
    c.add_argument("--phi", default="", help="crossed simple roots, 1-based, e.g. 1,3")
    c.add_argument("--route", choices=("default", "proposition", "lemma"), default="default")
    c.add_argument("--certificate", action="store_true", help="search a diagonal trace-zero metric")
    common(c)
    c.set_defaults(func=cmd_classify)

    i = sub.add_parser("inspect", help="dump the Levi form L_gamma with its exact signature")
    i.add_argument("algebra")
    i.add_argument("--phi", default="")
    i.add_argument("--gamma", required=True, help="characteristic root as coefficients, e.g. 1,2,3,2")
    common(i)
    i.set_defaults(func=cmd_inspect)

    e = sub.add_parser("enumerate", help="every Phi for one algebra, or for the whole catalog")
    e.add_argument("algebra", nargs="?")
    e.add_argument("--max-rank", type=int)
    e.add_argument("--workers", type=int, default=1)
    common(e, ("text", "json", "csv"))
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("catalog", help="list the Satake diagrams")
    k.add_argument("--max-rank", type=int)
    common(k)
    k.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify-theorem", help="cross-check the classification over the catalog")
    v.add_argument("--max-rank", type=int)
    v.add_argument("--workers", type=int, default=1)
    common(v, ("text", "json", "csv"))
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"orbit-concavity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RealStructureError, SatakeError, RootSystemError, AssertionError, ArithmeticError) as exc:
        print(f"orbit-concavity: internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
