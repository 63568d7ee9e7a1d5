"""Command line interface: manifests in, one structured document out.

Every command prints a single JSON document (or a human rendering with
--format human) on stdout and exits 0 when it computed a verdict; not-CY
and Infinite are answers, not failures.  Exit codes: 2 for parse and
usage errors, 3 when a command needs hypotheses the input violates, 4 for
internal defects.  Output is deterministic: sorted keys, reduced
(order, exponent) scalar pairs, counts tagged finite/infinite, and the
sha256 digest of the input embedded in the report.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import manifest as manifest_mod
from .cycert import certify_mixed, certify_segre, certify_weighted
from .errors import HypothesisViolation, InternalDefect, ManifestError
from .hilbert import quotient_by_regular, series_qpoly
from .points import (
    INFINITE,
    admissible_supports,
    census_weighted_surface,
    is_special,
    max_stratum_dimension,
    pi_degree,
    point_scheme_dim_product,
)
from .qalgebra import center_lattice, chart_parameters, second_chart_scalar
from .search import enumerate_cy_weights, search_q_params
from .cycert import Verdict


def _pair(scalar) -> list[int]:
    return list(scalar.pair())


def _tagged(count) -> dict:
    if count is INFINITE:
        return {"kind": "infinite"}
    return {"kind": "finite", "value": int(count)}


def _args_input(label: str, **kwargs) -> dict:
    canon = label + "".join(f" {k}={v}" for k, v in sorted(kwargs.items()))
    return {
        "args": canon,
        "digest": hashlib.sha256(canon.encode()).hexdigest(),
    }


def _load(args) -> manifest_mod.Manifest:
    return manifest_mod.load(args.input)


def _single_spec(man: manifest_mod.Manifest):
    if len(man.algebras) != 1:
        raise ValueError("this command takes a manifest with one algebra")
    return man.algebras[0].spec()


def _violations(cert) -> list[dict]:
    return [
        {"kind": v.kind, "where": list(v.where), "detail": v.detail}
        for v in cert.violations
    ]


def cmd_certify(args) -> dict:
    man = _load(args)
    criterion = man.criterion
    if criterion is None:
        criterion = "weighted" if len(man.algebras) == 1 else "segre"
    need = 1 if criterion == "weighted" else 2
    if len(man.algebras) != need:
        raise ValueError(
            f"criterion {criterion} needs {need} algebra(s), "
            f"manifest has {len(man.algebras)}")
    specs = [a.spec() for a in man.algebras]
    if criterion == "weighted":
        cert = certify_weighted(specs[0])
    elif criterion == "segre":
        cert = certify_segre(specs[0], specs[1])
    else:
        cert = certify_mixed(specs[0], specs[1])
    return {
        "command": "certify",
        "criterion": criterion,
        "input": {"path": args.input, "digest": man.digest},
        "result": {
            "verdict": cert.verdict.value,
            "witness": None if cert.witness is None else [_pair(w) for w in cert.witness],
            "expected_dimension": cert.expected_dimension,
            "violations": _violations(cert),
            "detail": cert.detail,
        },
    }


def cmd_census(args) -> dict:
    man = _load(args)
    spec = _single_spec(man)
    report = census_weighted_surface(spec)
    charts = []
    for chart in report.charts:
        charts.append({
            "chart": chart.chart,
            "description": chart.description,
            "count": _tagged(chart.count),
            "items": [
                {"support": list(item.support), "count": _tagged(item.count)}
                for item in chart.items
            ],
            "trivial_pairs": [list(p) for p in chart.trivial_pairs],
        })
    return {
        "command": "census",
        "input": {"path": args.input, "digest": man.digest},
        "result": {
            "weights": list(report.weights),
            "order": report.order,
            "total": _tagged(report.total),
            "charts": charts,
            "second_chart_scalar": _pair(second_chart_scalar(spec)),
        },
    }


def cmd_point_scheme(args) -> dict:
    man = _load(args)
    if len(man.algebras) == 1:
        spec = man.algebras[0].spec()
        result = {
            "special": is_special(spec),
            "admissible_supports": [list(s) for s in admissible_supports(spec)],
            "max_stratum_dimension": max_stratum_dimension(spec),
        }
    else:
        specs = [a.spec() for a in man.algebras]
        g_shape = "mixed" if man.criterion == "mixed" else "fermat"
        result = {
            "g_shape": g_shape,
            "dimension": point_scheme_dim_product(
                specs[0], specs[1], "fermat", g_shape),
        }
    return {
        "command": "point-scheme",
        "input": {"path": args.input, "digest": man.digest},
        "result": result,
    }


def cmd_pi_degree(args) -> dict:
    man = _load(args)
    spec = _single_spec(man)
    kept = None
    if args.chart is not None:
        chart = chart_parameters(spec, args.chart)
        kept = list(chart.kept)
        spec = chart.spec
    from .cyclo import image_size

    size = image_size([list(r) for r in spec.exponents], spec.order)
    return {
        "command": "pi-degree",
        "input": {"path": args.input, "digest": man.digest},
        "result": {
            "chart": args.chart,
            "kept": kept,
            "image_size": size,
            "pi_degree": pi_degree(spec),
        },
    }


def _series_doc(series) -> dict:
    return {
        "numerator": [
            [list(e), c] for e, c in sorted(series.numerator.items())
        ],
        "denominator": [list(f) for f in series.denominator],
    }


def cmd_hilbert(args) -> dict:
    man = _load(args)
    spec = _single_spec(man)
    k = args.max_degree
    base = series_qpoly(spec.weights)
    quotient = None
    try:
        h = spec.fermat_exponents()
    except HypothesisViolation:
        h = None
    if h is not None:
        q = quotient_by_regular(base, spec.total_degree)
        quotient = {
            "degree": spec.total_degree,
            "series": _series_doc(q),
            "coefficients": list(q.prefix(k)),
        }
    return {
        "command": "hilbert",
        "input": {"path": args.input, "digest": man.digest},
        "result": {
            "weights": list(spec.weights),
            "order": spec.order,
            "max_degree": k,
            "series": _series_doc(base),
            "coefficients": list(base.prefix(k)),
            "quotient": quotient,
        },
    }


def cmd_enumerate_weights(args) -> dict:
    result = enumerate_cy_weights(args.vars, args.bound)
    return {
        "command": "enumerate-weights",
        "input": _args_input("enumerate-weights", vars=args.vars, bound=args.bound),
        "result": {
            "n_vars": result.n_vars,
            "bound": result.bound,
            "systems": [list(ws.weights) for ws in result.systems],
            "reference": [
                {
                    "weights": list(r.weights),
                    "found": r.found,
                    "divides": list(r.divides),
                    "discrepancy": r.discrepancy,
                }
                for r in result.reference
            ],
            "extras": [list(w) for w in result.extras],
        },
    }


def cmd_search_q(args) -> dict:
    man = _load(args)
    if len(man.algebras) != 1:
        raise ValueError("search takes a manifest with one algebra")
    alg = man.algebras[0]
    order = args.order if args.order is not None else alg.order
    specs = search_q_params(alg.weights, order)
    entries = []
    for spec in specs:
        cert = certify_weighted(spec)
        assert cert.verdict is Verdict.CY
        census_total = None
        if spec.nvars == 4 and spec.weights[0] == spec.weights[1] == 1:
            census_total = _tagged(census_weighted_surface(spec).total)
        entries.append({
            "exponents": [list(r) for r in spec.exponents],
            "witness": _pair(cert.witness[0]),
            "census_total": census_total,
        })
    return {
        "command": "search-q",
        "input": {"path": args.input, "digest": man.digest},
        "result": {
            "weights": list(sorted(alg.weights)),
            "order": order,
            "count": len(entries),
            "specs": entries,
        },
    }


def cmd_center(args) -> dict:
    man = _load(args)
    spec = _single_spec(man)
    chart_idx = args.chart if args.chart is not None else 0
    chart = chart_parameters(spec, chart_idx)
    lattice = center_lattice(chart.spec)
    return {
        "command": "center",
        "input": {"path": args.input, "digest": man.digest},
        "result": {
            "chart": chart_idx,
            "kept": list(chart.kept),
            "chart_matrix": [
                [_pair(chart.spec.q(i, j)) for j in range(chart.spec.nvars)]
                for i in range(chart.spec.nvars)
            ],
            "basis": [list(r) for r in lattice.basis],
            "pure_powers": list(lattice.pure_powers),
            "has_mixed": lattice.has_mixed,
            "mixed_generator": (
                None if lattice.mixed_generator is None
                else list(lattice.mixed_generator)),
        },
    }


# -- rendering --------------------------------------------------------------


def _human_value(value) -> str:
    if isinstance(value, dict) and value.get("kind") == "infinite":
        return "infinite"
    if isinstance(value, dict) and value.get("kind") == "finite":
        return str(value["value"])
    if isinstance(value, list) and len(value) == 2 and all(
            isinstance(x, int) for x in value):
        return f"({value[0]}, {value[1]})"
    return json.dumps(value, sort_keys=True)


def _human_lines(obj, indent: int, out: list[str]):
    pad = "  " * indent
    if isinstance(obj, dict):
        if obj.get("kind") in ("finite", "infinite"):
            out.append(pad + _human_value(obj))
            return
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, dict) and value.get("kind") in (
                    "finite", "infinite"):
                out.append(f"{pad}{key}: {_human_value(value)}")
            elif isinstance(value, (dict, list)) and value and not (
                    isinstance(value, list)
                    and all(isinstance(x, (int, str, bool, type(None))) for x in value)):
                out.append(f"{pad}{key}:")
                _human_lines(value, indent + 1, out)
            else:
                out.append(f"{pad}{key}: {_human_value(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict) or (
                    isinstance(item, list)
                    and any(isinstance(x, (dict, list)) for x in item)):
                out.append(pad + "-")
                _human_lines(item, indent + 1, out)
            else:
                out.append(f"{pad}- {_human_value(item)}")
    else:
        out.append(pad + _human_value(obj))


def render(doc: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines: list[str] = []
    _human_lines(doc, 0, lines)
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcy",
        description="Certify Calabi-Yau conditions and point-scheme "
                    "invariants of quantum weighted rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, manifest=True):
        p.add_argument("--format", choices=("structured", "human"),
                       default="structured")
        if manifest:
            p.add_argument("--input", required=True, metavar="FILE",
                           help="algebra manifest file")

    p = sub.add_parser("certify", help="three-valued Calabi-Yau certification")
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("census", help="closed-point census of a weighted surface")
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("point-scheme", help="torus strata and dimensions")
    common(p)
    p.set_defaults(func=cmd_point_scheme)

    p = sub.add_parser("pi-degree", help="PI degree from the exponent matrix")
    common(p)
    p.add_argument("--chart", type=int, default=None, metavar="I",
                   help="pass to a localized chart first")
    p.set_defaults(func=cmd_pi_degree)

    p = sub.add_parser("hilbert", help="Hilbert series and quotient stream")
    common(p)
    p.add_argument("--max-degree", type=int, default=12, metavar="K")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("enumerate-weights", help="admissible weight systems")
    common(p, manifest=False)
    p.add_argument("--vars", type=int, default=4, metavar="V")
    p.add_argument("--bound", type=int, default=25, metavar="B")
    p.set_defaults(func=cmd_enumerate_weights)

    p = sub.add_parser("search-q", help="Calabi-Yau parameter matrices")
    common(p)
    p.add_argument("--order", type=int, default=None, metavar="N",
                   help="root order (defaults to the manifest order)")
    p.set_defaults(func=cmd_search_q)

    p = sub.add_parser("center", help="central-monomial lattice of a chart")
    common(p)
    p.add_argument("--chart", type=int, default=0, metavar="I")
    p.set_defaults(func=cmd_center)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.func(args)
    except ManifestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalDefect as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
