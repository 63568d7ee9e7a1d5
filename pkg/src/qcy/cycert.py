"""Calabi-Yau certification of Fermat-type quantum complete intersections.

Three situations, one exact decision each:

* segre: a Segre product of two weight-1 quantum polynomial rings, cut by
  the two Fermat elements.  Calabi-Yau iff the column products of each
  parameter matrix are constant along columns.
* mixed: commutative times quantum, cut by a Fermat element and a mixed
  bidegree element.  Calabi-Yau iff the quantum side's column products are
  constant.
* weighted: a single quantum weighted polynomial ring cut by its Fermat
  element.  Calabi-Yau iff some root of unity c satisfies c^{a_j} =
  prod_i q_ij for every column j.

Verdicts are three-valued; violated hypotheses are reported, never fixed
up silently.  Every positive certificate carries a witness that
verify_certificate recomputes from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cyclo import CongruenceSystem, RootScalar, solve_root_system
from .qalgebra import AlgebraSpec, ValidationReport, Violation, validate_spec


class Verdict(Enum):
    CY = "CY"
    NOT_CY = "not_CY"
    HYPOTHESES_VIOLATED = "hypotheses_violated"


@dataclass(frozen=True)
class Certificate:
    """Outcome of one certification run.

    witness: the constant column products (one per side; the solved c for
    the weighted case) when the verdict is CY, else None.
    expected_dimension: the Calabi-Yau dimension the criterion assigns to
    this shape, present only on a CY verdict.
    """

    kind: str
    verdict: Verdict
    specs: tuple[AlgebraSpec, ...]
    witness: tuple[RootScalar, ...] | None
    expected_dimension: int | None
    violations: tuple[Violation, ...]
    detail: str


def _column_products(spec: AlgebraSpec) -> list[RootScalar]:
    n = spec.nvars
    return [
        RootScalar(spec.order, sum(spec.exponents[i][j] for i in range(n)))
        for j in range(n)
    ]


def _weight_one_violations(spec: AlgebraSpec, side: str) -> list[Violation]:
    return [
        Violation("unit-weights", (i,), f"side {side} weight {a} at index {i} is not 1")
        for i, a in enumerate(spec.weights)
        if a != 1
    ]


def _tag_side(report: ValidationReport, side: str) -> list[Violation]:
    return [
        Violation(v.kind, v.where, f"side {side}: {v.detail}")
        for v in report.violations
    ]


def certify_segre(spec_a: AlgebraSpec, spec_b: AlgebraSpec) -> Certificate:
    """Segre product of two weight-1 quantum rings modulo both Fermat elements.

    Hypotheses per side: unit weights, unit diagonal, antisymmetry, and
    q_ij^{n+1} = 1 where n+1 is that side's generator count.  CY iff both
    sides have constant column products; the dimension is then
    (#A - 1) + (#B - 1) - 2.
    """
    bad = _weight_one_violations(spec_a, "A") + _weight_one_violations(spec_b, "B")
    bad += _tag_side(validate_spec(spec_a, fermat_hypotheses=True), "A")
    bad += _tag_side(validate_spec(spec_b, fermat_hypotheses=True), "B")
    specs = (spec_a, spec_b)
    if bad:
        return Certificate("segre", Verdict.HYPOTHESES_VIOLATED, specs, None,
                           None, tuple(bad), "hypotheses violated")
    witnesses = []
    for side, spec in (("A", spec_a), ("B", spec_b)):
        products = _column_products(spec)
        for j, p in enumerate(products):
            if p != products[0]:
                return Certificate(
                    "segre", Verdict.NOT_CY, specs, None, None, (),
                    f"side {side} column {j} product differs from column 0")
        witnesses.append(products[0].reduced())
    dim = spec_a.nvars + spec_b.nvars - 4
    return Certificate("segre", Verdict.CY, specs, tuple(witnesses), dim, (),
                       "column products constant on both sides")


def certify_mixed(spec_a: AlgebraSpec, spec_b: AlgebraSpec) -> Certificate:
    """Commutative side A times quantum side B, modulo a Fermat element on A
    and a mixed element of bidegree (1, #B).

    A must be commutative with unit weights; B as in the Segre case; the
    generator counts must satisfy #A = #B + 1 (the taller Fermat shape) or
    #A = #B.  CY iff B's column products are constant; the dimension is
    2 #B - 3 for the taller shape and 2 #B - 4 for the square one.
    """
    bad = _weight_one_violations(spec_a, "A") + _weight_one_violations(spec_b, "B")
    for i in range(spec_a.nvars):
        for j in range(spec_a.nvars):
            if spec_a.exponents[i][j]:
                bad.append(Violation(
                    "commutative-side", (i, j),
                    f"side A must be commutative but q_{i}{j} is not 1"))
    bad += _tag_side(validate_spec(spec_b, fermat_hypotheses=True), "B")
    if spec_a.nvars not in (spec_b.nvars, spec_b.nvars + 1):
        bad.append(Violation(
            "shape", (spec_a.nvars, spec_b.nvars),
            f"side A has {spec_a.nvars} generators, side B has {spec_b.nvars}; "
            "need #A = #B or #A = #B + 1"))
    specs = (spec_a, spec_b)
    if bad:
        return Certificate("mixed", Verdict.HYPOTHESES_VIOLATED, specs, None,
                           None, tuple(bad), "hypotheses violated")
    products = _column_products(spec_b)
    for j, p in enumerate(products):
        if p != products[0]:
            return Certificate(
                "mixed", Verdict.NOT_CY, specs, None, None, (),
                f"side B column {j} product differs from column 0")
    if spec_a.nvars == spec_b.nvars + 1:
        dim = 2 * spec_b.nvars - 3
    else:
        dim = 2 * spec_b.nvars - 4
    return Certificate("mixed", Verdict.CY, specs, (products[0].reduced(),), dim,
                       (), "column products constant on the quantum side")


def certify_weighted(spec: AlgebraSpec) -> Certificate:
    """One quantum weighted ring modulo its Fermat element.

    Hypotheses: unit diagonal, antisymmetry, a_i | d, and
    q_ij^{h_i} = q_ij^{h_j} = 1.  CY iff the column-product system
    c^{a_j} = prod_i q_ij has a root-of-unity solution; the witness is the
    reduced c and the dimension is #generators - 2.
    """
    report = validate_spec(spec, fermat_hypotheses=True)
    if not report.ok:
        return Certificate("weighted", Verdict.HYPOTHESES_VIOLATED, (spec,),
                           None, None, report.violations, "hypotheses violated")
    products = _column_products(spec)
    pairs = list(zip(spec.weights, products))
    c = solve_root_system(pairs)
    if c is None:
        return Certificate("weighted", Verdict.NOT_CY, (spec,), None, None, (),
                           _conflict_detail(pairs))
    return Certificate("weighted", Verdict.CY, (spec,), (c,),
                       spec.nvars - 2, (),
                       "c^{a_j} matches every column product")


def _conflict_detail(pairs) -> str:
    """Index of the shortest unsolvable prefix of the column system."""
    for j in range(1, len(pairs) + 1):
        if solve_root_system(pairs[:j]) is None:
            return (f"no root of unity c exists; columns 0..{j - 1} are "
                    "jointly unsolvable")
    return "no root of unity c exists"


def verify_certificate(cert: Certificate) -> bool:
    """Recheck a certificate against its specs from scratch.

    CY: the stored witness must satisfy the defining property.  not_CY /
    hypotheses_violated: the refutation is recomputed.
    """
    if cert.verdict is Verdict.HYPOTHESES_VIOLATED:
        return bool(cert.violations) and not _revalidate(cert).ok
    if cert.kind == "weighted":
        spec = cert.specs[0]
        pairs = list(zip(spec.weights, _column_products(spec)))
        if cert.verdict is Verdict.NOT_CY:
            return _exhaustive_unsolvable(pairs)
        (c,) = cert.witness
        return all(c**a == p for a, p in pairs)
    sides = cert.specs if cert.kind == "segre" else cert.specs[1:]
    if cert.verdict is Verdict.NOT_CY:
        return any(
            any(p != _column_products(s)[0] for p in _column_products(s))
            for s in sides)
    return all(
        all(p == w for p in _column_products(s))
        for s, w in zip(sides, cert.witness))


def _revalidate(cert: Certificate) -> ValidationReport:
    if cert.kind == "weighted":
        return validate_spec(cert.specs[0], fermat_hypotheses=True)
    reports = []
    for spec in cert.specs:
        reports.append(validate_spec(spec, fermat_hypotheses=True))
        reports.append(ValidationReport(
            ok=not _weight_one_violations(spec, "?"),
            violations=tuple(_weight_one_violations(spec, "?"))))
    if cert.kind == "mixed":
        a = cert.specs[0]
        comm_ok = not any(any(row) for row in a.exponents)
        reports.append(ValidationReport(comm_ok, ()))
        shape_ok = a.nvars in (cert.specs[1].nvars, cert.specs[1].nvars + 1)
        reports.append(ValidationReport(shape_ok, ()))
    ok = all(r.ok for r in reports)
    return ValidationReport(ok, tuple(v for r in reports for v in r.violations))


def _exhaustive_unsolvable(pairs) -> bool:
    """Confirm no c exists by brute force over the single sufficient modulus."""
    from math import lcm

    n = lcm(*[p.order for _, p in pairs])
    m = n * lcm(*[a for a, _ in pairs])
    system = CongruenceSystem(
        modulus=m,
        coeffs=tuple(a for a, _ in pairs),
        rhs=tuple(p.rescale(m).exponent for _, p in pairs),
    )
    return not any(system.is_solution(x) for x in range(m))
