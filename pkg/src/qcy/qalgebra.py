"""Quantum weighted polynomial rings with root-of-unity parameters.

An AlgebraSpec fixes generators x_0..x_n with positive integer weights and
a parameter matrix q over a common root order N, subject to the relations
x_j x_i = q_ji x_i x_j.  Elements are kept in normal order (exponent
vectors), coefficients in Z[zeta_N], so every product is a reorder scalar
times a monomial and all identities here are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .cyclo import CycInt, RootScalar, kernel_lattice, lattice_contains
from .errors import HypothesisViolation, InternalDefect


@dataclass(frozen=True)
class AlgebraSpec:
    """Weights, root order and the exponent matrix of the q parameters.

    q_ij = zeta_order ** exponents[i][j].  Construction checks shape only;
    the algebraic hypotheses (unit diagonal, antisymmetry, Fermat orders)
    are examined by validate_spec so that violating inputs can still be
    represented and reported.
    """

    weights: tuple[int, ...]
    order: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        weights = tuple(int(a) for a in self.weights)
        exps = tuple(tuple(int(e) % self.order for e in row) for row in self.exponents)
        if self.order < 1:
            raise ValueError("root order must be positive")
        if not weights:
            raise ValueError("need at least one generator")
        if any(a < 1 for a in weights):
            raise ValueError(f"weights must be positive, got {weights}")
        if len(exps) != len(weights) or any(len(r) != len(weights) for r in exps):
            raise ValueError("exponent matrix shape must match the weight count")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def unweighted(cls, order: int, exponents) -> "AlgebraSpec":
        """A spec with unit weights, for bare scalar matrices (charts)."""
        return cls((1,) * len(exponents), order, exponents)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def total_degree(self) -> int:
        return sum(self.weights)

    def q(self, i: int, j: int) -> RootScalar:
        return RootScalar(self.order, self.exponents[i][j])

    def fermat_exponents(self) -> tuple[int, ...]:
        """h_i = d / a_i; raises when some weight does not divide d."""
        d = self.total_degree
        for i, a in enumerate(self.weights):
            if d % a:
                raise HypothesisViolation(
                    f"weight {a} at index {i} does not divide the total degree {d}")
        return tuple(d // a for a in self.weights)

    def subspec(self, indices) -> "AlgebraSpec":
        """Restriction to a subset of generators, in the given index order."""
        idx = tuple(indices)
        return AlgebraSpec(
            tuple(self.weights[i] for i in idx),
            self.order,
            tuple(tuple(self.exponents[i][j] for j in idx) for i in idx),
        )

    def transpose(self) -> "AlgebraSpec":
        n = self.nvars
        return AlgebraSpec(
            self.weights,
            self.order,
            tuple(tuple(self.exponents[j][i] for j in range(n)) for i in range(n)),
        )


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate_spec(spec: AlgebraSpec, fermat_hypotheses: bool = False) -> ValidationReport:
    """Check unit diagonal and antisymmetry; optionally the Fermat hypotheses.

    With fermat_hypotheses, weights must divide the total degree and each
    q_ij must satisfy q_ij^{h_i} = q_ij^{h_j} = 1.  All findings are
    collected, none raised.
    """
    n = spec.order
    bad: list[Violation] = []
    for i in range(spec.nvars):
        if spec.exponents[i][i] % n:
            bad.append(Violation("diagonal", (i,), f"q_{i}{i} is not 1"))
    for i in range(spec.nvars):
        for j in range(i + 1, spec.nvars):
            if (spec.exponents[i][j] + spec.exponents[j][i]) % n:
                bad.append(Violation(
                    "antisymmetry", (i, j), f"q_{i}{j} * q_{j}{i} is not 1"))
    if fermat_hypotheses:
        d = spec.total_degree
        divisible = True
        for i, a in enumerate(spec.weights):
            if d % a:
                divisible = False
                bad.append(Violation(
                    "weight-divisibility", (i,),
                    f"weight {a} does not divide the total degree {d}"))
        if divisible:
            h = [d // a for a in spec.weights]
            for i in range(spec.nvars):
                for j in range(spec.nvars):
                    if i == j:
                        continue
                    e = spec.exponents[i][j]
                    if (e * h[i]) % n or (e * h[j]) % n:
                        bad.append(Violation(
                            "entry-order", (i, j),
                            f"q_{i}{j} fails q^h_i = q^h_j = 1 for h = ({h[i]}, {h[j]})"))
    return ValidationReport(ok=not bad, violations=tuple(bad))


class SkewPoly:
    """Normal-ordered element: exponent vectors with CycInt coefficients."""

    __slots__ = ("order", "nvars", "terms")

    def __init__(self, order: int, nvars: int, terms):
        clean = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            if isinstance(coeff, int):
                coeff = CycInt.from_int(order, coeff)
            elif isinstance(coeff, RootScalar):
                coeff = CycInt.from_root(coeff, order)
            if coeff.order != order:
                raise ValueError("coefficient order does not match the spec order")
            if not coeff.is_zero():
                clean[exps] = coeff
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SkewPoly is immutable")

    @classmethod
    def zero(cls, order: int, nvars: int) -> "SkewPoly":
        return cls(order, nvars, {})

    @classmethod
    def monomial(cls, order: int, exps, coeff=1) -> "SkewPoly":
        return cls(order, len(tuple(exps)), {tuple(exps): coeff})

    @classmethod
    def gen(cls, order: int, nvars: int, i: int) -> "SkewPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(order, nvars, {tuple(exps): 1})

    def _check(self, other: "SkewPoly"):
        if self.order != other.order or self.nvars != other.nvars:
            raise ValueError("mixed polynomial contexts")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc[e] + c if e in acc else c
        return SkewPoly(self.order, self.nvars, acc)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.order, self.nvars,
                        {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def scaled(self, factor) -> "SkewPoly":
        """Multiply every coefficient by an int, RootScalar or CycInt."""
        if isinstance(factor, RootScalar):
            factor = CycInt.from_root(factor, self.order)
        return SkewPoly(self.order, self.nvars,
                        {e: c * factor for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self, weights) -> int | None:
        """The common weighted degree of all terms, or None if mixed/zero."""
        degs = {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return (self.order == other.order and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.order, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"SkewPoly(order={self.order}, terms={self.terms!r})"


def reorder_scalar(left, right, spec: AlgebraSpec) -> RootScalar:
    """Scalar sigma with x^left x^right = sigma x^(left+right).

    Moving x^right's variables leftward past x^left's higher-index ones
    picks up sigma = prod_{i<j} q_ji^{right_i * left_j}; a bicharacter in
    each argument.
    """
    e = 0
    n = spec.nvars
    for i in range(n):
        r = right[i]
        if r:
            for j in range(i + 1, n):
                if left[j]:
                    e += spec.exponents[j][i] * r * left[j]
    return RootScalar(spec.order, e)


def multiply(p: SkewPoly, r: SkewPoly, spec: AlgebraSpec) -> SkewPoly:
    """Product in the quantum ring, coefficients in Z[zeta_N]."""
    acc: dict[tuple[int, ...], CycInt] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in r.terms.items():
            sigma = reorder_scalar(e1, e2, spec)
            coeff = c1 * c2 * CycInt.from_root(sigma, spec.order)
            key = tuple(a + b for a, b in zip(e1, e2))
            acc[key] = acc[key] + coeff if key in acc else coeff
    return SkewPoly(p.order, p.nvars, acc)


def fermat(spec: AlgebraSpec) -> SkewPoly:
    """sum_i x_i^{d/a_i}; raises when some weight does not divide d."""
    h = spec.fermat_exponents()
    acc = {}
    for i, hi in enumerate(h):
        exps = [0] * spec.nvars
        exps[i] = hi
        acc[tuple(exps)] = 1
    return SkewPoly(spec.order, spec.nvars, acc)


def is_central(p: SkewPoly, spec: AlgebraSpec) -> bool:
    return all(
        multiply(SkewPoly.gen(spec.order, spec.nvars, k), p, spec)
        == multiply(p, SkewPoly.gen(spec.order, spec.nvars, k), spec)
        for k in range(spec.nvars)
    )


@dataclass(frozen=True)
class GradedAut:
    """Diagonal graded automorphism x_i -> zeta_order^scalars[i] x_i."""

    order: int
    scalars: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "scalars", tuple(s % self.order for s in self.scalars))

    @classmethod
    def identity(cls, order: int, nvars: int) -> "GradedAut":
        return cls(order, (0,) * nvars)

    def scalar(self, i: int) -> RootScalar:
        return RootScalar(self.order, self.scalars[i])

    def is_identity(self) -> bool:
        return not any(self.scalars)

    def compose(self, other: "GradedAut") -> "GradedAut":
        n = lcm(self.order, other.order)
        a, b = n // self.order, n // other.order
        return GradedAut(
            n, tuple(a * s + b * t for s, t in zip(self.scalars, other.scalars)))

    def inverse(self) -> "GradedAut":
        return GradedAut(self.order, tuple(-s for s in self.scalars))

    def apply(self, p: SkewPoly) -> SkewPoly:
        if p.order != self.order:
            raise ValueError("mixed orders")
        out = {}
        for exps, c in p.terms.items():
            e = sum(s * k for s, k in zip(self.scalars, exps))
            out[exps] = c * CycInt.from_root(RootScalar(self.order, e), self.order)
        return SkewPoly(p.order, p.nvars, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedAut):
            return NotImplemented
        n = lcm(self.order, other.order)
        a, b = n // self.order, n // other.order
        return all((a * s - b * t) % n == 0
                   for s, t in zip(self.scalars, other.scalars))

    def __hash__(self):
        return hash(tuple(RootScalar(self.order, s).pair() for s in self.scalars))


def is_normal(p: SkewPoly, spec: AlgebraSpec) -> GradedAut | None:
    """The diagonal twist nu with p x_k = nu(x_k) p, if one exists.

    nu(x_k) = lambda_k x_k with lambda_k a root of unity of order dividing
    N; each lambda_k is found by matching p x_k against x_k p termwise.
    """
    if p.is_zero():
        return GradedAut.identity(spec.order, spec.nvars)
    scalars = []
    for k in range(spec.nvars):
        xk = SkewPoly.gen(spec.order, spec.nvars, k)
        left = multiply(p, xk, spec)
        right = multiply(xk, p, spec)
        if set(left.terms) != set(right.terms):
            return None
        found = None
        for e in range(spec.order):
            lam = CycInt.from_root(RootScalar(spec.order, e), spec.order)
            if all(left.terms[m] == right.terms[m] * lam for m in left.terms):
                found = e
                break
        if found is None:
            return None
        scalars.append(found)
    return GradedAut(spec.order, tuple(scalars))


def nakayama(spec: AlgebraSpec) -> GradedAut:
    """x_i -> (prod_j q_ij) x_i, the row products of the parameter matrix."""
    return GradedAut(
        spec.order, tuple(sum(row) for row in spec.exponents))


@dataclass(frozen=True)
class ChartParams:
    """Parameter matrix of the localized degree-0 chart at one generator.

    `spec` carries the chart scalars q'_jk (weights are all 1; the chart
    generators x_j / x_i^{a_j} sit in degree 0); `kept` maps chart indices
    back to the original generator indices.
    """

    spec: AlgebraSpec
    kept: tuple[int, ...]


def chart_parameters(spec: AlgebraSpec, inverted: int) -> ChartParams:
    """Chart scalars q'_jk = q_ij^{a_k} q_jk q_ki^{a_j} after inverting x_i.

    Requires weight 1 at the inverted index (so degree-0 chart generators
    exist); everything else is exponent arithmetic on the bicharacter.
    """
    if spec.weights[inverted] != 1:
        raise ValueError(
            f"chart requires weight 1 at index {inverted}, "
            f"got {spec.weights[inverted]}")
    t = inverted
    kept = tuple(j for j in range(spec.nvars) if j != t)
    e = spec.exponents
    a = spec.weights
    rows = []
    for j in kept:
        rows.append(tuple(
            (a[k] * e[t][j] + e[j][k] + a[j] * e[k][t]) % spec.order
            for k in kept))
    chart = AlgebraSpec((1,) * len(kept), spec.order, tuple(rows))
    return ChartParams(spec=chart, kept=kept)


def second_chart_scalar(spec: AlgebraSpec) -> RootScalar:
    """The single chart scalar of C/(x_0) localized at x_1 (four generators).

    Equals q_13^{a_2} q_32 q_21^{a_3}; computed through the generic chart
    formula on the subalgebra without x_0.
    """
    if spec.nvars != 4:
        raise ValueError("second chart is defined for four generators")
    sub = spec.subspec((1, 2, 3))
    chart = chart_parameters(sub, 0)
    return chart.spec.q(1, 0)


@dataclass(frozen=True)
class CenterLattice:
    """Exponent lattice of central monomials of a scalar matrix.

    basis rows are in Hermite normal form.  pure_powers[i] is the least
    k with x_i^k central; when the lattice is strictly larger than the
    sublattice those pure powers generate, mixed_generator holds a witness
    vector, flagging that the central monomials are not just products of
    pure powers.
    """

    order: int
    basis: tuple[tuple[int, ...], ...]
    pure_powers: tuple[int, ...]
    mixed_generator: tuple[int, ...] | None

    @property
    def has_mixed(self) -> bool:
        return self.mixed_generator is not None

    def contains(self, vec) -> bool:
        return lattice_contains([list(r) for r in self.basis], vec)


def center_lattice(spec: AlgebraSpec) -> CenterLattice:
    """Central-monomial lattice {e : E . e = 0 mod N} of the matrix of spec.

    Assumes unit diagonal and antisymmetry (a validated spec or a chart
    matrix).  The kernel computation is cross-checked against direct
    centrality of every monomial of total degree at most 6.
    """
    n = spec.order
    e = spec.exponents
    m = spec.nvars
    basis = kernel_lattice([list(r) for r in e], n)
    pure = []
    for i in range(m):
        col_gcd = gcd(n, *(e[r][i] for r in range(m)))
        pure.append(n // col_gcd)
    mixed = None
    for row in basis:
        if any(row[i] % pure[i] for i in range(m)):
            mixed = tuple(row)
            break
    result = CenterLattice(
        order=n,
        basis=tuple(tuple(r) for r in basis),
        pure_powers=tuple(pure),
        mixed_generator=mixed,
    )
    probe = AlgebraSpec.unweighted(n, e)
    for exps in monomials_of_degree_at_most((1,) * m, 6):
        direct = is_central(SkewPoly.monomial(n, exps), probe)
        if direct != result.contains(exps):
            raise InternalDefect(
                f"lattice and direct centrality disagree at {exps}")
    return result


def monomials_of_degree(weights, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the given weighted degree, lexicographic order."""
    weights = tuple(weights)
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(weights) - 1:
            q, r = divmod(remaining, weights[i])
            if r == 0:
                out.append(prefix + (q,))
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - e * w, prefix + (e,))

    if degree < 0:
        return []
    rec(0, degree, ())
    return out


def monomials_of_degree_at_most(weights, bound: int):
    for t in range(bound + 1):
        yield from monomials_of_degree(weights, t)
