"""Point schemes, simple-module counts and PI degrees of quantum rings.

The torus strata of the point scheme of a quantum polynomial ring are
indexed by supports whose parameter triples multiply to 1; restricted
Fermat equations then cut each stratum by at most one.  On affine charts
the count of one-dimensional simple modules is governed by the pair
scalars alone, which is what the closed-point census of a weighted
surface adds up chart by chart.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, isqrt

from .cyclo import CycInt, image_size
from .errors import HypothesisViolation, InternalDefect
from .qalgebra import AlgebraSpec, SkewPoly, chart_parameters, validate_spec


class _InfiniteType:
    """Marker for an infinite closed-point count."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    def __bool__(self):
        return True


INFINITE = _InfiniteType()


# -- multilinearization -----------------------------------------------------


class MultilinearPoly:
    """Multidegree-(1,..,1) polynomial in slot variables y_{r,i}.

    A word (i_0, ..., i_{d-1}) stands for y_{0,i_0} * ... * y_{d-1,i_d-1};
    the slot variables commute, so the word tuple is the canonical key.
    """

    __slots__ = ("order", "nslots", "terms")

    def __init__(self, order: int, nslots: int, terms):
        clean = {}
        for word, coeff in dict(terms).items():
            word = tuple(int(i) for i in word)
            if len(word) != nslots or any(i < 0 for i in word):
                raise ValueError(f"bad word {word} for {nslots} slots")
            if isinstance(coeff, int):
                coeff = CycInt.from_int(order, coeff)
            if not coeff.is_zero():
                clean[word] = coeff
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "nslots", nslots)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultilinearPoly is immutable")

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        if self.order != other.order or self.nslots != other.nslots:
            raise ValueError("mixed multilinear contexts")
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc[w] + c if w in acc else c
        return MultilinearPoly(self.order, self.nslots, acc)

    def concat(self, other: "MultilinearPoly") -> "MultilinearPoly":
        """Product with `other` occupying the slots after self's."""
        if self.order != other.order:
            raise ValueError("mixed orders")
        acc = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                acc[w1 + w2] = c1 * c2
        return MultilinearPoly(self.order, self.nslots + other.nslots, acc)

    def evaluate_constant(self, values) -> CycInt:
        """Value on the constant slot sequence y_{r,i} = values[i]."""
        values = list(values)
        acc = CycInt.zero(self.order)
        for word, coeff in self.terms.items():
            term = coeff
            for i in word:
                term = term * values[i]
            acc = acc + term
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return (self.order == other.order and self.nslots == other.nslots
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.order, self.nslots, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultilinearPoly(slots={self.nslots}, terms={self.terms!r})"


def word_of_monomial(exps) -> tuple[int, ...]:
    """Normal-ordered word of an exponent vector: i repeated e_i times."""
    out = []
    for i, e in enumerate(exps):
        out.extend([i] * e)
    return tuple(out)


def multilinearize_word(order: int, word) -> MultilinearPoly:
    word = tuple(word)
    return MultilinearPoly(order, len(word), {word: 1})


def multilinearize(p: SkewPoly) -> MultilinearPoly:
    """Replace each normal-ordered monomial by its slot product.

    Needs an unweighted-homogeneous input so all terms fill the same
    number of slots.
    """
    if p.is_zero():
        return MultilinearPoly(p.order, 0, {})
    degs = {sum(e) for e in p.terms}
    if len(degs) != 1:
        raise ValueError("multilinearization needs a homogeneous polynomial")
    d = degs.pop()
    return MultilinearPoly(
        p.order, d, {word_of_monomial(e): c for e, c in p.terms.items()})


# -- torus strata -----------------------------------------------------------


def is_special(spec: AlgebraSpec) -> bool:
    """Every parameter triple q_ij q_jk q_ki is 1 (antisymmetry assumed)."""
    e = spec.exponents
    n = spec.order
    return all(
        (e[i][j] + e[j][k] + e[k][i]) % n == 0
        for i, j, k in combinations(range(spec.nvars), 3)
    )


def admissible_supports(spec: AlgebraSpec) -> list[tuple[int, ...]]:
    """Nonempty supports all of whose triples have trivial parameter product.

    Singletons and pairs are always admissible; a larger support is
    admissible iff each of its 3-subsets is.  Sorted by size, then
    lexicographically.
    """
    e = spec.exponents
    n = spec.order
    m = spec.nvars
    good_triple = {
        t: (e[t[0]][t[1]] + e[t[1]][t[2]] + e[t[2]][t[0]]) % n == 0
        for t in combinations(range(m), 3)
    }
    out = []
    for size in range(1, m + 1):
        for sub in combinations(range(m), size):
            if all(good_triple[t] for t in combinations(sub, 3)):
                out.append(sub)
    return out


def stratum_dimension(support, exponents, require_equation: bool) -> int | None:
    """Projective dimension of the torus stratum on `support`.

    Without the equation the stratum is the torus, dimension |S| - 1.
    The restricted Fermat equation keeps the terms of the support: a
    single surviving term empties the stratum (None); two or more cut
    the dimension by exactly one.
    """
    support = tuple(support)
    if not support:
        raise ValueError("support must be nonempty")
    dim = len(support) - 1
    if not require_equation:
        return dim
    terms = sum(1 for i in support if exponents[i] >= 1)
    if terms == 1:
        return None
    if terms >= 2:
        dim -= 1
    return dim


def max_stratum_dimension(spec: AlgebraSpec) -> int | None:
    """Largest stratum dimension with the Fermat equation imposed."""
    h = spec.fermat_exponents()
    best = None
    for s in admissible_supports(spec):
        dim = stratum_dimension(s, h, True)
        if dim is not None and (best is None or dim > best):
            best = dim
    return best


def point_scheme_dim_product(
    spec_a: AlgebraSpec,
    spec_b: AlgebraSpec,
    f_shape: str | None = "fermat",
    g_shape: str | None = "fermat",
) -> int | None:
    """Dimension of the point scheme of a two-sided Fermat intersection.

    Strata are products of admissible torus strata; each equation whose
    restriction keeps one term empties the stratum, with two or more it
    cuts one dimension.  f lives on side A; g is "fermat" (side B pure
    powers), "mixed" (terms x_l y_l pairing the first min(#A, #B)
    indices), or None.  Returns the maximum dimension, or None when every
    stratum dies.
    """
    equations = []
    if f_shape == "fermat":
        equations.append([({i}, frozenset()) for i in range(spec_a.nvars)])
    elif f_shape is not None:
        raise ValueError(f"unknown f shape {f_shape!r}")
    if g_shape == "fermat":
        equations.append([(frozenset(), {j}) for j in range(spec_b.nvars)])
    elif g_shape == "mixed":
        shared = min(spec_a.nvars, spec_b.nvars)
        equations.append([({l}, {l}) for l in range(shared)])
    elif g_shape is not None:
        raise ValueError(f"unknown g shape {g_shape!r}")
    best = None
    for s in admissible_supports(spec_a):
        s_set = set(s)
        for t in admissible_supports(spec_b):
            t_set = set(t)
            dim = len(s) - 1 + len(t) - 1
            dead = False
            for eq in equations:
                alive = sum(
                    1 for (ea, eb) in eq if set(ea) <= s_set and set(eb) <= t_set)
                if alive == 1:
                    dead = True
                    break
                if alive >= 2:
                    dim -= 1
            if not dead and (best is None or dim > best):
                best = dim
    return best


# -- PI degree --------------------------------------------------------------


def pi_degree(spec: AlgebraSpec) -> int:
    """Square root of the image size of the exponent matrix on (Z/N)^m.

    The image size of an antisymmetric exponent matrix is a perfect
    square; a non-square is an internal defect, not an answer.
    """
    size = image_size([list(r) for r in spec.exponents], spec.order)
    root = isqrt(size)
    if root * root != size:
        raise InternalDefect(
            f"exponent-matrix image has non-square size {size}")
    return root


# -- chart counts and the census --------------------------------------------


@dataclass(frozen=True)
class ChartItem:
    """One locus of simple modules: the support and its count."""

    support: tuple[int, ...]
    count: object  # int | INFINITE


@dataclass(frozen=True)
class ChartCount:
    count: object  # int | INFINITE
    items: tuple[ChartItem, ...]
    trivial_pairs: tuple[tuple[int, int], ...]


def chart_simple_count(chart_spec: AlgebraSpec, exponents) -> ChartCount:
    """One-dimensional simple modules of a chart with equation 1 + sum y_i^{m_i}.

    A pair scalar q'_ij = 1 admits supports of size two, a positive
    dimensional solution set: infinitely many.  Otherwise all simples have
    singleton support and y_i^{m_i} = -1 contributes m_i points.
    """
    m = chart_spec.nvars
    exponents = tuple(int(x) for x in exponents)
    if len(exponents) != m or any(x < 1 for x in exponents):
        raise ValueError("need one positive exponent per chart generator")
    e = chart_spec.exponents
    trivial = tuple(
        (i, j)
        for i, j in combinations(range(m), 2)
        if e[i][j] % chart_spec.order == 0
    )
    items = [ChartItem((i,), exponents[i]) for i in range(m)]
    if trivial:
        items += [ChartItem(p, INFINITE) for p in trivial]
        return ChartCount(INFINITE, tuple(items), trivial)
    return ChartCount(sum(exponents), tuple(items), ())


@dataclass(frozen=True)
class TwoVarClassification:
    """Shift-class counts of graded simples over weighted k[x,y], deg (a, b)."""

    axis_x_shifts: int  # modules killing x: one family per shift mod b
    axis_y_shifts: int  # modules killing y: one family per shift mod a
    family_shifts: int  # binomial quotients: shifts mod gcd(a, b)


def classify_two_var(a: int, b: int) -> TwoVarClassification:
    if a < 1 or b < 1:
        raise ValueError("weights must be positive")
    return TwoVarClassification(
        axis_x_shifts=b, axis_y_shifts=a, family_shifts=gcd(a, b))


@dataclass(frozen=True)
class TwoVarCount:
    factors: int
    shifts: int

    @property
    def count(self) -> int:
        return self.factors * self.shifts


def two_var_fermat_count(a: int, b: int, d: int) -> TwoVarCount:
    """Point count of Proj of weighted k[x,y] / (x^{d/a} + y^{d/b}).

    x^{d/a} + y^{d/b} splits into t = d gcd(a,b) / (a b) binomial factors
    x^{b/g} - zeta y^{a/g}, each contributing gcd(a, b) shift classes of
    graded simples.  Twisting by a pair scalar does not change the count.
    """
    g = gcd(a, b)
    if a < 1 or b < 1 or d < 1:
        raise ValueError("weights and degree must be positive")
    if d % (a * b // g):
        raise ValueError(
            f"lcm({a}, {b}) must divide {d} for the Fermat quotient to split")
    return TwoVarCount(factors=d * g // (a * b), shifts=g)


@dataclass(frozen=True)
class CensusChart:
    chart: int
    description: str
    count: object  # int | INFINITE
    items: tuple[ChartItem, ...]
    trivial_pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CensusReport:
    weights: tuple[int, ...]
    order: int
    charts: tuple[CensusChart, ...]
    total: object  # int | INFINITE


def census_weighted_surface(spec: AlgebraSpec) -> CensusReport:
    """Closed-point census of Proj for weights (1, 1, a, b) with all a_i | d.

    Decomposes into the chart inverting x_0, the chart x_0 = 0 inverting
    x_1, and the closed stratum x_0 = x_1 = 0 handled by the two-variable
    count.  The total is Infinite as soon as one chart is.
    """
    report = validate_spec(spec, fermat_hypotheses=True)
    if not report.ok:
        raise HypothesisViolation(
            "census needs a spec satisfying the Fermat hypotheses: "
            + "; ".join(v.detail for v in report.violations))
    if spec.nvars != 4 or spec.weights[0] != 1 or spec.weights[1] != 1:
        raise ValueError(
            f"census covers weights (1, 1, a, b), got {spec.weights}")
    h = spec.fermat_exponents()
    charts = []

    cp0 = chart_parameters(spec, 0)
    c0 = chart_simple_count(cp0.spec, tuple(h[j] for j in cp0.kept))
    charts.append(CensusChart(
        0, "x0 inverted",
        c0.count,
        tuple(ChartItem(tuple(cp0.kept[i] for i in item.support), item.count)
              for item in c0.items),
        tuple((cp0.kept[i], cp0.kept[j]) for i, j in c0.trivial_pairs),
    ))

    sub = spec.subspec((1, 2, 3))
    cp1 = chart_parameters(sub, 0)
    kept1 = tuple((1, 2, 3)[i] for i in cp1.kept)
    c1 = chart_simple_count(cp1.spec, tuple(h[j] for j in kept1))
    charts.append(CensusChart(
        1, "x0 = 0, x1 inverted",
        c1.count,
        tuple(ChartItem(tuple(kept1[i] for i in item.support), item.count)
              for item in c1.items),
        tuple((kept1[i], kept1[j]) for i, j in c1.trivial_pairs),
    ))

    tv = two_var_fermat_count(spec.weights[2], spec.weights[3], spec.total_degree)
    charts.append(CensusChart(
        2, "x0 = x1 = 0",
        tv.count,
        (ChartItem((2, 3), tv.count),),
        (),
    ))

    if any(c.count is INFINITE for c in charts):
        total = INFINITE
    else:
        total = sum(c.count for c in charts)
    return CensusReport(spec.weights, spec.order, tuple(charts), total)
