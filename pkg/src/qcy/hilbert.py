"""Hilbert series in factored rational form, and an exact brute-force oracle.

A series is numerator / prod (1 - t^a) (one variable) or the bigraded
analogue with factors (1 - t^a u^b).  Coefficient streams are produced by
stride convolution over the factored denominator, never by expanding the
rational function, so arbitrary prefixes are exact integers.  Veronese and
quasi-Veronese transforms stay in rational form.

brute_force_dims recomputes graded dimensions of a quotient from scratch
by linear algebra over Z[zeta_N]: the span of m * f_j is row reduced with
a full-rank certificate modulo a prime p = 1 (mod N), falling back to
exact elimination over Q(zeta_N) when the certificate is inconclusive.
"""

from __future__ import annotations

import threading
from math import lcm

from . import _kernels
from .cyclo import CycField, CycInt
from .qalgebra import AlgebraSpec, SkewPoly, is_central, monomials_of_degree, multiply


class HilbertSeries:
    """One- or two-variable series, rational-form backed or stream backed.

    Rational form: `numerator` maps exponent tuples to integer
    coefficients, `denominator` is a tuple of exponent tuples, each factor
    meaning (1 - t^a) or (1 - t^a u^b).  Derived series (diagonals,
    Veronese slices of stream-backed sources) carry a generator callable
    instead.  Streams are cached and lazily extended under a lock.
    """

    def __init__(self, nvars: int, numerator=None, denominator=None,
                 generator=None):
        if nvars not in (1, 2):
            raise ValueError("series take one or two variables")
        self.nvars = nvars
        if (numerator is None) == (generator is None):
            raise ValueError("exactly one of rational form and generator")
        if numerator is not None:
            num = {}
            for exps, c in dict(numerator).items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad numerator exponent {exps}")
                if c:
                    num[exps] = num.get(exps, 0) + int(c)
            den = []
            for exps in denominator or ():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars or any(e < 0 for e in exps) or not any(exps):
                    raise ValueError(f"bad denominator factor {exps}")
                den.append(exps)
            self.numerator = num
            self.denominator = tuple(sorted(den))
        else:
            self.numerator = None
            self.denominator = None
        self._generator = generator
        self._stream = None
        self._horizon = -1
        self._lock = threading.Lock()

    # -- streams ------------------------------------------------------------

    def _ensure(self, upto: int):
        with self._lock:
            if upto <= self._horizon:
                return
            upto = max(upto, 2 * self._horizon)
            if self._generator is not None:
                self._stream = self._generator(upto)
            elif self.nvars == 1:
                arr = [0] * (upto + 1)
                for (e,), c in self.numerator.items():
                    if e <= upto:
                        arr[e] += c
                for (a,) in self.denominator:
                    for i in range(a, upto + 1):
                        arr[i] += arr[i - a]
                self._stream = arr
            else:
                arr = [[0] * (upto + 1) for _ in range(upto + 1)]
                for (et, eu), c in self.numerator.items():
                    if et <= upto and eu <= upto:
                        arr[et][eu] += c
                for (at, au) in self.denominator:
                    for i in range(at, upto + 1) if at else range(upto + 1):
                        row, src = arr[i], arr[i - at]
                        for j in range(au, upto + 1):
                            row[j] += src[j - au]
                self._stream = arr
            self._horizon = upto

    def coefficient(self, *degrees) -> int:
        if len(degrees) != self.nvars:
            raise ValueError(f"series takes {self.nvars} degree arguments")
        if any(d < 0 for d in degrees):
            return 0
        self._ensure(max(degrees))
        if self.nvars == 1:
            return self._stream[degrees[0]]
        return self._stream[degrees[0]][degrees[1]]

    def prefix(self, upto: int) -> tuple[int, ...]:
        """Coefficients 0..upto of a one-variable series."""
        if self.nvars != 1:
            raise ValueError("prefix is for one-variable series")
        self._ensure(upto)
        return tuple(self._stream[: upto + 1])

    def grid(self, upto: int) -> tuple[tuple[int, ...], ...]:
        """The (upto+1) x (upto+1) table of a two-variable series."""
        if self.nvars != 2:
            raise ValueError("grid is for two-variable series")
        self._ensure(upto)
        return tuple(tuple(row[: upto + 1]) for row in self._stream[: upto + 1])

    @property
    def has_rational_form(self) -> bool:
        return self.numerator is not None

    def __repr__(self):
        if self.has_rational_form:
            return (f"HilbertSeries(nvars={self.nvars}, "
                    f"numerator={self.numerator!r}, "
                    f"denominator={self.denominator!r})")
        return f"HilbertSeries(nvars={self.nvars}, stream-backed)"


def series_qpoly(weights) -> HilbertSeries:
    """Series of a quantum weighted polynomial ring: 1 / prod (1 - t^a_i).

    The parameters do not enter; only the weights do.
    """
    weights = tuple(int(a) for a in weights)
    if not weights or any(a < 1 for a in weights):
        raise ValueError(f"weights must be positive, got {weights}")
    return HilbertSeries(1, {(0,): 1}, tuple((a,) for a in weights))


def quotient_by_regular(series: HilbertSeries, degree) -> HilbertSeries:
    """Multiply the numerator by (1 - t^degree) (or bidegree for 2 vars)."""
    if not series.has_rational_form:
        raise ValueError("quotient needs a rational-form series")
    exps = (degree,) if isinstance(degree, int) else tuple(degree)
    if len(exps) != series.nvars or any(e < 0 for e in exps) or not any(exps):
        raise ValueError(f"bad quotient degree {degree}")
    num = dict(series.numerator)
    for e, c in series.numerator.items():
        shifted = tuple(a + b for a, b in zip(e, exps))
        num[shifted] = num.get(shifted, 0) - c
    return HilbertSeries(series.nvars, num, series.denominator)


def bigraded_series(weights_a, weights_b, quotients=()) -> HilbertSeries:
    """Series of a tensor product graded by (deg_A, deg_B).

    Denominator factors (1 - t^a) and (1 - u^b); each entry of `quotients`
    is a bidegree (d_t, d_u) contributing a numerator factor, e.g. (d, 0)
    for a Fermat element on the A side or (1, n+1) for a mixed element.
    """
    weights_a = tuple(int(a) for a in weights_a)
    weights_b = tuple(int(b) for b in weights_b)
    if any(a < 1 for a in weights_a) or any(b < 1 for b in weights_b):
        raise ValueError("weights must be positive")
    factors = [(a, 0) for a in weights_a] + [(0, b) for b in weights_b]
    out = HilbertSeries(2, {(0, 0): 1}, tuple(factors))
    for q in quotients:
        out = quotient_by_regular(out, tuple(q))
    return out


def diagonal(series: HilbertSeries) -> HilbertSeries:
    """One-variable series with coefficient c_ii; stream backed."""
    if series.nvars != 2:
        raise ValueError("diagonal is for two-variable series")
    return HilbertSeries(
        1, generator=lambda upto: [series.coefficient(i, i) for i in range(upto + 1)])


def veronese(series: HilbertSeries, r: int, offset: int = 0) -> HilbertSeries:
    """Every r-th coefficient, starting at `offset`: degree i picks k*r+offset.

    For a rational-form series the result is rational again: with
    M = lcm(r, all denominator strides), the denominator becomes
    (1 - u^{M/r})^m and the numerator keeps the residue class of offset.
    """
    if series.nvars != 1:
        raise ValueError("veronese is for one-variable series")
    if r < 1:
        raise ValueError("r must be positive")
    if not 0 <= offset < r:
        raise ValueError("offset must lie in [0, r)")
    if not series.has_rational_form:
        return HilbertSeries(
            1,
            generator=lambda upto: [
                series.coefficient(offset + k * r) for k in range(upto + 1)
            ],
        )
    strides = [a for (a,) in series.denominator]
    m = lcm(r, *strides) if strides else r
    expanded = dict(series.numerator)
    for a in strides:
        grown = {}
        for (e,), c in expanded.items():
            for k in range(m // a):
                key = (e + k * a,)
                grown[key] = grown.get(key, 0) + c
        expanded = grown
    num = {}
    for (e,), c in expanded.items():
        if e % r == offset % r:
            num[((e - offset) // r,)] = num.get(((e - offset) // r,), 0) + c
    return HilbertSeries(1, num, ((m // r,),) * len(strides))


def _shift_one(series: HilbertSeries) -> HilbertSeries:
    """Multiply by the variable: coefficient i becomes coefficient i+1."""
    if series.has_rational_form:
        return HilbertSeries(
            1,
            {(e + 1,): c for (e,), c in series.numerator.items()},
            series.denominator,
        )
    return HilbertSeries(
        1,
        generator=lambda upto: [0] + [series.coefficient(k) for k in range(upto)],
    )


def quasi_veronese_table(series: HilbertSeries, k: int) -> list[list[HilbertSeries]]:
    """The k x k table whose (p, q) entry streams dim A_{k*i + q - p}.

    Negative degrees contribute zero, so entries below the diagonal start
    with a leading zero coefficient.
    """
    if k < 1:
        raise ValueError("block size must be positive")
    table = []
    for p in range(k):
        row = []
        for q in range(k):
            tau = q - p
            if tau >= 0:
                row.append(veronese(series, k, tau))
            else:
                row.append(_shift_one(veronese(series, k, tau + k)))
        table.append(row)
    return table


# -- brute force oracle -----------------------------------------------------


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_one_mod(order: int, count: int) -> list[int]:
    """Largest `count` primes p = 1 (mod order) below 2**31."""
    top = 2**31 - 1
    p = top - (top - 1) % order
    out = []
    while len(out) < count:
        if _is_probable_prime(p):
            out.append(p)
        p -= order
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _root_of_unity_mod(order: int, p: int) -> int:
    if order == 1:
        return 1
    factors = _prime_factors(order)
    for base in range(2, 1000):
        g = pow(base, (p - 1) // order, p)
        if pow(g, order, p) == 1 and all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise RuntimeError(f"no order-{order} element found modulo {p}")


def _exact_rank(rows: list[dict[int, CycInt]], ncols: int, order: int) -> int:
    """Gaussian elimination over Q(zeta_N) with Fraction coefficients."""
    field = CycField(order)
    dense = []
    for row in rows:
        vec = [field.zero()] * ncols
        for j, c in row.items():
            vec[j] = field.from_cycint(c)
        dense.append(vec)
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(dense)):
            if not field.is_zero(dense[i][col]):
                piv = i
                break
        if piv is None:
            continue
        dense[rank], dense[piv] = dense[piv], dense[rank]
        inv = field.inv(dense[rank][col])
        pivot_row = dense[rank]
        for i in range(rank + 1, len(dense)):
            if field.is_zero(dense[i][col]):
                continue
            f = field.mul(dense[i][col], inv)
            dense[i] = [
                field.sub(x, field.mul(f, y)) for x, y in zip(dense[i], pivot_row)
            ]
        rank += 1
        if rank == len(dense):
            break
    return rank


def _span_rank(rows: list[dict[int, CycInt]], ncols: int, order: int) -> int:
    """Exact rank over Q(zeta_N), certified modulo primes when possible.

    The rank modulo any prime p = 1 (mod N) is a lower bound for the true
    rank, so a full mod-p rank is a certificate.  Otherwise fall through
    to exact field elimination.
    """
    if not rows or ncols == 0:
        return 0
    full = min(len(rows), ncols)
    import numpy as np

    for p in _primes_one_mod(order, 2):
        g = _root_of_unity_mod(order, p)
        mat = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, c in row.items():
                mat[i, j] = c.evaluate_mod(g, p)
        rank = _kernels.modp_rank(mat, p)
        if rank == full:
            return rank
    return _exact_rank(rows, ncols, order)


def brute_force_dims(spec: AlgebraSpec, quotient, max_degree: int = 12) -> list[int]:
    """Graded dimensions of the quotient by central homogeneous elements.

    Returns [dim_0, ..., dim_max_degree].  Each quotient element must be
    homogeneous and central (centrality makes the degree-t relations
    exactly the span of m * f_j); anything else is rejected.
    """
    if isinstance(quotient, SkewPoly):
        quotient = [quotient]
    quotient = list(quotient)
    elems = []
    for f in quotient:
        deg = f.homogeneous_degree(spec.weights)
        if deg is None or f.is_zero():
            raise ValueError(
                "brute force needs nonzero homogeneous quotient elements")
        if not is_central(f, spec):
            raise ValueError(
                "brute force supports only central quotient elements; "
                "two-sided ideals of non-central elements are out of scope")
        elems.append((f, deg))
    dims = []
    for t in range(max_degree + 1):
        cols = monomials_of_degree(spec.weights, t)
        index = {e: i for i, e in enumerate(cols)}
        rows = []
        for f, deg in elems:
            for mono in monomials_of_degree(spec.weights, t - deg):
                prod = multiply(
                    SkewPoly.monomial(spec.order, mono), f, spec)
                rows.append({index[e]: c for e, c in prod.terms.items()})
        dims.append(len(cols) - _span_rank(rows, len(cols), spec.order))
    return dims
