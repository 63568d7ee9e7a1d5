"""Exact arithmetic with roots of unity and integer lattice routines.

Scalars are roots of unity stored as (order, exponent) pairs, so every
product and power is exponent arithmetic.  Sums of roots live in Z[zeta_N],
represented by residues modulo the N-th cyclotomic polynomial; equality and
zero tests are therefore exact, never numeric.  The lattice half of the
module (Smith and Hermite normal forms, kernels and images of exponent
matrices modulo N) backs the PI-degree and center computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import InternalDefect, OrderMismatchError

ENUMERATION_BOUND = 10**6


class RootScalar:
    """A root of unity zeta_order^exponent.

    Equality is by value: (6, 2) and (3, 1) are the same scalar.  The stored
    order is kept as constructed; rescale() moves to a larger compatible
    order and reduced() drops to the minimal one.
    """

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "exponent", exponent % order)

    def __setattr__(self, name, value):
        raise AttributeError("RootScalar is immutable")

    def rescale(self, order: int) -> "RootScalar":
        """The same value written with the given order (stored order must divide it)."""
        if order % self.order:
            raise OrderMismatchError(
                f"cannot rescale order {self.order} to non-multiple {order}")
        return RootScalar(order, self.exponent * (order // self.order))

    def reduced(self) -> "RootScalar":
        """Canonical form of minimal order."""
        g = gcd(self.exponent, self.order)
        return RootScalar(self.order // g, self.exponent // g)

    def __mul__(self, other: "RootScalar") -> "RootScalar":
        n = lcm(self.order, other.order)
        return RootScalar(
            n,
            self.exponent * (n // self.order) + other.exponent * (n // other.order),
        )

    def __pow__(self, k: int) -> "RootScalar":
        return RootScalar(self.order, self.exponent * k)

    def inverse(self) -> "RootScalar":
        return RootScalar(self.order, -self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    def pair(self) -> tuple[int, int]:
        """(order, exponent) of the reduced form; the canonical printed shape."""
        r = self.reduced()
        return (r.order, r.exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootScalar):
            return NotImplemented
        return self.pair() == other.pair()

    def __hash__(self):
        return hash(self.pair())

    def __repr__(self):
        return f"RootScalar({self.order}, {self.exponent})"


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by exact division: Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
    """
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (remainder must vanish)."""
    num = num[:]
    dd = len(den) - 1
    assert den[dd] == 1, "divisor must be monic"
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    assert not any(num), "division was not exact"
    return out


def _reduce_mod_phi(coeffs: list[int], order: int) -> tuple[int, ...]:
    phi = cyclotomic_poly(order)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = 0
            for j in range(deg):
                work[i - deg + j] -= c * phi[j]
    work = work[:deg]
    work += [0] * (deg - len(work))
    return tuple(work)


class CycInt:
    """Element of Z[zeta_N], stored as a residue modulo Phi_N.

    The coefficient tuple has length deg Phi_N and is a canonical
    representative, so is_zero() and equality are exact.  Arithmetic is
    restricted to a common order; rescaling roots is the caller's job.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = len(cyclotomic_poly(order)) - 1
        coeffs = tuple(coeffs)
        if len(coeffs) != deg:
            raise ValueError(
                f"need {deg} coefficients for order {order}, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def zero(cls, order: int) -> "CycInt":
        deg = len(cyclotomic_poly(order)) - 1
        return cls(order, (0,) * deg)

    @classmethod
    def from_int(cls, order: int, value: int) -> "CycInt":
        deg = len(cyclotomic_poly(order)) - 1
        return cls(order, (value,) + (0,) * (deg - 1))

    @classmethod
    def from_root(cls, root: RootScalar, order: int | None = None) -> "CycInt":
        """Embed a root of unity (rescaled to `order` if given)."""
        if order is not None:
            root = root.rescale(order)
        e = root.exponent
        mono = [0] * (e + 1)
        mono[e] = 1
        return cls(root.order, _reduce_mod_phi(mono, root.order))

    def _check(self, other: "CycInt"):
        if self.order != other.order:
            raise OrderMismatchError(
                f"mixed orders {self.order} and {other.order}")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.order, tuple(a * other for a in self.coeffs))
        if isinstance(other, RootScalar):
            other = CycInt.from_root(other, self.order)
        self._check(other)
        n = len(self.coeffs)
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycInt(self.order, _reduce_mod_phi(prod, self.order))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def evaluate_mod(self, point: int, p: int) -> int:
        """Value of the residue polynomial at `point`, modulo the prime p."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * point + c) % p
        return acc

    def __repr__(self):
        return f"CycInt({self.order}, {self.coeffs})"


@dataclass(frozen=True)
class CongruenceSystem:
    """Simultaneous congruences coeffs[j] * x = rhs[j] (mod modulus)."""

    modulus: int
    coeffs: tuple[int, ...]
    rhs: tuple[int, ...]

    def solve(self) -> int | None:
        """Least nonnegative solution, or None when the system is inconsistent."""
        residue, period = 0, 1
        for a, t in zip(self.coeffs, self.rhs):
            a %= self.modulus
            t %= self.modulus
            g = gcd(a, self.modulus)
            if t % g:
                return None
            m = self.modulus // g
            x0 = (t // g) * pow(a // g, -1, m) % m if m > 1 else 0
            # merge x = residue (mod period) with x = x0 (mod m)
            d = gcd(period, m)
            if (x0 - residue) % d:
                return None
            step = period // d
            k = ((x0 - residue) // d) * pow(step % (m // d), -1, m // d) % (m // d) if m // d > 1 else 0
            residue += period * k
            period = lcm(period, m)
            residue %= period
        return residue

    def is_solution(self, x: int) -> bool:
        return all((a * x - t) % self.modulus == 0
                   for a, t in zip(self.coeffs, self.rhs))


def solve_root_system(pairs) -> RootScalar | None:
    """A root of unity c with c**a_j equal to the given root, for every pair.

    `pairs` is a sequence of (a_j, RootScalar).  A single search modulus
    suffices: any solution has order dividing M = N * lcm(a_j) where N is
    the lcm of the target orders, so the problem is a congruence system
    modulo M.  Returns the reduced witness, or None.
    """
    pairs = list(pairs)
    if not pairs:
        return RootScalar(1, 0)
    if any(a < 1 for a, _ in pairs):
        raise ValueError("exponents a_j must be positive")
    n = lcm(*[p.order for _, p in pairs])
    m = n * lcm(*[a for a, _ in pairs])
    system = CongruenceSystem(
        modulus=m,
        coeffs=tuple(a for a, _ in pairs),
        rhs=tuple(p.rescale(m).exponent for _, p in pairs),
    )
    x = system.solve()
    if x is None:
        return None
    return RootScalar(m, x).reduced()


# ---------------------------------------------------------------------------
# Integer matrix normal forms.


def smith_normal_form(mat) -> tuple[list[int], list[list[int]]]:
    """Diagonal of the Smith form of `mat`, with the right transform V.

    Returns (diag, V) where diag has min(rows, cols) nonnegative entries in
    a divisibility chain and V is unimodular with U * mat * V diagonal for
    some unimodular U (not tracked).
    """
    n = len(mat)
    m = len(mat[0]) if n else 0
    a = [list(map(int, row)) for row in mat]
    if n and any(len(row) != m for row in a):
        raise ValueError("ragged matrix")
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(src, dst, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def diagonalize_from(start):
        t = start
        while t < min(n, m):
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            a[t], a[best[0]] = a[best[0]], a[t]
            swap_cols(t, best[1])
            while True:
                again = False
                for i in range(t + 1, n):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                        if a[i][t]:
                            a[t], a[i] = a[i], a[t]
                            again = True
                for j in range(t + 1, m):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        add_col(t, j, -q)
                        if a[t][j]:
                            swap_cols(t, j)
                            again = True
                if not again:
                    break
            t += 1
        return t

    diagonalize_from(0)
    # enforce the divisibility chain d_i | d_{i+1}
    while True:
        bad = None
        for i in range(min(n, m) - 1):
            if a[i][i] and a[i + 1][i + 1] % a[i][i]:
                bad = i
                break
            if a[i][i] == 0 and a[i + 1][i + 1]:
                bad = i
                break
        if bad is None:
            break
        add_col(bad + 1, bad, 1)
        diagonalize_from(bad)
    diag = [abs(a[i][i]) for i in range(min(n, m))]
    return diag, v


def hermite_normal_form(rows) -> list[list[int]]:
    """Canonical row-style Hermite form of the lattice spanned by `rows`.

    Zero rows are dropped; pivots are positive, entries above a pivot are
    reduced into [0, pivot).  The output is the unique such basis, so equal
    lattices produce equal output.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    m = len(work[0]) if work else 0
    basis: list[list[int]] = []
    col = 0
    while work and col < m:
        live = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            reduced = [pivot]
            for r in live[1:]:
                q = r[col] // pivot[col]
                r = [x - q * y for x, y in zip(r, pivot)]
                if r[col]:
                    reduced.append(r)
                elif any(r):
                    rest.append(r)
            live = reduced
        row = live[0]
        if row[col] < 0:
            row = [-x for x in row]
        basis.append(row)
        work = rest
        col += 1
    # reduce entries above each pivot
    for i, row in enumerate(basis):
        p = next(j for j, x in enumerate(row) if x)
        for upper in basis[:i]:
            q = upper[p] // row[p]
            if q:
                for j in range(m):
                    upper[j] -= q * row[j]
    return basis


def lattice_contains(basis: list[list[int]], vec) -> bool:
    """Membership of an integer vector in the lattice given by HNF basis rows."""
    v = list(map(int, vec))
    for row in basis:
        p = next(j for j, x in enumerate(row) if x)
        if v[p] % row[p]:
            return False
        q = v[p] // row[p]
        v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


def kernel_lattice(mat, modulus: int) -> list[list[int]]:
    """Basis (HNF rows) of {e in Z^m : mat . e = 0 (mod modulus)}.

    Via the Smith form U * mat * V = diag(d): writing e = V y, the condition
    becomes d_i y_i = 0 (mod N), so y_i runs over (N / gcd(N, d_i)) Z.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    n = len(mat)
    m = len(mat[0]) if n else 0
    diag, v = smith_normal_form(mat)
    diag = diag + [0] * (m - len(diag))
    gens = []
    for i in range(m):
        c = modulus // gcd(modulus, diag[i])
        gens.append([c * v[r][i] for r in range(m)])
    return hermite_normal_form(gens)


def image_size(mat, modulus: int, method: str = "auto") -> int:
    """Cardinality of {mat . e mod N : e in (Z/N)^m}.

    Two routes: the Smith form gives prod_i N / gcd(N, d_i); direct
    enumeration recounts it when N^m is small.  Under "auto" both run where
    feasible and must agree.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    n = len(mat)
    m = len(mat[0]) if n else 0
    diag, _ = smith_normal_form(mat)
    by_snf = 1
    for d in diag:
        by_snf *= modulus // gcd(modulus, d)
    if method == "snf":
        return by_snf
    feasible = modulus**m <= ENUMERATION_BOUND and modulus**n <= 2**62
    if method == "enumerate" and not feasible:
        raise ValueError(f"enumeration infeasible for N={modulus}, m={m}")
    if feasible:
        from . import _kernels

        by_enum = _kernels.image_count(mat, modulus)
        if by_enum != by_snf:
            raise InternalDefect(
                f"image size mismatch: enumeration {by_enum}, Smith form {by_snf}")
        return by_enum
    return by_snf


# ---------------------------------------------------------------------------
# Q(zeta_N) as a field of Fraction-coefficient residues, for the exact
# elimination fallback.  Elements are plain tuples; the class carries N.


class CycField:
    """Arithmetic in Q(zeta_N) on coefficient tuples modulo Phi_N."""

    def __init__(self, order: int):
        self.order = order
        self.phi = [Fraction(c) for c in cyclotomic_poly(order)]
        self.deg = len(self.phi) - 1

    def from_cycint(self, z: CycInt) -> tuple[Fraction, ...]:
        if z.order != self.order:
            raise OrderMismatchError(f"expected order {self.order}, got {z.order}")
        return tuple(Fraction(c) for c in z.coeffs)

    def zero(self) -> tuple[Fraction, ...]:
        return (Fraction(0),) * self.deg

    def is_zero(self, a) -> bool:
        return not any(a)

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def _reduce(self, poly):
        work = list(poly)
        for i in range(len(work) - 1, self.deg - 1, -1):
            c = work[i]
            if c:
                work[i] = Fraction(0)
                for j in range(self.deg):
                    work[i - self.deg + j] -= c * self.phi[j]
        work = work[: self.deg]
        work += [Fraction(0)] * (self.deg - len(work))
        return tuple(work)

    def inv(self, a):
        """Inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        r0, r1 = self.phi[:], list(a) + [Fraction(0)]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _fpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(q, s1))
        lead = next(c for c in reversed(r0) if c)
        if sum(1 for c in r0 if c) != 1 or r0[0] != lead:
            # gcd has positive degree: only possible if a was a zero divisor,
            # which cannot happen in a field
            raise InternalDefect("nontrivial gcd against a cyclotomic polynomial")
        inv = [c / lead for c in s0]
        return self._reduce(inv)


def _fpoly_divmod(num, den):
    num = list(num)
    dd = max(i for i, c in enumerate(den) if c)
    out = [Fraction(0)] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        if num[i]:
            c = num[i] / den[dd]
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return out, num[:dd] if dd else [Fraction(0)]


def _fpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _fpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
