"""Closed-form lower bounds on R' and the quadratic model behind them.

Everything here is exact: values are ``Fraction`` and no tolerance is ever
applied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .constructions import regular_feasible
from .errors import DomainError, FeasibilityError, InputError
from .graph import Graph
from .indices import DegreeProfile, degree_profile, variation_randic


@dataclass(frozen=True)
class BoundQuery:
    n: int
    k: int
    m: int | None = None

    def __post_init__(self) -> None:
        if not (1 <= self.k and (2 * self.k <= self.n or self.k <= self.n - 2)):
            raise InputError(f"need 1 <= k <= n-2, got n={self.n}, k={self.k}")
        if self.m is not None and not self.k <= self.m <= self.n - 1:
            raise InputError(f"need k <= m <= n-1, got k={self.k}, m={self.m}")

    @property
    def max_degree(self) -> int:
        return self.n - 1 if self.m is None else self.m


@dataclass(frozen=True)
class BoundResult:
    query: BoundQuery
    value: Fraction
    regime: str
    family: str
    family_params: tuple[int, ...]
    parity_feasible: bool

    @property
    def coincident(self) -> bool:
        """True at k = n/2, where both formulas give the same value."""
        return 2 * self.query.k == self.query.n


def _bound(q: BoundQuery) -> BoundResult:
    n, k, m = q.n, q.k, q.max_degree
    slope = Fraction(1, k) - Fraction(1, m)
    if k == m:
        regime = "split" if 2 * k <= n else "half"
        return BoundResult(q, Fraction(n, 2), regime, "regular", (n, k), n * k % 2 == 0)
    if 2 * k <= n:
        regime = "split"
        value = Fraction(n, 2) - slope * k * (n - k) / 2
        if m == n - 1:
            family, params, feasible = "complete_split", (n, k), True
        else:
            family, params = "gnpkm", (n, n - k, k, m)
            feasible = regular_feasible(n - k, n - k - 1) and regular_feasible(k, n - m - 1)
    else:
        regime = "half"
        value = Fraction(n, 2) - slope * Fraction(n * n, 4) / 2
        half = n // 2
        feasible = n % 2 == 0 and regular_feasible(half, n - k - 1)
        if m == n - 1:
            family, params = "gnpk", (n, half, k)
        else:
            family, params = "gnpkm", (n, half, k, m)
            feasible = feasible and regular_feasible(half, n - m - 1)
    return BoundResult(q, value, regime, family, params, feasible)


def bound_theorem1(n: int, k: int) -> BoundResult:
    """Lower bound on R' over graphs of order n with minimum degree >= k."""
    return _bound(BoundQuery(n, k))


def bound_theorem2(n: int, k: int, m: int) -> BoundResult:
    """Lower bound on R' when additionally the maximum degree is <= m."""
    q = BoundQuery(n, k, m)
    if 2 * k <= n and m < n - k:
        raise DomainError(f"k <= n/2 needs n-k <= m, got n={n}, k={k}, m={m}")
    return _bound(q)


class PChoice(NamedTuple):
    values: frozenset[int]
    theorem_regime: bool


def conjecture_p(n: int, k: int) -> PChoice:
    """Sizes p of the conjectured extremal family member for n/2 < k <= n-2.

    Parity classes already settled by the theorem come back with
    ``theorem_regime=True`` and p = n/2.
    """
    if not (2 * k > n and k <= n - 2):
        raise InputError(f"need n/2 < k <= n-2, got n={n}, k={k}")
    r = n % 4
    lo, hi = n // 2, (n + 1) // 2
    if r == 0 or (r == 2 and k % 2):
        return PChoice(frozenset({n // 2}), True)
    if r == 2:
        return PChoice(frozenset({(n - 2) // 2, (n + 2) // 2}), False)
    if k % 2 == 0:
        return PChoice(frozenset({lo, hi}), False)
    return PChoice(frozenset({lo if r == 1 else hi}), False)


def conjectured_bound(n: int, k: int, p: int) -> Fraction:
    return Fraction(n, 2) - (Fraction(1, k) - Fraction(1, n - 1)) * p * (n - p) / 2


def gnpk_value(n: int, p: int, k: int) -> Fraction:
    """R' of any member of the family K_n minus an (n-k-1)-regular graph on p vertices."""
    return conjectured_bound(n, k, p)


# -- the gamma objective -------------------------------------------------------


def gamma(profile: DegreeProfile) -> Fraction:
    total = Fraction(0)
    for (i, j), x in profile.edge_counts.items():
        if i == j:
            continue
        if i == 0:
            raise InputError("edge counted at degree 0")
        total += (Fraction(1, i) - Fraction(1, j)) * x
    return total


def check_identity_eq6(g: Graph) -> tuple[Fraction, Fraction]:
    """(R'(g), n/2 - gamma/2); the two must agree."""
    return variation_randic(g), Fraction(g.order, 2) - gamma(degree_profile(g)) / 2


@dataclass
class ConstraintReport:
    row_residuals: dict[int, int] = field(default_factory=dict)
    capacity_violations: list[tuple[int, int]] = field(default_factory=list)
    negative_entries: list[tuple[int, ...]] = field(default_factory=list)
    total_vertices_residual: int = 0

    @property
    def ok(self) -> bool:
        return (
            not any(self.row_residuals.values())
            and not self.capacity_violations
            and not self.negative_entries
            and self.total_vertices_residual == 0
        )


def verify_system(profile: DegreeProfile) -> ConstraintReport:
    """Check the degree-balance rows, vertex total, capacities and signs."""
    rep = ConstraintReport()
    degs = profile.degrees()
    for i in degs:
        lhs = sum(
            (2 if (a == b) else 1) * x for (a, b), x in profile.edge_counts.items() if i in (a, b)
        )
        rep.row_residuals[i] = lhs - i * profile.count(i)
    rep.total_vertices_residual = sum(profile.vertex_counts.values()) - profile.n
    for (i, j), x in profile.edge_counts.items():
        cap = comb(profile.count(i), 2) if i == j else profile.count(i) * profile.count(j)
        if x > cap:
            rep.capacity_violations.append((i, j))
        if x < 0:
            rep.negative_entries.append((i, j))
    rep.negative_entries += [(i,) for i, c in profile.vertex_counts.items() if c < 0]
    return rep


def substituted_profile(profile: DegreeProfile) -> dict[tuple[int, int], int]:
    """Missing-edge slacks y: capacity minus actual count, per degree pair."""
    degs = sorted(profile.vertex_counts)
    y = {}
    for a, i in enumerate(degs):
        for j in degs[a:]:
            cap = comb(profile.count(i), 2) if i == j else profile.count(i) * profile.count(j)
            y[i, j] = cap - profile.x(i, j)
            if y[i, j] < 0:
                raise FeasibilityError(f"x[{i},{j}] exceeds its capacity {cap}")
    return y


def substituted_rows(profile: DegreeProfile, y: dict[tuple[int, int], int]) -> dict[int, int]:
    """Residuals of sum_j y[i,j] + 2*y[i,i] = (n-i-1)*n_i, one per degree."""
    res = {}
    for i in profile.vertex_counts:
        lhs = sum((2 if a == b else 1) * v for (a, b), v in y.items() if i in (a, b))
        res[i] = lhs - (profile.n - i - 1) * profile.count(i)
    return res


# -- concavity certificate --------------------------------------------------------


def _weights(n: int, k: int) -> list[Fraction]:
    """1/i - 1/(n-1) for i = k..n-2."""
    return [Fraction(1, i) - Fraction(1, n - 1) for i in range(k, n - 1)]


def _half_regime(n: int, k: int) -> None:
    if not (2 * k >= n and k <= n - 2):
        raise DomainError(f"need n/2 <= k <= n-2, got n={n}, k={k}")


def reduced_gamma1(n: int, k: int, point: list[Fraction]) -> Fraction:
    """gamma_1 with n_{n-1} eliminated, as a function of (n_k, ..., n_{n-2})."""
    c = _weights(n, k)
    if len(point) != len(c):
        raise InputError(f"point must have {len(c)} coordinates")
    lin = sum(n * ci * xi for ci, xi in zip(c, point))
    sq = sum(ci * xi * xi for ci, xi in zip(c, point))
    cross = sum(
        2 * c[b] * point[a] * point[b] for a in range(len(c)) for b in range(a + 1, len(c))
    )
    return lin - sq - cross


def gamma1(n: int, k: int, counts: list[Fraction]) -> Fraction:
    """sum over i<j of (1/i - 1/j) n_i n_j for counts (n_k, ..., n_{n-1})."""
    degs = range(k, n)
    return sum(
        (Fraction(1, i) - Fraction(1, j)) * counts[i - k] * counts[j - k]
        for i in degs
        for j in degs
        if i < j
    )


def gamma1_max(n: int, k: int) -> tuple[Fraction, list[Fraction]]:
    _half_regime(n, k)
    half = Fraction(n, 2)
    point = [half] + [Fraction(0)] * (n - k - 2) + [half]
    return Fraction(n * n, 4) * (Fraction(1, k) - Fraction(1, n - 1)), point


def hessian_minor(n: int, k: int, j: int) -> Fraction:
    """Closed form of the j-th leading principal minor of the Hessian of the
    reduced gamma_1."""
    if not 1 <= j <= n - k - 1:
        raise InputError(f"need 1 <= j <= n-k-1, got j={j}")
    val = Fraction((-2) ** j)
    for t in range(j - 1):
        val *= Fraction(1, k + t) - Fraction(1, k + t + 1)
    return val * (Fraction(1, k + j - 1) - Fraction(1, n - 1))


def hessian_by_differences(n: int, k: int) -> list[list[Fraction]]:
    """Hessian of the reduced gamma_1 from second differences of the function.

    The function is quadratic, so unit-step differences are exact.
    """
    dim = n - k - 1

    def f(*bumps: int) -> Fraction:
        pt = [Fraction(0)] * dim
        for b in bumps:
            pt[b] += 1
        return reduced_gamma1(n, k, pt)

    f0 = f()
    ones = [f(a) for a in range(dim)]
    return [
        [f(a, b) - ones[a] - ones[b] + f0 for b in range(dim)] for a in range(dim)
    ]


def determinant(mat: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [row[:] for row in mat]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def minor_by_determinant(n: int, k: int, j: int) -> Fraction:
    if not 1 <= j <= n - k - 1:
        raise InputError(f"need 1 <= j <= n-k-1, got j={j}")
    h = hessian_by_differences(n, k)
    return determinant([row[:j] for row in h[:j]])


def check_stationarity(n: int, k: int, point: list[Fraction] | None = None) -> list[Fraction]:
    """Left-hand sides of the first-order conditions of the reduced gamma_1.

    Entry 0 is the n_k row, entry t the n_{k+t} row. The default point is
    (n/2, 0, ..., 0), at which every entry vanishes.
    """
    _half_regime(n, k)
    c = _weights(n, k)
    dim = len(c)
    if point is None:
        point = [Fraction(n, 2)] + [Fraction(0)] * (dim - 1)
    out = []
    for a in range(dim):
        r = n * c[a] - 2 * c[a] * point[a]
        r -= 2 * sum(c[a] * point[b] for b in range(a))
        r -= 2 * sum(c[b] * point[b] for b in range(a + 1, dim))
        out.append(r)
    return out


def build_extremal(result: BoundResult) -> Graph | None:
    """Representative graph of the family that attains ``result``, or None
    when parity rules the family out."""
    from .constructions import complete_split, family_gnpk, family_gnpkm, regular_graph

    if not result.parity_feasible:
        return None
    build = {
        "complete_split": complete_split,
        "gnpk": family_gnpk,
        "gnpkm": family_gnpkm,
        "regular": regular_graph,
    }
    return build[result.family](*result.family_params)
