"""Exact integer polynomials, truncated power series, and the row-convex generating function."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import zip_longest
from typing import Iterable


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, ``coefficients[i]`` multiplying x**i.

    Trailing zeros are dropped, so the zero polynomial has no coefficients.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def x(cls, power: int = 1) -> "IntPolynomial":
        return cls((0,) * power + (1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other):
        other = _as_poly(other)
        return IntPolynomial(
            a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coefficients)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = _as_poly(other)
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(k * a for a in self.coefficients)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * a for i, a in enumerate(self.coefficients) if i)

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float and complex arguments."""
        acc = 0
        for a in reversed(self.coefficients):
            acc = acc * x + a
        return acc

    def truncate(self, order: int) -> "IntPolynomial":
        """Drop every term above x**order."""
        return IntPolynomial(self.coefficients[: order + 1])

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(a)
            body = str(mag) if (mag != 1 or i == 0) else ""
            body = f"{body}{mono}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    if isinstance(p, TruncatedSeries):
        return IntPolynomial(p.coefficients)
    return IntPolynomial(tuple(p))


def poly_add(p, q) -> IntPolynomial:
    return _as_poly(p) + _as_poly(q)


def poly_mul(p, q) -> IntPolynomial:
    return _as_poly(p) * _as_poly(q)


def poly_scale(p, k: int) -> IntPolynomial:
    return _as_poly(p).scale(k)


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator, expandable as a power series when denominator(0) != 0."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        object.__setattr__(self, "numerator", _as_poly(self.numerator))
        object.__setattr__(self, "denominator", _as_poly(self.denominator))
        if self.denominator[0] == 0:
            raise ValueError("denominator must have a non-zero constant term")

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)


X = IntPolynomial.x()
ONE = IntPolynomial((1,))

ROW_CONVEX_NUMERATOR = X * (ONE - X) ** 3
ROW_CONVEX_DENOMINATOR = IntPolynomial((1, -5, 7, -4))
ROW_CONVEX_GF = RationalGF(ROW_CONVEX_NUMERATOR, ROW_CONVEX_DENOMINATOR)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known modulo x**(order+1)."""

    coefficients: tuple[int, ...]
    order: int

    def __post_init__(self):
        c = tuple(self.coefficients[: self.order + 1])
        c = c + (0,) * (self.order + 1 - len(c))
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def from_poly(cls, p, order: int) -> "TruncatedSeries":
        return cls(_as_poly(p).coefficients, order)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        return TruncatedSeries.from_poly(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coefficients), self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(k * other for k in self.coefficients), self.order)
        other = self._coerce(other)
        n = self.order + 1
        out = [0] * n
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(n - i):
                    out[i + j] += a * other.coefficients[j]
        return TruncatedSeries(tuple(out), self.order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        return NotImplemented

    __hash__ = None


def series_expand(gf: RationalGF, order: int) -> TruncatedSeries:
    """Coefficients of ``gf`` up to x**order by exact long division."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    num, den = gf.numerator, gf.denominator
    d0 = den[0]
    if d0 == 0:
        raise ValueError("denominator must have a non-zero constant term")
    c = []
    for n in range(order + 1):
        acc = num[n] - sum(den[k] * c[n - k] for k in range(1, min(n, den.degree) + 1))
        q, r = divmod(acc, d0)
        if r:
            raise ValueError(f"coefficient of x^{n} is not an integer")
        c.append(q)
    return TruncatedSeries(tuple(c), order)


@dataclass(frozen=True)
class LinearRecurrence:
    """c[n] = sum_k coefficients[k-1] * c[n-k], started from ``initial_terms`` at index ``start``."""

    coefficients: tuple[int, ...]
    initial_terms: tuple[int, ...]
    start: int = 0

    def terms(self, count: int) -> list[int]:
        """First ``count`` terms, beginning at index ``start``."""
        out = list(self.initial_terms[:count])
        while len(out) < count:
            out.append(sum(a * out[-k] for k, a in enumerate(self.coefficients, start=1)))
        return out


def recurrence_from_gf(gf: RationalGF) -> LinearRecurrence:
    """Linear recurrence satisfied by the coefficients of ``gf``.

    The coefficients come from the denominator. The recurrence holds from
    index max(deg num + 1, deg den) on; the seeds are the
    max(deg num, deg den) terms just before that index.
    """
    num, den = gf.numerator, gf.denominator
    d0 = den[0]
    coeffs = []
    for k in range(1, den.degree + 1):
        q, r = divmod(-den[k], d0)
        if r:
            raise ValueError("recurrence coefficients are not integers")
        coeffs.append(q)
    n_seeds = max(num.degree, den.degree)
    last = max(num.degree, den.degree - 1)
    start = last - n_seeds + 1
    series = series_expand(gf, max(last, 0))
    return LinearRecurrence(tuple(coeffs), tuple(series.coefficients[start : last + 1]), start)


@dataclass
class TransferReport:
    """Outcome of :func:`verify_transfer_identities`."""

    order: int
    m_max: int
    checks: dict[str, bool]
    S: TruncatedSeries
    R: TruncatedSeries
    F: dict[int, TruncatedSeries] = field(repr=False)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def transfer_series(order: int) -> dict[int, TruncatedSeries]:
    """F_m modulo x**(order+1) for m = 1..order.

    F_m counts compositions whose last part is m, weighted by their sliding
    factors. It is built degree by degree from
    F_m = x^m + x^m * sum_l (l + m - 1) F_l,
    which only ever looks at lower degrees.
    """
    F = {m: [0] * (order + 1) for m in range(1, order + 1)}
    for n in range(1, order + 1):
        for m in range(1, n + 1):
            if n == m:
                F[m][n] = 1
                continue
            k = n - m  # degree needed in each F_l
            F[m][n] = sum((l + m - 1) * F[l][k] for l in range(1, k + 1))
    return {m: TruncatedSeries(tuple(c), order) for m, c in F.items()}


def verify_transfer_identities(order: int, m_max: int | None = None) -> TransferReport:
    """Check the transfer-series derivation of the generating function modulo x**(order+1).

    Checks, for the directly built F_m:

    * ``F_m``: F_m = x^m (1 + R + (m-1) S) for m = 1..m_max
    * ``S``: (1 - 2x) S = x (1 - x) (1 + R)
    * ``R``: (1 - x)^3 R = x (1 - x) (1 + R) + 2 x^2 S
    * ``G``: S equals the expansion of x(1-x)^3 / (1-5x+7x^2-4x^3)
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if m_max is None:
        m_max = order
    if m_max > order:
        raise ValueError(f"m_max={m_max} exceeds order={order}")
    F = transfer_series(order)
    zero = TruncatedSeries((), order)
    S = sum(F.values(), zero)
    R = sum((F[m] * m for m in F), zero)
    one = TruncatedSeries.from_poly(ONE, order)
    x = TruncatedSeries.from_poly(X, order)

    star = all(
        F[m] == (1 + R + S * (m - 1)) * TruncatedSeries.from_poly(IntPolynomial.x(m), order)
        for m in range(1, m_max + 1)
    )
    eq_s = S * (1 - 2 * X) == x * (ONE - X) * (one + R)
    eq_r = R * (ONE - X) ** 3 == x * (ONE - X) * (one + R) + S * (2 * X * X)
    checks = {
        "F_m": star,
        "S": eq_s,
        "R": eq_r,
        "G": S == series_expand(ROW_CONVEX_GF, order),
    }
    return TransferReport(order, m_max, checks, S, R, F)
