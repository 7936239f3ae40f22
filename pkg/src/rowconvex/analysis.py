"""Singularity analysis of the row-convex generating function and reflection bounds.

Nothing here takes pole locations or growth rates on trust: roots are
computed, and published asymptotic statements are checked against them in
:func:`verify_asymptotic_claims`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from decimal import Decimal
from fractions import Fraction

import numpy as np

from .enumeration import EXPONENTIAL_LIMIT, composition_sum, count_by_linear_recurrence
from .errors import LimitExceededError, NumericalError, UnsupportedCaseError
from .genfunc import ROW_CONVEX_DENOMINATOR, ROW_CONVEX_GF, IntPolynomial, RationalGF
from .oracle import ORACLE_LIMIT, count_distinct_up_to_reflection

ROOT_TOLERANCE = 1e-10
CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class Root:
    value: complex
    residual: float  # |p(value)|
    multiplicity: int = 1


def _newton(p: IntPolynomial, z: complex, steps: int = 5) -> complex:
    dp = p.derivative()
    for _ in range(steps):
        d = dp(z)
        if d == 0:
            break
        step = p(z) / d
        z -= step
        if abs(step) < 1e-17 * max(1.0, abs(z)):
            break
    return z


def polynomial_roots(p: IntPolynomial, tol: float = ROOT_TOLERANCE) -> list[Root]:
    """All complex roots of ``p``, ordered by modulus and then imaginary part.

    Companion-matrix eigenvalues are polished with a few Newton steps.
    Roots closer together than 1e-6 are reported once with their
    multiplicity.
    """
    if p.degree < 1:
        return []
    raw = np.roots(list(reversed(p.coefficients)))
    polished = [_newton(p, complex(z)) for z in raw]
    roots: list[Root] = []
    used = [False] * len(polished)
    for i, z in enumerate(polished):
        if used[i]:
            continue
        group = [j for j in range(len(polished)) if not used[j] and abs(polished[j] - z) < 1e-6]
        for j in group:
            used[j] = True
        z = sum(polished[j] for j in group) / len(group)
        if abs(z.imag) < 1e-14 * max(1.0, abs(z)):
            z = complex(z.real, 0.0)
        res = abs(p(z))
        if len(group) == 1 and res > tol:
            raise NumericalError(f"root {z} has residual {res:.3e} > {tol:.0e}")
        roots.append(Root(z, res, len(group)))
    roots.sort(key=lambda r: (round(abs(r.value), 12), r.value.imag))
    return roots


def denominator_roots() -> list[Root]:
    """Roots of 1 - 5x + 7x^2 - 4x^3."""
    return polynomial_roots(ROW_CONVEX_DENOMINATOR)


def dominant_roots(roots: list[Root], rel_gap: float = 1e-9) -> list[Root]:
    """The roots of smallest modulus (one real root, or a conjugate pair)."""
    r0 = abs(roots[0].value)
    return [r for r in roots if abs(abs(r.value) - r0) <= rel_gap * max(1.0, r0)]


def growth_ratio_estimate(n: int, series=None, digits: int = 40) -> Decimal:
    """S(n+1)/S(n) to ``digits`` decimal places, by scaled integer division."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if series is None or series.n_max < n + 1:
        series = count_by_linear_recurrence(n + 1)
    q = series[n + 1] * 10**digits // series[n]
    return Decimal(f"{q}E-{digits}")  # exact; no context rounding


@dataclass(frozen=True)
class ResidueConstants:
    """Leading term of the coefficients from the dominant simple pole(s).

    Real pole x0:  c_N ~ constant * growth**N.
    Complex pair:  c_N ~ amplitude * growth**N * cos(N * angle + phase).
    """

    kind: str  # "real" or "pair"
    growth: float
    constant: float | None = None
    amplitude: float | None = None
    phase: float | None = None
    angle: float | None = None

    def predict(self, N: int) -> float:
        if self.kind == "real":
            return self.constant * self.growth**N
        return self.amplitude * self.growth**N * math.cos(N * self.angle + self.phase)


def residue(gf: RationalGF, x0: complex) -> complex:
    """Res(gf, x0) = numerator(x0) / denominator'(x0) at a simple pole."""
    return gf.numerator(x0) / gf.denominator.derivative()(x0)


def residue_constants(gf: RationalGF = ROW_CONVEX_GF, roots: list[Root] | None = None) -> ResidueConstants:
    """Constants of the leading asymptotic term of ``gf``'s coefficients.

    Near a simple pole x0, gf ~ Res / (x - x0), whose coefficients are
    -Res * x0**(-N-1).
    """
    if roots is None:
        roots = polynomial_roots(gf.denominator)
    dom = dominant_roots(roots)
    if any(r.multiplicity > 1 for r in dom):
        raise UnsupportedCaseError("dominant pole is not simple")
    x0 = dom[0].value
    growth = 1.0 / abs(x0)
    if len(dom) == 1:
        if x0.imag != 0.0:
            raise UnsupportedCaseError("single non-real dominant pole")
        c = -residue(gf, x0) / x0
        return ResidueConstants("real", growth, constant=c.real)
    if len(dom) != 2:
        raise UnsupportedCaseError(f"{len(dom)} dominant poles")
    # pick the pole below the real axis so that 1/x0 has a positive argument
    x0 = min((r.value for r in dom), key=lambda z: z.imag)
    c = -residue(gf, x0) / x0
    return ResidueConstants(
        "pair",
        growth,
        amplitude=2 * abs(c),
        phase=cmath.phase(c),
        angle=cmath.phase(1 / x0),
    )


# -- checking the published asymptotic statements --------------------------

@dataclass(frozen=True)
class Claim:
    quote: str
    description: str
    computed: str
    residual: float
    verdict: str


class _QSqrt7:
    """Exact a + b*i*sqrt(7) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    def __add__(self, o):
        o = o if isinstance(o, _QSqrt7) else _QSqrt7(o)
        return _QSqrt7(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __mul__(self, o):
        o = o if isinstance(o, _QSqrt7) else _QSqrt7(o)
        return _QSqrt7(self.a * o.a - 7 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def abs_squared(self) -> Fraction:
        return self.a * self.a + 7 * self.b * self.b


def _exact_sqrt(q: Fraction):
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _verdict(residual: float) -> str:
    return CONSISTENT if residual <= ROOT_TOLERANCE else INCONSISTENT


def verify_asymptotic_claims(roots: list[Root] | None = None) -> list[Claim]:
    """Compare each published asymptotic statement with what is actually computed.

    Every claim gets a residual (0 when the statement is exactly right) and
    a verdict of ``"consistent"`` or ``"inconsistent"``.
    """
    den, num = ROW_CONVEX_DENOMINATOR, ROW_CONVEX_GF.numerator
    if roots is None:
        roots = denominator_roots()
    dom = dominant_roots(roots)
    rho = abs(dom[0].value)
    claims = []

    d1 = den(1)
    claims.append(Claim(
        "One root is $x=1$",
        "denominator 1-5x+7x^2-4x^3 evaluated at x = 1",
        f"denominator(1) = {d1}",
        float(abs(d1)),
        _verdict(abs(d1)),
    ))

    mult = 0
    p = num
    while p and p(1) == 0:
        mult += 1
        p = p.derivative()
    claims.append(Claim(
        "the numerator $x(1-x)^3$ vanishes there to order $3$",
        "order of vanishing of the numerator at x = 1",
        f"order = {mult}",
        float(abs(mult - 3)),
        _verdict(abs(mult - 3)),
    ))

    for sign, label in ((1, "+"), (-1, "-")):
        z = _QSqrt7(Fraction(3, 8), Fraction(sign, 8))
        val = den(z)
        mag2 = val.abs_squared()
        mag = _exact_sqrt(mag2)
        shown = str(mag) if mag is not None else f"sqrt({mag2})"
        claims.append(Claim(
            "$x_{2,3} = \\frac{3 \\pm i\\sqrt{7}}{8}$",
            f"|denominator((3 {label} i*sqrt(7))/8)|",
            f"|denominator| = {shown}",
            float(mag) if mag is not None else math.sqrt(mag2),
            _verdict(math.sqrt(mag2)),
        ))

    claims.append(Claim(
        "|x_{2,3}| = \\frac{\\sqrt{3^2+(\\sqrt{7})^2}}{8} = \\frac{\\sqrt{16}}{8} = \\frac{1}{2}",
        "modulus of the dominant (smallest-modulus) denominator root",
        f"|rho| = {rho:.12f}",
        abs(rho - 0.5),
        _verdict(abs(rho - 0.5)),
    ))

    growth = 1.0 / rho
    claims.append(Claim(
        "$S(N) \\sim A \\cdot 2^N \\cos(N\\theta + \\phi)$",
        "exponential growth base 2 versus 1/|rho|",
        f"1/|rho| = {growth:.12f}",
        abs(growth - 2.0),
        _verdict(abs(growth - 2.0)),
    ))

    theta = math.atan(math.sqrt(7) / 3)
    arg = abs(cmath.phase(dom[0].value))
    kind = "real" if len(dom) == 1 else "complex pair"
    claims.append(Claim(
        "$\\theta = \\arctan\\!\\left(\\dfrac{\\sqrt{7}}{3}\\right)$",
        f"oscillation angle versus the argument of the dominant pole ({kind})",
        f"arg = {arg:.12f}, claimed {theta:.12f}",
        abs(arg - theta),
        _verdict(abs(arg - theta)),
    ))
    return claims


@dataclass
class AsymptoticReport:
    roots: list[Root]
    dominant_root: Root
    growth_constant: float
    residue: ResidueConstants
    amplitude: float | None
    phase: float | None
    ratios: list[tuple[int, Decimal]]
    paper_claims: list[Claim] = field(default_factory=list)

    def to_dict(self, digits: int = 12) -> dict:
        def cx(z):
            return {"re": round(z.real, 15), "im": round(z.imag, 15)}

        return {
            "roots": [
                {"value": cx(r.value), "modulus": round(abs(r.value), 15),
                 "residual": r.residual, "multiplicity": r.multiplicity}
                for r in self.roots
            ],
            "dominant_root": cx(self.dominant_root.value),
            "growth_constant": f"{self.growth_constant:.{digits}f}",
            "residue": {k: v for k, v in asdict(self.residue).items() if v is not None},
            "amplitude": self.amplitude,
            "phase": self.phase,
            "ratios": [{"n": n, "ratio": str(q)} for n, q in self.ratios],
            "claims": [asdict(c) for c in self.paper_claims],
        }

    def to_text(self, digits: int = 12) -> str:
        lines = ["roots of 1 - 5x + 7x^2 - 4x^3:"]
        for r in self.roots:
            z = r.value
            lines.append(
                f"  {z.real:+.15f} {z.imag:+.15f}i  |x| = {abs(z):.15f}  residual = {r.residual:.2e}"
            )
        z = self.dominant_root.value
        lines.append(f"dominant root: {z.real:.15f}{z.imag:+.15f}i")
        lines.append(f"growth constant: {self.growth_constant:.{digits}f}")
        if self.residue.kind == "real":
            lines.append(f"leading term: S(N) ~ {self.residue.constant:.15g} * growth^N")
        else:
            lines.append(
                f"leading term: S(N) ~ {self.amplitude:.15g} * growth^N * "
                f"cos({self.residue.angle:.15g} N + {self.phase:.15g})"
            )
        lines.append("ratios S(n+1)/S(n):")
        for n, q in self.ratios:
            lines.append(f"  n = {n:>5}  {q:.{digits}f}")
        lines.append("published claims:")
        for c in self.paper_claims:
            lines.append(f"  [{c.verdict}] {c.quote}")
            lines.append(f"      {c.description}: {c.computed} (residual {c.residual:.6g})")
        return "\n".join(lines) + "\n"


def asymptotic_report(n_terms: int = 200, digits: int = 40) -> AsymptoticReport:
    """Roots, growth constant, residue constants, ratio table and claim verdicts."""
    roots = denominator_roots()
    dom = dominant_roots(roots)
    res = residue_constants(ROW_CONVEX_GF, roots)
    series = count_by_linear_recurrence(n_terms + 1)
    checkpoints = sorted({n for n in (1, 2, 5, 10, 20, 50, 100, 200, 500, 1000) if n <= n_terms} | {n_terms})
    ratios = [(n, growth_ratio_estimate(n, series, digits)) for n in checkpoints]
    return AsymptoticReport(
        roots=roots,
        dominant_root=dom[0],
        growth_constant=1.0 / abs(dom[0].value),
        residue=res,
        amplitude=res.amplitude,
        phase=res.phase,
        ratios=ratios,
        paper_claims=verify_asymptotic_claims(roots),
    )


# -- reflection bounds --------------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    """Bounds on the number of row-convex polyominoes up to mirror image."""

    n: int
    lower: int
    upper: int
    exact: int | None = None

    def to_dict(self) -> dict:
        return {"n": self.n, "lower": str(self.lower),
                "exact": None if self.exact is None else str(self.exact),
                "upper": str(self.upper)}


def reflection_bounds(n: int, *, limit: int = EXPONENTIAL_LIMIT, oracle_limit: int = ORACLE_LIMIT) -> BoundsReport:
    """ceil(S(n)/2) <= D(n) <= sum over compositions of prod(a + b).

    ``exact`` is filled from the brute-force oracle when n <= oracle_limit.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > limit:
        raise LimitExceededError("reflection upper bound", n, limit)
    s = count_by_linear_recurrence(n)[n]
    lower = -(-s // 2)
    upper = composition_sum(n, lambda a, b: a + b)
    exact = count_distinct_up_to_reflection(n)[0] if n <= oracle_limit else None
    return BoundsReport(n, lower, upper, exact)
