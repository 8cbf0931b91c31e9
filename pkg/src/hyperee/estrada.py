"""Estrada index of uniform hypergraphs, by four methods, with bounds.

EE = sum of e^lambda over all k = n*(m-1)^(n-1) adjacency-tensor
eigenvalues.  Each method carries its own error story:

* spectrum-sum: exponentiate an explicit eigenvalue multiset; the
  spectrum's root residual propagates into the error bound.
* trace-series: partial sums of sum_d Tr_d / d! in exact rational
  arithmetic, truncated once a certified tail bound drops below the
  target tolerance (|Tr_d| <= k * rho^d makes the tail a Taylor
  remainder of e^rho).
* symmetric-formula: for spectra invariant under rotation by
  e^(2*pi*i/m), the exponential sum over each rotation orbit collapses
  to a real trigonometric expression in one representative.
* hyperstar-closed-form: explicit formula in m and q.

The module also evaluates spectral bounds on EE: an exact lower bound
from the order-m trace, and a family of upper bounds driven by the
spectral radius and the second spectral moment.  All of them are tight
exactly for edgeless hypergraphs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import UniformHypergraph, detect_hyperstar
from .spectrum import (
    Spectrum,
    hyperstar_multiplicities,
    spectrum,
    symmetric_representatives,
)
from .tensor import SpectralRadiusEstimate, spectral_radius
from .traces import Budget, FeasibilityError, trace_d

IMAG_DISCARD_LIMIT = 1e-8

Rep = tuple[float, float, int]


@dataclass(frozen=True)
class EstradaResult:
    """One computed Estrada index value.

    error_bound is certified for trace-series (a true tail bound),
    residual-propagated for spectrum-sum, and 0 for the closed forms
    (exact up to float rounding).  imag_discard records the magnitude of
    the imaginary mass dropped when realizing the value.  converged is
    False only for a trace series stopped early by the feasibility
    guard, in which case error_bound still honestly covers the missing
    tail.
    """

    value: float
    method: str
    error_bound: float
    terms_used: int | None = None
    imag_discard: float = 0.0
    converged: bool = True


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def ee_from_spectrum(s: Spectrum) -> EstradaResult:
    """EE as the direct sum of exponentials over the eigenvalue multiset."""
    total = 0j
    for z, mult in s.entries:
        total += mult * cmath.exp(z)
    value = total.real
    discard = abs(total.imag)
    if discard > IMAG_DISCARD_LIMIT * max(1.0, abs(value)):
        raise ValueError(
            f"eigenvalue multiset is not conjugate-closed: discarding "
            f"imaginary mass {discard:.3e} against value {value:.6g}"
        )
    error = s.k * _safe_exp(s.rho) * s.residual
    return EstradaResult(
        value=value,
        method="spectrum-sum",
        error_bound=error,
        imag_discard=discard,
    )


def ee_trace_series(
    h: UniformHypergraph,
    target_tol: float = 1e-6,
    rho_hat: float | None = None,
    *,
    budget: Budget | None = None,
    threads: int = 1,
) -> EstradaResult:
    """EE as the exact series sum_d Tr_d / d!, certified truncation.

    Orders 0..D are accumulated as exact rationals; truncation happens
    once k * rho_hat^(D+1) * e^rho_hat / (D+1)! <= target_tol, which
    bounds everything left because |Tr_d| <= k * rho^d.  rho_hat must
    dominate the true spectral radius (the power-iteration upper end is
    used when not supplied).  If the trace enumeration becomes
    infeasible first, the partial sum is returned with converged=False
    and the same honest tail bound.
    """
    if target_tol <= 0:
        raise ValueError("target_tol must be positive")
    budget = budget or Budget()
    if rho_hat is None:
        rho_hat = spectral_radius(h).upper
    k = h.eigenvalue_count()
    exp_rho = _safe_exp(rho_hat)
    acc = Fraction(0)
    factorial_d = 1  # d!
    power_term = 1.0  # rho_hat^d / d!
    d = 0
    while True:
        tail = k * power_term * exp_rho
        if tail <= target_tol:
            return EstradaResult(
                float(acc), "trace-series", tail, terms_used=d
            )
        if d > budget.max_degree:
            return EstradaResult(
                float(acc), "trace-series", tail, terms_used=d,
                converged=False,
            )
        try:
            tr = trace_d(h, d, budget=budget, threads=threads)
        except FeasibilityError:
            return EstradaResult(
                float(acc), "trace-series", tail, terms_used=d,
                converged=False,
            )
        acc += tr / factorial_d
        d += 1
        factorial_d *= d
        power_term *= rho_hat / d


def _orbit_sum(alpha: float, beta: float, m: int) -> float:
    """Real part of sum over the m rotations of e^((alpha+i*beta)*w^r)."""
    total = 0.0
    for r in range(1, m + 1):
        c = math.cos(2.0 * math.pi * r / m)
        s = math.sin(2.0 * math.pi * r / m)
        total += math.exp(alpha * c - beta * s) * math.cos(
            beta * c + alpha * s
        )
    return total


def _orbit_sum_m3(alpha: float, beta: float) -> float:
    root3 = math.sqrt(3.0)
    return (
        2.0
        * math.exp(-alpha / 2.0)
        * (
            math.cos(beta / 2.0)
            * math.cos(root3 * alpha / 2.0)
            * math.cosh(root3 * beta / 2.0)
            - math.sin(beta / 2.0)
            * math.sin(root3 * alpha / 2.0)
            * math.sinh(root3 * beta / 2.0)
        )
        + math.exp(alpha) * math.cos(beta)
    )


def _orbit_sum_m4(alpha: float, beta: float) -> float:
    return 2.0 * (
        math.cos(beta) * math.cosh(alpha)
        + math.cos(alpha) * math.cosh(beta)
    )


def ee_symmetric(
    nonzero_reps: list[Rep],
    n0: int,
    m: int,
    k: int | None = None,
    *,
    use_fast_paths: bool = True,
) -> EstradaResult:
    """EE of an m-fold rotation-symmetric spectrum from orbit data.

    nonzero_reps lists one (alpha, beta, multiplicity) per rotation
    orbit; the value returned covers all m members of each orbit plus n0
    zeros.  With k supplied, n0 + m * (total multiplicity) == k is
    enforced.  m = 3 and m = 4 take hardcoded trigonometric fast paths
    (switch off with use_fast_paths to evaluate the general rotation sum
    instead; both agree to near machine precision).
    """
    if m < 2:
        raise ValueError("uniformity must be at least 2")
    if n0 < 0 or any(mult < 1 for _, _, mult in nonzero_reps):
        raise ValueError("multiplicities must be positive and n0 >= 0")
    if k is not None:
        covered = n0 + m * sum(mult for _, _, mult in nonzero_reps)
        if covered != k:
            raise ValueError(
                f"representatives cover {covered} eigenvalues, expected {k}"
            )
    if use_fast_paths and m == 3:
        orbit = _orbit_sum_m3
    elif use_fast_paths and m == 4:
        orbit = _orbit_sum_m4
    else:
        def orbit(alpha: float, beta: float) -> float:
            return _orbit_sum(alpha, beta, m)
    value = float(n0)
    for alpha, beta, mult in nonzero_reps:
        value += mult * orbit(alpha, beta)
    return EstradaResult(value=value, method="symmetric-formula", error_bound=0.0)


def _ee_hyperstar_m3(q: int) -> float:
    total = float(2 ** (2 * q + 1) * q)
    root3 = math.sqrt(3.0)
    for r in range(q + 1):
        c_r = math.comb(q, r) * 3**r
        x = r ** (1.0 / 3.0)
        total += c_r * (
            2.0 * math.exp(-x / 2.0) * math.cos(root3 * x / 2.0)
            + math.exp(x)
            - 2.0
        )
    return total


def _ee_hyperstar_m4(q: int) -> float:
    total = float(3 ** (3 * q + 1) * q)
    for r in range(q + 1):
        c_r = math.comb(q, r) * 16**r * 11 ** (q - r)
        x = r**0.25
        total += c_r * (
            2.0 * math.cos(x) + math.exp(-x) + math.exp(x) - 3.0
        )
    return total


def ee_hyperstar(
    m: int, q: int, *, use_fast_paths: bool = True
) -> EstradaResult:
    """EE of the m-uniform hyperstar with q edges, in closed form.

    The nonzero eigenvalues are the m-th roots of r = 1..q with known
    multiplicities, so EE reduces to a finite double sum.  m = 3 and
    m = 4 use dedicated one-line-per-term formulas (use_fast_paths=False
    forces the general form; they agree to near machine precision).
    """
    c = hyperstar_multiplicities(m, q)
    if use_fast_paths and m == 3:
        value = _ee_hyperstar_m3(q)
    elif use_fast_paths and m == 4:
        value = _ee_hyperstar_m4(q)
    else:
        n = q * (m - 1) + 1
        k = n * (m - 1) ** (n - 1)
        n0 = k - m * sum(c[1:])
        value = float(n0)
        for r in range(1, q + 1):
            if c[r]:
                value += c[r] * _orbit_sum(r ** (1.0 / m), 0.0, m)
    return EstradaResult(
        value=value, method="hyperstar-closed-form", error_bound=0.0
    )


def order_m_trace(h: UniformHypergraph) -> Fraction:
    """Exact order-m trace: every edge contributes m^(m-1)*(m-1)^(n-m)."""
    if not h.edges:
        return Fraction(0)
    return Fraction(
        h.m ** (h.m - 1) * (h.m - 1) ** (h.n - h.m) * len(h.edges)
    )


@dataclass(frozen=True)
class BoundsReport:
    """Estrada-index bounds; every upper field dominates EE.

    lower_basic/upper_basic come from the order-m trace and the spectral
    radius (k + Tr_m/m! <= EE <= k*e^rho).  The moment bounds use
    r = sum |lambda|^2 = 2*sum(Re lambda)^2 - Tr_2 and need an explicit
    spectrum, so they are None without one; the radius bounds replace
    sqrt(r) by its radius-only majorant rho*sqrt(2k) and are always
    available.  All bounds are evaluated at the upper end of rho_used,
    which keeps them valid for any enclosure of the true radius.
    """

    k: int
    lower_basic: float
    upper_basic: float
    upper_moment: float | None
    upper_moment_adjusted: float | None
    upper_radius: float
    upper_radius_adjusted: float
    modulus_sq_sum: float | None
    rho_used: SpectralRadiusEstimate


def bounds_basic(
    h: UniformHypergraph, rho: SpectralRadiusEstimate
) -> tuple[float, float]:
    """(k + Tr_m/m!, k*e^rho): lower and upper bounds on EE.

    Both are tight exactly for edgeless hypergraphs.  The upper bound is
    evaluated at rho.upper so it stays an upper bound for any enclosure.
    """
    k = h.eigenvalue_count()
    lower = float(k + order_m_trace(h) / math.factorial(h.m))
    upper = k * _safe_exp(rho.upper)
    return lower, upper


def bounds_refined(
    s: Spectrum | None,
    h: UniformHypergraph,
    rho: SpectralRadiusEstimate | None = None,
    *,
    budget: Budget | None = None,
    threads: int = 1,
) -> BoundsReport:
    """Evaluate the full family of EE bounds for h.

    The moment-based upper bounds require the spectrum s (pass None to
    skip them); the basic and radius-based bounds never do.  Tr_2 enters
    the moment bounds exactly from the trace engine (it vanishes for
    m >= 3 but not for ordinary graphs).
    """
    if rho is None:
        rho = spectral_radius(h)
    k = h.eigenvalue_count()
    lower_basic, upper_basic = bounds_basic(h, rho)
    m = h.m
    adj = float(order_m_trace(h) / math.factorial(m))
    ru = rho.upper
    x = ru * math.sqrt(2.0 * k)
    upper_radius = k - 1 + _safe_exp(x)
    upper_radius_adjusted = upper_radius + adj - sum(
        (math.sqrt(2.0) * ru) ** l / math.factorial(l)
        for l in range(1, m + 1)
    )
    upper_moment = upper_moment_adjusted = r_val = None
    if s is not None:
        alpha_sq = sum(mult * z.real**2 for z, mult in s.entries)
        tr2 = float(trace_d(h, 2, budget=budget, threads=threads))
        r_val = max(2.0 * alpha_sq - tr2, 0.0)
        sq = math.sqrt(r_val)
        upper_moment = k - 1 + _safe_exp(sq)
        upper_moment_adjusted = upper_moment + adj - sum(
            r_val ** (l / 2.0) / math.factorial(l) for l in range(1, m + 1)
        )
    return BoundsReport(
        k=k,
        lower_basic=lower_basic,
        upper_basic=upper_basic,
        upper_moment=upper_moment,
        upper_moment_adjusted=upper_moment_adjusted,
        upper_radius=upper_radius,
        upper_radius_adjusted=upper_radius_adjusted,
        modulus_sq_sum=r_val,
        rho_used=rho,
    )


def estrada_index(
    h: UniformHypergraph,
    method: str = "auto",
    *,
    tol: float = 1e-6,
    budget: Budget | None = None,
    threads: int = 1,
) -> EstradaResult:
    """Front door: compute EE by the requested or cheapest valid method.

    "auto" prefers the hyperstar closed form, then the full spectrum
    while k fits the budget (falling back when the spectrum's trace
    orders overrun the enumeration budget), then the certified trace
    series.  Explicit methods: "star", "spectrum", "series",
    "symmetric" (spectrum + rotation-orbit formula).
    """
    budget = budget or Budget()
    if method == "auto":
        star_q = detect_hyperstar(h)
        if star_q is not None:
            return ee_hyperstar(h.m, star_q)
        if not h.edges or h.eigenvalue_count() <= budget.max_degree:
            try:
                return ee_from_spectrum(
                    spectrum(h, budget=budget, threads=threads)
                )
            except FeasibilityError:
                pass  # the series needs far fewer trace orders than k
        return ee_trace_series(h, tol, budget=budget, threads=threads)
    if method == "star":
        star_q = detect_hyperstar(h)
        if star_q is None:
            raise ValueError("input is not a hyperstar")
        return ee_hyperstar(h.m, star_q)
    if method == "spectrum":
        return ee_from_spectrum(spectrum(h, budget=budget, threads=threads))
    if method == "series":
        return ee_trace_series(h, tol, budget=budget, threads=threads)
    if method == "symmetric":
        s = spectrum(h, budget=budget, threads=threads)
        n0, reps = symmetric_representatives(s, h.m)
        return ee_symmetric(reps, n0, h.m, k=s.k)
    raise ValueError(f"unknown method: {method!r}")
