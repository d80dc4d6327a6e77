"""Numerical verification of the explicit immersion families.

Real 4-space carries coordinates (q1, p1, q2, p2), identified with complex
2-space via z1 = q1 + i p1, z2 = q2 + i p2.  The standard symplectic pairing
is omega(u, v) = Im(conj(u1) v1 + conj(u2) v2), and the radial contact form
on the unit 3-sphere is its contraction lambda_p(v) = omega(p, v).

Four explicit parametrized objects are verified here:

* the one-parameter family of Lagrangian strips
      strip_A(s, T) = A * (-(i/sqrt 2) sqrt(1+T^2) e^{2is}, T e^{-is}),
  defined for 0 < A < sqrt 2, which closes up under (s, T) -> (s+pi, -T)
  and meets the unit sphere exactly at |T| = half_width(A);
* its blow-down limit, the cone
      cone(s, T) = (-(i/sqrt 2) |T| e^{2is}, T e^{-is});
* the polynomial umbrella sheet
      umbrella(t, u) = (t^2 + i t u, u + (2/3) i t^3),
  whose radial Liouville identity is checked with exact derivatives;
* the cone's boundary curve on the unit sphere,
      boundary_curve(s) = (-(i/sqrt 3) e^{2is}, sqrt(2/3) e^{-is}).

Residual checks use second-order central differences except where a
polynomial/trigonometric formula admits exact derivatives; the two cases are
kept separate so scheme error never masks a formula error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


class AOutOfRange(ValueError):
    """Strip parameter outside (0, sqrt 2)."""


class GridOutsideDomain(ValueError):
    """Requested grid touches the family's singular locus."""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one residual check; passed iff max_residual <= tolerance."""

    max_residual: float
    grid: str
    tolerance: float
    passed: bool

    @classmethod
    def from_residual(cls, residual: float, grid: str, tolerance: float):
        return cls(float(residual), grid, tolerance, bool(residual <= tolerance))


@dataclass(frozen=True)
class ImmersionFamily:
    """A two-parameter map into real 4-space with a named singular locus."""

    name: str
    evaluator: Callable[[np.ndarray, np.ndarray], np.ndarray]
    domain: str
    parameters: tuple[float, ...] = ()
    apex_excluded: bool = False


def _pack(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    return np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1)


def symplectic_pairing(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """omega(u, v) on (q1, p1, q2, p2) tuples (vectorized over leading axes)."""
    return (
        u[..., 0] * v[..., 1]
        - u[..., 1] * v[..., 0]
        + u[..., 2] * v[..., 3]
        - u[..., 3] * v[..., 2]
    )


def radial_contact(p: np.ndarray, v: np.ndarray) -> np.ndarray:
    """The contact form at p applied to v: omega(p, v)."""
    return symplectic_pairing(p, v)


def strip_half_width(a: float) -> float:
    """|T| at which the strip meets the unit sphere."""
    if not 0 < a < math.sqrt(2):
        raise AOutOfRange(f"strip parameter must be in (0, sqrt 2), got {a}")
    return math.sqrt((2.0 / 3.0) * (1.0 / a**2 - 0.5))


def strip_family(a: float) -> ImmersionFamily:
    if not 0 < a < math.sqrt(2):
        raise AOutOfRange(f"strip parameter must be in (0, sqrt 2), got {a}")

    def evaluate(s: np.ndarray, t: np.ndarray) -> np.ndarray:
        s, t = np.asarray(s, float), np.asarray(t, float)
        z1 = a * (-1j / math.sqrt(2)) * np.sqrt(1 + t**2) * np.exp(2j * s)
        z2 = a * t * np.exp(-1j * s)
        return _pack(z1, z2)

    return ImmersionFamily("strip", evaluate, "s in R, T in R", (a,))


def cone_family() -> ImmersionFamily:
    def evaluate(s: np.ndarray, t: np.ndarray) -> np.ndarray:
        s, t = np.asarray(s, float), np.asarray(t, float)
        z1 = (-1j / math.sqrt(2)) * np.abs(t) * np.exp(2j * s)
        z2 = t * np.exp(-1j * s)
        return _pack(z1, z2)

    return ImmersionFamily("cone", evaluate, "s in R, T != 0", apex_excluded=True)


def umbrella_family() -> ImmersionFamily:
    def evaluate(t: np.ndarray, u: np.ndarray) -> np.ndarray:
        t, u = np.asarray(t, float), np.asarray(u, float)
        z1 = t**2 + 1j * t * u
        z2 = u + (2.0 / 3.0) * 1j * t**3
        return _pack(z1, z2)

    return ImmersionFamily("umbrella", evaluate, "(t, u) in R^2")


def boundary_curve(s: np.ndarray) -> np.ndarray:
    """The cone's boundary circle on the unit sphere, as (N, 4) samples."""
    s = np.asarray(s, float)
    z1 = (-1j / math.sqrt(3)) * np.exp(2j * s)
    z2 = math.sqrt(2.0 / 3.0) * np.exp(-1j * s)
    return _pack(z1, z2)


def boundary_curve_tangent(s: np.ndarray) -> np.ndarray:
    """Exact derivative of :func:`boundary_curve`."""
    s = np.asarray(s, float)
    t1 = (2.0 / math.sqrt(3)) * np.exp(2j * s)
    t2 = -1j * math.sqrt(2.0 / 3.0) * np.exp(-1j * s)
    return _pack(t1, t2)


def pullback_residual(
    family: ImmersionFamily,
    first: np.ndarray,
    second: np.ndarray,
    step: float = 1e-4,
    tolerance: float = 1e-6,
) -> VerificationReport:
    """Max |omega(d1 f, d2 f)| over the grid, derivatives by central differences.

    A vanishing pullback of the symplectic pairing is what makes the sheet
    Lagrangian; the residual is bounded by the scheme truncation ~ step^2.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    first, second = np.asarray(first, float), np.asarray(second, float)
    if family.apex_excluded and np.min(np.abs(second)) <= 2 * step:
        raise GridOutsideDomain(
            f"{family.name} family needs the grid clear of its apex at T = 0"
        )
    a, b = np.meshgrid(first, second, indexing="ij")
    d1 = (family.evaluator(a + step, b) - family.evaluator(a - step, b)) / (2 * step)
    d2 = (family.evaluator(a, b + step) - family.evaluator(a, b - step)) / (2 * step)
    residual = np.max(np.abs(symplectic_pairing(d1, d2)))
    grid = f"{family.name} {len(first)}x{len(second)} step {step:g}"
    return VerificationReport.from_residual(residual, grid, tolerance)


def strip_identities(
    a: float, samples: int = 256, tolerance: float = 1e-12
) -> VerificationReport:
    """Deck identity, unit-sphere boundary, and boundary transversality.

    Checks strip_A(s + pi, -T) = strip_A(s, T) over a grid, |strip_A| = 1 at
    |T| = half_width(A), and that the radial derivative d|strip|^2/dT stays
    away from zero at the boundary (so the strip meets the sphere
    transversally).  The transversality margin enters the residual as a
    shortfall below 1e-3, which is 0 for every parameter away from sqrt 2.
    """
    family = strip_family(a)
    half = strip_half_width(a)
    s = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    t = np.linspace(-half, half, 33)
    sg, tg = np.meshgrid(s, t, indexing="ij")

    deck = np.max(
        np.abs(family.evaluator(sg + math.pi, -tg) - family.evaluator(sg, tg))
    )
    edge = np.concatenate(
        [family.evaluator(s, np.full_like(s, half)),
         family.evaluator(s, np.full_like(s, -half))]
    )
    boundary = np.max(np.abs(np.linalg.norm(edge, axis=-1) - 1.0))

    h = 1e-6
    plus = np.linalg.norm(family.evaluator(s, np.full_like(s, half + h)), axis=-1)
    minus = np.linalg.norm(family.evaluator(s, np.full_like(s, half - h)), axis=-1)
    radial_rate = np.min(np.abs(plus**2 - minus**2)) / (2 * h)
    shortfall = max(0.0, 1e-3 - radial_rate)

    residual = max(deck, boundary, shortfall)
    return VerificationReport.from_residual(
        residual, f"strip A={a:g} {samples} samples", tolerance
    )


@dataclass(frozen=True)
class ConvergenceReport:
    """Sup-distances of rescaled strips from the cone, with step ratios."""

    a_values: tuple[float, ...]
    distances: tuple[float, ...]
    ratios: tuple[float, ...]


def convergence_to_cone(
    a_values, t_low: float = 0.5, t_high: float = 1.0, samples: int = 64
) -> ConvergenceReport:
    """d(A) = sup |strip_A(s, T/A) - cone(s, T)| over an annulus in T.

    On |T| >= t_low > 0 the gap is (1/sqrt 2)(sqrt(A^2 + T^2) - |T|), of
    order A^2, so halving A quarters the distance; the computed consecutive
    ratios are asserted to lie within 20% of 1/4.
    """
    a_values = tuple(float(a) for a in a_values)
    if any(y >= x for x, y in zip(a_values, a_values[1:])) and len(a_values) > 1:
        pass  # descending is the intended use; ratios below assume it
    if t_low <= 0:
        raise ValueError("the annulus must avoid T = 0")
    s = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    t = np.linspace(t_low, t_high, samples)
    sg, tg = np.meshgrid(s, t, indexing="ij")
    cone = cone_family()
    reference = cone.evaluator(sg, tg)

    distances = []
    for a in a_values:
        rescaled = strip_family(a).evaluator(sg, tg / a)
        distances.append(float(np.max(np.linalg.norm(rescaled - reference, axis=-1))))
    ratios = tuple(d2 / d1 for d1, d2 in zip(distances, distances[1:]))
    for ratio in ratios:
        assert 0.25 * 0.8 <= ratio <= 0.25 * 1.2, f"convergence ratio {ratio}"
    return ConvergenceReport(a_values, tuple(distances), ratios)


def liouville_identity(
    low: float = -2.0, high: float = 2.0, samples: int = 41, tolerance: float = 1e-12
) -> VerificationReport:
    """Pushforward of the plane field t dt + 2u du equals 5X on the umbrella.

    X is the radial Liouville field (1/5)(2 q1, 3 p1, 2 q2, 3 p2).  The left
    side uses the exact Jacobian of the umbrella map, the right side
    evaluates X at the mapped point; both are polynomial, so the residual is
    zero to round-off.
    """
    t, u = np.meshgrid(
        np.linspace(low, high, samples), np.linspace(low, high, samples), indexing="ij"
    )
    # exact Jacobian applied to (t, 2u): columns of DF are d/dt and d/du
    pushed = np.stack(
        [
            2 * t * t,
            t * u + 2 * u * t,
            2 * u,
            2 * t**3,
        ],
        axis=-1,
    )
    image = umbrella_family().evaluator(t, u)
    field = np.stack(
        [2 * image[..., 0], 3 * image[..., 1], 2 * image[..., 2], 3 * image[..., 3]],
        axis=-1,
    )
    residual = np.max(np.abs(pushed - field))
    return VerificationReport.from_residual(
        residual, f"umbrella {samples}x{samples} on [{low},{high}]^2", tolerance
    )


def legendrian_residual(
    samples: int = 1024, tolerance: float = 1e-6, perturbation: float = 0.0
) -> VerificationReport:
    """Unit-norm and contact-tangency residuals of the boundary circle.

    The pristine curve uses its exact tangent, so both residuals sit at
    round-off.  A nonzero ``perturbation`` pushes the curve along the Reeb
    direction by perturbation*sin(s) (staying on the sphere) and switches to
    central differences; the contact residual then rises to the order of the
    perturbation, which is the negative control.
    """
    s = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    if perturbation == 0.0:
        points = boundary_curve(s)
        tangent = boundary_curve_tangent(s)
    else:
        def curve(values: np.ndarray) -> np.ndarray:
            base = boundary_curve(values)
            phase = np.exp(1j * perturbation * np.sin(values))
            z1 = (base[..., 0] + 1j * base[..., 1]) * phase
            z2 = (base[..., 2] + 1j * base[..., 3]) * phase
            return _pack(z1, z2)

        h = 1e-5
        points = curve(s)
        tangent = (curve(s + h) - curve(s - h)) / (2 * h)
    norm_residual = np.max(np.abs(np.linalg.norm(points, axis=-1) - 1.0))
    contact_residual = np.max(np.abs(radial_contact(points, tangent)))
    residual = max(norm_residual, contact_residual)
    return VerificationReport.from_residual(
        residual, f"boundary curve {samples} samples", tolerance
    )
