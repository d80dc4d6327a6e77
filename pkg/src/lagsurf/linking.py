"""Sphere-side integer oracles: linking, contact framing, tangent winding.

Curves live on the unit sphere in (q1, p1, q2, p2)-space and are passed
around as (N, 4) sample arrays, closed implicitly (sample N wraps to 0).
Linking numbers are computed combinatorially: stereographic projection to
3-space away from both curves, then a generic planar projection with signed
crossings.  A Gauss-integral route over the same 3-space images is provided
separately as a cross-check; the two must agree and are never merged.

Sign conventions are pinned by one anchor: two distinct fibres of the
circle action (z1, z2) -> e^{i eps}(z1, z2) link +1.  With that choice the
contact-framing number of the flat real circle comes out -1, as it must.

The contact-framing oracle pushes a curve off along the circle action (the
Reeb flow of the radial contact form) and links it with its own push-off.
The tangent-winding oracle trivializes the contact planes by the global
complex line field spanned by (-conj(z2), conj(z1)); in that frame a curve's
tangent is the complex scalar h(s) = z1 T2 - z2 T1, and the oracle returns
its winding number.
"""

from __future__ import annotations

import math

import numpy as np


class DegenerateProjection(RuntimeError):
    """No tried projection separated the curves' crossings cleanly."""


class SelfIntersectingSamples(ValueError):
    """Input samples are not embedded at their own resolution."""


class TangentDegenerate(ValueError):
    """Discrete tangent (or its contact-frame image) vanishes somewhere."""


_VIEW_SEEDS = (0.0, 0.37, 0.71, 1.13, 1.62, 2.31)


def _require_embedded(curve: np.ndarray) -> None:
    """Reject sample sets whose non-neighbours collide at sample resolution."""
    n = len(curve)
    if n < 8:
        raise SelfIntersectingSamples("too few samples to resolve a closed curve")
    gaps = np.linalg.norm(np.roll(curve, -1, axis=0) - curve, axis=1)
    threshold = 0.5 * float(np.max(gaps))
    diff = curve[:, None, :] - curve[None, :, :]
    dist = np.linalg.norm(diff, axis=-1)
    idx = np.arange(n)
    band = np.minimum(np.abs(idx[:, None] - idx[None, :]),
                      n - np.abs(idx[:, None] - idx[None, :]))
    off_band = dist[band > 2]
    if off_band.size and float(np.min(off_band)) < threshold:
        raise SelfIntersectingSamples(
            "non-adjacent samples closer than half a sample step"
        )


def reeb_pushoff(curve: np.ndarray, epsilon: float) -> np.ndarray:
    """Flow every sample by e^{i epsilon} in both complex coordinates."""
    z1 = curve[:, 0] + 1j * curve[:, 1]
    z2 = curve[:, 2] + 1j * curve[:, 3]
    phase = complex(math.cos(epsilon), math.sin(epsilon))
    z1, z2 = phase * z1, phase * z2
    return np.stack([z1.real, z1.imag, z2.real, z2.imag], axis=-1)


def _candidate_poles() -> np.ndarray:
    eye = np.eye(4)
    oblique = np.array(
        [
            [0.5, 0.5, 0.5, 0.5],
            [0.5, -0.5, 0.5, -0.5],
            [0.5, 0.5, -0.5, -0.5],
            [0.1, -0.3, 0.9, 0.28],
        ]
    )
    oblique /= np.linalg.norm(oblique, axis=1, keepdims=True)
    return np.concatenate([eye, -eye, oblique, -oblique])


def _projection_basis(pole: np.ndarray) -> np.ndarray:
    """Rows b1, b2, b3 spanning pole-perp, with det(b1, b2, b3, pole) = +1."""
    basis = [pole]
    for seed in np.eye(4):
        vec = seed - sum(np.dot(seed, b) * b for b in basis)
        norm = np.linalg.norm(vec)
        if norm > 1e-8:
            basis.append(vec / norm)
        if len(basis) == 4:
            break
    frame = np.array(basis[1:])
    if np.linalg.det(np.vstack([frame, pole[None, :]])) < 0:
        frame[2] = -frame[2]
    return frame


def stereographic(curve: np.ndarray, pole: np.ndarray) -> np.ndarray:
    """Project sphere samples to 3-space from the given unit pole."""
    frame = _projection_basis(pole)
    height = curve @ pole
    if np.any(np.abs(1.0 - height) < 1e-6):
        raise DegenerateProjection("curve passes through the projection pole")
    return (curve @ frame.T) / (1.0 - height)[:, None]


def _choose_pole(curves) -> np.ndarray:
    stacked = np.concatenate(curves)
    poles = _candidate_poles()
    heights = stacked @ poles.T
    closest = np.max(heights, axis=0)
    best = int(np.argmin(closest))
    if closest[best] > 1.0 - 1e-4:
        raise DegenerateProjection("every candidate pole sits on a curve")
    return poles[best]


def _view_rotation(angle: float) -> np.ndarray:
    ca, sa = math.cos(angle), math.sin(angle)
    tilt = math.cos(0.6 * angle), math.sin(0.6 * angle)
    spin = np.array([[ca, -sa, 0.0], [sa, ca, 0.0], [0.0, 0.0, 1.0]])
    nod = np.array([[1.0, 0.0, 0.0], [0.0, tilt[0], -tilt[1]], [0.0, tilt[1], tilt[0]]])
    return nod @ spin


def _planar_crossings(a3: np.ndarray, b3: np.ndarray) -> int:
    """Signed inter-curve crossing sum in the (x, y) view of two 3-space loops.

    Raises DegenerateProjection on parallel overlaps, endpoint grazes, or
    height ties, so callers can retry with a rotated view.
    """
    pa, qa = a3, np.roll(a3, -1, axis=0)
    pb, qb = b3, np.roll(b3, -1, axis=0)
    da, db = qa - pa, qb - pb

    denom = da[:, None, 0] * db[None, :, 1] - da[:, None, 1] * db[None, :, 0]
    offset = pb[None, :, :2] - pa[:, None, :2]
    cross_a = offset[..., 0] * db[None, :, 1] - offset[..., 1] * db[None, :, 0]
    cross_b = offset[..., 0] * da[:, None, 1] - offset[..., 1] * da[:, None, 0]

    scale = float(np.max(np.abs(denom))) + 1e-30
    with np.errstate(divide="ignore", invalid="ignore"):
        t = cross_a / denom
        u = cross_b / denom
    parallel = np.abs(denom) < 1e-12 * scale
    inside = (~parallel) & (t > 0) & (t < 1) & (u > 0) & (u < 1)
    grazing = (~parallel) & (
        ((np.abs(t) < 1e-9) | (np.abs(t - 1) < 1e-9)
         | (np.abs(u) < 1e-9) | (np.abs(u - 1) < 1e-9))
        & (t > -1e-9) & (t < 1 + 1e-9) & (u > -1e-9) & (u < 1 + 1e-9)
    )
    if np.any(grazing):
        raise DegenerateProjection("crossing lands on a segment endpoint")

    ia, ib = np.nonzero(inside)
    if ia.size == 0:
        return 0
    za = a3[ia, 2] + t[ia, ib] * da[ia, 2]
    zb = b3[ib, 2] + u[ia, ib] * db[ib, 2]
    gap = za - zb
    if np.any(np.abs(gap) < 1e-9 * (1.0 + np.abs(za) + np.abs(zb))):
        raise DegenerateProjection("strands tie in height at a crossing")

    sign_turn = np.sign(denom[ia, ib]).astype(int)
    over_a = gap > 0
    # det(over, under): when b is over, swap the pair, flipping the sign
    signs = np.where(over_a, sign_turn, -sign_turn)
    return int(np.sum(signs))


def linking_number(first: np.ndarray, second: np.ndarray) -> int:
    """Combinatorial linking number of two disjoint sphere loops."""
    pole = _choose_pole((first, second))
    a3 = stereographic(first, pole)
    b3 = stereographic(second, pole)
    last_error: Exception | None = None
    for angle in _VIEW_SEEDS:
        view = _view_rotation(angle)
        try:
            total = _planar_crossings(a3 @ view.T, b3 @ view.T)
        except DegenerateProjection as err:
            last_error = err
            continue
        if total % 2:
            last_error = DegenerateProjection("odd crossing sum, view missed a pair")
            continue
        return total // 2
    raise DegenerateProjection(f"all views degenerate: {last_error}")


def gauss_linking(first: np.ndarray, second: np.ndarray) -> float:
    """Gauss double-integral route over the stereographic images (unrounded).

    Kept independent of :func:`linking_number` so the two can validate each
    other; midpoint rule over segment pairs.
    """
    pole = _choose_pole((first, second))
    a3 = stereographic(first, pole)
    b3 = stereographic(second, pole)
    da = np.roll(a3, -1, axis=0) - a3
    db = np.roll(b3, -1, axis=0) - b3
    ma = a3 + 0.5 * da
    mb = b3 + 0.5 * db
    sep = ma[:, None, :] - mb[None, :, :]
    norm = np.linalg.norm(sep, axis=-1) ** 3
    cross = np.cross(da[:, None, :], db[None, :, :])
    triple = np.einsum("ijk,ijk->ij", cross, sep)
    return float(np.sum(triple / norm) / (4 * math.pi))


def contact_framing(curve: np.ndarray, epsilon: float = 1e-2) -> int:
    """Link a closed Legendrian with its Reeb push-off (its framing number).

    The push-off e^{i epsilon} never meets the curve, so any positive epsilon
    works; halving it must not change the answer, which tests exploit.
    """
    _require_embedded(curve)
    return linking_number(curve, reeb_pushoff(curve, epsilon))


def tangent_winding(curve: np.ndarray) -> int:
    """Winding of the tangent in the global contact-plane trivialization.

    The discrete tangent uses central differences.  The frame scalar
    h = z1 T2 - z2 T1 must stay away from zero; the summed angle increments
    must close up to an integer multiple of 2 pi.
    """
    tangent = (np.roll(curve, -1, axis=0) - np.roll(curve, 1, axis=0)) * 0.5
    speed = np.linalg.norm(tangent, axis=1)
    if float(np.min(speed)) < 1e-12:
        raise TangentDegenerate("sampled tangent vanishes")
    z1 = curve[:, 0] + 1j * curve[:, 1]
    z2 = curve[:, 2] + 1j * curve[:, 3]
    t1 = tangent[:, 0] + 1j * tangent[:, 1]
    t2 = tangent[:, 2] + 1j * tangent[:, 3]
    frame = z1 * t2 - z2 * t1
    if float(np.min(np.abs(frame))) < 1e-9 * float(np.max(np.abs(frame))):
        raise TangentDegenerate("tangent leaves the contact plane frame")
    angles = np.angle(frame)
    steps = np.diff(np.concatenate([angles, angles[:1]]))
    steps = (steps + math.pi) % (2 * math.pi) - math.pi
    turns = float(np.sum(steps)) / (2 * math.pi)
    nearest = round(turns)
    if abs(turns - nearest) > 0.01:
        raise TangentDegenerate(f"winding {turns} failed to close up")
    return int(nearest)
