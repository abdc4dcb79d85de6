"""The quadric model of AdS3 and its identification with SL(2,R).

The space is the level set <x,x> = 1 of the signature-(2,2) form on R^4.
Points correspond to unimodular 2x2 matrices through ``ads_embed``; group
elements are plain ``numpy`` arrays of shape (2, 2) throughout the package.

Conventions fixed here and used everywhere else:

* rotations ``k(theta) = [[cos, sin], [-sin, cos]]``,
* hyperbolic elements ``a(t) = diag(e^t, e^-t)``,
* NAK (Iwasawa) order ``g = n(x) * a(u) * k(phi)`` with ``n(x) = [[1, x], [0, 1]]``,
* KAK (Cartan) order ``g = k(theta) * a(t) * k(phi)`` with ``t >= 0``,
* Haar measure ``dg = sinh(2t) dt dtheta/(2pi) dphi/(2pi)`` over
  ``t in (0, oo)``, ``theta, phi in [0, 2pi)``.  The (theta, phi) square
  covers the group twice via ``(theta, phi) ~ (theta+pi, phi+pi)``; the
  factor is immaterial because every identity in the package is
  normalization-free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SIGNATURE = np.array([1.0, 1.0, -1.0, -1.0])


def bilinear_form(x, y) -> float:
    """Signature-(2,2) pairing x1*y1 + x2*y2 - x3*y3 - x4*y4."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(np.sum(SIGNATURE * x * y))


def ads_embed(x) -> np.ndarray:
    """Map an ambient 4-vector to its 2x2 matrix avatar.

    det(ads_embed(x)) equals bilinear_form(x, x), so the quadric goes to
    the unimodular group.
    """
    x1, x2, x3, x4 = np.asarray(x, dtype=float)
    return np.array([[x1 + x4, -x2 + x3], [x2 + x3, x1 - x4]])


def ads_unembed(g) -> np.ndarray:
    """Inverse of :func:`ads_embed`."""
    g = np.asarray(g, dtype=float)
    a, b, c, d = g[0, 0], g[0, 1], g[1, 0], g[1, 1]
    return np.array([(a + d) / 2, (c - b) / 2, (b + c) / 2, (a - d) / 2])


def matrix_pairing(gx, gy) -> float:
    """The pairing transported to matrices: (1/2) det(gy) tr(gx gy^{-1}).

    Requires ``gy`` invertible; equals ``bilinear_form`` of the preimages.
    """
    gy = np.asarray(gy, dtype=float)
    return float(0.5 * np.linalg.det(gy) * np.trace(np.asarray(gx) @ np.linalg.inv(gy)))


def spherical_point(t: float, psi1: float, psi2: float) -> np.ndarray:
    """Point of the quadric in spherical coordinates."""
    return np.array(
        [
            np.cosh(t) * np.cos(psi1),
            np.cosh(t) * np.sin(psi1),
            np.sinh(t) * np.sin(psi2),
            np.sinh(t) * np.cos(psi2),
        ]
    )


def rotation(theta: float) -> np.ndarray:
    return np.array([[np.cos(theta), np.sin(theta)], [-np.sin(theta), np.cos(theta)]])


def hyperbolic(t: float) -> np.ndarray:
    return np.array([[np.exp(t), 0.0], [0.0, np.exp(-t)]])


def shear(x: float) -> np.ndarray:
    return np.array([[1.0, x], [0.0, 1.0]])


def kak_element(t: float, theta: float, phi: float) -> np.ndarray:
    """k(theta) a(t) k(phi); equals ads_embed(spherical_point(t, phi+theta, phi-theta))."""
    return rotation(theta) @ hyperbolic(t) @ rotation(phi)


def unimodular_inverse(g) -> np.ndarray:
    """Exact inverse of a unimodular 2x2 matrix."""
    g = np.asarray(g, dtype=float)
    return np.array([[g[1, 1], -g[0, 1]], [-g[1, 0], g[0, 0]]])


@dataclass(frozen=True)
class IwasawaFactors:
    """NAK data: g = n(shear) a(log_a) k(angle)."""

    shear: float
    log_a: float
    angle: float

    def recompose(self) -> np.ndarray:
        return shear(self.shear) @ hyperbolic(self.log_a) @ rotation(self.angle)


@dataclass(frozen=True)
class CartanFactors:
    """KAK data: g = k(theta) a(t) k(phi), canonicalized to t >= 0, theta in [0, pi).

    When t = 0 only theta + phi is determined; the full rotation angle is
    stored in ``theta`` (mod 2pi) and ``phi`` is set to 0.
    """

    t: float
    theta: float
    phi: float

    def recompose(self) -> np.ndarray:
        return kak_element(self.t, self.theta, self.phi)


def iwasawa_u_eiphi(c, d):
    """Iwasawa (u, e^{i phi}) from the bottom row (c, d) of a unimodular matrix.

    Vectorized; the bottom row of n(x) a(u) k(phi) is e^{-u} (-sin phi, cos phi),
    which never vanishes, so the formulas below are globally valid.
    """
    r2 = c * c + d * d
    u = -0.5 * np.log(r2)
    eiphi = (d - 1j * c) / np.sqrt(r2)
    return u, eiphi


def iwasawa_decompose(g) -> IwasawaFactors:
    g = np.asarray(g, dtype=float)
    u, eiphi = iwasawa_u_eiphi(g[1, 0], g[1, 1])
    phi = float(np.angle(eiphi))
    # top row: a = e^u cos(phi) - x e^{-u} sin(phi), b = e^u sin(phi) + x e^{-u} cos(phi)
    x = float(np.exp(u) * (g[0, 1] * eiphi.real - g[0, 0] * eiphi.imag))
    return IwasawaFactors(shear=x, log_a=float(u), angle=phi)


def cartan_decompose(g) -> CartanFactors:
    """KAK factors via the polar form of g.

    g g^T = k(theta) a(2t) k(theta)^{-1} fixes t and theta; phi is read off
    from a(t)^{-1} k(theta)^{-1} g.
    """
    g = np.asarray(g, dtype=float)
    s2 = float(np.sum(g * g))  # tr(g g^T) = 2 cosh(2t)
    c2t = max(s2 / 2.0, 1.0)
    t = 0.5 * float(np.arccosh(c2t))
    if t < 1e-154:
        # rotation: g = k(angle)
        angle = float(np.arctan2(g[0, 1], g[0, 0])) % (2 * np.pi)
        return CartanFactors(t=0.0, theta=angle, phi=0.0)
    A = g @ g.T
    sh = np.sinh(2 * t)
    # A = k(th) diag(e^{2t}, e^{-2t}) k(th)^T:
    #   A11 - A22 = 2 sinh(2t) cos(2 th),  A12 = -sinh(2t) sin(2 th)
    theta = 0.5 * float(np.arctan2(-A[0, 1] / sh, (A[0, 0] - A[1, 1]) / (2 * sh)))
    if theta < 0:
        theta += np.pi  # theta is only fixed mod pi; pick [0, pi)
    kb = hyperbolic(-t) @ rotation(-theta) @ g  # a rotation, possibly = -k(phi)
    phi = float(np.arctan2(kb[0, 1], kb[0, 0])) % (2 * np.pi)
    return CartanFactors(t=t, theta=theta, phi=phi)


def cartan_radius(g) -> float:
    """The t-coordinate of the KAK decomposition (log of the larger singular value)."""
    s2 = float(np.sum(np.asarray(g, dtype=float) ** 2))
    return 0.5 * float(np.arccosh(max(s2 / 2.0, 1.0)))


def haar_weight(t):
    """Radial density sinh(2t) of dg = sinh(2t) dt dtheta/(2pi) dphi/(2pi)."""
    return np.sinh(2 * np.asarray(t, dtype=float))


def random_unimodular(rng: np.random.Generator, entry_bound: float = 10.0) -> np.ndarray:
    """Random SL(2,R) matrix with all entries in [-entry_bound, entry_bound]."""
    while True:
        a, b, c = rng.uniform(-entry_bound, entry_bound, size=3)
        if abs(a) < 0.1:
            continue
        d = (1.0 + b * c) / a
        if abs(d) <= entry_bound:
            return np.array([[a, b], [c, d]])
