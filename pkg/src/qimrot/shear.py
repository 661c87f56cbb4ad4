"""Shear transforms on NEQR images and their three-phase rotation.

A rotation by theta in (-90, 90) degrees factors into three axis shears,
horizontal then vertical then horizontal, with factors tan(theta/2), sin
(theta), tan(theta/2).  Each shear splits the image at its median line and
displaces the two halves in opposite directions, so rotation happens around
the image centroid:

    top    (y < Y_mid):  x -> x - round((Y_mid - y) * q)
    bottom (y >= Y_mid): x -> x + round((y - Y_mid) * q)
    left   (x < X_mid):  y -> y + round((X_mid - x) * q)
    right  (x >= X_mid): y -> y - round((x - X_mid) * q)

q is the shear factor's magnitude quantized to four fraction bits
(round-to-nearest, ties up); the factor's sign flips every direction above.
Displacements round half-up, matching the interpolation circuit exactly.
Applying the three shears forward with these factor signs realizes the
factored inverse-rotation matrix, which rotates the displayed raster
counter-clockwise for positive angles; forward per-half application keeps
every pass collision free, since each row (or column) shifts rigidly.

Sheared coordinates may leave the frame.  The default canvas clips them
after every shear (background 0); the expanded canvas keeps all terms and
materialises results on a 2^(n+2)-sided frame whose origin sits 3 * 2^(n-1)
before the original one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .arithmetic import FixedPointValue
from .neqr import NEQRImage, PixelTerm

HORIZONTAL = "horizontal"
VERTICAL = "vertical"

#: Side multiplier and origin shift of the expanded canvas, in units of
#: 2^(n-1): side 8 * 2^(n-1) = 2^(n+2), origin offset 3 * 2^(n-1).
_EXPAND_OFFSET_HALVES = 3


class UnsupportedAngleError(ValueError):
    """Rotation angle outside the supported open interval (-90, 90)."""


class HalfRoutingError(ValueError):
    """A term was routed to the shear for the wrong image half."""


@dataclass(frozen=True)
class ShearSpec:
    """One axis shear: quantized factor magnitude, direction sign, frame size."""

    axis: str
    factor: FixedPointValue
    sign: int
    n: int

    def __post_init__(self) -> None:
        if self.axis not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"axis must be horizontal or vertical, got {self.axis!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.n < 1:
            raise ValueError("image exponent must be at least 1")

    @property
    def median(self) -> int:
        """The reference line splitting the image into halves."""
        return 1 << (self.n - 1)

    @classmethod
    def from_factor(cls, axis: str, factor: float, n: int) -> "ShearSpec":
        sign = 1 if factor >= 0 else -1
        return cls(axis, FixedPointValue.quantize(abs(factor)), sign, n)

    @classmethod
    def horizontal_for_angle(cls, theta_degrees: float, n: int) -> "ShearSpec":
        return cls.from_factor(HORIZONTAL, math.tan(math.radians(theta_degrees) / 2), n)

    @classmethod
    def vertical_for_angle(cls, theta_degrees: float, n: int) -> "ShearSpec":
        return cls.from_factor(VERTICAL, math.sin(math.radians(theta_degrees)), n)


@dataclass(frozen=True)
class RotationSpec:
    """A rotation angle with its three-phase shear decomposition."""

    theta_degrees: float

    def __post_init__(self) -> None:
        if not abs(self.theta_degrees) < 90:
            raise UnsupportedAngleError(
                f"|angle| must be below 90 degrees, got {self.theta_degrees}"
            )

    def phase_specs(self, n: int) -> tuple[ShearSpec, ShearSpec, ShearSpec]:
        """Horizontal, vertical, horizontal shear specs for a 2^n frame."""
        horizontal = ShearSpec.horizontal_for_angle(self.theta_degrees, n)
        vertical = ShearSpec.vertical_for_angle(self.theta_degrees, n)
        return horizontal, vertical, horizontal


@dataclass(frozen=True)
class RotationResult:
    """Final image plus the two intermediate shear frames."""

    final: NEQRImage
    phase1: NEQRImage
    phase2: NEQRImage


def displacement(offset: int, factor: FixedPointValue) -> int:
    """Round-half-up of offset * factor, computed exactly in sixteenths."""
    if offset < 0:
        raise ValueError("offset must be non-negative")
    return (offset * factor.sixteenths + 8) // 16


def shear_top_half(term: PixelTerm, spec: ShearSpec) -> PixelTerm:
    """Displace one top-half term along x; y and color unchanged."""
    if spec.axis != HORIZONTAL:
        raise HalfRoutingError("top/bottom shears are horizontal")
    if term.y >= spec.median:
        raise HalfRoutingError(f"term row {term.y} is not in the top half")
    d = displacement(spec.median - term.y, spec.factor)
    return PixelTerm(term.y, term.x - spec.sign * d, term.color)


def shear_bottom_half(term: PixelTerm, spec: ShearSpec) -> PixelTerm:
    if spec.axis != HORIZONTAL:
        raise HalfRoutingError("top/bottom shears are horizontal")
    if term.y < spec.median:
        raise HalfRoutingError(f"term row {term.y} is not in the bottom half")
    d = displacement(term.y - spec.median, spec.factor)
    return PixelTerm(term.y, term.x + spec.sign * d, term.color)


def shear_left_half(term: PixelTerm, spec: ShearSpec) -> PixelTerm:
    if spec.axis != VERTICAL:
        raise HalfRoutingError("left/right shears are vertical")
    if term.x >= spec.median:
        raise HalfRoutingError(f"term column {term.x} is not in the left half")
    d = displacement(spec.median - term.x, spec.factor)
    return PixelTerm(term.y + spec.sign * d, term.x, term.color)


def shear_right_half(term: PixelTerm, spec: ShearSpec) -> PixelTerm:
    if spec.axis != VERTICAL:
        raise HalfRoutingError("left/right shears are vertical")
    if term.x < spec.median:
        raise HalfRoutingError(f"term column {term.x} is not in the right half")
    d = displacement(term.x - spec.median, spec.factor)
    return PixelTerm(term.y - spec.sign * d, term.x, term.color)


def shear_term(term: PixelTerm, spec: ShearSpec) -> PixelTerm:
    """Route a term to its half's shear by comparing against the median."""
    if spec.axis == HORIZONTAL:
        if term.y < spec.median:
            return shear_top_half(term, spec)
        return shear_bottom_half(term, spec)
    if term.x < spec.median:
        return shear_left_half(term, spec)
    return shear_right_half(term, spec)


def _shear_all(terms: list[PixelTerm], spec: ShearSpec) -> list[PixelTerm]:
    return [shear_term(t, spec) for t in terms]


def _clip(terms: list[PixelTerm], n: int) -> list[PixelTerm]:
    side = 1 << n
    return [t for t in terms if 0 <= t.y < side and 0 <= t.x < side]


def expanded_canvas_params(n: int) -> tuple[int, int]:
    """(exponent, origin offset) of the expanded canvas for a 2^n image."""
    return n + 2, _EXPAND_OFFSET_HALVES << (n - 1)


def _materialize(terms: list[PixelTerm], n: int, canvas: str) -> NEQRImage:
    if canvas == "clip":
        return NEQRImage.from_terms(n, terms)
    if canvas != "expand":
        raise ValueError(f"canvas must be clip or expand, got {canvas!r}")
    exponent, offset = expanded_canvas_params(n)
    shifted = [PixelTerm(t.y + offset, t.x + offset, t.color) for t in terms]
    return NEQRImage.from_terms(exponent, shifted)


def apply_shear(image: NEQRImage, spec: ShearSpec, canvas: str = "clip") -> NEQRImage:
    """Shear every term of an image; vacated positions take background 0."""
    if spec.n != image.n:
        raise ValueError(f"spec built for 2^{spec.n} frame, image is 2^{image.n}")
    sheared = _shear_all(list(image.terms()), spec)
    return _materialize(sheared, image.n, canvas)


def rotate(image: NEQRImage, spec: RotationSpec, canvas: str = "clip") -> RotationResult:
    """Run the three-phase shear pipeline, keeping both intermediate frames.

    With the clip canvas, terms leaving the frame are dropped after every
    phase, exactly as each intermediate image shows.  With the expanded
    canvas no term is dropped between phases and all three outputs live on
    the 2^(n+2) frame.
    """
    if image.n < 1:
        raise UnsupportedAngleError("cannot shear a single-pixel image")
    phase_specs = spec.phase_specs(image.n)
    terms = list(image.terms())
    snapshots = []
    for phase in phase_specs:
        terms = _shear_all(terms, phase)
        if canvas == "clip":
            terms = _clip(terms, image.n)
        snapshots.append(_materialize(terms, image.n, canvas))
    return RotationResult(snapshots[2], snapshots[0], snapshots[1])


def exact_turn(image: NEQRImage, degrees: int) -> NEQRImage:
    """Exact quarter-turn rotations (90, 180, 270 counter-clockwise).

    These are coordinate permutations, not shears, and lose no pixels.
    """
    if degrees % 360 == 0:
        return NEQRImage(image.raster())
    if degrees % 90 != 0:
        raise UnsupportedAngleError("exact turns support multiples of 90 degrees only")
    import numpy as np

    return NEQRImage(np.rot90(image.raster(), k=(degrees // 90) % 4).copy())
