"""Gate-level realizations of the half-image shears.

Two families share the same pipeline shape (offset subtractor, controlled
multiplier, rounding interpolation, coordinate update, uncomputation):

* image netlists, built per frame exponent with the widths the semantics
  require: two's-complement coordinate registers with two guard bits plus a
  sign bit, a 5-bit factor register (1 integer + 4 fraction bits) driving
  the multiplier stages, and a carry-free modular adder for the final
  coordinate update.  These are what netlist execution mode runs, term by
  term, and they agree bit for bit with the semantic engine.

* uniform-width netlists for the cost audit, where the two coordinate
  adders, the multiplier stage count, and the interpolation all share one
  width n and the factor register has width m.  Their core gate content is
  exactly two adders + one controlled multiplier + one interpolation, so the
  measured core equals the closed forms (14.5n + 29m + 69.5)n - 35 per half
  and 29n^2 + 58mn + 139n - 70 for both halves.

In both families the half-dispatch control (one CNOT per half, firing on
the driving coordinate's top bit, polarity 0 for the low half) and the full
uncomputation pass are tagged overhead; the core counts cover arithmetic
content only.  Every working register returns to zero, so the two half
segments compose in either order and whole phases chain cleanly.
"""
from __future__ import annotations

from functools import lru_cache

from .arithmetic import (
    emit_adder,
    emit_ctrl_multi,
    emit_interpolation,
    emit_modular_adder,
)
from .core import Netlist, NetlistBuilder
from .neqr import NEQRImage, PixelTerm
from .shear import (
    HORIZONTAL,
    VERTICAL,
    RotationResult,
    RotationSpec,
    ShearSpec,
)

#: Netlist execution walks every gate for every pixel term; above this frame
#: exponent the pure-Python walk stops being interactive.
MAX_NETLIST_EXPONENT = 6

#: Guard bits + sign added to coordinate registers; shears at |angle| < 90
#: never leave the [-2^(n+2), 2^(n+2)) window this provides.
COORD_EXTRA_BITS = 3

_FACTOR_BITS = 5  # 1 integer bit + 4 fraction bits covers factors up to 1.0


class NetlistModeError(ValueError):
    """Request outside what gate-level execution supports."""


def _halves(axis: str, order: str) -> tuple[str, str]:
    if order not in ("tb", "bt"):
        raise ValueError(f"order must be 'tb' or 'bt', got {order!r}")
    first_low = order == "tb"
    low, high = ("top", "bottom") if axis == HORIZONTAL else ("left", "right")
    return (low, high) if first_low else (high, low)


def _emit_image_half(
    nb: NetlistBuilder, regs: dict, n: int, axis: str, half: str, sign: int
) -> None:
    driver = regs["y"] if axis == HORIZONTAL else regs["x"]
    moved = regs["x"] if axis == HORIZONTAL else regs["y"]
    low_half = half in ("top", "left")
    polarity = 0 if low_half else 1
    ctrl = regs["ctrl"][0]
    carry = regs["carry"]

    with nb.overhead():
        nb.cx(driver[n - 1], ctrl, on=polarity)
    start = nb.mark()
    if low_half:
        # offset = median - coordinate, left in the median register
        s = nb.mark()
        emit_adder(nb, driver[:n], regs["med"], carry[:n])
        nb.reverse_tail(s)
        offset_reg = regs["med"]
    else:
        # offset = coordinate - median, left in the coordinate register
        s = nb.mark()
        emit_adder(nb, regs["med"][:n], driver[: n + 1], carry[:n])
        nb.reverse_tail(s)
        offset_reg = driver[: n + 1]
    emit_ctrl_multi(
        nb,
        regs["q"],
        offset_reg,
        ctrl,
        regs["p"],
        regs["t"][0],
        regs["mask"],
        carry,
        regs["dbls"],
    )
    integer = regs["p"][4:] + [regs["ipc"][0]]
    emit_interpolation(nb, integer, regs["p"][3], regs["rnd"], carry[: n + 2])
    stop = nb.mark()

    # coordinate update: subtract for (top, +) / (right, +), add otherwise
    subtract = (sign > 0) == (half in ("top", "right"))
    s = nb.mark()
    emit_modular_adder(nb, integer, moved, carry[: n + COORD_EXTRA_BITS])
    if subtract:
        nb.reverse_tail(s)

    nb.append_inverse_of(start, stop)
    with nb.overhead():
        nb.cx(driver[n - 1], ctrl, on=polarity)


@lru_cache(maxsize=None)
def build_shear_netlist(n: int, axis: str, sign: int, order: str = "tb") -> Netlist:
    """Both half shears of one axis over a 2^n frame, ready for execution.

    Registers ``y`` and ``x`` are (n+3)-bit two's-complement coordinates,
    ``q`` the 5-bit factor in sixteenths, ``med`` the preloaded median
    2^(n-1).  Everything else is working space restored to zero.
    """
    if n < 1:
        raise ValueError("frame exponent must be at least 1")
    if axis not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"axis must be horizontal or vertical, got {axis!r}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    width = n + COORD_EXTRA_BITS
    multiplicand = n + 1  # offset register width
    nb = NetlistBuilder()
    regs = {
        "y": nb.register("y", width),
        "x": nb.register("x", width),
        "q": nb.register("q", _FACTOR_BITS),
        "med": nb.register("med", n + 1),
        "ctrl": nb.register("ctrl", 1, ancilla=True),
        "p": nb.register("p", multiplicand + _FACTOR_BITS, ancilla=True),
        "t": nb.register("t", 1, ancilla=True),
        "mask": nb.register("mask", multiplicand + _FACTOR_BITS - 1, ancilla=True),
        "carry": nb.register("carry", multiplicand + _FACTOR_BITS - 1, ancilla=True),
        "rnd": nb.register("rnd", n + 2, ancilla=True),
        "ipc": nb.register("ipc", 1, ancilla=True),
    }
    regs["dbls"] = [
        nb.register(f"dbl{i + 1}", multiplicand + i + 1, ancilla=True)
        for i in range(_FACTOR_BITS)
    ]
    for half in _halves(axis, order):
        _emit_image_half(nb, regs, n, axis, half, sign)
    return nb.build()


# ---------------------------------------------------------------------------
# term-level execution driver


def run_shear_phase(
    terms: list[PixelTerm], n: int, spec: ShearSpec, order: str = "tb"
) -> list[PixelTerm]:
    """Push every term through the gate-level shear; coordinates unclipped.

    Input terms must be in frame: the half dispatch reads a single register
    bit, which identifies the half only for coordinates in [0, 2^n).
    """
    netlist = build_shear_netlist(n, spec.axis, spec.sign, order)
    side = 1 << n
    compiled = netlist.compiled
    regs = netlist.registers
    y0, x0 = regs["y"][0], regs["x"][0]
    width = len(regs["y"])
    mask = (1 << width) - 1
    sign_bit = 1 << (width - 1)
    preload = (spec.factor.sixteenths << regs["q"][0]) | (spec.median << regs["med"][0])
    moved_is_x = spec.axis == HORIZONTAL
    out: list[PixelTerm] = []
    for term in terms:
        if not (0 <= term.y < side and 0 <= term.x < side):
            raise NetlistModeError(
                f"netlist execution needs in-frame terms, got ({term.y}, {term.x})"
            )
        bits = preload | (term.y << y0) | (term.x << x0)
        for m1, m0, flip in compiled:
            if bits & m1 == m1 and not bits & m0:
                bits ^= flip
        y = (bits >> y0) & mask
        x = (bits >> x0) & mask
        if y & sign_bit:
            y -= 1 << width
        if x & sign_bit:
            x -= 1 << width
        if moved_is_x:
            out.append(PixelTerm(term.y, x, term.color))
        else:
            out.append(PixelTerm(y, term.x, term.color))
    return out


def _clip_terms(terms: list[PixelTerm], n: int) -> list[PixelTerm]:
    side = 1 << n
    return [t for t in terms if 0 <= t.y < side and 0 <= t.x < side]


def _check_exponent(n: int) -> None:
    if n > MAX_NETLIST_EXPONENT:
        raise NetlistModeError(
            f"netlist mode is limited to frames up to 2^{MAX_NETLIST_EXPONENT} "
            f"(got 2^{n}); use semantic mode for larger images"
        )


def netlist_apply_shear(image: NEQRImage, spec: ShearSpec, order: str = "tb") -> NEQRImage:
    """Gate-level counterpart of apply_shear (clip canvas only)."""
    _check_exponent(image.n)
    if spec.n != image.n:
        raise ValueError(f"spec built for 2^{spec.n} frame, image is 2^{image.n}")
    sheared = run_shear_phase(list(image.terms()), image.n, spec, order)
    return NEQRImage.from_terms(image.n, sheared)


def netlist_rotate(image: NEQRImage, spec: RotationSpec, order: str = "tb") -> RotationResult:
    """Gate-level counterpart of rotate (clip canvas only)."""
    _check_exponent(image.n)
    terms = list(image.terms())
    snapshots = []
    for phase in spec.phase_specs(image.n):
        terms = run_shear_phase(terms, image.n, phase, order)
        terms = _clip_terms(terms, image.n)
        snapshots.append(NEQRImage.from_terms(image.n, terms))
    return RotationResult(snapshots[2], snapshots[0], snapshots[1])


# ---------------------------------------------------------------------------
# uniform-width netlists for the cost audit


def _emit_uniform_half(nb: NetlistBuilder, regs: dict, n: int, half: str) -> None:
    low_half = half == "top"
    polarity = 0 if low_half else 1
    ctrl = regs["ctrl"][0]
    carry = regs["carry"]
    y = regs["y"]

    with nb.overhead():
        nb.cx(y[n - 1], ctrl, on=polarity)
    start = nb.mark()
    if low_half:
        s = nb.mark()
        emit_adder(nb, y[:n], regs["med"], carry[:n])
        nb.reverse_tail(s)
        offset_reg = regs["med"]
    else:
        s = nb.mark()
        emit_adder(nb, regs["med"][:n], y[: n + 1], carry[:n])
        nb.reverse_tail(s)
        offset_reg = y[: n + 1]
    emit_ctrl_multi(
        nb,
        offset_reg[:n],
        regs["fac"],
        ctrl,
        regs["p"],
        regs["t"][0],
        regs["mask"],
        carry,
        regs["dbls"],
    )
    emit_interpolation(
        nb,
        regs["p"][4 : 4 + n] + [regs["ipc"][0]],
        regs["p"][3],
        regs["rnd"],
        carry[:n],
    )
    stop = nb.mark()

    s = nb.mark()
    emit_adder(nb, regs["p"][4 : 4 + n], regs["x"], carry[:n])
    if low_half:
        nb.reverse_tail(s)

    nb.append_inverse_of(start, stop)
    with nb.overhead():
        nb.cx(y[n - 1], ctrl, on=polarity)


def _uniform_builder(n: int, m: int) -> tuple[NetlistBuilder, dict]:
    if n < 1:
        raise ValueError("coordinate width must be at least 1")
    if m < 4:
        raise ValueError("factor width must cover the 4 fraction bits (m >= 4)")
    nb = NetlistBuilder()
    regs = {
        "y": nb.register("y", n + 1),
        "med": nb.register("med", n + 1),
        "fac": nb.register("fac", m),
        "x": nb.register("x", n + 1),
        "ctrl": nb.register("ctrl", 1, ancilla=True),
        "p": nb.register("p", n + m, ancilla=True),
        "t": nb.register("t", 1, ancilla=True),
        "mask": nb.register("mask", n + m - 1, ancilla=True),
        "carry": nb.register("carry", n + m - 1, ancilla=True),
        "rnd": nb.register("rnd", n, ancilla=True),
        "ipc": nb.register("ipc", 1, ancilla=True),
    }
    regs["dbls"] = [
        nb.register(f"dbl{i + 1}", m + i + 1, ancilla=True) for i in range(n)
    ]
    return nb, regs


def build_uniform_half_shear(n: int, m: int, half: str = "top") -> Netlist:
    """One half shear at the audit's uniform widths.

    Core content: two width-n adders, one n-stage multiplier with an m-bit
    multiplicand, one width-n interpolation.
    """
    if half not in ("top", "bottom"):
        raise ValueError(f"half must be top or bottom, got {half!r}")
    nb, regs = _uniform_builder(n, m)
    _emit_uniform_half(nb, regs, n, half)
    return nb.build()


def build_uniform_horizontal_shear(n: int, m: int) -> Netlist:
    """Both half shears at uniform widths over shared registers."""
    nb, regs = _uniform_builder(n, m)
    _emit_uniform_half(nb, regs, n, "top")
    _emit_uniform_half(nb, regs, n, "bottom")
    return nb.build()
