"""Rotation of NEQR-encoded grayscale images by three reversible shear circuits.

The package builds every arithmetic step as an explicit NOT/CNOT/Toffoli
netlist, executes it on computational-basis states, verifies the gate path
against a term-level semantic engine and an independent classical oracle,
and audits measured gate counts against exact closed forms.
"""
from .arithmetic import (
    FixedPointValue,
    build_adder,
    build_ctrl_multi,
    build_interpolation,
    build_self_adder,
    build_subtractor,
    eval_semantic,
)
from .audit import AuditRow, GateCostReport, audit_report, measure, predict
from .core import (
    BasisState,
    CircuitStructureError,
    Gate,
    GateCost,
    Netlist,
    NetlistBuilder,
    Wire,
    concat,
    core_and_overhead_cost,
    cost,
    dump_netlist,
    execute,
    invert,
    run,
)
from .neqr import ImageFormatError, NEQRImage, PixelTerm, decode, encode
from .oracle import (
    agreement_fraction,
    ideal_rotate,
    oracle_rotate,
    oracle_shear,
    rotation_coordinate_map,
)
from .pgm import read_pgm, write_pgm
from .shear import (
    HalfRoutingError,
    RotationResult,
    RotationSpec,
    ShearSpec,
    UnsupportedAngleError,
    apply_shear,
    displacement,
    exact_turn,
    expanded_canvas_params,
    rotate,
    shear_bottom_half,
    shear_left_half,
    shear_right_half,
    shear_term,
    shear_top_half,
)
from .shear_netlists import (
    MAX_NETLIST_EXPONENT,
    NetlistModeError,
    build_shear_netlist,
    build_uniform_half_shear,
    build_uniform_horizontal_shear,
    netlist_apply_shear,
    netlist_rotate,
    run_shear_phase,
)

__version__ = "0.1.0"
