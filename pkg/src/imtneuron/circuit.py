"""Electrical model of the IMT relaxation-oscillator neuron.

A two-terminal phase-change device with hysteretic switching conductance
sits in series with a tunable element (a fixed conductance or a transistor
in saturation), supplied from ``v_dd`` with a parallel capacitance and a
series inductance.  This module holds the deterministic description:
branch voltages, fixed points of each resistive state, and the bifurcation
between the resting and the spiking regime as the load line is tuned.

All values are SI units.  Objects are immutable and every operation is a
pure function, so everything here is safe to share across threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from .errors import ConfigError, DegenerateLoadLine, NoBifurcationInRange

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

#: Absolute tolerance for comparing device voltages against thresholds.
#: Far below any physical threshold scale; keeps reachability flags from
#: flapping exactly at the bifurcation point.
VOLTAGE_TOL = 1e-9


class PhaseState(enum.Enum):
    """Resistive state of the phase-change device."""

    INSULATING = "insulating"
    METALLIC = "metallic"


@dataclass(frozen=True)
class ImtDevice:
    """Hysteretic switching device.

    Parameters
    ----------
    g_vm, g_vi:
        Conductance (S) in the metallic / insulating state.  The metallic
        state must be the more conductive one.
    v_h_nominal:
        Insulator-to-metal threshold voltage (V), nominal value.  The
        cycle-to-cycle law of the actual threshold lives in
        :mod:`imtneuron.thresholds`.
    v_l:
        Metal-to-insulator threshold voltage (V); ``v_h_nominal > v_l > 0``.
    """

    g_vm: float
    g_vi: float
    v_h_nominal: float
    v_l: float

    def __post_init__(self):
        if not (self.g_vm > self.g_vi > 0.0):
            raise ConfigError(
                f"need g_vm > g_vi > 0, got g_vm={self.g_vm}, g_vi={self.g_vi}")
        if not (self.v_h_nominal > self.v_l > 0.0):
            raise ConfigError(
                f"need v_h > v_l > 0, got v_h={self.v_h_nominal}, v_l={self.v_l}")

    def conductance(self, s: PhaseState) -> float:
        return self.g_vm if s is PhaseState.METALLIC else self.g_vi


@dataclass(frozen=True)
class TransistorModel:
    """Series transistor, ideal saturation: I = g_m * (v_gs - v_t0).

    The drain current is taken constant with respect to drain voltage,
    which is the simplest model consistent with a linear voltage-current
    relationship in saturation.
    """

    g_m: float
    v_t0: float

    def __post_init__(self):
        if self.g_m <= 0.0:
            raise ConfigError(f"transconductance must be positive, got {self.g_m}")

    def saturation_current(self, v_gs: float) -> float:
        return self.g_m * (v_gs - self.v_t0)


@dataclass(frozen=True)
class ImtCircuit:
    """Full oscillator: device, supply, reactances and series element.

    ``series`` is either a fixed conductance (float, S) or a
    :class:`TransistorModel`; the reduced one-dimensional model requires
    ``inductance == 0`` (it is treated as negligible).
    """

    device: ImtDevice
    v_dd: float
    inductance: float
    capacitance: float
    series: Union[float, TransistorModel]

    def __post_init__(self):
        if self.v_dd <= self.device.v_h_nominal:
            raise ConfigError(
                f"v_dd={self.v_dd} must exceed v_h={self.device.v_h_nominal} "
                "or the insulating branch can never reach the IMT threshold")
        if self.inductance < 0.0 or self.capacitance <= 0.0:
            raise ConfigError("need L >= 0 and C > 0")
        if isinstance(self.series, float) and self.series <= 0.0:
            raise ConfigError(f"series conductance must be positive, got {self.series}")

    @property
    def has_transistor(self) -> bool:
        return isinstance(self.series, TransistorModel)

    def series_current(self, v_o: float, v_gs: Optional[float]) -> float:
        """Current pulled by the series element at output voltage ``v_o``."""
        if self.has_transistor:
            if v_gs is None:
                raise ConfigError("v_gs required for a transistor series element")
            return self.series.saturation_current(v_gs)
        return self.series * v_o


@dataclass(frozen=True)
class FixedPointReport:
    """Fixed points of each resistive state and the derived regime.

    ``s1`` / ``s2`` are the insulating / metallic fixed points as
    ``(i_i, v_o)`` pairs.  A fixed point is *reachable* when its device
    voltage lies inside the hysteresis band ``[v_l, v_h]``, i.e. the state
    would be entered and stay there.  The circuit is oscillatory exactly
    when neither state can rest: the insulating fixed point sits above
    ``v_h`` and the metallic one below ``v_l``.
    """

    s1: Tuple[float, float]
    s2: Tuple[float, float]
    s1_reachable: bool
    s2_reachable: bool
    oscillatory: bool


def device_voltage(i_i: float, s: PhaseState, dev: ImtDevice) -> float:
    """Voltage across the device carrying ``i_i`` amperes in state ``s``.

    Linear in the current within each state; the metallic branch is the
    shallower one.
    """
    if i_i < 0.0:
        raise ConfigError(f"device current must be nonnegative, got {i_i}")
    return i_i / dev.conductance(s)


def _branch_fixed_point(circuit: ImtCircuit, g_v: float,
                        v_gs: Optional[float]) -> Tuple[float, float]:
    """Intersection of the load line with one device branch.

    Steady state solves ``i = series_current(v_o)`` together with
    ``v_dd - v_o = i / g_v``.
    """
    if circuit.has_transistor:
        i = circuit.series.saturation_current(v_gs)
        if i < 0.0:
            raise ConfigError(f"transistor below threshold at v_gs={v_gs}")
        return i, circuit.v_dd - i / g_v
    g_s = circuit.series
    if math.isinf(g_s):
        # Ideal short: output node clamped to ground.
        return circuit.v_dd * g_v, 0.0
    denom = 1.0 + g_s / g_v
    if denom == 0.0 or not math.isfinite(denom):
        raise DegenerateLoadLine(
            f"load line parallel to device branch (g_s={g_s}, g_v={g_v})")
    i = g_s * circuit.v_dd / denom
    return i, i / g_s


def fixed_points(circuit: ImtCircuit, v_gs: Optional[float] = None) -> FixedPointReport:
    """Fixed points of both resistive states and the oscillation verdict.

    Reachability is judged against the hysteresis band with an absolute
    tolerance of :data:`VOLTAGE_TOL`.
    """
    dev = circuit.device
    i1, vo1 = _branch_fixed_point(circuit, dev.g_vi, v_gs)
    i2, vo2 = _branch_fixed_point(circuit, dev.g_vm, v_gs)
    vi1 = circuit.v_dd - vo1   # device voltage at the insulating fixed point
    vi2 = circuit.v_dd - vo2
    band_lo, band_hi = dev.v_l, dev.v_h_nominal
    s1_reach = band_lo - VOLTAGE_TOL <= vi1 <= band_hi + VOLTAGE_TOL
    s2_reach = band_lo - VOLTAGE_TOL <= vi2 <= band_hi + VOLTAGE_TOL
    oscillatory = (vi1 > band_hi + VOLTAGE_TOL) and (vi2 < band_lo - VOLTAGE_TOL)
    return FixedPointReport(
        s1=(i1, vo1), s2=(i2, vo2),
        s1_reachable=s1_reach, s2_reachable=s2_reach,
        oscillatory=oscillatory,
    )


def bifurcation_vgs(circuit: ImtCircuit, v_gs_range: Tuple[float, float],
                    tol: float = 1e-6) -> float:
    """Gate voltage at which the resting/spiking verdict flips.

    Bisects ``v_gs_range`` down to ``tol`` volts.  Raises
    :class:`NoBifurcationInRange` when both endpoints agree.
    """
    if not circuit.has_transistor:
        raise ConfigError("bifurcation search needs a transistor series element")
    lo, hi = v_gs_range
    if lo >= hi:
        raise ConfigError(f"empty search interval ({lo}, {hi})")
    osc_lo = fixed_points(circuit, lo).oscillatory
    osc_hi = fixed_points(circuit, hi).oscillatory
    if osc_lo == osc_hi:
        raise NoBifurcationInRange(
            f"oscillatory={osc_lo} at both ends of [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if fixed_points(circuit, mid).oscillatory == osc_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


#: Keys accepted in a circuit parameter file, all SI units.
CIRCUIT_KEYS = ("g_vm", "g_vi", "v_h", "v_l", "v_dd", "L", "C", "g_m", "v_t0")


def circuit_from_mapping(params: dict) -> ImtCircuit:
    """Build a circuit from a flat key-value mapping (see CIRCUIT_KEYS)."""
    unknown = set(params) - set(CIRCUIT_KEYS)
    if unknown:
        raise ConfigError(f"unknown circuit keys: {sorted(unknown)}")
    missing = set(CIRCUIT_KEYS) - set(params)
    if missing:
        raise ConfigError(f"missing circuit keys: {sorted(missing)}")
    for key, value in params.items():
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ConfigError(f"circuit key {key!r} must be a number, got {value!r}")
    dev = ImtDevice(g_vm=float(params["g_vm"]), g_vi=float(params["g_vi"]),
                    v_h_nominal=float(params["v_h"]), v_l=float(params["v_l"]))
    series = TransistorModel(g_m=float(params["g_m"]), v_t0=float(params["v_t0"]))
    return ImtCircuit(device=dev, v_dd=float(params["v_dd"]),
                      inductance=float(params["L"]), capacitance=float(params["C"]),
                      series=series)


def load_circuit(path: Union[str, Path]) -> ImtCircuit:
    """Read a circuit from a TOML file of flat key-value pairs."""
    with open(path, "rb") as fh:
        try:
            params = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"cannot parse {path}: {exc}") from exc
    return circuit_from_mapping(params)
