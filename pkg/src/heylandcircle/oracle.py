"""Independent cross-check via a fitted equivalent circuit.

A shunt-at-terminals circuit is fitted so that the shunt branch alone
draws the no-load phasor and shunt plus series branch at slip 1 draws
the referred blocked-rotor phasor. Its analytic current locus over slip
is a circle through both anchors with center on the no-load horizontal,
i.e. exactly the constructed diagram, so sweeping the circuit provides
an oracle that never consults the geometric code paths.

Phasor convention: a lagging current of magnitude m at angle theta is
the complex number m*(cos(theta) - j*sin(theta)) with the phase voltage
as real reference; the diagram point is (-Im, Re). A star connection is
assumed for three-phase data, so line and phase currents coincide and
the per-phase voltage is V_rated / sqrt(3).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._format import kv_block, sig
from .construction import HeylandDiagram, build_diagram
from .errors import InvalidSlip, InvariantViolation, NonPhysicalFit
from .geom import Point2
from .performance import analyze_point
from .testdata import DiagramAnchors, MachineTestData, refer_to_rated

LOCUS_DEV_THRESHOLD = 1e-6
SLIP_ROUNDTRIP_THRESHOLD = 1e-6


@dataclass(frozen=True)
class GammaCircuit:
    """Fitted per-phase equivalent circuit, shunt at the terminals."""

    Y0_mag_s: float
    Y0_ang_deg: float
    R_total: float
    X_total: float
    R1: float
    R2: float
    V_phase: float
    phases: int


@dataclass(frozen=True)
class CrosscheckRecord:
    """Circuit-side and geometry-side readings at one slip value."""

    s: float
    slip_geometric: float
    rotor_cu_circuit_w: float
    rotor_cu_geometric_w: float
    stator_cu_circuit_w: float
    stator_cu_geometric_w: float
    airgap_circuit_w: float
    airgap_geometric_w: float
    slip_dev_rel: float
    rotor_cu_dev_rel: float
    stator_cu_dev_rel: float
    airgap_dev_rel: float

    def max_power_dev_rel(self) -> float:
        return max(self.rotor_cu_dev_rel, self.stator_cu_dev_rel, self.airgap_dev_rel)


def _rel_dev(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0.0 else 0.0


def _as_complex_current(p: Point2) -> complex:
    return complex(p.y, -p.x)


def fit_gamma_circuit(anchors: DiagramAnchors, data: MachineTestData) -> GammaCircuit:
    """Fit the circuit so both test points are reproduced exactly.

    Raises:
      NonPhysicalFit: the implied series resistance or reactance is not
        positive, which cannot happen for anchors satisfying the data
        invariants but is checked for direct callers.
    """
    v_phase = data.V_rated / math.sqrt(3.0) if data.phases == 3 else data.V_rated
    i0 = _as_complex_current(anchors.O_prime)
    ia = _as_complex_current(anchors.A)
    z_series = v_phase / (ia - i0)
    r_total, x_total = z_series.real, z_series.imag
    if r_total <= 0.0 or x_total <= 0.0:
        raise NonPhysicalFit(
            f"fitted series branch is non-physical: R = {r_total}, X = {x_total}"
        )
    r2 = data.rotor_cu_fraction * r_total
    y0 = i0 / v_phase
    return GammaCircuit(
        Y0_mag_s=abs(y0),
        Y0_ang_deg=math.degrees(cmath.phase(y0)),
        R_total=r_total,
        X_total=x_total,
        R1=r_total - r2,
        R2=r2,
        V_phase=v_phase,
        phases=data.phases,
    )


def _series_current(c: GammaCircuit, s: float) -> complex:
    return c.V_phase / complex(c.R1 + c.R2 / s, c.X_total)


def current_at_slip(c: GammaCircuit, s: float) -> Point2:
    """Terminal current point predicted by the circuit at slip s."""
    if s == 0.0:
        raise InvalidSlip(s, "the circuit draws only shunt current at zero slip")
    shunt = cmath.rect(c.Y0_mag_s, math.radians(c.Y0_ang_deg)) * c.V_phase
    i = shunt + _series_current(c, s)
    return Point2(-i.imag, i.real)


def _log_spaced(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [hi]
    step = (math.log10(hi) - math.log10(lo)) / (n - 1)
    return [10.0 ** (math.log10(lo) + i * step) for i in range(n)]


def locus_deviation(c: GammaCircuit, diag: HeylandDiagram, n: int) -> float:
    """Worst relative distance of circuit current points from the circle.

    Samples are log-spaced over [1e-4, 1] plus their negatives, so both
    the motoring and generating regions are exercised.
    """
    if n < 10:
        raise InvariantViolation("locus_deviation requires n >= 10")
    positives = _log_spaced(1e-4, 1.0, (n + 1) // 2)
    slips = positives + [-s for s in positives[: n // 2]]
    center, radius = diag.circle.center, diag.circle.radius
    worst = 0.0
    for s in slips:
        p = current_at_slip(c, s)
        dev = abs(math.hypot(p.x - center.x, p.y - center.y) - radius) / radius
        worst = max(worst, dev)
    return worst


def slip_roundtrip_deviation(c: GammaCircuit, diag: HeylandDiagram, n: int) -> float:
    """Worst relative error of the geometric slip reading on circuit points."""
    if n < 2:
        raise InvariantViolation("slip_roundtrip_deviation requires n >= 2")
    worst = 0.0
    for s in _log_spaced(1e-3, 1.0, n):
        slip_geo = analyze_point(diag, current_at_slip(c, s)).slip
        worst = max(worst, abs(slip_geo - s) / s)
    return worst


def performance_crosscheck(c: GammaCircuit, diag: HeylandDiagram, s: float) -> CrosscheckRecord:
    """Compare circuit power formulas with geometric intercept readings.

    The circuit side computes copper losses from the series current and
    the fitted resistances; the geometric side reads the same losses as
    scaled vertical gaps at the corresponding locus point.
    """
    if not 0.0 < s <= 1.0:
        raise InvalidSlip(s, "crosscheck is defined for motoring slips in (0, 1]")
    i2 = _series_current(c, s)
    i2_sq = abs(i2) ** 2
    rotor_circuit = c.phases * i2_sq * c.R2
    stator_circuit = c.phases * i2_sq * c.R1
    airgap_circuit = rotor_circuit / s

    op = analyze_point(diag, current_at_slip(c, s))
    return CrosscheckRecord(
        s=s,
        slip_geometric=op.slip,
        rotor_cu_circuit_w=rotor_circuit,
        rotor_cu_geometric_w=op.rotor_cu_w,
        stator_cu_circuit_w=stator_circuit,
        stator_cu_geometric_w=op.stator_cu_w,
        airgap_circuit_w=airgap_circuit,
        airgap_geometric_w=op.airgap_power_w,
        slip_dev_rel=abs(op.slip - s) / s,
        rotor_cu_dev_rel=_rel_dev(rotor_circuit, op.rotor_cu_w),
        stator_cu_dev_rel=_rel_dev(stator_circuit, op.stator_cu_w),
        airgap_dev_rel=_rel_dev(airgap_circuit, op.airgap_power_w),
    )


@dataclass(frozen=True)
class ValidationReport:
    """Aggregated oracle-versus-construction comparison."""

    max_locus_dev_rel: float
    slip_roundtrip_dev: float
    power_crosscheck_dev: float
    circuit: GammaCircuit
    passed: bool

    def to_text(self) -> str:
        pairs = [
            ("max_locus_dev_rel", sig(self.max_locus_dev_rel)),
            ("slip_roundtrip_dev", sig(self.slip_roundtrip_dev)),
            ("power_crosscheck_dev", sig(self.power_crosscheck_dev)),
            ("R1_ohm", sig(self.circuit.R1)),
            ("R2_ohm", sig(self.circuit.R2)),
            ("X_ohm", sig(self.circuit.X_total)),
            ("Y0_mag_s", sig(self.circuit.Y0_mag_s)),
            ("Y0_ang_deg", sig(self.circuit.Y0_ang_deg)),
        ]
        return kv_block(pairs)


def validate_report(data: MachineTestData, samples: int = 200) -> ValidationReport:
    """Fit the circuit, sweep it, and score agreement with the construction."""
    anchors = refer_to_rated(data)
    diag = build_diagram(anchors, data)
    circuit = fit_gamma_circuit(anchors, data)

    locus_dev = locus_deviation(circuit, diag, max(samples, 10))
    roundtrip_n = max(min(samples, 100), 2)
    roundtrip_dev = slip_roundtrip_deviation(circuit, diag, roundtrip_n)
    power_dev = max(
        performance_crosscheck(circuit, diag, s).max_power_dev_rel()
        for s in _log_spaced(1e-3, 1.0, 25)
    )
    return ValidationReport(
        max_locus_dev_rel=locus_dev,
        slip_roundtrip_dev=roundtrip_dev,
        power_crosscheck_dev=power_dev,
        circuit=circuit,
        passed=(
            locus_dev <= LOCUS_DEV_THRESHOLD
            and roundtrip_dev <= SLIP_ROUNDTRIP_THRESHOLD
        ),
    )
