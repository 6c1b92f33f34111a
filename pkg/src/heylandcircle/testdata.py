"""Test-data ingestion: parse, validate, and map measurements to the plane.

The diagram plane follows the wattful-vertical convention: a current
phasor of magnitude m lagging the voltage by angle theta maps to the
point (m*sin(theta), m*cos(theta)), so the horizontal coordinate is the
reactive component and the vertical coordinate is the active component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateConstruction,
    InvariantViolation,
    MalformedValue,
    MissingKey,
)
from .geom import EPS_GEOM, Point2

_MANDATORY_KEYS = ("I0", "phi0_deg", "Isc", "phi_sc_deg", "V_rated", "V_sc", "P_rated_kw")
_OPTIONAL_KEYS = ("phases", "rotor_cu_fraction", "f_hz", "poles")
_INT_KEYS = ("phases", "poles")


@dataclass(frozen=True)
class MachineTestData:
    """Raw test measurements and machine ratings.

    Fields:
      I0: no-load line current magnitude, A.
      phi0_deg: no-load phase angle, degrees lagging.
      Isc: blocked-rotor line current at reduced voltage, A.
      phi_sc_deg: blocked-rotor phase angle, degrees lagging.
      V_rated: rated line voltage, V.
      V_sc: blocked-rotor test voltage, V.
      P_rated_w: rated output power, W.
      phases: phase count, 1 or 3.
      rotor_cu_fraction: share of blocked-rotor copper loss assigned to
        the rotor, in [0, 1].
      f_hz, poles: supply frequency and pole count, optional; required
        only for torque in newton-meters.
    """

    I0: float
    phi0_deg: float
    Isc: float
    phi_sc_deg: float
    V_rated: float
    V_sc: float
    P_rated_w: float
    phases: int = 3
    rotor_cu_fraction: float = 0.5
    f_hz: float | None = None
    poles: int | None = None

    def __post_init__(self):
        for name in ("I0", "phi0_deg", "Isc", "phi_sc_deg", "V_rated", "V_sc",
                     "P_rated_w", "rotor_cu_fraction"):
            if not math.isfinite(getattr(self, name)):
                raise InvariantViolation(f"{name} must be finite")
        if self.I0 <= 0.0:
            raise InvariantViolation("I0 must be positive")
        if self.Isc <= 0.0:
            raise InvariantViolation("Isc must be positive")
        if self.V_rated <= 0.0:
            raise InvariantViolation("V_rated must be positive")
        if not 0.0 < self.V_sc <= self.V_rated:
            raise InvariantViolation("V_sc must satisfy 0 < V_sc <= V_rated")
        if self.P_rated_w <= 0.0:
            raise InvariantViolation("P_rated_kw must be positive")
        if not 0.0 < self.phi_sc_deg < self.phi0_deg < 90.0:
            raise InvariantViolation(
                "angles must satisfy 0 < phi_sc_deg < phi0_deg < 90"
            )
        if not 0.0 <= self.rotor_cu_fraction <= 1.0:
            raise InvariantViolation("rotor_cu_fraction must lie in [0, 1]")
        if self.phases not in (1, 3):
            raise InvariantViolation("phases must be 1 or 3")
        if self.f_hz is not None and not (math.isfinite(self.f_hz) and self.f_hz > 0.0):
            raise InvariantViolation("f_hz must be positive")
        if self.poles is not None and (self.poles <= 0 or self.poles % 2 != 0):
            raise InvariantViolation("poles must be a positive even integer")


@dataclass(frozen=True)
class DiagramAnchors:
    """The two referred current points that seed the construction.

    O_prime is the tip of the no-load current phasor; A is the tip of
    the blocked-rotor current referred to rated voltage.
    """

    O_prime: Point2
    A: Point2
    Isc_referred: float

    def __post_init__(self):
        if not self.A.x > self.O_prime.x:
            raise DegenerateConstruction(
                "blocked-rotor point must lie strictly right of the no-load point"
            )


def _parse_float(key: str, text: str) -> float:
    if "_" in text or "," in text:
        raise MalformedValue(key, f"not a plain decimal number: {text!r}")
    try:
        value = float(text)
    except ValueError:
        raise MalformedValue(key, f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise MalformedValue(key, f"not finite: {text!r}")
    return value


def _parse_int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise MalformedValue(key, f"not an integer: {text!r}") from None


def parse_test_data(document: str) -> MachineTestData:
    """Parse a flat key = value document into MachineTestData.

    One assignment per line; `#` begins a comment; blank lines are
    ignored. Unknown and duplicate keys are rejected so typos cannot
    silently drop a measurement.
    """
    seen: dict[str, str] = {}
    for raw_line in document.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MalformedValue(line.split()[0], "expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _MANDATORY_KEYS and key not in _OPTIONAL_KEYS:
            raise MalformedValue(key, "unrecognized key")
        if key in seen:
            raise MalformedValue(key, "duplicate key")
        if not value:
            raise MalformedValue(key, "empty value")
        seen[key] = value

    for key in _MANDATORY_KEYS:
        if key not in seen:
            raise MissingKey(key)

    fields: dict[str, float | int] = {}
    for key, value in seen.items():
        if key in _INT_KEYS:
            fields[key] = _parse_int(key, value)
        else:
            fields[key] = _parse_float(key, value)

    kw = fields.pop("P_rated_kw")
    return MachineTestData(P_rated_w=kw * 1000.0, **fields)  # type: ignore[arg-type]


def _kilowatt_text(p_rated_w: float) -> str:
    # Pick a decimal string whose parse scales back to the stored watt
    # value exactly, so parse -> serialize -> parse is a fixed point.
    # Any watts that came from a parsed kilowatt entry has such a
    # preimage within a few ulps; watts constructed directly may not
    # (the kilowatt grid is coarser than the watt grid in half of each
    # binade), and then the nearest kilowatt text is used.
    kw = p_rated_w / 1000.0
    if kw * 1000.0 == p_rated_w:
        return repr(kw)
    lo = hi = kw
    for _ in range(3):
        lo = math.nextafter(lo, -math.inf)
        if lo * 1000.0 == p_rated_w:
            return repr(lo)
        hi = math.nextafter(hi, math.inf)
        if hi * 1000.0 == p_rated_w:
            return repr(hi)
    return repr(kw)


def serialize_test_data(data: MachineTestData) -> str:
    """Render MachineTestData back into the flat key = value format."""
    lines = [
        f"I0 = {data.I0!r}",
        f"phi0_deg = {data.phi0_deg!r}",
        f"Isc = {data.Isc!r}",
        f"phi_sc_deg = {data.phi_sc_deg!r}",
        f"V_rated = {data.V_rated!r}",
        f"V_sc = {data.V_sc!r}",
        f"P_rated_kw = {_kilowatt_text(data.P_rated_w)}",
        f"phases = {data.phases}",
        f"rotor_cu_fraction = {data.rotor_cu_fraction!r}",
    ]
    if data.f_hz is not None:
        lines.append(f"f_hz = {data.f_hz!r}")
    if data.poles is not None:
        lines.append(f"poles = {data.poles}")
    return "\n".join(lines) + "\n"


def phasor_to_point(magnitude: float, angle_deg: float) -> Point2:
    """Map a lagging current phasor to the diagram plane.

    Args:
      magnitude: current magnitude, A, non-negative.
      angle_deg: lag angle in degrees, within [0, 90].

    Returns:
      Point with x the reactive component and y the active component.
    """
    angle = math.radians(angle_deg)
    return Point2(magnitude * math.sin(angle), magnitude * math.cos(angle))


def refer_to_rated(data: MachineTestData) -> DiagramAnchors:
    """Refer the blocked-rotor test to rated voltage and place both anchors.

    The blocked-rotor current scales linearly with voltage, so the
    referred magnitude is Isc * V_rated / V_sc at the measured angle.
    """
    isc_referred = data.Isc * data.V_rated / data.V_sc
    o_prime = phasor_to_point(data.I0, data.phi0_deg)
    a = phasor_to_point(isc_referred, data.phi_sc_deg)
    if a.x - o_prime.x <= EPS_GEOM * isc_referred:
        raise DegenerateConstruction(
            "referred blocked-rotor point does not lie right of the no-load "
            "point; the center construction is degenerate"
        )
    return DiagramAnchors(O_prime=o_prime, A=a, Isc_referred=isc_referred)
