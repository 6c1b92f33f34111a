"""Request and response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, model_validator

from ..construction import HeylandDiagram
from ..oracle import ValidationReport
from ..performance import OperatingPoint
from ..testdata import MachineTestData


class TestDataIn(BaseModel):
    I0: float
    phi0_deg: float
    Isc: float
    phi_sc_deg: float
    V_rated: float
    V_sc: float
    P_rated_kw: float
    phases: int = 3
    rotor_cu_fraction: float = 0.5
    f_hz: float | None = None
    poles: int | None = None

    def to_machine_data(self) -> MachineTestData:
        return MachineTestData(
            I0=self.I0,
            phi0_deg=self.phi0_deg,
            Isc=self.Isc,
            phi_sc_deg=self.phi_sc_deg,
            V_rated=self.V_rated,
            V_sc=self.V_sc,
            P_rated_w=self.P_rated_kw * 1000.0,
            phases=self.phases,
            rotor_cu_fraction=self.rotor_cu_fraction,
            f_hz=self.f_hz,
            poles=self.poles,
        )


class DiagramOut(BaseModel):
    C_x: float
    C_y: float
    r: float
    D_x: float
    D_y: float
    power_scale_w_per_a: float
    O_prime_x: float
    O_prime_y: float
    A_x: float
    A_y: float

    @classmethod
    def from_diagram(cls, diag: HeylandDiagram) -> "DiagramOut":
        return cls(
            C_x=diag.circle.center.x,
            C_y=diag.circle.center.y,
            r=diag.circle.radius,
            D_x=diag.split_point_D.x,
            D_y=diag.split_point_D.y,
            power_scale_w_per_a=diag.power_scale_w_per_a,
            O_prime_x=diag.anchors.O_prime.x,
            O_prime_y=diag.anchors.O_prime.y,
            A_x=diag.anchors.A.x,
            A_y=diag.anchors.A.y,
        )


class QueryIn(BaseModel):
    data: TestDataIn
    output_kw: float | None = None
    slip: float | None = None
    at_rated: bool = False

    @model_validator(mode="after")
    def _exactly_one_selector(self) -> "QueryIn":
        selected = sum(
            (self.output_kw is not None, self.slip is not None, self.at_rated)
        )
        if selected != 1:
            raise ValueError("exactly one of output_kw, slip, at_rated must be given")
        return self


class OperatingPointOut(BaseModel):
    x: float
    y: float
    line_current_a: float
    power_factor: float
    slip: float
    input_w: float
    output_w: float
    airgap_w: float
    rotor_cu_w: float
    stator_cu_w: float
    fixed_w: float
    efficiency: float
    regime: str
    torque_nm: float | None = None

    @classmethod
    def from_operating_point(cls, op: OperatingPoint) -> "OperatingPointOut":
        return cls(
            x=op.point.x,
            y=op.point.y,
            line_current_a=op.line_current_a,
            power_factor=op.power_factor,
            slip=op.slip,
            input_w=op.input_power_w,
            output_w=op.output_power_w,
            airgap_w=op.airgap_power_w,
            rotor_cu_w=op.rotor_cu_w,
            stator_cu_w=op.stator_cu_w,
            fixed_w=op.fixed_loss_w,
            efficiency=op.efficiency,
            regime=op.regime,
            torque_nm=op.torque_nm,
        )


class SweepIn(BaseModel):
    data: TestDataIn
    s_from: float
    s_to: float
    n: int
    log_spacing: bool = False


class SweepOut(BaseModel):
    rows: list[OperatingPointOut]


class ValidateIn(BaseModel):
    data: TestDataIn
    samples: int = 200


class ValidateOut(BaseModel):
    max_locus_dev_rel: float
    slip_roundtrip_dev: float
    power_crosscheck_dev: float
    R1_ohm: float
    R2_ohm: float
    X_ohm: float
    Y0_mag_s: float
    Y0_ang_deg: float
    passed: bool

    @classmethod
    def from_report(cls, report: ValidationReport) -> "ValidateOut":
        return cls(
            max_locus_dev_rel=report.max_locus_dev_rel,
            slip_roundtrip_dev=report.slip_roundtrip_dev,
            power_crosscheck_dev=report.power_crosscheck_dev,
            R1_ohm=report.circuit.R1,
            R2_ohm=report.circuit.R2,
            X_ohm=report.circuit.X_total,
            Y0_mag_s=report.circuit.Y0_mag_s,
            Y0_ang_deg=report.circuit.Y0_ang_deg,
            passed=report.passed,
        )


class RenderIn(BaseModel):
    data: TestDataIn
    width_px: int = 2048
    height_px: int = 2048
    margin_px: int = 48
    show_full_circle: bool = True
    slip_lines: list[float] = []
    show_labels: bool = True
    title: str = ""
