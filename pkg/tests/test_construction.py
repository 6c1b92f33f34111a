import dataclasses
import math

import pytest

import reference_values as ref
from heylandcircle import (
    DegenerateConstruction,
    InvalidSlip,
    Line2,
    MachineTestData,
    Point2,
    build_diagram,
    constant_slip_line,
    export_diagram,
)
from heylandcircle.construction import power_scale
from heylandcircle.geom import vertical_intercept
from heylandcircle.testdata import DiagramAnchors, refer_to_rated


def _slope(line: Line2) -> float:
    return line.d.y / line.d.x


class TestBuildDiagram:
    def test_reference_center_and_radius(self, reference_diagram):
        center = reference_diagram.circle.center
        assert center.x == pytest.approx(ref.CENTER[0], rel=1e-12)
        assert center.y == pytest.approx(ref.CENTER[1], rel=1e-12)
        assert reference_diagram.circle.radius == pytest.approx(ref.RADIUS, rel=1e-12)

    def test_reference_split_point(self, reference_diagram):
        d = reference_diagram.split_point_D
        assert d.x == pytest.approx(ref.SPLIT_D[0], rel=1e-12)
        assert d.y == pytest.approx(ref.SPLIT_D[1], rel=1e-12)

    def test_reference_power_scale(self, reference_diagram):
        assert reference_diagram.power_scale_w_per_a == pytest.approx(
            ref.POWER_SCALE_W_PER_A, rel=1e-12
        )

    def test_power_scale_single_phase(self, reference_data):
        single = dataclasses.replace(reference_data, phases=1)
        assert power_scale(single) == 400.0
        assert power_scale(reference_data) == pytest.approx(
            math.sqrt(3.0) * 400.0, rel=1e-15
        )

    def test_anchors_lie_on_circle(self, reference_diagram):
        circle = reference_diagram.circle
        for p in (reference_diagram.anchors.O_prime, reference_diagram.anchors.A):
            gap = abs(
                math.hypot(p.x - circle.center.x, p.y - circle.center.y)
                - circle.radius
            )
            assert gap <= 1e-12 * circle.radius

    def test_reference_horizontal_through_no_load(self, reference_diagram):
        line = reference_diagram.ref_horizontal
        assert line.p == reference_diagram.anchors.O_prime
        assert line.d == Point2(1.0, 0.0)

    def test_line_slopes(self, reference_diagram):
        assert _slope(reference_diagram.output_line) == pytest.approx(ref.M_OUT, rel=1e-12)
        assert _slope(reference_diagram.torque_line) == pytest.approx(ref.M_TQ, rel=1e-12)

    def test_synthetic_unit_case(self):
        data = MachineTestData(
            I0=1.0,
            phi0_deg=85.0,
            Isc=2.0,
            phi_sc_deg=60.0,
            V_rated=1.0,
            V_sc=1.0,
            P_rated_w=1.0,
            phases=1,
        )
        anchors = DiagramAnchors(Point2(0.0, 0.0), Point2(2.0, 0.0), 2.0)
        diagram = build_diagram(anchors, data)
        assert diagram.circle.center == Point2(1.0, 0.0)
        assert diagram.circle.radius == 1.0
        assert diagram.power_scale_w_per_a == 1.0

    def test_determinism(self, reference_data):
        a = build_diagram(refer_to_rated(reference_data), reference_data)
        b = build_diagram(refer_to_rated(reference_data), reference_data)
        assert a == b

    def test_carries_synchronous_speed_inputs(self, reference_data):
        data = dataclasses.replace(reference_data, f_hz=50.0, poles=4)
        diagram = build_diagram(refer_to_rated(data), data)
        assert diagram.f_hz == 50.0
        assert diagram.poles == 4

    def test_degenerate_anchor_order_rejected(self):
        with pytest.raises(DegenerateConstruction):
            DiagramAnchors(Point2(2.0, 0.1), Point2(2.0, 5.0), 5.4)


class TestSplitLimits:
    def test_fraction_zero_collapses_torque_onto_output(self, reference_data):
        data = dataclasses.replace(reference_data, rotor_cu_fraction=0.0)
        diagram = build_diagram(refer_to_rated(data), data)
        assert diagram.torque_line == diagram.output_line
        assert diagram.split_point_D == diagram.anchors.A

    def test_fraction_one_collapses_torque_onto_horizontal(self, reference_data):
        data = dataclasses.replace(reference_data, rotor_cu_fraction=1.0)
        diagram = build_diagram(refer_to_rated(data), data)
        assert diagram.torque_line == diagram.ref_horizontal
        assert diagram.split_point_D == Point2(
            diagram.anchors.A.x, diagram.anchors.O_prime.y
        )


class TestScaling:
    def test_current_scaling(self, reference_anchors, reference_data):
        lam = 3.7
        scaled = DiagramAnchors(
            Point2(lam * reference_anchors.O_prime.x, lam * reference_anchors.O_prime.y),
            Point2(lam * reference_anchors.A.x, lam * reference_anchors.A.y),
            lam * reference_anchors.Isc_referred,
        )
        diagram = build_diagram(scaled, reference_data)
        assert diagram.circle.center.x == pytest.approx(lam * ref.CENTER[0], rel=1e-12)
        assert diagram.circle.center.y == pytest.approx(lam * ref.CENTER[1], rel=1e-12)
        assert diagram.circle.radius == pytest.approx(lam * ref.RADIUS, rel=1e-12)
        assert diagram.split_point_D.x == pytest.approx(lam * ref.SPLIT_D[0], rel=1e-12)
        assert diagram.split_point_D.y == pytest.approx(lam * ref.SPLIT_D[1], rel=1e-12)

    def test_voltage_scaling_of_power_scale(self, reference_data):
        mu = 2.5
        scaled = dataclasses.replace(
            reference_data,
            V_rated=mu * reference_data.V_rated,
            V_sc=mu * reference_data.V_sc,
        )
        diagram = build_diagram(refer_to_rated(scaled), scaled)
        assert diagram.power_scale_w_per_a == pytest.approx(
            mu * ref.POWER_SCALE_W_PER_A, rel=1e-12
        )
        assert diagram.circle.radius == pytest.approx(ref.RADIUS, rel=1e-12)


class TestConstantSlipLine:
    def test_zero_slip_rejected(self, reference_diagram):
        with pytest.raises(InvalidSlip):
            constant_slip_line(reference_diagram, 0.0)

    def test_unit_slip_matches_output_slope(self, reference_diagram):
        line = constant_slip_line(reference_diagram, 1.0)
        assert _slope(line) == pytest.approx(ref.M_OUT, rel=1e-12)

    def test_huge_slip_approaches_torque_slope(self, reference_diagram):
        line = constant_slip_line(reference_diagram, 1e12)
        assert _slope(line) == pytest.approx(ref.M_TQ, rel=1e-9)

    def test_frozen_slope_at_example_slip(self, reference_diagram):
        line = constant_slip_line(reference_diagram, 0.0498)
        assert _slope(line) == pytest.approx(ref.SLIP_LINE_SLOPE_AT_0_0498, rel=1e-12)

    def test_passes_through_no_load_point(self, reference_diagram):
        o = reference_diagram.anchors.O_prime
        for s in (0.02, 0.7, -0.3, 4.0):
            line = constant_slip_line(reference_diagram, s)
            assert line.p == o
            assert math.hypot(line.d.x, line.d.y) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("s", [0.3, 1.0, -0.05, 2.5])
    def test_intercept_ratio_recovers_slip(self, reference_diagram, s):
        o = reference_diagram.anchors.O_prime
        slip_line = constant_slip_line(reference_diagram, s)
        for dx in (1.0, 7.0, 20.0):
            x = o.x + dx
            y = vertical_intercept(slip_line, x)
            j = vertical_intercept(reference_diagram.output_line, x)
            k = vertical_intercept(reference_diagram.torque_line, x)
            assert (j - k) / (y - k) == pytest.approx(s, rel=1e-9)


class TestExport:
    def test_golden_block(self, reference_diagram):
        pairs = [
            ("C_x", ref.CENTER[0]),
            ("C_y", ref.CENTER[1]),
            ("r", ref.RADIUS),
            ("D_x", ref.SPLIT_D[0]),
            ("D_y", ref.SPLIT_D[1]),
            ("power_scale_w_per_a", ref.POWER_SCALE_W_PER_A),
            ("O_prime_x", ref.O_PRIME[0]),
            ("O_prime_y", ref.O_PRIME[1]),
            ("A_x", ref.A_POINT[0]),
            ("A_y", ref.A_POINT[1]),
        ]
        expected = "".join(f"{key} = {format(value, '.9g')}\n" for key, value in pairs)
        assert export_diagram(reference_diagram) == expected

    def test_key_order_is_stable(self, reference_diagram):
        keys = [
            line.split(" = ")[0]
            for line in export_diagram(reference_diagram).splitlines()
        ]
        assert keys == [
            "C_x",
            "C_y",
            "r",
            "D_x",
            "D_y",
            "power_scale_w_per_a",
            "O_prime_x",
            "O_prime_y",
            "A_x",
            "A_y",
        ]
