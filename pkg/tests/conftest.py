import math
import pathlib
import random

import pytest

from heylandcircle import MachineTestData, build_diagram, parse_test_data, refer_to_rated

DATA_DIR = pathlib.Path(__file__).parent / "data"
REFERENCE_FILE = DATA_DIR / "reference_machine.txt"


@pytest.fixture(scope="session")
def reference_document() -> str:
    return REFERENCE_FILE.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def reference_data(reference_document):
    return parse_test_data(reference_document)


@pytest.fixture(scope="session")
def reference_anchors(reference_data):
    return refer_to_rated(reference_data)


@pytest.fixture(scope="session")
def reference_diagram(reference_data, reference_anchors):
    return build_diagram(reference_anchors, reference_data)


def random_machine_data(rng: random.Random) -> MachineTestData:
    """Draw a valid random dataset: angles ordered, currents and voltages
    log-uniform over two decades, referred blocked-rotor point strictly
    right of the no-load point."""
    while True:
        phi0 = rng.uniform(30.0, 89.0)
        phi_sc = rng.uniform(2.0, phi0 - 1.0)
        i0 = 10.0 ** rng.uniform(0.0, 2.0)
        v_rated = 10.0 ** rng.uniform(2.0, 4.0)
        v_sc = v_rated * rng.uniform(0.1, 1.0)
        isc_referred = i0 * 10.0 ** rng.uniform(0.2, 1.5)
        if (
            isc_referred * math.sin(math.radians(phi_sc))
            <= 1.05 * i0 * math.sin(math.radians(phi0))
        ):
            continue
        return MachineTestData(
            I0=i0,
            phi0_deg=phi0,
            Isc=isc_referred * v_sc / v_rated,
            phi_sc_deg=phi_sc,
            V_rated=v_rated,
            V_sc=v_sc,
            P_rated_w=10.0 ** rng.uniform(2.5, 5.0),
            phases=3 if rng.random() < 0.7 else 1,
            rotor_cu_fraction=rng.uniform(0.2, 0.8),
        )
