import pytest

from magnomech.meanfield import effective_couplings
from magnomech.params import DriveConfig, reference_params


@pytest.fixture(scope="session")
def ref_params():
    return reference_params()


@pytest.fixture(scope="session")
def ref_drive():
    # caption operating point: real blue-tone coupling, no red tone
    return DriveConfig.couplings(0.21, 0.0)


@pytest.fixture(scope="session")
def ref_couplings(ref_params, ref_drive):
    return effective_couplings(ref_params, ref_drive)
