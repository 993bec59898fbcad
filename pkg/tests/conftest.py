"""Shared fixtures: small field contexts and codes reused across the suite.

Everything here is deterministic and cheap to build; session scope just
avoids rebuilding the same lazy tables in every test module.
"""

import pytest

from gablab import FieldCtx, GabidulinCode


@pytest.fixture(scope="session")
def gf4() -> FieldCtx:
    return FieldCtx(2, 1, 2)


@pytest.fixture(scope="session")
def gf8() -> FieldCtx:
    return FieldCtx(2, 1, 3)


@pytest.fixture(scope="session")
def gf16() -> FieldCtx:
    return FieldCtx(2, 1, 4)


@pytest.fixture(scope="session")
def gf27() -> FieldCtx:
    return FieldCtx(3, 1, 3)


@pytest.fixture(scope="session")
def tower16() -> FieldCtx:
    # GF(4^2): the q = 4 case exercises every s > 1 code path.
    return FieldCtx(2, 2, 2)


@pytest.fixture(scope="session")
def gf8_code(gf8) -> GabidulinCode:
    return GabidulinCode(gf8, (1, 2, 4), 1)


@pytest.fixture(scope="session")
def code24(gf16) -> GabidulinCode:
    return GabidulinCode(gf16, (1, 2, 4, 8), 2)
