"""Test configuration for pytest."""

import tempfile
from pathlib import Path
from typing import Callable, Generator

import pytest

from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import ArcSymbol, CurveSymbol, DiskPlacement, HomologyClass, MarkedSurface
from obqp.parsers import build_session, parse
from obqp.parsers.session import Session
from obqp.surface.lattice import build_surface

ANNULUS_DOCUMENT = """\
surface g=0 b=2
point p1
loop d1 class=[1,0] through=p1
word P[d1,p1]
classify
"""

TREFOIL_DOCUMENT = """\
surface disk g=0 b=1
point p1
point p2
disk_arc a = std(1,2)
word w = H[a] * H[a] * H[a]
pob trefoil = w
"""

TORUS_DOCUMENT = """\
surface torus g=1 b=1
point p1 collar=true
curve a class=[1,0,0] collar_avoiding=true
curve b class=[0,1,0] collar_avoiding=true
word w = D[a] * D[b]
pob twist = w
"""


@pytest.fixture
def annulus_document() -> str:
    return ANNULUS_DOCUMENT


@pytest.fixture
def trefoil_document() -> str:
    return TREFOIL_DOCUMENT


@pytest.fixture
def torus_document() -> str:
    return TORUS_DOCUMENT


@pytest.fixture
def annulus_session() -> Session:
    return build_session(parse(ANNULUS_DOCUMENT))


@pytest.fixture
def trefoil_session() -> Session:
    return build_session(parse(TREFOIL_DOCUMENT))


@pytest.fixture
def torus_session() -> Session:
    return build_session(parse(TORUS_DOCUMENT))


@pytest.fixture
def annulus_pob(annulus_session: Session) -> PointedOpenBook:
    return annulus_session.pob()


@pytest.fixture
def trefoil_pob(trefoil_session: Session) -> PointedOpenBook:
    return trefoil_session.pob("trefoil")


@pytest.fixture
def torus_pob(torus_session: Session) -> PointedOpenBook:
    return torus_session.pob("twist")


@pytest.fixture
def disk3() -> MarkedSurface:
    """Disk page with three marked points."""
    return build_surface(0, 1, ["p1", "p2", "p3"])


@pytest.fixture
def disk3_arcs() -> dict[str, ArcSymbol]:
    """Standard arcs a1 (p1-p2) and a2 (p2-p3) on the three-point disk."""
    return {
        "a1": ArcSymbol("a1", ("p1", "p2"), disk=DiskPlacement("arc", 1, 2)),
        "a2": ArcSymbol("a2", ("p2", "p3"), disk=DiskPlacement("arc", 2, 3)),
    }


@pytest.fixture
def torus_curves() -> dict[str, CurveSymbol]:
    """Curves a and b on a one-holed torus with one marked point."""
    return {
        "a": CurveSymbol("a", HomologyClass((1, 0, 0))),
        "b": CurveSymbol("b", HomologyClass((0, 1, 0))),
    }


@pytest.fixture
def write_file() -> Generator[Callable[[str, str], Path], None, None]:
    """Write text files into a temporary directory that lives for one test."""
    with tempfile.TemporaryDirectory() as tmpdir:

        def _write(name: str, text: str) -> Path:
            path = Path(tmpdir) / name
            path.write_text(text, encoding="utf-8")
            return path

        yield _write
