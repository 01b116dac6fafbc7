"""Tests for Bennequin surfaces."""

import math

import pytest

from obqp.bennequin import (
    band_graph,
    bennequin_bound_check,
    bennequin_report,
    build_bennequin,
    page_angles,
    self_linking_sqp,
)
from obqp.exceptions import BennequinError, NotInBennequinFormError, SharpnessUndefinedError
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import ArcSymbol, MarkedSurface
from obqp.parsers import build_session, parse, parse_word_text
from obqp.surface.lattice import build_surface

DISK_WITH_BLOCK = """\
surface g=0 b=1
point p1
point p2
disk_arc a = std(1,2)
disk_curve c = block(1,2)
"""


def _disk_pob(word: str) -> PointedOpenBook:
    session = build_session(parse(DISK_WITH_BLOCK + f"word w = {word}\n"))
    return session.pob()


class TestBennequinReport:
    """Tests for the full report."""

    def test_trefoil(self, trefoil_pob: PointedOpenBook) -> None:
        data = bennequin_report(trefoil_pob).to_dict()

        assert (data["n"], data["l"], data["chi"]) == (2, 3, -1)
        assert (data["e_plus"], data["e_minus"], data["h_plus"], data["h_minus"]) == (2, 0, 3, 0)
        assert (data["mu"], data["connected"], data["genus"]) == (1, True, 1)
        assert data["sl"] == 1
        assert data["bound_holds"] and data["sharp"]
        assert data["disk_sl"] == 1
        assert not data["collar_conditions"]
        assert [band["endpoints"] for band in data["bands"]] == [["p1", "p2"]] * 3

    def test_negative_band(self) -> None:
        """sl is left undetermined when a band is negative."""
        report = bennequin_report(_disk_pob("H[a] * H[a]^-1 * H[a]"))

        assert report.sl is None
        assert report.bound_holds is None
        assert not report.sharp
        assert (report.counts.h_plus, report.counts.h_minus) == (2, 1)

    def test_residual_monodromy(self) -> None:
        """Letters after the leading half-twists add no bands."""
        report = bennequin_report(_disk_pob("H[a] * D[c]"))

        assert report.data.band_count == 1
        assert report.data.residual == ("D[c]",)
        assert report.chi == 1
        assert report.boundary.genus == 0
        assert report.disk_self_linking is None

    def test_disconnected(self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]) -> None:
        """A disk with no band attached splits off."""
        word = parse_word_text("H[a1]", disk3, disk3_arcs)
        report = bennequin_report(PointedOpenBook(disk3, word))

        assert report.boundary.components == 2
        assert not report.boundary.connected
        assert report.boundary.genus is None
        assert report.boundary.graph_components == 2

    def test_point_push_has_no_bands(self, annulus_pob: PointedOpenBook) -> None:
        report = bennequin_report(annulus_pob)
        assert report.data.band_count == 0
        assert report.data.residual == ("D[d1_L]", "D[d1_R]^-1")
        assert report.disk_self_linking is None


class TestBennequinForm:
    """Tests for the shape a word needs before it has a Bennequin surface."""

    def test_half_twist_after_residual(self) -> None:
        with pytest.raises(NotInBennequinFormError, match="position 2"):
            build_bennequin(_disk_pob("D[c] * H[a]"))

    def test_no_marked_points(self) -> None:
        with pytest.raises(BennequinError):
            build_bennequin(PointedOpenBook.trivial(build_surface(0, 1)))

    def test_self_linking_needs_positive_bands(self) -> None:
        data = build_bennequin(_disk_pob("H[a]^-1"))
        with pytest.raises(SharpnessUndefinedError):
            self_linking_sqp(data)

    def test_band_graph(self, trefoil_pob: PointedOpenBook) -> None:
        graph = band_graph(build_bennequin(trefoil_pob))
        assert sorted(graph.nodes) == ["p1", "p2"]
        assert graph.number_of_edges() == 3

    def test_page_angles(self, trefoil_pob: PointedOpenBook) -> None:
        angles = page_angles(build_bennequin(trefoil_pob))
        assert angles == pytest.approx([math.pi / 2, math.pi, 3 * math.pi / 2])

    def test_bound(self) -> None:
        assert bennequin_bound_check(1, -1)
        assert not bennequin_bound_check(2, -1)
