import pytest

from core.capping import cap_all, cap_component, close_single_boundary
from core.catalog import catalog_diagram, catalog_entries, closed_blocks, curve, trivial
from core.gluing import connected_sum
from core.validator import euler_characteristic, validate_diagram
from models.diagram import DiagramParams, SurfaceModel
from models.errors import (
    BadIndexError,
    LastBoundaryError,
    NotRelativeError,
    PageGenusNonzeroError,
)


def _p0_relative_entries():
    return [e for e in catalog_entries() if e.diagram.is_relative and e.diagram.params.p == 0]


class TestCapComponent:
    def test_trivial_two_to_disk(self):
        capped = cap_component(trivial(2), 1)
        assert capped.params == DiagramParams.relative(0, 0, 0, 1)
        assert capped == trivial(1)

    def test_dplus_last_component(self):
        capped = cap_component(catalog_diagram("DPLUS"), 2)
        s = SurfaceModel(1, 1)
        assert capped.params == DiagramParams.relative(1, 0, 0, 1)
        assert capped.surface == s
        assert [m.coords for m in capped.alpha] == [curve(s, "a1")]
        assert [m.coords for m in capped.beta] == [curve(s, "b1")]
        assert [m.coords for m in capped.gamma] == [curve(s, "a1 + b1")]
        assert close_single_boundary(capped) == catalog_diagram("CP2")

    def test_last_component_substitutes(self):
        d = catalog_diagram("CORK_A")
        capped = cap_component(d, 4)
        s = capped.surface
        assert capped.params == DiagramParams.relative(3, 2, 0, 3)
        assert [m.coords for m in capped.gamma] == [
            curve(s, "a1 - b1 + c1"),
            curve(s, "a2 - b2 + c2"),
            curve(s, "a3 - b3 - c1 - c2"),
        ]
        assert validate_diagram(capped).ok

    def test_every_component_gives_valid_diagram(self):
        for entry in _p0_relative_entries():
            d = entry.diagram
            if d.params.b < 2:
                continue
            for component in range(1, d.params.b + 1):
                capped = cap_component(d, component)
                assert validate_diagram(capped).ok, (entry.name, component)

    def test_errors(self):
        with pytest.raises(PageGenusNonzeroError):
            cap_component(catalog_diagram("W01_B"), 1)
        with pytest.raises(LastBoundaryError):
            cap_component(catalog_diagram("D4"), 1)
        with pytest.raises(BadIndexError):
            cap_component(catalog_diagram("DPLUS"), 3)
        with pytest.raises(NotRelativeError):
            cap_component(catalog_diagram("CP2"), 1)


class TestCapAll:
    def test_dplus_is_cp2(self):
        closed, summary = cap_all(catalog_diagram("DPLUS"))
        assert closed == catalog_diagram("CP2")
        assert (summary.two_handle_count, summary.four_handle_count) == (1, 1)

    def test_trivial_is_s4(self):
        for b in range(1, 9):
            closed, summary = cap_all(trivial(b))
            assert closed.params == DiagramParams.closed(0, 0)
            assert closed == catalog_diagram("S4")
            assert summary.two_handle_count == b - 1
            assert summary.four_handle_count == 1
            assert summary.attaching_classes == tuple(
                trivial(b).surface.boundary_class(i) for i in range(1, b)
            )

    def test_page_genus_obstruction(self):
        with pytest.raises(PageGenusNonzeroError, match=r"g-p=2 < g=3"):
            cap_all(catalog_diagram("W01_B"))

    def test_equals_fold_of_single_caps(self):
        for entry in _p0_relative_entries():
            d = entry.diagram
            folded = d
            for _ in range(d.params.b - 1):
                folded = cap_component(folded, 1)
            folded = close_single_boundary(folded)
            assert folded == cap_all(d)[0], entry.name

    def test_handle_bookkeeping_sweep(self):
        for g in range(6):
            for b in range(1, 6):
                for k in range(b - 1, g + b):
                    m = k - (b - 1)
                    d = connected_sum(closed_blocks("std", ["s"] * m + ["+"] * (g - m)), trivial(b))
                    closed, summary = cap_all(d)
                    assert closed.params == DiagramParams.closed(g, k - b + 1)
                    assert (summary.two_handle_count, summary.four_handle_count) == (b - 1, 1)
                    assert euler_characteristic(closed.params) == euler_characteristic(d.params) + b
                    assert validate_diagram(closed).ok
