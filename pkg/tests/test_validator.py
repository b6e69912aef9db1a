import itertools

import pytest

from core.catalog import catalog_diagram, catalog_entries, closed_blocks, curve, trivial
from core.gluing import connected_sum
from core.handleslide import random_slides, slide
from core.validator import euler_characteristic, validate_diagram, window_violations
from models.diagram import (
    CurveClass,
    CurveFamily,
    DiagramParams,
    FamilyLabel,
    SurfaceModel,
    build_diagram,
)
from models.errors import BadIndexError, SelfSlideError, ShapeError
from models.integer_matrix import IntegerMatrix
from models.reports import ViolationKind


def _kinds(diagram):
    return validate_diagram(diagram).kinds()


class TestSurfaceModel:
    def test_pairing(self):
        s = SurfaceModel(2, 2)
        assert s.pairing(curve(s, "a1"), curve(s, "b1")) == 1
        assert s.pairing(curve(s, "b2"), curve(s, "a2")) == -1
        assert s.pairing(curve(s, "a1 + c1"), curve(s, "c1")) == 0

    def test_pairing_matrix_agrees(self, rng):
        s = SurfaceModel(3, 2)
        j = s.pairing_matrix()
        assert j.transpose() == -j
        for _ in range(50):
            x = [rng.randint(-3, 3) for _ in range(s.h1_rank)]
            y = [rng.randint(-3, 3) for _ in range(s.h1_rank)]
            xm = IntegerMatrix.from_rows([x])
            ym = IntegerMatrix.from_columns([y], s.h1_rank)
            assert (xm @ j @ ym)[0, 0] == s.pairing(x, y)

    def test_boundary_class(self):
        s = SurfaceModel(1, 3)
        assert s.boundary_class(1) == (0, 0, 1, 0)
        assert s.boundary_class(3) == (0, 0, -1, -1)

    def test_h1_rank(self):
        assert SurfaceModel(2).h1_rank == 4
        assert SurfaceModel(2, 1).h1_rank == 4
        assert SurfaceModel(2, 3).h1_rank == 6


class TestEuler:
    @pytest.mark.parametrize("params, expected", [
        (DiagramParams.relative(2, 1, 0, 2), 2),
        (DiagramParams.relative(0, 0, 0, 1), 1),
        (DiagramParams.relative(3, 3, 0, 4), 1),
        (DiagramParams.relative(3, 2, 1, 1), 1),
        (DiagramParams.closed(1, 0), 3),
        (DiagramParams.closed(0, 0), 2),
        (DiagramParams.closed(1, 1), 0),
    ])
    def test_values(self, params, expected):
        assert euler_characteristic(params) == expected

    def test_window(self):
        assert window_violations(DiagramParams.relative(2, 5, 0, 2))
        assert not window_violations(DiagramParams.relative(2, 3, 0, 2))
        assert window_violations(DiagramParams.closed(1, 2))
        assert window_violations(DiagramParams.relative(1, -1, 0, 1))


class TestValidate:
    def test_catalog_entries_are_valid(self):
        for entry in catalog_entries():
            report = validate_diagram(entry.diagram)
            assert report.ok, (entry.name, report.violations)

    def test_cp2_and_s1xs3(self):
        assert validate_diagram(catalog_diagram("CP2")).ok
        assert validate_diagram(catalog_diagram("S1xS3")).ok

    def test_dual_pair_is_not_isotropic(self):
        s = SurfaceModel(1)
        d = build_diagram("bad", s, DiagramParams.closed(1, 0), [(1, 0), (0, 1)], [(0, 1)], [(1, 1)])
        kinds = _kinds(d)
        assert ViolationKind.NOT_ISOTROPIC in kinds
        assert ViolationKind.FAMILY_SIZE in kinds

    def test_zero_class_is_dependent(self):
        s = SurfaceModel(1)
        d = build_diagram("zero", s, DiagramParams.closed(1, 0), [(0, 0)], [(0, 1)], [(1, 1)])
        assert ViolationKind.DEPENDENT in _kinds(d)
        messages = [v.message for v in validate_diagram(d).violations if v.kind is ViolationKind.DEPENDENT]
        assert messages == ["alpha1 이 0 류입니다"]

    def test_torsion_cokernel(self):
        s = SurfaceModel(1)
        d = build_diagram("torsion", s, DiagramParams.closed(1, 0), [(1, 0)], [(0, 1)], [(1, 2)])
        violations = [v for v in validate_diagram(d).violations if v.kind is ViolationKind.NOT_HEEGAARD]
        assert violations
        assert all(v.family == "alpha/gamma" for v in violations)

    def test_wrong_k(self):
        d = catalog_diagram("CP2")
        wrong = build_diagram("wrong", d.surface, DiagramParams.closed(1, 1),
                              [(1, 0)], [(0, 1)], [(1, 1)])
        assert ViolationKind.NOT_HEEGAARD in _kinds(wrong)

    def test_surface_mismatch(self):
        d = build_diagram("m", SurfaceModel(1, 2), DiagramParams.relative(1, 1, 0, 3),
                          [(1, 0, 0)], [(0, 1, 0)], [(1, 1, 1)])
        assert ViolationKind.SURFACE_MISMATCH in _kinds(d)

    def test_shape_error_is_raised(self):
        d = build_diagram("short", SurfaceModel(2), DiagramParams.closed(2, 0),
                          [(1, 0, 0)], [], [])
        with pytest.raises(ShapeError):
            validate_diagram(d)

    def test_single_coordinate_mutations(self):
        """한 좌표를 +1 한 변형 중 등방성 또는 여핵 조건이 깨지면 거부되어야 함."""
        for name in ("S2xS2", "E2_A", "CORK_B", "NCP2(2)"):
            d = catalog_diagram(name)
            for family in d.families:
                for idx, member in enumerate(family):
                    for pos in range(d.dim):
                        coords = list(member.coords)
                        coords[pos] += 1
                        mutated = d.with_family(family.with_member(idx, CurveClass(tuple(coords))))
                        report = validate_diagram(mutated)
                        broken = _isotropy_or_cokernel_broken(mutated)
                        if broken:
                            assert not report.ok


def _isotropy_or_cokernel_broken(diagram):
    from core.linalg import cokernel_invariants

    s = diagram.surface
    for family in diagram.families:
        for x, y in itertools.combinations(family, 2):
            if s.pairing(x, y):
                return True
    for first, second in itertools.combinations(diagram.families, 2):
        matrix = first.matrix(diagram.dim).hstack(second.matrix(diagram.dim))
        if cokernel_invariants(matrix) != (diagram.params.k, ()):
            return True
    return False


class TestSlide:
    def test_slide_adds_class(self):
        d = catalog_diagram("S2xS2")
        moved = slide(d, FamilyLabel.ALPHA, 0, 1)
        assert moved.alpha[0].coords == (1, 0, 1, 0)
        assert moved.alpha[1] == d.alpha[1]
        assert validate_diagram(moved).ok

    def test_slide_negative(self):
        d = catalog_diagram("S2xS2")
        moved = slide(d, "gamma", 1, 0, sign=-1)
        assert moved.gamma[1].coords == (-1, 1, 1, -1)
        assert d.surface.pairing(moved.gamma[0], moved.gamma[1]) == 0

    def test_single_member_family(self):
        with pytest.raises(SelfSlideError):
            slide(catalog_diagram("CP2"), FamilyLabel.ALPHA, 0, 0)

    def test_bad_index(self):
        with pytest.raises(BadIndexError):
            slide(catalog_diagram("CP2"), FamilyLabel.ALPHA, 0, 1)

    def test_random_slides_keep_validity(self, rng):
        for entry in catalog_entries():
            moved = random_slides(entry.diagram, rng, 50)
            assert validate_diagram(moved).ok, entry.name


class TestStandardDiagrams:
    def test_every_p0_window_is_realized(self):
        """g <= 5, b <= 5 인 모든 p = 0 매개변수에 대해 표준 도표가 존재."""
        for g in range(6):
            for b in range(1, 6):
                for k in range(b - 1, g + b):
                    m = k - (b - 1)
                    blocks = ["s"] * m + ["+"] * (g - m)
                    d = connected_sum(closed_blocks("std", blocks), trivial(b))
                    assert d.params == DiagramParams.relative(g, k, 0, b)
                    assert validate_diagram(d).ok
