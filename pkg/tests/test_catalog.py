"""The map catalog: constructions, transcription integrity, exported files."""

from fractions import Fraction
from pathlib import Path

import pytest

from openquadrant.catalog import (
    MAP_NAMES,
    build_F,
    build_G,
    build_GF,
    build_H,
    build_f,
    build_g_old,
    eval_stagewise,
    get_map,
    named_maps,
)
from openquadrant.polynomials import map_compose, map_metrics
from openquadrant.rng import SplitMix64
from openquadrant.textform import parse, serialize

from g_reference import G1_TERMS, G2_TERMS

REPO_ROOT = Path(__file__).resolve().parent.parent


class TestStageMaps:
    def test_F_fixes_the_unit_point(self):
        assert build_F().evaluate((1, 1)) == (1, 1)

    def test_G_fixes_the_unit_point(self):
        assert build_G().evaluate((1, 1)) == (1, 1)

    def test_H_at_the_unit_point(self):
        assert build_H().evaluate((1, 1)) == (Fraction(3, 2), 1)

    def test_f_at_the_unit_point(self):
        assert build_f().evaluate((1, 1)) == (Fraction(3, 2), 1)

    def test_f_at_origin(self):
        assert build_f().evaluate((0, 0)) == (Fraction(3, 2), 1)

    def test_composition_is_byte_identical_to_catalog_f(self):
        composed = map_compose(build_H(), map_compose(build_G(), build_F()))
        assert serialize(composed) == serialize(build_f())

    def test_staged_evaluation_agrees_with_expansion(self):
        f = build_f()
        rng = SplitMix64(73)
        for _ in range(20):
            p = (
                rng.next_positive_rational(40) - 2,
                rng.next_positive_rational(40) - 2,
            )
            assert eval_stagewise(p) == f.evaluate(p)

    def test_gf_is_the_partial_composition(self):
        assert build_GF() == map_compose(build_G(), build_F())


class TestOldMapTranscription:
    def test_double_entry_encodings_agree(self):
        # catalog stores the grouped encoding; this fixture is the flat one
        g1, g2 = build_g_old().components
        assert {e: int(c) for e, c in g1.terms.items()} == {
            (a, b): c for a, b, c in G1_TERMS
        }
        assert {e: int(c) for e, c in g2.terms.items()} == {
            (a, b): c for a, b, c in G2_TERMS
        }

    def test_constants(self):
        g = build_g_old()
        assert g.evaluate((0, 0)) == (85, 4)

    def test_metrics(self):
        m = map_metrics(build_g_old())
        assert m.total_degree == 56
        assert m.total_monomials == 168
        assert m.component_degrees == (28, 28)
        assert m.component_monomials == (102, 66)

    def test_leading_blocks(self):
        g1, g2 = build_g_old().components
        assert next(iter(g1.terms)) == (18, 10)
        assert g1.coefficient((18, 10)) == 1
        assert next(iter(g2.terms)) == (16, 12)
        assert g2.coefficient((16, 12)) == 1

    def test_image_stays_in_quadrant_on_real_samples(self):
        g = build_g_old()
        rng = SplitMix64(79)
        for _ in range(1000):
            p = (
                rng.next_positive_rational(400) - 10,
                rng.next_positive_rational(400) - 10,
            )
            assert all(v > 0 for v in g.evaluate(p))


class TestCatalogAccess:
    def test_all_names_resolve(self):
        for name in MAP_NAMES:
            named = get_map(name)
            assert named.name == name
            assert named.provenance

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError, match="unknown map"):
            get_map("h")

    def test_named_maps_is_stable(self):
        assert list(named_maps()) == list(MAP_NAMES)


class TestExportedFiles:
    @pytest.mark.parametrize(
        "filename,builder",
        [
            ("F.poly", build_F),
            ("G.poly", build_G),
            ("H.poly", build_H),
            ("g_table1.poly", build_g_old),
        ],
    )
    def test_map_files_match_catalog(self, filename, builder):
        path = REPO_ROOT / "maps" / filename
        text = path.read_text(encoding="utf-8")
        assert text == serialize(builder())
        assert parse(text) == builder()

    def test_expanded_f_file_matches_catalog(self):
        path = REPO_ROOT / "out" / "f_expanded.poly"
        assert path.read_text(encoding="utf-8") == serialize(build_f())

    def test_generated_table_reparses_to_f(self):
        from openquadrant.textform import parse_table_style

        path = REPO_ROOT / "out" / "table2.tex"
        assert parse_table_style(path.read_text(encoding="utf-8")) == build_f()
