"""Tabulated data: values, range errors, citations, serialization."""

import json
import os

import pytest

from cpsums import tables
from cpsums.fgab import FgAbGroup
from cpsums.tables import (
    GeneratorLabel,
    TableEntry,
    TableError,
    UntabulatedDegree,
    ko_single_cp,
    pl_over_o_entry,
)

Z2 = FgAbGroup.cyclic(2)


class TestStableStems:
    def test_values(self):
        assert tables.stable_stem(6) == Z2
        assert tables.stable_stem(8) == FgAbGroup(0, (2, 2))
        assert tables.stable_stem(10) == FgAbGroup.cyclic(6)
        assert tables.stable_stem(14) == FgAbGroup(0, (2, 2))
        assert tables.stable_stem(16) == FgAbGroup(0, (2, 2))

    def test_untabulated_degrees_error(self):
        for n in (7, 12, 17):
            with pytest.raises(UntabulatedDegree):
                tables.stable_stem(n)

    def test_two_local_thirteen_stem(self):
        assert tables.stable_stem_localized(13, 2) == FgAbGroup.zero()
        assert tables.stable_stem(13) == FgAbGroup.cyclic(3)


class TestSingleCopyCohomotopy:
    def test_values(self):
        assert tables.pi_s0_single_cp(3) == Z2
        assert tables.pi_s0_single_cp(5) == FgAbGroup.from_cyclic_orders(2, 2, 3)
        assert tables.pi_s0_single_cp(7) == FgAbGroup(0, (2, 2, 2))

    def test_range(self):
        for n in (2, 9):
            with pytest.raises(UntabulatedDegree):
                tables.pi_s0_single_cp(n)


class TestHopfData:
    def test_kernels(self):
        assert tables.hopf_kernel(5) == FgAbGroup.from_cyclic_orders(2, 3)
        assert tables.hopf_kernel(3) == Z2
        assert tables.hopf_kernel(7) == FgAbGroup(0, (2, 2))

    def test_images(self):
        assert tables.hopf_image_suspension(4) == Z2
        assert tables.hopf_image_suspension(5) == FgAbGroup.zero()
        assert tables.hopf_image_suspension(8) == Z2

    def test_image_sits_inside_stem(self):
        for n in range(3, 9):
            image = tables.hopf_image_suspension(n)
            if image.is_trivial:
                continue
            stem = tables.stable_stem(2 * n)
            assert stem.torsion_order() % image.torsion_order() == 0
            for p in (2, 3):
                assert image.p_socle_rank(p) <= stem.p_socle_rank(p)

    def test_untabulated(self):
        with pytest.raises(UntabulatedDegree):
            tables.hopf_kernel(8)


class TestWallGroups:
    def test_periodic_values(self):
        assert tables.wall_group(10) == Z2
        assert tables.wall_group(11) == FgAbGroup.zero()
        assert tables.wall_group(12) == FgAbGroup.free(1)
        assert tables.wall_group(13) == FgAbGroup.zero()
        assert tables.wall_group(14) == Z2

    def test_four_periodicity(self):
        for i in range(-4, 12):
            assert tables.wall_group(i) == tables.wall_group(i + 4)


class TestKoSingleCp:
    def test_minus_one_vanishes(self):
        for n in (1, 2, 5, 9, 12):
            assert ko_single_cp(1, n).group == FgAbGroup.zero()

    def test_minus_three_cases(self):
        assert ko_single_cp(3, 6).group == FgAbGroup.zero()  # 4m+2
        assert ko_single_cp(3, 10).group == FgAbGroup.zero()
        assert ko_single_cp(3, 7).group == Z2  # 4m+3
        assert ko_single_cp(3, 8).group == FgAbGroup.zero()

    def test_degree_zero_cases(self):
        assert ko_single_cp(0, 5).group == FgAbGroup(2, (2,))  # 4m+1: Z^2m + Z_2
        assert ko_single_cp(0, 9).group == FgAbGroup(4, (2,))
        assert ko_single_cp(0, 6).group == FgAbGroup.free(3)
        assert ko_single_cp(0, 4).group == FgAbGroup.free(2)
        assert ko_single_cp(0, 7).group == FgAbGroup.free(3)

    def test_minus_seven(self):
        assert ko_single_cp(7, 5).group == Z2  # 4m+1
        assert ko_single_cp(7, 6).group == FgAbGroup.zero()

    def test_spheres_specialization(self):
        # CP^1 is the 2-sphere; the closed forms extrapolate correctly
        expected = {0: Z2, 1: FgAbGroup.zero(), 2: FgAbGroup.free(1),
                    3: FgAbGroup.zero(), 4: FgAbGroup.zero(), 5: FgAbGroup.zero(),
                    6: FgAbGroup.free(1), 7: Z2}
        for s, g in expected.items():
            assert ko_single_cp(s, 1).group == g, s

    def test_generator_labels(self):
        e = ko_single_cp(0, 5)
        assert [str(g) for g in e.generators] == ["eta_1^1", "eta_1^2", "eta_1^3"]
        assert e.generators[-1].relation == "2*eta^3 = 0"
        e = ko_single_cp(2, 3)
        assert [str(g) for g in e.generators] == ["alpha*eta_1^0", "sigma_1"]
        assert e.generators[-1].relation == "2*sigma = alpha*eta^1"

    def test_generator_count_matches_group(self):
        for s in range(8):
            for n in range(1, 13):
                entry = ko_single_cp(s, n)
                if entry.generators:
                    assert len(entry.generators) == entry.group.ngens

    def test_range_errors(self):
        with pytest.raises(ValueError):
            ko_single_cp(8, 3)
        with pytest.raises(ValueError):
            ko_single_cp(0, 0)

    def test_external_flag(self):
        assert ko_single_cp(0, 5).external is True


class TestPlOverO:
    def test_values(self):
        assert pl_over_o_entry(3, 3).group == FgAbGroup.zero()
        assert pl_over_o_entry(3, 4).group == Z2
        assert pl_over_o_entry(2, 5).group == FgAbGroup.from_primary({2: [1] * 3, 3: [1]})
        assert pl_over_o_entry(2, 6).group == FgAbGroup.from_primary({2: [1] * 3, 3: [1, 1]})

    def test_external_flags(self):
        assert pl_over_o_entry(2, 3).external
        assert pl_over_o_entry(2, 4).external
        assert not pl_over_o_entry(2, 5).external
        assert not pl_over_o_entry(2, 6).external
        assert pl_over_o_entry(2, 7).external

    def test_untabulated(self):
        with pytest.raises(UntabulatedDegree):
            pl_over_o_entry(2, 8)


class TestGeneratorLabel:
    def test_rendering(self):
        assert str(GeneratorLabel("eta", 3, 2)) == "eta_2^3"
        assert str(GeneratorLabel("eta", 3, 2, "q*")) == "q*(eta_2^3)"
        assert str(GeneratorLabel("omega", decoration="d*")) == "d*(omega)"
        assert str(GeneratorLabel("xi", power=2)) == "xi_2"
        assert str(GeneratorLabel("sigma", copy_index=4)) == "sigma_4"

    def test_validation(self):
        with pytest.raises(ValueError):
            GeneratorLabel("eta", power=-1)
        with pytest.raises(ValueError):
            GeneratorLabel("eta", copy_index=0)
        with pytest.raises(ValueError):
            GeneratorLabel("eta", decoration="p*")


class TestEntryValidation:
    def test_round_trip(self):
        entry = tables.entry("stable_stem", n=10)
        assert TableEntry.from_record(entry.to_record()) == entry

    def test_missing_citation_rejected(self):
        with pytest.raises(TableError):
            TableEntry(
                kind="x", params=(("n", 1),), group=Z2, citation="", external=False
            )

    def test_generator_count_enforced(self):
        with pytest.raises(TableError):
            TableEntry(
                kind="x",
                params=(("n", 1),),
                group=Z2,
                generators=(GeneratorLabel("eta", 1), GeneratorLabel("eta", 2)),
                citation="two labels on one summand",
            )


class TestDataFileOverride:
    def test_env_var_override(self, tmp_path, monkeypatch):
        path = tmp_path / "tables.jsonl"
        path.write_text(
            json.dumps(
                {
                    "kind": "stable_stem",
                    "params": {"n": 6},
                    "group": {"rank": 0, "torsion": [4]},
                    "citation": "deliberately wrong fixture",
                    "external": False,
                }
            )
            + "\n",
            encoding="utf-8",
        )
        monkeypatch.setenv(tables.DATA_ENV, str(path))
        assert tables.stable_stem(6) == FgAbGroup.cyclic(4)
        with pytest.raises(UntabulatedDegree):
            tables.stable_stem(8)

    def test_citationless_file_refused(self, tmp_path, monkeypatch):
        path = tmp_path / "bad.jsonl"
        path.write_text(
            json.dumps(
                {
                    "kind": "stable_stem",
                    "params": {"n": 6},
                    "group": {"rank": 0, "torsion": [2]},
                    "citation": "",
                }
            )
            + "\n",
            encoding="utf-8",
        )
        monkeypatch.setenv(tables.DATA_ENV, str(path))
        with pytest.raises(TableError):
            tables.stable_stem(6)

    def test_every_shipped_record_has_citation(self):
        assert os.environ.get(tables.DATA_ENV) is None
        for rec in tables.all_raw_records():
            assert rec["citation"].strip()
