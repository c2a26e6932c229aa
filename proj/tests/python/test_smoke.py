import math

import pytest

import tricoh

GHZ = [1 / math.sqrt(2), 0, 0, 0, 0, 0, 0, 1 / math.sqrt(2)]


def test_named_states():
    assert tricoh.separabilities(tricoh.State([1, 0, 0, 0, 0, 0, 0, 0])) == pytest.approx((1, 1, 1))
    assert tricoh.separabilities(tricoh.State(GHZ)) == pytest.approx((0, 0, 0), abs=1e-12)
    w = tricoh.State([0, 1, 1, 0, 1, 0, 0, 0], normalize=True)
    assert tricoh.separabilities(w) == pytest.approx((1 / 3, 1 / 3, 1 / 3))
    m = tricoh.reduced_matrix(w, "b")
    assert m[0, 0].real == pytest.approx(2 / 3)


def test_state_errors():
    with pytest.raises(tricoh.TricohError):
        tricoh.State([1, 1, 0, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        tricoh.State([0] * 8, normalize=True)


def test_beam_closed_forms():
    beam = tricoh.Beam()
    beam.alpha = beam.beta = 1 / math.sqrt(2)
    beam.fy = [0, 1]
    assert tricoh.closed_form_separabilities(beam) == pytest.approx((0, 1, 0), abs=1e-12)
    assert tricoh.separabilities(tricoh.beam_to_state(beam)) == pytest.approx((0, 1, 0), abs=1e-12)


def test_geometry():
    assert tricoh.classify_point((0, 1, 1)) == "excluded-BCMD"
    assert tricoh.genuine_coherence((1 / 3, 1 / 3, 1 / 3)) == pytest.approx(2 / 3)
    assert tricoh.cross_section_area(1.0) == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
    vol = tricoh.allowed_volume_mc(100000, 1, 2)
    assert abs(vol["estimate"] - 0.5) < 5 * vol["std_error"]
    vertices, faces = tricoh.mesh_export()
    assert len(vertices) == 5 and len(faces) == 8


def test_sampling_and_proof():
    st = tricoh.sweep(2000, 42)
    assert st["violations"] == 0
    assert sum(st["counts"]) == 2000
    report = tricoh.verify_appendix(tricoh.haar_random_state(3, 4))
    assert report["all_pass"]


def test_bench():
    assert tricoh.recipe_names() == ["E1", "E2", "E3", "E4", "E5", "E6"]
    e4 = tricoh.run_recipe("E4")
    assert tricoh.separabilities(e4) == pytest.approx((0, 0, 1), abs=1e-12)
    rows = tricoh.reproduce_table()
    theory = [r["C_abc_T"] for r in rows if r["kind"] == "theory"]
    assert theory == pytest.approx([0, 1, 2 / 3, 0, 0, 0])
    noisy = tricoh.tomography(tricoh.run_recipe("E3"), shots=10000, noise="poisson", seed=7)
    assert noisy["separabilities"] == pytest.approx((1 / 3, 1 / 3, 1 / 3), abs=0.05)
    with pytest.raises(tricoh.TricohError):
        tricoh.run_recipe("E9")
