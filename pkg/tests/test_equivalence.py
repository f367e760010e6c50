import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraxion.equivalence import (
    EquivalenceQuery,
    bed_uniform,
    convert_bed,
    effects_equal,
    min_total_dose,
)
from fraxion.errors import ValidationError
from fraxion.p2 import P2Case
from fraxion.radiobiology import DoseBounds, Protocol, phi, solve_phi, tumor_effect

from conftest import BOUNDS, TUMOR, tissues


class TestBed:
    def test_identity(self):
        assert bed_uniform(TUMOR, 25, 2.0, 25) == 2.0

    def test_to_15(self):
        # 15 * phi(d) = 3  =>  0.005 d^2 + 0.05 d - 0.2 = 0
        expected = (-0.05 + math.sqrt(0.05**2 + 4 * 0.005 * 0.2)) / (2 * 0.005)
        assert bed_uniform(TUMOR, 25, 2.0, 15) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(3.0623, abs=1e-4)

    def test_to_50(self):
        # 50 * phi(d) = 3  =>  d^2 + 10 d - 12 = 0  =>  d = -5 + sqrt(37)
        assert bed_uniform(TUMOR, 25, 2.0, 50) == pytest.approx(-5 + math.sqrt(37), rel=1e-12)

    @pytest.mark.parametrize("args", [(0, 2.0, 5), (25, 0.0, 5), (25, 2.0, 0), (2.5, 2.0, 5), (25, -1.0, 5)])
    def test_validation(self, args):
        with pytest.raises(ValidationError):
            bed_uniform(TUMOR, *args)

    @given(tissues(), st.integers(1, 60), st.floats(0.5, 10.0), st.integers(1, 60))
    def test_preserves_effect(self, sens, n, d, m):
        d2 = bed_uniform(sens, n, d, m)
        assert m * phi(sens, 1.0, d2) == pytest.approx(n * phi(sens, 1.0, d), rel=1e-12)

    @given(tissues(), st.integers(1, 60), st.floats(0.5, 10.0), st.integers(1, 59))
    def test_decreasing_in_target_count(self, sens, n, d, m):
        assert bed_uniform(sens, n, d, m + 1) < bed_uniform(sens, n, d, m)

    def test_bounds_flag_only(self):
        conv = convert_bed(TUMOR, 25, 2.0, 50, BOUNDS)
        assert conv.within_bounds is True
        conv = convert_bed(TUMOR, 25, 2.0, 2, BOUNDS)
        assert conv.within_bounds is False
        assert conv.effect_target == pytest.approx(3.0, rel=1e-12)
        assert convert_bed(TUMOR, 25, 2.0, 2).within_bounds is None


class TestEffectsEqual:
    def test_reflexive(self):
        p = Protocol.uniform(25, 2.0)
        assert effects_equal(TUMOR, p, p, 1e-12)

    def test_converted(self):
        p = Protocol.uniform(25, 2.0)
        q = Protocol.uniform(15, bed_uniform(TUMOR, 25, 2.0, 15))
        assert effects_equal(TUMOR, p, q, 1e-9)
        assert effects_equal(TUMOR, q, p, 1e-9)

    def test_non_equivalent_pair(self):
        p, q = Protocol.uniform(25, 2.0), Protocol.uniform(15, 2.67)
        assert tumor_effect(TUMOR, q) == pytest.approx(2.54, abs=5e-3)
        assert not effects_equal(TUMOR, p, q, 1e-6)

    def test_tol_positive(self):
        p = Protocol.uniform(1, 1.0)
        with pytest.raises(ValidationError):
            effects_equal(TUMOR, p, p, 0.0)

    @given(tissues(), st.lists(st.floats(0.5, 6.0), min_size=1, max_size=10),
           st.lists(st.floats(0.5, 6.0), min_size=1, max_size=10))
    def test_symmetric(self, sens, a, b):
        p, q = Protocol.from_doses(a), Protocol.from_doses(b)
        # tolerance is relative to the first argument; symmetric up to that scale
        tol = 1e-3
        if effects_equal(sens, p, q, tol):
            assert effects_equal(sens, q, p, tol * 1.01)


class TestMinTotalDose:
    def test_reference_structure(self):
        rep = min_total_dose(EquivalenceQuery(TUMOR, BOUNDS, 4.35))
        assert rep.case is P2Case.HYPO_STRUCTURE
        (k, _), (one, mid), (rest, _) = rep.protocol.groups
        assert (k, one, rest) == (1, 1, 8)
        assert mid == pytest.approx(5.77, abs=5e-3)
        assert rep.objective_primary == pytest.approx(54.77, abs=5e-3)
        assert rep.objective_secondary == pytest.approx(4.35, rel=1e-12)

    def test_single_max(self):
        rep = min_total_dose(EquivalenceQuery(TUMOR, BOUNDS, phi(TUMOR, 1.0, 6.0)))
        assert rep.protocol == Protocol.uniform(1, 6.0)

    @pytest.mark.parametrize("frac", [1.0, 0.5])
    def test_single_min(self, frac):
        rep = min_total_dose(EquivalenceQuery(TUMOR, BOUNDS, frac * phi(TUMOR, 1.0, 1.0)))
        assert rep.protocol == Protocol.uniform(1, 1.0)

    def test_empty_window(self):
        b = DoseBounds(1.0, 1.2)
        rep = min_total_dose(EquivalenceQuery(TUMOR, b, 0.15))
        assert rep.case is P2Case.EMPTY_WINDOW_ALL_MIN
        assert rep.protocol == Protocol.uniform(3, 1.0)

    @given(tissues(), st.floats(0.5, 2.0), st.floats(0.5, 6.0), st.floats(1.05, 40.0), st.integers(0, 2**32 - 1))
    @settings(max_examples=30)
    def test_beats_random_equal_effect_protocols(self, sens, d_min, span, rho, seed):
        b = DoseBounds(d_min, d_min + span)
        gamma = rho * phi(sens, 1.0, d_min)
        rep = min_total_dose(EquivalenceQuery(sens, b, gamma))
        rng = np.random.default_rng(seed)
        lo, hi = phi(sens, 1.0, b.d_min), phi(sens, 1.0, b.d_max)

        for _ in range(1000):
            n = int(rng.integers(1, math.ceil(rho) + 2))
            doses = list(rng.uniform(b.d_min, b.d_max, n))
            # move the first dose so the total effect hits gamma exactly
            rest = math.fsum(phi(sens, 1.0, d) for d in doses[1:])
            need = gamma - rest
            if not lo <= need <= hi:
                continue
            doses[0] = solve_phi(sens, 1.0, need)
            assert rep.objective_primary <= math.fsum(doses) * (1 + 1e-12)
