import json

import pytest

from discstrata.strata import CoefficientPoint, partitions
from discstrata.unipoly import UniPoly, X
from discstrata.verify import (
    check_appendix_proposition,
    check_rank_formula,
    check_res_factorization,
    derive_seed,
    run_suite,
    run_trial,
)


def pt(p):
    return CoefficientPoint.from_poly(p)


class TestSinglePointChecks:
    @pytest.mark.parametrize(
        "poly",
        [X ** 4 + 4 * X ** 2 + 4, UniPoly.from_roots([1, 2, 3, 4]), X ** 4, X ** 6],
    )
    def test_rank_formula(self, poly):
        assert check_rank_formula(pt(poly))

    @pytest.mark.parametrize(
        "poly", [(X - 1) ** 3 * (X - 2), UniPoly.from_roots([1, 2, 3]), X ** 4]
    )
    def test_res_factorization(self, poly):
        assert check_res_factorization(pt(poly))

    @pytest.mark.parametrize(
        "poly, s",
        [
            ((X - 1) ** 2 * (X - 2) ** 2, 1),
            (X ** 2 * (X - 1) ** 2, 1),
            (X * (X - 1) ** 3, 2),
            (X ** 2 * (X - 1) ** 2, 2),
            (X ** 3 * (X + 2), 1),
        ],
    )
    def test_appendix(self, poly, s):
        assert check_appendix_proposition(pt(poly), s)


class TestTrials:
    def test_seed_derivation(self):
        assert derive_seed(42, 0, 0) == derive_seed(42, 0, 0)
        assert derive_seed(42, 0, 1) != derive_seed(42, 1, 0)

    @pytest.mark.parametrize("mu", [(2, 1, 1), (2,), (3, 2, 1)])
    def test_trial_passes(self, mu):
        r = run_trial(sum(mu), mu, seed=5)
        assert r.passed, r.failure_detail
        assert r.report.m_gcd == len(mu)

    def test_quadratic_double_root(self):
        r = run_trial(2, (2,), seed=0)
        assert r.report.m_gcd == 1 and r.report.ord_D == 1
        a0, a1 = r.gamma.coords
        assert a1 * a1 == 4 * a0

    def test_sextic_chain(self):
        r = run_trial(6, (3, 2, 1), seed=8)
        assert r.report.d_gcd == 3 and r.passed

    def test_failure_is_reproducible_from_record(self):
        r = run_trial(4, (2, 2), seed=123)
        again = run_trial(r.n, r.mu, r.seed)
        assert again.to_dict() == r.to_dict()

    def test_bad_partition(self):
        with pytest.raises(ValueError):
            run_trial(4, (2, 1), seed=0)


class TestSuite:
    def test_cubic(self):
        rep = run_suite(3, 10, seed=42)
        assert rep.trials == 30 and rep.passed

    def test_quadratic_single(self):
        rep = run_suite(2, 1, seed=0)
        assert rep.trials == 2 and rep.passed

    def test_deterministic_bytes(self):
        a = run_suite(4, 2, seed=7).to_json(include_elapsed=False)
        b = run_suite(4, 2, seed=7).to_json(include_elapsed=False)
        assert a == b
        assert json.loads(a)["trials"] == 2 * len(partitions(4))

    def test_workers_do_not_change_result(self):
        serial = run_suite(3, 2, seed=1).to_json(include_elapsed=False)
        parallel = run_suite(3, 2, seed=1, workers=2).to_json(include_elapsed=False)
        assert serial == parallel

    def test_degree_range(self):
        with pytest.raises(ValueError):
            run_suite(9, 1, seed=0)
