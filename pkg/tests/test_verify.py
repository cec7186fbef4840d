import itertools

import numpy as np
import pytest

from symhyp.gf import field_new
from symhyp.verify import (
    ExperimentError,
    _run_tasks,
    _bound_chunk,
    find_permutation_polynomial,
    scan_conj_even,
    scan_deep_holes,
    subset_escape_check,
    subset_sum_bridge,
    verify_conj_nonzeros,
    verify_remarks,
    verify_thm_even,
    verify_thm_main,
)

F5, F7, F8, F9 = field_new(5), field_new(7), field_new(2, 3), field_new(3, 2)


def _strip(report):
    d = report.to_dict()
    d.pop("elapsed")
    return d


def test_thm_main_small():
    r = verify_thm_main(F5, 3, (1, 2))
    assert r.verdict == "verified"
    assert r.cases_checked == 5 * 4 + 25 * 4
    assert r.min_count_observed >= 6 and r.bound_required == 6
    assert r.notes["oracle_cases"] >= 2


@pytest.mark.parametrize("F,k,m_range", [(F5, 2, None), (F8, 3, None), (F5, 3, (1, 3)), (F5, 3, (0, 2))])
def test_thm_main_rejects_bad_parameters(F, k, m_range):
    with pytest.raises(ExperimentError):
        verify_thm_main(F, k, m_range)


def test_thm_even_rejects():
    with pytest.raises(ExperimentError):
        verify_thm_even(F7, 4)
    with pytest.raises(ExperimentError):
        verify_thm_even(F8, 3)


def test_sampling_fallback_is_reproducible():
    a = verify_thm_main(F7, 4, (1, 2), budget=20000, seed=3)
    b = verify_thm_main(F7, 4, (1, 2), budget=20000, seed=3)
    assert not a.exhaustive and a.verdict == "scan-complete"
    assert _strip(a) == _strip(b)
    assert a.min_count_observed >= 6 * 7


def test_conj_even_is_never_verified():
    r = scan_conj_even(F8, 4, (1, 2))
    assert r.verdict == "scan-complete"
    assert r.min_count_observed >= 24


def test_deep_hole_scan_q5():
    r = scan_deep_holes(F5, 3)
    assert r.verdict == "verified"
    assert r.cases_checked == 125
    assert r.notes["deep_holes"] == 4  # a_2 != 0, a_3 = a_4 = 0
    assert r.notes["deep_holes_sr_form"] == 4
    assert r.notes["oracle_cases"] >= 2


def test_deep_hole_scan_range_checks():
    with pytest.raises(ExperimentError):
        scan_deep_holes(F7, 6)
    with pytest.raises(ExperimentError):
        scan_deep_holes(F8, 3)


def test_deep_hole_scan_streams_records():
    seen = []
    r = scan_deep_holes(F9, 4, budget=10**5, on_record=seen.append)
    assert r.notes["claim_covered"] is False
    assert r.verdict in ("scan-complete", "violated")
    assert len(seen) == len(r.violations) + len(r.findings)


def test_conj_nonzeros():
    r = verify_conj_nonzeros(F7, 4)
    assert r.verdict == "verified"
    assert r.notes["excluded_family"] == 6
    r5 = verify_conj_nonzeros(F5, 3)
    assert r5.verdict == "verified"


def test_subset_escape():
    for F, k in [(F5, 3), (F8, 4), (F7, 2)]:
        r = subset_escape_check(F, k)
        assert r.verdict == "verified" and r.cases_checked == F.q and r.min_count_observed == 0


def test_subset_sum_examples():
    r = subset_sum_bridge(F5, 3, a_km1=0, a_k=1)
    assert r.verdict == "verified"
    assert r.notes["subsets_per_target"] == {"0": 2}
    r = subset_sum_bridge(F7, 3)
    assert r.verdict == "verified" and r.cases_checked == 7
    assert all(v > 0 for v in r.notes["subsets_per_target"].values())
    r = subset_sum_bridge(F5, 5, a_km1=0)
    assert r.notes["subsets_per_target"] == {"0": 1}  # sum of F_5 is 0
    r = subset_sum_bridge(F5, 5, a_km1=1)
    assert r.notes["subsets_per_target"] == {"4": 0}
    r = subset_sum_bridge(F7, 3, S=[1, 2, 3, 4])
    # direct oracle on the subset
    for t, n in r.notes["subsets_per_target"].items():
        assert n == sum(1 for T in itertools.combinations([1, 2, 3, 4], 3) if sum(T) % 7 == int(t))


def test_permutation_polynomial_search():
    for F in (F5, F7, F8, F9):
        f = find_permutation_polynomial(F)
        assert len({f(a) for a in F.elements()}) == F.q


def test_remarks():
    for F in (F5, F7, F9, F8):
        r = verify_remarks(F)
        assert r.verdict == "verified", r.violations
    r = verify_remarks(F5)
    assert 2 in r.notes["k2_hm_degrees"]  # N_5(h_2(x1, x2)) = 1


def test_reports_are_deterministic():
    a, b = scan_deep_holes(F7, 3), scan_deep_holes(F7, 3)
    assert _strip(a) == _strip(b)


def test_worker_pool_matches_serial():
    idx = np.arange(7 ** 2 * 6, dtype=np.int64)
    tasks = [(7, 1, 3, 2, 2, idx[lo:lo + 100]) for lo in range(0, len(idx), 100)]
    serial = np.concatenate(_run_tasks(_bound_chunk, tasks, 1))
    pooled = np.concatenate(_run_tasks(_bound_chunk, tasks, 2))
    assert (serial == pooled).all()
    a = scan_deep_holes(F7, 3, threads=2)
    b = scan_deep_holes(F7, 3, threads=1)
    assert _strip(a) == _strip(b)
