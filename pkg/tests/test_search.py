import pytest

import oracles
from conftest import ARIKAN, kron_power
from polarsearch import Kernel, KernelCode, SearchConfig, check_candidate, kernel_search, verify_kernel
from polarsearch.pdp import PdpQuery, enumerate_pdps

L8 = (1, 2, 2, 4, 2, 4, 4, 8)


def rows_as_lists(k):
    return tuple(tuple(oracles.to_bits(r)) for r in k.to_strs())


@pytest.mark.parametrize("pdp", [(1, 2), (1, 2, 2, 4), L8])
def test_finds_kernel(pdp):
    out = kernel_search(SearchConfig(pdp))
    assert len(out.kernels) == 1
    k = out.kernels[0]
    assert verify_kernel(k) == pdp
    assert k.is_polarizing()
    assert not out.exhausted and not out.budget_expired


def test_arikan_found_first():
    out = kernel_search(SearchConfig((1, 2)))
    assert out.kernels[0] == Kernel.from_strs(ARIKAN)


def test_infeasible_exhausts():
    out = kernel_search(SearchConfig((1, 2, 3), enable_distribution_prune=False))
    assert out.kernels == [] and out.exhausted and not out.budget_expired


def test_row_weights_equal_profile():
    out = kernel_search(SearchConfig(L8, max_kernels=None))
    assert out.kernels
    for k in out.kernels:
        assert [r.bit_count() for r in k.rows] == list(L8)


def small_profiles(n):
    q = PdpQuery(n, 0.0, enforce_lemma4=False, enforce_lemma5=False)
    return list(enumerate_pdps(q))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_complete_without_pruning(n):
    for pdp in small_profiles(n) + [(1,) * n, (2,) * n]:
        cfg = SearchConfig(pdp, max_kernels=None, enable_syndrome_prune=False,
                           enable_distribution_prune=False)
        out = kernel_search(cfg)
        assert out.exhausted
        got = sorted(rows_as_lists(k) for k in out.kernels)
        want = sorted(tuple(map(tuple, rows)) for rows in oracles.all_kernels_with_row_weights(pdp))
        assert got == want, pdp


@pytest.mark.parametrize("n", [3, 4, 5])
def test_syndrome_prune_keeps_verdict(n):
    for pdp in small_profiles(n):
        full = kernel_search(SearchConfig(pdp, max_kernels=None, enable_syndrome_prune=False,
                                          enable_distribution_prune=False))
        pruned = kernel_search(SearchConfig(pdp, max_kernels=None, enable_distribution_prune=False))
        assert bool(full.kernels) == bool(pruned.kernels), pdp
        assert {k.rows for k in pruned.kernels} <= {k.rows for k in full.kernels}
        assert pruned.stats.cosets_evaluated <= full.stats.cosets_evaluated


def test_distribution_prune_finds_subset():
    full = kernel_search(SearchConfig(L8, max_kernels=None, enable_distribution_prune=False))
    pruned = kernel_search(SearchConfig(L8, max_kernels=None))
    assert pruned.kernels
    assert {k.rows for k in pruned.kernels} <= {k.rows for k in full.kernels}
    assert pruned.stats.distribution_prunes > 0


def test_global_distributions_prunes_more():
    local = kernel_search(SearchConfig(L8, max_kernels=None))
    glob = kernel_search(SearchConfig(L8, max_kernels=None, global_distributions=True))
    assert glob.kernels
    assert glob.stats.cosets_evaluated <= local.stats.cosets_evaluated


def test_deterministic():
    a = kernel_search(SearchConfig(L8, max_kernels=5))
    b = kernel_search(SearchConfig(L8, max_kernels=5))
    assert [k.rows for k in a.kernels] == [k.rows for k in b.kernels]
    assert a.stats.cosets_evaluated == b.stats.cosets_evaluated


def test_max_kernels_caps():
    out = kernel_search(SearchConfig(L8, max_kernels=3, enable_distribution_prune=False))
    assert len(out.kernels) == 3 and not out.exhausted


@pytest.mark.parametrize("threshold", [0, 4, 8])
def test_threshold_does_not_change_result(threshold):
    base = kernel_search(SearchConfig(L8, max_kernels=None))
    other = kernel_search(SearchConfig(L8, max_kernels=None, threshold=threshold))
    assert [k.rows for k in other.kernels] == [k.rows for k in base.kernels]


def test_time_budget_expires():
    # a 16x16 profile with every filter off has a huge tree
    pdp = tuple(int(x) for x in "1,2,2,2,2,4,4,4,4,4,4,6,6,8,8,16".split(","))
    cfg = SearchConfig(pdp, max_kernels=None, time_budget=0.3,
                       enable_distribution_prune=False, enable_syndrome_prune=False)
    out = kernel_search(cfg, verify=False)
    assert out.budget_expired and not out.exhausted
    assert out.stats.elapsed < 5


def test_parallel_matches_serial():
    serial = kernel_search(SearchConfig(L8, max_kernels=None))
    par = kernel_search(SearchConfig(L8, max_kernels=None, threads=2))
    assert [k.rows for k in par.kernels] == [k.rows for k in serial.kernels]
    assert par.exhausted == serial.exhausted
    assert par.stats.cosets_evaluated == serial.stats.cosets_evaluated
    first = kernel_search(SearchConfig(L8, threads=2))
    assert first.kernels[0] == serial.kernels[0] and not first.exhausted


def test_parallel_rejects_global_sets():
    with pytest.raises(ValueError):
        SearchConfig(L8, threads=2, global_distributions=True)


@pytest.mark.parametrize("bad", [dict(pdp=(0, 2)), dict(pdp=(1, 3)), dict(pdp=(1, 2), max_kernels=0),
                                 dict(pdp=(1, 2), threads=0)])
def test_config_validation(bad):
    with pytest.raises(ValueError):
        SearchConfig(**bad)


def test_check_candidate_examples():
    code = KernelCode.from_strs(["1100", "1010", "1111"])
    assert check_candidate(0b0001, code, 1) == (True, (0, 4, 0, 4, 0))
    # threshold 0 forces the direct walk, which aborts on the weight-1 word
    accept, dist = check_candidate(0b0001, code, 2, threshold=0)
    assert not accept and dist is None
    accept, dist = check_candidate(0b0001, code, 2, threshold=100)
    assert not accept and dist == (0, 4, 0, 4, 0)
    assert check_candidate(0b1111, KernelCode.zero(4), 4) == (True, (0, 0, 0, 0, 1))
    # a codeword is at distance 0 from the code
    assert not check_candidate(0b0110, code, 2)[0]


def test_kron_power_profile_is_searchable():
    # F2^{x3} has the L8 multiset but a different order
    k = Kernel.from_strs(kron_power(3))
    d = verify_kernel(k)
    assert sorted(d) == sorted(L8)
    out = kernel_search(SearchConfig(d))
    assert out.kernels and verify_kernel(out.kernels[0]) == d
