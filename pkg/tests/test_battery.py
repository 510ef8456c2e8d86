from hopfspecies.battery import (
    BatteryConfig,
    EXTRA_SUITES,
    SUITES,
    check_adding_empty_sets,
    check_fock_ports,
    check_pf_freeness,
    deleted_blocks,
    run_battery,
    weak_compositions,
)


def test_weak_compositions_are_one_per_size_pattern():
    # size <= 1 and length <= 2: (), (∅), (a), (∅,∅), (a,∅), (∅,a)
    assert len(list(weak_compositions(1, 2))) == 6


def test_deleted_blocks_match_park():
    gamma = (("a",), (), ("b", "c", "d"), (), ("e",), (), ())
    assert deleted_blocks(gamma) == {1, 6}


def test_corrected_lemma_holds_and_literal_one_fails():
    assert check_adding_empty_sets(3, 5, 2, literal=False).ok
    rep = check_adding_empty_sets(3, 5, 2, literal=True)
    assert not rep.ok and rep.counterexample["gamma"] == ((), ("a", "b"))


def test_fock_ports_and_freeness_small():
    assert all(r.ok for r in check_fock_ports(2))
    assert check_pf_freeness(3).ok


def test_run_battery_small():
    config = BatteryConfig(max_size=2, r_max=3, max_degree=2, dims_up_to=4)
    results = run_battery(config, [name for name in SUITES if name != "dims"])
    assert set(results) == set(SUITES) - {"dims"}
    assert all(r.ok for reps in results.values() for r in reps)
    assert "park-lemma-literal" in EXTRA_SUITES
