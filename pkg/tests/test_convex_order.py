from __future__ import annotations

import itertools

import pytest

from quiver_orders.convex_order import adapted_order, build_order, pairing_sign_report
from quiver_orders.quivers import adapted_word_of_w0, quiver
from quiver_orders.root_system import cartan_datum, pairing, reduced_words_of_w0


def test_a2_order_data_exact():
    datum = cartan_datum("A2")
    order = build_order(datum, (2, 1, 2))
    assert order.beta == ((0, 1), (1, 1), (1, 0))
    assert order.gamma == ((-1, 1), (0, 1), (1, 0))
    assert order.pairings == ((1, 0, -1), (1, 1, 0), (0, 1, 1))
    assert order.length == 3
    assert order.index_of((1, 1)) == 1  # 0-based position


def test_gamma_pairs_to_one_on_its_own_root():
    for label in ["A3", "D4"]:
        datum = cartan_datum(label)
        for word in reduced_words_of_w0(datum)[:4]:
            order = build_order(datum, word)
            for k in range(order.length):
                assert pairing(datum, order.gamma[k], order.beta[k]) == 1


@pytest.mark.parametrize(
    "label,words",
    [
        ("A2", None),  # all 2 words
        ("A3", None),  # all 16 words
    ],
)
def test_sign_pattern_all_words(label, words):
    datum = cartan_datum(label)
    for word in words or reduced_words_of_w0(datum):
        report = pairing_sign_report(build_order(datum, word))
        assert report.ok, report.violations


def test_sign_pattern_adapted_d4():
    datum = cartan_datum("D4")
    for flips in itertools.product((False, True), repeat=3):
        arrows = tuple(
            (j, i) if flip else (i, j) for (i, j), flip in zip(datum.edges, flips)
        )
        Q = quiver("D4", arrows)
        report = pairing_sign_report(adapted_order(Q))
        assert report.ok, report.violations


def test_build_order_rejects_non_reduced_words():
    datum = cartan_datum("A2")
    with pytest.raises(ValueError):
        build_order(datum, (1, 1, 2))
    with pytest.raises(ValueError):
        build_order(datum, (1, 2))  # too short for w0


def test_build_order_rejects_unadapted_word_for_quiver():
    Q = quiver("A2", ((1, 2),))
    datum = Q.datum
    with pytest.raises(ValueError):
        build_order(datum, (1, 2, 1), quiver=Q)


def test_adapted_order_carries_its_quiver():
    Q = quiver("A2", ((1, 2),))
    order = adapted_order(Q)
    assert order.quiver == Q
    assert order.word == (2, 1, 2)


def test_adjacent_commuting_swap_transposes_betas():
    # swapping commuting letters i,j with a_ij = 0 swaps the two betas
    datum = cartan_datum("A3")
    w = (1, 3, 2, 1, 3, 2)
    order = build_order(datum, w)
    swapped = build_order(datum, (3, 1, 2, 1, 3, 2))
    assert swapped.beta[0] == order.beta[1]
    assert swapped.beta[1] == order.beta[0]
    assert swapped.beta[2:] == order.beta[2:]


def test_first_gamma_relates_to_first_coweight():
    # gamma_1 = alpha_{i_1}^vee - omega_{i_1}^vee in coweight coordinates:
    # -s_{i_1}(omega_i) = alpha_i^vee - omega_i since <omega_i, alpha_i> = 1
    for label in ["A2", "A3", "D4"]:
        datum = cartan_datum(label)
        for word in reduced_words_of_w0(datum)[:2]:
            order = build_order(datum, word)
            i = word[0]
            expected = tuple(
                a - o
                for a, o in zip(datum.alpha_covec(i), datum.omega(i))
            )
            assert order.gamma[0] == expected
