"""Walk through root systems and the convex orders their reduced words induce.

Run from the repository root:  python3 demos/roots_and_convex_orders.py [TYPE]
"""

import sys

from quiver_orders import (
    adapted_word_of_w0,
    build_order,
    cartan_datum,
    linear_quiver,
    pairing_sign_report,
    positive_roots,
    reduced_words_of_w0,
)


def show_roots(label):
    datum = cartan_datum(label)
    roots = positive_roots(datum)
    print(f"{label}: {len(roots)} positive roots (simple-root coordinates)")
    for r in roots:
        print("   ", " ".join(str(c) for c in r))
    print()


def show_reduced_words(label):
    datum = cartan_datum(label)
    words = reduced_words_of_w0(datum)
    print(f"{label}: w0 has {len(words)} reduced words")
    for w in words[:6]:
        print("   ", " ".join(str(i) for i in w))
    if len(words) > 6:
        print(f"    ... and {len(words) - 6} more")
    print()


def show_order(label, word):
    datum = cartan_datum(label)
    order = build_order(datum, word)
    print(f"convex order from the word {word} in {label}:")
    print("  k   beta_k        gamma_k")
    for k in range(order.length):
        b = " ".join(str(c) for c in order.beta[k])
        g = " ".join(str(c) for c in order.gamma[k])
        print(f"  {k + 1}   ({b})      ({g})")
    print("  pairing matrix C[k][l] = <gamma_k, beta_l>:")
    for row in order.pairings:
        print("   ", "\t".join(str(v) for v in row))
    report = pairing_sign_report(order)
    print(f"  unit diagonal, <=0 above, >=0 below: {report.ok}")
    print()


def show_adapted(label):
    Q = linear_quiver(label)
    word = adapted_word_of_w0(Q)
    print(f"sink-adapted word for the linear {label} quiver {Q.arrows}:")
    print("   ", " ".join(str(i) for i in word))
    # note: picking the least sink greedily at each step does not stay
    # reduced here; the search has to backtrack to find this word
    print()


def main():
    label = sys.argv[1] if len(sys.argv) > 1 else "A3"
    show_roots(label)
    show_reduced_words("A2")
    show_reduced_words("A3")
    show_order("A2", (2, 1, 2))
    show_adapted("A3")


if __name__ == "__main__":
    main()
