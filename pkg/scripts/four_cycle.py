"""Lower ideal of a 4-cycle in the restriction order, with Möbius values to the top."""
from hopfspecies import posets
from hopfspecies.monoids import BIJ

SIGMA = (("a", "d", "c", "b"),)


def main():
    values = posets.mobius_to_top(SIGMA)
    print("rank sizes from the top:", posets.rank_sizes(SIGMA))
    for k in sorted({len(t) for t in values}):
        row = [f"{BIJ.pretty(t)}:{values[t]}" for t in values if len(t) == k]
        print(f"{k} cycles  " + "  ".join(row))
    print("hasse edges:", len(posets.hasse_edges(SIGMA)))
    p = posets.powersum((("a", "d"), ("b", "c")))
    print("p[(ad)(bc)] =", "  ".join(f"{int(c):+} {BIJ.pretty(t)}" for t, c in p.sorted_items()))


if __name__ == "__main__":
    main()
