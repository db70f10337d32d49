"""Print the 3x3 table of families chosen by exponent-sum residues mod 3,
checking every entry by lifting a sample word."""

from liftcover.cover import lift_check
from liftcover.families import build_cover, classify_mod3
from liftcover.words import FreeWord


def main():
    print("o(a1) mod 3 \\ o(a2) mod 3 |" + "".join(f"{b:^14}" for b in range(3)))
    for a in range(3):
        cells = []
        for b in range(3):
            w = FreeWord(2, ((1, a + 3), (2, b - 6)))
            spec = classify_mod3(w, 1, 2)
            ok = lift_check(w, build_cover(spec)).closed
            cells.append(f"{spec.text}{'' if ok else '!'}")
        print(f"{a:^25} |" + "".join(f"{c:^14}" for c in cells))


if __name__ == "__main__":
    main()
