"""Write the shipped triangulation, algebra and cocycle files into fixtures/."""
import argparse
from pathlib import Path

from tlft.cocycles import serialize_cocycle, trivial_system
from tlft.fixtures import write_all
from tlft.groups import cyclic
from tlft.statesum2d import group_algebra, serialize_algebra


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    paths = write_all(out)
    (out / "z2grp.alg").write_text(serialize_algebra(group_algebra(cyclic(2))), encoding="utf-8")
    broken = trivial_system(cyclic(2), 2)
    broken.alpha[0, 1, 1, 1] = 1
    (out / "broken.cyc").write_text(serialize_cocycle(broken, "Z2"), encoding="utf-8")
    (out / "cubic_z2.dw3").write_text(
        "group Z2\nrootorder 2\nalpha3 1 1 1 1\n", encoding="utf-8")
    for p in paths:
        print(p)


if __name__ == "__main__":
    main()
