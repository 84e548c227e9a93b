"""Regenerate the Segre-product fixture presentations by elimination.

The two Segre kernels are the only expensive Groebner runs in the project
(minutes each), so their results ship as fixture files; this script rebuilds
them from scratch.  Every generator it emits is rechecked cheaply at test time
by mapping it into the target ring and reducing to zero.

Usage: python3 scripts/make_segre_fixtures.py [outdir]
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lcverify import groebner  # noqa: E402
from lcverify.presentations import dump_presentation, present_ring  # noqa: E402

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "src" / "lcverify" / "fixtures"


def ex1_segre():
    # target: A = K[a,b,c]/(c^2 - a(a-b)(a-2b)(a-3b)) times B = K[s,t]
    T = present_ring(
        ["a", "b", "c", "s", "t"], [1, 1, 2, 1, 1],
        ["c^2 - a*(a-b)*(a-2*b)*(a-3*b)"], "ex1.AB")
    R = T.ring
    imgs = [R.parse(e) for e in
            ["a*s", "b*t", "b*s", "a*t", "c*s^2", "c*s*t", "c*t^2"]]
    src = [("x", 1), ("y", 1), ("z", 1), ("w", 1),
           ("e0", 2), ("e1", 2), ("e2", 2)]
    rring, ker = groebner.ring_map_kernel(src, list(T.relations), imgs)
    return present_ring(rring.names, rring.degrees, ker, "ex1.R"), T, src, imgs


def ex2_segre():
    # target: A = K[x,y,z,w]/(w^6+w^3+1, w^3 x^3 + w^6 y^3 + z^3) times K[s,t];
    # w is a degree-0 constant that survives into the kernel presentation.
    T = present_ring(
        ["x", "y", "z", "s", "t", "w"], [1, 1, 1, 1, 1, 0],
        ["w^6 + w^3 + 1", "w^3*x^3 + w^6*y^3 + z^3"], "ex2.AB")
    R = T.ring
    imgs = [R.parse(e) for e in
            ["x*s", "y*s", "z*s", "x*t", "y*t", "z*t"]]
    src = [("sx", 1), ("sy", 1), ("sz", 1), ("tx", 1), ("ty", 1), ("tz", 1)]
    rring, ker = groebner.ring_map_kernel(src, list(T.relations), imgs,
                                          constants=("w",))
    return present_ring(rring.names, rring.degrees, ker, "ex2.R"), T, src, imgs


def main():
    for build, fname in ((ex1_segre, "ex1R.pres"), (ex2_segre, "ex2R.pres")):
        t0 = time.time()
        pres, _, _, _ = build()
        path = OUT / fname
        path.write_text(dump_presentation(pres))
        print(f"{fname}: {len(pres.relations)} relations in {time.time() - t0:.0f}s")


if __name__ == "__main__":
    main()
