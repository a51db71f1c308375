"""Partition the non-permutation ASMs of a given size by Cohen-Macaulayness.

Every matrix Schubert variety is Cohen-Macaulay, so permutation
matrices are excluded up front; the interesting question is how the
remaining ASM varieties split.  For size 4 the run takes well under a
second; size 5 visits 309 non-permutation matrices and finishes in a
few minutes.

    python3 scripts/cm_partition.py            # size 4
    python3 scripts/cm_partition.py --size 5 --show-non-cm
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from asmschub.asm import as_permutation, enumerate_asms, matrix_to_text
from asmschub.decomp import is_schubert_cm


@dataclass(frozen=True)
class Config:
    size: int = 4
    show_non_cm: bool = False
    data_dir: str | None = None


def run(cfg: Config) -> tuple[list, list]:
    pool = [
        A for A in enumerate_asms(cfg.size, data_dir=cfg.data_dir)
        if as_permutation(A) is None
    ]
    cm, non_cm = [], []
    t0 = time.perf_counter()
    for k, A in enumerate(pool, start=1):
        (cm if is_schubert_cm(A) else non_cm).append(A)
        if k % 25 == 0:
            print(f"  ...{k}/{len(pool)} checked ({time.perf_counter() - t0:.1f}s)")
    print(f"size {cfg.size}: {len(pool)} non-permutation ASMs")
    print(f"  Cohen-Macaulay:      {len(cm)}")
    print(f"  not Cohen-Macaulay:  {len(non_cm)}")
    print(f"  wall time:           {time.perf_counter() - t0:.1f}s")
    if cfg.show_non_cm:
        for A in non_cm:
            print()
            print(matrix_to_text(A.rows))
    return cm, non_cm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=4)
    ap.add_argument("--show-non-cm", action="store_true")
    ap.add_argument("--data-dir", default=None)
    a = ap.parse_args()
    run(Config(size=a.size, show_non_cm=a.show_non_cm, data_dir=a.data_dir))


if __name__ == "__main__":
    main()
