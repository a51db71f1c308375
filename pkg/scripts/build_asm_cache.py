"""Precompute ASM enumerations into text caches for fast reloading.

`enumerate_asms` consults `$ASMSCHUB_DATA_DIR/asm<n>.txt` before
falling back to backtracking, which matters for n = 6 (7436 matrices)
and n = 7 (218348).  This script fills that cache.

    python3 scripts/build_asm_cache.py --max-size 6 --data-dir ~/.cache/asmschub
"""

from __future__ import annotations

import argparse
import os
import time
from dataclasses import dataclass

from asmschub.asm import enumerate_asms, matrices_to_text


@dataclass(frozen=True)
class Config:
    max_size: int = 6
    data_dir: str = "data"


def run(cfg: Config) -> None:
    os.makedirs(cfg.data_dir, exist_ok=True)
    for n in range(1, cfg.max_size + 1):
        path = os.path.join(cfg.data_dir, f"asm{n}.txt")
        if os.path.exists(path):
            print(f"asm{n}.txt exists, skipping")
            continue
        t0 = time.perf_counter()
        asms = enumerate_asms(n)
        with open(path, "w") as fh:
            fh.write(matrices_to_text(asms))
        print(f"asm{n}.txt: {len(asms)} matrices ({time.perf_counter() - t0:.1f}s)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--data-dir", default="data")
    a = ap.parse_args()
    run(Config(max_size=a.max_size, data_dir=a.data_dir))


if __name__ == "__main__":
    main()
