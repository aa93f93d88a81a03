"""Run the exhaustive verification sweeps and print one line per sweep.

    python3 scripts/run_sweeps.py --max-n 3 --mutate
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from geomitosis import gz, pipedream, schubert


@dataclass
class SweepConfig:
    max_n_a: int = 3
    max_n_c: int = 3
    max_n_adapted: int = 4
    method: str = "geometric"
    mutate: bool = False


def sweeps(cfg: SweepConfig):
    for n in range(2, cfg.max_n_a + 1):
        yield f"kogan A{n}", lambda n=n: gz.verify_theorem_main(n, mutate=cfg.mutate, method=cfg.method)
    for n in range(2, cfg.max_n_c + 1):
        yield f"symplectic C{n}", lambda n=n: gz.verify_theorem_C(n, mutate=cfg.mutate, method=cfg.method)
    for n in range(2, cfg.max_n_adapted + 1):
        yield f"adapted A{n}", lambda n=n: gz.verify_adapted_A(n, mutate=cfg.mutate)
    for n in range(2, cfg.max_n_a + 1):
        yield f"km S{n + 1}", lambda n=n: gz.Report(*pipedream.km_failures(n, restrict_to_prefix=not cfg.mutate))
        yield f"schubert S{n + 1}", lambda n=n: schubert.verify_schubert(n, mutate=cfg.mutate)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3, help="largest rank for the type A and C sweeps")
    ap.add_argument("--max-n-adapted", type=int, default=4)
    ap.add_argument("--method", choices=("combinatorial", "geometric"), default="geometric")
    ap.add_argument("--mutate", action="store_true", help="drop the prefix bound of two-row mitosis")
    args = ap.parse_args()
    cfg = SweepConfig(args.max_n, args.max_n, args.max_n_adapted, args.method, args.mutate)
    for name, run in sweeps(cfg):
        start = time.monotonic()
        rep = run()
        print(f"{name:<16} {rep.summary():<32} {time.monotonic() - start:6.1f}s")


if __name__ == "__main__":
    main()
