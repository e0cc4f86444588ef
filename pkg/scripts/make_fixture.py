"""Regenerate the bundled synthetic data set used by ``wsdkit ... --fixture``."""

import argparse
import shutil
from pathlib import Path

from wsdkit.synth import write_fixture

DEFAULT = Path(__file__).resolve().parents[1] / "src" / "wsdkit" / "data" / "fixture"

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DEFAULT)
    ap.add_argument("--n-per-lemma", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if args.out.exists():
        shutil.rmtree(args.out)
    paths = write_fixture(args.out, args.n_per_lemma, args.seed)
    for name, p in paths.items():
        print(f"{name:12s} {p}")
