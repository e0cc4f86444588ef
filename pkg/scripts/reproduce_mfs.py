"""Manual check on real resources: the 8-noun most-frequent-sense row.

Point ``--config`` at an INI file whose [data] section names native-format
exports of a full sense inventory, taxonomy, glosses and sense-tagged
corpus. The expected MFS precision for the eight nouns is about 0.69 with
full coverage; anything within 0.03 is a pass.

    python scripts/reproduce_mfs.py --config real.ini
"""

import argparse
import sys

from wsdkit.config import load_config, load_data
from wsdkit.eval import run_cv

NOUNS = ("account", "age", "church", "duty", "head", "interest", "member", "people")
EXPECTED, TOLERANCE = 0.69, 0.03

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--config", required=True)
    args = ap.parse_args()
    cfg = load_config(args.config).with_overrides(targets=NOUNS)
    data = load_data(cfg)
    row = run_cv(data.corpus, cfg.targets, "mfs", cfg.k, cfg.seed, data.resources)
    ok = abs(row.precision - EXPECTED) <= TOLERANCE and row.coverage == 1.0
    print(f"mfs precision {row.precision:.4f} coverage {row.coverage:.4f} "
          f"(expected {EXPECTED} +- {TOLERANCE}, coverage 1.0): {'PASS' if ok else 'FAIL'}")
    sys.exit(0 if ok else 1)
