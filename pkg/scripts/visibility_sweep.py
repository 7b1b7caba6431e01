"""Critical visibility for every paradox-realizing scenario up to a photon number.

    python scripts/visibility_sweep.py [max_n]
"""

import sys

from hardyparadox import noise
from hardyparadox.errors import DomainError
from hardyparadox.scenario import enumerate_scenarios


def main(max_n=6):
    for s in enumerate_scenarios(int(max_n)):
        try:
            curve = noise.visibility_threshold(s)
        except DomainError as exc:
            print(f"{s.label():9} --      ({exc})")
            continue
        print(f"{s.label():9} {curve.v_crit:.4f}  I(1) = {curve.i_at_v1:.4f}  I(0) = {curve.i_at_v0}")


if __name__ == "__main__":
    main(*sys.argv[1:])
