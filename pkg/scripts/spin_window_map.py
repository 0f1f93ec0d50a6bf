#!/usr/bin/env python3
"""Map of the nonnegativity window width over the expectation square.

Prints a coarse character map of w(Z, X) = tHi - tLo on [-1, 1]^2 and a
few cross sections.  The width is 2 - |Z+X| - |Z-X| = 2 - 2 max(|Z|, |X|):
widest for the maximally mixed point, collapsing to a single admissible t
on the square's boundary.
"""

import numpy as np

from quasiprob.spin import nonneg_window

LEVELS = " .:-=+*#%@"


def main():
    n = 41
    axis = np.linspace(-1.0, 1.0, n)
    widths = np.empty((n, n))
    for i, z in enumerate(axis):
        for j, x in enumerate(axis):
            lo, hi = nonneg_window(z, x)
            widths[i, j] = hi - lo

    print("window width over (Z horizontal, X vertical), '@' widest:")
    for j in range(n - 1, -1, -1):
        row = ""
        for i in range(n):
            k = int(round(widths[i, j] / 2.0 * (len(LEVELS) - 1)))
            row += LEVELS[max(0, min(k, len(LEVELS) - 1))]
        print("  " + row)

    print()
    print(f"{'Z':>6s}{'X':>6s}{'tLo':>12s}{'tHi':>12s}{'width':>12s}")
    r = np.sqrt(0.5)
    for z, x in [(0.0, 0.0), (1.0, 0.0), (0.0, -1.0), (r, r), (0.5, 0.25), (-0.3, 0.9)]:
        lo, hi = nonneg_window(z, x)
        print(f"{z:6.2f}{x:6.2f}{lo:12.6f}{hi:12.6f}{hi - lo:12.6f}")


if __name__ == "__main__":
    main()
