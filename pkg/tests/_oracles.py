"""Frozen reference values used across the test suite.

Each constant carries its derivation so a reviewer can recompute it by
hand (or with a few lines of sympy) without trusting the library code.
"""

import numpy as np

# Ground-state Wigner function: for psi0(x) = pi^{-1/4} e^{-x^2/2} the
# transform evaluates to (1/pi) e^{-x^2-p^2}; its value at the origin.
W0_AT_ORIGIN = 1.0 / np.pi

# First excited state: W1(x,p) = (1/pi)(2(x^2+p^2) - 1) e^{-(x^2+p^2)}.
W1_AT_ORIGIN = -1.0 / np.pi

# Negative volume of W1. In polar coordinates the negative part is
# (1/pi)(2r^2-1)e^{-r^2} on r < 1/sqrt(2); integrating 2*pi*r dr gives
# -(2 e^{-1/2} - 1).
W1_NEGATIVE_VOLUME = 2.0 * np.exp(-0.5) - 1.0

# The Riemann sum of the negative part on [-6,6]^2 at 256^2 lands close
# to but not exactly on the analytic value; tests allow this gap.
W1_NEGATIVE_VOLUME_GRID_TOL = 5e-5

# Characteristic function of a coherent state at (x0, p0), unit width,
# hbar = 1: <e^{-i(aX+bP)}> = e^{-i(a x0 + b p0)} e^{-(a^2+b^2)/4}.
def coherent_cf(alpha, beta, x0=0.0, p0=0.0):
    return np.exp(-1j * (alpha * x0 + beta * p0)) * np.exp(-(alpha**2 + beta**2) / 4.0)


# Marginal of the ground state along any unit direction (a,b): z = a x + b p
# is Gaussian with variance 1/2, density e^{-z^2}/sqrt(pi).
def ground_marginal(z):
    return np.exp(-(z**2)) / np.sqrt(np.pi)


# Along the non-unit direction (2,0): z = 2x has density
# |psi0(z/2)|^2 / 2 = e^{-z^2/4} / (2 sqrt(pi)).
def ground_marginal_d20(z):
    return np.exp(-(z**2) / 4.0) / (2.0 * np.sqrt(np.pi))


# First excited state along any unit direction: the state is rotation
# invariant in phase space, density 2 z^2 e^{-z^2} / sqrt(pi).
def excited_marginal(z):
    return 2.0 * z**2 * np.exp(-(z**2)) / np.sqrt(np.pi)


# Rectangle tamper: adding c * 1_{|x|<=w, |p|<=h} leaves the axis marginals
# alone only after the matching subtraction; along the diagonal
# (1,1)/sqrt(2) the added box contributes a bump whose peak is
# c * sqrt(2) * min(w, h) * 2 at z = 0 (chord length of the square's
# diagonal section).  For w = h = 1.5, c = 0.05 the peak residual is
# 3 c sqrt(2).
RECT_DIAGONAL_PEAK = 3.0 * 0.05 * np.sqrt(2.0)

# Smooth tamper c * x p e^{-x^2-p^2}: both axis marginals vanish by odd
# symmetry.  Along (1,1)/sqrt(2), substituting u=(x+p)/sqrt(2) and
# integrating out v gives c * (sqrt(pi)/2)(u^2 - 1/2) e^{-u^2}; the peak
# absolute value sits at u = 0, so the residual is c * sqrt(pi)/4.
SMOOTH_DIAGONAL_PEAK = 0.1 * np.sqrt(np.pi) / 4.0

# Moyal pairing of the Gaussian symbol e^{-x^2-p^2}.  Its Weyl operator is
# (1/2)|0><0|, so the expectation in the oscillator ground state is 1/2,
# zero in the first excited state, and for a coherent state at (2,3) it is
# (1/2)|<0|coh>|^2 = (1/2) e^{-(x0^2+p0^2)/2} = (1/2) e^{-13/2}.
MOYAL_GAUSS_GROUND = 0.5
MOYAL_GAUSS_EXCITED = 0.0
MOYAL_GAUSS_COHERENT = 0.5 * np.exp(-6.5)

# Quantum expectations for the Moyal table, from <X>=x0, <P>=p0,
# Var X = Var P = 1/2 in a unit-width coherent state, and
# <XP+PX>/2 = x0 p0; the Hermite states have <x^2> = <p^2> = n + 1/2.
MOYAL_RHS = {
    ("x", "ground"): 0.0,
    ("p", "ground"): 0.0,
    ("x2", "ground"): 0.5,
    ("p2", "ground"): 0.5,
    ("xp", "ground"): 0.0,
    ("gauss", "ground"): MOYAL_GAUSS_GROUND,
    ("x", "excited"): 0.0,
    ("p", "excited"): 0.0,
    ("x2", "excited"): 1.5,
    ("p2", "excited"): 1.5,
    ("xp", "excited"): 0.0,
    ("gauss", "excited"): MOYAL_GAUSS_EXCITED,
    ("x", "coherent(2,3)"): 2.0,
    ("p", "coherent(2,3)"): 3.0,
    ("x2", "coherent(2,3)"): 4.5,
    ("p2", "coherent(2,3)"): 9.5,
    ("xp", "coherent(2,3)"): 6.0,
    ("gauss", "coherent(2,3)"): MOYAL_GAUSS_COHERENT,
}

# <psi0| e^{-i(X+P)} |psi0> = CF(1,1) = e^{-(1+1)/4} = e^{-1/2}.
DISPLACEMENT_GROUND = np.exp(-0.5)

# Spin family at t = 0 for the diagonal pure state with
# <Z> = <X> = 1/sqrt(2): f-- = (1 + t - Z - X)/4 = (1 - sqrt(2))/4.
SPIN_DIAG_FMM = (1.0 - np.sqrt(2.0)) / 4.0

# Window endpoints for the same state: lower bounds are -1-Z-X and
# -1+Z+X, upper bounds 1+Z-X and 1-Z+X, giving (sqrt(2)-1, 1).
SPIN_DIAG_WINDOW = (np.sqrt(2.0) - 1.0, 1.0)

# Eigenvalues of sigma_z + sigma_x are +/- sqrt(2); the quasi-values of
# the distribution treat the pair (s_z, s_x) as independent signs, so the
# observable z+x takes values 2, 0, -2 instead.
ZX_EIGENVALUES = (-np.sqrt(2.0), np.sqrt(2.0))
ZX_QUASI_VALUES = (2.0, 0.0, -2.0)

# Hand-picked four-outcome assignment: negatives sum to -0.1.
DISCRETE_NEGATIVE_VOLUME = 0.1
