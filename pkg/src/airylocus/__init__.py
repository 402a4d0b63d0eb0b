"""Eigenvalue dynamics of the complexified harmonic boundary problem.

The library computes, for the two-point boundary problem with a purely
imaginary linear potential on [-1, 1], everything its spectrum does as the
stiffness parameter varies: the spectrum at any parameter value, continuation
of individual eigenvalue branches through their collisions, the curves that
carry the real part of the spectral locus, and the closed-form critical
values at which eigenvalue pairs merge and turn complex.

Layers, bottom up: ``ddcore`` (double-double arithmetic), ``airy`` (scaled
complex special functions), ``rootfind`` (argument-principle root finding),
``zeros`` (ray zeros and critical values), ``locus`` (determinant and
spectra), ``curves`` (continuation), ``shooting`` (independent ODE oracle),
``verify`` (self-checks), ``cli`` (command-line front end).
"""

from .airy import (AI, BI, SQRT3, U_MINUS, U_PLUS, AiryEval, SolutionFamily,
                   Va, asymptotic_airy, eval_airy, eval_phi_series,
                   evaluation_scale, warmup, wronskian_residual)
from .curves import (GammaCurve, GammaMarkers, Trajectory, TrajectoryEvent,
                     detect_criticals_on_gamma, find_lambda_min, trace_gamma,
                     trace_lambda)
from .exceptions import (AiryLocusError, BracketingFailure, BranchLost,
                         ContourThroughRoot, DriftUnrecoverable,
                         MaxCountExceeded, NonConvergence, NotABranch,
                         SectorViolation, SeedDivergence, Unstable,
                         UnscaledOverflow)
from .locus import (EigenvalueRecord, SpectralPoint, default_re_max,
                    determinant, determinant_partials,
                    eigenfunction_boundary_residual, eigenvalues,
                    multiplicity_at)
from .rootfind import Rectangle, boundary_winding, complex_roots, newton_complex
from .shooting import real_eigenvalues_shooting, shoot
from .verify import (SCHEMA_VERSION, CheckResult, VerificationReport,
                     run_verification)
from .zeros import (KNOT, CriticalPair, RayZero, ZeroClassification,
                    bi_quadrant_zeros, classify_va_zeros, critical_pairs,
                    negative_axis_zeros, ray_zeros)

__version__ = "0.1.0"
