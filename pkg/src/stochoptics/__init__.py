"""Gaussian Wigner-function states of light read as random classical fields.

Closed forms for single- and two-mode gaussian states, zeropoint-subtracted
photodetection and polarization coincidences, each checked against seeded
Monte Carlo sampling and a truncated Fock-space oracle.
"""

from .detection import (
    CoincidenceResult,
    ModeSpec,
    PolarizerSetting,
    RateEstimate,
    UnattainableVisibility,
    Units,
    coincidence_closed,
    coincidence_mc,
    critical_n,
    field_intensity,
    malus_project,
    mc_rate,
    mean_rate,
    point_detector_rate,
    sup_visibility,
)
from .gaussian import (
    ChaoticP,
    DeltaP,
    Kind,
    SingleModeGaussian,
    TwoModeClass,
    TwoModeSignalP,
    TwoModeWigner,
    chaotic,
    classical_bound,
    classify_two_mode,
    coherent,
    convolve_vacuum,
    gaussian_eval,
    marginal_mode,
    signal_from_nx,
    single_mode_class,
    squeezed,
    two_mode_signal,
    two_mode_wigner,
    vacuum,
)
from .sampling import SampleBatch, sample_single_mode, sample_two_mode

__version__ = "0.1.0"
