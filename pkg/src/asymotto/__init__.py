"""Thermodynamics of asymmetrically driven harmonic quantum Otto cycles."""
from .adiabaticity import (ConvergenceError, FrequencyProtocol, IntegratorConfig,
                           lambda_numeric, lambda_sudden)
from .asym_engine import (eta_sc, eta_se, heat_hot_sc, heat_hot_se, pwc_sc, pwc_se, work_sc,
                          work_se)
from .cubic import CubicCoefficients, cubic_real_roots
from .cycle_core import (AdiabaticityPair, BathPair, CycleOutcome, FrequencyPair,
                         NotAnEngineError, OperationalMode, efficiency, heats_and_work)
from .high_temp import (ReducedParams, Scheme, eta_intsec, eta_mw_sc, eta_mw_se, eta_up_sc,
                        eta_up_se, ht_efficiency, ht_heats, ht_work, zstar_sc, zstar_se)
from .phase_map import PhaseGrid, classify, phase_grid, region_boundaries
from .verify_bounds import Histogram, SamplingPlan, sample_efficiencies

__version__ = "0.1.0"
