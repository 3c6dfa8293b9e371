"""Exact additive-energy toolkit.

Counts energies of integer sets by mutually checking methods, synthesizes
sets with prescribed energy, enumerates attainable energy spectra, chains
coordinatewise products with near-constant energy ratios, and explores the
Sidon density-energy tradeoff in finite abelian groups.
"""

from .constructions import (
    BuildResult,
    LacunarySeq,
    StagedSet,
    admissible_interval,
    arithmetic_progression,
    build_with_target_energy,
    dense_ceiling,
    energy_drop,
    is_lacunary,
    lacunary_swap,
    mod4_residue,
    shifted_ap,
    staged_energy,
    staged_set,
    tail_contribution,
)
from .errors import BudgetError, default_budget
from .groups import (
    GroupSet,
    GroupSpec,
    TradeoffPoint,
    cauchy_bound_check,
    density_curve,
    group_energy,
    group_product,
    integer_sidon_check,
    is_sidon,
    sidon_energy,
    sidon_parabola,
    sum_profile,
    sumset,
    tradeoff_point,
)
from .intset import (
    DifferenceProfile,
    IntSet,
    affine_image,
    difference_profile,
    energy_by_quadruples,
    energy_from_profile,
    energy_oracle,
    incremental_energy_extend,
    max_energy,
    normalize,
)
from .products import (
    CubeExponentReport,
    MinRatioResult,
    ProductSet,
    RatioChain,
    cube_energy_exponent,
    materialize,
    min_ratio_empirical,
    product_energy,
    product_energy_oracle,
    product_set,
    ratio_chain,
)
from .spectrum import (
    EnergySpectrum,
    GapEntry,
    enumerate_spectrum,
    residue_check,
    spectrum_gaps,
    verify_witnesses,
)

__version__ = "0.1.0"
