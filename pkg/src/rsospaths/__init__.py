"""Exact generating functions for RSOS lattice paths in the ABF and
parafermion weightings, with bosonic, fermionic, recursive and partition
forms that can be checked against each other."""
from .errors import ExcludedCaseError, MoveError, ParameterError, UndefinedTransformError
from .qlaurent import LaurentPoly, gaussian_binomial
from .paths import FamilyParams, Path, enumerate_paths, gf, gf_restricted
from .striking import StrikingSequence, m_value, path_of, striking_of, weight_ef
from .closedforms import bosonic_chi, dual, fermionic_abf, fermionic_para, parity_vectors
from .hookdiff import Partition, d_function, path_to_partition
from .transforms import (
    MnSystem,
    ParticleConfig,
    apply_moves,
    b_transform,
    chi_by_recursion,
    decompose,
    insert_particles,
    particle_content,
)

__version__ = "0.1.0"
