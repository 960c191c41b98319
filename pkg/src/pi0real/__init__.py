"""Real component groups of connected reductive groups from root data."""

from .engine import (
    CheckReport,
    Pi0Result,
    Pi1Result,
    cartan_check,
    h0_pi1,
    matsumoto_check,
    pi0,
    pi0_theorem5,
    pi0_theorem6,
    pi0_torus,
    pi1_alg,
)
from .gamma_lattice import GammaLattice, TateH0Result, h0_rank_oracle, tate_h0
from .real_form import RealFormSpec, catalog, catalog_ref, real_rank, validate_form
from .root_datum import RootDatum, gl, product, simple_adjoint, simple_sc, torus, validate
from .zlattice import FiniteAbelianGroup, IntMatrix, SmithForm, hnf, snf

__version__ = "0.1.0"
