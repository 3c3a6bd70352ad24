"""smashkit: exact-arithmetic construction and verification of smash
products, smash coproducts and smash biproducts of finite-dimensional
algebras, coalgebras and Hopf algebras."""

from .errors import SmashkitError
from .fields import FieldSpec, Scalar, find_root_of_unity
from .linalg import Matrix, TensorIndex, invert, kron, solve, switch
from .report import Check, Report
from .structures import (
    BialgebraCandidate,
    FiniteDimAlgebra,
    FiniteDimCoalgebra,
    HopfAlgebra,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_hopf,
    compute_antipode,
    dual_of_algebra,
    dual_of_coalgebra,
)
from .smash import SmashData, build_smash, is_smash_product, recover_R
from .cosmash import CosmashData, build_cosmash, duality_bridge, is_smash_coproduct, recover_W
from .biproduct import (
    BiproductData,
    build_biproduct,
    check_dp_conditions,
    check_r_smash,
    check_w_smash,
    factorize_bialgebra,
    is_smash_biproduct,
    schrodinger_double,
)
from .hopfmod import TwistedHopfModule, check_compatibility, r_long, r_switch, r_yetter_drinfeld
from .catalog import en, pointed_hopf, quaternion, radford, sweedler, taft

__version__ = "0.1.0"

__all__ = [
    "BialgebraCandidate",
    "BiproductData",
    "Check",
    "CosmashData",
    "FieldSpec",
    "FiniteDimAlgebra",
    "FiniteDimCoalgebra",
    "HopfAlgebra",
    "Matrix",
    "Report",
    "Scalar",
    "SmashData",
    "SmashkitError",
    "TensorIndex",
    "TwistedHopfModule",
    "build_biproduct",
    "build_cosmash",
    "build_smash",
    "check_algebra",
    "check_bialgebra",
    "check_coalgebra",
    "check_compatibility",
    "check_dp_conditions",
    "check_hopf",
    "check_r_smash",
    "check_w_smash",
    "compute_antipode",
    "dual_of_algebra",
    "dual_of_coalgebra",
    "duality_bridge",
    "en",
    "factorize_bialgebra",
    "find_root_of_unity",
    "invert",
    "is_smash_biproduct",
    "is_smash_coproduct",
    "is_smash_product",
    "kron",
    "pointed_hopf",
    "quaternion",
    "r_long",
    "r_switch",
    "r_yetter_drinfeld",
    "radford",
    "recover_R",
    "recover_W",
    "schrodinger_double",
    "solve",
    "sweedler",
    "switch",
    "taft",
]
