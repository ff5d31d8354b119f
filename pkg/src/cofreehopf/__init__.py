"""Exact symbolic computation with quantum quasi-shuffle algebras,
cotensor coalgebras over abelian group algebras, their smash-product
realizations, and weight-1 Rota-Baxter operators."""

from .scalars import Scalar
from .elements import Element, apply_local
from .errors import ConfigError, StructuralError
from .checks import CheckResult
from .braid import (
    BraidingTable,
    Permutation,
    block_braiding,
    block_rotation,
    braid_lift,
    check_yang_baxter,
    diagonal_braiding,
    flip_braiding,
    reduced_word,
)
from .qalg import (
    BraidedAlgebraSpec,
    adjoin_unit,
    check_braided_algebra,
    check_quasi_shuffle_bialgebra,
    deconcat,
    deconcat_reduced,
    extend_letter_morphism,
    filtration_degree,
    quasi_shuffle,
)
from .grouphopf import (
    AbelianGroup,
    GroupElement,
    HElement,
    YDSpec,
    antipode,
    braided_spec,
    check_yd_module_algebra,
    check_yetter_drinfeld,
)
from .cotensor import (
    CotensorElement,
    SmashElement,
    chain_lift,
    check_chain_condition,
    coinvariant_coproduct,
    coinvariant_projection,
    flatten_coinvariant,
    from_smash,
    smash_product,
    star,
    to_smash,
)
from .rotabaxter import (
    RBInstance,
    check_double_product_isomorphism,
    check_rota_baxter,
    cotensor_rb_operator,
    diamond_product,
    head_shift,
    rb_double_product,
    smash_rb_operator,
    unit_prepend,
)
from .presets import build_clifford, build_uqg, check_clifford_relations, check_uqg_relations

__version__ = "0.1.0"
