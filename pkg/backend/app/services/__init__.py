from .semigroup_core import (
    idempotents,
    natural_order,
    restricted_product,
    restricted_semigroup,
    restricted_set_product,
    star_set,
    validate_table,
)
from .constructors import (
    adjoin_identity,
    chain_semilattice,
    cyclic_group,
    direct_product,
    group_from_table,
    symmetric_group,
    symmetric_inverse_monoid,
)
from .function_algebra import (
    algebra_identity,
    convolve,
    delta,
    norm_p,
    restricted_convolve,
    support,
    tilde_involution,
)
from .representations import (
    extend_to_Sr,
    is_restricted_representation,
    is_star_representation,
    lambda_r,
    lift_lambda,
    lift_rho,
    restrict_from_Sr,
    rho_r,
)
from .positive_definite import (
    godement_factorize,
    is_extendible_pd,
    is_extendible_rpd,
    is_pd,
    is_rpd,
    random_rpd,
    tau_extend,
    tau_restrict,
    unitization_extend,
)

__all__ = [
    "validate_table",
    "idempotents",
    "natural_order",
    "restricted_product",
    "restricted_semigroup",
    "restricted_set_product",
    "star_set",
    "adjoin_identity",
    "chain_semilattice",
    "cyclic_group",
    "direct_product",
    "group_from_table",
    "symmetric_group",
    "symmetric_inverse_monoid",
    "algebra_identity",
    "convolve",
    "delta",
    "norm_p",
    "restricted_convolve",
    "support",
    "tilde_involution",
    "lambda_r",
    "rho_r",
    "lift_lambda",
    "lift_rho",
    "is_star_representation",
    "is_restricted_representation",
    "extend_to_Sr",
    "restrict_from_Sr",
    "is_pd",
    "is_rpd",
    "is_extendible_rpd",
    "is_extendible_pd",
    "godement_factorize",
    "random_rpd",
    "tau_extend",
    "tau_restrict",
    "unitization_extend",
]
