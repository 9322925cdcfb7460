"""hopfqg: exact verification and construction of finite-dimensional Hopf
quasigroups, distributive laws between them, and their wreath products."""

from .fields import QQ, FieldError, FieldSpec, PrimeField, Rationals, field_from_tag
from .linmap import (
    CompositionError,
    LinMap,
    Obj,
    ShapeError,
    compose,
    identity,
    lin_apply,
    lin_compose,
    lin_tensor,
    perm_map,
    pipeline,
    regroup,
    tensor,
    zero_map,
)
from .category import (
    NotInvertibleError,
    braiding,
    convolution,
    convolution_inverse,
    convolution_unit,
    is_linear_iso,
    unit_map,
)
from .reports import AxiomEntry, AxiomReport, compare_maps
from .structures import (
    HopfQuasigroupData,
    QuasimoduleAction,
    cop,
    diagonal_action,
    op,
    product_obj,
    tensor_delta,
    tensor_eps,
    tensor_eta,
    tensor_mu,
    trivial_structure,
)
from .checks import (
    StructureFlags,
    check_antipode_properties,
    check_comonoid,
    check_flags,
    check_hopf_morphism,
    check_hopf_quasigroup,
    check_nonassoc_bimonoid,
    check_quasimodule,
    check_unital_magma,
)
from .loops import (
    FiniteLoop,
    IPLoopReport,
    NotAGroupError,
    NotALoopError,
    NotIPLoopError,
    associativity_witness,
    chein_double,
    check_ip_loop,
    cyclic_group,
    direct_product,
    loop_from_table,
    symmetric_s3,
)
from .distlaw import (
    DistLaw,
    check_a_comonoidal,
    check_comonoidal,
    check_distlaw_level,
    check_distributive_law,
    check_strong_form,
    flip_law,
    wreath_product,
)
from .constructions import (
    ActionBundle,
    CharTwoError,
    PreconditionError,
    SkewPairing,
    check_double_cross,
    check_r_smash_condition,
    check_skew_pairing,
    double_cross_psi,
    example_tau,
    gamma_two_actions,
    group_algebra,
    loop_algebra,
    psi_from_skew_pairing,
    skew_pairing_actions,
    smash_form,
    smash_psi,
    taft_h4,
    tau_inverse,
    twisted_hat_action,
    twisted_smash_gamma,
)

__version__ = "0.1.0"
