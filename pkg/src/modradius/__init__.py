"""Numerical radius of elements of finite-dimensional Hilbert C*-modules."""

__version__ = "0.1.0"

from .linalg import (  # noqa: E402
    Sym2x2,
    adjoint,
    hermitian_max_eigenvalue,
    operator_norm,
    random_ginibre,
    spectral_radius,
    sym2x2_norm,
)
from .module import (  # noqa: E402
    AlgebraElement,
    ModuleElement,
    ModuleShape,
    inner_product,
    module_action,
    module_norm,
    theta,
)
from .linking import (  # noqa: E402
    LinkingElement,
    assemble,
    check_product_identities,
    embed_l,
    embed_r,
    embed_T,
    embed_theta,
    linking_norm,
    omega_element,
)
from .radius import (  # noqa: E402
    RadiusConfig,
    RadiusResult,
    numerical_radius,
    numerical_radius_bruteforce,
    omega,
    omega_via_w,
    re_part,
)
from .harness import TrialConfig, SuiteReport, CheckOutcome, run_suite, run_plan  # noqa: E402
